"""Cross-connections determined by a sandwich matrix.

A sandwich matrix links the two ideal categories: each column spans a
left coset of the diagonal group inside G^Lambda (the object map of the
connection), each row a right coset inside G^I (its dual).  The linked
cone pairs form a semigroup isomorphic to the Rees matrix semigroup
itself, which is what the verification suite checks exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .categories import Cone, Morphism, left_category, right_category
from .checks import Check
from .cones import CosetHandle, coset_normalize, mul_L, mul_R, principal_pair
from .errors import (
    ElementNotInCell,
    NotComposable,
    NotInDomainCoset,
    ParseError,
    SizeGuardExceeded,
)
from .groups import FiniteGroup
from .oracle import MapCheck, from_table, verify_map
from .rees import DEFAULT_SIZE_GUARD, ReesElement, ReesSemigroup, SandwichMatrix, identity_matrix


@dataclass(frozen=True)
class CrossConnection:
    """A connection and its dual, both read off one representative matrix."""

    matrix: SandwichMatrix

    @property
    def group(self) -> FiniteGroup:
        return self.matrix.group

    @property
    def n_i(self) -> int:
        return self.matrix.cols

    @property
    def n_lambda(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class DualMorphism:
    """A morphism of a normal dual: 'sigma' between left cosets, 'tau' between right cosets."""

    kind: str
    h: int
    dom: CosetHandle
    cod: CosetHandle


def gamma_apply(conn: CrossConnection, x):
    """The connection functor on the right-ideal category.

    An object index i goes to the left coset of column i; a morphism
    kappa(g) goes to sigma_g between the corresponding cosets.
    """
    if isinstance(x, Morphism):
        return DualMorphism(
            "sigma", x.g, gamma_apply(conn, x.dom), gamma_apply(conn, x.cod)
        )
    return coset_normalize(conn.group, "left", conn.matrix.column(x))


def delta_apply(conn: CrossConnection, x):
    """The dual functor on the left-ideal category: lam -> right coset of row lam, rho(g) -> tau_g."""
    if isinstance(x, Morphism):
        return DualMorphism("tau", x.g, delta_apply(conn, x.dom), delta_apply(conn, x.cod))
    return coset_normalize(conn.group, "right", conn.matrix.row(x))


def sigma_apply(group: FiniteGroup, m: DualMorphism, values: Sequence[int]) -> tuple[int, ...]:
    """Apply a normal-dual morphism to a member of its domain coset.

    For sigma the input is dom_rep * g and the output cod_rep * (h * g);
    tau is the mirror image with the scalars on the left.
    """
    values = tuple(int(v) for v in values)
    base = m.dom.canonical
    if len(values) != len(base):
        raise NotInDomainCoset(f"tuple length {len(values)} does not match the coset")
    g = values[0]  # canonical representatives carry the identity in coordinate 0
    if m.kind == "sigma":
        if any(group.mul(b, g) != v for b, v in zip(base, values)):
            raise NotInDomainCoset(f"{values} is not in the domain coset of {base}")
        scale = group.mul(m.h, g)
        return tuple(group.mul(c, scale) for c in m.cod.canonical)
    if m.kind == "tau":
        if any(group.mul(g, b) != v for b, v in zip(base, values)):
            raise NotInDomainCoset(f"{values} is not in the domain coset of {base}")
        scale = group.mul(g, m.h)
        return tuple(group.mul(scale, c) for c in m.cod.canonical)
    raise ParseError(f"unknown dual morphism kind {m.kind!r}")


def compose_duals(group: FiniteGroup, m1: DualMorphism, m2: DualMorphism) -> DualMorphism:
    """m1 followed by m2.  Sigmas compose with reversed group order, taus in order."""
    if m1.kind != m2.kind:
        raise NotComposable(f"cannot compose {m1.kind} with {m2.kind}")
    if m1.cod != m2.dom:
        raise NotComposable("codomain coset of the first is not the domain of the second")
    if m1.kind == "sigma":
        h = group.mul(m2.h, m1.h)
    else:
        h = group.mul(m1.h, m2.h)
    return DualMorphism(m1.kind, h, m1.dom, m2.cod)


def _right_factor(group: FiniteGroup, base: Sequence[int], values: Sequence[int]) -> int | None:
    """g with values == base * g pointwise, or None."""
    if len(base) != len(values):
        return None
    g = group.mul(group.inv(base[0]), values[0])
    if all(group.mul(b, g) == v for b, v in zip(base, values)):
        return g
    return None


def _left_factor(group: FiniteGroup, base: Sequence[int], values: Sequence[int]) -> int | None:
    if len(base) != len(values):
        return None
    g = group.mul(values[0], group.inv(base[0]))
    if all(group.mul(g, b) == v for b, v in zip(base, values)):
        return g
    return None


def gamma_cell(conn: CrossConnection, lam: int, i: int) -> list[Cone]:
    """The cell of the connection bifunctor: all right scalings of column i, vertex lam."""
    G = conn.group
    col = conn.matrix.column(i)
    return [Cone(tuple(G.mul(p, g) for p in col), lam) for g in G.elements()]


def delta_cell(conn: CrossConnection, lam: int, i: int) -> list[Cone]:
    G = conn.group
    row = conn.matrix.row(lam)
    return [Cone(tuple(G.mul(g, p) for p in row), i) for g in G.elements()]


def bifunctor_gamma(
    conn: CrossConnection, rho: Morphism, kappa: Morphism, cone: Cone
) -> Cone:
    """Cell map of the bifunctor: (col_{i1} * g, lam1) -> (col_{i2} * (g1*g*g2), lam2)

    for rho = g2 : lam1 -> lam2 and kappa = g1 : i1 -> i2.
    """
    G = conn.group
    if cone.vertex != rho.dom:
        raise ElementNotInCell(
            f"cone vertex {cone.vertex} is not the domain {rho.dom} of the first morphism"
        )
    g = _right_factor(G, conn.matrix.column(kappa.dom), cone.values)
    if g is None:
        raise ElementNotInCell(f"cone tuple is not a right scaling of column {kappa.dom}")
    scale = G.mul(G.mul(kappa.g, g), rho.g)
    return Cone(tuple(G.mul(p, scale) for p in conn.matrix.column(kappa.cod)), rho.cod)


def bifunctor_delta(
    conn: CrossConnection, rho: Morphism, kappa: Morphism, cone: Cone
) -> Cone:
    """Dual cell map: (g * row_{lam1}, i1) -> ((g1*g*g2) * row_{lam2}, i2)."""
    G = conn.group
    if cone.vertex != kappa.dom:
        raise ElementNotInCell(
            f"cone vertex {cone.vertex} is not the domain {kappa.dom} of the second morphism"
        )
    g = _left_factor(G, conn.matrix.row(rho.dom), cone.values)
    if g is None:
        raise ElementNotInCell(f"cone tuple is not a left scaling of row {rho.dom}")
    scale = G.mul(G.mul(kappa.g, g), rho.g)
    return Cone(tuple(G.mul(scale, p) for p in conn.matrix.row(rho.cod)), kappa.cod)


def u_gamma(conn: CrossConnection, bound: int = DEFAULT_SIZE_GUARD) -> list[Cone]:
    """All cones whose tuple is a scaled matrix column, deduplicated in (g, i, lam) order."""
    G = conn.group
    total = G.order * conn.n_i * conn.n_lambda
    if total > bound:
        raise SizeGuardExceeded(f"would enumerate {total} cones, above the bound {bound}")
    out: list[Cone] = []
    seen: set[Cone] = set()
    for g in G.elements():
        for i in range(conn.n_i):
            values = tuple(G.mul(p, g) for p in conn.matrix.column(i))
            for lam in range(conn.n_lambda):
                c = Cone(values, lam)
                if c not in seen:
                    seen.add(c)
                    out.append(c)
    return out


def u_delta(conn: CrossConnection, bound: int = DEFAULT_SIZE_GUARD) -> list[Cone]:
    """All cones whose tuple is a scaled matrix row, deduplicated in (g, i, lam) order."""
    G = conn.group
    total = G.order * conn.n_i * conn.n_lambda
    if total > bound:
        raise SizeGuardExceeded(f"would enumerate {total} cones, above the bound {bound}")
    out: list[Cone] = []
    seen: set[Cone] = set()
    for g in G.elements():
        for lam in range(conn.n_lambda):
            values = tuple(G.mul(g, p) for p in conn.matrix.row(lam))
            for i in range(conn.n_i):
                c = Cone(values, i)
                if c not in seen:
                    seen.add(c)
                    out.append(c)
    return out


def chi(conn: CrossConnection, gamma: Cone, i: int) -> Cone:
    """The duality on the cell (gamma.vertex, i): (col_i * g, lam) -> (g * row_lam, i)."""
    G = conn.group
    g = _right_factor(G, conn.matrix.column(i), gamma.values)
    if g is None:
        raise ElementNotInCell(f"cone tuple is not a right scaling of column {i}")
    return Cone(tuple(G.mul(g, p) for p in conn.matrix.row(gamma.vertex)), i)


def chi_inv(conn: CrossConnection, delta: Cone, lam: int) -> Cone:
    """Inverse duality on the cell (lam, delta.vertex): (g * row_lam, i) -> (col_i * g, lam)."""
    G = conn.group
    g = _left_factor(G, conn.matrix.row(lam), delta.values)
    if g is None:
        raise ElementNotInCell(f"cone tuple is not a left scaling of row {lam}")
    return Cone(tuple(G.mul(p, g) for p in conn.matrix.column(delta.vertex)), lam)


def is_linked(conn: CrossConnection, gamma: Cone, delta: Cone) -> bool:
    """Linkage test: both cones factor through the cell (gamma.vertex, delta.vertex)
    and the two extracted scalars coincide (the first-coordinate criterion)."""
    g1 = _right_factor(conn.group, conn.matrix.column(delta.vertex), gamma.values)
    if g1 is None:
        return False
    g2 = _left_factor(conn.group, conn.matrix.row(gamma.vertex), delta.values)
    return g2 is not None and g1 == g2


@dataclass(frozen=True)
class LinkedPair:
    gamma: Cone
    delta: Cone


def linked_pairs(conn: CrossConnection, size_guard: int = DEFAULT_SIZE_GUARD) -> list[LinkedPair]:
    """The linked cone pairs ((col_i * g, lam), (g * row_lam, i)) in (g, i, lam) order."""
    G = conn.group
    total = G.order * conn.n_i * conn.n_lambda
    if total > size_guard:
        raise SizeGuardExceeded(f"would enumerate {total} pairs, above the guard {size_guard}")
    out = []
    for g in G.elements():
        for i in range(conn.n_i):
            gamma_values = tuple(G.mul(p, g) for p in conn.matrix.column(i))
            for lam in range(conn.n_lambda):
                delta_values = tuple(G.mul(g, p) for p in conn.matrix.row(lam))
                out.append(LinkedPair(Cone(gamma_values, lam), Cone(delta_values, i)))
    return out


def s_tilde_mul(conn: CrossConnection, p1: LinkedPair, p2: LinkedPair) -> LinkedPair:
    """(gamma, delta) o (gamma', delta') = (gamma * gamma', delta' * delta)."""
    G = conn.group
    return LinkedPair(mul_L(G, p1.gamma, p2.gamma), mul_R(G, p2.delta, p1.delta))


def phi(S: ReesSemigroup, a: ReesElement) -> LinkedPair:
    """The representation of an element as its pair of principal cones."""
    rho, lam = principal_pair(S, a)
    return LinkedPair(rho, lam)


@dataclass(frozen=True)
class PhiReport:
    """Outcome of checking that the pair representation is an isomorphism."""

    closed: bool
    closure_witness: str | None
    map_check: MapCheck | None

    @property
    def is_isomorphism(self) -> bool:
        return self.closed and self.map_check is not None and self.map_check.is_isomorphism


def verify_phi(S: ReesSemigroup) -> PhiReport:
    """Check closure of the linked-pair product and that phi is a bijective homomorphism.

    The map check goes through the independent table oracle rather than
    any closed form.
    """
    conn = CrossConnection(S.matrix)
    pairs = linked_pairs(conn, size_guard=S.size)
    index = {p: k for k, p in enumerate(pairs)}
    table = []
    for p in pairs:
        row = []
        for q in pairs:
            prod = s_tilde_mul(conn, p, q)
            k = index.get(prod)
            if k is None:
                return PhiReport(False, f"product of {p} and {q} is not a linked pair", None)
            row.append(k)
        table.append(row)
    T1 = from_table(S.index_table())
    T2 = from_table(table)
    f = [index[phi(S, a)] for a in S.elements()]
    return PhiReport(True, None, verify_map(f, T1, T2))


def matrix_of(group: FiniteGroup, handles: Sequence[CosetHandle]) -> SandwichMatrix:
    """The matrix read off an object assignment: column i is the canonical
    representative of the i-th coset handle."""
    if not handles:
        raise ParseError("need at least one coset handle")
    if any(h.side != "left" for h in handles):
        raise ParseError("object assignments use left coset handles")
    depth = len(handles[0].canonical)
    if any(len(h.canonical) != depth for h in handles):
        raise ParseError("coset handles have inconsistent lengths")
    entries = [[h.canonical[lam] for h in handles] for lam in range(depth)]
    return SandwichMatrix(group, entries)


def rbg(group: FiniteGroup, n_i: int, n_lambda: int) -> CrossConnection:
    """The rectangular band of groups: the connection of the constant-identity matrix."""
    return CrossConnection(identity_matrix(group, n_lambda, n_i))


def verify_crossconnection(conn: CrossConnection) -> list[Check]:
    """Functor, faithfulness, ideal-restriction and coverage checks for the connection.

    Failures land in the returned checks rather than raising.
    """
    G = conn.group
    n_i, n_l = conn.n_i, conn.n_lambda
    checks: list[Check] = []
    rcat = right_category(G, n_i)
    lcat = left_category(G, n_l)

    # Covariant functor laws, identities included, for the connection and its dual.
    for name, cat, apply_ in (("gamma", rcat, gamma_apply), ("delta", lcat, delta_apply)):
        witness = None
        for obj in cat.objects():
            got = apply_(conn, cat.identity(obj))
            if got.h != G.identity or got.dom != got.cod:
                witness = f"identity at object {obj} is not sent to an identity"
                break
        if witness is None:
            for o1, o2, o3 in product(cat.objects(), repeat=3):
                for g1, g2 in product(G.elements(), repeat=2):
                    m1, m2 = Morphism(o1, o2, g1), Morphism(o2, o3, g2)
                    lhs = apply_(conn, cat.compose(m1, m2))
                    rhs = compose_duals(G, apply_(conn, m1), apply_(conn, m2))
                    if lhs != rhs:
                        witness = f"composite of {m1} and {m2} is not preserved"
                        break
                if witness:
                    break
        checks.append(Check(f"crossconn.functor_{name}", witness is None, witness))

    # Fully faithful: on each hom-set the induced coset maps are pairwise
    # distinct and there are exactly |G| of them.
    witness = None
    for i1, i2 in product(range(n_i), repeat=2):
        dom = gamma_apply(conn, i1)
        members = sorted(
            tuple(G.mul(c, g) for c in dom.canonical) for g in G.elements()
        )
        actions = set()
        for g in G.elements():
            sg = gamma_apply(conn, Morphism(i1, i2, g))
            actions.add(tuple(sigma_apply(G, sg, x) for x in members))
        if len(actions) != G.order:
            witness = f"hom({i1},{i2}) induces {len(actions)} maps, expected {G.order}"
            break
    checks.append(Check("crossconn.fully_faithful", witness is None, witness))

    # With no nontrivial inclusions every principal ideal is a single
    # object, so the restriction being an isomorphism reduces to the
    # endomorphism hom-sets matching up bijectively.
    witness = None
    for i in range(n_i):
        images = {gamma_apply(conn, Morphism(i, i, g)) for g in G.elements()}
        if len(images) != G.order:
            witness = f"restriction to object {i} is not a bijection on endomorphisms"
            break
    checks.append(Check("crossconn.ideal_restriction", witness is None, witness))

    # Coverage: every left-ideal object carries an isomorphism component
    # of some (here: every) image cone, scanned rather than assumed.
    witness = None
    covered: set[int] = set()
    for i in range(n_i):
        col = conn.matrix.column(i)
        for lam in range(n_l):
            components_iso = all(
                G.mul(v, G.inv(v)) == G.identity and G.mul(G.inv(v), v) == G.identity
                for v in col
            )
            if components_iso:
                covered.add(lam)
    if covered != set(range(n_l)):
        witness = f"objects {sorted(set(range(n_l)) - covered)} are not covered"
    checks.append(Check("crossconn.coverage", witness is None, witness))

    return checks
