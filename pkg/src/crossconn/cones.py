"""Normal-cone semigroups: the semidirect product of G^Lambda with the
right-zero semigroup Lambda, and its opposite twin over G^I and I.

A cone is a tuple over the object set plus a vertex.  The semigroup
product broadcasts one coordinate of the second factor across the first
factor's tuple: on the right for the left-ideal side, on the left for
the right-ideal side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .categories import Cone
from .errors import IndexOutOfRange, ParseError, SizeGuardExceeded
from .groups import FiniteGroup
from .rees import ReesElement, ReesSemigroup, SandwichMatrix

DEFAULT_CONE_BOUND = 100_000


def act(group: FiniteGroup, k: int, values: Sequence[int]) -> tuple[int, ...]:
    """Left action of object k on a tuple: broadcast the k-th coordinate."""
    if not 0 <= k < len(values):
        raise IndexOutOfRange(f"object {k} out of range for a tuple of length {len(values)}")
    return (values[k],) * len(values)


def mul_L(group: FiniteGroup, c1: Cone, c2: Cone) -> Cone:
    """Semidirect product on the left-ideal side: scale c1's tuple on the right
    by c2's value at c1's vertex."""
    g_k = c2.values[c1.vertex]
    return Cone(tuple(group.mul(v, g_k) for v in c1.values), c2.vertex)


def mul_R(group: FiniteGroup, c1: Cone, c2: Cone) -> Cone:
    """Opposite-side product: the broadcast value multiplies on the left."""
    g_k = c2.values[c1.vertex]
    return Cone(tuple(group.mul(g_k, v) for v in c1.values), c2.vertex)


def principal_pair(S: ReesSemigroup, a: ReesElement) -> tuple[Cone, Cone]:
    """The cone pair induced by translations by a.

    The left cone is column a.i of the sandwich matrix scaled on the
    right by a.g, with vertex a.lam; the right cone is row a.lam scaled
    on the left by a.g, with vertex a.i.
    """
    S._validate(a)
    G = S.group
    rho = Cone(tuple(G.mul(p, a.g) for p in S.matrix.column(a.i)), a.lam)
    lam = Cone(tuple(G.mul(a.g, p) for p in S.matrix.row(a.lam)), a.i)
    return rho, lam


@dataclass(frozen=True)
class InjectivityResult:
    holds: bool
    witness: tuple[int, int, int] | None  # (g, i1, i2) with columns i1 = i2 * g


def injectivity_criterion(P: SandwichMatrix) -> InjectivityResult:
    """Whether distinct elements always induce distinct principal left cones.

    Fails exactly when two different columns agree up to a constant right
    factor: p[lam][i1] == p[lam][i2] * g for every lam.
    """
    G = P.group
    for g in G.elements():
        for i1 in range(P.cols):
            for i2 in range(P.cols):
                if i1 == i2:
                    continue
                if all(
                    P.entry(lam, i1) == G.mul(P.entry(lam, i2), g) for lam in range(P.rows)
                ):
                    return InjectivityResult(False, (g, i1, i2))
    return InjectivityResult(True, None)


@dataclass(frozen=True)
class CosetHandle:
    """Canonical representative of a coset of the diagonal copy of G.

    side 'left' stands for tuple*G, side 'right' for G*tuple; in both
    cases the representative has the identity in coordinate 0, so two
    cosets are equal exactly when their handles are equal.
    """

    side: str
    canonical: tuple[int, ...]


def coset_normalize(group: FiniteGroup, side: str, values: Sequence[int]) -> CosetHandle:
    values = tuple(int(v) for v in values)
    if not values:
        raise IndexOutOfRange("cannot normalize an empty tuple")
    a = group.inv(values[0])
    if side == "left":
        canonical = tuple(group.mul(v, a) for v in values)
    elif side == "right":
        canonical = tuple(group.mul(a, v) for v in values)
    else:
        raise ParseError(f"side must be 'left' or 'right', got {side!r}")
    return CosetHandle(side, canonical)


def green_cones(group: FiniteGroup, kind: str, c1: Cone, c2: Cone) -> bool:
    """Green's L/R for cones on the left-ideal side.

    L is vertex equality; R is equality of the left cosets tuple*G, which
    never depends on the vertices.
    """
    if kind == "L":
        return c1.vertex == c2.vertex
    if kind == "R":
        left = coset_normalize(group, "left", c1.values)
        right = coset_normalize(group, "left", c2.values)
        return left == right
    raise ParseError(f"unknown Green relation {kind!r}; expected L or R")


def is_idempotent_cone(group: FiniteGroup, c: Cone) -> bool:
    """Closed form: the coordinate at the vertex is the identity."""
    return c.values[c.vertex] == group.identity


def _enumerate_cones(group: FiniteGroup, n_objects: int, bound: int) -> list[Cone]:
    if n_objects < 1:
        raise IndexOutOfRange(f"need at least one object, got {n_objects}")
    total = (group.order ** n_objects) * n_objects
    if total > bound:
        raise SizeGuardExceeded(f"cone semigroup has {total} elements, above the bound {bound}")
    return [
        Cone(values, vertex)
        for values in product(group.elements(), repeat=n_objects)
        for vertex in range(n_objects)
    ]


def enumerate_TL(group: FiniteGroup, n_lambda: int, bound: int = DEFAULT_CONE_BOUND) -> list[Cone]:
    """All of G^Lambda x Lambda in lexicographic (tuple, vertex) order."""
    return _enumerate_cones(group, n_lambda, bound)


def enumerate_TR(group: FiniteGroup, n_i: int, bound: int = DEFAULT_CONE_BOUND) -> list[Cone]:
    """All of G^I x I in lexicographic (tuple, vertex) order."""
    return _enumerate_cones(group, n_i, bound)


def cone_table(group: FiniteGroup, cones: Iterable[Cone], side: str = "L") -> list[list[int]]:
    """Multiplication table of a closed cone set, indexed by enumeration order."""
    cones = list(cones)
    index = {c: k for k, c in enumerate(cones)}
    mul = mul_L if side == "L" else mul_R
    return [[index[mul(group, c1, c2)] for c2 in cones] for c1 in cones]
