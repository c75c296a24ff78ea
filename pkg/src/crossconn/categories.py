"""The principal-ideal categories of a Rees matrix semigroup.

Both are connected groupoids: objects are indexed by Lambda (left
ideals) or by I (right ideals), and every hom-set is a copy of the
ground group.  Composition is written diagrammatically (left to right)
everywhere; the right-ideal category reverses the group order because
its morphisms are left translations, and that reversal is a stored
convention flag rather than a second code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import IndexOutOfRange, NotComposable, SizeGuardExceeded
from .groups import FiniteGroup
from .rees import DEFAULT_SIZE_GUARD, ReesElement, ReesSemigroup


@dataclass(frozen=True)
class Morphism:
    """An arrow dom -> cod carrying a group element."""

    dom: int
    cod: int
    g: int


@dataclass(frozen=True)
class Cone:
    """A tuple of group elements indexed by the object set, plus a vertex object."""

    values: tuple[int, ...]
    vertex: int


class ArrowCategory:
    """Category with objects 0..n_objects-1 and hom(a, b) a copy of the group.

    With reverse_group_order=True the composite of g1 then g2 carries
    g2*g1 (the left-translation convention).
    """

    def __init__(self, group: FiniteGroup, n_objects: int, reverse_group_order: bool = False):
        if n_objects < 1:
            raise IndexOutOfRange(f"need at least one object, got {n_objects}")
        self.group = group
        self.n_objects = n_objects
        self.reverse_group_order = reverse_group_order

    def objects(self) -> range:
        return range(self.n_objects)

    def identity(self, obj: int) -> Morphism:
        return Morphism(obj, obj, self.group.identity)

    def is_identity(self, m: Morphism) -> bool:
        return m.dom == m.cod and m.g == self.group.identity

    def compose(self, m1: Morphism, m2: Morphism) -> Morphism:
        """m1 followed by m2; requires m1.cod == m2.dom."""
        if m1.cod != m2.dom:
            raise NotComposable(
                f"codomain {m1.cod} of the first morphism is not the domain {m2.dom} "
                "of the second"
            )
        if self.reverse_group_order:
            g = self.group.mul(m2.g, m1.g)
        else:
            g = self.group.mul(m1.g, m2.g)
        return Morphism(m1.dom, m2.cod, g)

    def invert(self, m: Morphism) -> Morphism:
        """Every morphism is an isomorphism; the inverse carries the group inverse."""
        return Morphism(m.cod, m.dom, self.group.inv(m.g))

    def normal_factorization(self, m: Morphism) -> tuple[Morphism, Morphism, Morphism]:
        """(retraction, isomorphism, inclusion).

        All inclusions here are identities and every morphism is its own
        epimorphic part, so the factorization is (id, m, id).
        """
        return (self.identity(m.dom), m, self.identity(m.cod))

    def hom(self, dom: int, cod: int) -> list[Morphism]:
        return [Morphism(dom, cod, g) for g in self.group.elements()]

    def morphisms(self) -> Iterator[Morphism]:
        for dom in self.objects():
            for cod in self.objects():
                for g in self.group.elements():
                    yield Morphism(dom, cod, g)

    def cone_component(self, cone: Cone, obj: int) -> Morphism:
        """The component of a cone at an object: obj -> vertex with the stored element."""
        if not 0 <= obj < self.n_objects:
            raise IndexOutOfRange(f"object {obj} out of range for {self.n_objects} objects")
        return Morphism(obj, cone.vertex, cone.values[obj])

    def compose_cones(self, gamma: Cone, sigma: Cone) -> Cone:
        """Cone product from first principles, componentwise.

        The new component at each object is gamma's component followed by
        sigma's component at gamma's vertex (which is its own epimorphic
        part); the result has sigma's vertex.
        """
        link = self.cone_component(sigma, gamma.vertex)
        values = tuple(
            self.compose(self.cone_component(gamma, a), link).g for a in self.objects()
        )
        return Cone(values, sigma.vertex)


def left_category(group: FiniteGroup, n_lambda: int) -> ArrowCategory:
    """The category of principal left ideals: right translations, plain group order."""
    return ArrowCategory(group, n_lambda, reverse_group_order=False)


def right_category(group: FiniteGroup, n_i: int) -> ArrowCategory:
    """The category of principal right ideals: left translations, reversed group order."""
    return ArrowCategory(group, n_i, reverse_group_order=True)


@dataclass
class RealizationReport:
    """Outcome of rebuilding a category from actual ideals and translation maps."""

    side: str
    hom_sizes: dict[tuple[int, int], int]
    matched: bool
    mismatches: list[str]


def realize_category(
    S: ReesSemigroup, side: str = "left", size_guard: int = DEFAULT_SIZE_GUARD
) -> RealizationReport:
    """Build the ideal category concretely and match it against the abstract one.

    Objects are the actual ideal sets; morphisms are the translation maps
    x -> x*s for s ranging over eSf (dually s*x over fSe).  Each induced
    map must equal the action of exactly one abstract morphism and vice
    versa, and every hom-set must have exactly |G| members.
    """
    if S.size > size_guard:
        raise SizeGuardExceeded(f"|S| = {S.size} exceeds the guard {size_guard}")
    G = S.group
    elements = list(S.elements())

    if side == "left":
        n_obj = S.n_lambda

        def carrier(lam: int) -> list[ReesElement]:
            return [x for x in elements if x.lam == lam]

        def base_idempotent(lam: int) -> ReesElement:
            return ReesElement(G.inv(S.matrix.entry(lam, 0)), 0, lam)

        def middle(e: ReesElement, f: ReesElement) -> set[ReesElement]:
            return {S.mul(S.mul(e, s), f) for s in elements}

        def translate(x: ReesElement, s: ReesElement) -> ReesElement:
            return S.mul(x, s)

        def abstract_image(x: ReesElement, g: int, cod: int) -> ReesElement:
            return ReesElement(G.mul(x.g, g), x.i, cod)

    elif side == "right":
        n_obj = S.n_i

        def carrier(i: int) -> list[ReesElement]:
            return [x for x in elements if x.i == i]

        def base_idempotent(i: int) -> ReesElement:
            return ReesElement(G.inv(S.matrix.entry(0, i)), i, 0)

        def middle(e: ReesElement, f: ReesElement) -> set[ReesElement]:
            return {S.mul(S.mul(f, s), e) for s in elements}

        def translate(x: ReesElement, s: ReesElement) -> ReesElement:
            return S.mul(s, x)

        def abstract_image(x: ReesElement, g: int, cod: int) -> ReesElement:
            return ReesElement(G.mul(g, x.g), cod, x.lam)

    else:
        raise IndexOutOfRange(f"side must be 'left' or 'right', got {side!r}")

    hom_sizes: dict[tuple[int, int], int] = {}
    mismatches: list[str] = []
    for dom, cod in product(range(n_obj), repeat=2):
        e, f = base_idempotent(dom), base_idempotent(cod)
        dom_carrier = carrier(dom)
        cod_set = set(carrier(cod))

        concrete: dict[tuple, list[ReesElement]] = {}
        for s in sorted(middle(e, f), key=S.index):
            images = {x: translate(x, s) for x in dom_carrier}
            if not set(images.values()) <= cod_set:
                mismatches.append(f"hom({dom},{cod}): translation by {s} leaves the ideal")
                continue
            key = tuple(sorted((S.index(x), S.index(y)) for x, y in images.items()))
            concrete.setdefault(key, []).append(s)

        abstract: dict[tuple, int] = {}
        for g in G.elements():
            images = {x: abstract_image(x, g, cod) for x in dom_carrier}
            key = tuple(sorted((S.index(x), S.index(y)) for x, y in images.items()))
            abstract[key] = g

        hom_sizes[(dom, cod)] = len(concrete)
        if len(concrete) != G.order:
            mismatches.append(
                f"hom({dom},{cod}) realizes {len(concrete)} maps, expected {G.order}"
            )
        if set(concrete) != set(abstract):
            mismatches.append(
                f"hom({dom},{cod}): translation maps and abstract morphisms disagree"
            )

    return RealizationReport(side, hom_sizes, not mismatches, mismatches)
