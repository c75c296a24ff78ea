"""Rees matrix semigroups G x I x Lambda over a finite group.

The product is (a,i,lam)(b,j,mu) = (a * p[lam][j] * b, i, mu) for a
Lambda x I sandwich matrix p with entries in the group.  Elements are
enumerated in (g, i, lam) lexicographic order, which fixes every table
layout and report ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .errors import MixedSemigroups, ParseError, SizeGuardExceeded
from .groups import FiniteGroup
from .oracle import GenericSemigroup, canonical_partition

DEFAULT_SIZE_GUARD = 512


@dataclass(frozen=True)
class ReesElement:
    g: int
    i: int
    lam: int


class SandwichMatrix:
    """A Lambda x I matrix of group element indices; entry(lam, i) mediates the product."""

    def __init__(self, group: FiniteGroup, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ParseError("sandwich matrix needs at least one row and one column")
        width = len(rows[0])
        for r, row in enumerate(rows):
            if len(row) != width:
                raise ParseError(f"row {r} has {len(row)} entries, expected {width}")
            for c, v in enumerate(row):
                if not 0 <= v < group.order:
                    raise ParseError(
                        f"entry at row {r}, column {c} is {v}, not an element of a group "
                        f"of order {group.order}"
                    )
        self.group = group
        self.entries = rows

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def entry(self, lam: int, i: int) -> int:
        return self.entries[lam][i]

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.entries)

    def row(self, lam: int) -> tuple[int, ...]:
        return self.entries[lam]

    def label_rows(self) -> list[list[str]]:
        return [[self.group.names[v] for v in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SandwichMatrix):
            return NotImplemented
        return self.group == other.group and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SandwichMatrix({self.rows}x{self.cols} over order {self.group.order})"


def identity_matrix(group: FiniteGroup, n_lambda: int, n_i: int) -> SandwichMatrix:
    """The constant-identity sandwich matrix (the rectangular band of groups case)."""
    return SandwichMatrix(group, [[group.identity] * n_i for _ in range(n_lambda)])


def load_matrix_file(path, group: FiniteGroup) -> SandwichMatrix:
    """Read a sandwich matrix CSV: one line per row, entries are group element labels."""
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError(f"{path}: empty sandwich matrix file")
    entries = []
    for r, ln in enumerate(lines):
        row = []
        for c, cell in enumerate(x.strip() for x in ln.split(",")):
            try:
                row.append(group.index_of(cell))
            except ParseError:
                raise ParseError(
                    f"{path}: row {r}, column {c}: unknown element label {cell!r}"
                ) from None
        entries.append(row)
    return SandwichMatrix(group, entries)


class ReesSemigroup:
    """The completely simple semigroup determined by a sandwich matrix."""

    def __init__(self, matrix: SandwichMatrix, size_guard: int = DEFAULT_SIZE_GUARD):
        self.matrix = matrix
        self.size = matrix.group.order * matrix.cols * matrix.rows
        if self.size > size_guard:
            raise SizeGuardExceeded(
                f"semigroup has {self.size} elements, above the guard {size_guard}"
            )

    @property
    def group(self) -> FiniteGroup:
        return self.matrix.group

    @property
    def n_i(self) -> int:
        return self.matrix.cols

    @property
    def n_lambda(self) -> int:
        return self.matrix.rows

    def elements(self) -> Iterator[ReesElement]:
        for g in range(self.group.order):
            for i in range(self.n_i):
                for lam in range(self.n_lambda):
                    yield ReesElement(g, i, lam)

    def index(self, x: ReesElement) -> int:
        self._validate(x)
        return (x.g * self.n_i + x.i) * self.n_lambda + x.lam

    def element(self, k: int) -> ReesElement:
        if not 0 <= k < self.size:
            raise MixedSemigroups(f"index {k} out of range for size {self.size}")
        g, rem = divmod(k, self.n_i * self.n_lambda)
        i, lam = divmod(rem, self.n_lambda)
        return ReesElement(g, i, lam)

    def _validate(self, x: ReesElement) -> None:
        if not (
            0 <= x.g < self.group.order and 0 <= x.i < self.n_i and 0 <= x.lam < self.n_lambda
        ):
            raise MixedSemigroups(
                f"{x} does not belong to this semigroup "
                f"(|G|={self.group.order}, |I|={self.n_i}, |Lambda|={self.n_lambda})"
            )

    def mul(self, x: ReesElement, y: ReesElement) -> ReesElement:
        self._validate(x)
        self._validate(y)
        p = self.matrix.entry(x.lam, y.i)
        g = self.group.mul(self.group.mul(x.g, p), y.g)
        return ReesElement(g, x.i, y.lam)

    def idempotents(self) -> list[ReesElement]:
        """Exactly the elements (p[lam][i]^-1, i, lam), one per matrix cell."""
        out = [
            ReesElement(self.group.inv(self.matrix.entry(lam, i)), i, lam)
            for i in range(self.n_i)
            for lam in range(self.n_lambda)
        ]
        return sorted(out, key=self.index)

    def green(self, kind: str) -> tuple[tuple[int, ...], ...]:
        """Green partition of element indices: L is keyed by lam, R by i, H by (i, lam).

        D is the single full class; the table oracle recomputes it
        independently from the ideals.
        """
        if kind == "D":
            return (tuple(range(self.size)),)
        if kind == "L":
            key = lambda x: x.lam
        elif kind == "R":
            key = lambda x: x.i
        elif kind == "H":
            key = lambda x: (x.i, x.lam)
        else:
            raise ParseError(f"unknown Green relation {kind!r}; expected L, R, H or D")
        classes: dict = {}
        for x in self.elements():
            classes.setdefault(key(x), []).append(self.index(x))
        return canonical_partition(classes.values())

    def principal_left_ideal(self, x: ReesElement) -> frozenset[ReesElement]:
        """S^1 x = everything with x's lam coordinate."""
        self._validate(x)
        return frozenset(
            ReesElement(h, j, x.lam)
            for h in range(self.group.order)
            for j in range(self.n_i)
        )

    def index_table(self) -> list[list[int]]:
        """The size x size multiplication table on element indices (vectorized)."""
        n_i, n_l = self.n_i, self.n_lambda
        idx = np.arange(self.size)
        g, rem = np.divmod(idx, n_i * n_l)
        i, lam = np.divmod(rem, n_l)
        P = np.asarray(self.matrix.entries, dtype=np.intp)
        M = np.asarray(self.group.cayley, dtype=np.intp)
        p = P[lam[:, None], i[None, :]]
        prod_g = M[M[g[:, None], p], g[None, :]]
        table = (prod_g * n_i + i[:, None]) * n_l + lam[None, :]
        return table.tolist()

    def element_label(self, x: ReesElement) -> str:
        return f"({self.group.names[x.g]},{x.i},{x.lam})"

    def to_generic(self) -> GenericSemigroup:
        """Export to the table oracle (this re-validates associativity)."""
        labels = [self.element_label(x) for x in self.elements()]
        return GenericSemigroup(self.index_table(), labels=labels)

    def __repr__(self) -> str:
        return (
            f"ReesSemigroup(|G|={self.group.order}, |I|={self.n_i}, "
            f"|Lambda|={self.n_lambda})"
        )
