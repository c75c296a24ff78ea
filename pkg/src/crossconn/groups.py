"""Finite groups presented as validated Cayley tables.

Elements are dense indices 0..order-1.  Loaded tables may place the
identity anywhere; the built-in families put it at index 0.  Validation
is eager: closure, associativity, a two-sided identity and two-sided
inverses are all checked at construction time.
"""

from __future__ import annotations

from itertools import permutations
from pathlib import Path
from typing import Sequence

from .errors import (
    IndexOutOfRange,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    ParseError,
    SizeGuardExceeded,
)
from .oracle import associativity_witness

MAX_VALIDATED_ORDER = 256
MAX_SYMMETRIC_DEGREE = 5


class FiniteGroup:
    """A finite group: Cayley table, detected identity, inverse table."""

    def __init__(self, cayley: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        n = len(cayley)
        if n == 0:
            raise NotClosed("empty Cayley table")
        if n > MAX_VALIDATED_ORDER:
            raise SizeGuardExceeded(
                f"group order {n} exceeds the validation guard {MAX_VALIDATED_ORDER}"
            )
        rows = []
        for r, row in enumerate(cayley):
            row = tuple(int(x) for x in row)
            if len(row) != n:
                raise NotClosed(f"row {r} has {len(row)} entries, expected {n}")
            for c, v in enumerate(row):
                if not 0 <= v < n:
                    raise NotClosed(
                        f"entry {v} at row {r}, column {c} is not an element index below {n}"
                    )
            rows.append(row)
        self.order = n
        self.cayley = tuple(rows)

        if names is None:
            self.names = tuple(str(k) for k in range(n))
        else:
            self.names = tuple(str(x) for x in names)
            if len(self.names) != n:
                raise ParseError(f"{len(self.names)} element names for order {n}")

        bad = associativity_witness(self.cayley)
        if bad is not None:
            a, b, c = bad
            raise NotAssociative(
                f"({self.names[a]}*{self.names[b]})*{self.names[c]} != "
                f"{self.names[a]}*({self.names[b]}*{self.names[c]})"
            )

        identity = None
        for e in range(n):
            if all(self.cayley[e][x] == x and self.cayley[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise NoIdentity("table has no two-sided identity element")
        self.identity = identity

        inverse = []
        for a in range(n):
            b = next(
                (b for b in range(n) if self.cayley[a][b] == identity == self.cayley[b][a]),
                None,
            )
            if b is None:
                raise NoInverse(f"element {self.names[a]} has no two-sided inverse")
            inverse.append(b)
        self.inverse = tuple(inverse)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.order:
            raise IndexOutOfRange(f"element index {a} out of range for order {self.order}")

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        self._check(a)
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        self._check(a)
        return self.names[a]

    def index_of(self, label: str) -> int:
        try:
            return self.names.index(str(label))
        except ValueError:
            raise ParseError(f"unknown element label {label!r}") from None

    @property
    def is_abelian(self) -> bool:
        return all(
            self.cayley[a][b] == self.cayley[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def label_rows(self) -> list[list[str]]:
        """The Cayley table with entries written as element labels."""
        return [[self.names[v] for v in row] for row in self.cayley]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.cayley == other.cayley and self.names == other.names

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, identity={self.names[self.identity]!r})"


def load_cayley(table: Sequence[Sequence[str]], labels: Sequence[str] | None = None) -> FiniteGroup:
    """Build a group from an order x order table of element labels.

    labels fixes the element index order; when omitted it defaults to the
    sorted set of distinct entries (file loaders always pass it explicitly).
    """
    rows = [[str(x) for x in row] for row in table]
    if labels is None:
        labels = sorted({x for row in rows for x in row})
    labels = [str(x) for x in labels]
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate element labels")
    n = len(labels)
    if len(rows) != n:
        raise NotClosed(f"table has {len(rows)} rows, expected {n} (one per label)")
    index = {lab: k for k, lab in enumerate(labels)}
    int_rows = []
    for r, row in enumerate(rows):
        if len(row) != n:
            raise NotClosed(f"row {r} ({labels[r]}) has {len(row)} entries, expected {n}")
        out = []
        for c, v in enumerate(row):
            if v not in index:
                raise NotClosed(
                    f"entry {v!r} at row {r} ({labels[r]}), column {c} ({labels[c]}) "
                    "is not a declared label"
                )
            out.append(index[v])
        int_rows.append(out)
    return FiniteGroup(int_rows, names=labels)


def load_cayley_file(path) -> FiniteGroup:
    """Read a Cayley table file: first line = labels in index order, then one row per element.

    Cells are separated by tabs when the first line contains a tab,
    otherwise by commas.
    """
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError(f"{path}: empty Cayley table file")
    delim = "\t" if "\t" in lines[0] else ","
    rows = [[cell.strip() for cell in ln.split(delim)] for ln in lines]
    return load_cayley(rows[1:], labels=rows[0])


def builtin(family: str, n: int = 0) -> FiniteGroup:
    """Standard families: cyclic:n, symmetric:n (n <= 5), klein.

    cyclic:n is additive arithmetic mod n.  symmetric:n multiplies
    permutations of 0..n-1 in lexicographic order, composing a*b as
    "apply b, then a".  klein ignores n.
    """
    if family == "cyclic":
        if n < 1:
            raise ParseError(f"cyclic group order must be >= 1, got {n}")
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        return FiniteGroup(table, names=[str(k) for k in range(n)])
    if family == "symmetric":
        if n < 1:
            raise ParseError(f"symmetric group degree must be >= 1, got {n}")
        if n > MAX_SYMMETRIC_DEGREE:
            raise SizeGuardExceeded(
                f"symmetric group degree {n} exceeds the guard {MAX_SYMMETRIC_DEGREE}"
            )
        perms = sorted(permutations(range(n)))
        index = {p: k for k, p in enumerate(perms)}
        table = [
            [index[tuple(a[b[x]] for x in range(n))] for b in perms]
            for a in perms
        ]
        names = ["".join(str(v) for v in p) for p in perms]
        return FiniteGroup(table, names=names)
    if family == "klein":
        table = [[a ^ b for b in range(4)] for a in range(4)]
        return FiniteGroup(table, names=["e", "a", "b", "ab"])
    raise ParseError(f"unknown builtin family {family!r}; expected cyclic, symmetric or klein")
