"""Skew Young diagrams and tableaux: partitions, conjugation, corners, gluings,
checkerboard fillings, ribbons and the named shape families.

Cells are 1-based (row, column) pairs, rows growing downward.  Containment of
the inner partition is strict (mu_j < lambda_j for every part of mu), so every
row of a skew diagram is nonempty.  All objects are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering


class SmzvError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(SmzvError, ValueError):
    """A family or formula parameter lies outside its allowed range."""


class NotCheckerboardable(SmzvError, ValueError):
    """The diagram has corners on diagonals of both parities, so no
    diagonal-alternating filling can put the large entry on every corner."""


@total_ordering
class Partition:
    """A weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
        for x, y in zip(parts, parts[1:]):
            if x < y:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, j: int) -> int:
        """1-based part access, zero beyond the last part."""
        return self.parts[j - 1] if 1 <= j <= len(self.parts) else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self == Partition(other)
        return NotImplemented

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def staircase(n: int) -> Partition:
    """The staircase (n, n-1, ..., 2, 1); empty for n <= 0."""
    return Partition(range(n, 0, -1)) if n > 0 else Partition()


class SkewShape:
    """The diagram of lambda/mu with strict containment mu_j < lambda_j.

    A dedicated empty shape (``SkewShape.empty()``) represents the trivial
    diagram whose evaluation is 1; the ordinary constructor rejects it.
    """

    __slots__ = ("outer", "inner", "cells", "_corners")

    def __init__(self, outer, inner=()):
        outer = outer if isinstance(outer, Partition) else Partition(outer)
        inner = inner if isinstance(inner, Partition) else Partition(inner)
        if not outer.parts:
            raise ValueError("outer partition must be nonempty (use SkewShape.empty())")
        if len(inner) > len(outer):
            raise ValueError(f"inner partition is longer than outer: {inner} vs {outer}")
        for j in range(1, len(inner) + 1):
            if inner.part(j) >= outer.part(j):
                raise ValueError(
                    f"containment must be strict: inner part {inner.part(j)} >= outer part "
                    f"{outer.part(j)} at row {j}")
        cells = frozenset(
            (i, j)
            for i in range(1, len(outer) + 1)
            for j in range(inner.part(i) + 1, outer.part(i) + 1))
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "_corners", None)

    def __setattr__(self, *a):
        raise AttributeError("SkewShape is immutable")

    _EMPTY = None

    @classmethod
    def empty(cls) -> "SkewShape":
        if cls._EMPTY is None:
            obj = object.__new__(cls)
            object.__setattr__(obj, "outer", Partition())
            object.__setattr__(obj, "inner", Partition())
            object.__setattr__(obj, "cells", frozenset())
            object.__setattr__(obj, "_corners", frozenset())
            SkewShape._EMPTY = obj
        return cls._EMPTY

    @property
    def is_empty(self) -> bool:
        return not self.cells

    @property
    def height(self) -> int:
        return len(self.outer)

    @property
    def width(self) -> int:
        return self.outer.part(1)

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    @property
    def top_right(self) -> tuple[int, int]:
        return (1, self.outer.part(1))

    @property
    def bottom_left(self) -> tuple[int, int]:
        return (self.height, 1)

    def row_span(self, i: int) -> tuple[int, int]:
        """Columns (first, last) occupied by row i."""
        return (self.inner.part(i) + 1, self.outer.part(i))

    def col_span(self, j: int) -> tuple[int, int]:
        """Rows (first, last) occupied by column j."""
        lam_c = self.outer.conjugate()
        mu_c = self.inner.conjugate()
        return (mu_c.part(j) + 1, lam_c.part(j))

    def columns(self) -> list[tuple[int, int, int]]:
        """All (column, top row, bottom row) triples, left to right."""
        lam_c = self.outer.conjugate()
        mu_c = self.inner.conjugate()
        return [(j, mu_c.part(j) + 1, lam_c.part(j)) for j in range(1, self.width + 1)]

    def corners(self) -> frozenset[tuple[int, int]]:
        """Cells with no neighbour to the right or below."""
        if self._corners is None:
            cs = frozenset(
                (i, j) for (i, j) in self.cells
                if (i, j + 1) not in self.cells and (i + 1, j) not in self.cells)
            object.__setattr__(self, "_corners", cs)
        return self._corners

    def conjugate(self) -> "SkewShape":
        if self.is_empty:
            return self
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    def diagonals(self) -> dict[int, list[tuple[int, int]]]:
        """Cells grouped by diagonal j - i."""
        out: dict[int, list[tuple[int, int]]] = {}
        for (i, j) in sorted(self.cells):
            out.setdefault(j - i, []).append((i, j))
        return out

    def is_connected(self) -> bool:
        if self.is_empty:
            return True
        seen = set()
        stack = [next(iter(self.cells))]
        while stack:
            i, j = stack.pop()
            if (i, j) in seen:
                continue
            seen.add((i, j))
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in self.cells and nb not in seen:
                    stack.append(nb)
        return len(seen) == len(self.cells)

    def has_2x2_block(self) -> bool:
        return any((i, j + 1) in self.cells and (i + 1, j) in self.cells
                   and (i + 1, j + 1) in self.cells for (i, j) in self.cells)

    def __eq__(self, other):
        return isinstance(other, SkewShape) and self.outer == other.outer and self.inner == other.inner

    def __hash__(self):
        return hash((self.outer, self.inner))

    def __repr__(self):
        if self.is_empty:
            return "SkewShape.empty()"
        if self.inner.parts:
            return f"SkewShape({self.outer.parts}/{self.inner.parts})"
        return f"SkewShape({self.outer.parts})"

    @classmethod
    def from_cells(cls, cells) -> "SkewShape":
        """Rebuild a skew shape from a set of cells, translating it so the
        occupied rows and columns start at 1."""
        cells = set(cells)
        if not cells:
            return cls.empty()
        roff = min(i for i, _ in cells) - 1
        coff = min(j for _, j in cells) - 1
        cells = {(i - roff, j - coff) for (i, j) in cells}
        h = max(i for i, _ in cells)
        outer, inner = [], []
        for i in range(1, h + 1):
            cols = sorted(j for (r, j) in cells if r == i)
            if not cols:
                raise ValueError(f"row {i} of the cell set is empty; not a skew shape")
            if cols != list(range(cols[0], cols[-1] + 1)):
                raise ValueError(f"row {i} of the cell set is not contiguous")
            outer.append(cols[-1])
            inner.append(cols[0] - 1)
        shape = cls(Partition(outer), Partition(inner))
        if shape.cells != frozenset(cells):
            raise ValueError("cell set is not the diagram of a skew shape")
        return shape


def is_ribbon(shape: SkewShape) -> bool:
    """True iff the shape is edge-connected and contains no 2x2 block."""
    if shape.is_empty:
        return False
    return shape.is_connected() and not shape.has_2x2_block()


def ribbon_walk(shape: SkewShape) -> tuple[list[tuple[int, int]], str]:
    """Cells of a ribbon ordered by diagonal from the bottom-left end to the
    top-right end, together with the word of moves ('R' right, 'U' up)."""
    if not is_ribbon(shape):
        raise ValueError(f"{shape!r} is not a ribbon")
    diag = shape.diagonals()
    ds = sorted(diag)
    assert ds == list(range(ds[0], ds[-1] + 1))
    cells = []
    for d in ds:
        assert len(diag[d]) == 1
        cells.append(diag[d][0])
    moves = []
    for (i1, j1), (i2, j2) in zip(cells, cells[1:]):
        if (i2, j2) == (i1, j1 + 1):
            moves.append("R")
        elif (i2, j2) == (i1 - 1, j1):
            moves.append("U")
        else:  # cannot happen for a connected one-cell-per-diagonal shape
            raise AssertionError("non-adjacent consecutive ribbon cells")
    return cells, "".join(moves)


class Tableau:
    """A skew shape together with a positive-integer entry on every cell."""

    __slots__ = ("shape", "entries", "_hash")

    def __init__(self, shape: SkewShape, entries):
        entries = dict(entries)
        if set(entries) != set(shape.cells):
            raise ValueError("entries must be given on exactly the cells of the shape")
        for c, k in entries.items():
            if not isinstance(k, int) or k < 1:
                raise ValueError(f"entry at {c} must be a positive integer, got {k!r}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Tableau is immutable")

    _EMPTY = None

    @classmethod
    def empty(cls) -> "Tableau":
        """The empty tableau; every evaluator assigns it the value 1."""
        if cls._EMPTY is None:
            cls._EMPTY = cls(SkewShape.empty(), {})
        return cls._EMPTY

    @property
    def is_empty(self) -> bool:
        return self.shape.is_empty

    def entry(self, i: int, j: int) -> int:
        return self.entries[(i, j)]

    @property
    def weight(self) -> int:
        return sum(self.entries.values())

    def admissible(self) -> bool:
        """True iff every corner entry is at least 2 (convergent limit)."""
        return all(self.entries[c] >= 2 for c in self.shape.corners())

    def diagonal_constant(self) -> bool:
        return self.diagonal_values() is not None

    def diagonal_values(self) -> dict[int, int] | None:
        """Entry on each diagonal, or None if some diagonal is not constant."""
        out: dict[int, int] = {}
        for (i, j), k in self.entries.items():
            d = j - i
            if out.setdefault(d, k) != k:
                return None
        return out

    def conjugate(self) -> "Tableau":
        """Transpose the shape and carry each entry to the mirrored cell."""
        if self.is_empty:
            return self
        return Tableau(self.shape.conjugate(),
                       {(j, i): k for (i, j), k in self.entries.items()})

    def restrict(self, cells) -> "Tableau":
        """Sub-tableau on a subset of cells, translated back to the origin."""
        cells = set(cells)
        roff = min(i for i, _ in cells) - 1
        coff = min(j for _, j in cells) - 1
        sub = SkewShape.from_cells(cells)
        return Tableau(sub, {(i - roff, j - coff): self.entries[(i, j)] for (i, j) in cells})

    def rows(self) -> list[list[int]]:
        """Entries row by row, reading each row left to right."""
        out = []
        for i in range(1, self.shape.height + 1):
            lo, hi = self.shape.row_span(i)
            out.append([self.entries[(i, j)] for j in range(lo, hi + 1)])
        return out

    def pretty(self) -> str:
        lines = []
        for i in range(1, self.shape.height + 1):
            lo, hi = self.shape.row_span(i)
            lines.append(" ".join(["."] * (lo - 1) + [str(self.entries[(i, j)]) for j in range(lo, hi + 1)]))
        return "\n".join(lines)

    def __eq__(self, other):
        return (isinstance(other, Tableau) and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.shape, tuple(sorted(self.entries.items())))))
        return self._hash

    def __repr__(self):
        if self.is_empty:
            return "Tableau.empty()"
        return f"Tableau({self.shape!r}, {self.rows()})"


def glue_h(t1: Tableau, t2: Tableau) -> Tableau:
    """Place t2 so its bottom-left cell sits immediately right of t1's
    top-right cell, carrying all entries over."""
    if t1.is_empty:
        return t2
    if t2.is_empty:
        return t1
    h2 = t2.shape.height
    w1 = t1.shape.width
    cells = {}
    for (i, j), k in t1.entries.items():
        cells[(i + h2 - 1, j)] = k
    for (i, j), k in t2.entries.items():
        cells[(i, j + w1)] = k
    return Tableau(SkewShape.from_cells(cells.keys()), cells)


def glue_v(t1: Tableau, t2: Tableau) -> Tableau:
    """Place t2 so its bottom-left cell sits immediately above t1's
    top-right cell, carrying all entries over."""
    if t1.is_empty:
        return t2
    if t2.is_empty:
        return t1
    h2 = t2.shape.height
    w1 = t1.shape.width
    cells = {}
    for (i, j), k in t1.entries.items():
        cells[(i + h2, j)] = k
    for (i, j), k in t2.entries.items():
        cells[(i, j + w1 - 1)] = k
    return Tableau(SkewShape.from_cells(cells.keys()), cells)


def corner_parity(shape: SkewShape) -> int:
    """The common parity of j - i over all corners.

    Raises NotCheckerboardable when the corners disagree.
    """
    ps = {(j - i) % 2 for (i, j) in shape.corners()}
    if len(ps) != 1:
        raise NotCheckerboardable(
            f"{shape!r} has corners on diagonals of both parities")
    return ps.pop()


def is_checkerboardable(shape: SkewShape) -> bool:
    """True iff all corners lie on diagonals of one parity."""
    if shape.is_empty:
        return False
    return len({(j - i) % 2 for (i, j) in shape.corners()}) == 1


def checkerboard_fill(shape: SkewShape, a: int, b: int) -> Tableau:
    """The unique diagonal-constant filling alternating a/b with b on every
    corner.  For a == b the filling is constant and exists for any shape."""
    if not isinstance(a, int) or not isinstance(b, int) or a < 1 or b < 2:
        raise ValueError(f"need integer a >= 1 and b >= 2, got a={a}, b={b}")
    if shape.is_empty:
        return Tableau.empty()
    if a == b:
        return Tableau(shape, {c: b for c in shape.cells})
    p = corner_parity(shape)
    return Tableau(shape, {(i, j): (b if (j - i) % 2 == p else a) for (i, j) in shape.cells})


@dataclass(frozen=True)
class FamilySpec:
    """A named shape family instance plus its checkerboard fill (a, b).

    Kinds: ``A(n)``, ``B(n)``, ``L(n)``, ``Lstar(n)``, ``S(n)``, ``Sstar(n)``,
    ``hook(m, n)``, ``antihook(m, n)``, ``stair(N; mu...)``, ``square(n)``.
    """
    kind: str
    args: tuple
    fill: tuple[int, int]


def family_shape(kind: str, args: tuple) -> SkewShape:
    """The skew shape of a named family member (empty shape for S(0)/Sstar(0))."""
    if kind == "A":
        (n,) = args
        if n < 1:
            raise IndexOutOfRange(f"A(n) needs n >= 1, got {n}")
        return SkewShape(Partition([n + 1, n + 1] + list(range(n, 1, -1))), staircase(n))
    if kind == "B":
        (n,) = args
        if n < 0:
            raise IndexOutOfRange(f"B(n) needs n >= 0, got {n}")
        return SkewShape(staircase(n + 1), staircase(n - 1))
    if kind == "L":
        (n,) = args
        if n < 1:
            raise IndexOutOfRange(f"L(n) needs n >= 1, got {n}")
        return SkewShape(Partition([2] * (2 * n)), Partition([1] * (2 * n - 1)))
    if kind == "Lstar":
        (n,) = args
        if n < 1:
            raise IndexOutOfRange(f"Lstar(n) needs n >= 1, got {n}")
        return SkewShape(Partition([2 * n, 2 * n]), Partition([2 * n - 1]))
    if kind == "S":
        (n,) = args
        if n < 0:
            raise IndexOutOfRange(f"S(n) needs n >= 0, got {n}")
        if n == 0:
            return SkewShape.empty()
        return SkewShape(Partition([n] + list(range(n, 0, -1))), staircase(n - 1))
    if kind == "Sstar":
        (n,) = args
        if n < 0:
            raise IndexOutOfRange(f"Sstar(n) needs n >= 0, got {n}")
        if n == 0:
            return SkewShape.empty()
        return SkewShape(Partition(range(n + 1, 1, -1)), staircase(n - 1))
    if kind == "hook":
        m, n = args
        if m < 1 or n < 0:
            raise IndexOutOfRange(f"hook(m, n) needs m >= 1, n >= 0, got {args}")
        if n >= 1 and (m - n) % 2 == 0:
            raise NotCheckerboardable(f"hook({m}, {n}) needs m, n of opposite parity")
        return SkewShape(Partition([m] + [1] * n))
    if kind == "antihook":
        m, n = args
        if m < 2 or n < 1:
            raise IndexOutOfRange(f"antihook(m, n) needs m >= 2, n >= 1, got {args}")
        return SkewShape(Partition([m] * (n + 1)), Partition([m - 1] * n))
    if kind == "stair":
        N, mu = args[0], Partition(args[1])
        if N < 1:
            raise IndexOutOfRange(f"stair(N; mu) needs N >= 1, got N={N}")
        for j in range(1, len(mu) + 1):
            if mu.part(j) > N - j:
                raise IndexOutOfRange(f"mu={mu.parts} does not fit inside the staircase of order {N}")
        return SkewShape(staircase(N), mu)
    if kind == "square":
        (n,) = args
        if n < 1:
            raise IndexOutOfRange(f"square(n) needs n >= 1, got {n}")
        return SkewShape(Partition([n] * n))
    raise IndexOutOfRange(f"unknown family kind {kind!r}")


def make_family(spec: FamilySpec) -> Tableau:
    """Checkerboard tableau of a family member (the empty tableau for S(0)/Sstar(0))."""
    shape = family_shape(spec.kind, spec.args)
    if shape.is_empty:
        return Tableau.empty()
    a, b = spec.fill
    return checkerboard_fill(shape, a, b)


def iter_skew_shapes(max_cells: int):
    """Yield every skew shape with at most max_cells cells, up to translation.

    Shapes are produced in a canonical position: every column 1..width and
    every row 1..height contains a cell.  Columns are described by their
    (top, bottom) row intervals, which weakly decrease left to right and
    overlap or touch so that no row is skipped.
    """
    def rec(cols, used):
        t_prev, b_prev = cols[-1]
        if t_prev == 1:
            yield cols
        for t in range(t_prev, 0, -1):
            for b in range(max(t, t_prev - 1), min(b_prev, t + (max_cells - used) - 1) + 1):
                yield from rec(cols + [(t, b)], used + (b - t + 1))

    for h in range(1, max_cells + 1):
        for first_top in range(1, h + 1):
            # column 1 must reach the bottom row h
            used = h - first_top + 1
            if used > max_cells:
                continue
            yield from (cols_to_shape(cols) for cols in rec([(first_top, h)], used))


def cols_to_shape(cols) -> SkewShape:
    """Build the skew shape whose j-th column occupies rows cols[j-1]."""
    outer_c = Partition([b for _, b in cols])
    inner_c = Partition([t - 1 for t, _ in cols])
    return SkewShape(outer_c.conjugate(), inner_c.conjugate())
