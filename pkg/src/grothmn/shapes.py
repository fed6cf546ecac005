"""Partitions, skew shapes, and the shape-level statistics behind the expansion rules.

Conventions: partitions are weakly decreasing tuples of positive integers
(trailing zeros stripped), cells are 1-based (row, col) pairs, and a skew
shape outer/inner is the cell set Y(outer) - Y(inner).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class Partition:
    """Weakly decreasing sequence of non-negative integers, stored without trailing zeros."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Row length at 1-based index i; zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, inner: "Partition") -> bool:
        return all(inner.part(i) <= self.part(i) for i in range(1, inner.length() + 1))

    def fits_rows(self, n: int) -> bool:
        return self.length() <= n

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length n (n must cover all nonzero parts)."""
        if self.length() > n:
            raise ValueError(f"{self} has more than {n} nonzero parts")
        return self.parts + (0,) * (n - self.length())

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def sort_key(self) -> tuple:
        """Graded-lexicographic key: by size, then by parts."""
        return (self.size(), self.parts)


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


@dataclass(frozen=True)
class Cell:
    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise ValueError("cells are 1-based")


@dataclass(frozen=True)
class ShapeStats:
    size: int
    rows_occupied: int
    cols_occupied: int
    connected: bool


class SkewShape:
    """Cell set difference of two nested Young diagrams."""

    __slots__ = ("outer", "inner", "cells")

    def __init__(self, outer: Partition, inner: Partition):
        outer = as_partition(outer)
        inner = as_partition(inner)
        if not outer.contains(inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        cells = tuple(
            (r, c)
            for r in range(1, outer.length() + 1)
            for c in range(inner.part(r) + 1, outer.part(r) + 1)
        )
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    def size(self) -> int:
        return len(self.cells)

    def rows_occupied(self) -> int:
        return len({r for r, _ in self.cells})

    def cols_occupied(self) -> int:
        return len({c for _, c in self.cells})

    def is_connected(self) -> bool:
        """Edge connectivity of the cell set; empty shapes count as connected."""
        if not self.cells:
            return True
        cellset = set(self.cells)
        stack = [self.cells[0]]
        seen = {self.cells[0]}
        while stack:
            r, c = stack.pop()
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nb in cellset and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(cellset)

    def has_square(self) -> bool:
        cellset = set(self.cells)
        return any(
            (r + 1, c) in cellset and (r, c + 1) in cellset and (r + 1, c + 1) in cellset
            for r, c in self.cells
        )

    def bottom_row(self) -> int:
        """1-based index of the bottommost nonempty row; 0 for the empty shape."""
        return max((r for r, _ in self.cells), default=0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewShape({self.outer.parts}/{self.inner.parts})"


def skew(outer, inner) -> SkewShape:
    return SkewShape(outer, inner)


def shape_stats(s: SkewShape) -> ShapeStats:
    return ShapeStats(
        size=s.size(),
        rows_occupied=s.rows_occupied(),
        cols_occupied=s.cols_occupied(),
        connected=s.is_connected(),
    )


def is_ribbon(s: SkewShape) -> bool:
    """Nonempty, connected, and free of 2x2 blocks."""
    return bool(s.cells) and s.is_connected() and not s.has_square()


def height(s: SkewShape) -> int:
    """Number of nonempty rows minus one; defined for ribbons only."""
    if not is_ribbon(s):
        raise ValueError(f"{s} is not a ribbon")
    return s.rows_occupied() - 1


def max_nw_ribbon_size(s: SkewShape) -> int:
    """Size of the largest ribbon mu/inner with inner <= mu <= outer.

    Any such ribbon occupies a contiguous row block [i1, i2].  Within the
    block, the no-2x2 and adjacency constraints force row i to end exactly
    at column inner_{i-1} + 1 for i > i1, so only the top row's end is free
    and its best value is min(outer_{i1}, inner_{i1-1}).  The block sizes
    telescope to top - inner_{i2} + (i2 - i1).
    """
    if not s.cells:
        raise ValueError("maximal ribbon is undefined for the empty shape")
    if not s.is_connected():
        raise ValueError("maximal ribbon is defined for connected shapes only")
    outer, inner = s.outer, s.inner
    nrows = outer.length()
    best = 0
    for i1 in range(1, nrows + 1):
        top = outer.part(i1)
        if i1 > 1:
            top = min(top, inner.part(i1 - 1))
        if top < inner.part(i1) + 1:
            continue
        for i2 in range(i1, nrows + 1):
            if i2 > i1 and outer.part(i2) < inner.part(i2 - 1) + 1:
                break
            best = max(best, top - inner.part(i2) + (i2 - i1))
    return best


def max_nw_ribbon_size_oracle(s: SkewShape) -> int:
    """Same value by exhaustive enumeration of the intermediate partitions mu."""
    if not s.cells:
        raise ValueError("maximal ribbon is undefined for the empty shape")
    if not s.is_connected():
        raise ValueError("maximal ribbon is defined for connected shapes only")
    outer, inner = s.outer, s.inner
    nrows = outer.length()

    best = 0
    def rec(row: int, prev: int, mu: list[int]):
        nonlocal best
        if row > nrows:
            cand = SkewShape(Partition(mu), inner)
            if is_ribbon(cand):
                best = max(best, cand.size())
            return
        lo = inner.part(row)
        hi = min(outer.part(row), prev)
        for v in range(lo, hi + 1):
            mu.append(v)
            rec(row + 1, v, mu)
            mu.pop()

    rec(1, outer.part(1), [])
    return best


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most `rows` parts, each at most `cols`, graded-lex order."""
    out: list[Partition] = []

    def rec(row: int, prev: int, acc: list[int]):
        out.append(Partition(acc))
        if row > rows:
            return
        for v in range(1, min(cols, prev) + 1):
            acc.append(v)
            rec(row + 1, v, acc)
            acc.pop()

    rec(1, cols, [])
    out.sort(key=Partition.sort_key)
    return out


def _connected_outer_candidates(lam: Partition, k: int, n: int) -> Iterator[Partition]:
    """Outer partitions nu in P[n] whose skew shape over lam is nonempty, connected,
    and spans at most k columns.

    Connected shapes occupy a contiguous row block; consecutive block rows must
    overlap in columns (nu_{i+1} >= lam_i + 1) and the column span is
    nu_{i1} - lam_{i2}, which bounds nu_{i1} by lam_{i2} + k.
    """
    lp = lam.padded(n)
    for i1 in range(1, n + 1):
        for i2 in range(i1, n + 1):
            top_hi = lam.part(i1 - 1) if i1 > 1 else lp[i1 - 1] + k
            top_hi = min(top_hi, lp[i2 - 1] + k)
            top_lo = lp[i1 - 1] + 1

            def rec(row: int, prev: int, acc: list[int]):
                if row > i2:
                    nu = list(lp)
                    nu[i1 - 1 : i2] = acc
                    yield Partition(nu)
                    return
                lo = max(lp[row - 1] + 1, lp[row - 2] + 1)  # nonempty + overlap with row above
                for v in range(lo, prev + 1):
                    acc.append(v)
                    yield from rec(row + 1, v, acc)
                    acc.pop()

            for top in range(top_lo, top_hi + 1):
                yield from rec(i1 + 1, top, [top])


def enumerate_mn_outer(lam, k: int, n: int) -> list[Partition]:
    """Outer partitions admissible in the stable expansion of p_k times G_lam.

    Returns all nu in P[n] containing lam such that nu/lam is nonempty and
    connected, spans at most k columns, and its maximal northwest-border
    ribbon has size at least k.  Graded-lex order.
    """
    lam = as_partition(lam)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not lam.fits_rows(n):
        raise ValueError(f"{lam} has more than {n} rows")
    result = []
    for nu in _connected_outer_candidates(lam, k, n):
        shape = SkewShape(nu, lam)
        if shape.cols_occupied() <= k and max_nw_ribbon_size(shape) >= k:
            result.append(nu)
    result.sort(key=Partition.sort_key)
    return result


def enumerate_mn_outer_row(lam, k: int, n: int, j: int) -> list[Partition]:
    """Subset of enumerate_mn_outer whose skew shape has bottommost nonempty row j."""
    if not 1 <= j <= n:
        raise ValueError(f"row index {j} out of range 1..{n}")
    lam = as_partition(lam)
    return [nu for nu in enumerate_mn_outer(lam, k, n) if SkewShape(nu, lam).bottom_row() == j]
