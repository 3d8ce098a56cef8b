"""
Exact linear algebra over the rationals.

Sparse matrices with :class:`fractions.Fraction` entries, rank by
fraction-free row elimination, and homology dimensions of finite chain
complexes. Nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping


class ChainComplexError(ValueError):
    """Raised for malformed chain complexes (shape errors, d∘d != 0)."""


class SparseMatrix:
    """
    A rows x cols matrix over Q stored as a dict of rows.

    Only nonzero entries are kept; values are normalised to Fraction so
    they are always in lowest terms with positive denominator.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable[tuple[int, int, object]] = ()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be nonnegative, got %dx%d" % (rows, cols))
        self.rows = rows
        self.cols = cols
        data: dict[int, dict[int, Fraction]] = {}
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError("entry (%d, %d) outside %dx%d matrix" % (r, c, rows, cols))
            row = data.setdefault(r, {})
            if c in row:
                raise ValueError("duplicate entry at (%d, %d)" % (r, c))
            row[c] = Fraction(v)
        for r in list(data):
            row = {c: v for c, v in data[r].items() if v != 0}
            if row:
                data[r] = row
            else:
                del data[r]
        self._data = data

    @classmethod
    def from_dense(cls, rows: list[list[object]]) -> SparseMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = []
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged dense matrix")
            entries.extend((i, j, v) for j, v in enumerate(row) if v != 0)
        return cls(nrows, ncols, entries)

    @classmethod
    def identity(cls, n: int) -> SparseMatrix:
        return cls(n, n, ((i, i, 1) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    @property
    def entries(self) -> list[tuple[int, int, Fraction]]:
        return [(r, c, v) for r in sorted(self._data) for c, v in sorted(self._data[r].items())]

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self._data.get(r, {}).get(c, Fraction(0))

    def row_items(self) -> Iterator[tuple[int, dict[int, Fraction]]]:
        for r in sorted(self._data):
            yield r, dict(self._data[r])

    def is_zero(self) -> bool:
        return not self._data

    def transpose(self) -> SparseMatrix:
        return SparseMatrix(self.cols, self.rows, ((c, r, v) for r, c, v in self.entries))

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        out: dict[tuple[int, int], Fraction] = {}
        for r, row in self._data.items():
            for k, a in row.items():
                for c, b in other._data.get(k, {}).items():
                    out[r, c] = out.get((r, c), 0) + a * b
        return SparseMatrix(self.rows, other.cols, ((r, c, v) for (r, c), v in out.items() if v))

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __repr__(self) -> str:
        return "SparseMatrix(%d, %d, nnz=%d)" % (self.rows, self.cols, self.nnz)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    # divide out the content so entries stay small
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _integer_rows(m: SparseMatrix) -> list[dict[int, int]]:
    rows = []
    for _, row in m.row_items():
        den = lcm(*(v.denominator for v in row.values()))
        rows.append(_primitive({c: int(v * den) for c, v in row.items()}))
    return rows


def rank(m: SparseMatrix) -> int:
    """
    Rank of ``m`` over Q.

    Rows are scaled to primitive integer vectors and reduced against a
    pivot table keyed by leading column, fraction-free: ``row <- a*row - b*pivot``
    followed by content removal. When a row collides with a denser pivot
    row the two swap roles, which keeps the sparser row as pivot and limits
    fill-in. Processing order is fixed (sparsest rows first, ties by row
    index), so the result is input-determined.
    """
    rows = _integer_rows(m)
    rows.sort(key=len)
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                break
            if len(row) < len(piv):
                pivots[c], row = row, piv
                piv = pivots[c]
            a, b = piv[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                x = new.get(k, 0) - b * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            row = _primitive(new)
    return len(pivots)


@dataclass(frozen=True)
class GradedDims:
    """
    Finite-support map degree -> dimension.

    ``source`` names the fact a provider used and ``extension`` marks values
    that go beyond what the underlying statement literally covers; neither
    takes part in equality.
    """

    dims: Mapping[int, int]
    source: str = field(default="", compare=False)
    extension: bool = field(default=False, compare=False)

    def __post_init__(self):
        clean = {}
        for d, v in dict(self.dims).items():
            if v < 0:
                raise ValueError("negative dimension %d in degree %d" % (v, d))
            if v:
                clean[int(d)] = int(v)
        object.__setattr__(self, "dims", dict(sorted(clean.items())))

    def __getitem__(self, degree: int) -> int:
        return self.dims.get(degree, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def __hash__(self) -> int:
        return hash(tuple(self.dims.items()))

    def items(self):
        return self.dims.items()

    def total(self) -> int:
        return sum(self.dims.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** (d % 2) * v for d, v in self.dims.items())

    def reflected(self, top: int, **kw) -> GradedDims:
        """Degree d goes to top - d (Poincaré duality reindexing)."""
        return GradedDims({top - d: v for d, v in self.dims.items()}, **kw)

    def poincare(self):
        from .series import LaurentPolynomial

        return LaurentPolynomial.from_dict(self.dims)

    def to_json(self) -> dict[str, int]:
        return {str(d): v for d, v in self.dims.items()}

    def __repr__(self) -> str:
        return "GradedDims(%r)" % (self.dims,)


@dataclass
class ChainComplex:
    """
    Chain groups Q^dims[d] for d = 0..D with ``boundaries[d]`` mapping
    degree d to degree d - 1. ``boundaries[0]`` is the 0 x dims[0] zero map.
    """

    dims: list[int]
    boundaries: list[SparseMatrix]

    def __post_init__(self):
        if len(self.boundaries) != len(self.dims):
            raise ChainComplexError(
                "expected %d boundary maps, got %d" % (len(self.dims), len(self.boundaries))
            )
        for d, (n, b) in enumerate(zip(self.dims, self.boundaries)):
            rows = self.dims[d - 1] if d > 0 else 0
            if b.shape != (rows, n):
                raise ChainComplexError(
                    "boundary in degree %d has shape %s, expected %s" % (d, b.shape, (rows, n))
                )

    @classmethod
    def from_maps(cls, dims: list[int], maps: list[SparseMatrix]) -> ChainComplex:
        """Build from the positive-degree maps d_1..d_D only."""
        zero = SparseMatrix(0, dims[0] if dims else 0)
        return cls(list(dims), [zero, *maps])

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.dims))

    def check(self) -> None:
        for d in range(2, len(self.dims)):
            if not (self.boundaries[d - 1] @ self.boundaries[d]).is_zero():
                raise ChainComplexError("boundary composite d_%d d_%d is nonzero" % (d - 1, d))


def homology_dims(c: ChainComplex) -> GradedDims:
    """Betti numbers over Q; rejects complexes with d∘d != 0."""
    c.check()
    ranks = [0] + [rank(b) for b in c.boundaries[1:]] + [0]
    return GradedDims(
        {d: c.dims[d] - ranks[d] - ranks[d + 1] for d in range(len(c.dims))}
    )
