"""
Set partitions of {1..n}, the refinement order, and order-complex pairs.

For a partition A, ``Delta_A`` is the order complex of the non-discrete
partitions refining A (A included) and ``dDelta_A`` is the subcomplex of
chains that avoid A. The relative homology of this pair is concentrated in
degree n - k(A) - 1 with rank prod (|block| - 1)!, which is what the
block dimensions of the resolution spectral sequence count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .exactlinalg import ChainComplex, GradedDims, SparseMatrix, homology_dims

MAX_POINTS = 8


@dataclass(frozen=True, order=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(not b for b in blocks):
            raise ValueError("empty block")
        flat = [x for b in blocks for x in b]
        if sorted(flat) != list(range(1, self.n + 1)):
            raise ValueError("blocks %r do not partition {1..%d}" % (blocks, self.n))
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, *blocks: Iterable[int]) -> SetPartition:
        blocks = [tuple(b) for b in blocks]
        return cls(sum(len(b) for b in blocks), tuple(blocks))

    @classmethod
    def parse(cls, text: str) -> SetPartition:
        """'12|34' or '1,2|3,4' (commas required once n >= 10)."""
        blocks = []
        for part in text.split("|"):
            part = part.strip()
            items = part.split(",") if "," in part else list(part)
            blocks.append(tuple(int(x) for x in items))
        return cls.of(*blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> SetPartition:
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(labels, start=1):
            groups.setdefault(lab, []).append(i)
        return cls(len(labels), tuple(tuple(g) for g in groups.values()))

    @classmethod
    def discrete(cls, n: int) -> SetPartition:
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def is_discrete(self) -> bool:
        return self.k == self.n

    def all_even(self) -> bool:
        return all(len(b) % 2 == 0 for b in self.blocks)

    @cached_property
    def _block_of(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def refines(self, other: SetPartition) -> bool:
        """True iff every block of self lies inside a block of other."""
        if self.n != other.n:
            return False
        where = other._block_of
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self) -> str:
        sep = "," if self.n >= 10 else ""
        return "|".join(sep.join(map(str, b)) for b in self.blocks)


def _rgs(n: int, k: int | None, even_only: bool) -> Iterator[list[int]]:
    # restricted growth strings in lexicographic order; a[i] = block of element i+1
    a = [0] * n
    sizes: list[int] = []

    def rec(i: int) -> Iterator[list[int]]:
        nb = len(sizes)
        remaining = n - i
        if k is not None and (nb > k or nb + remaining < k):
            return
        if even_only:
            odd = sum(1 for s in sizes if s % 2)
            if odd > remaining:
                return
        if i == n:
            if (k is None or nb == k) and (not even_only or all(s % 2 == 0 for s in sizes)):
                yield a
            return
        for b in range(nb + 1):
            a[i] = b
            if b == nb:
                sizes.append(1)
            else:
                sizes[b] += 1
            yield from rec(i + 1)
            if b == nb:
                sizes.pop()
            else:
                sizes[b] -= 1

    yield from rec(0)


def enumerate_partitions(n: int, k: int, even_only: bool = False) -> list[SetPartition]:
    """
    All partitions of {1..n} into exactly k blocks, in lexicographic order of
    their block-assignment vectors. With ``even_only`` every block has even size.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n, got n=%d, k=%d" % (n, k))
    return [SetPartition.from_labels(a) for a in _rgs(n, k, even_only)]


def all_partitions(n: int) -> list[SetPartition]:
    return [SetPartition.from_labels(a) for a in _rgs(n, None, False)]


def partition_weight(a: SetPartition) -> int:
    return prod(factorial(len(b) - 1) for b in a.blocks)


def refinements(a: SetPartition) -> list[SetPartition]:
    """Every partition refining ``a`` (both a and the discrete partition included)."""
    per_block = []
    for b in a.blocks:
        per_block.append([[tuple(b[i - 1] for i in blk) for blk in p.blocks] for p in all_partitions(len(b))])
    out = []
    for choice in product(*per_block):
        out.append(SetPartition(a.n, tuple(blk for part in choice for blk in part)))
    return sorted(out, key=lambda p: (-p.k, p.blocks))


@dataclass(frozen=True)
class SimplicialPair:
    """
    Order complex of the refinements of ``root``.

    ``simplices`` are chains of vertex indices listed finest-first, and
    ``in_boundary[i]`` is True when simplex i avoids the root vertex.
    """

    root: SetPartition
    vertices: tuple[SetPartition, ...]
    simplices: tuple[tuple[int, ...], ...]
    in_boundary: tuple[bool, ...]

    @property
    def top(self) -> int:
        return self.vertices.index(self.root)

    def dimension(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    def face_counts(self, relative: bool = False) -> list[int]:
        counts = [0] * (self.dimension() + 1)
        for s, bd in zip(self.simplices, self.in_boundary):
            if not (relative and bd):
                counts[len(s) - 1] += 1
        return counts

    def euler_characteristic(self, relative: bool = False) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.face_counts(relative)))

    def chain_complex(self, relative: bool = False) -> ChainComplex:
        """Simplicial chains of Delta_A, or of (Delta_A, dDelta_A) when ``relative``."""
        D = self.dimension()
        by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(D + 1)]
        for s, bd in zip(self.simplices, self.in_boundary):
            if not (relative and bd):
                by_dim[len(s) - 1].append(s)
        index = [{s: i for i, s in enumerate(group)} for group in by_dim]
        maps = []
        for d in range(1, D + 1):
            entries = []
            for j, s in enumerate(by_dim[d]):
                for i in range(len(s)):
                    face = s[:i] + s[i + 1:]
                    row = index[d - 1].get(face)
                    if row is not None:
                        entries.append((row, j, -1 if i % 2 else 1))
            maps.append(SparseMatrix(len(by_dim[d - 1]), len(by_dim[d]), entries))
        return ChainComplex.from_maps([len(g) for g in by_dim], maps)


def order_complex_pair(a: SetPartition, include_discrete: bool = False) -> SimplicialPair:
    """
    (Delta_A, dDelta_A) with every refinement chain stored explicitly.

    The discrete partition is left out by default: with it, Delta_A and
    dDelta_A are both cones on the discrete vertex and the pair is acyclic.
    """
    if a.n > MAX_POINTS:
        raise ValueError(
            "order complex of a partition of %d points is beyond the practical bound of %d points"
            % (a.n, MAX_POINTS)
        )
    verts = [v for v in refinements(a) if include_discrete or not v.is_discrete()]
    if not verts:
        raise ValueError("the discrete partition has no non-discrete refinements")
    coarser: list[list[int]] = [
        [j for j in range(len(verts)) if j != i and verts[j].k < verts[i].k and verts[i].refines(verts[j])]
        for i in range(len(verts))
    ]
    simplices: list[tuple[int, ...]] = []

    def grow(chain: tuple[int, ...]) -> None:
        simplices.append(chain)
        for j in coarser[chain[-1]]:
            grow(chain + (j,))

    for i in range(len(verts)):
        grow((i,))
    top = verts.index(a)
    simplices.sort(key=lambda s: (len(s), s))
    return SimplicialPair(
        root=a,
        vertices=tuple(verts),
        simplices=tuple(simplices),
        in_boundary=tuple(top not in s for s in simplices),
    )


def relative_partition_homology(a: SetPartition, include_discrete: bool = False) -> GradedDims:
    """H_*(Delta_A, dDelta_A; Q) from the relative simplicial chain complex."""
    pair = order_complex_pair(a, include_discrete)
    return homology_dims(pair.chain_complex(relative=True))


def mobius(a: SetPartition) -> int:
    """mu(discrete, A) in the partition lattice, from the defining recursion."""
    verts = refinements(a)  # finest first
    mu: dict[SetPartition, int] = {}
    for i, v in enumerate(verts):
        if i == 0:
            mu[v] = 1
            continue
        mu[v] = -sum(mu[u] for u in verts[:i] if u != v and u.refines(v))
    return mu[a]
