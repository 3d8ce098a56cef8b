"""
First-page combinatorics of the simplicial resolution of the diagonal set in
(RP^m)^N, restricted to configurations with a fixed first point.

The rows q = s*m of the first page are chain complexes ("horizontal
complexes") that are acyclic except in their top term, so each contributes
|Euler characteristic| classes. Three independent routes compute that Euler
characteristic:

* ``horizontal_euler_sum`` -- alternating sum of block dimensions, each a
  weighted count of partitions into even blocks;
* ``horizontal_euler_closed`` -- double factorial times a coefficient of
  prod_r (1 + (2r - 1) tau);
* ``permutation_oracle`` -- brute-force count of permutations starting with 1
  whose odd-place suffix minima are exactly a chosen set of places.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, prod

from .partitions import enumerate_partitions, partition_weight
from .series import LaurentPolynomial

ORACLE_MAX_N = 10


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def _check_even(N: int) -> None:
    if N < 2 or N % 2:
        raise ValueError("N must be a positive even number, got %d" % N)


def _check_s(N: int, s: int) -> None:
    _check_even(N)
    if not 0 <= s <= N // 2 - 1:
        raise ValueError("s must lie in [0, %d] for N=%d, got %d" % (N // 2 - 1, N, s))


@dataclass(frozen=True)
class HorizontalComplexSpec:
    """The row q = s*m of the first page for N points (N even)."""

    N: int
    s: int

    def __post_init__(self):
        _check_s(self.N, self.s)

    @property
    def p_range(self) -> range:
        return range(self.N // 2 - 1, self.N - 2 - self.s + 1)

    def block_dims(self) -> dict[int, int]:
        return {p: e1_block_dim(self.N, p, self.s) for p in self.p_range}


def e1_block_dim(N: int, p: int, s: int) -> int:
    """
    dim of the first-page group in column p, row s*m: partitions of {1..N}
    into N - p - 1 even blocks, each weighted by prod (|block| - 1)!, times
    binomial(N - p - 2, s).
    """
    spec = HorizontalComplexSpec(N, s)
    if p not in spec.p_range:
        raise ValueError("p=%d outside [%d, %d]" % (p, spec.p_range.start, spec.p_range.stop - 1))
    weights = sum(partition_weight(a) for a in enumerate_partitions(N, N - p - 1, even_only=True))
    return weights * comb(N - p - 2, s)


def horizontal_euler_sum(N: int, s: int) -> int:
    """Alternating sum with sign (-1)^p; the top term p = N - 2 - s carries (-1)^s."""
    spec = HorizontalComplexSpec(N, s)
    return sum((-1) ** p * d for p, d in spec.block_dims().items())


def _tau_poly(N: int) -> list[int]:
    # coefficients of (1 + tau)(1 + 3 tau) ... (1 + (N - 3) tau)
    poly = [1]
    for r in range(1, N // 2):
        a = 2 * r - 1
        poly = [(poly[i] if i < len(poly) else 0) + (a * poly[i - 1] if i > 0 else 0) for i in range(len(poly) + 1)]
    return poly


def horizontal_euler_closed(N: int, s: int) -> int:
    _check_s(N, s)
    return (-1) ** s * double_factorial(N - 1) * _tau_poly(N)[N // 2 - 1 - s]


@lru_cache(maxsize=None)
def _suffix_minimum_profile(N: int) -> Counter:
    # how many permutations with a_1 = 1 have each set of odd-place suffix minima
    odd_places = range(3, N, 2)
    counts: Counter = Counter()
    for tail in permutations(range(2, N + 1)):
        a = (1,) + tail
        hits = []
        low = N + 1
        for i in range(N, 2, -1):  # 1-based places, right to left
            x = a[i - 1]
            if x < low:
                if i % 2 == 1:
                    hits.append(i)
                low = x
        counts[frozenset(hits)] += 1
    assert all(set(k) <= set(odd_places) for k in counts)
    return counts


def place_choice_counts(N: int) -> dict[tuple[int, ...], int]:
    """
    For every set S of odd places in {3, 5, ..., N-1}: the number of
    permutations with a_1 = 1 whose entries on S are smaller than everything
    after them, while no other odd place (beyond the first) has that property.
    """
    _check_even(N)
    if N > ORACLE_MAX_N:
        raise ValueError("permutation oracle is limited to N <= %d, got %d" % (ORACLE_MAX_N, N))
    counts = _suffix_minimum_profile(N)
    places = range(3, N, 2)
    return {S: counts.get(frozenset(S), 0) for k in range(len(places) + 1) for S in combinations(places, k)}


def combi_count(N: int, places: tuple[int, ...]) -> int:
    """Closed count for a place choice: (N-1)!! (N-3)!! / prod_{i in places} (N - i)."""
    _check_even(N)
    val = Fraction(double_factorial(N - 1) * double_factorial(N - 3), prod(N - i for i in places))
    if val.denominator != 1:
        raise ArithmeticError("non-integral count %s for places %r" % (val, places))
    return int(val)


def permutation_oracle(N: int, s: int) -> int:
    _check_s(N, s)
    counts = place_choice_counts(N)
    return (-1) ** s * sum(c for S, c in counts.items() if len(S) == s)


def phi_poincare_closed(N: int, m: int) -> LaurentPolynomial:
    """
    Poincaré polynomial of H_*(Phi(RP^m, N); Theta (x) Q), Phi being the
    fiber of I(RP^m, N) -> RP^m over the first point:
    (N-1)!! t^((m-1)N/2) prod_{r=1}^{N/2-1} (1 + (2r-1) t^(m-1)).
    """
    _check_even(N)
    if m % 2 == 0 or m < 1:
        raise ValueError("m must be odd, got %d" % m)
    poly = LaurentPolynomial.monomial((m - 1) * N // 2, double_factorial(N - 1))
    for r in range(1, N // 2):
        poly = poly * (LaurentPolynomial.one() + LaurentPolynomial.monomial(m - 1, 2 * r - 1))
    return poly


def phi_poincare_from_euler(N: int, m: int) -> LaurentPolynomial:
    """
    Same polynomial from the degenerate resolution spectral sequence: the
    surviving cell of row s sits at (p, q) = (N - 2 - s, s*m) and carries
    |chi_s| classes of H_{p+q} of the resolution; Lefschetz duality in
    (RP^m)^(N-1) moves them to degree m(N-1) - 1 - (p + q) of Phi.
    """
    _check_even(N)
    if m % 2 == 0 or m < 1:
        raise ValueError("m must be odd, got %d" % m)
    terms: dict[int, int] = {}
    for s in range(N // 2):
        p, q = N - 2 - s, s * m
        degree = m * (N - 1) - 1 - (p + q)
        terms[degree] = terms.get(degree, 0) + abs(horizontal_euler_closed(N, s))
    return LaurentPolynomial.from_dict(terms)
