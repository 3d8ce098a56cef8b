"""
Poincaré series in one variable t.

Three containers:

* :class:`PoincareSeries` -- integer power series truncated at degree T.
* :class:`RationalExpr` -- integer polynomial over integer polynomial with
  constant term 1, so the expansion at t = 0 is an integer series.
* :class:`LaurentPolynomial` -- finite-support integer polynomials in t and 1/t.

Plus the closed forms for spaces of (equivariant) maps of spheres.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .mapspaces import Family, MapSpaceSpec

DEFAULT_TRUNCATION = 40


# -- integer polynomial helpers (tuples, index = degree) ---------------------

def _trim(p: Sequence[int]) -> tuple[int, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pmul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _mono(k: int, c: int = 1) -> tuple[int, ...]:
    if k < 0:
        raise ValueError("negative exponent %d in a polynomial" % k)
    return _trim([0] * k + [c])


def _pstr(p: Sequence[int], var: str = "t", offset: int = 0) -> str:
    terms = []
    for i, c in enumerate(p):
        if not c:
            continue
        d = i + offset
        mono = "" if d == 0 else (var if d == 1 else "%s^%d" % (var, d))
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = "%d%s" % (abs(c), mono)
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        s += " %s %s" % (sign, body)
    return s


# -- truncated series ---------------------------------------------------------

@dataclass(frozen=True)
class PoincareSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, T: int) -> PoincareSeries:
        return cls((0,) * (T + 1))

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int], T: int) -> PoincareSeries:
        c = list(coeffs[: T + 1])
        return cls(tuple(c + [0] * (T + 1 - len(c))))

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: PoincareSeries) -> PoincareSeries:
        return series_arith(self, other, "add")

    def __sub__(self, other: PoincareSeries) -> PoincareSeries:
        return series_arith(self, other, "sub")

    def __mul__(self, other: PoincareSeries) -> PoincareSeries:
        return series_arith(self, other, "mul")

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self) -> str:
        return _pstr(self.coeffs) + " + O(t^%d)" % (self.truncation + 1)


def series_arith(a: PoincareSeries, b: PoincareSeries, op: str) -> PoincareSeries:
    if a.truncation != b.truncation:
        raise ValueError("truncation mismatch: %d vs %d" % (a.truncation, b.truncation))
    if op == "add":
        return PoincareSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))
    if op == "sub":
        return PoincareSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))
    if op == "mul":
        T = a.truncation
        out = [0] * (T + 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j in range(T + 1 - i):
                    out[i + j] += x * b.coeffs[j]
        return PoincareSeries(tuple(out))
    raise ValueError("unknown series operation %r" % op)


# -- rational functions -------------------------------------------------------

@dataclass(frozen=True)
class RationalExpr:
    """num(t) / den(t) with integer coefficients and den(0) = 1."""

    num: tuple[int, ...]
    den: tuple[int, ...] = (1,)

    def __post_init__(self):
        num, den = _trim(self.num), _trim(self.den)
        if not den or den[0] != 1:
            raise ValueError("denominator must have constant term 1, got %r" % (den,))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def poly(cls, coeffs: Sequence[int]) -> RationalExpr:
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> RationalExpr:
        return cls(_mono(k, c))

    @classmethod
    def geometric(cls, k: int) -> RationalExpr:
        """1 / (1 - t^k)."""
        if k <= 0:
            raise ValueError("geometric series needs a positive period")
        return cls((1,), _padd((1,), _mono(k, -1)))

    def __add__(self, other: RationalExpr) -> RationalExpr:
        if self.den == other.den:
            return RationalExpr(_padd(self.num, other.num), self.den)
        return RationalExpr(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __neg__(self) -> RationalExpr:
        return RationalExpr(tuple(-c for c in self.num), self.den)

    def __sub__(self, other: RationalExpr) -> RationalExpr:
        return self + (-other)

    def __mul__(self, other: RationalExpr) -> RationalExpr:
        return RationalExpr(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def expand(self, T: int = DEFAULT_TRUNCATION) -> PoincareSeries:
        return expand(self, T)

    def equals(self, other: RationalExpr) -> bool:
        """Exact equality as rational functions (cross-multiplication)."""
        return _pmul(self.num, other.den) == _pmul(other.num, self.den)

    def to_json(self) -> dict[str, list[int]]:
        return {"num": list(self.num), "den": list(self.den)}

    def __str__(self) -> str:
        if self.den == (1,):
            return _pstr(self.num)
        return "(%s)/(%s)" % (_pstr(self.num), _pstr(self.den))


def expand(e: RationalExpr, T: int = DEFAULT_TRUNCATION) -> PoincareSeries:
    """Coefficients of num/den up to t^T, via s_n = num_n - sum_{k>=1} den_k s_{n-k}."""
    if T < 0:
        raise ValueError("truncation must be nonnegative")
    if not e.den or e.den[0] != 1:
        raise ValueError("denominator must have constant term 1")
    s = [0] * (T + 1)
    for n in range(T + 1):
        acc = e.num[n] if n < len(e.num) else 0
        for k in range(1, min(n, len(e.den) - 1) + 1):
            acc -= e.den[k] * s[n - k]
        s[n] = acc
    return PoincareSeries(tuple(s))


# -- Laurent polynomials ------------------------------------------------------

@dataclass(frozen=True)
class LaurentPolynomial:
    """sum_i coeffs[i] t^(offset + i); normalised so both ends are nonzero."""

    offset: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        off = self.offset
        while c and c[-1] == 0:
            c.pop()
        lead = 0
        while lead < len(c) and c[lead] == 0:
            lead += 1
        c = c[lead:]
        off = off + lead if c else 0
        object.__setattr__(self, "offset", off)
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPolynomial:
        terms = {d: c for d, c in terms.items() if c}
        if not terms:
            return cls(0, ())
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(d, 0) for d in range(lo, hi + 1)))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> LaurentPolynomial:
        return cls(k, (c,))

    @classmethod
    def one(cls) -> LaurentPolynomial:
        return cls(0, (1,))

    def as_dict(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def min_degree(self) -> int:
        return self.offset

    @property
    def max_degree(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        d = self.as_dict()
        for k, c in other.as_dict().items():
            d[k] = d.get(k, 0) + c
        return LaurentPolynomial.from_dict(d)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return LaurentPolynomial(self.offset + other.offset, _pmul(self.coeffs, other.coeffs))

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by t^k."""
        return LaurentPolynomial(self.offset + k, self.coeffs)

    def reciprocal(self) -> LaurentPolynomial:
        """Substitute t -> 1/t."""
        return LaurentPolynomial(-self.max_degree, tuple(reversed(self.coeffs)))

    def evaluate(self, x: int | Fraction) -> Fraction | int:
        x = Fraction(x)
        if x == 0 and self.offset < 0:
            raise ZeroDivisionError("negative powers at t = 0")
        val = sum((c * x**d for d, c in self.as_dict().items()), Fraction(0))
        return int(val) if val.denominator == 1 else val

    def __str__(self) -> str:
        return _pstr(self.coeffs, offset=self.offset)


def poincare_dual_check(homology: LaurentPolynomial, borel_moore: LaurentPolynomial, top_dim: int) -> bool:
    """True iff borel_moore(t) == t^top_dim * homology(1/t)."""
    return borel_moore == homology.reciprocal().shift(top_dim)


def euler_char(p: LaurentPolynomial) -> int:
    return p.evaluate(-1)


def stable_range_bound(k: int, n: int, d: int) -> int:
    """
    Degree below which the restriction of non-resultant systems of k
    homogeneous polynomials of degree d on R^n to the unit sphere is a
    cohomology isomorphism onto the space of even/odd maps.
    """
    if k <= n:
        raise ValueError("stable range needs k > n, got k=%d, n=%d" % (k, n))
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return (k - n) * (d + 1)


# -- closed forms -------------------------------------------------------------

def _g(k: int) -> RationalExpr:
    return RationalExpr.geometric(k)


def _t(k: int) -> RationalExpr:
    return RationalExpr.monomial(k)


_ONE = RationalExpr((1,))


def table_closed_form(spec: MapSpaceSpec) -> RationalExpr:
    """
    Poincaré series of H^*(space of maps; Q) for the space described by ``spec``:
    all maps S^m -> S^M (or the based loop space Omega^m S^M), even or odd
    maps (and their pointed versions), or Z/r-equivariant maps of odd spheres.
    """
    m, M = spec.m, spec.M
    d1 = M - m
    d2 = 2 * M - m - 1
    if spec.family is Family.LENS:
        return _g(d1) if spec.based else (_ONE + _t(M)) * _g(d1)

    mo, Mo = m % 2 == 1, M % 2 == 1
    fam = spec.family

    if mo and Mo:
        return _g(d1) if spec.based else (_ONE + _t(M)) * _g(d1)

    if mo and not Mo:
        if fam is Family.ODD:
            if spec.based:
                return (_ONE + _t(M - 1)) * _g(d2)
            return (_ONE + _t(2 * M - 1)) * _g(d2)
        # even maps and general maps share this row
        if spec.based:
            return (_ONE + _t(d1)) * _g(d2)
        return _ONE + _t(d1) * (_ONE + _t(m)) * _g(d2)

    if not mo and Mo:
        if fam is Family.GENERAL:
            if spec.based:
                return _ONE + _t(d1)
            return (_ONE + _t(M)) * (_ONE + _t(d1))
        return _ONE if spec.based else _ONE + _t(M)

    # m even, M even
    if fam is Family.EVEN:
        return _ONE if spec.based else _ONE + _t(M)
    if fam is Family.ODD:
        if spec.based:
            return (_ONE + _t(M - 1)) * _g(d1)
        return (_ONE + _t(2 * M - 1)) * _g(d1)
    if spec.based:
        return (_ONE + _t(2 * M - m - 1)) * _g(d1)
    return _t(M) + (_ONE + _t(3 * M - m - 1)) * _g(d1)
