"""
Rational (co)homology of configuration spaces with twisted coefficients.

Every answer comes from a registry of known facts. A request is served
either directly by a fact of the same kind (cohomological or Borel-Moore)
or through Poincaré duality on the mN-dimensional manifold B(X, N),

    H̄_i(B; L) = H^{mN-i}(B; L (x) or_B),

where all local systems have monodromy +-1 and are tracked as two bits:
the sign of the permutation of the points and the class of the point
traces in H_1(X; Z/2) (the Theta-tilde system, defined for RP^m only).
Requests no fact reaches raise :class:`UncoveredCase`; nothing is guessed.

Over Q, homology and cohomology with these self-dual systems have equal
dimensions degreewise, so ``homology`` and ``cohomology`` share facts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Callable

from .exactlinalg import GradedDims
from .series import LaurentPolynomial


class Space(str, Enum):
    EUCLID = "euclid"
    SPHERE = "sphere"
    PROJ = "rp"
    PROJ_PUNCTURED = "rp-punctured"
    LENS = "lens"
    LENS_PUNCTURED = "lens-punctured"


class CoeffSystem(str, Enum):
    CONST = "const"
    SIGN = "sign"
    THETA_TILDE = "theta-tilde"
    THETA_TILDE_SIGN = "theta-tilde-sign"
    THETA = "theta"  # ordered spaces of RP^m only
    OR = "or"        # flips along loops whose traces reverse the orientation of X


class Variant(str, Enum):
    HOMOLOGY = "homology"
    COHOMOLOGY = "cohomology"
    BOREL_MOORE = "borel-moore"


class UncoveredCase(LookupError):
    """No known statement determines the requested groups."""

    def __init__(self, message: str, nearest: str | None = None):
        super().__init__(message)
        self.nearest = nearest


_PROJECTIVE = (Space.PROJ, Space.PROJ_PUNCTURED)


@dataclass(frozen=True)
class ConfigSpaceSpec:
    space: Space
    m: int
    N: int
    ordered: bool = False
    coeff: CoeffSystem = CoeffSystem.CONST
    variant: Variant = Variant.COHOMOLOGY
    r: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "space", Space(self.space))
        object.__setattr__(self, "coeff", CoeffSystem(self.coeff))
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.m < 1 or self.N < 1:
            raise ValueError("need m >= 1 and N >= 1, got m=%d, N=%d" % (self.m, self.N))
        if self.space in (Space.LENS, Space.LENS_PUNCTURED):
            if self.m % 2 == 0:
                raise ValueError("lens spaces need odd m, got %d" % self.m)
            if self.r is None or self.r < 1:
                raise ValueError("lens spaces need r >= 1")
        elif self.r is not None:
            raise ValueError("r only applies to lens spaces")
        c = self.coeff
        if c is CoeffSystem.THETA and not self.ordered:
            raise ValueError("Theta lives on ordered configuration spaces; use theta-tilde")
        if self.ordered and c in (CoeffSystem.SIGN, CoeffSystem.THETA_TILDE, CoeffSystem.THETA_TILDE_SIGN):
            raise ValueError("%s lives on unordered configuration spaces" % c.value)
        if c in (CoeffSystem.THETA, CoeffSystem.THETA_TILDE, CoeffSystem.THETA_TILDE_SIGN) and (
            self.space not in _PROJECTIVE
        ):
            raise ValueError("%s is only defined over RP^m" % c.value)

    @property
    def dimension(self) -> int:
        return self.m * self.N

    def label(self) -> str:
        X = {
            Space.EUCLID: "R^%d" % self.m,
            Space.SPHERE: "S^%d" % self.m,
            Space.PROJ: "RP^%d" % self.m,
            Space.PROJ_PUNCTURED: "RP^%d_*" % self.m,
            Space.LENS: "L^%d_%s" % (self.m, self.r),
            Space.LENS_PUNCTURED: "L^%d_%s,*" % (self.m, self.r),
        }[self.space]
        return "%s(%s, %d; %s) [%s]" % ("I" if self.ordered else "B", X, self.N, self.coeff.value, self.variant.value)


Twist = tuple[int, int]  # (sign bit, theta bit)


def _twist(spec: ConfigSpaceSpec) -> Twist:
    c = spec.coeff
    if c is CoeffSystem.OR:
        t = (0, 1 if spec.space in _PROJECTIVE and spec.m % 2 == 0 else 0)
    else:
        t = {
            CoeffSystem.CONST: (0, 0),
            CoeffSystem.SIGN: (1, 0),
            CoeffSystem.THETA_TILDE: (0, 1),
            CoeffSystem.THETA_TILDE_SIGN: (1, 1),
            CoeffSystem.THETA: (0, 1),
        }[c]
    return _normalise(t, spec)


def _normalise(t: Twist, spec: ConfigSpaceSpec) -> Twist:
    sign, theta = t
    if spec.N == 1 or spec.ordered:
        sign = 0
    return (sign, theta)


def orientation_twist(spec: ConfigSpaceSpec) -> Twist:
    """Orientation sheaf of B(X, N) (or I(X, N)): sign^m (x) Or, Or = Theta-tilde on RP^even."""
    theta = 1 if spec.space in _PROJECTIVE and spec.m % 2 == 0 else 0
    return _normalise((spec.m % 2, theta), spec)


# -- the fact registry --------------------------------------------------------

@dataclass(frozen=True)
class Fact:
    name: str
    statement: str
    kind: str  # "coh" or "bm"
    ordered: bool
    twists: frozenset
    applies: Callable[[Space, int, int], bool]
    dims: Callable[[int, int], dict[int, int]]
    extension: Callable[[int, int], bool] = lambda m, N: False


def _odd(m: int) -> bool:
    return m % 2 == 1


_LENS_LIKE = (Space.SPHERE, Space.PROJ, Space.LENS)                       # S^m = L_1, RP^m = L_2 for odd m
_PUNCTURED_LENS_LIKE = (Space.EUCLID, Space.PROJ_PUNCTURED, Space.LENS_PUNCTURED)


def _poly_dims(poly: LaurentPolynomial) -> dict[int, int]:
    return poly.as_dict()


def _prod_poly(m: int, factors: list[int]) -> LaurentPolynomial:
    out = LaurentPolynomial.one()
    for a in factors:
        out = out * (LaurentPolynomial.one() + LaurentPolynomial.monomial(m - 1, a))
    return out


def _one_point(space: Space, m: int, theta: int) -> dict[int, int]:
    # B(X, 1) = X
    if space is Space.EUCLID or space is Space.LENS_PUNCTURED:
        return {0: 1}
    if space in (Space.SPHERE, Space.LENS):
        return {0: 1, m: 1}
    if space is Space.PROJ:
        if theta:
            return {m: 1} if m % 2 == 0 else {}
        return {0: 1, m: 1} if _odd(m) else {0: 1}
    # RP^m minus a point retracts onto RP^(m-1); Theta-tilde restricts to the nontrivial system
    if theta:
        return {m - 1: 1} if _odd(m) else {}
    return {0: 1} if _odd(m) else {0: 1, m - 1: 1}


FACTS: list[Fact] = [
    Fact(
        "one-point",
        "B(X, 1) is X itself",
        "coh", False, frozenset({(0, 0), (0, 1)}),
        lambda X, m, N: N == 1,
        None,  # filled per request, see _dims_for
    ),
    Fact(
        "euclidean-odd",
        "for odd m, H^*(B(R^m, N); Q) = Q[0] and H^*(B(R^m, N); +-Q) = Q[(m-1)[N/2]]; "
        "the same holds for punctured lens spaces and punctured RP^m",
        "coh", False, frozenset({(0, 0), (1, 0)}),
        lambda X, m, N: X in _PUNCTURED_LENS_LIKE and _odd(m),
        None,
    ),
    Fact(
        "euclidean-even-constant",
        "for even m, H^*(B(R^m, N); Q) = Q[0] + Q[m-1] when N >= 2",
        "coh", False, frozenset({(0, 0)}),
        lambda X, m, N: X is Space.EUCLID and not _odd(m) and N >= 2,
        lambda m, N: {0: 1, m - 1: 1},
    ),
    Fact(
        "euclidean-even-sign",
        "for even m, H^*(B(R^m, N); +-Q) = 0 when N >= 2",
        "coh", False, frozenset({(1, 0)}),
        lambda X, m, N: X is Space.EUCLID and not _odd(m) and N >= 2,
        lambda m, N: {},
    ),
    Fact(
        "lens-constant",
        "for odd m, H^*(B(L^m_r, N); Q) = H^*(S^m; Q) for every N >= 1 (r = 1: sphere, r = 2: RP^m)",
        "coh", False, frozenset({(0, 0)}),
        lambda X, m, N: X in _LENS_LIKE and _odd(m),
        lambda m, N: {0: 1, m: 1},
    ),
    Fact(
        "lens-sign",
        "for odd m, H^j(B(L^m_r, N); +-Q) = Q iff N is odd and j = (m-1)(N-1)/2 or (m-1)(N-1)/2 + m",
        "coh", False, frozenset({(1, 0)}),
        lambda X, m, N: X in _LENS_LIKE and _odd(m),
        lambda m, N: {(m - 1) * (N - 1) // 2: 1, (m - 1) * (N - 1) // 2 + m: 1} if N % 2 else {},
    ),
    Fact(
        "projective-theta-sign-odd",
        "for odd m, H_*(B(RP^m, N); Theta-tilde (x) +-Q) vanishes for odd N and has "
        "Poincaré polynomial t^(N(m-1)/2) (1 + t^m) for even N",
        "coh", False, frozenset({(1, 1)}),
        lambda X, m, N: X is Space.PROJ and _odd(m),
        lambda m, N: {} if N % 2 else {N * (m - 1) // 2: 1, N * (m - 1) // 2 + m: 1},
    ),
    Fact(
        "projective-theta-bm-odd",
        "for odd m, the Borel-Moore homology of B(RP^m, N) with Theta-tilde (x) Q vanishes for odd N and "
        "has Poincaré polynomial t^(N(m+1)/2) (1 + t^-m) for even N",
        "bm", False, frozenset({(0, 1)}),
        lambda X, m, N: X is Space.PROJ and _odd(m),
        lambda m, N: {} if N % 2 else {N * (m + 1) // 2: 1, N * (m + 1) // 2 - m: 1},
    ),
    Fact(
        "punctured-projective-theta-sign-odd",
        "for odd m and any N >= 1, H_j(B(RP^m_*, N); Theta-tilde (x) +-Q) = Q exactly for j = ceil(N/2)(m-1)",
        "coh", False, frozenset({(1, 1)}),
        lambda X, m, N: X is Space.PROJ_PUNCTURED and _odd(m),
        lambda m, N: {-(-N // 2) * (m - 1): 1},
    ),
    Fact(
        "projective-even-constant",
        "for even m and N >= 2, H_i(B(RP^m, N); Q) = Q exactly for i = 0 and i = 2m - 1",
        "coh", False, frozenset({(0, 0)}),
        lambda X, m, N: X is Space.PROJ and not _odd(m) and N >= 2,
        lambda m, N: {0: 1, 2 * m - 1: 1},
    ),
    Fact(
        "projective-even-theta-bm",
        "for even m and N >= 2, the Borel-Moore homology of B(RP^m, N) with Theta-tilde (x) Q is Q "
        "exactly in degrees Nm and Nm - (2m - 1)",
        "bm", False, frozenset({(0, 1)}),
        lambda X, m, N: X is Space.PROJ and not _odd(m) and N >= 2,
        lambda m, N: {N * m: 1, N * m - 2 * m + 1: 1},
    ),
    Fact(
        "projective-even-bm-vanishing",
        "for even m, the Borel-Moore homology of B(RP^m, N) with Q or +-Q coefficients vanishes for N >= 2",
        "bm", False, frozenset({(0, 0), (1, 0)}),
        lambda X, m, N: X is Space.PROJ and not _odd(m) and N >= 2,
        lambda m, N: {},
    ),
    Fact(
        "punctured-projective-even-bm-vanishing",
        "for even m, the Borel-Moore homology of B(RP^m_*, N) with Q or +-Q coefficients vanishes for N >= 1",
        "bm", False, frozenset({(0, 0), (1, 0)}),
        lambda X, m, N: X is Space.PROJ_PUNCTURED and not _odd(m),
        lambda m, N: {},
    ),
    Fact(
        "punctured-projective-even-constant",
        "for even m, H^j(B(RP^m_*, N); Q) = Q exactly for j = 0 and j = m - 1",
        "coh", False, frozenset({(0, 0)}),
        lambda X, m, N: X is Space.PROJ_PUNCTURED and not _odd(m),
        lambda m, N: {0: 1, m - 1: 1},
    ),
    Fact(
        "sphere-even-constant",
        "for even m, H^*(B(S^m, N); Q) is Q[0] + Q[m] for N = 1 (the sphere), Q[0] for N = 2 "
        "(homotopy equivalent to RP^m) and Q[0] + Q[2m-1] for N >= 3 (stated for m >= 3; "
        "the m = 2 value is an extension)",
        "coh", False, frozenset({(0, 0)}),
        lambda X, m, N: X is Space.SPHERE and not _odd(m),
        lambda m, N: {1: {0: 1, m: 1}, 2: {0: 1}}.get(N, {0: 1, 2 * m - 1: 1}),
        extension=lambda m, N: m == 2 and N >= 3,
    ),
    Fact(
        "sphere-even-sign",
        "for even m, H^*(B(S^m, N); +-Q) is Q[0] + Q[m] for N = 1, Q[m] for N = 2 (the twisted "
        "cohomology of RP^m) and 0 for N >= 3 (transfer from the configurations with a marked point, "
        "fibred over S^m with fibre B(R^m, N-1), whose +-Q cohomology vanishes)",
        "coh", False, frozenset({(1, 0)}),
        lambda X, m, N: X is Space.SPHERE and not _odd(m),
        lambda m, N: {1: {0: 1, m: 1}, 2: {m: 1}}.get(N, {}),
        extension=lambda m, N: N >= 3,
    ),
    # ordered configuration spaces
    Fact(
        "ordered-euclidean",
        "H^*(I(R^m, N); Q) has Poincaré polynomial prod_{a=1}^{N-1} (1 + a t^(m-1)); "
        "any embedding R^m -> L^m_r,* (m odd) induces an isomorphism",
        "coh", True, frozenset({(0, 0)}),
        lambda X, m, N: X is Space.EUCLID or (X in _PUNCTURED_LENS_LIKE and _odd(m)),
        lambda m, N: _poly_dims(_prod_poly(m, list(range(1, N)))),
    ),
    Fact(
        "ordered-lens",
        "for odd m, H^*(I(L^m_r, N); Q) = H^*(S^m x I(R^m, N-1); Q)",
        "coh", True, frozenset({(0, 0)}),
        lambda X, m, N: X in _LENS_LIKE and _odd(m),
        lambda m, N: _poly_dims(
            (LaurentPolynomial.one() + LaurentPolynomial.monomial(m)) * _prod_poly(m, list(range(1, N - 1)))
        ),
    ),
    Fact(
        "ordered-projective-theta-odd",
        "if m and N are odd then H_*(I(RP^m, N); Theta (x) Q) = 0",
        "coh", True, frozenset({(0, 1)}),
        lambda X, m, N: X is Space.PROJ and _odd(m) and N % 2 == 1,
        lambda m, N: {},
    ),
    Fact(
        "ordered-projective-even-bm-vanishing",
        "for even m the Borel-Moore homology with Q coefficients of I(RP^m, N), N >= 2, and of "
        "I(RP^m_*, N), N >= 1, vanishes",
        "bm", True, frozenset({(0, 0)}),
        lambda X, m, N: not _odd(m) and ((X is Space.PROJ and N >= 2) or X is Space.PROJ_PUNCTURED),
        lambda m, N: {},
    ),
    Fact(
        "ordered-punctured-projective-theta-total",
        "for odd m, H_*(I(RP^m_*, N); Theta (x) Q) is N!-dimensional and lives in even degrees "
        "(degrees of the individual classes are not determined)",
        "total", True, frozenset({(0, 1)}),
        lambda X, m, N: X is Space.PROJ_PUNCTURED and _odd(m),
        lambda m, N: {},
    ),
]


def _dims_for(fact: Fact, spec: ConfigSpaceSpec, twist: Twist) -> dict[int, int]:
    if fact.name == "one-point":
        return _one_point(spec.space, spec.m, twist[1])
    if fact.name == "euclidean-odd":
        return {0: 1} if twist == (0, 0) else {(spec.m - 1) * (spec.N // 2): 1}
    return fact.dims(spec.m, spec.N)


def _find(spec: ConfigSpaceSpec, twist: Twist, kind: str) -> Fact | None:
    for f in FACTS:
        if f.kind == kind and f.ordered == spec.ordered and twist in f.twists and f.applies(spec.space, spec.m, spec.N):
            return f
    return None


def _nearest(spec: ConfigSpaceSpec, twist: Twist) -> Fact | None:
    same_space = [
        f for f in FACTS if f.ordered == spec.ordered and f.name != "one-point" and f.applies(spec.space, spec.m, spec.N)
    ]
    for f in same_space:
        if twist in f.twists:
            return f
    if same_space:
        return same_space[0]
    loose = [f for f in FACTS if f.ordered == spec.ordered and f.name != "one-point"]
    for f in loose:
        for m in (spec.m, spec.m + 1):
            if f.applies(spec.space, m, spec.N):
                return f
    return loose[0] if loose else None


def config_homology(spec: ConfigSpaceSpec) -> GradedDims:
    """
    Graded dimensions of H_*, H^* or the Borel-Moore homology H̄_* of the
    configuration space described by ``spec``, over Q.
    """
    twist = _twist(spec)
    kind = "bm" if spec.variant is Variant.BOREL_MOORE else "coh"
    other = "coh" if kind == "bm" else "bm"

    fact = _find(spec, twist, kind)
    if fact is not None:
        return GradedDims(_dims_for(fact, spec, twist), source=fact.name, extension=fact.extension(spec.m, spec.N))

    o = orientation_twist(spec)
    dual = _normalise((twist[0] ^ o[0], twist[1] ^ o[1]), spec)
    fact = _find(spec, dual, other)
    if fact is not None:
        dims = GradedDims(_dims_for(fact, spec, dual))
        return dims.reflected(
            spec.dimension, source=fact.name + " + Poincaré duality", extension=fact.extension(spec.m, spec.N)
        )

    near = _nearest(spec, twist)
    msg = "no known statement determines %s" % spec.label()
    if near is not None:
        msg += "; nearest: %s (%s)" % (near.name, near.statement)
    raise UncoveredCase(msg, nearest=near.name if near else None)


def ordered_config_poincare(m: int, N: int) -> LaurentPolynomial:
    """prod_{a=1}^{N-1} (1 + a t^(m-1)), the Poincaré polynomial of I(R^m, N)."""
    if N < 1 or m < 1:
        raise ValueError("need m >= 1 and N >= 1")
    return _prod_poly(m, list(range(1, N)))


def punctured_cover_poincare(m: int, N: int) -> LaurentPolynomial:
    """
    prod_{j=1}^{N} (1 + (2j - 1) t^(m-1)): homology of the (Z/2)^N-cover of
    I(RP^m_*, N) by ordered point sequences in S^m avoiding each other's
    antipodes and the two preimages of the puncture. Needs odd m.
    """
    if m % 2 == 0:
        raise ValueError("m must be odd, got %d" % m)
    if N < 1:
        raise ValueError("N must be positive")
    return _prod_poly(m, [2 * j - 1 for j in range(1, N + 1)])


def ordered_punctured_theta_total(m: int, N: int) -> tuple[int, bool]:
    """
    (total dimension, all-degrees-even) for H_*(I(RP^m_*, N); Theta (x) Q), m odd.
    Only the total is known, not the individual degrees.
    """
    if m % 2 == 0:
        raise ValueError("m must be odd, got %d" % m)
    return factorial(N), True
