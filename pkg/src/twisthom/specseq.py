"""
First pages of the resolution spectral sequences for spaces of sphere maps,
their totals, and the d^M bookkeeping of the evaluation fibration.

The column p = -N of a first page holds the Borel-Moore homology of the
configuration space of N points with the appropriate local system:

    E_1^{-N, q} = H̄_{N(M+1) - q}(B(X, N); L).

Free spaces use X = S^m, RP^m or a lens space; based spaces use the
punctured version (R^m, RP^m_*, punctured lens space).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .confighom import CoeffSystem, ConfigSpaceSpec, Space, Variant, config_homology
from .mapspaces import Family, MapSpaceSpec
from .series import DEFAULT_TRUNCATION, PoincareSeries, RationalExpr, expand, table_closed_form

__all__ = [
    "MapSpaceSpec", "WedgeSpec", "E1Page", "InsufficientDepth", "Degeneration", "DmPairList",
    "build_e1", "default_depth", "wedge_support_check", "degeneration_status", "total_poincare",
    "leray_dm_pairs", "leray_verify", "fiber_closed_form", "total_closed_form",
]


class InsufficientDepth(ValueError):
    pass


@dataclass(frozen=True)
class WedgeSpec:
    W: int
    dim_X: int
    dim_CLambda: int = 0

    def __post_init__(self):
        if self.dim_X + self.dim_CLambda > self.W - 2:
            raise ValueError("need dim X + dim C(Lambda) <= W - 2, got %d + %d > %d"
                             % (self.dim_X, self.dim_CLambda, self.W - 2))

    @property
    def slope(self) -> int:
        return self.W - self.dim_X - self.dim_CLambda

    def contains(self, p: int, q: int) -> bool:
        if p == 0:
            return q == 0
        return p < 0 and q + p * self.slope >= 0 and q <= -p * self.W


@dataclass(frozen=True)
class E1Page:
    cells: dict[tuple[int, int], int]
    wedge: WedgeSpec
    p_min: int
    spec: MapSpaceSpec | None = field(default=None, compare=False)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((p, q, d) for (p, q), d in self.cells.items() if d)

    def to_json(self) -> list[dict[str, int]]:
        return [{"p": p, "q": q, "dim": d} for p, q, d in self.nonzero()]


def _coefficient(spec: MapSpaceSpec) -> CoeffSystem:
    if spec.family is Family.LENS:
        return CoeffSystem.SIGN
    sign = spec.M % 2
    theta = (spec.M + 1) % 2 if spec.family is Family.ODD else 0
    return {
        (0, 0): CoeffSystem.CONST,
        (1, 0): CoeffSystem.SIGN,
        (0, 1): CoeffSystem.THETA_TILDE,
        (1, 1): CoeffSystem.THETA_TILDE_SIGN,
    }[(sign, theta)]


def config_spec(spec: MapSpaceSpec, N: int) -> ConfigSpaceSpec:
    """Configuration space and local system feeding column p = -N."""
    fam = spec.family
    if fam is Family.GENERAL:
        space, r = (Space.EUCLID if spec.based else Space.SPHERE), None
    elif fam is Family.LENS:
        space, r = (Space.LENS_PUNCTURED if spec.based else Space.LENS), spec.tau
    else:
        space, r = (Space.PROJ_PUNCTURED if spec.based else Space.PROJ), None
    return ConfigSpaceSpec(space, spec.m, N, coeff=_coefficient(spec), variant=Variant.BOREL_MOORE, r=r)


def default_depth(spec: MapSpaceSpec, T: int = DEFAULT_TRUNCATION) -> int:
    d = spec.M - spec.m
    return -((T + d - 1) // d) - 1


def build_e1(spec: MapSpaceSpec, p_min: int | None = None, T: int = DEFAULT_TRUNCATION) -> E1Page:
    if p_min is None:
        p_min = default_depth(spec, T)
    if p_min >= 0:
        raise ValueError("p_min must be negative, got %d" % p_min)
    M = spec.M
    cells = {(0, 0): 1}
    for N in range(1, -p_min + 1):
        bm = config_homology(config_spec(spec, N))
        for i, d in bm.items():
            cells[(-N, N * (M + 1) - i)] = d
    return E1Page(cells, WedgeSpec(M + 1, spec.m), p_min, spec)


def wedge_support_check(page: E1Page) -> bool:
    return all(page.wedge.contains(p, q) for p, q, _ in page.nonzero())


class Degeneration(str, Enum):
    LACUNARY = "lacunary"
    ASSERTED = "asserted"
    UNKNOWN = "unknown"


def _asserted(spec: MapSpaceSpec) -> bool:
    # pages whose collapse is proved by nonvanishing cup powers of the basic
    # linking class (M - m even) or by transfer from those cases
    mo, Mo = spec.m % 2, spec.M % 2
    fam = spec.family
    if mo == Mo == 1:
        return not spec.based
    if mo == Mo == 0:
        return fam in (Family.ODD, Family.GENERAL)
    return False


def connecting_pairs(page: E1Page) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs of nonzero cells joined by some d_r: (p, q) -> (p + r, q - r + 1), r >= 1."""
    cells = [(p, q) for p, q, _ in page.nonzero()]
    present = set(cells)
    out = []
    for p, q in cells:
        for r in range(1, -p + 1):
            if (p + r, q - r + 1) in present:
                out.append(((p, q), (p + r, q - r + 1)))
    return out


def degeneration_status(page: E1Page) -> Degeneration:
    if not connecting_pairs(page):
        return Degeneration.LACUNARY
    if page.spec is not None and _asserted(page.spec):
        return Degeneration.ASSERTED
    return Degeneration.UNKNOWN


def total_poincare(page: E1Page, T: int = DEFAULT_TRUNCATION) -> PoincareSeries:
    """Sum of dim * t^(p+q) over the cells, certified complete up to degree T."""
    slope = page.wedge.slope - 1  # every cell in column p has p + q >= -p * slope
    if slope <= 0 or (-page.p_min + 1) * slope <= T:
        raise InsufficientDepth(
            "page built down to p=%d only certifies degrees below %d, asked for %d"
            % (page.p_min, (-page.p_min + 1) * max(slope, 0), T)
        )
    out = [0] * (T + 1)
    for p, q, d in page.nonzero():
        if 0 <= p + q <= T:
            out[p + q] += d
    return PoincareSeries(tuple(out))


@dataclass(frozen=True)
class DmPairList:
    """q = start + s * step for s >= 0; ``start is None`` means no pairs."""

    start: int | None = None
    step: int = 0

    @property
    def empty(self) -> bool:
        return self.start is None

    def values(self, T: int) -> list[int]:
        if self.start is None:
            return []
        out, q = [], self.start
        while q <= T:
            out.append(q)
            q += self.step
        return out

    def to_json(self):
        return None if self.start is None else {"start": self.start, "step": self.step}


def leray_dm_pairs(spec: MapSpaceSpec) -> DmPairList:
    """
    q-values of the cells E^{0,q} killed by d^M against E^{M,q-M+1} in the
    Leray spectral sequence of evaluation at a point, for free specs.
    """
    if spec.based:
        raise ValueError("d^M pairs concern the free space, got a based spec")
    m, M = spec.m, spec.M
    mo, Mo = m % 2, M % 2
    fam = spec.family
    if Mo == 1 or fam is Family.LENS:
        return DmPairList()
    if mo == 1:
        if fam is Family.ODD:
            return DmPairList(M - 1, 2 * M - m - 1)
        return DmPairList(2 * M - m - 1, 2 * M - m - 1)
    if fam is Family.ODD:
        return DmPairList(M - 1, M - m)
    if fam is Family.GENERAL:
        return DmPairList(2 * M - m - 1, M - m)
    return DmPairList()


def fiber_closed_form(spec: MapSpaceSpec) -> RationalExpr:
    return table_closed_form(spec.pointed())


def total_closed_form(spec: MapSpaceSpec) -> RationalExpr:
    return table_closed_form(spec.free())


def leray_verify(fiber: RationalExpr, M: int, pairs: DmPairList, total: RationalExpr,
                 T: int = DEFAULT_TRUNCATION) -> bool:
    """
    E_2 = H^*(fiber) (x) H^*(S^M); cancelling each d^M pair must leave the
    free space's series. Raises ArithmeticError when a pair hits a zero cell.
    """
    f = expand(fiber, T)
    col0 = list(f.coeffs)
    colM = list(f.coeffs)  # column M holds fiber degree j at total degree j + M
    for q in pairs.values(T):
        j = q - M + 1
        if col0[q] <= 0 or j < 0 or colM[j] <= 0:
            raise ArithmeticError("d^M pair at q=%d hits an empty cell" % q)
        col0[q] -= 1
        colM[j] -= 1
    out = [0] * (T + 1)
    for d in range(T + 1):
        out[d] += col0[d]
        if d - M >= 0:
            out[d] += colM[d - M]
    return tuple(out) == expand(total, T).coeffs
