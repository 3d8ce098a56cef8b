"""Descriptors for the spaces of sphere maps whose cohomology we compute."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd


class Family(str, Enum):
    GENERAL = "general"  # all maps S^m -> S^M; based version is Omega^m S^M
    EVEN = "even"        # f(-x) = f(x)
    ODD = "odd"          # f(-x) = -f(x)
    LENS = "lens"        # f(zx) = z^s f(x) for z = exp(2 pi i / r), m and M odd


@dataclass(frozen=True)
class MapSpaceSpec:
    family: Family
    m: int
    M: int
    based: bool = False
    r: int | None = None
    s: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if not 1 <= self.m < self.M:
            raise ValueError("need 1 <= m < M, got m=%d, M=%d" % (self.m, self.M))
        if self.family is Family.LENS:
            if self.m % 2 == 0 or self.M % 2 == 0:
                raise ValueError("equivariant maps of lens type need m and M odd")
            if self.r is None or self.s is None:
                raise ValueError("lens family needs r and s")
            if self.r < 1 or not 0 < self.s <= self.r:
                raise ValueError("need r >= 1 and 0 < s <= r, got r=%s, s=%s" % (self.r, self.s))
        elif self.r is not None or self.s is not None:
            raise ValueError("r and s only apply to the lens family")

    @property
    def tau(self) -> int:
        """Order of the lens space the configuration points live in: gcd(r, s)."""
        if self.family is not Family.LENS:
            raise ValueError("tau is only defined for the lens family")
        return gcd(self.r, self.s)

    @property
    def parity(self) -> tuple[int, int]:
        return (self.m % 2, self.M % 2)

    @property
    def case_id(self) -> str:
        tag = "%s-m%d-M%d-%s" % (self.family.value, self.m, self.M, "based" if self.based else "free")
        if self.family is Family.LENS:
            tag += "-r%d-s%d" % (self.r, self.s)
        return tag

    def free(self) -> MapSpaceSpec:
        return MapSpaceSpec(self.family, self.m, self.M, False, self.r, self.s)

    def pointed(self) -> MapSpaceSpec:
        return MapSpaceSpec(self.family, self.m, self.M, True, self.r, self.s)
