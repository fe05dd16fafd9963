"""Three-layer planar waveguide eigenvalue solver (TE and TM).

The dispersion relation is used in its arctangent phase form

    Phi(n_eff) = kappa*d - m*pi - atan(rho_s*gamma_sub/kappa)
                                - atan(rho_c*gamma_cover/kappa)

with rho_i = 1 for TE and (n_core/n_i)^2 for TM.  Phi is single-valued and
strictly decreasing in n_eff on (max cladding index, n_core), so every
guided mode is an isolated bracketed root and bisection cannot miss it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Final

from .errors import DomainError, SolverError
from .rootfind import bisect_to_float_limit

__all__ = [
    "TE",
    "TM",
    "SlabGeometry",
    "SlabMode",
    "phase_residual",
    "solve_mode",
    "cutoff_thickness",
    "enumerate_modes",
]

TE: Final = "TE"
TM: Final = "TM"

# relative shrink keeping the search interval away from the kappa = 0 and
# gamma = 0 endpoint singularities
_ENDPOINT_SHRINK: Final = 1e-14


@dataclass(frozen=True, slots=True)
class SlabGeometry:
    """Core thickness plus the three refractive indices, SI units."""

    d: float
    n_core: float
    n_sub: float
    n_cover: float

    def __post_init__(self):
        if not (self.d > 0.0):
            raise DomainError(f"d must be positive (got {self.d!r})", field="d")
        for name in ("n_core", "n_sub", "n_cover"):
            value = getattr(self, name)
            if not (0.0 < value <= 10.0):
                raise DomainError(
                    f"{name} must lie in (0, 10] (got {value!r})", field=name
                )
        if not (self.n_core > max(self.n_sub, self.n_cover)):
            raise DomainError(
                f"n_core must exceed both cladding indices for guidance "
                f"(n_core={self.n_core!r}, n_sub={self.n_sub!r}, "
                f"n_cover={self.n_cover!r})",
                field="n_core",
            )

    def symmetric(self) -> bool:
        return abs(self.n_sub - self.n_cover) < 1e-12


@dataclass(frozen=True, slots=True)
class SlabMode:
    """A solved guided mode of the slab."""

    polarization: str
    m: int
    n_eff: float
    kappa: float
    gamma_sub: float
    gamma_cover: float
    effective_width: float


def _check_pol(pol: str) -> None:
    if pol not in (TE, TM):
        raise DomainError(f"polarization must be TE or TM (got {pol!r})", field="pol")


def _check_solve_args(lambda0: float, pol: str, m: int) -> None:
    _check_pol(pol)
    if not (lambda0 > 0.0):
        raise DomainError(f"lambda0 must be positive (got {lambda0!r})", field="lambda0")
    if not (isinstance(m, int) and m >= 0):
        raise DomainError(f"mode order must be a non-negative integer (got {m!r})", field="m")


def _phase(
    g: SlabGeometry,
    lambda0: float,
    m: int,
    n_eff: float,
    rho_sub: float,
    rho_cover: float,
) -> float:
    # difference-of-squares products keep precision when n_eff approaches
    # either interval endpoint
    k0 = 2.0 * math.pi / lambda0
    kappa = k0 * math.sqrt((g.n_core - n_eff) * (g.n_core + n_eff))
    gamma_sub = k0 * math.sqrt((n_eff - g.n_sub) * (n_eff + g.n_sub))
    gamma_cover = k0 * math.sqrt((n_eff - g.n_cover) * (n_eff + g.n_cover))
    return (
        kappa * g.d
        - m * math.pi
        - math.atan(rho_sub * gamma_sub / kappa)
        - math.atan(rho_cover * gamma_cover / kappa)
    )


def _rho(g: SlabGeometry, pol: str) -> tuple[float, float]:
    if pol == TE:
        return 1.0, 1.0
    return (g.n_core / g.n_sub) ** 2, (g.n_core / g.n_cover) ** 2


def phase_residual(
    g: SlabGeometry, lambda0: float, pol: str, m: int, n_eff: float
) -> float:
    """Phase mismatch of the order-m dispersion relation at a trial n_eff.

    Strictly decreasing in n_eff; a guided mode is a zero.  n_eff must lie
    strictly inside (max(n_sub, n_cover), n_core).
    """
    _check_solve_args(lambda0, pol, m)
    n_lo = max(g.n_sub, g.n_cover)
    if not (n_lo < n_eff < g.n_core):
        raise DomainError(
            f"n_eff must lie strictly inside ({n_lo!r}, {g.n_core!r}) "
            f"(got {n_eff!r})",
            field="n_eff",
        )
    rho_sub, rho_cover = _rho(g, pol)
    return _phase(g, lambda0, m, n_eff, rho_sub, rho_cover)


def solve_mode(g: SlabGeometry, lambda0: float, pol: str, m: int) -> SlabMode | None:
    """Solve for the order-m guided mode; None when it is below cutoff.

    The returned n_eff is resolved to the floating-point limit and its
    phase residual is minimal among representable candidates.
    """
    _check_solve_args(lambda0, pol, m)
    n_lo = max(g.n_sub, g.n_cover)
    lo = n_lo * (1.0 + _ENDPOINT_SHRINK)
    hi = g.n_core * (1.0 - _ENDPOINT_SHRINK)
    if lo >= hi:
        return None  # index contrast below double-precision resolution
    rho_sub, rho_cover = _rho(g, pol)

    def f(n: float) -> float:
        return _phase(g, lambda0, m, n, rho_sub, rho_cover)

    flo = f(lo)
    if flo <= 0.0:
        return None  # below cutoff: the whole interval is past the root
    fhi = f(hi)
    if fhi >= 0.0:
        raise SolverError(
            f"phase form not negative at the n_core end (d={g.d!r}, m={m}): "
            "geometry outside the solvable range"
        )
    n_eff, _ = bisect_to_float_limit(f, lo, hi, flo, fhi)

    k0 = 2.0 * math.pi / lambda0
    gamma_sub = k0 * math.sqrt((n_eff - g.n_sub) * (n_eff + g.n_sub))
    gamma_cover = k0 * math.sqrt((n_eff - g.n_cover) * (n_eff + g.n_cover))
    return SlabMode(
        polarization=pol,
        m=m,
        n_eff=n_eff,
        kappa=k0 * math.sqrt((g.n_core - n_eff) * (g.n_core + n_eff)),
        gamma_sub=gamma_sub,
        gamma_cover=gamma_cover,
        effective_width=g.d + 1.0 / gamma_sub + 1.0 / gamma_cover,
    )


def cutoff_thickness(g: SlabGeometry, lambda0: float, pol: str, m: int) -> float:
    """Core thickness at which the order-m mode reaches cutoff (n_eff equals
    the larger cladding index).  Zero for the fundamental of a symmetric slab.
    """
    _check_solve_args(lambda0, pol, m)
    k0 = 2.0 * math.pi / lambda0
    n2 = max(g.n_sub, g.n_cover)  # the mode cuts off against the denser cladding
    n3 = min(g.n_sub, g.n_cover)
    rho3 = 1.0 if pol == TE else (g.n_core / n3) ** 2
    na2 = math.sqrt((g.n_core - n2) * (g.n_core + n2))
    asym = math.sqrt((n2 - n3) * (n2 + n3)) / na2
    return (m * math.pi + math.atan(rho3 * asym)) / (k0 * na2)


def enumerate_modes(g: SlabGeometry, lambda0: float, pol: str) -> list[SlabMode]:
    """All guided modes of one polarization, in strictly decreasing n_eff
    (equivalently increasing order m)."""
    _check_pol(pol)
    if not (lambda0 > 0.0):
        raise DomainError(f"lambda0 must be positive (got {lambda0!r})", field="lambda0")
    modes: list[SlabMode] = []
    # upper bound on the mode count from the phase span of the relation
    k0 = 2.0 * math.pi / lambda0
    n_lo = max(g.n_sub, g.n_cover)
    span = k0 * g.d * math.sqrt((g.n_core - n_lo) * (g.n_core + n_lo))
    m_max = int(span / math.pi) + 2
    for m in range(m_max + 1):
        mode = solve_mode(g, lambda0, pol, m)
        if mode is None:
            break  # cutoff thickness grows with m, so no later mode exists
        modes.append(mode)
    return modes
