"""Step-index circular waveguide fundamental-mode solvers.

Two routes to the fundamental mode of a cylindrical core:

* the exact hybrid dispersion determinant at azimuthal number 1, whose
  largest-n_eff root is the cutoff-free fundamental (solve_he11), and
* the scalar weak-guidance approximation (solve_lp01), useful as an
  independent cross-check that converges to the exact answer as the
  index contrast vanishes.

Root searches walk the core parameter u between consecutive poles of the
determinant (the zeros of J1), where the sign structure guarantees a
bracketed root.  Near-degenerate v < 1e-3 switches to solving for w**2
directly to dodge cancellation in n_eff - n_clad.

The cladding parameter w is capped near 700 by the modified-Bessel
underflow guard; extremely thick strong-contrast cores (v beyond ~700)
are outside the supported range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Final

from .bessel import bessel_j, bessel_k
from .errors import DomainError, PoleError, SolverError
from .rootfind import bisect_to_float_limit

__all__ = [
    "HE11",
    "LP01",
    "FiberGeometry",
    "FiberMode",
    "normalized_frequency",
    "he11_residual",
    "solve_he11",
    "solve_lp01",
]

HE11: Final = "HE11"
LP01: Final = "LP01"

_SMALL_V: Final = 1e-3  # below this, solve for w**2 instead of u
_SHRINK: Final = 1e-12
_SCAN_POINTS: Final = (32, 512, 8192)


@dataclass(frozen=True, slots=True)
class FiberGeometry:
    """Core radius and the two refractive indices, SI units."""

    a: float
    n_core: float
    n_clad: float

    def __post_init__(self):
        if not (self.a > 0.0):
            raise DomainError(f"a must be positive (got {self.a!r})", field="a")
        if not (self.n_clad > 0.0):
            raise DomainError(
                f"n_clad must be positive (got {self.n_clad!r})", field="n_clad"
            )
        if not (self.n_core > self.n_clad):
            raise DomainError(
                f"n_core must exceed n_clad for guidance "
                f"(n_core={self.n_core!r}, n_clad={self.n_clad!r})",
                field="n_core",
            )


@dataclass(frozen=True, slots=True)
class FiberMode:
    """A solved fundamental mode: eigenvalue plus its transverse parameters."""

    family: str
    n_eff: float
    u: float
    w: float
    v: float


def _check_lambda0(lambda0: float) -> None:
    if not (lambda0 > 0.0):
        raise DomainError(f"lambda0 must be positive (got {lambda0!r})", field="lambda0")


def normalized_frequency(g: FiberGeometry, lambda0: float) -> float:
    """v = k0 * a * sqrt(n_core**2 - n_clad**2)."""
    _check_lambda0(lambda0)
    k0 = 2.0 * math.pi / lambda0
    return k0 * g.a * math.sqrt((g.n_core - g.n_clad) * (g.n_core + g.n_clad))


def _factors(u: float, w: float, r: float) -> tuple[float, float]:
    """The two bracketed factors of the hybrid determinant."""
    j1 = bessel_j(1, u).value
    if j1 == 0.0:
        raise PoleError(f"determinant evaluated at a J1 zero (u={u!r})")
    j1p = bessel_j(0, u).value - j1 / u
    k0v = bessel_k(0, w).value
    k1v = bessel_k(1, w).value
    k1p = -k0v - k1v / w
    jterm = j1p / (u * j1)
    kterm = k1p / (w * k1v)
    return jterm + kterm, jterm + r * kterm


def _determinant(u: float, w: float, r: float, q: float) -> float:
    """Hybrid determinant at azimuthal number 1.

    r = (n_clad/n_core)**2, q = (n_eff/n_core)**2.  The fundamental mode is
    the smallest-u (largest n_eff) root.
    """
    f1, f2 = _factors(u, w, r)
    x = 1.0 / (u * u)
    y = 1.0 / (w * w)
    return f1 * f2 - q * (x + y) * (x + r * y)


def he11_residual(g: FiberGeometry, lambda0: float, n_eff: float) -> float:
    """Exact hybrid dispersion determinant evaluated at a trial n_eff.

    n_eff must lie strictly inside (n_clad, n_core).  Evaluation exactly at
    a J1 zero raises PoleError (the bracketer splits intervals there).
    """
    _check_lambda0(lambda0)
    if not (g.n_clad < n_eff < g.n_core):
        raise DomainError(
            f"n_eff must lie strictly inside ({g.n_clad!r}, {g.n_core!r}) "
            f"(got {n_eff!r})",
            field="n_eff",
        )
    k0a = 2.0 * math.pi * g.a / lambda0
    u = k0a * math.sqrt((g.n_core - n_eff) * (g.n_core + n_eff))
    w = k0a * math.sqrt((n_eff - g.n_clad) * (n_eff + g.n_clad))
    r = (g.n_clad / g.n_core) ** 2
    q = (n_eff / g.n_core) ** 2
    return _determinant(u, w, r, q)


# cached J1 zeros (pole positions of the determinant), extended on demand
_J1_ZEROS: list[float] = []


def _j1_zeros_below(limit: float) -> list[float]:
    k = len(_J1_ZEROS)
    while not _J1_ZEROS or _J1_ZEROS[-1] < limit:
        k += 1
        b = (k + 0.25) * math.pi
        guess = b - 3.0 / (8.0 * b)  # McMahon expansion
        lo, hi = guess - 0.4, guess + 0.4
        f = lambda x: bessel_j(1, x).value
        root, _ = bisect_to_float_limit(f, lo, hi)
        _J1_ZEROS.append(root)
        if k > 3200:  # ~1e4 / pi, the J domain cap
            raise SolverError("J1 zero cache exhausted")
    return [z for z in _J1_ZEROS if z < limit]


_J0_FIRST_ZERO: list[float] = []


def _j0_first_zero() -> float:
    if not _J0_FIRST_ZERO:
        root, _ = bisect_to_float_limit(lambda x: bessel_j(0, x).value, 2.0, 3.0)
        _J0_FIRST_ZERO.append(root)
    return _J0_FIRST_ZERO[0]


def _first_sign_change(
    f: Callable[[float], float], lo: float, hi: float
) -> tuple[float, float, float, float] | None:
    """Locate the leftmost bracketed sign change of f on [lo, hi] by
    progressively denser linear scans."""
    for n in _SCAN_POINTS:
        step = (hi - lo) / n
        x_prev = lo
        f_prev = f(x_prev)
        for i in range(1, n + 1):
            x = hi if i == n else lo + i * step
            fx = f(x)
            if fx == 0.0 or (fx > 0.0) != (f_prev > 0.0):
                return x_prev, x, f_prev, fx
            x_prev, f_prev = x, fx
    return None


def _mode_from_u(g: FiberGeometry, k0a: float, v: float, u: float, family: str) -> FiberMode:
    n_eff = math.sqrt(g.n_core * g.n_core - (u / k0a) ** 2)
    w = math.sqrt((v - u) * (v + u))
    return FiberMode(family=family, n_eff=n_eff, u=u, w=w, v=v)


def _polish_he11(g: FiberGeometry, lambda0: float, mode: FiberMode) -> FiberMode:
    """Nudge n_eff over a few neighbouring doubles to minimise the residual."""
    k0a = 2.0 * math.pi * g.a / lambda0
    best_n = mode.n_eff
    best_f = math.inf
    step = math.ulp(mode.n_eff)
    for k in range(-3, 4):
        n = mode.n_eff + k * step
        if not (g.n_clad < n < g.n_core):
            continue
        try:
            f = abs(he11_residual(g, lambda0, n))
        except (PoleError, DomainError):
            continue
        if f < best_f:
            best_f, best_n = f, n
    if best_n == mode.n_eff or not math.isfinite(best_f):
        return mode
    u = k0a * math.sqrt((g.n_core - best_n) * (g.n_core + best_n))
    w = k0a * math.sqrt((best_n - g.n_clad) * (best_n + g.n_clad))
    return FiberMode(family=mode.family, n_eff=best_n, u=u, w=w, v=mode.v)


def _solve_he11_small_v(
    g: FiberGeometry, lambda0: float, k0a: float, v: float
) -> FiberMode:
    # Solve in s = w**2: the determinant goes +inf as s -> 0 and -inf as
    # s -> v**2, so one downhill bracket always exists.
    r = (g.n_clad / g.n_core) ** 2
    nclad_sq = g.n_clad * g.n_clad
    ncore_sq = g.n_core * g.n_core
    inv_k0a_sq = 1.0 / (k0a * k0a)

    def f(s: float) -> float:
        u = math.sqrt(v * v - s)
        w = math.sqrt(s)
        q = (nclad_sq + s * inv_k0a_sq) / ncore_sq
        return _determinant(u, w, r, q)

    hi = v * v * (1.0 - _SHRINK)
    fhi = f(hi)
    lo = v * v * 1e-12
    flo = f(lo)
    while flo <= 0.0 and lo > v * v * 1e-30:
        lo *= 1e-3
        flo = f(lo)
    if flo <= 0.0 or fhi >= 0.0:
        raise SolverError(
            f"fundamental-mode bracket lost in the w**2 domain (v={v!r})"
        )
    s, _ = bisect_to_float_limit(f, lo, hi, flo, fhi)
    n_eff = math.sqrt(nclad_sq + s * inv_k0a_sq)
    mode = FiberMode(
        family=HE11,
        n_eff=n_eff,
        u=math.sqrt(v * v - s),
        w=math.sqrt(s),
        v=v,
    )
    return _polish_he11(g, lambda0, mode)


def solve_he11(g: FiberGeometry, lambda0: float) -> FiberMode:
    """Solve the exact hybrid fundamental mode.  Succeeds for every v > 0
    (the fundamental has no cutoff); failure to find the root is an
    internal error, never a valid outcome.
    """
    _check_lambda0(lambda0)
    k0a = 2.0 * math.pi * g.a / lambda0
    v = normalized_frequency(g, lambda0)
    if v < _SMALL_V:
        return _solve_he11_small_v(g, lambda0, k0a, v)

    r = (g.n_clad / g.n_core) ** 2
    ncore_sq = g.n_core * g.n_core
    inv_k0a_sq = 1.0 / (k0a * k0a)

    def f(u: float) -> float:
        # q = (n_eff/n_core)^2 with n_eff^2 = n_core^2 - (u/k0a)^2
        w_sq = (v - u) * (v + u)
        q = (ncore_sq - u * u * inv_k0a_sq) / ncore_sq
        return _determinant(u, math.sqrt(w_sq), r, q)

    u_top = v * (1.0 - _SHRINK)
    bounds = [0.0] + _j1_zeros_below(u_top) + [u_top]
    for seg_lo, seg_hi in zip(bounds, bounds[1:]):
        pad = (seg_hi - seg_lo) * 1e-9
        if seg_lo > 0.0:
            lo = seg_lo + pad
        else:
            # below ~1e-7 the determinant is a difference of ~1/u^4 terms
            # and its float sign is pure cancellation noise; the root
            # never sits there (u_root > 0.95 v for any index pair)
            lo = max(seg_hi * 1e-12, 1e-7)
        hi = seg_hi - pad if seg_hi < u_top else u_top
        found = _first_sign_change(f, lo, hi)
        if found is None:
            continue
        u, _ = bisect_to_float_limit(f, *found)
        mode = _mode_from_u(g, k0a, v, u, HE11)
        return _polish_he11(g, lambda0, mode)
    raise SolverError(
        f"no fundamental-mode root found for v={v!r}: solver defect "
        "(the fundamental has no cutoff)"
    )


def solve_lp01(g: FiberGeometry, lambda0: float) -> FiberMode:
    """Solve the scalar weak-guidance fundamental mode.

    The root lies on the first branch (u below the first J0 zero).  For
    v < 1 the search runs in ln(w) because w collapses exponentially; a
    root below the double-precision range (v smaller than about 0.06)
    raises SolverError.
    """
    _check_lambda0(lambda0)
    k0a = 2.0 * math.pi * g.a / lambda0
    v = normalized_frequency(g, lambda0)
    j0z = _j0_first_zero()

    def g_of_u(u: float) -> float:
        j0v = bessel_j(0, u).value
        if j0v == 0.0:
            raise PoleError(f"scalar relation evaluated at a J0 zero (u={u!r})")
        w = math.sqrt((v - u) * (v + u))
        k0v = bessel_k(0, w).value
        k1v = bessel_k(1, w).value
        return u * bessel_j(1, u).value / j0v - w * k1v / k0v

    if v >= 1.0:
        u_hi = min(v, j0z) * (1.0 - _SHRINK)
        u_lo = u_hi * 1e-8
        u, _ = bisect_to_float_limit(g_of_u, u_lo, u_hi)
        return _mode_from_u(g, k0a, v, u, LP01)

    # small v: solve in xi = ln(w); u stays pinned near v while w plunges
    def g_of_xi(xi: float) -> float:
        w = math.exp(xi)
        u = math.sqrt((v - w) * (v + w))
        j0v = bessel_j(0, u).value
        if j0v == 0.0:
            raise PoleError(f"scalar relation evaluated at a J0 zero (u={u!r})")
        k0v = bessel_k(0, w).value
        k1v = bessel_k(1, w).value
        return u * bessel_j(1, u).value / j0v - w * k1v / k0v

    xi_hi = math.log(v * (1.0 - 1e-9))
    xi_lo = -690.0
    f_lo = g_of_xi(xi_lo)
    if f_lo <= 0.0:
        raise SolverError(
            f"scalar fundamental root below double-precision range (v={v!r})"
        )
    xi, _ = bisect_to_float_limit(g_of_xi, xi_lo, xi_hi, f_lo, None)
    w = math.exp(xi)
    u = math.sqrt((v - w) * (v + w))
    n_eff = math.sqrt(g.n_clad * g.n_clad + (w / k0a) ** 2)
    return FiberMode(family=LP01, n_eff=n_eff, u=u, w=w, v=v)
