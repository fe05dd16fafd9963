"""Bracketed bisection driven to the floating-point resolution limit."""

from __future__ import annotations

from typing import Callable

from .errors import SolverError


def bisect_to_float_limit(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    flo: float | None = None,
    fhi: float | None = None,
) -> tuple[float, float]:
    """Bisect a sign change of ``f`` on [lo, hi] until the bracket endpoints
    are adjacent doubles, then return (x, f(x)) for the endpoint with the
    smaller residual magnitude.

    The function must have opposite (or zero) signs at the endpoints.
    """
    if flo is None:
        flo = f(lo)
    if fhi is None:
        fhi = f(hi)
    if flo == 0.0:
        return lo, flo
    if fhi == 0.0:
        return hi, fhi
    if (flo > 0.0) == (fhi > 0.0):
        raise SolverError(
            f"no sign change on [{lo!r}, {hi!r}] (f: {flo!r} .. {fhi!r})"
        )
    pos_lo = flo > 0.0
    while True:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break  # endpoints are adjacent doubles
        fm = f(mid)
        if fm == 0.0:
            return mid, fm
        if (fm > 0.0) == pos_lo:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    if abs(flo) <= abs(fhi):
        return lo, flo
    return hi, fhi
