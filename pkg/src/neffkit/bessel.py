"""Self-contained Bessel functions J0, J1, K0, K1 and first derivatives.

Double precision, orders 0 and 1 only (all the cylindrical mode solver
needs).  Each evaluation returns the value together with a conservative
estimate of its absolute error, so callers can reason about residual
tolerances instead of trusting magic.

Algorithm regions:
  J: ascending power series for x <= 12, Hankel asymptotic expansion above
     (summed to its smallest term).
  K: ascending log series for x < 2, Steed's continued fraction for the
     remainder up to the exp(-x) underflow guard at x = 700.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Final

from .errors import DomainError, UnderflowError

__all__ = [
    "SpecFunResult",
    "bessel_j",
    "bessel_k",
    "bessel_j_prime",
    "bessel_k_prime",
    "J_X_MAX",
    "K_X_MAX",
]

EULER_GAMMA: Final = 0.5772156649015328606
J_X_MAX: Final = 1.0e4
K_X_MAX: Final = 700.0
_J_SERIES_MAX: Final = 12.0  # series/asymptotic switch point
_K_SERIES_MAX: Final = 2.0  # series/continued-fraction switch point
_EPS: Final = 2.220446049250313e-16


@dataclass(frozen=True, slots=True)
class SpecFunResult:
    value: float
    est_abs_error: float


def _check_order(order: int) -> None:
    if order not in (0, 1):
        raise DomainError(f"order must be 0 or 1 (got {order!r})", field="order")


def _j_series(order: int, x: float) -> SpecFunResult:
    # J_n(x) = sum_k (-1)^k (x/2)^(n+2k) / (k! (n+k)!)
    q = 0.25 * x * x
    term = 0.5 * x if order == 1 else 1.0
    total = term
    peak = abs(term)
    for k in range(1, 200):
        term *= -q / (k * (k + order))
        total += term
        peak = max(peak, abs(term))
        if abs(term) <= 0.25 * _EPS * max(abs(total), 1e-300):
            break
    # rounding noise scales with the largest intermediate term
    est = 4.0 * _EPS * peak + abs(term)
    return SpecFunResult(total, est)


def _j_asymptotic(order: int, x: float) -> SpecFunResult:
    # Hankel expansion: J_n = sqrt(2/(pi x)) (P cos(chi) - Q sin(chi)),
    # chi = x - (2n+1) pi/4, terms a_j = a_{j-1} (mu - (2j-1)^2)/(8j),
    # truncated at the smallest term.
    mu = 4.0 * order * order
    chi = x - (2 * order + 1) * math.pi / 4.0
    a = 1.0
    p_sum, q_sum = 1.0, 0.0
    sign_p, sign_q = -1.0, 1.0
    xp = 1.0
    smallest = math.inf
    for j in range(1, 60):
        a *= (mu - (2 * j - 1) ** 2) / (8.0 * j)
        xp *= x
        term = a / xp
        if abs(term) >= smallest:
            break
        smallest = abs(term)
        if j % 2 == 1:
            q_sum += sign_q * term
            sign_q = -sign_q
        else:
            p_sum += sign_p * term
            sign_p = -sign_p
    amp = math.sqrt(2.0 / (math.pi * x))
    value = amp * (p_sum * math.cos(chi) - q_sum * math.sin(chi))
    # truncation + rounding + argument-reduction phase error
    est = amp * (smallest + 4.0 * _EPS * (abs(p_sum) + abs(q_sum)) + _EPS * x)
    return SpecFunResult(value, est)


def bessel_j(order: int, x: float) -> SpecFunResult:
    """Bessel function of the first kind, order 0 or 1, 0 <= x <= 1e4.

    The value is accurate to better than 1e-10 absolute over the whole
    supported range; est_abs_error is a conservative per-point estimate.
    """
    _check_order(order)
    if not (0.0 <= x <= J_X_MAX):
        raise DomainError(
            f"bessel_j requires 0 <= x <= {J_X_MAX:g} (got {x!r})", field="x"
        )
    if x <= _J_SERIES_MAX:
        return _j_series(order, x)
    return _j_asymptotic(order, x)


def _k_series(x: float) -> tuple[float, float]:
    # Ascending series for K0 and K1, x < 2.  h_k is the k-th harmonic number.
    q = 0.25 * x * x
    log_half_x = math.log(0.5 * x)

    # I0, I1 by the same loop
    i0_term = 1.0
    i0 = i0_term
    i1_sum_term = 1.0  # sum for I1/(x/2) = sum q^k/(k!(k+1)!)
    i1_sum = i1_sum_term
    # K0 sum: sum_{k>=1} h_k q^k/(k!)^2
    k0_sum = 0.0
    k0_term = 1.0
    # K1 sum: sum_{k>=0} (h_k + h_{k+1} - 2 gamma) q^k/(k!(k+1)!)
    h = 0.0
    k1_sum = (1.0 - 2.0 * EULER_GAMMA) * 1.0
    k1_term = 1.0
    for k in range(1, 80):
        h += 1.0 / k
        i0_term *= q / (k * k)
        i0 += i0_term
        i1_sum_term *= q / (k * (k + 1))
        i1_sum += i1_sum_term
        k0_term *= q / (k * k)
        k0_sum += h * k0_term
        k1_term *= q / (k * (k + 1))
        k1_sum += (2.0 * h + 1.0 / (k + 1) - 2.0 * EULER_GAMMA) * k1_term
        if i0_term <= 0.5 * _EPS * i0:
            break
    i1 = 0.5 * x * i1_sum
    k0 = -(log_half_x + EULER_GAMMA) * i0 + k0_sum
    k1 = 1.0 / x + log_half_x * i1 - 0.25 * x * k1_sum
    return k0, k1


def _k_cf2(x: float) -> tuple[float, float]:
    # Steed's continued fraction for K0, K1 at mu = 0 (2 <= x <= 700).
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1 = 0.0
    q2 = 1.0
    a1 = 0.25
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 10000):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < _EPS:
            break
    h = a1 * h
    k0 = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) / s
    k1 = k0 * (x + 0.5 - h) / x
    return k0, k1


def bessel_k(order: int, x: float) -> SpecFunResult:
    """Modified Bessel function of the second kind, order 0 or 1, 0 < x <= 700.

    Accurate to better than 1e-10 relative over the supported range; above
    x = 700 the exp(-x) factor underflows and an UnderflowError is raised.
    """
    _check_order(order)
    if not (x > 0.0):
        raise DomainError(f"bessel_k requires x > 0 (got {x!r})", field="x")
    if x > K_X_MAX:
        raise UnderflowError(
            f"bessel_k(order={order}, x={x!r}) underflows double precision (x > {K_X_MAX:g})"
        )
    if x < _K_SERIES_MAX:
        k0, k1 = _k_series(x)
    else:
        k0, k1 = _k_cf2(x)
    value = k1 if order == 1 else k0
    return SpecFunResult(value, 1e-14 * abs(value) + 1e-300)


def bessel_j_prime(order: int, x: float) -> SpecFunResult:
    """First derivative of J0 or J1 via J0' = -J1, J1' = J0 - J1/x."""
    _check_order(order)
    if order == 0:
        r = bessel_j(1, x)
        return SpecFunResult(-r.value, r.est_abs_error)
    if x == 0.0:
        return SpecFunResult(0.5, _EPS)  # series limit of J1'(x) at x = 0
    r0 = bessel_j(0, x)
    r1 = bessel_j(1, x)
    ratio = r1.value / x
    value = r0.value - ratio
    est = r0.est_abs_error + r1.est_abs_error / x + 2.0 * _EPS * (abs(ratio) + abs(value))
    return SpecFunResult(value, est)


def bessel_k_prime(order: int, x: float) -> SpecFunResult:
    """First derivative of K0 or K1 via K0' = -K1, K1' = -K0 - K1/x."""
    _check_order(order)
    if order == 0:
        r = bessel_k(1, x)
        return SpecFunResult(-r.value, r.est_abs_error)
    r0 = bessel_k(0, x)
    r1 = bessel_k(1, x)
    ratio = r1.value / x
    value = -r0.value - ratio
    est = r0.est_abs_error + r1.est_abs_error / x + 2.0 * _EPS * (abs(ratio) + abs(value))
    return SpecFunResult(value, est)
