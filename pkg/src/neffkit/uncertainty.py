"""Lower bounds on eigenvalue uncertainty from spatial localization and
source coherence.

The core quantity is the minimum spread of the effective index once a mode
is confined to a transverse extent delta_x and illuminated by a source of
coherence length L_c:

    min_delta_neff = max(0, lambda0/(4*pi*delta_x) - lambda0*n_eff/L_c)

The first (confinement) term is the zero-linewidth bound; the second
(coherence) term erodes it for finite-linewidth sources.  A negative raw
value bounds nothing and is clamped to zero with an explicit vacuous flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Final

from .errors import DomainError
from .quantities import HBAR

__all__ = [
    "WELL_DEFINED",
    "MARGINAL",
    "FUZZY",
    "BoundInputs",
    "UncertaintyReport",
    "dirac_bound_neff",
    "dirac_bound_lambda_eff",
    "delta_beta_spectral",
    "delta_beta_coherence",
    "bound_neff",
    "classify",
    "term_magnitudes",
    "definability_limit",
    "measurement_duration",
]

WELL_DEFINED: Final = "WellDefined"
MARGINAL: Final = "Marginal"
FUZZY: Final = "Fuzzy"

DEFAULT_MODAL_WINDOW: Final = 3.0  # span of the common guided-index range


def _require_positive(value: float, field: str) -> None:
    if not (value > 0.0):
        raise DomainError(f"{field} must be positive (got {value!r})", field=field)


def _require_non_negative(value: float, field: str) -> None:
    if not (value >= 0.0):
        raise DomainError(f"{field} must be non-negative (got {value!r})", field=field)


def _check_coherence_length(coherence_length: float | None) -> None:
    if coherence_length is not None:
        _require_positive(coherence_length, "coherence_length")


@dataclass(frozen=True, slots=True)
class BoundInputs:
    """Inputs to the uncertainty bound.  coherence_length None means an
    ideal zero-linewidth source (infinite coherence)."""

    lambda0: float
    n_eff: float
    delta_x: float
    coherence_length: float | None = None
    delta_lambda0: float = 0.0

    def __post_init__(self):
        _require_positive(self.lambda0, "lambda0")
        _require_positive(self.n_eff, "n_eff")
        _require_positive(self.delta_x, "delta_x")
        _check_coherence_length(self.coherence_length)
        _require_non_negative(self.delta_lambda0, "delta_lambda0")


@dataclass(frozen=True, slots=True)
class UncertaintyReport:
    """Evaluated bound with its two competing terms and a verdict."""

    min_delta_neff: float
    confinement_term: float
    coherence_term: float
    ratio_lambda_dx: float
    ratio_lambda_lc: float
    vacuous: bool
    classification: str


def dirac_bound_neff(lambda0: float, delta_x: float) -> float:
    """Minimum effective-index spread for a zero-linewidth source:
    lambda0/(4*pi*delta_x)."""
    _require_positive(lambda0, "lambda0")
    _require_positive(delta_x, "delta_x")
    return lambda0 / (4.0 * math.pi * delta_x)


def dirac_bound_lambda_eff(lambda_eff: float, delta_x: float) -> float:
    """Minimum effective-wavelength spread for a zero-linewidth source:
    lambda_eff**2/(4*pi*delta_x)."""
    _require_positive(lambda_eff, "lambda_eff")
    _require_positive(delta_x, "delta_x")
    return lambda_eff * lambda_eff / (4.0 * math.pi * delta_x)


def delta_beta_spectral(
    lambda0: float, n_eff: float, delta_neff: float, delta_lambda0: float
) -> float:
    """Propagation-constant spread from index and wavelength spreads:
    2*pi*(delta_neff/lambda0 + n_eff*delta_lambda0/lambda0**2).

    Both contributions enter with positive sign (absolute-error budget, not
    a signed differential)."""
    _require_positive(lambda0, "lambda0")
    _require_positive(n_eff, "n_eff")
    _require_non_negative(delta_neff, "delta_neff")
    _require_non_negative(delta_lambda0, "delta_lambda0")
    return 2.0 * math.pi * (
        delta_neff / lambda0 + n_eff * delta_lambda0 / (lambda0 * lambda0)
    )


def delta_beta_coherence(
    lambda0: float,
    n_eff: float,
    delta_neff: float,
    coherence_length: float | None,
) -> float:
    """Propagation-constant spread with the wavelength term recast through
    the coherence length: 2*pi*(n_eff/L_c + delta_neff/lambda0).

    An infinite L_c (None) drops the coherence term exactly."""
    _require_positive(lambda0, "lambda0")
    _require_positive(n_eff, "n_eff")
    _require_non_negative(delta_neff, "delta_neff")
    _check_coherence_length(coherence_length)
    if coherence_length is None:
        return 2.0 * math.pi * (delta_neff / lambda0)
    return 2.0 * math.pi * (n_eff / coherence_length + delta_neff / lambda0)


def classify(min_delta_neff: float, modal_window: float) -> str:
    """Verdict for a bound value against the caller's definability scale."""
    _require_positive(modal_window, "modal_window")
    if min_delta_neff < 0.01 * modal_window:
        return WELL_DEFINED
    if min_delta_neff > modal_window:
        return FUZZY
    return MARGINAL


def bound_neff(
    inputs: BoundInputs, modal_window: float = DEFAULT_MODAL_WINDOW
) -> UncertaintyReport:
    """Evaluate the localization/coherence lower bound on delta_n_eff."""
    _require_positive(modal_window, "modal_window")
    lambda0 = inputs.lambda0
    confinement = lambda0 / (4.0 * math.pi * inputs.delta_x)
    if inputs.coherence_length is None:
        coherence = 0.0
        ratio_lc = 0.0
    else:
        coherence = lambda0 * inputs.n_eff / inputs.coherence_length
        ratio_lc = lambda0 / inputs.coherence_length
    raw = confinement - coherence
    vacuous = raw < 0.0
    min_delta = 0.0 if vacuous else raw
    return UncertaintyReport(
        min_delta_neff=min_delta,
        confinement_term=confinement,
        coherence_term=coherence,
        ratio_lambda_dx=lambda0 / inputs.delta_x,
        ratio_lambda_lc=ratio_lc,
        vacuous=vacuous,
        classification=classify(min_delta, modal_window),
    )


def term_magnitudes(
    lambda0: float, delta_x: float, coherence_length: float | None
) -> tuple[float, float]:
    """The two dimensionless competition ratios (lambda0/delta_x,
    lambda0/L_c); the second is 0 for infinite coherence."""
    _require_positive(lambda0, "lambda0")
    _require_positive(delta_x, "delta_x")
    _check_coherence_length(coherence_length)
    if coherence_length is None:
        return lambda0 / delta_x, 0.0
    return lambda0 / delta_x, lambda0 / coherence_length


def definability_limit(
    lambda0: float,
    n_eff: float,
    coherence_length: float | None,
    threshold: float,
) -> float:
    """Localization scale below which the bound exceeds ``threshold``:
    delta_x* = 1/(4*pi*(threshold/lambda0 + n_eff/L_c))."""
    _require_positive(lambda0, "lambda0")
    _require_positive(n_eff, "n_eff")
    _require_positive(threshold, "threshold")
    _check_coherence_length(coherence_length)
    denom = threshold / lambda0
    if coherence_length is not None:
        denom += n_eff / coherence_length
    return 1.0 / (4.0 * math.pi * denom)


def measurement_duration(delta_e: float) -> float:
    """Timescale hbar/(2*delta_E) associated with resolving an energy
    spread delta_E (J)."""
    _require_positive(delta_e, "delta_e")
    return HBAR / (2.0 * delta_e)
