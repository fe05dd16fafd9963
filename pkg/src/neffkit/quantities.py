"""Physical constants and conversions between guided-mode eigenvalue forms.

A mode is fully specified by (vacuum wavelength, effective index); the
propagation constant, effective wavelength and effective permittivity are
derived views of the same eigenvalue.  Photon energy and momentum follow
from the effective wavelength.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Final

from .errors import DomainError

__all__ = [
    "PLANCK_H",
    "HBAR",
    "LIGHT_SPEED",
    "CONSTS",
    "PhysConsts",
    "EigenvalueSet",
    "PhotonState",
    "make_eigenvalue_set",
    "photon_state",
]

# CODATA-2018 exact definitions (SI).
PLANCK_H: Final = 6.62607015e-34  # J*s
LIGHT_SPEED: Final = 299792458.0  # m/s
HBAR: Final = PLANCK_H / (2.0 * math.pi)  # J*s


@dataclass(frozen=True, slots=True)
class PhysConsts:
    h: float = PLANCK_H
    hbar: float = HBAR
    c: float = LIGHT_SPEED


CONSTS: Final = PhysConsts()


@dataclass(frozen=True, slots=True)
class EigenvalueSet:
    """One guided-mode eigenvalue in its five equivalent representations.

    All fields are SI.  beta = 2*pi*n_eff/lambda0, lambda_eff = lambda0/n_eff,
    eps_eff = n_eff**2.
    """

    lambda0: float
    n_eff: float
    beta: float
    lambda_eff: float
    eps_eff: float


@dataclass(frozen=True, slots=True)
class PhotonState:
    """Energy, momentum and effective angular frequency of one guided photon."""

    energy: float
    momentum: float
    omega_eff: float


def make_eigenvalue_set(lambda0: float, n_eff: float) -> EigenvalueSet:
    """Build the full eigenvalue representation from (lambda0, n_eff).

    lambda0 is the vacuum wavelength in meters, n_eff the dimensionless
    effective index.  Both must be strictly positive.
    """
    if not (lambda0 > 0.0):
        raise DomainError(f"lambda0 must be positive (got {lambda0!r})", field="lambda0")
    if not (n_eff > 0.0):
        raise DomainError(f"n_eff must be positive (got {n_eff!r})", field="n_eff")
    return EigenvalueSet(
        lambda0=lambda0,
        n_eff=n_eff,
        beta=2.0 * math.pi * n_eff / lambda0,
        lambda_eff=lambda0 / n_eff,
        eps_eff=n_eff * n_eff,
    )


def photon_state(ev: EigenvalueSet) -> PhotonState:
    """Photon energy, momentum and effective angular frequency for a mode.

    energy = h*c/lambda_eff, momentum = h/lambda_eff (so energy = momentum*c
    identically), omega_eff = 2*pi*c/lambda_eff.
    """
    return PhotonState(
        energy=PLANCK_H * LIGHT_SPEED / ev.lambda_eff,
        momentum=PLANCK_H * ev.n_eff / ev.lambda0,
        omega_eff=2.0 * math.pi * LIGHT_SPEED / ev.lambda_eff,
    )
