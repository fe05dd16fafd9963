"""Eigenvalue bookkeeping and single-photon kinematics."""

import math
import random

import pytest

from neffkit.errors import DomainError
from neffkit.quantities import (
    CONSTS,
    LIGHT_SPEED,
    PLANCK_H,
    make_eigenvalue_set,
    photon_state,
)


def test_reference_eigenvalue_set():
    ev = make_eigenvalue_set(1.55e-6, 2.0)
    assert ev.beta == pytest.approx(8107335.880231724, rel=1e-14)
    assert ev.lambda_eff == 0.775e-6  # division by 2 is exact
    assert ev.eps_eff == 4.0


def test_identity_case_unit_propagation_constant():
    # lambda0 = 2 pi um and n_eff = 1 give beta = 1 rad/um; the float
    # quotient lands within one ulp of 1e6 rad/m
    ev = make_eigenvalue_set(2.0 * math.pi * 1e-6, 1.0)
    assert abs(ev.beta - 1e6) <= math.ulp(1e6)


def test_effective_wavelength_compression():
    ev = make_eigenvalue_set(0.4e-6, 4.0)
    assert ev.lambda_eff == 1e-7


def test_reference_photon_state():
    ph = photon_state(make_eigenvalue_set(1.55e-6, 2.0))
    assert f"{ph.energy:.4e}" == "2.5632e-19"
    assert f"{ph.momentum:.4e}" == "8.5498e-28"


def test_vacuum_photon_energy():
    lambda0 = 0.6328e-6
    ph = photon_state(make_eigenvalue_set(lambda0, 1.0))
    assert ph.energy == PLANCK_H * LIGHT_SPEED / lambda0


def test_energy_momentum_ratio_is_c():
    rng = random.Random(1101)
    for _ in range(200):
        lambda0 = 10 ** rng.uniform(-6.4, -5.0)
        n_eff = rng.uniform(1.0, 4.0)
        ph = photon_state(make_eigenvalue_set(lambda0, n_eff))
        assert ph.energy / ph.momentum == pytest.approx(LIGHT_SPEED, rel=1e-12)


def test_angular_frequency_consistency():
    ev = make_eigenvalue_set(1.55e-6, 1.5)
    ph = photon_state(ev)
    assert ph.omega_eff == pytest.approx(2.0 * math.pi * LIGHT_SPEED / ev.lambda_eff, rel=1e-15)


def test_codata_constants_are_exact():
    assert CONSTS.h == 6.62607015e-34
    assert CONSTS.c == 299792458.0


@pytest.mark.parametrize("lambda0,n_eff", [(0.0, 1.0), (-1e-6, 1.0), (1e-6, 0.0), (1e-6, -2.0)])
def test_rejects_nonpositive_inputs(lambda0, n_eff):
    with pytest.raises(DomainError):
        make_eigenvalue_set(lambda0, n_eff)
