"""Light-source spectral model: center wavelength, FWHM linewidth, and the
derived coherence time and length.

A zero linewidth encodes an ideal monochromatic line.  Its infinite
coherence time/length are represented by the explicit marker ``None``,
never by an IEEE infinity, so downstream bound evaluation can branch on it
deterministically instead of hoping 0*inf works out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .quantities import LIGHT_SPEED

__all__ = ["LightSource", "CoherenceInfo", "coherence_info", "preset_sources"]


@dataclass(frozen=True, slots=True)
class LightSource:
    """Center vacuum wavelength and FWHM spectral width, SI units.

    delta_lambda = 0 encodes an ideal monochromatic (zero-linewidth) line.
    """

    lambda0: float
    delta_lambda: float = 0.0
    label: str = ""

    def __post_init__(self):
        if not (self.lambda0 > 0.0):
            raise DomainError(
                f"lambda0 must be positive (got {self.lambda0!r})", field="lambda0"
            )
        if not (self.delta_lambda >= 0.0):
            raise DomainError(
                f"delta_lambda must be non-negative (got {self.delta_lambda!r})",
                field="delta_lambda",
            )
        if not (self.delta_lambda < self.lambda0):
            raise DomainError(
                f"delta_lambda must be below lambda0 for the sub-octave model "
                f"(got {self.delta_lambda!r} vs {self.lambda0!r})",
                field="delta_lambda",
            )


@dataclass(frozen=True, slots=True)
class CoherenceInfo:
    """FWHM in frequency plus coherence time and length.

    coherence_time and coherence_length are None exactly when the source
    linewidth is zero (infinite coherence).
    """

    delta_nu: float
    coherence_time: float | None
    coherence_length: float | None


def coherence_info(src: LightSource) -> CoherenceInfo:
    """delta_nu = c*dl/l0**2, T_c = 1/delta_nu, L_c = l0**2/dl.

    A zero-linewidth source yields delta_nu = 0 and the None markers.
    """
    if src.delta_lambda == 0.0:
        return CoherenceInfo(delta_nu=0.0, coherence_time=None, coherence_length=None)
    delta_nu = LIGHT_SPEED * src.delta_lambda / (src.lambda0 * src.lambda0)
    return CoherenceInfo(
        delta_nu=delta_nu,
        coherence_time=1.0 / delta_nu,
        coherence_length=src.lambda0 * src.lambda0 / src.delta_lambda,
    )


def preset_sources() -> list[LightSource]:
    """Bundled example sources spanning short to effectively infinite
    coherence (L_c from a few microns up past a meter)."""
    return [
        LightSource(lambda0=850e-9, delta_lambda=80e-9, label="LED"),
        LightSource(lambda0=1.55e-6, delta_lambda=50e-9, label="SLD"),
        LightSource(lambda0=1.55e-6, delta_lambda=1e-12, label="single-frequency laser"),
        LightSource(lambda0=1.55e-6, delta_lambda=0.0, label="ideal line"),
    ]
