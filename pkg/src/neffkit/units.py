"""Length parsing and formatting with SI unit suffixes.

Everything inside the package is strict SI (meters).  Unit suffixes exist
only at the human-facing boundary: config files, CLI flags, report text.
"""

from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation
from typing import Final

from .errors import DomainError

# Suffix -> meters.  "um" is accepted alongside the proper micro sign
# because most shells make µ annoying to type.
LENGTH_UNITS: Final[dict[str, float]] = {
    "pm": 1e-12,
    "nm": 1e-9,
    "um": 1e-6,
    "µm": 1e-6,
    "mm": 1e-3,
    "cm": 1e-2,
    "m": 1.0,
}

# Exact decimal scales for parsing, so "1550nm" lands on the same double as
# the literal 1550e-9 would (scale in decimal, round to binary once).
_UNIT_EXPONENTS: Final[dict[str, int]] = {
    "pm": -12,
    "nm": -9,
    "um": -6,
    "µm": -6,
    "mm": -3,
    "cm": -2,
    "m": 0,
}

_LENGTH_RE = re.compile(r"^\s*([+-]?[0-9.eE+-]+)\s*([a-zµ]*)\s*$")


def parse_length(text: str | float, field: str = "length") -> float:
    """Parse a length such as ``"1550nm"``, ``"1.55um"`` or a bare SI number.

    Returns meters.  A bare number (string or float) is taken as meters.
    """
    if isinstance(text, (int, float)):
        return float(text)
    m = _LENGTH_RE.match(text)
    if not m:
        raise DomainError(f"{field}: cannot parse length {text!r}", field=field)
    num, suffix = m.groups()
    try:
        value = Decimal(num)
    except InvalidOperation:
        raise DomainError(f"{field}: cannot parse number in {text!r}", field=field) from None
    if suffix == "":
        exponent = 0
    else:
        try:
            exponent = _UNIT_EXPONENTS[suffix]
        except KeyError:
            raise DomainError(
                f"{field}: unknown length unit {suffix!r} in {text!r} "
                f"(expected one of {', '.join(sorted(LENGTH_UNITS))})",
                field=field,
            ) from None
    try:
        return float(value.scaleb(exponent))
    except ArithmeticError:
        raise DomainError(f"{field}: length {text!r} out of range", field=field) from None


def format_length(meters: float, unit: str = "m", digits: int = 6) -> str:
    """Format a length in the requested unit, e.g. ``format_length(1.55e-6, "nm")``."""
    if unit not in LENGTH_UNITS:
        raise DomainError(f"unknown length unit {unit!r}", field="unit")
    return f"{meters / LENGTH_UNITS[unit]:.{digits}g}{unit}"
