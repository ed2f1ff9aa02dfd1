from fractions import Fraction
from typing import Optional
import math
import logging

logger = logging.getLogger(__name__)

AMPLITUDE_DIGITS = 17


def format_amplitude(value: float) -> str:
    """
    Format an amplitude with 17 significant digits (enough to round-trip a double).

    Args:
        value: Real amplitude

    Returns:
        Decimal string, e.g. '0.55901699437494745'
    """
    value = float(value)
    if value == 0.0:
        return "0"
    return f"{value:.{AMPLITUDE_DIGITS}g}"


def parse_amplitude(text: str) -> float:
    """Inverse of format_amplitude."""
    return float(text)


def _sqrt_text(value: int) -> str:
    root = math.isqrt(value)
    if root * root == value:
        return str(root)
    return f"sqrt({value})"


def format_exact_sqrt(radicand: Fraction, sign: int = 1) -> Optional[str]:
    """
    Render sign * sqrt(radicand) as 'sqrt(5)/4', '-sqrt(7/20)', '1', ...

    Perfect-square numerators or denominators are pulled out of the root.
    """
    radicand = Fraction(radicand)
    if radicand < 0:
        return None
    if radicand == 0 or sign == 0:
        return "0"

    prefix = "-" if sign < 0 else ""
    numerator, denominator = radicand.numerator, radicand.denominator
    root_num, root_den = math.isqrt(numerator), math.isqrt(denominator)

    if root_den * root_den == denominator:
        top = _sqrt_text(numerator)
        return f"{prefix}{top}" if root_den == 1 else f"{prefix}{top}/{root_den}"
    if root_num * root_num == numerator:
        return f"{prefix}{root_num}/sqrt({denominator})"
    return f"{prefix}sqrt({numerator}/{denominator})"


def complex_pair(value: complex) -> tuple:
    """(re, im) with signed zeros flattened; used for JSON output of logical matrices."""
    value = complex(value)
    re = 0.0 if abs(value.real) < 1e-15 else float(value.real)
    im = 0.0 if abs(value.imag) < 1e-15 else float(value.imag)
    return re, im


def write_output(text: str, path: Optional[str] = None) -> None:
    """Write a payload to a file, or to stdout when no path is given."""
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info(f"✓ Wrote {path}")
    else:
        print(text, end="")
