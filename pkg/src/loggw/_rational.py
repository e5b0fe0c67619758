from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal notation is not exact: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_rational(value: Rational) -> str:
    return str(Fraction(value))
