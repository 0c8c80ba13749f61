"""Arbitrary-precision rationals.

All exponents, orders and base-field constants in the toolkit are exact
rationals.  gmpy2.mpq is used when available (it is interchangeable with
fractions.Fraction for our purposes and considerably faster); the stdlib
Fraction is the fallback.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ  # type: ignore[assignment]

QQ_ZERO = QQ(0)
QQ_ONE = QQ(1)


def qq(value) -> QQ:
    """Coerce ints, strings like '3/4', Fractions or mpqs to QQ."""
    if isinstance(value, str):
        return QQ(value)
    return QQ(value)


def qq_str(value) -> str:
    """Serialize a rational as 'p' or 'p/q' (always reduced, q > 0)."""
    return str(QQ(value))


def is_integer(value) -> bool:
    return QQ(value).denominator == 1
