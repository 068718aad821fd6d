"""Rendering of exact rationals and CSV tables."""

import csv
import io
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence


def decimal_string(q, digits: int = 6) -> str:
    """``q`` rounded to ``digits`` significant digits, trailing zeros dropped."""
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(q.numerator) / Decimal(q.denominator)
    text = format(d, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def fraction_string(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\r\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)
    return out.getvalue()
