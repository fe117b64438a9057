"""Text form for multivectors, e.g. ``1 + 0.5 e12 - 0.25 e1234``.

Grammar (whitespace between tokens is ignored)::

    expr   = [sign] term { sign term }
    sign   = "+" | "-"
    term   = number [blade] | blade
    blade  = "e" digit {digit}     e.g. "e12" for the blade on generators 1,2
    number = decimal, optionally with an exponent part

Blade digits are 1-based generator indices and must be strictly ascending.
An exponent part must carry an explicit sign ("1e+3"), because a bare "e"
followed by digits always denotes a blade: "1e12" is the coefficient 1 on
e^{12}, not 10^12.

Serialisation is canonical: terms in blade-mask order, zero coefficients
dropped, the zero element rendered as "0", and each coefficient printed as
the shortest decimal that parses back to the same float, so
``parse(serialize(u), u.sig) == u`` holds coefficient-exactly.
"""

from __future__ import annotations

import math
import re

from .algebra import Multivector, Signature

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]\d+)?")
_BLADE = re.compile(r"e(\d+)")


class MvParseError(ValueError):
    """Malformed multivector text; carries the 0-based character offset."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _blade_mask(digits: str, sig: Signature, position: int) -> int:
    mask = 0
    prev = 0
    for d in digits:
        index = int(d)
        if index == 0:
            raise MvParseError("blade indices are 1-based, found 0", position)
        if index > sig.n:
            raise MvParseError(f"blade index {index} out of range for {sig}", position)
        if index == prev:
            raise MvParseError(f"repeated blade index {index}", position)
        if index < prev:
            raise MvParseError("blade indices must be strictly ascending", position)
        mask |= 1 << (index - 1)
        prev = index
    return mask


def parse(text: str, sig: Signature) -> Multivector:
    """Parse the grammar above into a multivector over sig.

    Terms on the same blade are summed, so "e12 + e12" has coefficient 2.
    """
    coeffs = [0.0] * sig.dim
    pos = _skip_ws(text, 0)
    if pos == len(text):
        raise MvParseError("empty expression", pos)
    first = True
    while pos < len(text):
        sign = 1.0
        if text[pos] in "+-":
            sign = 1.0 if text[pos] == "+" else -1.0
            pos = _skip_ws(text, pos + 1)
        elif not first:
            raise MvParseError("expected '+' or '-' between terms", pos)
        coeff = None
        number = _NUMBER.match(text, pos)
        if number:
            coeff = float(number.group(0))
            pos = number.end()
        blade_pos = _skip_ws(text, pos)
        blade = _BLADE.match(text, blade_pos)
        if blade:
            mask = _blade_mask(blade.group(1), sig, blade_pos)
            pos = blade.end()
        elif blade_pos < len(text) and text[blade_pos] == "e":
            raise MvParseError("blade needs at least one index digit", blade_pos)
        elif coeff is None:
            raise MvParseError("expected a number or a blade", pos)
        else:
            mask = 0
        coeffs[mask] += sign * (1.0 if coeff is None else coeff)
        first = False
        pos = _skip_ws(text, pos)
    return Multivector(sig, coeffs)


def format_float(value: float) -> str:
    """Shortest decimal that round-trips through float()."""
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite value {value!r}")
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def serialize(u: Multivector) -> str:
    """Canonical text form; inverse of parse on its own output."""
    parts: list[str] = []
    for mask in range(u.sig.dim):
        c = float(u.coeffs[mask])
        if c == 0.0:
            continue
        body = format_float(abs(c))
        if mask:
            indices = "".join(str(i + 1) for i in range(u.sig.n) if mask >> i & 1)
            body = f"{body} e{indices}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
