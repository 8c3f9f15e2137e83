"""Tiny blade-sum grammar for the command line: "c*eI^eJ^eK + ...".

Coefficients are rationals ("3", "-1/2"); blades are wedge-joined frame
labels ("e1^e3^e5"); a bare coefficient is a scalar term.  Whitespace is
free.  Errors carry the offending position.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FormParseError
from .forms import Form

_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<rat>\d+(?:/\d+)?)|(?P<blade>e\d+(?:\s*\^\s*e\d+)*)|(?P<star>\*))")


def parse_form(text: str, n: int) -> list:
    """Parse into homogeneous Forms (one per degree present, ascending)."""
    pos = 0
    terms = []  # (coeff, [indices])
    expect_term = True
    sign = 1
    coeff = None
    blade = None

    def flush(at):
        nonlocal sign, coeff, blade
        if coeff is None and blade is None:
            raise FormParseError("empty term", at)
        c = Fraction(coeff) if coeff is not None else Fraction(1)
        terms.append((sign * c, blade or []))
        sign, coeff, blade = 1, None, None

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise FormParseError("unrecognized token", pos)
            break
        if m.group("sign"):
            if not expect_term or coeff is not None or blade is not None:
                flush(pos)
            if m.group("sign") == "-":
                sign = -sign
            expect_term = True
        elif m.group("rat"):
            if coeff is not None or blade is not None:
                raise FormParseError("unexpected number", pos)
            coeff = m.group("rat")
            expect_term = False
        elif m.group("star"):
            if coeff is None or blade is not None:
                raise FormParseError("misplaced '*'", pos)
            expect_term = False
        else:
            if blade is not None:
                raise FormParseError("unexpected blade", pos)
            indices = [int(t[1:]) for t in re.split(r"\s*\^\s*", m.group("blade"))]
            for k in indices:
                if not 1 <= k <= n:
                    raise FormParseError(f"index e{k} outside 1..{n}", pos)
            blade = indices
            expect_term = False
        pos = m.end()
    if coeff is not None or blade is not None:
        flush(pos)
    elif not terms:
        raise FormParseError("empty expression", 0)

    by_degree = {}
    for c, indices in terms:
        d = len(indices)
        f = by_degree.get(d, Form(n, d)) + Form.blade(n, *indices, coeff=c)
        by_degree[d] = f
    return [by_degree[d] for d in sorted(by_degree) if not by_degree[d].is_zero()] \
        or [Form(n, 0)]


def parse_homogeneous(text: str, n: int, degree=None) -> Form:
    parts = parse_form(text, n)
    if len(parts) != 1:
        raise FormParseError("expected a homogeneous form", 0)
    f = parts[0]
    if degree is not None and f.degree != degree and not f.is_zero():
        raise FormParseError(f"expected degree {degree}, got {f.degree}", 0)
    return f


def render_form(f: Form) -> str:
    if f.is_zero():
        return "0"
    bits = []
    for blade, c in sorted(f.terms.items()):
        mono = "^".join(f"e{k}" for k in blade)
        if not mono:
            bits.append(str(c))
            continue
        if c == 1:
            bits.append(mono)
        elif c == -1:
            bits.append(f"-{mono}")
        else:
            bits.append(f"{c}*{mono}")
    out = " + ".join(bits)
    return out.replace("+ -", "- ")
