"""Text form for exact polynomials, with a round-tripping parser.

Grammar (ascending powers, exact fractions everywhere):

    poly     ::= ["-"] term { (" + " | " - ") term }
    term     ::= rational                      constant term, e.g.  1/6
               | ["-"] var_pow                 unit coefficient, e.g.  -x^2
               | "(" inner ")" "*" var_pow     e.g.  (-1/12)*a,  (-a)*x
               | "(" inner ")"                 parenthesized constant term
    var_pow  ::= ("a" | "x") [ "^" int ]
    inner    ::= poly | rational
    rational ::= ["-"] int [ "/" int ]

Polynomials in ``a`` print like ``(-1/12)*a + (1/4)*a^2``; polynomials in
``x`` like ``1/6 - x + x^2``.  Elements of QQ[a][x] parenthesize their
``a``-coefficients: ``((-1/12)*a + (1/4)*a^2) + (-a)*x + x^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import _VAR_RANK, Poly, monomial


class PolyParseError(ValueError):
    """Raised when text does not match the polynomial grammar."""


_FRACTION_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_TERM_RE = re.compile(r"^(?:(?P<num>\d+(?:/\d+)?)\s*(?:\*\s*)?)?(?P<var>[ax])?(?:\^(?P<exp>\d+))?$")
_VARPOW_RE = re.compile(r"^\*\s*(?P<var>[ax])(?:\^(?P<exp>\d+))?$")


def format_fraction(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Parse ``[-]p/q`` or ``[-]p``; rejects anything else, including q = 0."""
    text = text.strip()
    if not _FRACTION_RE.match(text):
        raise PolyParseError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise PolyParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _term_text(coeff, var: str, k: int) -> str:
    if k == 0:
        if isinstance(coeff, Poly):
            return f"({format_poly(coeff)})"
        return format_fraction(coeff)
    vtxt = var if k == 1 else f"{var}^{k}"
    if isinstance(coeff, Poly):
        return f"({format_poly(coeff)})*{vtxt}"
    if coeff == 1:
        return vtxt
    if coeff == -1:
        return f"-{vtxt}"
    return f"({format_fraction(coeff)})*{vtxt}"


def format_poly(p) -> str:
    """Render a Poly (or bare rational) in the documented text grammar."""
    if not isinstance(p, Poly):
        return format_fraction(p)
    parts = []
    for k, c in enumerate(p.coeffs):
        if isinstance(c, Poly):
            if c.is_zero():
                continue
            if c.degree <= 0:
                c = c.constant()
        elif not c:
            continue
        parts.append(_term_text(c, p.var, k))
    if not parts:
        return "0"
    out = [parts[0]]
    for t in parts[1:]:
        if t.startswith("-"):
            out.append(f" - {t[1:]}")
        else:
            out.append(f" + {t}")
    return "".join(out)


def _split_terms(text: str):
    """Split into (sign, fragment) pairs at depth-0 +/- operators."""
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial text")
    terms = []
    i = 0
    cur_sign = 1
    if s[0] in "+-":
        cur_sign = -1 if s[0] == "-" else 1
        i = 1
    depth = 0
    buf: list[str] = []
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise PolyParseError(f"unbalanced parentheses in {text!r}")
        if depth == 0 and ch in "+-":
            terms.append((cur_sign, "".join(buf).strip()))
            cur_sign = -1 if ch == "-" else 1
            buf = []
        else:
            buf.append(ch)
        i += 1
    if depth != 0:
        raise PolyParseError(f"unbalanced parentheses in {text!r}")
    terms.append((cur_sign, "".join(buf).strip()))
    if any(not frag for _, frag in terms):
        raise PolyParseError(f"empty term in {text!r}")
    return terms


def _parse_term(sign: int, frag: str):
    if frag.startswith("("):
        depth = 0
        close = -1
        for i, ch in enumerate(frag):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    close = i
                    break
        if close < 0:
            raise PolyParseError(f"unbalanced parentheses in term {frag!r}")
        coeff = parse_poly(frag[1:close])
        rest = frag[close + 1 :].strip()
        if not rest:
            return coeff * sign
        m = _VARPOW_RE.match(rest)
        if not m:
            raise PolyParseError(f"malformed term {frag!r}")
        var = m.group("var")
        k = int(m.group("exp") or 1)
        if isinstance(coeff, Poly) and _VAR_RANK[coeff.var] >= _VAR_RANK[var]:
            raise PolyParseError(f"coefficient in {coeff.var!r} cannot multiply {var!r} in {frag!r}")
        return monomial(var, k, coeff) * sign
    m = _TERM_RE.match(frag)
    if not m or (m.group("num") is None and m.group("var") is None):
        raise PolyParseError(f"malformed term {frag!r}")
    if m.group("var") is None and m.group("exp") is not None:
        raise PolyParseError(f"exponent without variable in {frag!r}")
    num = m.group("num")
    coeff = parse_fraction(num) if num is not None else Fraction(1)
    coeff *= sign
    if m.group("var") is None:
        return coeff
    return monomial(m.group("var"), int(m.group("exp") or 1), coeff)


def parse_poly(text: str, var: str | None = None):
    """Parse the text grammar back into a Poly (or Fraction for constants).

    ``var`` optionally lifts a constant / lower-variable result into the
    named variable, so round trips land in the expected ring level.
    """
    total = Fraction(0)
    for sign, frag in _split_terms(text):
        total = _parse_term(sign, frag) + total
    if var is not None:
        if isinstance(total, Poly):
            if total.var != var:
                if _VAR_RANK[total.var] > _VAR_RANK[var]:
                    raise PolyParseError(f"parsed a {total.var!r} polynomial where {var!r} was expected")
                total = Poly(var, (total,))
        else:
            total = Poly(var, (total,))
    return total
