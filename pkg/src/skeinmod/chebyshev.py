"""Chebyshev-style recurrence polynomials, integer coefficients.

Both families satisfy P(n+1) = x*P(n) - P(n-1). The trace-normalized family
starts 2, x and turns power sums of eigenvalues into traces; the second kind
starts 1, x and shows up in the longitude expansions.

Polynomials are plain dicts mapping degree to int coefficient, zero
coefficients never stored.
"""

from __future__ import annotations

import re


def _recurrence(n, p_prev, p_cur):
    for _ in range(n):
        p_next = {}
        for e, v in p_cur.items():
            p_next[e + 1] = v
        for e, v in p_prev.items():
            p_next[e] = p_next.get(e, 0) - v
            if not p_next[e]:
                del p_next[e]
        p_prev, p_cur = p_cur, p_next
    return p_cur


def chebyshev_T(n):
    """First kind, trace normalization: T(0) = 2, T(1) = x."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("chebyshev_T needs n >= 0")
    if n == 0:
        return {0: 2}
    return _recurrence(n - 1, {0: 2}, {1: 1})


def chebyshev_S(n):
    """Second kind: S(0) = 1, S(1) = x, and S(-1) = 0 by convention."""
    if not isinstance(n, int) or n < -1:
        raise ValueError("chebyshev_S needs n >= -1")
    if n == -1:
        return {}
    if n == 0:
        return {0: 1}
    return _recurrence(n - 1, {0: 1}, {1: 1})


def poly_eval(poly, x, one=1):
    """Evaluate a degree->coefficient dict at a ring element x.

    `one` is the ring's multiplicative identity; the default works for any
    type that coerces Python ints.
    """
    total = x - x
    if 0 in poly:
        total = total + poly[0] * one
    power = one
    last = 0
    for e in sorted(k for k in poly if k > 0):
        for _ in range(e - last):
            power = power * x
        last = e
        total = total + poly[e] * power
    return total


def format_int_poly(poly, var="x"):
    """Render like 'x^2 - 2', exponents descending."""
    if not poly:
        return "0"
    out = []
    for i, e in enumerate(sorted(poly, reverse=True)):
        v = poly[e]
        mag = abs(v)
        if e == 0:
            body = str(mag)
        else:
            core = var if e == 1 else f"{var}^{e}"
            body = core if mag == 1 else f"{mag}*{core}"
        if i == 0:
            out.append(("-" if v < 0 else "") + body)
        else:
            out.append((" - " if v < 0 else " + ") + body)
    return "".join(out)


def parse_int_poly(text, var="x"):
    """Inverse of format_int_poly."""
    s = text.strip()
    if s == "0":
        return {}
    v = re.escape(var)
    term = re.compile(
        rf"""\s*(?P<sign>[+-])?\s*
             (?:
                 (?P<coeff>\d+)\s*(?:\*\s*(?P<var1>{v}(?:\^(?P<exp1>\d+))?))?
               | (?P<var2>{v}(?:\^(?P<exp2>\d+))?)
             )\s*""",
        re.X,
    )
    pos = 0
    poly = {}
    first = True
    while pos < len(s):
        m = term.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at: {s[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing +/- between terms in {text!r}")
        mult = -1 if m.group("sign") == "-" else 1
        if m.group("coeff") is not None:
            c = int(m.group("coeff"))
            var_part = m.group("var1")
            exp = m.group("exp1")
        else:
            c = 1
            var_part = m.group("var2")
            exp = m.group("exp2")
        e = 0 if var_part is None else (1 if exp is None else int(exp))
        poly[e] = poly.get(e, 0) + mult * c
        if not poly[e]:
            del poly[e]
        pos = m.end()
        first = False
    return poly
