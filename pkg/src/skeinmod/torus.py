"""Skein algebra of the thickened torus in the symmetrized curve basis.

Basis labels are pairs (p,q) of integers up to simultaneous sign flip; the
label (0,0) is not stored as a basis key but folded into a scalar `unit`
slot, twice the empty link. The product of two basis curves is a two-term
sum with monomial coefficients, and it is genuinely noncommutative until A
is specialized to a value with A^2 = A^-2.
"""

from __future__ import annotations

import re

from .laurent import LaurentPoly, format_laurent, parse_laurent


def _canon(p, q):
    # representative with p > 0, or p == 0 and q >= 0
    if p < 0 or (p == 0 and q < 0):
        return (-p, -q)
    return (p, q)


def fg_normalize(p, q):
    """Canonical label for (p,q) under (p,q) ~ (-p,-q).

    Returns (label, trivial_scalar). The scalar slot is None except for
    (0,0), whose curve class is not a basis key but the constant 2.
    """
    if (p, q) == (0, 0):
        return (0, 0), LaurentPoly.from_int(2)
    return _canon(p, q), None


def _as_poly(c):
    if isinstance(c, int):
        return LaurentPoly.from_int(c)
    if isinstance(c, LaurentPoly):
        return c
    raise TypeError(f"coefficient must be int or LaurentPoly, got {type(c).__name__}")


class FGElement:
    """Finite linear combination of curve classes with Laurent coefficients."""

    __slots__ = ("terms", "unit")

    def __init__(self, terms=None, unit=None):
        self.unit = _as_poly(unit) if unit is not None else LaurentPoly.zero()
        out = {}
        if terms:
            for (p, q), c in terms.items():
                c = _as_poly(c)
                if not c:
                    continue
                if (p, q) == (0, 0):
                    raise ValueError("(0,0) is not a basis key; use the unit slot")
                key = _canon(p, q)
                if key in out:
                    out[key] = out[key] + c
                    if not out[key]:
                        del out[key]
                else:
                    out[key] = c
        self.terms = out

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls(unit=1)

    @classmethod
    def basis(cls, p, q):
        """The curve class (p,q); (0,0) collapses to the scalar 2."""
        if (p, q) == (0, 0):
            return cls(unit=2)
        return cls({_canon(p, q): 1})

    @property
    def is_zero(self):
        return not self.terms and self.unit.is_zero

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, FGElement):
            return NotImplemented
        return self.unit == other.unit and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return FGElement({k: -v for k, v in self.terms.items()}, -self.unit)

    def __add__(self, other):
        if not isinstance(other, FGElement):
            return NotImplemented
        t = dict(self.terms)
        for k, v in other.terms.items():
            if k in t:
                s = t[k] + v
                if s:
                    t[k] = s
                else:
                    del t[k]
            else:
                t[k] = v
        out = FGElement.__new__(FGElement)
        out.terms = t
        out.unit = self.unit + other.unit
        return out

    def __sub__(self, other):
        if not isinstance(other, FGElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = _as_poly(c)
        if not c:
            return FGElement.zero()
        out = FGElement.__new__(FGElement)
        out.terms = {k: v * c for k, v in self.terms.items()}
        out.unit = self.unit * c
        return out

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, FGElement):
            return NotImplemented
        return fg_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def specialize_unit(self, u):
        """Coefficients at A = u for u in {1,-1}: (unit value, {label: int})."""
        t = {}
        for k, v in self.terms.items():
            n = v.eval_unit(u)
            if n:
                t[k] = n
        return self.unit.eval_unit(u), t

    def __str__(self):
        return format_fg(self)

    def __repr__(self):
        return f"FGElement({self.terms!r}, unit={self.unit!r})"


def _accumulate(store, key, coeff):
    if key in store:
        s = store[key] + coeff
        if s:
            store[key] = s
        else:
            del store[key]
    elif coeff:
        store[key] = coeff


def fg_multiply(x, y):
    """Product in the torus skein algebra.

    Each pair of curve classes contributes two terms, a sum label and a
    difference label, with opposite monomial twists. The order of the
    factors matters: swapping x and y flips every twist exponent.
    """
    out_terms = {}
    out_unit = x.unit * y.unit
    if x.unit:
        for k, v in y.terms.items():
            _accumulate(out_terms, k, x.unit * v)
    if y.unit:
        for k, v in x.terms.items():
            _accumulate(out_terms, k, v * y.unit)
    for (p, q), cx in x.terms.items():
        for (r, s), cy in y.terms.items():
            c = cx * cy
            det = p * s - q * r
            plus = _canon(p + r, q + s)
            minus = _canon(p - r, q - s)
            _accumulate(out_terms, plus, c.shift(det))
            if minus == (0, 0):
                out_unit = out_unit + 2 * c.shift(-det)
            else:
                _accumulate(out_terms, minus, c.shift(-det))
    out = FGElement.__new__(FGElement)
    out.terms = out_terms
    out.unit = out_unit
    return out


def fg_chebyshev_basis(p, q, d):
    """Image of the curve (p,q) under the degree-d first-kind recurrence.

    For gcd(p,q) = 1 this equals the basis class (d*p, d*q); that identity
    is what makes the curve basis multiplicative.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    # T(0) = 2 means the constant term lands on the unit slot with weight 2
    prev = FGElement(unit=2)
    if d == 0:
        return prev
    cur = FGElement.basis(p, q)
    for _ in range(d - 1):
        prev, cur = cur, fg_multiply(FGElement.basis(p, q), cur) - prev
    return cur


_BASIS_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def format_fg(el):
    """Text form like 'A*(1,1) + A^-1*(1,-1)', labels in descending order,
    scalar part last."""
    if el.is_zero:
        return "0"
    chunks = []
    for key in sorted(el.terms, reverse=True):
        poly = el.terms[key]
        label = f"({key[0]},{key[1]})"
        mono = len(poly._c) == 1
        if mono:
            (e, v), = poly._c.items()
            mag = abs(v)
            if e == 0:
                head = "" if mag == 1 else f"{mag}*"
            else:
                var = "A" if e == 1 else f"A^{e}"
                head = (var if mag == 1 else f"{mag}*{var}") + "*"
            chunks.append((v < 0, head + label))
        else:
            chunks.append((False, f"({format_laurent(poly)})*{label}"))
    if el.unit:
        if len(el.unit._c) == 1:
            (e, v), = el.unit._c.items()
            chunks.append((v < 0, format_laurent(-el.unit if v < 0 else el.unit)))
        else:
            chunks.append((False, f"({format_laurent(el.unit)})"))
    out = []
    for i, (negative, body) in enumerate(chunks):
        if i == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def _split_top_level(text):
    """Split a sum into signed chunks at depth-0 +/- signs."""
    chunks = []
    depth = 0
    cur = []
    sign = 1
    prev_sig = ""
    started = False
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        if ch in "+-" and depth == 0 and prev_sig != "^" and started:
            chunks.append((sign, "".join(cur).strip()))
            cur = []
            sign = 1 if ch == "+" else -1
            prev_sig = ""
            started = False
            continue
        if ch == "-" and depth == 0 and not started and not cur:
            sign = -sign
            prev_sig = ""
            continue
        cur.append(ch)
        if not ch.isspace():
            prev_sig = ch
            started = started or ch not in "+-"
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    tail = "".join(cur).strip()
    if tail:
        chunks.append((sign, tail))
    return chunks


def parse_fg(text):
    """Inverse of format_fg."""
    s = text.strip()
    if s == "0":
        return FGElement.zero()
    result = FGElement.zero()
    for sign, chunk in _split_top_level(s):
        m = _BASIS_RE.search(chunk)
        coeff_text = None
        key = None
        if m:
            head = chunk[: m.start()].rstrip()
            # a trailing pair of ints is a basis label unless the chunk is
            # itself just a parenthesized scalar
            key = (int(m.group(1)), int(m.group(2)))
            if head.endswith("*"):
                head = head[:-1].rstrip()
            coeff_text = head
        else:
            coeff_text = chunk
        if coeff_text == "":
            poly = LaurentPoly.one()
        else:
            if coeff_text.startswith("(") and coeff_text.endswith(")"):
                inner = coeff_text[1:-1]
                if inner.count("(") == inner.count(")") and "(" not in inner:
                    coeff_text = inner
            poly = parse_laurent(coeff_text)
        if sign < 0:
            poly = -poly
        if key is None:
            result = result + FGElement(unit=poly)
        elif key == (0, 0):
            result = result + FGElement(unit=2 * poly)
        else:
            result = result + FGElement({key: poly})
    return result
