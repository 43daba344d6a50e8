"""Boundary-driven rewriting for a skein module with two torus boundary
components and three module generators.

Elements are finite sums c * (a,b,c,d) * g where (a,b) and (c,d) are curve
classes on the first and second boundary torus and g is one of the module
generators 'e' (empty), 'x1', 'x2'. Labels multiply by the two-term
product-to-sum rule applied blindly per component; the pair (0,0) is kept
as an ordinary label and never collapsed to a scalar, which keeps every
rewriting identity an exact statement about the underlying module.

Reduction is driven by a two-part complexity measure attached to a choice
of slopes (a1,b1), (a2,b2). Every rewrite strictly decreases the measure,
so normal forms exist and the labels that survive live in a box bounded by
the slopes, which is the finite-generation statement in computational form.
"""

from __future__ import annotations

import re
from collections import namedtuple
from fractions import Fraction
from math import gcd

from .laurent import LaurentPoly, parse_laurent, parse_laurent_fraction
from .torus import _split_top_level

GENS = ("e", "x1", "x2")
_GEN_RANK = {"e": 0, "x1": 1, "x2": 2}


def _canon_pair(p, q):
    if p < 0 or (p == 0 and q < 0):
        return (-p, -q)
    return (p, q)


def normalize_label(label):
    """Canonical form of (a,b,c,d): each pair taken up to simultaneous sign flip."""
    a, b, c, d = label
    return _canon_pair(a, b) + _canon_pair(c, d)


class SlopeData:
    """A pair of boundary slopes under which reduction terminates.

    Requires a1 > 0, b1 < 0, both pairs coprime, and the strict gap
    1 - b1/a1 > max(|1 + b2/a2|, |1 - b2/a2|). The gap is what makes the
    mixed rewrite outputs lose more on the first boundary than they can
    gain on the second.
    """

    __slots__ = ("a1", "b1", "a2", "b2")

    def __init__(self, a1, b1, a2, b2):
        for name, val in (("a1", a1), ("b1", b1), ("a2", a2), ("b2", b2)):
            if not isinstance(val, int):
                raise TypeError(f"{name} must be an integer")
        if a1 <= 0 or b1 >= 0:
            raise ValueError("first slope needs a1 > 0 and b1 < 0")
        if a2 <= 0:
            raise ValueError("second slope needs a2 > 0")
        if gcd(a1, b1) != 1 or gcd(a2, b2) != 1:
            raise ValueError("slope pairs must be coprime")
        gap = 1 - Fraction(b1, a1)
        ratio = Fraction(b2, a2)
        if not gap > max(abs(1 + ratio), abs(1 - ratio)):
            raise ValueError(
                f"slopes ({a1},{b1}),({a2},{b2}) violate the strict reduction inequality"
            )
        self.a1, self.b1, self.a2, self.b2 = a1, b1, a2, b2

    def __repr__(self):
        return f"SlopeData(({self.a1},{self.b1}),({self.a2},{self.b2}))"

    def __eq__(self, other):
        if not isinstance(other, SlopeData):
            return NotImplemented
        return (self.a1, self.b1, self.a2, self.b2) == (other.a1, other.b1, other.a2, other.b2)

    __hash__ = None


Complexity = namedtuple("Complexity", "c neg_c1")


def _forms(label, slopes):
    a, b, c, d = label
    return abs(slopes.a1 * b - slopes.b1 * a), abs(slopes.a2 * d - slopes.b2 * c)


def complexity(label, slopes):
    """Lexicographic measure (c1/a1 + c2/a2, -c1) with c_i = |a_i q - b_i p|."""
    c1, c2 = _forms(label, slopes)
    return Complexity(Fraction(c1, slopes.a1) + Fraction(c2, slopes.a2), Fraction(-c1))


def is_reduced_label(label, slopes):
    """True when neither rewrite applies: c1 <= 2(a1-b1) and c2 <= 2a2."""
    c1, c2 = _forms(label, slopes)
    return c1 <= 2 * (slopes.a1 - slopes.b1) and c2 <= 2 * slopes.a2


class NotReducible(Exception):
    """Raised when a label sits inside the irreducible box."""


class StepBudgetExceeded(Exception):
    """Raised when normalize runs out of steps; carries the partial element."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


def _coeff_is_zero(c):
    return c == 0


class ModuleElement:
    """Finite sum of labelled generator terms with coefficients in Q(A).

    Coefficients are LaurentPoly values when integral and LaurentFraction
    otherwise; both mix freely. Keys are ((a,b,c,d), gen) with the label
    stored in canonical form.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        if terms:
            for (label, gen), coeff in terms.items():
                if gen not in _GEN_RANK:
                    raise ValueError(f"unknown generator {gen!r}")
                if isinstance(coeff, int):
                    coeff = LaurentPoly.from_int(coeff)
                if _coeff_is_zero(coeff):
                    continue
                key = (normalize_label(tuple(label)), gen)
                if key in out:
                    s = out[key] + coeff
                    if _coeff_is_zero(s):
                        del out[key]
                    else:
                        out[key] = s
                else:
                    out[key] = coeff
        self.terms = out

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def term(cls, label, gen, coeff=1):
        return cls({(tuple(label), gen): coeff})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return not self.is_zero

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[k] == v for k, v in self.terms.items())

    __hash__ = None

    def __neg__(self):
        out = ModuleElement.__new__(ModuleElement)
        out.terms = {k: -v for k, v in self.terms.items()}
        return out

    def __add__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        t = dict(self.terms)
        for k, v in other.terms.items():
            if k in t:
                s = t[k] + v
                if _coeff_is_zero(s):
                    del t[k]
                else:
                    t[k] = s
            else:
                t[k] = v
        out = ModuleElement.__new__(ModuleElement)
        out.terms = t
        return out

    def __sub__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = LaurentPoly.from_int(coeff)
        if _coeff_is_zero(coeff):
            return ModuleElement.zero()
        out = ModuleElement.__new__(ModuleElement)
        out.terms = {k: v * coeff for k, v in self.terms.items()}
        return out

    def items(self):
        """Terms in a deterministic order: by generator, then label."""
        return sorted(self.terms.items(), key=lambda kv: (_GEN_RANK[kv[0][1]], kv[0][0]))

    def __str__(self):
        return format_module_element(self)

    def __repr__(self):
        return f"ModuleElement({format_module_element(self)!r})"


def format_module_element(e):
    if e.is_zero:
        return "0"
    chunks = []
    for (label, gen), coeff in e.items():
        text = str(coeff)
        neg = False
        if " " not in text:
            # single monomial, safe to pull a leading sign out of the chunk
            if text.startswith("-"):
                neg = True
                text = text[1:]
            head = "" if text == "1" else text + "*"
        else:
            head = "(" + text + ")*"
        body = f"{head}({label[0]},{label[1]},{label[2]},{label[3]})*{gen}"
        if not chunks:
            chunks.append(("- " if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


_TERM_TAIL = re.compile(
    r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*\*\s*(e|x1|x2)\s*$"
)


def parse_module_element(text):
    """Inverse of format_module_element; accepts `coeff*(a,b,c,d)*gen` summands."""
    text = text.strip()
    if text == "0" or not text:
        return ModuleElement.zero()
    acc = ModuleElement.zero()
    for sign, chunk in _split_top_level(text):
        m = _TERM_TAIL.search(chunk)
        if not m:
            raise ValueError(f"cannot parse module term {chunk!r}")
        label = tuple(int(m.group(i)) for i in range(1, 5))
        gen = m.group(5)
        head = chunk[: m.start()].strip()
        head = head.rstrip("*").strip()
        if head.startswith("(") and head.endswith(")") and "(" not in head[1:-1]:
            head = head[1:-1].strip()
        if not head:
            coeff = LaurentPoly.from_int(1)
        else:
            try:
                coeff = parse_laurent(head)
            except ValueError:
                coeff = parse_laurent_fraction(head)
        if sign < 0:
            coeff = -coeff
        acc = acc + ModuleElement.term(label, gen, coeff)
    return acc


Relation = namedtuple("Relation", "index lhs rhs")


def f12_relations():
    """The six module identities, as left/right hand ModuleElements.

    (1) the second-boundary fiber equals the first-boundary fiber on 'e';
    (2) a four-term mixed-boundary identity on 'e';
    (3),(4) the fiber identity of (1) on x1 and on x2;
    (5),(6) the cross identities trading x1 against x2.
    """
    A = LaurentPoly.A
    rels = [
        Relation(1, ModuleElement.term((0, 0, 0, 1), "e"), ModuleElement.term((0, 1, 0, 0), "e")),
        Relation(
            2,
            ModuleElement(
                {
                    ((1, 1, 0, 0), "e"): A(1),
                    ((0, 0, 1, -1), "e"): A(-1),
                    ((0, 0, 1, 1), "e"): -A(1),
                    ((1, -1, 0, 0), "e"): -A(-1),
                }
            ),
            ModuleElement.zero(),
        ),
        Relation(3, ModuleElement.term((0, 1, 0, 0), "x1"), ModuleElement.term((0, 0, 0, 1), "x1")),
        Relation(4, ModuleElement.term((0, 1, 0, 0), "x2"), ModuleElement.term((0, 0, 0, 1), "x2")),
        Relation(
            5,
            ModuleElement({((1, 1, 0, 0), "x1"): A(2), ((1, -1, 0, 0), "x1"): -A(-2)}),
            ModuleElement.term((0, 0, 0, 1), "x2", A(1) - A(-1)),
        ),
        Relation(
            6,
            ModuleElement({((1, 1, 0, 0), "x2"): A(2), ((1, -1, 0, 0), "x2"): -A(-2)}),
            ModuleElement.term((0, 0, 0, 1), "x1", A(1) - A(-1)),
        ),
    ]
    return rels


def boundary_multiply(e, pair, boundary):
    """Multiply every term of e by the curve (p,q) on the given boundary (1 or 2).

    Blind two-term product-to-sum per label; (0,0) stays a label, so the
    result is exact in the same formal basis the rewrites use.
    """
    p, q = pair
    if boundary not in (1, 2):
        raise ValueError("boundary must be 1 or 2")
    A = LaurentPoly.A
    acc = {}
    for (label, gen), coeff in e.terms.items():
        a, b, c, d = label
        if boundary == 1:
            det = a * q - b * p
            outs = [(det, (a + p, b + q, c, d)), (-det, (a - p, b - q, c, d))]
        else:
            det = c * q - d * p
            outs = [(det, (a, b, c + p, d + q)), (-det, (a, b, c - p, d - q))]
        for exp, lab in outs:
            key = (normalize_label(lab), gen)
            add = coeff * A(exp)
            if key in acc:
                s = acc[key] + add
                if _coeff_is_zero(s):
                    del acc[key]
                else:
                    acc[key] = s
            else:
                acc[key] = add
    out = ModuleElement.__new__(ModuleElement)
    out.terms = acc
    return out


def _oriented(label, slopes):
    # flip each pair independently so both complexity forms are nonnegative
    a, b, c, d = normalize_label(label)
    if slopes.a1 * b - slopes.b1 * a < 0:
        a, b = -a, -b
    if slopes.a2 * d - slopes.b2 * c < 0:
        c, d = -c, -d
    return a, b, c, d


def reduce_step(label, gen, slopes):
    """One rewrite of label*gen into strictly smaller terms.

    Returns a list of (coefficient, label, gen) triples with labels in
    canonical form and like terms merged. Raises NotReducible inside the
    c1 <= 2(a1-b1), c2 <= 2a2 box.
    """
    if gen not in _GEN_RANK:
        raise ValueError(f"unknown generator {gen!r}")
    u, v, w, z = _oriented(label, slopes)
    c1 = slopes.a1 * v - slopes.b1 * u
    c2 = slopes.a2 * z - slopes.b2 * w
    A = LaurentPoly.A
    if c2 > 2 * slopes.a2:
        # fiber trade on the second boundary; works uniformly on all generators
        raw = [
            (A(u - w), (u, v + 1, w, z - 1), gen),
            (A(-u - w), (u, v - 1, w, z - 1), gen),
            (-A(-2 * w), (u, v, w, z - 2), gen),
        ]
    elif c1 > 2 * (slopes.a1 - slopes.b1):
        if gen == "e":
            raw = [
                (-A(2 * v - 2 * u), (u - 2, v - 2, w, z), gen),
                (-A(v - u - w - z - 2), (u - 1, v - 1, w + 1, z - 1), gen),
                (-A(v - u + w + z - 2), (u - 1, v - 1, w - 1, z + 1), gen),
                (A(v - u + w - z), (u - 1, v - 1, w + 1, z + 1), gen),
                (A(v - u - w + z), (u - 1, v - 1, w - 1, z - 1), gen),
                (A(-2 * u), (u, v - 2, w, z), gen),
                (A(2 * v - 4), (u - 2, v, w, z), gen),
            ]
        else:
            other = "x2" if gen == "x1" else "x1"
            raw = [
                (-A(2 * v - 2 * u), (u - 2, v - 2, w, z), gen),
                (A(-2 * u - 2), (u, v - 2, w, z), gen),
                (A(2 * v - 6), (u - 2, v, w, z), gen),
                (A(v - u + w - 1) - A(v - u + w - 3), (u - 1, v - 1, w, z + 1), other),
                (A(v - u - w - 1) - A(v - u - w - 3), (u - 1, v - 1, w, z - 1), other),
            ]
    else:
        raise NotReducible(f"label {tuple(label)} is inside the irreducible box")
    acc = {}
    for coeff, lab, g in raw:
        key = (normalize_label(lab), g)
        if key in acc:
            s = acc[key] + coeff
            if _coeff_is_zero(s):
                del acc[key]
            else:
                acc[key] = s
        else:
            acc[key] = coeff
    return [(acc[k], k[0], k[1]) for k in sorted(acc, key=lambda k: (_GEN_RANK[k[1]], k[0]))]


def normalize(e, slopes, max_steps=100000, log=None):
    """Rewrite e until every label is inside the irreducible box.

    The term of maximal complexity goes first; ties choose the
    lexicographically smallest label, then the generator order e, x1, x2.
    A step log (label, gen, term count) is appended to `log` if given.
    Raises StepBudgetExceeded carrying the partial element if max_steps
    rewrites do not finish, which the descent argument rules out for any
    honest budget.
    """
    terms = dict(ModuleElement(dict(e.terms)).terms)
    steps = 0
    while True:
        pick = None
        pick_key = None
        for (label, gen) in terms:
            if is_reduced_label(label, slopes):
                continue
            cx = complexity(label, slopes)
            key = (cx, tuple(-t for t in label), -_GEN_RANK[gen])
            if pick_key is None or key > pick_key:
                pick_key = key
                pick = (label, gen)
        if pick is None:
            break
        if steps >= max_steps:
            out = ModuleElement.__new__(ModuleElement)
            out.terms = terms
            raise StepBudgetExceeded(f"no normal form within {max_steps} steps", out)
        steps += 1
        label, gen = pick
        coeff = terms.pop(pick)
        for part, lab, g in reduce_step(label, gen, slopes):
            key = (lab, g)
            add = coeff * part
            if key in terms:
                s = terms[key] + add
                if _coeff_is_zero(s):
                    del terms[key]
                else:
                    terms[key] = s
            else:
                terms[key] = add
        if log is not None:
            log.append((label, gen, len(terms)))
    out = ModuleElement.__new__(ModuleElement)
    out.terms = terms
    return out


def dehn_fill_quotient(e, boundary, slope, slopes):
    """Quotient by filling one boundary along its distinguished slope.

    Any label whose pair on that boundary is an m-fold multiple of the
    slope loses the multiple and picks up the factor (-1)^m (A^{2m} +
    A^{-2m}), the closed-form value of the m-th power-sum of the filled
    curve. Other labels pass through unchanged. Slopes other than the
    distinguished one on that boundary are rejected.
    """
    if boundary not in (1, 2):
        raise ValueError("boundary must be 1 or 2")
    want = (slopes.a1, slopes.b1) if boundary == 1 else (slopes.a2, slopes.b2)
    if _canon_pair(*slope) != _canon_pair(*want):
        raise ValueError(f"slope {slope} is not the distinguished slope {want} of boundary {boundary}")
    sa, sb = _canon_pair(*want)
    acc = ModuleElement.zero()
    for (label, gen), coeff in e.terms.items():
        a, b, c, d = label
        pair = (a, b) if boundary == 1 else (c, d)
        m = _multiple_of(pair, (sa, sb))
        if m is None or m == 0:
            acc = acc + ModuleElement.term(label, gen, coeff)
            continue
        factor = LaurentPoly({2 * m: 1, -2 * m: 1})
        if m % 2:
            factor = -factor
        new_label = (0, 0) + (c, d) if boundary == 1 else (a, b) + (0, 0)
        acc = acc + ModuleElement.term(new_label, gen, coeff * factor)
    return acc


def _multiple_of(pair, slope):
    # m >= 1 with pair ~ m*slope up to sign, else None; (0,0) maps to m=0
    p, q = _canon_pair(*pair)
    sa, sb = slope
    if (p, q) == (0, 0):
        return 0
    for sign in (1, -1):
        a, b = sign * sa, sign * sb
        if a != 0:
            if p % a == 0 and (m := p // a) >= 1 and m * b == q:
                return m
        elif p == 0 and b != 0 and q % b == 0 and (m := q // b) >= 1:
            return m
    return None


def affine_class(label, slopes):
    """Invariant of the affine translate a label lives on.

    Translating a pair by its slope fixes the complexity form and moves the
    first coordinate by a full period, so (form value, first coordinate mod
    period) pins the line. Labels of equal class differ by slope translates.
    """
    a, b, c, d = _oriented(label, slopes)
    c1 = slopes.a1 * b - slopes.b1 * a
    c2 = slopes.a2 * d - slopes.b2 * c
    return (c1, a % slopes.a1, c2, c % slopes.a2)


def irreducible_classes(slopes, radius):
    """Affine classes met by irreducible labels with entries in [-radius, radius].

    The count is bounded by (2(a1-b1)+1)(2a2+1) independently of the radius;
    saturation of this set as the radius grows is the finite generation
    witness.
    """
    seen = set()
    rng = range(-radius, radius + 1)
    for a in rng:
        for b in rng:
            c1 = abs(slopes.a1 * b - slopes.b1 * a)
            if c1 > 2 * (slopes.a1 - slopes.b1):
                continue
            for c in rng:
                for d in rng:
                    c2 = abs(slopes.a2 * d - slopes.b2 * c)
                    if c2 <= 2 * slopes.a2:
                        seen.add(affine_class((a, b, c, d), slopes))
    return seen
