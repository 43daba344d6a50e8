"""Skein relations from sliding handles over a genus-2 handlebody.

The ambient module is C[x,y,z] (three core curves) with a Z/2 x Z/2 grading.
Generic-A data lives in Poly3 with LaurentPoly coefficients; the quotient
computations happen after specializing A to i, where coefficients become
Gaussian rationals. Eight relation families span the quotient ideal; each is
a fixed core polynomial times an arbitrary monomial, with the core variant
selected by a parity of the monomial.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .chebyshev import chebyshev_S, chebyshev_T
from .gaussian import GaussRat, laurent_at_i
from .laurent import LaurentPoly, parse_laurent
from .linalg import bareiss_rank, field_rank
from .torus import _split_top_level


class Poly3:
    """Polynomial in commuting x, y, z with coefficients in any exact ring.

    Keys are exponent triples (k, l, n); zero coefficients are dropped on
    construction. Coefficient types only need +, *, unary -, bool.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        if terms:
            for key, c in terms.items():
                if len(key) != 3 or any(e < 0 for e in key):
                    raise ValueError(f"bad monomial key {key!r}")
                if c:
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

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly3):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    __hash__ = None

    def __neg__(self):
        return Poly3({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly3):
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
        out = Poly3.__new__(Poly3)
        out.terms = t
        return out

    def __sub__(self, other):
        if not isinstance(other, Poly3):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly3):
            t = {}
            for (k1, l1, n1), v1 in self.terms.items():
                for (k2, l2, n2), v2 in other.terms.items():
                    key = (k1 + k2, l1 + l2, n1 + n2)
                    prod = v1 * v2
                    if key in t:
                        s = t[key] + prod
                        if s:
                            t[key] = s
                        else:
                            del t[key]
                    elif prod:
                        t[key] = prod
            out = Poly3.__new__(Poly3)
            out.terms = t
            return out
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if not c:
            return Poly3.zero()
        return Poly3({k: v * c for k, v in self.terms.items()})

    def monomial_shift(self, k, l, n):
        """Multiply by x^k y^l z^n."""
        return Poly3({(a + k, b + l, c + n): v for (a, b, c), v in self.terms.items()})

    def map_coeffs(self, fn):
        return Poly3({k: fn(v) for k, v in self.terms.items()})

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(k) for k in self.terms)

    def gradings(self):
        return {monomial_grading(k) for k in self.terms}

    def is_homogeneous(self):
        return len(self.gradings()) <= 1

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (sum(k), [-e for e in k])):
            names = []
            for var, e in zip("xyz", key):
                if e == 1:
                    names.append(var)
                elif e > 1:
                    names.append(f"{var}^{e}")
            mono = "*".join(names) if names else "1"
            parts.append(f"({self.terms[key]})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly3({self.terms!r})"


def monomial_grading(key):
    """Z/2 x Z/2 class of x^k y^l z^n: ((k+n) mod 2, (l+n) mod 2)."""
    k, l, n = key
    return ((k + n) % 2, (l + n) % 2)


_MONO_TOKEN = re.compile(r"^([xyz])(?:\^(\d+))?$")


def parse_poly3(text, coeff_parser=parse_laurent):
    """Inverse of Poly3.__str__; coefficients default to Laurent polynomials."""
    text = text.strip()
    if not text or text == "0":
        return Poly3.zero()
    acc = Poly3.zero()
    for sign, chunk in _split_top_level(text):
        if not chunk.startswith("("):
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        depth = 0
        end = None
        for i, ch in enumerate(chunk):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    end = i
                    break
        if end is None:
            raise ValueError(f"unbalanced parentheses in {chunk!r}")
        coeff = coeff_parser(chunk[1:end])
        rest = chunk[end + 1 :].strip()
        if not rest.startswith("*"):
            raise ValueError(f"missing monomial in {chunk!r}")
        mono = rest[1:].strip()
        key = [0, 0, 0]
        if mono != "1":
            for tok in mono.split("*"):
                m = _MONO_TOKEN.match(tok.strip())
                if m is None:
                    raise ValueError(f"bad monomial factor {tok!r}")
                key["xyz".index(m.group(1))] += int(m.group(2) or 1)
        if sign < 0:
            coeff = -coeff
        acc = acc + Poly3({tuple(key): coeff})
    return acc


def _y_poly(int_poly, scalar=1):
    """Lift a degree->int dict in y to a Poly3, scaled by a coefficient."""
    return Poly3({(0, e, 0): scalar * v for e, v in int_poly.items()})


def gamma(p):
    """Curve winding p times around one handle, generic A, via the recurrence."""
    if p < 1:
        raise ValueError("gamma needs p >= 1")
    A = LaurentPoly.A
    g1 = Poly3({(0, 1, 0): LaurentPoly.one()})
    if p == 1:
        return g1
    g2 = Poly3({(0, 2, 0): A(1), (0, 0, 0): -A(1) - A(-3)})
    prev, cur = g1, g2
    for _ in range(p - 2):
        step = cur.monomial_shift(0, 1, 0).scale(A(1)) - prev.scale(A(2))
        prev, cur = cur, step
    return cur


def gamma_prime(p):
    """Companion curve crossing the z-handle once, generic A."""
    if p < 1:
        raise ValueError("gamma_prime needs p >= 1")
    A = LaurentPoly.A
    g1 = Poly3({(0, 0, 1): LaurentPoly.one()})
    if p == 1:
        return g1
    g2 = Poly3({(0, 1, 1): A(1), (1, 0, 0): A(-1)})
    prev, cur = g1, g2
    for _ in range(p - 2):
        step = cur.monomial_shift(0, 1, 0).scale(A(1)) - prev.scale(A(2))
        prev, cur = cur, step
    return cur


def specialize_at_i(poly):
    """Evaluate LaurentPoly coefficients at A = i, yielding GaussRat coefficients."""
    return poly.map_coeffs(laurent_at_i)


def gamma_at_i_closed(p):
    """Closed form i^(p-1) * T_p(y)."""
    if p < 1:
        raise ValueError("needs p >= 1")
    return _y_poly(chebyshev_T(p), GaussRat.i() ** (p - 1))


def gamma_prime_at_i_closed(p):
    """Closed form i^(p-1) z S_{p-1}(y) + i^(p+1) x S_{p-2}(y)."""
    if p < 1:
        raise ValueError("needs p >= 1")
    zpart = _y_poly(chebyshev_S(p - 1), GaussRat.i() ** (p - 1)).monomial_shift(0, 0, 1)
    xpart = _y_poly(chebyshev_S(p - 2), GaussRat.i() ** (p + 1)).monomial_shift(1, 0, 0)
    return zpart + xpart


# family index -> which monomial parity picks the core variant
FAMILY_SELECTOR = {1: "ln", 2: "ln", 3: "ln", 4: "ln", 5: "kn", 6: "kn", 7: "kn", 8: "ln"}


def relation_core(family, p, parity):
    """Core polynomial of one relation family, parity in {0,1}.

    Returns None when the family has no variant for that parity (family 6
    exists only for odd k+n) or when the variant collapses to zero.
    """
    if family not in FAMILY_SELECTOR:
        raise ValueError(f"family must be 1..8, got {family}")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    if family <= 4 and p < 2:
        raise ValueError("families 1-4 need p >= 2")
    one = GaussRat.one()
    i = GaussRat.i()
    sign = 1 if parity == 0 else -1
    if family == 1:
        # 2 -+ i^p T_p(y)
        core = Poly3({(0, 0, 0): 2 * one}) - _y_poly(chebyshev_T(p), sign * i**p)
    elif family == 2:
        # y +- i^p T_{p-1}(y)
        core = Poly3({(0, 1, 0): one}) + _y_poly(chebyshev_T(p - 1), sign * i**p)
    elif family == 3:
        # x -+ i^p (z S_{p-1}(y) - x S_{p-2}(y))
        inner = _y_poly(chebyshev_S(p - 1)).monomial_shift(0, 0, 1) - _y_poly(
            chebyshev_S(p - 2)
        ).monomial_shift(1, 0, 0)
        core = Poly3({(1, 0, 0): one}) - inner.scale(sign * i**p)
    elif family == 4:
        # i z - i x y +- i^(p-1) (z S_{p-2}(y) - x S_{p-3}(y))
        inner = _y_poly(chebyshev_S(p - 2)).monomial_shift(0, 0, 1) - _y_poly(
            chebyshev_S(p - 3)
        ).monomial_shift(1, 0, 0)
        core = Poly3({(0, 0, 1): i, (1, 1, 0): -i}) + inner.scale(sign * i ** (p - 1))
    elif family == 5:
        if parity == 0:
            core = Poly3({(2, 0, 0): one})
        else:
            core = Poly3({(0, 0, 0): 4 * one, (2, 0, 0): -one})
    elif family == 6:
        if parity == 0:
            return None
        core = Poly3({(1, 0, 0): 2 * one})
    elif family == 7:
        if parity == 0:
            core = Poly3({(1, 0, 1): one})
        else:
            core = Poly3({(0, 1, 0): 2 * one, (1, 0, 1): -one})
    else:
        if parity == 0:
            core = Poly3({(0, 0, 1): 2 * i, (1, 1, 0): -i})
        else:
            core = Poly3({(1, 1, 0): i})
    return None if core.is_zero else core


def crosscheck_relation_cores(p):
    """Regenerate the parameter-dependent cores from the curve recurrences and
    compare with the stated list.

    The uniform bookkeeping rule that reproduces families 1-3 assigns the
    recurrence term the sign -(-1)^parity. Family 4 as stated carries the
    opposite pairing (which is also the one its own ideal-membership proof
    needs), so this check is expected to flag family 4.
    """
    if p < 2:
        raise ValueError("needs p >= 2")
    g_p = specialize_at_i(gamma(p))
    g_p1 = specialize_at_i(gamma(p - 1)) if p >= 2 else None
    gp_p = specialize_at_i(gamma_prime(p))
    gp_p1 = specialize_at_i(gamma_prime(p - 1))
    i = GaussRat.i()
    one = GaussRat.one()
    y = Poly3({(0, 1, 0): one})
    two = Poly3({(0, 0, 0): 2 * one})
    x = Poly3({(1, 0, 0): one})
    izxy = Poly3({(0, 0, 1): i, (1, 1, 0): -i})
    report = {}
    for family in (1, 2, 3, 4):
        fam = {}
        for parity in (0, 1):
            s = 1 if parity == 0 else -1
            if family == 1:
                regen = two - g_p.scale(s * i)
            elif family == 2:
                regen = y - g_p1.scale(s)
            elif family == 3:
                regen = x - gp_p.scale(s * i)
            else:
                regen = izxy - gp_p1.scale(s * i)
            stated = relation_core(family, p, parity)
            stated = stated if stated is not None else Poly3.zero()
            fam["even" if parity == 0 else "odd"] = stated == regen
        report[family] = fam
    return report


def _core_variant_grading(family, p):
    # both variants of a family share one grading class (checked for even p)
    for parity in (0, 1):
        core = relation_core(family, p, parity)
        if core is not None:
            gs = core.gradings()
            if len(gs) == 1:
                return next(iter(gs))
    return None


def v_restricted_cores(p):
    """The one variant of each family whose monomial multiples can land in
    the trivially graded part, as (family, core) pairs."""
    if p % 2 or p < 2:
        raise ValueError("needs even p >= 2")
    out = []
    for family in range(1, 9):
        g_core = _core_variant_grading(family, p)
        if g_core is None:
            continue
        parity = g_core[1] if FAMILY_SELECTOR[family] == "ln" else g_core[0]
        core = relation_core(family, p, parity)
        if core is not None:
            out.append((family, core))
    return out


def verify_Jprime_containment(p):
    """Check that every trivially-graded relation core has all monomials
    divisible by x or y.

    For even p the constant terms cancel arithmetically, so the quotient by
    these relations keeps all powers z^(2n) independent; that is the engine
    of the infinite-dimensionality argument. Returns (ok, report).
    """
    if p % 2 or p < 2:
        raise ValueError("needs even p >= 2")
    report = {}
    ok = True
    for family, core in v_restricted_cores(p):
        offending = [key for key in core.terms if key[0] == 0 and key[1] == 0]
        contained = not offending
        ok = ok and contained
        report[family] = {
            "contained": contained,
            "monomials": len(core.terms),
            "offending": offending,
        }
    return ok, report


def monomials_leq(degree_bound, grading=None):
    """Exponent triples of total degree <= bound, graded-lex ordered (x>y>z)."""
    out = []
    for d in range(degree_bound + 1):
        level = []
        for k in range(d, -1, -1):
            for l in range(d - k, -1, -1):
                n = d - k - l
                if grading is None or monomial_grading((k, l, n)) == tuple(grading):
                    level.append((k, l, n))
        out.extend(level)
    return out


def relation_generators(p, degree_bound):
    """All monomial multiples of relation cores up to the degree bound.

    The core variant for a monomial x^k y^l z^n is picked by the parity of
    l+n (families 1-4, 8) or k+n (families 5-7).
    """
    if p < 2:
        raise ValueError("needs p >= 2")
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    cores = {}
    for family in range(1, 9):
        for parity in (0, 1):
            cores[(family, parity)] = relation_core(family, p, parity)
    out = []
    for mono in monomials_leq(degree_bound):
        k, l, n = mono
        for family in range(1, 9):
            parity = (l + n) % 2 if FAMILY_SELECTOR[family] == "ln" else (k + n) % 2
            core = cores[(family, parity)]
            if core is None:
                continue
            if k + l + n + core.degree() <= degree_bound:
                out.append(core.monomial_shift(k, l, n))
    return out


def _rows_from_polys(polys, col_index):
    rows = []
    for poly in polys:
        row = {}
        for key, c in poly.terms.items():
            idx = col_index.get(key)
            if idx is None:
                raise ValueError(f"relation monomial {key} outside the column set")
            row[idx] = c
        if row:
            rows.append(row)
    return rows


def _eliminate_singletons(rows, ncols):
    """Columns hit by a one-term relation are directly in the span; peel them
    off and shrink the remaining rows. Returns (killed column set, rows)."""
    killed = set()
    changed = True
    while changed:
        changed = False
        remaining = []
        for row in rows:
            live = {c: v for c, v in row.items() if c not in killed}
            if not live:
                continue
            if len(live) == 1:
                killed.add(next(iter(live)))
                changed = True
            else:
                remaining.append(live)
        rows = remaining
    return killed, rows


def _rank_of_rows(rows, ncols):
    """Exact rank of sparse rows with GaussRat entries.

    Rows that are uniformly real or uniformly imaginary become integer rows
    (fast fraction-free path); anything mixed falls back to field
    elimination over Q(i).
    """
    if not rows:
        return 0
    int_rows = []
    mixed = False
    for row in rows:
        vals = list(row.values())
        if all(not v.im for v in vals):
            comps = {c: v.re for c, v in row.items()}
        elif all(not v.re for v in vals):
            comps = {c: v.im for c, v in row.items()}
        else:
            mixed = True
            break
        den = 1
        for f in comps.values():
            den = den * f.denominator // _gcd(den, f.denominator)
        int_rows.append({c: int(f * den) for c, f in comps.items()})
    if not mixed:
        # dedupe up to scalar
        seen = {}
        for row in int_rows:
            g = 0
            for v in row.values():
                g = _gcd(g, abs(v))
            norm = tuple(sorted((c, v // g) for c, v in row.items()))
            lead = norm[0][1]
            if lead < 0:
                norm = tuple((c, -v) for c, v in norm)
            seen[norm] = row
        dense = []
        for norm in seen:
            vec = [0] * ncols
            for c, v in norm:
                vec[c] = v
            dense.append(vec)
        return bareiss_rank(dense)
    dense = []
    for row in rows:
        vec = [GaussRat.zero()] * ncols
        for c, v in row.items():
            vec[c] = v
        dense.append(vec)
    return field_rank(dense)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def truncated_quotient_dimension(p, degree_bound, grading=None):
    """Dimension of (monomials of degree <= bound, optionally one grading
    class) modulo the degree-truncated relation span."""
    if grading is not None:
        if p % 2:
            raise ValueError("grading filter requires even p (homogeneous relations)")
        grading = tuple(grading)
    cols = monomials_leq(degree_bound, grading)
    col_index = {key: idx for idx, key in enumerate(cols)}
    polys = relation_generators(p, degree_bound)
    if grading is not None:
        kept = []
        for poly in polys:
            gs = poly.gradings()
            if len(gs) != 1:
                raise ValueError("inhomogeneous relation under a grading filter")
            if next(iter(gs)) == grading:
                kept.append(poly)
        polys = kept
    rows = _rows_from_polys(polys, col_index)
    killed, rows = _eliminate_singletons(rows, len(cols))
    # project surviving rows away from killed columns
    rows = [{c: v for c, v in row.items() if c not in killed} for row in rows]
    rows = [row for row in rows if row]
    rank = len(killed) + _rank_of_rows(rows, len(cols))
    return len(cols) - rank


def nested_truncation_dimension(p, window_degree, relation_degree, grading=None):
    """Dimension of the image of the degree <= window_degree monomial span in
    the quotient by relations truncated at relation_degree >= window_degree.

    dim = #window monomials - (rank of all rows - rank of rows projected to
    the columns outside the window); increasing relation_degree can only
    shrink it.
    """
    if relation_degree < window_degree:
        raise ValueError("relation degree must dominate the window")
    if grading is not None:
        if p % 2:
            raise ValueError("grading filter requires even p (homogeneous relations)")
        grading = tuple(grading)
    cols = monomials_leq(relation_degree, grading)
    col_index = {key: idx for idx, key in enumerate(cols)}
    inside = sum(1 for key in cols if sum(key) <= window_degree)
    polys = relation_generators(p, relation_degree)
    if grading is not None:
        polys = [
            poly
            for poly in polys
            if poly.gradings() == {grading}
        ]
    rows = _rows_from_polys(polys, col_index)
    full = _rank_of_rows(rows, len(cols))
    outside_rows = []
    for row in rows:
        proj = {c: v for c, v in row.items() if sum(cols[c]) > window_degree}
        if proj:
            outside_rows.append(proj)
    outside = _rank_of_rows(outside_rows, len(cols))
    return inside - (full - outside)
