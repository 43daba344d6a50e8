"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, x, ..., x^(phi(N)-1) of
Q[x]/Phi_N(x) with Fraction coordinates. Mixed-order arithmetic lifts both
operands to the lcm order automatically, so callers can treat roots of unity
of different orders as living in one big field.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .laurent import LaurentPoly


def totient(n):
    if n < 1:
        raise ValueError("totient needs n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _dense_divexact(num, den):
    # integer polynomial division known to be exact; lists are constant-first
    num = list(num)
    dlead = den[-1]
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        coef = num[shift + len(den) - 1]
        if coef % dlead:
            raise ValueError("inexact polynomial division")
        q = coef // dlead
        out[shift] = q
        if q:
            for i, dv in enumerate(den):
                num[shift + i] -= q * dv
    if any(num):
        raise ValueError("inexact polynomial division")
    return out


_CYCLO_CACHE = {}


def cyclotomic_poly(n):
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("cyclotomic_poly needs n >= 1")
    if n in _CYCLO_CACHE:
        return list(_CYCLO_CACHE[n])
    # divide x^n - 1 by the cyclotomic polynomials of the proper divisors
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _dense_divexact(poly, cyclotomic_poly(d))
    _CYCLO_CACHE[n] = tuple(poly)
    return list(poly)


_ROW_CACHE = {}


def _zeta_rows(n, upto):
    """Integer coordinate rows of x^k mod Phi_n for k = 0..upto."""
    phi = totient(n)
    cached = _ROW_CACHE.get(n)
    if cached is None:
        cached = [tuple(1 if j == k else 0 for j in range(phi)) for k in range(phi)]
        _ROW_CACHE[n] = cached
    if phi == 0:
        raise ValueError("empty basis")
    cyc = cyclotomic_poly(n)
    while len(cached) <= upto:
        prev = cached[-1]
        shifted = [0] + list(prev[:-1])
        t = prev[-1]
        if t:
            # x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1})
            for j in range(phi):
                shifted[j] -= t * cyc[j]
        cached.append(tuple(shifted))
    return cached


def _reduce_int_vec(n, vec):
    """Fold an integer coefficient vector into the power basis mod Phi_n."""
    phi = totient(n)
    cyc = cyclotomic_poly(n)
    for k in range(len(vec) - 1, phi - 1, -1):
        t = vec[k]
        if t:
            vec[k] = 0
            base = k - phi
            for j in range(phi):
                if cyc[j]:
                    vec[base + j] -= t * cyc[j]
    return vec[:phi] + [0] * (phi - len(vec)) if len(vec) < phi else vec[:phi]


class CycNum:
    """Element of Q(zeta_order) in the power basis. Deliberately unhashable:
    equal values can carry different orders, so identity-based hashing would
    be a trap."""

    __slots__ = ("order", "coords")

    def __init__(self, order, coords):
        phi = totient(order)
        coords = [Fraction(c) for c in coords]
        if len(coords) != phi:
            raise ValueError(f"order {order} needs {phi} coordinates, got {len(coords)}")
        self.order = order
        self.coords = tuple(coords)

    @classmethod
    def rational(cls, q):
        return cls(1, [Fraction(q)])

    @classmethod
    def zero(cls):
        return cls(1, [0])

    @classmethod
    def one(cls):
        return cls(1, [1])

    @property
    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    __hash__ = None

    def lift(self, m):
        """Rewrite in Q(zeta_m); m must be a multiple of the current order."""
        if m == self.order:
            return self
        if m % self.order:
            raise ValueError("can only lift to a multiple of the order")
        step = m // self.order
        phi = totient(m)
        rows = _zeta_rows(m, (len(self.coords) - 1) * step)
        out = [Fraction(0)] * phi
        for j, c in enumerate(self.coords):
            if c:
                row = rows[j * step]
                for idx in range(phi):
                    if row[idx]:
                        out[idx] += c * row[idx]
        return CycNum(m, out)

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(other)
        if not isinstance(other, CycNum):
            return None, None
        if self.order == other.order:
            return self, other
        m = math.lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coords == b.coords

    def __neg__(self):
        return CycNum(self.order, [-c for c in self.coords])

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNum(a.order, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycNum(a.order, [x - y for x, y in zip(a.coords, b.coords)])

    def __rsub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b - a

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum(self.order, [c * q for c in self.coords])
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        # scale to integer vectors, convolve, reduce, scale back
        d1 = math.lcm(*[c.denominator for c in a.coords]) if a.coords else 1
        d2 = math.lcm(*[c.denominator for c in b.coords]) if b.coords else 1
        v1 = [int(c * d1) for c in a.coords]
        v2 = [int(c * d2) for c in b.coords]
        conv = [0] * (len(v1) + len(v2) - 1)
        for i, x in enumerate(v1):
            if x:
                for j, y in enumerate(v2):
                    if y:
                        conv[i + j] += x * y
        reduced = _reduce_int_vec(a.order, conv)
        scale = d1 * d2
        return CycNum(a.order, [Fraction(v, scale) for v in reduced])

    __rmul__ = __mul__

    def inverse(self):
        """Field inverse via extended Euclid against Phi_order."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi_poly = [Fraction(c) for c in cyclotomic_poly(self.order)]
        old_r, r = phi_poly, list(self.coords)
        old_t, t = [Fraction(0)], [Fraction(1)]

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        trim(old_r)
        trim(r)
        while r:
            # quotient and remainder of old_r by r
            q = [Fraction(0)] * (len(old_r) - len(r) + 1) if len(old_r) >= len(r) else []
            rem = list(old_r)
            while len(rem) >= len(r):
                factor = rem[-1] / r[-1]
                shift = len(rem) - len(r)
                q[shift] = factor
                for i, rv in enumerate(r):
                    rem[shift + i] -= factor * rv
                trim(rem)
                if not rem:
                    break
            new_t = list(old_t)
            # new_t = old_t - q*t
            prod = [Fraction(0)] * (len(q) + len(t) - 1) if q and t else []
            for i, qv in enumerate(q):
                if qv:
                    for j, tv in enumerate(t):
                        prod[i + j] += qv * tv
            size = max(len(new_t), len(prod))
            new_t += [Fraction(0)] * (size - len(new_t))
            for i, pv in enumerate(prod):
                new_t[i] -= pv
            old_r, r = r, rem
            old_t, t = t, trim(new_t)
        if len(old_r) != 1:
            raise ArithmeticError("cyclotomic polynomial not coprime to element")
        c = old_r[0]
        inv = [tv / c for tv in old_t]
        phi = totient(self.order)
        inv += [Fraction(0)] * (phi - len(inv))
        return CycNum(self.order, inv[:phi])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                raise ZeroDivisionError
            return CycNum(self.order, [c / q for c in self.coords])
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNum.one().lift(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @property
    def is_rational(self):
        return not any(self.coords[1:])

    def as_fraction(self):
        if not self.is_rational:
            raise ValueError("not a rational value")
        return self.coords[0]

    def __str__(self):
        if self.is_rational:
            f = self.coords[0]
            return str(f.numerator) if f.denominator == 1 else str(f)
        terms = []
        for j, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}*z{self.order}^{j}" if j else str(c))
        return " + ".join(terms)

    def __repr__(self):
        return f"CycNum({self.order}, {list(self.coords)!r})"


def root_of_unity(n, k=1):
    """zeta_n^k as a CycNum of order n."""
    if n < 1:
        raise ValueError("order must be positive")
    k %= n
    phi = totient(n)
    row = _zeta_rows(n, k)[k]
    return CycNum(n, list(row[:phi]))


def laurent_eval(p, n, k=1):
    """Evaluate an integer Laurent polynomial at A = zeta_n^k, exactly."""
    if not isinstance(p, LaurentPoly):
        raise TypeError("expected a LaurentPoly")
    phi = totient(n)
    acc = [Fraction(0)] * phi
    needed = {(e * k) % n for e, _ in p.items()}
    rows = _zeta_rows(n, max(needed, default=0))
    for e, v in p.items():
        row = rows[(e * k) % n]
        for idx in range(phi):
            if row[idx]:
                acc[idx] += v * row[idx]
    return CycNum(n, acc)


def _squarefree_decompose(m):
    # m = f^2 * r with r squarefree; m >= 1
    f, r = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1
    if m > 1:
        r *= m
    return f, r


def rational_sqrt_cyclotomic(q):
    """A CycNum whose square is the rational q.

    sqrt(2) comes from zeta_8 + zeta_8^-1, odd primes from quadratic Gauss
    sums, and a factor of i absorbs negative signs.
    """
    q = Fraction(q)
    if q == 0:
        return CycNum.zero()
    negative = q < 0
    a, b = abs(q.numerator), q.denominator
    # sqrt(a/b) = sqrt(a*b)/b
    f, r = _squarefree_decompose(a * b)
    result = CycNum.rational(Fraction(f, b))
    if r % 2 == 0:
        r //= 2
        s8 = root_of_unity(8, 1) + root_of_unity(8, 7)
        result = result * s8
    p = 3
    while r > 1:
        if r % p == 0:
            r //= p
            gauss = CycNum(p, [Fraction(0)] * totient(p))
            for t in range(p):
                gauss = gauss + root_of_unity(p, (t * t) % p)
            if p % 4 == 3:
                # the sum equals i*sqrt(p); peel the i off
                gauss = gauss * root_of_unity(4, 3)
            result = result * gauss
        p += 2
    if negative:
        result = result * root_of_unity(4, 1)
    return result


def root_of_unity_with_trace(x, extra_orders=(1, 4, 8, 12, 24)):
    """Find (m, k) with zeta_m^k + zeta_m^-k equal to x, scanning bounded orders.

    Returns None when no root of unity in the scanned fields has trace x.
    """
    if isinstance(x, (int, Fraction)):
        x = CycNum.rational(x)
    seen = set()
    for mult in extra_orders:
        m = math.lcm(x.order, mult)
        if m in seen:
            continue
        seen.add(m)
        lifted = x.lift(m)
        phi = totient(m)
        rows = _zeta_rows(m, m - 1)
        for k in range(m):
            row_k = rows[k]
            row_nk = rows[(m - k) % m]
            ok = True
            for idx in range(phi):
                if lifted.coords[idx] != row_k[idx] + row_nk[idx]:
                    ok = False
                    break
            if ok:
                return m, k
    return None
