"""Exact integer polynomials in the marker w.

Lengths of words with w-powers live here: a letter has length 1,
concatenation adds lengths, and a w-power multiplies by (w + q).
Coefficients are Python ints, so arithmetic is exact at any size.
The comparison is a total order (lexicographic from the highest
coefficient down), which refines the sign-of-leading-coefficient
preorder used for lengths.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

LESS, EQUAL, GREATER = -1, 0, 1


def _canon(coeffs):
    cs = list(coeffs)
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    if not cs:
        cs = [0]
    return tuple(int(c) for c in cs)


@functools.total_ordering
@dataclass(frozen=True)
class OmegaPoly:
    """Dense coefficients, index i holding the coefficient of w**i."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canon(self.coeffs))

    @staticmethod
    def const(n):
        return OmegaPoly((n,))

    @property
    def degree(self):
        # degree of the zero polynomial is 0 by convention (empty word)
        return len(self.coeffs) - 1

    def is_zero(self):
        return self.coeffs == (0,)

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def leading(self):
        return self.coeffs[-1]

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OmegaPoly(tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OmegaPoly(tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self):
        return OmegaPoly(tuple(-c for c in self.coeffs))

    def scale(self, n):
        return OmegaPoly(tuple(c * n for c in self.coeffs))

    def mul_omega_plus(self, q):
        """Product with the linear polynomial (w + q)."""
        shifted = (0,) + self.coeffs
        scaled = tuple(c * q for c in self.coeffs) + (0,)
        return OmegaPoly(tuple(a + b for a, b in zip(shifted, scaled)))

    def eval(self, k):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def content(self):
        """gcd of all coefficients; 0 for the zero polynomial."""
        return math.gcd(*self.coeffs) if len(self.coeffs) > 1 else abs(self.coeffs[0])

    def integer_roots(self):
        """All integer roots, by divisor enumeration of the trailing coefficient."""
        if self.is_zero():
            raise ValueError("zero polynomial has every integer as a root")
        # strip the w^k factor: roots of the cofactor, plus 0 if k > 0
        k = 0
        while self.coeff(k) == 0:
            k += 1
        roots = set()
        if k > 0:
            roots.add(0)
        c0 = abs(self.coeff(k))
        for d in range(1, c0 + 1):
            if c0 % d:
                continue
            for r in (d, -d):
                if self.eval(r) == 0:
                    roots.add(r)
        return roots

    def __lt__(self, other):
        return poly_compare(self, _as_poly(other)) == LESS

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"OmegaPoly({self.coeffs!r})"


ZERO = OmegaPoly((0,))
ONE = OmegaPoly((1,))
OMEGA = OmegaPoly((0, 1))


def _as_poly(x):
    return x if isinstance(x, OmegaPoly) else OmegaPoly.const(x)


def poly_add(p, q):
    return _as_poly(p) + _as_poly(q)


def poly_mul_omega_plus(p, q):
    return _as_poly(p).mul_omega_plus(q)


def poly_compare(p, q):
    p, q = _as_poly(p), _as_poly(q)
    d = q - p
    if d.is_zero():
        return EQUAL
    return LESS if d.leading() > 0 else GREATER


def poly_eval(p, k):
    return _as_poly(p).eval(k)


def poly_content(p):
    return _as_poly(p).content()


def poly_integer_roots(p):
    return _as_poly(p).integer_roots()


def poly_divmod(p, d):
    """Euclidean division p = q*d + r with integer q, r and 0 <= r < d.

    Returns None when no such integer-coefficient pair exists.  Requires
    d with a positive leading coefficient (true of all word lengths).
    """
    p, d = _as_poly(p), _as_poly(d)
    if d.is_zero() or d.leading() <= 0:
        raise ValueError("divisor must have positive leading coefficient")
    rem = [Fraction(c) for c in p.coeffs]
    dc = [Fraction(c) for c in d.coeffs]
    dd = len(dc) - 1
    q = [Fraction(0)] * max(1, len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        f = rem[i] / dc[-1]
        q[i - dd] = f
        for j, c in enumerate(dc):
            rem[i - dd + j] -= f * c
    qp = _from_fractions(q)
    rp = _from_fractions(rem[:dd] or [Fraction(0)])
    if qp is None or rp is None:
        return None
    # slide into 0 <= r < d (one step suffices: deg r < deg d)
    if poly_compare(rp, ZERO) == LESS:
        qp, rp = qp - ONE, rp + d
    elif poly_compare(rp, d) != LESS:
        qp, rp = qp + ONE, rp - d
    if poly_compare(rp, ZERO) == LESS or poly_compare(rp, d) != LESS:
        return None
    return qp, rp


def _from_fractions(fs):
    out = []
    for f in fs:
        if f.denominator != 1:
            return None
        out.append(int(f))
    return OmegaPoly(tuple(out))


def poly_floor_div(p, d):
    """The largest integer k with k*d <= p, plus the remainder p - k*d.

    Requires deg p <= deg d and d with positive leading coefficient; the
    remainder then satisfies 0 <= r < d.  Returns None if deg p > deg d.
    """
    p, d = _as_poly(p), _as_poly(d)
    if d.leading() <= 0:
        raise ValueError("divisor must have positive leading coefficient")
    if p.degree > d.degree:
        return None
    if p.degree < d.degree or p.is_zero():
        if poly_compare(p, ZERO) != LESS:
            return 0, p
        return -1, p + d
    k0 = p.leading() // d.leading()
    for k in (k0 + 1, k0, k0 - 1):
        r = p - d.scale(k)
        if poly_compare(r, ZERO) != LESS and poly_compare(r, d) == LESS:
            return k, r
    return None


def render_poly(p):
    """Render like "2w^2+25w-27": descending powers, no spaces."""
    p = _as_poly(p)
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "w" if i == 1 else f"w^{i}"
            body = var if mag == 1 else f"{mag}{var}"
        parts.append(sign + body)
    return "".join(parts)


_TERM_RE = re.compile(r"([+-]?)(\d*)(?:(w)(?:\^(\d+))?)?")


def parse_poly(text):
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial syntax at position {pos}: {text!r}")
        sign, num, w, exp = m.groups()
        if not num and not w:
            raise ValueError(f"bad polynomial syntax at position {pos}: {text!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        i = 0
        if w:
            i = int(exp) if exp else 1
        coeffs[i] = coeffs.get(i, 0) + c
        pos = m.end()
    n = max(coeffs) + 1
    return OmegaPoly(tuple(coeffs.get(i, 0) for i in range(n)))
