"""Reduction of singularity classes to merge-irreducible normal form.

The merging relation collapses x^(w+q)x^(w+p) to x^(w+q+p), plain-power
bases (x^n)^(w+q) to x^(w+nq), and nested powers (x^(w+p))^(w+q) to
x^(w+pq).  A normal word contains none of these shapes, even hidden
behind winding and rolling; a fully normal word additionally stays
normal under all finite powers, which excludes the bare w-power and the
x-power...x-power sandwich.

The engine has three moving parts, mirroring the column of lemmas the
decision procedure rests on: chains of w-power suffixes/prefixes (the
shared-period detector used for merging products), reduction of a
w-power of a normal word (periodic bases collapse; sandwich bases
rewrite inward at strictly increasing period height), and the fold that
normalizes an arbitrary word bottom-up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .omega_poly import EQUAL, GREATER, LESS, OmegaPoly, ZERO, poly_compare, poly_divmod
from .sword import (
    InternalError,
    Sword,
    _struct_lcp,
    s_canonical,
    split_at,
    trace_step,
)
from .zterm import (
    Letter,
    OmegaPower,
    as_items,
    concat_items,
    height,
    length,
    mirror,
)


@dataclass(frozen=True)
class NormalSword:
    sword: Sword
    fully_normal: bool

    @property
    def rep(self):
        return self.sword.rep

    @property
    def length(self):
        return self.sword.length

    @property
    def height(self):
        return self.sword.height

    def __str__(self):
        return str(self.sword)

    def to_json(self):
        return self.sword.to_json()


@dataclass(frozen=True)
class PeriodReport:
    base: NormalSword
    kind: str  # "plain" or "omega"
    value: int  # the power n >= 2, or the exponent offset m

    def reassemble(self):
        if self.kind == "plain":
            return s_canonical(self.base.rep * self.value)
        return s_canonical((OmegaPower(self.base.rep, self.value),))


def _items(x):
    if isinstance(x, (Sword, NormalSword)):
        return x.rep
    return as_items(x)


# ---------------------------------------------------------------------------
# w-power suffix/prefix chains
#
# A chain entry (y, p, rest) asserts w = rest·y^(w+p) (suffix flavour)
# with y a candidate period.  The outermost entry undoes left-rolling
# by rolling the last ring back over its trailing material; deeper
# entries unwind one copy of the last ring and look inside the base.


def omega_suffix_chain(w):
    w = _items(w)
    k = None
    for i in range(len(w) - 1, -1, -1):
        if isinstance(w[i], OmegaPower):
            k = i
            break
    if k is None:
        return []
    ringit = w[k]
    tail = w[k + 1 :]
    res = []
    rolled = _consume_right(ringit.base, ringit.q, tail)
    if rolled is not None:
        y, p, moved = rolled
        rest = w[:k] + moved
        while len(rest) >= len(y) and rest[-len(y) :] == y:
            rest = rest[: -len(y)]
            p += 1
        res.append((y, p, rest))
    for y2, p2, rest2 in omega_suffix_chain(ringit.base):
        j = _copy_count(tail, y2)
        if j is None:
            continue
        rest = w[:k] + (OmegaPower(ringit.base, ringit.q - 1),) + rest2
        res.append((y2, p2 + j, rest))
    return res


def omega_prefix_chain(w):
    return [
        (mirror(y), p, mirror(rest))
        for y, p, rest in omega_suffix_chain(mirror(_items(w)))
    ]


def _consume_right(base, q, tail):
    """Roll the ring rightward until it has eaten all of tail, or fail."""
    moved = []
    rest = list(tail)
    while rest:
        common, t_rest, b_rest = _struct_lcp(rest, list(base))
        if not common:
            return None
        if not b_rest:
            q += 1
            rest = t_rest
            continue
        piece = tuple(common)
        moved.extend(piece)
        base = s_canonical(concat_items(tuple(b_rest), piece))
        rest = t_rest
    return base, q, tuple(moved)


def _copy_count(material, y):
    """material == y^j exactly (as classes); returns j >= 0 or None."""
    material = tuple(material)
    if not material:
        return 0
    dm = poly_divmod(length(material), length(y))
    if dm is None:
        return None
    quo, r = dm
    if not r.is_zero() or quo.degree != 0:
        return None
    j = quo.coeff(0)
    if j <= 0:
        return None
    if s_canonical(material) != s_canonical(y * j):
        return None
    return j


def _shared_period(left, right):
    """The fully normal y with a y-power suffix of left and prefix of right."""
    for ya, pa, ra in omega_suffix_chain(left):
        for yb, pb, rb in omega_prefix_chain(right):
            if ya == yb:
                return ya, pa, ra, pb, rb
    return None


# ---------------------------------------------------------------------------
# normality


def is_normal(s):
    return _normal_items(s_canonical(_items(s)))


def _normal_items(w):
    for it in w:
        if isinstance(it, OmegaPower):
            if not _normal_items(it.base):
                return False
            if _find_period_items(it.base) is not None:
                return False
            if _sandwich(it.base) is not None:
                return False
    for i in range(1, len(w)):
        if _shared_period(w[:i], w[i:]) is not None:
            return False
    return True


def _sandwich(w):
    """w = y^(w+p1)·mid·y^(w+p2) for one y; mid may be empty only if w
    is itself a merge pattern (then w was not normal to begin with)."""
    w = tuple(w)
    total = length(w)
    for ya, p2, _ in omega_suffix_chain(w):
        for yb, p1, _ in omega_prefix_chain(w):
            if ya != yb:
                continue
            both = length(ya).mul_omega_plus(p1) + length(ya).mul_omega_plus(p2)
            if poly_compare(both, total) != GREATER:
                return ya, p1, p2
    return None


def is_fully_normal(s):
    w = s_canonical(_items(s))
    return _fully_normal_items(w)


def _fully_normal_items(w):
    if not _normal_items(w):
        return False
    if len(w) == 1 and isinstance(w[0], OmegaPower):
        return False
    if _sandwich(w) is not None:
        return False
    return True


# ---------------------------------------------------------------------------
# periodicity


def find_period(s):
    """The fully normal x with s = x^n or s = x^(w+m), or None.

    Candidates come from the length polynomial: -m ranges over its
    integer roots for the w-power case, and n over the divisors of the
    coefficient gcd for the plain-power case; each candidate period
    length yields at most one prefix, verified by reassembly.
    """
    w = s_canonical(_items(s))
    rep = _find_period_items(w)
    if rep is None:
        return None
    kind, value, base = rep
    return PeriodReport(NormalSword(Sword.make(base), True), kind, value)


def _find_period_items(w):
    total = length(w)
    if total.degree >= 1:
        for root in sorted(total.integer_roots()):
            m = -root
            dm = poly_divmod(total, OmegaPoly((m, 1)))
            if dm is None or not dm[1].is_zero():
                continue
            xlen = dm[0]
            if xlen.is_zero() or xlen.leading() <= 0:
                continue
            sp = split_at(w, xlen)
            if sp is None:
                continue
            x = s_canonical(sp[0])
            if not x:
                continue
            if s_canonical((OmegaPower(x, m),)) == w and _fully_normal_items(x):
                return ("omega", m, x)
    g = total.content()
    for n in range(g, 1, -1):
        if g % n:
            continue
        xlen = OmegaPoly(tuple(c // n for c in total.coeffs))
        sp = split_at(w, xlen)
        if sp is None:
            continue
        x = s_canonical(sp[0])
        if not x:
            continue
        if s_canonical(x * n) == w and _fully_normal_items(x):
            return ("plain", n, x)
    return None


# ---------------------------------------------------------------------------
# merging and ring reduction


def merge_product(a, b, trace=None):
    """The normal form of a·b for normal a, b (public wrapper below)."""
    res = _merge_items(_items(a), _items(b), trace)
    return _wrap(res)


def _merge_items(a, b, trace=None):
    if not a:
        return s_canonical(b)
    if not b:
        return s_canonical(a)
    hit = _shared_period(a, b)
    if hit is not None:
        y, pa, ra, pb, rb = hit
        trace_step(
            trace,
            "R-mergeExp",
            "join",
            concat_items(OmegaPower(y, pa), OmegaPower(y, pb)),
            (OmegaPower(y, pa + pb),),
        )
        out = s_canonical(concat_items(ra, OmegaPower(y, pa + pb), rb))
    else:
        out = s_canonical(concat_items(a, b))
    return _collapse_runs(out, trace)


def _collapse_runs(w, trace=None):
    # safety net: literal adjacent equal-base rings are merge patterns
    items = list(w)
    i = 0
    while i + 1 < len(items):
        a, b = items[i], items[i + 1]
        if (
            isinstance(a, OmegaPower)
            and isinstance(b, OmegaPower)
            and a.base == b.base
        ):
            trace_step(
                trace, "R-mergeExp", "run", (a, b), (OmegaPower(a.base, a.q + b.q),)
            )
            items[i : i + 2] = [OmegaPower(a.base, a.q + b.q)]
            i = max(i - 1, 0)
            continue
        i += 1
    return s_canonical(tuple(items))


def reduce_omega_power(rho, q, trace=None, _depth=0):
    """The normal form of rho^(w+q) for normal rho (public wrapper below)."""
    return _wrap(_reduce_ring(_items(rho), q, trace, _depth))


def _reduce_ring(rho, q, trace=None, _depth=0):
    rho = s_canonical(rho)
    if _depth > height(rho) + 2:
        raise InternalError("ring reduction recursed past the height bound")
    period = _find_period_items(rho)
    if period is not None:
        kind, value, x = period
        if kind == "plain":
            trace_step(
                trace,
                "R-plainPower",
                "ring",
                (OmegaPower(rho, q),),
                (OmegaPower(x, value * q),),
            )
        else:
            trace_step(
                trace,
                "R-nestedOmega",
                "ring",
                (OmegaPower(rho, q),),
                (OmegaPower(x, value * q),),
            )
        return s_canonical((OmegaPower(x, value * q),))
    sw = _sandwich(rho)
    if sw is not None:
        x, m1, m2 = sw
        mid = _strip_both(rho, x, m1, m2)
        if mid is None:
            raise InternalError("sandwich detected but not strippable")
        # rho^(w+q) = rho·rho^(w+q-1); roll the x^(w+m2) suffix into the
        # ring, then merge the adjacent x-powers inside the rotated base
        rotated = concat_items(OmegaPower(x, m2), OmegaPower(x, m1), mid)
        trace_step(
            trace,
            "S-windOff",
            "ring",
            (OmegaPower(rho, q),),
            concat_items(rho, OmegaPower(rho, q - 1)),
        )
        trace_step(
            trace,
            "S-roll",
            "ring",
            concat_items(OmegaPower(x, m2), OmegaPower(rho, q - 1)),
            concat_items(OmegaPower(rotated, q - 1), OmegaPower(x, m2)),
        )
        inner_base = _merge_items((OmegaPower(x, m1 + m2),), mid, None)
        trace_step(
            trace,
            "R-mergeExp",
            "ring.base",
            (OmegaPower(rotated, q - 1),),
            (OmegaPower(inner_base, q - 1),),
        )
        inner = _reduce_ring(inner_base, q - 1, trace, _depth + 1)
        out = _merge_items((OmegaPower(x, m1),), mid, trace)
        out = _merge_items(out, inner, trace)
        out = _merge_items(out, (OmegaPower(x, m2),), trace)
        return out
    return s_canonical((OmegaPower(rho, q),))


def _strip_both(rho, x, m1, m2):
    """rho minus its x^(w+m1) prefix and x^(w+m2) suffix, as items."""
    pre_len = length(x).mul_omega_plus(m1)
    sp = split_at(rho, pre_len)
    if sp is None or s_canonical(sp[0]) != s_canonical((OmegaPower(x, m1),)):
        return None
    rest = sp[1]
    suf_len = length(x).mul_omega_plus(m2)
    keep = length(rest) - suf_len
    sp2 = split_at(rest, keep)
    if sp2 is None or s_canonical(sp2[1]) != s_canonical((OmegaPower(x, m2),)):
        return None
    return s_canonical(sp2[0])


# ---------------------------------------------------------------------------
# normalization


def normalize(z, trace=None, fold="left"):
    """A normal sword reachable from z by winding/rolling and merging."""
    return _wrap(_normalize_items(as_items(z), trace, fold))


def _normalize_items(z, trace=None, fold="left"):
    w = s_canonical(z, trace)
    pieces = []
    buf = []
    for it in w:
        if isinstance(it, Letter):
            buf.append(it)
        else:
            if buf:
                pieces.append(tuple(buf))
                buf = []
            rho = _normalize_items(it.base, trace, fold)
            pieces.append(_reduce_ring(rho, it.q, trace))
    if buf:
        pieces.append(tuple(buf))
    if not pieces:
        return ()
    if fold == "right":
        acc = pieces[-1]
        for p in reversed(pieces[:-1]):
            acc = _merge_items(p, acc, trace)
    else:
        acc = pieces[0]
        for p in pieces[1:]:
            acc = _merge_items(acc, p, trace)
    return acc


def _wrap(items):
    sw = Sword.make(items)
    return NormalSword(sw, _fully_normal_items(sw.rep))
