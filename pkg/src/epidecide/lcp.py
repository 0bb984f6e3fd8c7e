"""Longest common prefix/suffix of normal words, and their equality.

Heads are compared structurally: identical items advance, equal-base
rings share the smaller exponent and leave copies behind, a ring facing
a letter unwinds lazily, and two rings with different bases of the same
length degree are settled by a bounded comparison of unwindings (a
common prefix outlasting twice both periods would force the bases to
share a primitive root, impossible for distinct fully normal bases, so
the bound is final).  Rings of different degree unwind the deeper one.
"""

from __future__ import annotations

from .omega_poly import LESS, poly_compare
from .sword import InternalError, Sword, s_canonical, strip_prefix
from .zterm import Letter, OmegaPower, as_items, length, mirror

_COPY_GUARD = 100_000


def _items(x):
    from .normalizer import NormalSword

    if isinstance(x, (Sword, NormalSword)):
        return x.rep
    return as_items(x)


def _copies(base, n):
    if n > _COPY_GUARD:
        raise InternalError(f"refusing to materialize {n} copies")
    return list(base) * n


def _unwind_count(own, other):
    """Copies of `own` whose total length strictly exceeds 2(|own|+|other|)."""
    lo, lt = length(own), length(other)
    bound = lo + lo + lt + lt
    k = 3
    while poly_compare(lo.scale(k), bound) != 1:  # GREATER
        k += 1
        if k > _COPY_GUARD:
            raise InternalError("no finite unwinding exceeds the bound")
    return k


def _lcp_items(a, b):
    a, b = list(a), list(b)
    out = []
    fuel = _COPY_GUARD
    while a and b:
        fuel -= 1
        if fuel <= 0:
            raise InternalError("common-prefix scan did not converge")
        A, B = a[0], b[0]
        if A == B:
            out.append(A)
            a.pop(0)
            b.pop(0)
            continue
        a_ring = isinstance(A, OmegaPower)
        b_ring = isinstance(B, OmegaPower)
        if not a_ring and not b_ring:
            break
        if a_ring and b_ring:
            if A.base == B.base:
                t = min(A.q, B.q)
                out.append(OmegaPower(A.base, t))
                a[0:1] = _copies(A.base, A.q - t)
                b[0:1] = _copies(B.base, B.q - t)
                # leftover copies may re-roll into what follows
                a = list(s_canonical(tuple(a)))
                b = list(s_canonical(tuple(b)))
                continue
            da, db = length(A.base).degree, length(B.base).degree
            if da == db:
                ka = _unwind_count(A.base, B.base)
                kb = _unwind_count(B.base, A.base)
                t = _lcp_items(
                    s_canonical(A.base * ka), s_canonical(B.base * kb)
                )
                out.extend(t)
                break
            if da > db:
                a[0:1] = list(A.base) + [OmegaPower(A.base, A.q - 1)]
            else:
                b[0:1] = list(B.base) + [OmegaPower(B.base, B.q - 1)]
            continue
        if a_ring:
            a[0:1] = list(A.base) + [OmegaPower(A.base, A.q - 1)]
        else:
            b[0:1] = list(B.base) + [OmegaPower(B.base, B.q - 1)]
    return tuple(out)


def longest_common_prefix(a, b):
    """The maximal common prefix of two normal swords."""
    ai, bi = s_canonical(_items(a)), s_canonical(_items(b))
    return Sword.make(_lcp_items(ai, bi))


def longest_common_suffix(a, b):
    ai = s_canonical(mirror(_items(a)))
    bi = s_canonical(mirror(_items(b)))
    return Sword.make(mirror(_lcp_items(ai, bi)))


def normal_equal(a, b):
    """Two normal swords coincide iff lengths match and the common
    prefix exhausts both."""
    ai, bi = _items(a), _items(b)
    la, lb = length(ai), length(bi)
    if poly_compare(la, lb) != 0:
        return False
    p = longest_common_prefix(ai, bi)
    return poly_compare(p.length, la) == 0
