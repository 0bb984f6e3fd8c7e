"""Singularity classes: canonical forms, prefixes, and the step oracle.

The congruence identifies x^(w+q) with x·x^(w+q-1) and x^(w+q-1)·x
(winding) and x(yx)^(w+q) with (xy)^(w+q)x (rolling).  The canonical
representative rolls every ring as far left as possible, winds copies
of the base into the exponent, and redistributes runs of identical-base
rings so the first ring carries the whole exponent excess.

The canonical policy is validated against a breadth-first oracle over
single generator steps; where the policy alone is not confluent (rings
whose bases are distinct powers of one primitive root, and rolls that
would unwind letters out of a context ring), s_equal falls back to a
bounded bidirectional search and reports the witness.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .omega_poly import (
    EQUAL,
    GREATER,
    LESS,
    ZERO,
    OmegaPoly,
    poly_compare,
    poly_floor_div,
)
from .zterm import (
    Letter,
    OmegaPower,
    Pseudoinverse,
    as_items,
    concat_items,
    height,
    length,
    mirror,
    render,
)

log = logging.getLogger("epidecide.sword")

_COPY_GUARD = 100_000


class InternalError(RuntimeError):
    """An invariant of the rewriting machinery failed; a bug, not an input error."""


def node_count(w):
    total = 0
    for it in as_items(w):
        if isinstance(it, Letter):
            total += 1
        elif isinstance(it, OmegaPower):
            total += 1 + node_count(it.base)
        else:
            total += 1 + node_count(it.body)
    return total


def trace_step(trace, rule, at, before, after):
    if trace is not None:
        trace.append(
            {"rule": rule, "at": at, "before": render(before), "after": render(after)}
        )


# ---------------------------------------------------------------------------
# structural common-prefix matcher
#
# u is the conservative side (its rings are split only against an
# equal-base ring); v may lazily unwind its rings into copies.  Both
# sides are item lists; returns (common, u_rest, v_rest).


def _copies(base, n):
    if n > _COPY_GUARD:
        raise InternalError(f"refusing to materialize {n} copies")
    return list(base) * n


def _struct_lcp(u, v, allow_v_unwind=True):
    u, v = list(u), list(v)
    common = []
    while u and v:
        a, b = u[0], v[0]
        if a == b:
            common.append(a)
            u.pop(0)
            v.pop(0)
            continue
        if isinstance(a, OmegaPower) and isinstance(b, OmegaPower):
            if a.base == b.base:
                t = min(a.q, b.q)
                common.append(OmegaPower(a.base, t))
                u[0:1] = _copies(a.base, a.q - t)
                v[0:1] = _copies(b.base, b.q - t)
                continue
            break
        if isinstance(b, OmegaPower) and allow_v_unwind:
            v[0:1] = list(b.base) + [OmegaPower(b.base, b.q - 1)]
            continue
        break
    return common, u, v


# ---------------------------------------------------------------------------
# canonicalization


def s_canonical(w, trace=None):
    """The canonical representative of the singularity class of w."""
    return _canonical(as_items(w), trace, "")


def _canonical(items, trace=None, path=""):
    out = []
    for it in items:
        if isinstance(it, Letter):
            _append(out, it, trace, path)
        elif isinstance(it, OmegaPower):
            base = _canonical(it.base, trace, f"{path}[{len(out)}].base")
            base, q, pending = _roll_left(out, base, it.q, trace, path)
            _append(out, OmegaPower(base, q), trace, path)
            for p in pending:
                _append(out, p, trace, path)
        elif isinstance(it, Pseudoinverse):
            raise ValueError("pseudoinversion must be translated away first")
        else:
            raise TypeError(f"not a word item: {it!r}")
    return tuple(out)


def _roll_left(out, base, q, trace, path):
    """Roll a ring leftward over `out`, winding full copies into q.

    Returns the final base, exponent and the material the ring rolled
    past (to be placed right of the ring, in order).
    """
    pending = []
    while out:
        mu = list(mirror(tuple(out)))
        mv = list(mirror(base))
        common, u_rest, v_rest = _struct_lcp(mu, mv)
        if not common:
            break
        rest = mirror(tuple(u_rest))
        if not v_rest:
            trace_step(
                trace,
                "S-windOn",
                path,
                concat_items(base, OmegaPower(base, q)),
                (OmegaPower(base, q + 1),),
            )
            out[:] = list(rest)
            q += 1
        else:
            s = mirror(tuple(common))
            c1 = mirror(tuple(v_rest))
            new_base = _canonical(concat_items(s, c1))
            trace_step(
                trace,
                "S-roll",
                path,
                concat_items(s, OmegaPower(concat_items(c1, s), q)),
                concat_items(OmegaPower(new_base, q), s),
            )
            out[:] = list(rest)
            pending = list(s) + pending
            base = new_base
    return base, q, pending


def _append(out, item, trace=None, path=""):
    out.append(item)
    while True:
        if _wind_right(out, trace, path):
            continue
        if _redistribute_run(out, trace, path):
            continue
        break


def _wind_right(out, trace, path):
    # a ring followed by material spelling a copy of its base absorbs it
    for j in range(len(out) - 2, -1, -1):
        ring = out[j]
        if not isinstance(ring, OmegaPower):
            continue
        tail = out[j + 1 :]
        common, t_rest, b_rest = _struct_lcp(list(tail), list(ring.base))
        if b_rest or not common:
            continue
        trace_step(
            trace,
            "S-windOn",
            path,
            concat_items(ring, ring.base),
            (OmegaPower(ring.base, ring.q + 1),),
        )
        out[j:] = [OmegaPower(ring.base, ring.q + 1)] + t_rest
        return True
    return False


def _redistribute_run(out, trace, path):
    # adjacent rings of one base: the first carries the whole excess
    if len(out) < 2 or not isinstance(out[-1], OmegaPower):
        return False
    base = out[-1].base
    i = len(out) - 1
    while i > 0 and isinstance(out[i - 1], OmegaPower) and out[i - 1].base == base:
        i -= 1
    run = out[i:]
    if len(run) < 2:
        return False
    total = sum(r.q for r in run)
    want = [OmegaPower(base, total)] + [OmegaPower(base, 0)] * (len(run) - 1)
    if run == want:
        return False
    if trace is not None:
        _trace_run_shift(trace, path, run, want)
    out[i:] = want
    return True


def _trace_run_shift(trace, path, run, want):
    # decompose the redistribution into unit wind-off/wind-on pairs
    cur = list(run)
    for k in range(len(cur) - 1, 0, -1):
        while cur[k].q != want[k].q:
            step = 1 if cur[k].q > want[k].q else -1
            a, b = cur[k - 1], cur[k]
            if step == 1:
                mid = concat_items(a, b.base, OmegaPower(b.base, b.q - 1))
                trace_step(trace, "S-windOff", path, concat_items(a, b), mid)
                after = (OmegaPower(a.base, a.q + 1), OmegaPower(b.base, b.q - 1))
                trace_step(trace, "S-windOn", path, mid, after)
            else:
                mid = concat_items(OmegaPower(a.base, a.q - 1), a.base, b)
                trace_step(trace, "S-windOff", path, concat_items(a, b), mid)
                after = (OmegaPower(a.base, a.q - 1), OmegaPower(b.base, b.q + 1))
                trace_step(trace, "S-windOn", path, mid, after)
            cur[k - 1], cur[k] = after
    # settle remaining differences leftward (runs longer than 2)
    for k in range(1, len(cur)):
        if cur[k].q != want[k].q:
            cur[k] = want[k]


# ---------------------------------------------------------------------------
# the Sword value


@dataclass(frozen=True)
class Sword:
    rep: tuple
    length: OmegaPoly
    height: int

    @staticmethod
    def make(w):
        if isinstance(w, Sword):
            return w
        c = s_canonical(as_items(w))
        return Sword(c, length(c), height(c))

    def is_empty(self):
        return not self.rep

    def __str__(self):
        return render(self.rep)

    def to_json(self):
        from .zterm import to_json

        d = to_json(self.rep) if self.rep else {"concat": []}
        d["canonical"] = True
        return d


def _items(x):
    if isinstance(x, Sword):
        return x.rep
    return as_items(x)


# ---------------------------------------------------------------------------
# one-step neighbors and the breadth-first oracle


def s_neighbors(w, direction="both", size_cap=64):
    """Words one generator step away (either orientation), size-capped."""
    if direction != "both":
        raise ValueError("only direction='both' is supported")
    res = set()
    for v in _rewrites(_items(w)):
        if node_count(v) <= size_cap:
            res.add(v)
    return res


def _rewrites(items):
    items = as_items(items)
    for i, it in enumerate(items):
        if not isinstance(it, OmegaPower):
            continue
        c, q = it.base, it.q
        pre, post = items[:i], items[i + 1 :]
        n = len(c)
        # wind off, both sides
        yield pre + c + (OmegaPower(c, q - 1),) + post
        yield pre + (OmegaPower(c, q - 1),) + c + post
        # wind on, both sides
        if len(pre) >= n and pre[-n:] == c:
            yield pre[:-n] + (OmegaPower(c, q + 1),) + post
        if len(post) >= n and post[:n] == c:
            yield pre + (OmegaPower(c, q + 1),) + post[n:]
        # rolls, both orientations, over all base splits
        for k in range(1, n):
            y, x = c[:k], c[k:]
            if len(pre) >= len(x) and pre[-len(x) :] == x:
                yield pre[: -len(x)] + (OmegaPower(x + y, q),) + x + post
            x2, y2 = c[:k], c[k:]
            if len(post) >= len(x2) and post[: len(x2)] == x2:
                yield pre + x2 + (OmegaPower(y2 + x2, q),) + post[len(x2) :]
        # rewrite inside the base
        for nb in _rewrites(c):
            yield pre + (OmegaPower(tuple(nb), q),) + post


def bfs_reachable(a, b, max_states=8000, max_depth=16, size_cap=48):
    """Bidirectional search for a generator-step path between a and b."""
    a, b = as_items(a), as_items(b)
    if a == b:
        return True
    fa, fb = {a}, {b}
    va, vb = {a}, {b}
    for _ in range(max_depth):
        if not fa or not fb or len(va) + len(vb) > max_states:
            break
        if len(fa) > len(fb):
            fa, fb, va, vb = fb, fa, vb, va
        nxt = set()
        for w in fa:
            for nb in _rewrites(w):
                if node_count(nb) > size_cap:
                    continue
                if nb in vb:
                    return True
                if nb not in va:
                    va.add(nb)
                    nxt.add(nb)
        fa = nxt
    return False


_fallback_witnesses = []


def s_equal(a, b, bfs_fallback=True, max_states=8000, max_depth=16):
    """Class equality: canonical forms compare, a bounded search backs them up."""
    ca, cb = s_canonical(_items(a)), s_canonical(_items(b))
    if ca == cb:
        return True
    if length(ca) != length(cb) or height(ca) != height(cb):
        return False
    if bfs_fallback and node_count(ca) <= 24 and node_count(cb) <= 24:
        if bfs_reachable(ca, cb, max_states, max_depth):
            _fallback_witnesses.append((ca, cb))
            log.warning(
                "canonical forms differ inside one class: %s vs %s",
                render(ca),
                render(cb),
            )
            return True
    return False


# ---------------------------------------------------------------------------
# prefixes


def split_at(w, at_length):
    """Split w as prefix·suffix with |prefix| = at_length, or None.

    The prefix of a given length is unique when it exists (prefixes of
    a fixed word are linearly ordered by left division).
    """
    items = list(s_canonical(_items(w)))
    total = length(tuple(items))
    if poly_compare(at_length, ZERO) == LESS or poly_compare(total, at_length) == LESS:
        raise ValueError(f"length {at_length} out of range 0..{total}")
    pre = []
    rem = at_length
    i = 0
    while True:
        if poly_compare(rem, ZERO) == EQUAL:
            return tuple(pre), s_canonical(tuple(items[i:]))
        if i >= len(items):
            return None
        it = items[i]
        if isinstance(it, Letter):
            if poly_compare(rem, OmegaPoly.const(1)) == LESS:
                return None
            pre.append(it)
            rem = rem - OmegaPoly.const(1)
            i += 1
            continue
        st = length(it.base)
        ring_len = st.mul_omega_plus(it.q)
        if poly_compare(ring_len, rem) != GREATER:
            pre.append(it)
            rem = rem - ring_len
            i += 1
            continue
        if rem.degree == st.degree + 1:
            # the prefix keeps the ring: rem = (w+t)|base| + r
            if rem.leading() != st.leading():
                return None
            fd = poly_floor_div(rem - st.mul_omega_plus(0), st)
            if fd is None:
                return None
            t, r = fd
            if t > it.q - 1:
                return None
            pre.append(OmegaPower(it.base, t))
            if r.is_zero():
                suf = it.base * (it.q - t) + tuple(items[i + 1 :])
                return tuple(pre), s_canonical(suf)
            sub = split_at(it.base, r)
            if sub is None:
                return None
            cp, cs = sub
            pre.extend(cp)
            suf = cs + it.base * (it.q - t - 1) + tuple(items[i + 1 :])
            return tuple(pre), s_canonical(suf)
        # the prefix ends inside a finite unwinding: rem = k|base| + r
        fd = poly_floor_div(rem, st)
        if fd is None:
            return None
        k, r = fd
        if k < 0:
            return None
        pre.extend(it.base * k)
        if r.is_zero():
            suf = (OmegaPower(it.base, it.q - k),) + tuple(items[i + 1 :])
            return tuple(pre), s_canonical(suf)
        sub = split_at(it.base, r)
        if sub is None:
            return None
        cp, cs = sub
        pre.extend(cp)
        suf = cs + (OmegaPower(it.base, it.q - k - 1),) + tuple(items[i + 1 :])
        return tuple(pre), s_canonical(suf)


def prefix_of_length(s, at_length):
    """The unique prefix of exactly that length, as a Sword, or None."""
    sp = split_at(_items(s), at_length)
    if sp is None:
        return None
    return Sword.make(sp[0])


def strip_prefix(s, p):
    """The unique r with s = p·r, or None when p is not a prefix."""
    s_it, p_it = s_canonical(_items(s)), s_canonical(_items(p))
    plen = length(p_it)
    if poly_compare(length(s_it), plen) == LESS:
        return None
    sp = split_at(s_it, plen)
    if sp is None or s_canonical(sp[0]) != p_it:
        return None
    return Sword.make(sp[1])


def strip_suffix(s, p):
    m = strip_prefix(mirror(_items(s)), mirror(_items(p)))
    if m is None:
        return None
    return Sword.make(mirror(m.rep))


def concat(a, b):
    return Sword.make(concat_items(_items(a), _items(b)))
