import random

from epidecide.lcp import longest_common_prefix, longest_common_suffix, normal_equal
from epidecide.normalizer import normalize
from epidecide.sword import s_equal, strip_prefix, strip_suffix
from epidecide.zterm import mirror, parse, render
from util import random_zword

W = parse


def LCP(a, b):
    return longest_common_prefix(normalize(W(a)), normalize(W(b)))


def LCS(a, b):
    return longest_common_suffix(normalize(W(a)), normalize(W(b)))


def test_lcp_examples():
    assert LCP("xyz", "xyw").rep == W("xy")
    assert LCP("x^wy", "x^wz").rep == W("x^w")
    assert LCP("(xy)^wx", "(xy)^(w+2)").rep == W("(xy)^wx")


def test_lcs_examples():
    assert LCS("zyx", "wyx").rep == W("yx")
    assert LCS("yx^w", "zx^w").rep == W("x^w")
    # the precise semantics: the reversal-mirror of the LCP of mirrors.
    # x(yx)^w = (xy)^w x, whose suffixes all end in x or a (yx)-ring,
    # while every suffix of (xy)^(w+2) ends in y or an (xy)-ring, so the
    # longest common suffix is empty (strip verifies both directions).
    got = LCS("x(yx)^w", "(xy)^(w+2)")
    assert got.rep == ()
    assert strip_suffix(normalize(W("x(yx)^w")).rep, got.rep) is not None
    assert strip_suffix(normalize(W("(xy)^(w+2)")).rep, got.rep) is not None


def test_normal_equal_examples():
    assert normal_equal(normalize(W("(xy)^wx")), normalize(W("x(yx)^w")))
    assert not normal_equal(normalize(W("x^w")), normalize(W("x^(w+1)")))
    assert normal_equal(normalize(W("x")), normalize(W("x")))


def _random_normals(rng, n, **kw):
    out = []
    while len(out) < n:
        w = normalize(random_zword(rng, **kw))
        if w.rep:
            out.append(w)
    return out


def test_lcp_properties_random():
    rng = random.Random(31)
    pool = _random_normals(rng, 120, alphabet="xy", max_height=2, max_nodes=10, q_range=2)
    for _ in range(200):
        a, b = rng.choice(pool), rng.choice(pool)
        p = longest_common_prefix(a, b)
        ra = strip_prefix(a.rep, p.rep)
        rb = strip_prefix(b.rep, p.rep)
        assert ra is not None and rb is not None
        if ra.rep and rb.rep:
            extra = longest_common_prefix(normalize(ra.rep), normalize(rb.rep))
            assert extra.rep == ()
        q = longest_common_prefix(b, a)
        assert s_equal(p.rep, q.rep, bfs_fallback=False)
        assert normal_equal(normalize(longest_common_prefix(a, a).rep), a)


def test_lcp_consistent_with_s_equal():
    rng = random.Random(32)
    pool = _random_normals(rng, 60, alphabet="xy", max_height=1, max_nodes=7, q_range=2)
    for _ in range(120):
        a, b = rng.choice(pool), rng.choice(pool)
        assert normal_equal(a, b) == s_equal(a.rep, b.rep)
