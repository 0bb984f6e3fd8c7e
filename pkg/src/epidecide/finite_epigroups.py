"""Finite models: Cayley tables, pseudoinversion, exhaustive checking.

Every finite semigroup is an epigroup: some power of each element lands
in a cycle group, and the pseudoinverse is the power x^m with m at
least the index and m ≡ -1 modulo the period.  The corpus bundles all
semigroups of order <= 3 up to isomorphism, small cyclic groups, the
classic zoo (null, left/right zero, the 5-element Brandt combinatorial
semigroup) and the adjoined-zero witnesses whose unary operation is
deliberately not the canonical pseudoinversion.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass

from .zterm import Letter, OmegaPower, Pseudoinverse, alphabet, as_items

COMPUTED, CUSTOM = "ComputedPseudoinverse", "CustomUnary"


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class CayleyTable:
    n: int
    mul: tuple  # n rows of n entries


@dataclass(frozen=True)
class Epigroup:
    table: CayleyTable
    unary: tuple
    provenance: str
    name: str

    @property
    def n(self):
        return self.table.n

    def mul(self, a, b):
        return self.table.mul[a][b]

    def inv(self, a):
        return self.unary[a]

    def to_json(self):
        d = {"name": self.name, "n": self.n, "mul": [list(r) for r in self.table.mul]}
        if self.provenance == CUSTOM:
            d["unary"] = list(self.unary)
        return d


def validate_table(mul, n):
    mul = tuple(tuple(row) for row in mul)
    if len(mul) != n or any(len(row) != n for row in mul):
        raise TableError(f"table must be {n}x{n}")
    rng = range(n)
    for row in mul:
        for v in row:
            if not (0 <= v < n):
                raise TableError(f"entry {v} outside 0..{n - 1}")
    for a in rng:
        for b in rng:
            ab = mul[a][b]
            for c in rng:
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise TableError(
                        f"not associative at ({a},{b},{c}): "
                        f"({a}{b}){c}={mul[ab][c]} but {a}({b}{c})={mul[a][mul[b][c]]}"
                    )
    return CayleyTable(n, mul)


def index_and_period(table, x):
    """Start of the cycle in the power sequence of x, and its length."""
    seen = {}
    powers = []
    y = x
    k = 1
    while y not in seen:
        seen[y] = k
        powers.append(y)
        y = table.mul[y][x]
        k += 1
    index = seen[y]
    period = k - index
    return index, period


def pseudoinverse(table, x):
    """x^m for the least m >= index(x) with m ≡ -1 (mod period(x))."""
    i, p = index_and_period(table, x)
    m = i + ((-1 - i) % p)
    y = x
    for _ in range(m - 1):
        y = table.mul[y][x]
    return y


def make_epigroup(name, mul, unary=None):
    table = validate_table(mul, len(mul))
    if unary is None:
        un = tuple(pseudoinverse(table, x) for x in range(table.n))
        return Epigroup(table, un, COMPUTED, name)
    un = tuple(unary)
    if len(un) != table.n or any(not (0 <= v < table.n) for v in un):
        raise TableError("unary map must cover the carrier")
    return Epigroup(table, un, CUSTOM, name)


def eval_term(E, t, assignment):
    """Evaluate a plain unary-semigroup term under letter -> element."""
    acc = None
    for it in as_items(t):
        if isinstance(it, Letter):
            if it.ch not in assignment:
                raise KeyError(f"letter {it.ch!r} has no assigned element")
            v = assignment[it.ch]
        elif isinstance(it, Pseudoinverse):
            v = E.inv(eval_term(E, it.body, assignment))
        elif isinstance(it, OmegaPower):
            raise ValueError("translate w-powers to terms before evaluating")
        else:
            raise TypeError(f"not a term item: {it!r}")
        acc = v if acc is None else E.mul(acc, v)
    if acc is None:
        raise ValueError("cannot evaluate the empty term")
    return acc


def check_identity(E, lhs, rhs):
    """First violating assignment in lexicographic order, or None."""
    letters = sorted(alphabet(lhs) | alphabet(rhs))
    for values in itertools.product(range(E.n), repeat=len(letters)):
        asg = dict(zip(letters, values))
        if eval_term(E, lhs, asg) != eval_term(E, rhs, asg):
            return asg
    return None


def search_counterexample(corpus, lhs, rhs, budget=200_000):
    """Scan the corpus exhaustively within a budget of evaluations."""
    letters = sorted(alphabet(lhs) | alphabet(rhs))
    spent = 0
    for E in corpus:
        for values in itertools.product(range(E.n), repeat=len(letters)):
            if spent >= budget:
                return None
            spent += 1
            asg = dict(zip(letters, values))
            if eval_term(E, lhs, asg) != eval_term(E, rhs, asg):
                return E, asg
    return None


# ---------------------------------------------------------------------------
# corpus construction


def make_adjoined_zero_witness(p):
    """The cyclic group of prime order p with an adjoined zero, where the
    unary operation fixes the identity and sends everything else to 0."""
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise ValueError(f"{p} is not prime")
    n = p + 1
    zero = p
    mul = [[0] * n for _ in range(n)]
    for a in range(p):
        for b in range(p):
            mul[a][b] = (a + b) % p
    for a in range(n):
        mul[a][zero] = zero
        mul[zero][a] = zero
    unary = [zero] * n
    unary[0] = 0  # the group identity is its own image
    return make_epigroup(f"H_{p}", mul, unary)


def cyclic_group(k):
    return make_epigroup(f"Z_{k}", [[(a + b) % k for b in range(k)] for a in range(k)])


def null_semigroup(k):
    # everything multiplies to the zero element 0
    return make_epigroup(f"null_{k}", [[0] * k for _ in range(k)])


def left_zero(k):
    return make_epigroup(f"leftzero_{k}", [[a] * k for a in range(k)])


def right_zero(k):
    return make_epigroup(f"rightzero_{k}", [list(range(k)) for _ in range(k)])


def brandt_b2():
    # matrix-unit semigroup {a=E12, b=E21, ab=E11, ba=E22, 0}
    a, b, ab, ba, z = 0, 1, 2, 3, 4
    mul = [[z] * 5 for _ in range(5)]
    mul[a][b] = ab
    mul[a][ba] = a
    mul[b][a] = ba
    mul[b][ab] = b
    mul[ab][a] = a
    mul[ab][ab] = ab
    mul[ba][b] = b
    mul[ba][ba] = ba
    return make_epigroup("brandt_B2", mul)


def _associative(mul, n):
    rng = range(n)
    for a in rng:
        for b in rng:
            ab = mul[a][b]
            for c in rng:
                if mul[ab][c] != mul[a][mul[b][c]]:
                    return False
    return True


def _iso_canonical(mul, n):
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        relabeled = tuple(
            tuple(inv[mul[perm[a]][perm[b]]] for b in range(n)) for a in range(n)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def enumerate_semigroups(max_n=3):
    """All associative tables of order <= max_n, one per isomorphism class."""
    out = []
    for n in range(1, max_n + 1):
        seen = set()
        for flat in itertools.product(range(n), repeat=n * n):
            mul = tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))
            if not _associative(mul, n):
                continue
            canon = _iso_canonical(mul, n)
            if canon not in seen:
                seen.add(canon)
        out.extend(sorted(seen))
        # keep per-order grouping deterministic: sorted within each n
    return out


_corpus_cache = None


def build_corpus(include_enumerated=True):
    """The deterministic default corpus (env var EPIDECIDE_CORPUS overrides)."""
    override = os.environ.get("EPIDECIDE_CORPUS")
    if override:
        return load_corpus_path(override)
    global _corpus_cache
    if _corpus_cache is not None:
        return list(_corpus_cache)
    members = []
    if include_enumerated:
        counters = {}
        for mul in enumerate_semigroups(3):
            n = len(mul)
            i = counters.get(n, 0)
            counters[n] = i + 1
            members.append(make_epigroup(f"order{n}_{i}", mul))
    for k in range(2, 7):
        members.append(cyclic_group(k))
    members.append(null_semigroup(2))
    members.append(null_semigroup(3))
    members.append(left_zero(2))
    members.append(right_zero(2))
    members.append(brandt_b2())
    for p in (2, 3, 5):
        members.append(make_adjoined_zero_witness(p))
    _corpus_cache = members
    return list(members)


def load_table_json(d, fallback_name="table"):
    name = d.get("name", fallback_name)
    n = d["n"]
    return make_epigroup(name, d["mul"], d.get("unary"))


def load_corpus_path(path):
    """A corpus from a JSON file (one table or a list) or a directory of them."""
    members = []
    if os.path.isdir(path):
        for fn in sorted(os.listdir(path)):
            if fn.endswith(".json"):
                with open(os.path.join(path, fn)) as fh:
                    members.extend(_tables_from(json.load(fh), fn))
    else:
        with open(path) as fh:
            members.extend(_tables_from(json.load(fh), os.path.basename(path)))
    if not members:
        raise TableError(f"no tables found at {path}")
    return members


def _tables_from(data, name):
    if isinstance(data, list):
        return [load_table_json(d, f"{name}[{i}]") for i, d in enumerate(data)]
    return [load_table_json(data, name)]
