"""Terms over an alphabet: products, pseudoinversion, and w-powers.

A word is a flat tuple of items; an item is a Letter, an OmegaPower
(ring) with an integer exponent offset q, or a Pseudoinverse.  Plain
unary-semigroup terms are words without OmegaPower nodes; Z-words are
words without Pseudoinverse nodes.  The two translations of the theory
live here: pseudoinversion becomes the (w-1)-power, and a (w+q)-power
becomes x'x^(q+1) for q >= 0 and x'^(-q) otherwise.

Grammar (ASCII): letters a-z, juxtaposition, parentheses, postfix '
for pseudoinversion, ^n for a plain power (n >= 2), ^w / ^(w+q) /
^(w-q) for w-powers.  Whitespace is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .omega_poly import OMEGA, ONE, ZERO, OmegaPoly, poly_eval

DEFAULT_EXPANSION_LIMIT = 10**6


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Letter:
    ch: str


@dataclass(frozen=True)
class OmegaPower:
    base: tuple  # nonempty item tuple
    q: int


@dataclass(frozen=True)
class Pseudoinverse:
    body: tuple  # nonempty item tuple


# A word is a tuple of items; () is the empty word (only legal as a
# prefix/suffix slot or an LCP result, never inside another node).
EMPTY = ()


def word(*items):
    return tuple(items)


def letters(text):
    return tuple(Letter(c) for c in text)


def ring(base, q):
    base = as_items(base)
    if not base:
        raise ValueError("empty base for a w-power")
    return OmegaPower(base, q)


def inv(body):
    body = as_items(body)
    if not body:
        raise ValueError("empty body for pseudoinversion")
    return Pseudoinverse(body)


def as_items(x):
    if isinstance(x, tuple):
        return x
    if isinstance(x, (Letter, OmegaPower, Pseudoinverse)):
        return (x,)
    raise TypeError(f"not a word: {x!r}")


def concat_items(*parts):
    out = []
    for p in parts:
        out.extend(as_items(p))
    return tuple(out)


def alphabet(w):
    out = set()
    for it in as_items(w):
        if isinstance(it, Letter):
            out.add(it.ch)
        elif isinstance(it, OmegaPower):
            out |= alphabet(it.base)
        else:
            out |= alphabet(it.body)
    return out


def is_zword(w):
    return all(
        not isinstance(it, Pseudoinverse)
        and (not isinstance(it, OmegaPower) or is_zword(it.base))
        for it in as_items(w)
    )


def is_plain_term(w):
    return all(
        not isinstance(it, OmegaPower)
        and (not isinstance(it, Pseudoinverse) or is_plain_term(it.body))
        for it in as_items(w)
    )


def mirror(w):
    """Structural reversal: reverses every concat level, keeps exponents."""
    out = []
    for it in reversed(as_items(w)):
        if isinstance(it, Letter):
            out.append(it)
        elif isinstance(it, OmegaPower):
            out.append(OmegaPower(mirror(it.base), it.q))
        else:
            out.append(Pseudoinverse(mirror(it.body)))
    return tuple(out)


# ---------------------------------------------------------------------------
# measures


def length(w):
    """Length as a polynomial in w: |a|=1, lengths add, rings multiply by (w+q)."""
    total = ZERO
    for it in as_items(w):
        if isinstance(it, Letter):
            total = total + ONE
        elif isinstance(it, OmegaPower):
            total = total + length(it.base).mul_omega_plus(it.q)
        else:
            raise ValueError("length is defined for Z-words only")
    return total


def height(w):
    """Nesting depth of w-powers; equals the degree of the length polynomial."""
    h = 0
    for it in as_items(w):
        if isinstance(it, OmegaPower):
            h = max(h, height(it.base) + 1)
        elif isinstance(it, Pseudoinverse):
            raise ValueError("height is defined for Z-words only")
    return h


def exponent_defect(w):
    """max{0, -q | a symbol w+q occurs}, over all depths."""
    d = 0
    for it in as_items(w):
        if isinstance(it, OmegaPower):
            d = max(d, -it.q, exponent_defect(it.base))
    return d


def expand(w, k, limit=DEFAULT_EXPANSION_LIMIT):
    """The plain word obtained by replacing w with the integer k.

    Requires k > exponent_defect(w) so every exponent is positive.
    """
    if k <= exponent_defect(w):
        raise ValueError(
            f"k={k} must exceed the exponent defect {exponent_defect(w)}"
        )
    n = poly_eval(length(w), k)
    if n > limit:
        raise ValueError(f"expansion of {n} letters exceeds the limit {limit}")
    out = []

    def go(items):
        for it in items:
            if isinstance(it, Letter):
                out.append(it.ch)
            else:
                for _ in range(k + it.q):
                    go(it.base)

    go(as_items(w))
    return "".join(out)


@dataclass(frozen=True)
class HeightRepresentation:
    """pi0 t1^(w+q1) pi1 ... tn^(w+qn) pin with every ti of height h-1."""

    prefix: tuple
    segments: tuple  # of (base_items, q, following_items)

    def reassemble(self):
        parts = [self.prefix]
        for base, q, tail in self.segments:
            parts.append((OmegaPower(base, q),))
            parts.append(tail)
        return concat_items(*parts)


def height_representation(w):
    w = as_items(w)
    h = height(w)
    if h == 0:
        raise ValueError("height representation needs height >= 1")
    marks = [
        i
        for i, it in enumerate(w)
        if isinstance(it, OmegaPower) and height(it.base) == h - 1
    ]
    prefix = w[: marks[0]]
    segments = []
    for pos, i in enumerate(marks):
        end = marks[pos + 1] if pos + 1 < len(marks) else len(w)
        segments.append((w[i].base, w[i].q, w[i + 1 : end]))
    return HeightRepresentation(prefix, tuple(segments))


# ---------------------------------------------------------------------------
# the two translations


def term_to_zword(w):
    """Replace every pseudoinversion by the (w-1)-power."""
    out = []
    for it in as_items(w):
        if isinstance(it, Letter):
            out.append(it)
        elif isinstance(it, OmegaPower):
            out.append(OmegaPower(term_to_zword(it.base), it.q))
        else:
            out.append(OmegaPower(term_to_zword(it.body), -1))
    return tuple(out)


def zword_to_term(w):
    """Replace x^(w+q) by x'x^(q+1) for q >= 0 and by x'^(-q) otherwise."""
    out = []
    for it in as_items(w):
        if isinstance(it, Letter):
            out.append(it)
        elif isinstance(it, Pseudoinverse):
            out.append(Pseudoinverse(zword_to_term(it.body)))
        else:
            base = zword_to_term(it.base)
            if it.q >= 0:
                out.append(Pseudoinverse(base))
                out.extend(base * (it.q + 1))
            else:
                out.extend((Pseudoinverse(base),) * (-it.q))
    return tuple(out)


# ---------------------------------------------------------------------------
# parsing


def parse(text, syntax="auto"):
    """Parse the ASCII grammar; syntax is "term", "zword" or "auto" (mixed)."""
    p = _Parser(text)
    w = p.parse_seq()
    p.expect_end()
    if syntax == "term" and not is_plain_term(w):
        raise ParseError("w-powers are not term syntax", 0)
    if syntax == "zword" and not is_zword(w):
        raise ParseError("pseudoinversion is not Z-word syntax", 0)
    return w


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        c = self.peek()
        self.pos += 1
        return c

    def fail(self, msg):
        raise ParseError(msg, self.pos)

    def expect_end(self):
        if self.peek():
            self.fail(f"unexpected {self.peek()!r}")

    def parse_seq(self):
        items = []
        while True:
            c = self.peek()
            if (c.isalpha() and c.islower()) or c == "(":
                items.extend(self.parse_suffixed())
            else:
                break
        if not items:
            self.fail("expected a letter or '('")
        return tuple(items)

    def parse_suffixed(self):
        atom = self.parse_atom()
        while True:
            c = self.peek()
            if c == "'":
                self.take()
                atom = (Pseudoinverse(atom),)
            elif c == "^":
                self.take()
                atom = self.parse_power(atom)
            else:
                return atom

    def parse_atom(self):
        c = self.peek()
        if c == "(":
            self.take()
            inner = self.parse_seq()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        if c.isalpha() and c.islower():
            self.take()
            return (Letter(c),)
        self.fail("expected a letter or '('")

    def parse_power(self, atom):
        c = self.peek()
        if c == "w":
            self.take()
            return (OmegaPower(atom, 0),)
        if c == "(":
            self.take()
            if self.peek() != "w":
                self.fail("expected 'w' in exponent")
            self.take()
            sign = self.peek()
            q = 0
            if sign in "+-":
                self.take()
                q = self._int()
                if sign == "-":
                    q = -q
            if self.peek() != ")":
                self.fail("expected ')' in exponent")
            self.take()
            return (OmegaPower(atom, q),)
        if c.isdigit():
            n = self._int()
            if n < 2:
                self.fail("plain power needs n >= 2")
            return atom * n
        self.fail("expected an exponent")

    def _int(self):
        if not self.peek().isdigit():
            self.fail("expected an integer")
        s = ""
        while self.peek().isdigit():
            s += self.take()
        return int(s)


# ---------------------------------------------------------------------------
# rendering


def render(w):
    items = as_items(w)
    if not items:
        return "ε"
    out = []
    i = 0
    while i < len(items):
        it = items[i]
        run = 1
        if not isinstance(it, Pseudoinverse):
            while i + run < len(items) and items[i + run] == it:
                run += 1
        body, atomic = _render_item(it)
        if run >= 2:
            out.append((body if atomic else f"({body})") + f"^{run}")
        else:
            out.append(body)
        i += run
    return "".join(out)


def _render_item(it):
    # returns (text, is-atomic-for-postfix)
    if isinstance(it, Letter):
        return it.ch, True
    if isinstance(it, OmegaPower):
        base = render(it.base)
        if len(it.base) == 1 and isinstance(it.base[0], Letter):
            head = base
        else:
            head = f"({base})"
        if it.q == 0:
            return f"{head}^w", False
        return f"{head}^(w{'+' if it.q > 0 else '-'}{abs(it.q)})", False
    base = render(it.body)
    if len(it.body) == 1 and isinstance(it.body[0], (Letter, Pseudoinverse)):
        return f"{base}'", False
    return f"({base})'", False


def to_json(w):
    items = as_items(w)
    if len(items) == 1:
        it = items[0]
        if isinstance(it, Letter):
            return {"letter": it.ch}
        if isinstance(it, OmegaPower):
            return {"omega": {"base": to_json(it.base), "q": it.q}}
        return {"inv": to_json(it.body)}
    return {"concat": [to_json((it,)) for it in items]}
