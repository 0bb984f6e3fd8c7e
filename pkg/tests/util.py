"""Shared test helpers: random word generation and oracle plumbing."""

import random

from epidecide.zterm import Letter, OmegaPower, as_items


def random_zword(rng, alphabet="xy", max_height=1, max_nodes=8, q_range=2):
    """A random nonempty Z-word within the given structural bounds."""
    budget = rng.randint(1, max_nodes)

    def gen(height_left, budget):
        items = []
        n = rng.randint(1, max(1, budget))
        spent = 0
        while spent < n:
            room = n - spent
            if height_left > 0 and room >= 2 and rng.random() < 0.4:
                sub = gen(height_left - 1, room - 1)
                if sub:
                    items.append(OmegaPower(sub, rng.randint(-q_range, q_range)))
                    spent += _size(sub) + 1
                    continue
            items.append(Letter(rng.choice(alphabet)))
            spent += 1
        return tuple(items)

    w = gen(max_height, budget)
    return w if w else (Letter(rng.choice(alphabet)),)


def _size(w):
    total = 0
    for it in as_items(w):
        if isinstance(it, OmegaPower):
            total += 1 + _size(it.base)
        else:
            total += 1
    return total


def random_step_sequence(rng, w, steps, size_cap=40):
    """Apply a few random generator steps; returns the rewritten word."""
    from epidecide.sword import s_neighbors

    cur = as_items(w)
    for _ in range(steps):
        nbrs = sorted(s_neighbors(cur, size_cap=size_cap), key=repr)
        if not nbrs:
            break
        cur = rng.choice(nbrs)
    return cur
