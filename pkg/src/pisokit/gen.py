"""Seeded random generators for trees, prefix codes and arrows."""
from __future__ import annotations

import random
from functools import lru_cache

from .prefix import PrefixArrow
from .trees import S, Tree, leaves, show

DEFAULT_SEED = 0xC0FFEE


def rng_for(seed: int | None = None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


@lru_cache(maxsize=None)
def _count(k: int) -> int:
    if k == 1:
        return 1
    return sum(_count(i) * _count(k - i) for i in range(1, k))


def random_tree(rng: random.Random, k: int) -> Tree:
    """Uniform among trees with ``k`` leaves."""
    if k == 1:
        return S
    weights = [_count(i) * _count(k - i) for i in range(1, k)]
    i = rng.choices(range(1, k), weights=weights)[0]
    return (random_tree(rng, i), random_tree(rng, k - i))


def code_of(t: Tree) -> list[str]:
    """The complete prefix code whose words are the leaf addresses of ``t``, as bits."""
    return [x.replace("L", "0").replace("R", "1") for x in leaves(t)]


def random_code(rng: random.Random, k: int, max_depth: int | None = None) -> list[str]:
    if max_depth is not None and k > 2 ** max_depth:
        raise ValueError(f"no complete prefix code of size {k} within depth {max_depth}")
    while True:
        words = code_of(random_tree(rng, k))
        if max_depth is None or max(len(w) for w in words) <= max_depth:
            return words


def _composition(rng: random.Random, n: int, parts: int, cap: int | None) -> list[int]:
    while True:
        cuts = sorted(rng.sample(range(1, n), parts - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
        if cap is None or max(sizes) <= cap:
            return sizes


def _pieces(rng: random.Random, t: Tree, n: int, max_depth: int | None) -> list[tuple[str, str]]:
    out = []
    cap = None if max_depth is None else 2 ** max_depth
    for leaf, k in zip(leaves(t), _composition(rng, n, len(leaves(t)), cap)):
        out += [(leaf, w) for w in random_code(rng, k, max_depth)]
    return out


def random_unitary(
    rng: random.Random, dom: Tree = S, cod: Tree = S, kmin: int = 2, kmax: int = 8,
    max_depth: int | None = None,
) -> PrefixArrow:
    lo = max(kmin, len(leaves(dom)), len(leaves(cod)))
    hi = max(kmax, lo)
    if max_depth is not None:
        hi = min(hi, 2 ** max_depth * min(len(leaves(dom)), len(leaves(cod))))
        if hi < lo:
            raise ValueError(f"no unitary {show(dom)} -> {show(cod)} with words of length <= {max_depth}")
    n = rng.randint(lo, hi)
    src = _pieces(rng, dom, n, max_depth)
    tgt = _pieces(rng, cod, n, max_depth)
    rng.shuffle(tgt)
    return PrefixArrow(dom, cod, tuple((t, u, s, v) for (t, u), (s, v) in zip(tgt, src)))


def random_arrow(
    rng: random.Random, dom: Tree = S, cod: Tree = S, kmax: int = 6, drop: float = 0.3,
    max_depth: int | None = 4,
) -> PrefixArrow:
    """A random partial isomorphism: a random unitary with some terms removed."""
    u = random_unitary(rng, dom, cod, 1, kmax, max_depth)
    kept = tuple(x for x in u.terms if rng.random() >= drop)
    return PrefixArrow(dom, cod, kept)
