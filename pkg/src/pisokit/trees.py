"""Free non-empty binary trees over the single symbol ``S``.

A tree is either the string ``"S"`` or a pair ``(left, right)`` of trees.
Leaves are addressed by words over ``{L, R}``; the root leaf of ``S`` is ``""``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Union

Tree = Union[str, tuple]

S = "S"


class TreeError(ValueError):
    pass


def is_tree(t) -> bool:
    if t == S:
        return True
    return isinstance(t, tuple) and len(t) == 2 and is_tree(t[0]) and is_tree(t[1])


def check_tree(t) -> Tree:
    if not is_tree(t):
        raise TreeError(f"not a tree: {t!r}")
    return t


def box(a: Tree, b: Tree) -> Tree:
    return (a, b)


@lru_cache(maxsize=None)
def leaves(t: Tree) -> tuple[str, ...]:
    """Leaf addresses of ``t`` in left-to-right order."""
    if t == S:
        return ("",)
    return tuple("L" + x for x in leaves(t[0])) + tuple("R" + x for x in leaves(t[1]))


def size(t: Tree) -> int:
    return len(leaves(t))


def depth(t: Tree) -> int:
    if t == S:
        return 0
    return 1 + max(depth(t[0]), depth(t[1]))


def subtree(t: Tree, path: str) -> Tree:
    for c in path:
        if t == S:
            raise TreeError(f"path {path!r} leaves the tree")
        t = t[0] if c == "L" else t[1]
    return t


def show(t: Tree) -> str:
    """Render as an S-expression: ``S`` or ``(A B)``."""
    if t == S:
        return S
    return f"({show(t[0])} {show(t[1])})"


def parse_tree(src: str) -> Tree:
    """Inverse of :func:`show`; whitespace-insensitive."""
    toks = src.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def go() -> Tree:
        nonlocal pos
        if pos >= len(toks):
            raise TreeError(f"unexpected end of tree {src!r}")
        tok = toks[pos]
        pos += 1
        if tok == S:
            return S
        if tok != "(":
            raise TreeError(f"bad token {tok!r} in tree {src!r}")
        a = go()
        b = go()
        if pos >= len(toks) or toks[pos] != ")":
            raise TreeError(f"tree node must have exactly two children: {src!r}")
        pos += 1
        return (a, b)

    t = go()
    if pos != len(toks):
        raise TreeError(f"trailing input in tree {src!r}")
    return t


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (S,)
    out = []
    for k in range(1, n):
        for a in _trees(k):
            for b in _trees(n - k):
                out.append((a, b))
    return tuple(out)


def trees_with(n: int) -> tuple[Tree, ...]:
    """All trees with exactly ``n`` leaves (Catalan many)."""
    if n < 1:
        raise TreeError("trees are non-empty")
    return _trees(n)


def trees_upto(n: int) -> Iterator[Tree]:
    for k in range(1, n + 1):
        yield from _trees(k)


def comb(n: int) -> Tree:
    """Right comb ``S□(S□(...))`` with ``n`` leaves."""
    t: Tree = S
    for _ in range(n - 1):
        t = (S, t)
    return t
