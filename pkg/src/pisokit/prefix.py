"""Partial isomorphisms of finite disjoint unions of Cantor spaces.

An arrow ``dom -> cod`` between trees is a finite set of basic terms
``(t, u, s, v)``, read ``(t, u) <- (s, v)``: the point ``(s, v+w)`` of leaf
``s`` of ``dom`` goes to ``(t, u+w)`` of leaf ``t`` of ``cod``, for every
bit-string ``w``.  Terms are kept pairwise orthogonal on both sides and
reduced under the sibling-merge rewrite

    {(t, u0) <- (s, v0), (t, u1) <- (s, v1)}  ->  (t, u) <- (s, v)

which terminates and is confluent, so the stored form is canonical and
structural equality is extensional equality of partial maps.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import JoinUndefined, NeedsLongerInput, OrthogonalityError, TypingError
from .trees import S, Tree, check_tree, leaves, show

Term = tuple[str, str, str, str]
Point = tuple[str, str]

_BITS = frozenset("01")


def _prefix_free(keys: list[tuple[str, str]]) -> Optional[tuple]:
    """Return a comparable pair of (leaf, word) keys, or None if there is none."""
    keys = sorted(keys)
    for a, b in zip(keys, keys[1:]):
        if a[0] == b[0] and b[1].startswith(a[1]):
            return a, b
    return None


def _merge_siblings(terms: set[Term]) -> set[Term]:
    terms = set(terms)
    stack = list(terms)
    while stack:
        t, u, s, v = term = stack.pop()
        if term not in terms or not u or not v or u[-1] != v[-1]:
            continue
        flip = "1" if u[-1] == "0" else "0"
        partner = (t, u[:-1] + flip, s, v[:-1] + flip)
        if partner in terms:
            terms.discard(term)
            terms.discard(partner)
            parent = (t, u[:-1], s, v[:-1])
            terms.add(parent)
            stack.append(parent)
    return terms


@dataclass(frozen=True)
class PrefixArrow:
    dom: Tree
    cod: Tree
    terms: tuple[Term, ...]

    def __post_init__(self):
        check_tree(self.dom)
        check_tree(self.cod)
        dl, cl = set(leaves(self.dom)), set(leaves(self.cod))
        for t, u, s, v in self.terms:
            if t not in cl:
                raise TypingError(f"target leaf {t!r} is not a leaf of {show(self.cod)}")
            if s not in dl:
                raise TypingError(f"source leaf {s!r} is not a leaf of {show(self.dom)}")
            if not (set(u) <= _BITS and set(v) <= _BITS):
                raise ValueError(f"terms must be bit-strings: {(t, u, s, v)!r}")
        bad = _prefix_free([(s, v) for _, _, s, v in self.terms])
        if bad is None:
            bad = _prefix_free([(t, u) for t, u, _, _ in self.terms])
        if bad is not None:
            raise OrthogonalityError(f"not orthogonal: {bad[0]} and {bad[1]} overlap")
        reduced = _merge_siblings(set(self.terms))
        object.__setattr__(self, "terms", tuple(sorted(reduced, key=lambda x: (x[2], x[3], x[0], x[1]))))

    # -- constructors -------------------------------------------------------

    @classmethod
    def of(cls, dom: Tree, cod: Tree, terms: Iterable) -> "PrefixArrow":
        return cls(dom, cod, tuple(tuple(x) for x in terms))

    @classmethod
    def untyped(cls, *pairs: tuple[str, str]) -> "PrefixArrow":
        """Endo-arrow of ``S`` from ``(u, v)`` pairs meaning ``u <- v``."""
        return cls(S, S, tuple(("", u, "", v) for u, v in pairs))

    @classmethod
    def zero(cls, dom: Tree = S, cod: Tree = S) -> "PrefixArrow":
        return cls(dom, cod, ())

    @classmethod
    def identity(cls, t: Tree = S) -> "PrefixArrow":
        return cls(t, t, tuple((x, "", x, "") for x in leaves(t)))

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __matmul__(self, other: "PrefixArrow") -> "PrefixArrow":
        return compose(self, other)

    def dagger(self) -> "PrefixArrow":
        return dagger(self)

    def __str__(self) -> str:
        return render(self)


def compose(g: PrefixArrow, f: PrefixArrow) -> PrefixArrow:
    """``g ∘ f``."""
    if f.cod != g.dom:
        raise TypingError(f"cannot compose: cod {show(f.cod)} != dom {show(g.dom)}")
    by_leaf: dict[str, list[Term]] = {}
    for term in g.terms:
        by_leaf.setdefault(term[2], []).append(term)
    out = []
    for m, uf, s, vf in f.terms:
        for t, ug, _, vg in by_leaf.get(m, ()):
            if uf.startswith(vg):
                out.append((t, ug + uf[len(vg):], s, vf))
            elif vg.startswith(uf):
                out.append((t, ug, s, vf + vg[len(uf):]))
    return PrefixArrow(f.dom, g.cod, tuple(out))


def compose_all(*arrows: PrefixArrow) -> PrefixArrow:
    """``a ∘ b ∘ ... ∘ z`` for ``compose_all(a, b, ..., z)``."""
    result = arrows[-1]
    for a in reversed(arrows[:-1]):
        result = compose(a, result)
    return result


def dagger(f: PrefixArrow) -> PrefixArrow:
    return PrefixArrow(f.cod, f.dom, tuple((s, v, t, u) for t, u, s, v in f.terms))


def tensor(f: PrefixArrow, g: PrefixArrow) -> PrefixArrow:
    terms = [("L" + t, u, "L" + s, v) for t, u, s, v in f.terms]
    terms += [("R" + t, u, "R" + s, v) for t, u, s, v in g.terms]
    return PrefixArrow((f.dom, g.dom), (f.cod, g.cod), tuple(terms))


def _same_type(f: PrefixArrow, g: PrefixArrow) -> None:
    if f.dom != g.dom or f.cod != g.cod:
        raise TypingError(
            f"type mismatch: {show(f.dom)} -> {show(f.cod)} vs {show(g.dom)} -> {show(g.cod)}"
        )


def orthogonal(f: PrefixArrow, g: PrefixArrow) -> bool:
    _same_type(f, g)
    return compose(dagger(g), f).is_zero and compose(g, dagger(f)).is_zero


def join(f: PrefixArrow, g: PrefixArrow) -> PrefixArrow:
    if not orthogonal(f, g):
        raise JoinUndefined(f"join undefined: {render(f)} and {render(g)} are not orthogonal")
    return PrefixArrow(f.dom, f.cod, f.terms + g.terms)


def join_all(arrows: Iterable[PrefixArrow], dom: Tree = S, cod: Tree = S) -> PrefixArrow:
    result = PrefixArrow.zero(dom, cod)
    for a in arrows:
        result = join(result, a)
    return result


def equals(f: PrefixArrow, g: PrefixArrow) -> bool:
    _same_type(f, g)
    return f.terms == g.terms


def natural_leq(f: PrefixArrow, g: PrefixArrow) -> bool:
    """``f ⊴ g`` iff ``f = g f† f``."""
    _same_type(f, g)
    return compose(g, compose(dagger(f), f)) == f


def is_unitary(f: PrefixArrow) -> bool:
    return (
        compose(dagger(f), f) == PrefixArrow.identity(f.dom)
        and compose(f, dagger(f)) == PrefixArrow.identity(f.cod)
    )


def apply(f: PrefixArrow, point: Point) -> Optional[Point]:
    """Evaluate ``f`` at ``(leaf, bits)``; ``None`` outside the domain of ``f``."""
    leaf, bits = point
    if leaf not in leaves(f.dom):
        raise TypingError(f"{leaf!r} is not a leaf of {show(f.dom)}")
    short = False
    for t, u, s, v in f.terms:
        if s != leaf:
            continue
        if bits.startswith(v):
            return t, u + bits[len(v):]
        if v.startswith(bits):
            short = True
    if short:
        raise NeedsLongerInput(f"input {bits!r} at leaf {leaf!r} is too short")
    return None


def max_word(f: PrefixArrow) -> int:
    return max((max(len(u), len(v)) for _, u, _, v in f.terms), default=0)


# -- canonical arrows -------------------------------------------------------

def assoc(a: Tree, b: Tree, c: Tree) -> PrefixArrow:
    """``τ_{A,B,C} : A□(B□C) -> (A□B)□C``."""
    terms = [("LL" + x, "", "L" + x, "") for x in leaves(a)]
    terms += [("LR" + x, "", "RL" + x, "") for x in leaves(b)]
    terms += [("R" + x, "", "RR" + x, "") for x in leaves(c)]
    return PrefixArrow((a, (b, c)), ((a, b), c), tuple(terms))


def assoc_inv(a: Tree, b: Tree, c: Tree) -> PrefixArrow:
    return dagger(assoc(a, b, c))


def sym(a: Tree, b: Tree) -> PrefixArrow:
    """``σ_{A,B} : A□B -> B□A``."""
    terms = [("R" + x, "", "L" + x, "") for x in leaves(a)]
    terms += [("L" + x, "", "R" + x, "") for x in leaves(b)]
    return PrefixArrow((a, b), (b, a), tuple(terms))


def iota_l(x: Tree, y: Tree) -> PrefixArrow:
    return PrefixArrow(x, (x, y), tuple(("L" + l, "", l, "") for l in leaves(x)))


def iota_r(x: Tree, y: Tree) -> PrefixArrow:
    return PrefixArrow(y, (x, y), tuple(("R" + l, "", l, "") for l in leaves(y)))


def pi_l(x: Tree, y: Tree) -> PrefixArrow:
    return dagger(iota_l(x, y))


def pi_r(x: Tree, y: Tree) -> PrefixArrow:
    return dagger(iota_r(x, y))


CANONICAL = {
    "id": PrefixArrow.identity,
    "assoc": assoc,
    "assocInv": assoc_inv,
    "sym": sym,
    "iotaL": iota_l,
    "iotaR": iota_r,
    "piL": pi_l,
    "piR": pi_r,
}


def canonical(kind: str, *trees: Tree) -> PrefixArrow:
    try:
        make = CANONICAL[kind]
    except KeyError:
        raise TypingError(f"unknown canonical arrow {kind!r}") from None
    arity = {"id": 1, "sym": 2, "iotaL": 2, "iotaR": 2, "piL": 2, "piR": 2}.get(kind, 3)
    if len(trees) != arity:
        raise TypingError(f"{kind} takes {arity} trees, got {len(trees)}")
    for t in trees:
        check_tree(t)
    return make(*trees)


# -- rendering --------------------------------------------------------------

def render_term(term: Term, typed: bool) -> str:
    t, u, s, v = term
    text = f'"{u}"<-"{v}"'
    if typed:
        text += f' @ "{t}"<-"{s}"'
    return text


def render(f: PrefixArrow) -> str:
    """Sorted term list; ``0`` for the empty arrow."""
    if f.is_zero:
        return "0"
    typed = f.dom != S or f.cod != S
    return "{" + ", ".join(render_term(x, typed) for x in f.terms) + "}"
