"""Commutativity of diagrams built from typed and internalised canonical arrows.

Terms mix the typed layer (trees, ``□``, associators, symmetries) with the
single-object layer at ``S`` (the internal tensor and its induced associator
and symmetry).  Three deciders are offered:

* ``check_free``: canonical typed diagrams, decided by leaf permutations.
* ``check_model``: any diagram, evaluated in the prefix model for one structure.
* ``lift_diagram``: retypes a mixed diagram as a canonical typed one whose image
  under the convolution functor is the same, so ``check_free`` certifies it.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import ArrowError, TypingError
from .gen import random_tree
from .prefix import (
    PrefixArrow, assoc, assoc_inv, compose, compose_all, dagger, join, sym, tensor,
)
from .selfsim import SelfSimilarStructure, embed_p2_arrows, induced_sigma, induced_tau, internalize
from .trees import S, Tree, comb, leaves, show, size, subtree


class NotCanonical(ArrowError):
    pass


class NoInst(ArrowError):
    pass


# -- terms ----------------------------------------------------------------------

@dataclass(frozen=True)
class Id:
    tree: Tree


@dataclass(frozen=True)
class Assoc:
    a: Tree
    b: Tree
    c: Tree


@dataclass(frozen=True)
class AssocInv:
    a: Tree
    b: Tree
    c: Tree


@dataclass(frozen=True)
class Sym:
    a: Tree
    b: Tree


@dataclass(frozen=True)
class Tensor:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Compose:
    """``outer ∘ inner``."""
    outer: "Term"
    inner: "Term"


@dataclass(frozen=True)
class Dagger:
    term: "Term"


@dataclass(frozen=True)
class AssocInternal:
    pass


@dataclass(frozen=True)
class SymInternal:
    pass


@dataclass(frozen=True)
class TensorInternal:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Code:
    pass


@dataclass(frozen=True)
class Decode:
    pass


# Not part of the canonical toolkit; accepted by the evaluator for convenience.

@dataclass(frozen=True)
class Literal:
    arrow: PrefixArrow


@dataclass(frozen=True)
class P:
    pass


@dataclass(frozen=True)
class Q:
    pass


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"


Term = Union[
    Id, Assoc, AssocInv, Sym, Tensor, Compose, Dagger, AssocInternal, SymInternal,
    TensorInternal, Code, Decode, Literal, P, Q, Join,
]

INTERNAL = (AssocInternal, SymInternal, TensorInternal)
NEEDS_STRUCTURE = (Code, Decode, P, Q, AssocInternal, SymInternal, TensorInternal)


def comp(*terms: Term) -> Term:
    """Right-nested composite ``a ∘ b ∘ ... ∘ z``."""
    result = terms[-1]
    for t in reversed(terms[:-1]):
        result = Compose(t, result)
    return result


def children(t: Term) -> tuple:
    if isinstance(t, (Tensor, TensorInternal, Join)):
        return (t.left, t.right)
    if isinstance(t, Compose):
        return (t.outer, t.inner)
    if isinstance(t, Dagger):
        return (t.term,)
    return ()


def contains(t: Term, kinds: tuple) -> bool:
    return isinstance(t, kinds) or any(contains(c, kinds) for c in children(t))


def typeof(t: Term) -> tuple[Tree, Tree]:
    """``(dom, cod)``; raises ``TypingError`` on ill-typed terms."""
    if isinstance(t, Id):
        return t.tree, t.tree
    if isinstance(t, Assoc):
        return (t.a, (t.b, t.c)), ((t.a, t.b), t.c)
    if isinstance(t, AssocInv):
        return ((t.a, t.b), t.c), (t.a, (t.b, t.c))
    if isinstance(t, Sym):
        return (t.a, t.b), (t.b, t.a)
    if isinstance(t, Tensor):
        (d1, c1), (d2, c2) = typeof(t.left), typeof(t.right)
        return (d1, d2), (c1, c2)
    if isinstance(t, Compose):
        (d1, c1), (d2, c2) = typeof(t.outer), typeof(t.inner)
        if c2 != d1:
            raise TypingError(f"cannot compose: expected {show(c2)} as domain, got {show(d1)}")
        return d2, c1
    if isinstance(t, Dagger):
        d, c = typeof(t.term)
        return c, d
    if isinstance(t, (AssocInternal, SymInternal, P, Q)):
        return S, S
    if isinstance(t, TensorInternal):
        for part in (t.left, t.right):
            d, c = typeof(part)
            if d != S or c != S:
                raise TypingError(f"internal tensor needs arrows S -> S, got {show(d)} -> {show(c)}")
        return S, S
    if isinstance(t, Code):
        return (S, S), S
    if isinstance(t, Decode):
        return S, (S, S)
    if isinstance(t, Literal):
        return t.arrow.dom, t.arrow.cod
    if isinstance(t, Join):
        a, b = typeof(t.left), typeof(t.right)
        if a != b:
            raise TypingError(f"join of {show(a[0])} -> {show(a[1])} and {show(b[0])} -> {show(b[1])}")
        return a
    raise TypeError(f"not a term: {t!r}")


# -- evaluation in the prefix model -------------------------------------------------

def evaluate(t: Term, s: Optional[SelfSimilarStructure] = None) -> PrefixArrow:
    if isinstance(t, NEEDS_STRUCTURE) and s is None:
        raise ArrowError(f"{type(t).__name__} needs a self-similar structure")
    if isinstance(t, Id):
        return PrefixArrow.identity(t.tree)
    if isinstance(t, Assoc):
        return assoc(t.a, t.b, t.c)
    if isinstance(t, AssocInv):
        return assoc_inv(t.a, t.b, t.c)
    if isinstance(t, Sym):
        return sym(t.a, t.b)
    if isinstance(t, Tensor):
        return tensor(evaluate(t.left, s), evaluate(t.right, s))
    if isinstance(t, Compose):
        return compose(evaluate(t.outer, s), evaluate(t.inner, s))
    if isinstance(t, Dagger):
        return dagger(evaluate(t.term, s))
    if isinstance(t, AssocInternal):
        return induced_tau(s)
    if isinstance(t, SymInternal):
        return induced_sigma(s)
    if isinstance(t, TensorInternal):
        typeof(t)
        return internalize(evaluate(t.left, s), evaluate(t.right, s), s)
    if isinstance(t, Code):
        return s.code
    if isinstance(t, Decode):
        return s.decode
    if isinstance(t, P):
        return embed_p2_arrows(s)[0]
    if isinstance(t, Q):
        return embed_p2_arrows(s)[1]
    if isinstance(t, Literal):
        return t.arrow
    if isinstance(t, Join):
        return join(evaluate(t.left, s), evaluate(t.right, s))
    raise TypeError(f"not a term: {t!r}")


def inst(t, s: Optional[SelfSimilarStructure] = None):
    """Instantiate a tree or a typed term in the prefix model."""
    if isinstance(t, (str, tuple)):
        return t
    if contains(t, INTERNAL):
        raise NoInst("untyped term has no Inst")
    return evaluate(t, s)


def gen_code(x: Tree, s: SelfSimilarStructure) -> PrefixArrow:
    """``⊲_X : X -> S`` with ``⊲_S = 1`` and ``⊲_{A□B} = ⊲(⊲_A □ ⊲_B)``."""
    if x == S:
        return PrefixArrow.identity(S)
    return compose(s.code, tensor(gen_code(x[0], s), gen_code(x[1], s)))


def gen_decode(x: Tree, s: SelfSimilarStructure) -> PrefixArrow:
    return dagger(gen_code(x, s))


def phi(t: Term, s: SelfSimilarStructure) -> PrefixArrow:
    """The convolution functor: ``⊲_cod ∘ t ∘ ⊳_dom``, an endo-arrow of ``S``."""
    d, c = typeof(t)
    return compose_all(gen_code(c, s), evaluate(t, s), gen_decode(d, s))


# -- leaf permutations --------------------------------------------------------------

@dataclass(frozen=True)
class LeafPermutation:
    dom: Tree
    cod: Tree
    mapping: tuple[tuple[str, str], ...]

    @classmethod
    def of(cls, dom: Tree, cod: Tree, mapping: dict) -> "LeafPermutation":
        if sorted(mapping) != sorted(leaves(dom)) or sorted(mapping.values()) != sorted(leaves(cod)):
            raise ValueError("leaf permutation must be a total bijection")
        return cls(dom, cod, tuple(sorted(mapping.items())))

    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)

    def then(self, other: "LeafPermutation") -> "LeafPermutation":
        """``other ∘ self``."""
        if self.cod != other.dom:
            raise TypingError("cannot compose leaf permutations")
        m = other.as_dict()
        return LeafPermutation.of(self.dom, other.cod, {a: m[b] for a, b in self.mapping})

    def inverse(self) -> "LeafPermutation":
        return LeafPermutation.of(self.cod, self.dom, {b: a for a, b in self.mapping})

    def positions(self) -> tuple[int, ...]:
        """Image of the i-th domain leaf as an index into the codomain leaves."""
        order = {x: i for i, x in enumerate(leaves(self.cod))}
        m = self.as_dict()
        return tuple(order[m[x]] for x in leaves(self.dom))


def leaf_permutation(t: Term) -> LeafPermutation:
    if isinstance(t, Id):
        return LeafPermutation.of(t.tree, t.tree, {x: x for x in leaves(t.tree)})
    if isinstance(t, (Assoc, AssocInv)):
        a, b, c = t.a, t.b, t.c
        m = {"L" + x: "LL" + x for x in leaves(a)}
        m.update({"RL" + x: "LR" + x for x in leaves(b)})
        m.update({"RR" + x: "R" + x for x in leaves(c)})
        forward = LeafPermutation.of((a, (b, c)), ((a, b), c), m)
        return forward if isinstance(t, Assoc) else forward.inverse()
    if isinstance(t, Sym):
        m = {"L" + x: "R" + x for x in leaves(t.a)}
        m.update({"R" + x: "L" + x for x in leaves(t.b)})
        return LeafPermutation.of((t.a, t.b), (t.b, t.a), m)
    if isinstance(t, Tensor):
        l, r = leaf_permutation(t.left), leaf_permutation(t.right)
        m = {"L" + a: "L" + b for a, b in l.mapping}
        m.update({"R" + a: "R" + b for a, b in r.mapping})
        return LeafPermutation.of((l.dom, r.dom), (l.cod, r.cod), m)
    if isinstance(t, Compose):
        return leaf_permutation(t.inner).then(leaf_permutation(t.outer))
    if isinstance(t, Dagger):
        return leaf_permutation(t.term).inverse()
    raise NotCanonical(f"not a canonical arrow: {type(t).__name__}")


def is_canonical(t: Term) -> bool:
    if isinstance(t, (Id, Assoc, AssocInv, Sym)):
        return True
    if isinstance(t, (Tensor, Compose, Dagger)):
        return all(is_canonical(c) for c in children(t))
    return False


# -- diagrams -----------------------------------------------------------------------

UNTYPED = None


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str
    term: Term


@dataclass
class Diagram:
    nodes: dict[str, Optional[Tree]]
    edges: list[Edge]
    asserts: list[tuple[tuple[str, ...], tuple[str, ...]]]

    def __post_init__(self):
        self._by_id = {e.id: e for e in self.edges}
        if len(self._by_id) != len(self.edges):
            raise ValueError("duplicate edge ids")
        for e in self.edges:
            for n in (e.src, e.dst):
                if n not in self.nodes:
                    raise ValueError(f"edge {e.id} refers to unknown node {n!r}")
        for pa, pb in self.asserts:
            ea, eb = self.path(pa), self.path(pb)
            if (ea[0].src, ea[-1].dst) != (eb[0].src, eb[-1].dst):
                raise ValueError(f"asserted paths {pa} and {pb} have different endpoints")

    def node_tree(self, n: str) -> Tree:
        t = self.nodes[n]
        return S if t is UNTYPED else t

    def path(self, ids) -> list[Edge]:
        if not ids:
            raise ValueError("paths must be non-empty")
        try:
            edges = [self._by_id[i] for i in ids]
        except KeyError as exc:
            raise ValueError(f"unknown edge {exc.args[0]!r}") from None
        for a, b in zip(edges, edges[1:]):
            if a.dst != b.src:
                raise ValueError(f"edges {a.id} and {b.id} do not form a path")
        return edges

    def check_types(self) -> None:
        for e in self.edges:
            d, c = typeof(e.term)
            if d != self.node_tree(e.src) or c != self.node_tree(e.dst):
                raise TypingError(
                    f"edge {e.id}: term has type {show(d)} -> {show(c)} but joins "
                    f"{show(self.node_tree(e.src))} -> {show(self.node_tree(e.dst))}"
                )

    def path_term(self, ids) -> Term:
        return comp(*(e.term for e in reversed(self.path(ids))))


@dataclass
class AssertVerdict:
    paths: tuple
    commutes: bool
    detail: str = ""


@dataclass
class Verdict:
    mode: str
    results: list[AssertVerdict] = field(default_factory=list)
    deferred: bool = False
    note: str = ""

    @property
    def commutes(self) -> bool:
        return all(r.commutes for r in self.results)


def check_free(d: Diagram) -> Verdict:
    """Decide canonical typed diagrams by comparing leaf permutations."""
    d.check_types()
    for e in d.edges:
        if not is_canonical(e.term):
            raise NotCanonical(f"edge {e.id} is not a canonical typed arrow")
    v = Verdict("free")
    for pa, pb in d.asserts:
        a, b = leaf_permutation(d.path_term(pa)), leaf_permutation(d.path_term(pb))
        ok = a == b
        v.results.append(AssertVerdict((pa, pb), ok, "commutes (free)" if ok else "not canonically equal"))
    return v


def check_model(d: Diagram, s: SelfSimilarStructure) -> Verdict:
    """Evaluate every asserted path in the prefix model and compare normal forms."""
    d.check_types()
    v = Verdict("model")
    for pa, pb in d.asserts:
        a, b = evaluate(d.path_term(pa), s), evaluate(d.path_term(pb), s)
        ok = a == b
        v.results.append(AssertVerdict((pa, pb), ok, "commutes (model)" if ok else "does not commute"))
    return v


# -- lifting mixed diagrams ---------------------------------------------------------

@dataclass(frozen=True)
class _Var:
    n: int


class _Unifier:
    def __init__(self):
        self.subst: dict[_Var, object] = {}
        self.count = 0

    def fresh(self) -> _Var:
        self.count += 1
        return _Var(self.count)

    def walk(self, t):
        while isinstance(t, _Var) and t in self.subst:
            t = self.subst[t]
        return t

    def occurs(self, v: _Var, t) -> bool:
        t = self.walk(t)
        if t == v:
            return True
        return isinstance(t, tuple) and (self.occurs(v, t[0]) or self.occurs(v, t[1]))

    def unify(self, a, b) -> bool:
        a, b = self.walk(a), self.walk(b)
        if a == b:
            return True
        if isinstance(a, _Var):
            if self.occurs(a, b):
                return False
            self.subst[a] = b
            return True
        if isinstance(b, _Var):
            return self.unify(b, a)
        if isinstance(a, tuple) and isinstance(b, tuple):
            return self.unify(a[0], b[0]) and self.unify(a[1], b[1])
        return False

    def resolve(self, t) -> Tree:
        t = self.walk(t)
        if isinstance(t, _Var):
            return S
        if isinstance(t, tuple):
            return (self.resolve(t[0]), self.resolve(t[1]))
        return t


class _Inconsistent(Exception):
    pass


def _shape(t: Term, u: _Unifier):
    """A canonical typed term with the same convolution image, over tree variables."""
    if isinstance(t, (Id, Code, Decode)):
        x = u.fresh()
        return ("Id", x), x, x
    if isinstance(t, (Assoc, AssocInternal)):
        a, b, c = u.fresh(), u.fresh(), u.fresh()
        return ("Assoc", a, b, c), (a, (b, c)), ((a, b), c)
    if isinstance(t, AssocInv):
        a, b, c = u.fresh(), u.fresh(), u.fresh()
        return ("AssocInv", a, b, c), ((a, b), c), (a, (b, c))
    if isinstance(t, (Sym, SymInternal)):
        a, b = u.fresh(), u.fresh()
        return ("Sym", a, b), (a, b), (b, a)
    if isinstance(t, (Tensor, TensorInternal)):
        l, dl, cl = _shape(t.left, u)
        r, dr, cr = _shape(t.right, u)
        return ("Tensor", l, r), (dl, dr), (cl, cr)
    if isinstance(t, Compose):
        o, do, co = _shape(t.outer, u)
        i, di, ci = _shape(t.inner, u)
        if not u.unify(ci, do):
            raise _Inconsistent()
        return ("Compose", o, i), di, co
    if isinstance(t, Dagger):
        x, dx, cx = _shape(t.term, u)
        return ("Dagger", x), cx, dx
    raise NotCanonical(f"{type(t).__name__} has no canonical lift")


def _build(shape, u: _Unifier) -> Term:
    tag, *args = shape
    if tag == "Id":
        return Id(u.resolve(args[0]))
    if tag == "Assoc":
        return Assoc(*(u.resolve(a) for a in args))
    if tag == "AssocInv":
        return AssocInv(*(u.resolve(a) for a in args))
    if tag == "Sym":
        return Sym(*(u.resolve(a) for a in args))
    if tag == "Tensor":
        return Tensor(_build(args[0], u), _build(args[1], u))
    if tag == "Compose":
        return Compose(_build(args[0], u), _build(args[1], u))
    return Dagger(_build(args[0], u))


def _trees_in(t: Term):
    if isinstance(t, Id):
        yield t.tree
    elif isinstance(t, (Assoc, AssocInv)):
        yield (t.a, (t.b, t.c))
    elif isinstance(t, Sym):
        yield (t.a, t.b)
    for c in children(t):
        yield from _trees_in(c)


@dataclass
class LiftResult:
    diagram: Optional[Diagram]
    reason: str = ""
    leaves: int = 0

    @property
    def found(self) -> bool:
        return self.diagram is not None


def lift_diagram(m: Diagram, bound: int) -> LiftResult:
    """Retype ``m`` as a canonical typed diagram with the same convolution image.

    Every toolkit arrow is replaced by the canonical typed arrow it is the image
    of (``τ_{⊲⊳}`` by some ``τ_{X,Y,Z}``, code/decode by identities, internal
    tensors by ``□``), and node trees are solved for by unification.  The most
    general solution with leftover variables set to ``S`` has the fewest leaves
    at every node, so it is the first witness any deepening search would meet.
    Sound but not complete: ``None`` only says no lift of this kind fits.
    """
    m.check_types()
    if all(is_canonical(e.term) for e in m.edges):
        n = max((size(t) for t in m.nodes.values() if t is not UNTYPED), default=1)
        if n > bound:
            return LiftResult(None, f"no lift within bound {bound} (needs {n} leaves)", n)
        return LiftResult(m, "typed diagram is its own lift", n)
    u = _Unifier()
    node_var = {n: u.fresh() for n in m.nodes}
    shapes = {}
    try:
        for e in m.edges:
            shape, d, c = _shape(e.term, u)
            if not (u.unify(node_var[e.src], d) and u.unify(node_var[e.dst], c)):
                raise _Inconsistent()
            shapes[e.id] = shape
    except _Inconsistent:
        return LiftResult(None, f"no lift within bound {bound} (no consistent typing exists)")
    except NotCanonical as exc:
        return LiftResult(None, f"no lift within bound {bound} ({exc})")
    nodes = {n: u.resolve(v) for n, v in node_var.items()}
    edges = [Edge(e.id, e.src, e.dst, _build(shapes[e.id], u)) for e in m.edges]
    n = max(itertools.chain((size(t) for t in nodes.values()),
                            (size(t) for e in edges for t in _trees_in(e.term))))
    if n > bound:
        return LiftResult(None, f"no lift within bound {bound} (needs {n} leaves)", n)
    return LiftResult(Diagram(nodes, edges, list(m.asserts)), f"lift found with {n} leaves", n)


# -- stock diagrams -----------------------------------------------------------------

def pentagon(a: Tree, b: Tree, c: Tree, d: Tree) -> Diagram:
    nodes = {
        "n0": (a, (b, (c, d))),
        "n1": (a, ((b, c), d)),
        "n2": ((a, (b, c)), d),
        "n3": (((a, b), c), d),
        "n4": ((a, b), (c, d)),
    }
    edges = [
        Edge("e0", "n0", "n1", Tensor(Id(a), Assoc(b, c, d))),
        Edge("e1", "n1", "n2", Assoc(a, (b, c), d)),
        Edge("e2", "n2", "n3", Tensor(Assoc(a, b, c), Id(d))),
        Edge("e3", "n0", "n4", Assoc(a, b, (c, d))),
        Edge("e4", "n4", "n3", Assoc((a, b), c, d)),
    ]
    return Diagram(nodes, edges, [(("e0", "e1", "e2"), ("e3", "e4"))])


def hexagon(a: Tree, b: Tree, c: Tree) -> Diagram:
    nodes = {
        "n0": (a, (b, c)),
        "n1": ((a, b), c),
        "n2": (c, (a, b)),
        "n3": ((c, a), b),
        "n4": (a, (c, b)),
        "n5": ((a, c), b),
    }
    edges = [
        Edge("e0", "n0", "n1", Assoc(a, b, c)),
        Edge("e1", "n1", "n2", Sym((a, b), c)),
        Edge("e2", "n2", "n3", Assoc(c, a, b)),
        Edge("e3", "n0", "n4", Tensor(Id(a), Sym(b, c))),
        Edge("e4", "n4", "n5", Assoc(a, c, b)),
        Edge("e5", "n5", "n3", Tensor(Sym(a, c), Id(b))),
    ]
    return Diagram(nodes, edges, [(("e0", "e1", "e2"), ("e3", "e4", "e5"))])


def symmetry_is_identity() -> Diagram:
    """The false claim ``σ_{S,S} = 1_{S□S}``."""
    edges = [Edge("e0", "n0", "n0", Sym(S, S)), Edge("e1", "n0", "n0", Id((S, S)))]
    return Diagram({"n0": (S, S)}, edges, [(("e0",), ("e1",))])


def lax_associativity() -> Diagram:
    nodes = {"a": (S, (S, S)), "b": ((S, S), S), "c": (S, S), "e": (S, S), "f": UNTYPED, "d": UNTYPED}
    edges = [
        Edge("e0", "a", "b", Assoc(S, S, S)),
        Edge("e1", "b", "c", Tensor(Code(), Id(S))),
        Edge("e2", "c", "d", Code()),
        Edge("e3", "a", "e", Tensor(Id(S), Code())),
        Edge("e4", "e", "f", Code()),
        Edge("e5", "f", "d", AssocInternal()),
    ]
    return Diagram(nodes, edges, [(("e0", "e1", "e2"), ("e3", "e4", "e5"))])


def lax_frobenius() -> Diagram:
    nodes = {"a": (S, S), "s1": UNTYPED, "s2": UNTYPED, "b": (S, S), "c": ((S, S), S), "d": (S, (S, S))}
    edges = [
        Edge("e0", "a", "s1", Code()),
        Edge("e1", "s1", "s2", Dagger(AssocInternal())),
        Edge("e2", "s2", "b", Decode()),
        Edge("e3", "a", "c", Tensor(Decode(), Id(S))),
        Edge("e4", "c", "d", AssocInv(S, S, S)),
        Edge("e5", "d", "b", Tensor(Id(S), Code())),
    ]
    return Diagram(nodes, edges, [(("e0", "e1", "e2"), ("e3", "e4", "e5"))])


def overly_restrictive_frobenius() -> Diagram:
    nodes = {"a": (S, S), "s": UNTYPED, "b": (S, S), "c": ((S, S), S), "d": (S, (S, S))}
    edges = [
        Edge("e0", "a", "s", Code()),
        Edge("e1", "s", "b", Decode()),
        Edge("e2", "a", "c", Tensor(Decode(), Id(S))),
        Edge("e3", "c", "d", AssocInv(S, S, S)),
        Edge("e4", "d", "b", Tensor(Id(S), Code())),
    ]
    return Diagram(nodes, edges, [(("e0", "e1"), ("e2", "e3", "e4"))])


# -- random canonical terms ---------------------------------------------------------

def at(tree: Tree, path: str, local: Term) -> Term:
    """Apply ``local`` to the subtree at ``path``, identities elsewhere."""
    if not path:
        return local
    if path[0] == "L":
        return Tensor(at(tree[0], path[1:], local), Id(tree[1]))
    return Tensor(Id(tree[0]), at(tree[1], path[1:], local))


def _positions(tree: Tree, path: str = ""):
    yield path
    if tree != S:
        yield from _positions(tree[0], path + "L")
        yield from _positions(tree[1], path + "R")


def random_step(rng: random.Random, tree: Tree) -> Term:
    """One associator or symmetry applied somewhere inside ``tree``."""
    options = []
    for path in _positions(tree):
        t = subtree(tree, path)
        if t == S:
            continue
        options.append((path, Sym(t[0], t[1]), Dagger(Sym(t[1], t[0]))))
        if t[1] != S:
            a, b, c = t[0], t[1][0], t[1][1]
            options.append((path, Assoc(a, b, c), Dagger(AssocInv(a, b, c))))
        if t[0] != S:
            a, b, c = t[0][0], t[0][1], t[1]
            options.append((path, AssocInv(a, b, c), Dagger(Assoc(a, b, c))))
    if not options:
        return Id(tree)
    path, plain, daggered = rng.choice(options)
    return at(tree, path, daggered if rng.random() < 0.15 else plain)


def random_walk(rng: random.Random, tree: Tree, steps: int) -> Term:
    term: Term = Id(tree)
    for _ in range(steps):
        cod = typeof(term)[1]
        term = Compose(random_step(rng, cod), term)
    return term


def to_comb(tree: Tree) -> Term:
    """An associator-only arrow from ``tree`` to the right comb."""
    if tree == S:
        return Id(S)
    a, b = tree
    if a == S:
        return Tensor(Id(S), to_comb(b))
    # (x□y)□b -> x□(y□b), then recurse
    x, y = a
    return Compose(to_comb((x, (y, b))), AssocInv(x, y, b))


def rebracket(src: Tree, dst: Tree) -> Term:
    if size(src) != size(dst):
        raise TypingError("trees have different numbers of leaves")
    return Compose(Dagger(to_comb(dst)), to_comb(src))


def adjacent_swap(n: int, i: int) -> Term:
    """Swap leaves ``i`` and ``i+1`` of the comb with ``n`` leaves."""
    if i > 0:
        return Tensor(Id(S), adjacent_swap(n - 1, i - 1))
    if n == 2:
        return Sym(S, S)
    rest = comb(n - 2)
    return comp(AssocInv(S, S, rest), Tensor(Sym(S, S), Id(rest)), Assoc(S, S, rest))


def realize(dom: Tree, cod: Tree, positions: tuple[int, ...]) -> Term:
    """A canonical arrow ``dom -> cod`` sending leaf ``i`` to leaf ``positions[i]``."""
    n = size(dom)
    order = list(range(n))
    swaps = []
    # bubble sort on the comb; order[k] = original leaf now at slot k
    target = list(positions)
    for _ in range(n):
        for k in range(n - 1):
            if target[order[k]] > target[order[k + 1]]:
                order[k], order[k + 1] = order[k + 1], order[k]
                swaps.append(adjacent_swap(n, k))
    middle: Term = Id(comb(n))
    for sw in swaps:
        middle = Compose(sw, middle)
    return comp(Dagger(to_comb(cod)), middle, to_comb(dom))


def random_canonical_diagram(rng: random.Random, max_leaves: int = 5) -> Diagram:
    """Two random canonical paths between the same trees; equal half the time."""
    n = rng.randint(1, max_leaves)
    src, dst = random_tree(rng, n), random_tree(rng, n)

    def path() -> Term:
        walk = random_walk(rng, src, rng.randint(0, 6))
        return Compose(rebracket(typeof(walk)[1], dst), walk)

    first = path()
    if rng.random() < 0.5:
        second = realize(src, dst, leaf_permutation(first).positions())
    else:
        second = path()
    edges = [Edge("e0", "a", "b", first), Edge("e1", "a", "b", second)]
    return Diagram({"a": src, "b": dst}, edges, [(("e0",), ("e1",))])
