"""Partial injections between small finite sets, enumerated exhaustively.

This is the brute-force oracle for the inverse-category laws the symbolic
model relies on.  Carriers are initial segments ``{0, ..., n-1}``; a graph is
a set of ``(target, source)`` pairs.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import JoinUndefined, TypingError

EXHAUSTIVE_LIMIT = 4
SAMPLE_SEED = 0xC0FFEE


@dataclass(frozen=True)
class FiniteSet:
    elements: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"duplicate elements in {self.elements}")

    @classmethod
    def range(cls, n: int) -> "FiniteSet":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def disjoint_union(self, other: "FiniteSet") -> "FiniteSet":
        # A⊎B = A×{0} ∪ B×{1}, flattened back to integers by tagging
        return FiniteSet(tuple(2 * a for a in self.elements) + tuple(2 * b + 1 for b in other.elements))


@dataclass(frozen=True)
class FinPIso:
    dom: FiniteSet
    cod: FiniteSet
    graph: frozenset

    def __post_init__(self):
        object.__setattr__(self, "graph", frozenset(self.graph))
        targets = [b for b, _ in self.graph]
        sources = [a for _, a in self.graph]
        if len(set(targets)) != len(targets) or len(set(sources)) != len(sources):
            raise ValueError(f"not a partial injection: {sorted(self.graph)}")
        for b, a in self.graph:
            if a not in self.dom or b not in self.cod:
                raise TypingError(f"pair {(b, a)} outside {self.dom.elements} -> {self.cod.elements}")

    @classmethod
    def of(cls, n: int, m: int, pairs: Iterable[tuple[int, int]]) -> "FinPIso":
        return cls(FiniteSet.range(n), FiniteSet.range(m), frozenset(pairs))

    @classmethod
    def _trusted(cls, dom: FiniteSet, cod: FiniteSet, graph: frozenset) -> "FinPIso":
        # results of compose/dagger/meet are partial injections by construction
        f = object.__new__(cls)
        object.__setattr__(f, "dom", dom)
        object.__setattr__(f, "cod", cod)
        object.__setattr__(f, "graph", graph)
        return f

    def __repr__(self) -> str:
        return f"FinPIso({len(self.dom)}->{len(self.cod)}, {sorted(self.graph)})"


def identity(x: FiniteSet) -> FinPIso:
    return FinPIso(x, x, frozenset((a, a) for a in x.elements))


def zero(x: FiniteSet, y: FiniteSet) -> FinPIso:
    return FinPIso(x, y, frozenset())


@lru_cache(maxsize=1 << 16)
def compose(g: FinPIso, f: FinPIso) -> FinPIso:
    if f.cod != g.dom:
        raise TypingError("cannot compose: codomain and domain differ")
    gmap = {a: b for b, a in g.graph}
    return FinPIso._trusted(f.dom, g.cod, frozenset((gmap[b], a) for b, a in f.graph if b in gmap))


def dagger(f: FinPIso) -> FinPIso:
    return FinPIso._trusted(f.cod, f.dom, frozenset((a, b) for b, a in f.graph))


def is_zero(f: FinPIso) -> bool:
    return not f.graph


def orthogonal(f: FinPIso, g: FinPIso) -> bool:
    return is_zero(compose(dagger(g), f)) and is_zero(compose(g, dagger(f)))


def join(f: FinPIso, g: FinPIso) -> FinPIso:
    if f.dom != g.dom or f.cod != g.cod:
        raise TypingError("join of arrows with different types")
    try:
        return FinPIso(f.dom, f.cod, f.graph | g.graph)
    except ValueError:
        raise JoinUndefined() from None


def meet(f: FinPIso, g: FinPIso) -> FinPIso:
    if f.dom != g.dom or f.cod != g.cod:
        raise TypingError("meet of arrows with different types")
    return FinPIso(f.dom, f.cod, f.graph & g.graph)


def natural_leq(f: FinPIso, g: FinPIso) -> bool:
    return compose(g, compose(dagger(f), f)) == f


def is_idempotent(e: FinPIso) -> bool:
    return e.dom == e.cod and compose(e, e) == e


@lru_cache(maxsize=None)
def all_arrows(n: int, m: int) -> tuple[FinPIso, ...]:
    """Every partial injection ``{0..n-1} -> {0..m-1}``."""
    out = []
    for k in range(min(n, m) + 1):
        for src in itertools.combinations(range(n), k):
            for tgt in itertools.permutations(range(m), k):
                out.append(FinPIso.of(n, m, zip(tgt, src)))
    return tuple(out)


def random_arrow(rng: random.Random, n: int, m: int) -> FinPIso:
    k = rng.randint(0, min(n, m))
    return FinPIso.of(n, m, zip(rng.sample(range(m), k), rng.sample(range(n), k)))


# -- law checking -------------------------------------------------------------
#
# Each law is a predicate over a tuple of arrows that returns None when the
# tuple does not meet the law's precondition.  Instances come either from
# exhaustive enumeration or, above EXHAUSTIVE_LIMIT, from seeded sampling
# that builds tuples satisfying the precondition on purpose.

@dataclass
class LawResult:
    name: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, *witness) -> None:
        if len(self.counterexamples) < 5:
            self.counterexamples.append(witness)


@dataclass
class OracleReport:
    max_size: int
    exhaustive: bool
    laws: list[LawResult]

    @property
    def ok(self) -> bool:
        return all(law.ok for law in self.laws)


def _regular(f):
    fd = dagger(f)
    return compose(f, compose(fd, f)) == f and compose(fd, compose(f, fd)) == fd


def _unique(f, g):
    if compose(f, compose(g, f)) != f or compose(g, compose(f, g)) != g:
        return None
    return g == dagger(f)


def _involution(f):
    return dagger(dagger(f)) == f


def _contravariant(g, f):
    return dagger(compose(g, f)) == compose(dagger(f), dagger(g))


def _unitary(f, g):
    if compose(g, f) != identity(f.dom) or compose(f, g) != identity(f.cod):
        return None
    return g == dagger(f)


def _idempotents(e, e2):
    if not (is_idempotent(e) and is_idempotent(e2)):
        return None
    return compose(e, e2) == compose(e2, e) and dagger(e) == e


def _push(f, e):
    if not is_idempotent(e):
        return None
    e2 = compose(f, compose(e, dagger(f)))
    return is_idempotent(e2) and compose(e2, f) == compose(f, e)


def _order(f, h):
    return natural_leq(f, h) == (f.graph <= h.graph)


def _congruence(f, h, g, k):
    if not (f.graph <= h.graph and g.graph <= k.graph):
        return None
    return natural_leq(compose(g, f), compose(k, h))


def _distributive(f1, f2, a, b):
    if not orthogonal(f1, f2):
        return None
    return compose(b, compose(join(f1, f2), a)) == join(compose(b, compose(f1, a)), compose(b, compose(f2, a)))


LAWS = (
    ("generalised inverse: f f† f = f and f† f f† = f†", _regular),
    ("uniqueness of generalised inverses", _unique),
    ("dagger is an involution", _involution),
    ("(g f)† = f† g†", _contravariant),
    ("isomorphisms are unitary", _unitary),
    ("idempotents commute and are self-adjoint", _idempotents),
    ("pushing an idempotent: e' = f e f† is idempotent and e' f = f e", _push),
    ("natural partial order is graph inclusion", _order),
    ("natural partial order is a congruence", _congruence),
    ("composition distributes over orthogonal joins", _distributive),
)


def _exhaustive(sizes) -> dict:
    hom = {(n, m): all_arrows(n, m) for n in sizes for m in sizes}
    pairs = [(n, m) for n in sizes for m in sizes]

    def below(n, m):
        return [(f, h) for h in hom[n, m] for f in hom[n, m] if f.graph <= h.graph]

    return {
        _regular: ((f,) for k in pairs for f in hom[k]),
        _unique: ((f, g) for n, m in pairs for f in hom[n, m] for g in hom[m, n]),
        _involution: ((f,) for k in pairs for f in hom[k]),
        _contravariant: ((g, f) for n, m in pairs for l in sizes for g in hom[m, l] for f in hom[n, m]),
        _unitary: ((f, g) for n in sizes for f in hom[n, n] for g in hom[n, n]),
        _idempotents: (
            (e, e2) for n in sizes for e in hom[n, n] if is_idempotent(e)
            for e2 in hom[n, n] if is_idempotent(e2)
        ),
        _push: ((f, e) for n, m in pairs for f in hom[n, m] for e in hom[n, n]),
        _order: ((f, h) for k in pairs for f in hom[k] for h in hom[k]),
        _congruence: (
            (f, h, g, k) for n, m in pairs for l in sizes
            for f, h in below(n, m) for g, k in below(m, l)
        ),
        _distributive: (
            (f1, f2, a, b) for n, m in pairs
            for f1 in hom[n, m] for f2 in hom[n, m] if orthogonal(f1, f2)
            for w in sizes for a in hom[w, n] for z in sizes for b in hom[m, z]
        ),
    }


def _restrict(rng: random.Random, f: FinPIso) -> FinPIso:
    return FinPIso(f.dom, f.cod, frozenset(x for x in f.graph if rng.random() < 0.5))


def _sampled(sizes, rng: random.Random, count: int) -> dict:
    def arr(n=None, m=None):
        return random_arrow(rng, rng.choice(sizes) if n is None else n, rng.choice(sizes) if m is None else m)

    def size():
        return rng.choice(sizes)

    def perm(n):
        return FinPIso.of(n, n, zip(rng.sample(range(n), n), range(n)))

    def idem(n):
        return _restrict(rng, identity(FiniteSet.range(n)))

    def unique():
        f = arr()
        return f, dagger(f) if rng.random() < 0.5 else arr(len(f.cod), len(f.dom))

    def unitary():
        f = perm(size())
        return f, dagger(f) if rng.random() < 0.5 else perm(len(f.dom))

    def composable():
        f = arr()
        return arr(len(f.cod)), f

    def push():
        f = arr()
        return f, idem(len(f.dom))

    def order():
        h = arr()
        return (_restrict(rng, h) if rng.random() < 0.7 else arr(len(h.dom), len(h.cod))), h

    def congruence():
        h = arr()
        k = arr(len(h.cod))
        return _restrict(rng, h), h, _restrict(rng, k), k

    def distributive():
        f = arr()
        part = frozenset(x for x in f.graph if rng.random() < 0.5)
        f1, f2 = FinPIso(f.dom, f.cod, part), FinPIso(f.dom, f.cod, f.graph - part)
        return f1, f2, arr(None, len(f.dom)), arr(len(f.cod))

    def idempotents():
        n = size()
        return idem(n), idem(n)

    make = {
        _regular: lambda: (arr(),), _unique: unique, _involution: lambda: (arr(),),
        _contravariant: composable, _unitary: unitary, _idempotents: idempotents,
        _push: push, _order: order, _congruence: congruence, _distributive: distributive,
    }
    def draw(gen):
        return (gen() for _ in range(count))

    return {law: draw(gen) for law, gen in make.items()}


def check_axioms(max_size: int, seed: int = SAMPLE_SEED, samples: int = 40) -> OracleReport:
    """Check the inverse-category laws on arrows between sets of size <= max_size.

    Exhaustive up to ``EXHAUSTIVE_LIMIT``; beyond that ``samples`` instances per
    pair of carrier sizes are drawn for each law with a fixed seed.
    """
    sizes = list(range(max_size + 1))
    exhaustive = max_size <= EXHAUSTIVE_LIMIT
    if exhaustive:
        instances = _exhaustive(sizes)
    else:
        instances = _sampled(sizes, random.Random(seed), samples * len(sizes) ** 2)
    laws = []
    for name, law in LAWS:
        result = LawResult(name)
        for args in instances[law]:
            verdict = law(*args)
            if verdict is None:
                continue
            result.checked += 1
            if not verdict:
                result.fail(*args)
        laws.append(result)
    return OracleReport(max_size, exhaustive, laws)


def iter_laws(report: OracleReport) -> Iterator[tuple[str, int, bool]]:
    for law in report.laws:
        yield law.name, law.checked, law.ok
