import random

import pytest
from hypothesis import given

from pisokit import coherence as c
from pisokit.coherence import (
    Assoc, AssocInternal, AssocInv, Code, Compose, Dagger, Decode, Diagram, Edge, Id, Literal, Sym, SymInternal,
    Tensor, TensorInternal,
)
from pisokit.errors import TypingError
from pisokit.gen import random_tree
from pisokit.prefix import PrefixArrow, assoc, compose, dagger, is_unitary, tensor
from pisokit.selfsim import ONE, induced_sigma, induced_tau, internalize, random_sss, standard, swap
from pisokit.trees import S, leaves, size, trees_upto

from conftest import rngs, trees

U = PrefixArrow.untyped


def test_inst_examples():
    t = c.inst((S, (S, S)))
    assert leaves(t) == ("L", "RL", "RR")
    assert c.inst(Id(S)) == ONE
    assert c.inst(Assoc(S, S, S)) == assoc(S, S, S)
    with pytest.raises(c.NoInst, match="untyped term has no Inst"):
        c.inst(Compose(AssocInternal(), SymInternal()))


def test_gen_code_examples():
    s = standard()
    assert c.gen_code(S, s) == ONE
    assert c.gen_code((S, S), s) == s.code
    expected = PrefixArrow(((S, S), S), S, (("", "00", "LL", ""), ("", "01", "LR", ""), ("", "1", "R", "")))
    assert c.gen_code(((S, S), S), s) == expected


@pytest.mark.parametrize("x", [t for t in trees_upto(6)], ids=lambda t: str(size(t)))
def test_gen_code_unitary(x):
    assert is_unitary(c.gen_code(x, standard()))
    assert is_unitary(c.gen_code(x, swap()))


def test_typeof():
    assert c.typeof(Assoc(S, S, (S, S))) == ((S, (S, (S, S))), ((S, S), (S, S)))
    assert c.typeof(TensorInternal(AssocInternal(), SymInternal())) == (S, S)
    with pytest.raises(TypingError):
        c.typeof(Compose(Assoc(S, S, S), Sym(S, S)))


def test_internal_tensor_needs_endo_arrows():
    with pytest.raises(TypingError):
        c.typeof(TensorInternal(AssocInternal(), Code()))


def test_leaf_permutations():
    assert c.leaf_permutation(Sym(S, S)).as_dict() == {"L": "R", "R": "L"}
    assert c.leaf_permutation(Assoc(S, S, S)).positions() == (0, 1, 2)
    d = c.pentagon(S, S, S, S)
    (pa, pb), = d.asserts
    assert c.leaf_permutation(d.path_term(pa)) == c.leaf_permutation(d.path_term(pb))
    with pytest.raises(c.NotCanonical):
        c.leaf_permutation(Code())


def test_dagger_edges_invert_permutations():
    t = Compose(Dagger(Sym(S, (S, S))), Sym(S, (S, S)))
    assert c.leaf_permutation(t) == c.leaf_permutation(Id((S, (S, S))))


def test_free_examples():
    assert c.check_free(c.pentagon(S, S, S, S)).commutes
    assert c.check_free(c.hexagon(S, S, S)).commutes
    v = c.check_free(c.symmetry_is_identity())
    assert not v.commutes and v.results[0].detail == "not canonically equal"
    with pytest.raises(c.NotCanonical):
        c.check_free(c.lax_associativity())


@pytest.mark.parametrize("s", [standard(), swap()], ids=["standard", "swap"])
def test_model_examples(s):
    assert c.check_model(c.lax_associativity(), s).commutes
    assert c.check_model(c.lax_frobenius(), s).commutes
    assert not c.check_model(c.overly_restrictive_frobenius(), s).commutes
    assert not c.check_model(c.symmetry_is_identity(), s).commutes


def test_ill_typed_diagram():
    d = Diagram({"a": (S, S), "b": S}, [Edge("e", "a", "b", Sym(S, S))], [])
    with pytest.raises(TypingError):
        c.check_model(d, standard())


def test_diagram_validation():
    with pytest.raises(ValueError):
        Diagram({"a": S}, [Edge("e", "a", "z", Id(S))], [])
    with pytest.raises(ValueError):
        Diagram({"a": S, "b": S}, [Edge("e", "a", "b", Id(S)), Edge("f", "a", "a", Id(S))], [(("e",), ("f",))])


def test_lift_examples():
    lift = c.lift_diagram(c.lax_associativity(), 3)
    assert lift.found and lift.leaves == 3
    assert all(c.is_canonical(e.term) for e in lift.diagram.edges)
    assert c.check_free(lift.diagram).commutes
    assert c.lift_diagram(c.lax_frobenius(), 3).found
    assert not c.lift_diagram(c.lax_associativity(), 2).found
    bad = c.lift_diagram(c.overly_restrictive_frobenius(), 2)
    assert not bad.found and bad.reason.startswith("no lift within bound 2")
    d = c.pentagon(S, S, S, S)
    assert c.lift_diagram(d, 4).diagram is d


@pytest.mark.parametrize("s", [standard(), swap()], ids=["standard", "swap"])
def test_lift_images_agree_edgewise(s):
    m = c.lax_associativity()
    lift = c.lift_diagram(m, 3).diagram
    for orig, lifted in zip(m.edges, lift.edges):
        assert c.phi(orig.term, s) == c.phi(lifted.term, s)


def test_phi_of_canonical_generators():
    s = standard()
    assert c.phi(Assoc(S, S, S), s) == induced_tau(s)
    assert c.phi(Sym(S, S), s) == induced_sigma(s)
    assert c.phi(Id(((S, S), S)), s) == ONE


@given(rngs())
def test_phi_and_inst_are_functors(rng):
    s = random_sss(rng, max_depth=3)
    x = random_tree(rng, rng.randint(1, 4))
    f = c.random_walk(rng, x, rng.randint(0, 4))
    g = c.random_walk(rng, c.typeof(f)[1], rng.randint(0, 4))
    h = c.random_walk(rng, random_tree(rng, rng.randint(1, 3)), rng.randint(0, 3))
    assert c.inst(Compose(g, f)) == compose(c.inst(g), c.inst(f))
    assert c.inst(Tensor(f, h)) == tensor(c.inst(f), c.inst(h))
    assert c.inst(Dagger(f)) == dagger(c.inst(f))
    assert c.phi(Compose(g, f), s) == compose(c.phi(g, s), c.phi(f, s))
    assert c.phi(Tensor(f, h), s) == internalize(c.phi(f, s), c.phi(h, s), s)
    assert c.phi(Dagger(f), s) == dagger(c.phi(f, s))


@given(rngs())
def test_free_and_model_agree(rng):
    d = c.random_canonical_diagram(rng)
    s = random_sss(rng, max_depth=3)
    free, model = c.check_free(d), c.check_model(d, s)
    assert free.commutes == model.commutes
    # the model verdict is the same after collapsing to endo-arrows of S
    (pa, pb), = d.asserts
    collapsed = c.phi(d.path_term(pa), s) == c.phi(d.path_term(pb), s)
    assert collapsed == model.commutes


def test_random_diagrams_are_mixed():
    rng = random.Random(3)
    verdicts = [c.check_free(c.random_canonical_diagram(rng)).commutes for _ in range(60)]
    assert any(verdicts) and not all(verdicts)


def test_literals_and_joins_evaluate():
    s = standard()
    p = c.evaluate(c.P(), s)
    q = c.evaluate(c.Q(), s)
    assert (p, q) == (U(("", "0")), U(("", "1")))
    both = c.Join(Compose(Dagger(c.P()), c.P()), Compose(Dagger(c.Q()), c.Q()))
    assert c.evaluate(both, s) == ONE
    assert c.evaluate(Literal(ONE)) == ONE
    with pytest.raises(Exception):
        c.evaluate(Code())
