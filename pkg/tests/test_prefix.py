import pytest
from hypothesis import given, strategies as st

from pisokit.errors import JoinUndefined, OrthogonalityError, TypingError
from pisokit.gen import random_arrow
from pisokit.prefix import (
    PrefixArrow, apply, assoc, assoc_inv, canonical, compose, compose_all, dagger, equals, iota_l, iota_r,
    is_unitary, join, natural_leq, orthogonal, pi_l, pi_r, render, sym, tensor,
)
from pisokit.trees import S, leaves, trees_upto

from conftest import agree_at, arrows, chain, pointwise_equal, rngs, trees, words

U = PrefixArrow.untyped
ONE = PrefixArrow.identity(S)
ZERO = PrefixArrow.zero()
p, q = U(("", "0")), U(("", "1"))
SWAP = U(("1", "0"), ("0", "1"))
TAU0 = U(("00", "0"), ("01", "10"), ("1", "11"))
SS = (S, S)


# -- normal form ----------------------------------------------------------------

def test_siblings_merge_to_identity():
    assert U(("0", "0"), ("1", "1")) == ONE
    assert U(("0", "0"), ("1", "1")).terms == (("", "", "", ""),)


def test_reduced_term_is_kept():
    assert p.terms == (("", "", "", "0"),)


def test_comparable_targets_rejected():
    with pytest.raises(OrthogonalityError):
        U(("", "0"), ("", "1"))


@given(arrows())
def test_splitting_terms_gives_same_normal_form(f):
    # expand every term one level; normalizing must undo it exactly
    split = [(t, u + b, s, v + b) for t, u, s, v in f.terms for b in "01"]
    assert PrefixArrow(f.dom, f.cod, tuple(split)) == f


# -- composition ------------------------------------------------------------------

def test_polycyclic_relations():
    assert compose(p, dagger(p)) == ONE
    assert compose(q, dagger(q)) == ONE
    assert compose(p, dagger(q)).is_zero
    assert compose(q, dagger(p)).is_zero


def test_q_dagger_after_p():
    assert compose(dagger(q), p) == U(("1", "0"))


def test_projection_after_other_inclusion_is_zero():
    f = compose(pi_r(S, S), iota_l(S, S))
    assert f.is_zero and (f.dom, f.cod) == (S, S)
    assert compose(pi_l(S, S), iota_l(S, S)) == ONE


def test_compose_type_mismatch():
    with pytest.raises(TypingError):
        compose(assoc(S, S, S), sym(S, S))


@given(arrows(), arrows())
def test_composition_agrees_with_pointwise_chaining(f, g):
    assert pointwise_equal(chain(compose(g, f)), chain(g, f), S)


@given(st.data())
def test_typed_composition_pointwise(data):
    a, b, c = (data.draw(trees(3)) for _ in range(3))
    f, g = data.draw(arrows(a, b)), data.draw(arrows(b, c))
    assert pointwise_equal(chain(compose(g, f)), chain(g, f), a)


@given(arrows(), arrows())
def test_zero_laws(f, g):
    assert compose(f, ZERO).is_zero and compose(ZERO, f).is_zero


# -- dagger ---------------------------------------------------------------------

def test_dagger_examples():
    assert dagger(p) == U(("0", ""))
    assert dagger(ONE) == ONE
    assert dagger(SWAP) == SWAP


@given(arrows(), arrows(), arrows())
def test_dagger_laws(f, g, h):
    assert dagger(compose(g, f)) == compose(dagger(f), dagger(g))
    assert dagger(dagger(f)) == f
    assert dagger(tensor(f, h)) == tensor(dagger(f), dagger(h))
    assert compose_all(f, dagger(f), f) == f


# -- tensor ---------------------------------------------------------------------

def test_tensor_examples():
    assert tensor(ONE, ONE) == PrefixArrow.identity(SS)
    assert tensor(ONE, ONE).terms == (("L", "", "L", ""), ("R", "", "R", ""))
    assert tensor(p, ZERO).terms == (("L", "", "L", "0"),)
    assert tensor(p, q).terms == (("L", "", "L", "0"), ("R", "", "R", "1"))


@given(arrows(), arrows(), arrows(), arrows())
def test_tensor_is_functorial(f1, f2, g1, g2):
    assert compose(tensor(f2, g2), tensor(f1, g1)) == tensor(compose(f2, f1), compose(g2, g1))


# -- joins and order ------------------------------------------------------------

def test_join_examples():
    assert join(U(("1", "0")), U(("0", "1"))) == SWAP
    with pytest.raises(JoinUndefined, match="join undefined"):
        join(p, q)
    assert join(SWAP, ZERO) == SWAP
    assert not orthogonal(p, q)


@given(arrows())
def test_join_of_split_is_original(f):
    halves = f.terms[::2], f.terms[1::2]
    a, b = (PrefixArrow(f.dom, f.cod, h) for h in halves)
    assert orthogonal(a, b)
    assert join(a, b) == f


def test_natural_order_examples():
    assert equals(compose(p, dagger(p)), ONE)
    assert natural_leq(U(("00", "10")), U(("0", "1")))
    assert not natural_leq(U(("0", "1")), U(("00", "10")))


@given(arrows(), arrows(), rngs())
def test_natural_order_is_congruence(h, k, rng):
    f = PrefixArrow(h.dom, h.cod, tuple(t for t in h.terms if rng.random() < 0.6))
    g = PrefixArrow(k.dom, k.cod, tuple(t for t in k.terms if rng.random() < 0.6))
    assert natural_leq(f, h) and natural_leq(g, k)
    assert natural_leq(compose(g, f), compose(k, h))


# -- evaluation -----------------------------------------------------------------

def test_apply_examples():
    assert apply(TAU0, ("", "10110")) == ("", "01110")
    assert apply(ONE, ("", "0110")) == ("", "0110")
    assert apply(p, ("", "1101")) is None


def test_apply_typed_leaf():
    with pytest.raises(TypingError):
        apply(assoc(S, S, S), ("LL", "0"))
    assert apply(assoc(S, S, S), ("RL", "01")) == ("LR", "01")


def test_unitary_examples():
    assert is_unitary(ONE)
    assert not is_unitary(p)
    assert compose(dagger(p), p) == U(("0", "0"))
    assert is_unitary(TAU0)


# -- canonical arrows -----------------------------------------------------------

def test_associator_relabels_leaves():
    a = assoc(S, S, S)
    assert {(t, s) for t, _, s, _ in a.terms} == {("LL", "L"), ("LR", "RL"), ("R", "RR")}
    assert a.dom == (S, (S, S)) and a.cod == ((S, S), S)
    assert assoc_inv(S, S, S) == dagger(a)


def test_symmetry_and_inclusions():
    assert sym(S, S).terms == (("R", "", "L", ""), ("L", "", "R", ""))
    assert iota_l(S, S).terms == (("L", "", "", ""),)
    assert pi_r(S, S) == dagger(iota_r(S, S))
    assert canonical("sym", S, (S, S)) == sym(S, (S, S))


def _triples(n):
    return [(a, b, c) for a in trees_upto(n) for b in trees_upto(n) for c in trees_upto(n)
            if len(leaves(a)) + len(leaves(b)) + len(leaves(c)) <= n]


@pytest.mark.parametrize("a,b,c,d", [
    (a, b, c, d) for a, b, c in _triples(4) for d in trees_upto(4)
    if sum(len(leaves(x)) for x in (a, b, c, d)) <= 5
])
def test_pentagon(a, b, c, d):
    lhs = compose_all(tensor(assoc(a, b, c), PrefixArrow.identity(d)), assoc(a, (b, c), d),
                      tensor(PrefixArrow.identity(a), assoc(b, c, d)))
    rhs = compose_all(assoc((a, b), c, d), assoc(a, b, (c, d)))
    assert lhs == rhs


@pytest.mark.parametrize("a,b,c", _triples(5))
def test_hexagon(a, b, c):
    lhs = compose_all(assoc(c, a, b), sym((a, b), c), assoc(a, b, c))
    rhs = compose_all(tensor(sym(a, c), PrefixArrow.identity(b)), assoc(a, c, b),
                      tensor(PrefixArrow.identity(a), sym(b, c)))
    assert lhs == rhs


def test_render():
    assert render(ZERO) == "0"
    assert render(ONE) == '{""<-""}'
    assert render(TAU0) == '{"00"<-"0", "01"<-"10", "1"<-"11"}'
    assert render(iota_l(S, S)) == '{""<-"" @ "L"<-""}'


def test_pointwise_oracle_detects_differences():
    assert not pointwise_equal(chain(p), chain(q), S)
    assert not pointwise_equal(chain(SWAP), chain(ONE), S)
    assert not pointwise_equal(chain(U(("0", "0"))), chain(ONE), S)
    assert pointwise_equal(chain(U(("0", "0"), ("1", "1"))), chain(ONE), S)
