import itertools

import pytest

from pisokit import finite as fp
from pisokit.errors import JoinUndefined, TypingError
from pisokit.finite import FinPIso, FiniteSet

Z = FiniteSet.range


def arrow(n, m, *pairs):
    return FinPIso.of(n, m, pairs)


def test_compose_examples():
    assert fp.compose(arrow(3, 3, (2, 1)), arrow(3, 3, (1, 0))) == arrow(3, 3, (2, 0))
    assert fp.compose(arrow(2, 3, (2, 1)), arrow(6, 2, (1, 5))) == arrow(6, 3, (2, 5))
    f = arrow(3, 3, (0, 1), (2, 2))
    assert fp.is_zero(fp.compose(fp.zero(Z(3), Z(3)), f))


def test_compose_type_mismatch():
    with pytest.raises(TypingError):
        fp.compose(arrow(2, 2), arrow(3, 3))


def test_dagger_examples():
    assert fp.dagger(arrow(2, 2, (1, 0))) == arrow(2, 2, (0, 1))
    assert fp.dagger(fp.identity(Z(2))) == fp.identity(Z(2))
    assert fp.dagger(arrow(2, 2)) == arrow(2, 2)


def test_join_and_meet():
    assert fp.join(arrow(4, 4, (1, 0)), arrow(4, 4, (2, 3))) == arrow(4, 4, (1, 0), (2, 3))
    with pytest.raises(JoinUndefined, match="join undefined"):
        fp.join(arrow(3, 3, (1, 0)), arrow(3, 3, (2, 0)))
    assert fp.meet(arrow(4, 4, (1, 0), (2, 3)), arrow(4, 4, (1, 0))) == arrow(4, 4, (1, 0))


def test_natural_order_examples():
    assert fp.natural_leq(arrow(4, 4, (1, 0)), arrow(4, 4, (1, 0), (2, 3)))
    g = arrow(4, 4, (1, 0), (2, 3))
    assert fp.natural_leq(g, g)
    assert not fp.natural_leq(arrow(3, 3, (1, 0)), arrow(3, 3, (2, 0)))


def test_not_injective():
    with pytest.raises(ValueError):
        arrow(3, 3, (1, 0), (1, 2))


def test_disjoint_union_tags():
    assert Z(2).disjoint_union(Z(3)).elements == (0, 2, 1, 3, 5)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_orthogonality_matches_disjoint_graphs(n):
    # the equational test against the set-level reading
    for f, g in itertools.product(fp.all_arrows(n, n), repeat=2):
        disjoint = not ({a for _, a in f.graph} & {a for _, a in g.graph}) and not (
            {b for b, _ in f.graph} & {b for b, _ in g.graph}
        )
        assert fp.orthogonal(f, g) == disjoint


@pytest.mark.parametrize("n,m,count", [(0, 0, 1), (1, 1, 2), (2, 2, 7), (2, 3, 13), (3, 3, 34)])
def test_arrow_counts(n, m, count):
    # number of partial injections: sum_k C(n,k) C(m,k) k!
    assert len(fp.all_arrows(n, m)) == count


@pytest.mark.parametrize("max_size", [1, 2])
def test_check_axioms_small(max_size):
    report = fp.check_axioms(max_size)
    assert report.exhaustive
    assert report.ok, [(law.name, law.counterexamples) for law in report.laws if not law.ok]


def test_check_axioms_sampled_beyond_limit():
    report = fp.check_axioms(5, samples=6)
    assert not report.exhaustive
    assert report.ok


def test_sampled_laws_are_not_vacuous():
    report = fp.check_axioms(6, samples=3)
    assert all(law.checked > 0 for law in report.laws)


def test_sampling_is_seeded():
    a = [law.checked for law in fp.check_axioms(5, samples=2).laws]
    b = [law.checked for law in fp.check_axioms(5, samples=2).laws]
    assert a == b


def test_broken_law_is_reported():
    # a deliberately wrong order must produce counterexamples
    original = fp.natural_leq
    try:
        fp.natural_leq = lambda f, g: True
        report = fp.check_axioms(2)
    finally:
        fp.natural_leq = original
    failed = {law.name for law in report.laws if not law.ok}
    assert failed == {"natural partial order is graph inclusion"}
