from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pisokit.errors import NeedsLongerInput
from pisokit.gen import random_arrow, random_tree
from pisokit.prefix import apply
from pisokit.trees import S, leaves

settings.register_profile(
    "repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def rngs(draw) -> random.Random:
    return random.Random(draw(seeds))


@st.composite
def trees(draw, max_leaves: int = 4):
    return random_tree(draw(rngs()), draw(st.integers(1, max_leaves)))


@st.composite
def arrows(draw, dom=S, cod=S):
    return random_arrow(draw(rngs()), dom, cod)


def words(max_len: int):
    for n in range(max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


def agree_at(lhs, rhs, point, limit: int = 16) -> bool:
    """Compare two pointwise maps at ``point``, lengthening it until both decide."""
    def run(fn, x):
        try:
            return fn(x)
        except NeedsLongerInput:
            return NeedsLongerInput

    a, b = run(lhs, point), run(rhs, point)
    if a is NeedsLongerInput or b is NeedsLongerInput:
        leaf, bits = point
        if len(bits) >= limit:
            return False
        return all(agree_at(lhs, rhs, (leaf, bits + c), limit) for c in "01")
    if a is None or b is None:
        return a is None and b is None
    # both sides act as bits·x ↦ out·x on the cylinder, so equal iff outputs match
    (la, ua), (lb, ub) = a, b
    return la == lb and ua == ub


def chain(*arrows):
    """Evaluate ``arrows[0] ∘ ... ∘ arrows[-1]`` one factor at a time."""
    def fn(point):
        for f in reversed(arrows):
            if point is None:
                return None
            point = apply(f, point)
        return point
    return fn


def pointwise_equal(lhs, rhs, dom, max_len: int = 6) -> bool:
    return all(agree_at(lhs, rhs, (leaf, w)) for leaf in leaves(dom) for w in words(max_len))


# -- one line per acceptance criterion ---------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria[n] = ("PASS" if rep.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        verdict, title = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {verdict}  {title}")


# -- string-level oracles for the standard structure ----------------------------------
# code: (L, w) -> 0w, (R, w) -> 1w; everything below is written on strings directly.

def std_code(point):
    leaf, w = point
    return "", {"L": "0", "R": "1"}[leaf] + w


def std_decode(point):
    _, w = point
    if not w:
        raise NeedsLongerInput("")
    return ("L" if w[0] == "0" else "R"), w[1:]


def std_tau(point):
    """code ∘ (code ⊎ 1) ∘ assoc ∘ (1 ⊎ decode) ∘ decode, one factor at a time."""
    leaf, w = std_decode(point)                        # S -> S□S
    if leaf == "R":                                    # 1 ⊎ decode
        sub, w = std_decode(("", w))
        leaf = "R" + sub
    leaf = {"L": "LL", "RL": "LR", "RR": "R"}[leaf]   # S□(S□S) -> (S□S)□S
    if leaf.startswith("L"):                           # code ⊎ 1
        _, w = std_code((leaf[1:], w))
        leaf = "L"
    return std_code((leaf, w))                         # S□S -> S


def std_sigma(point):
    leaf, w = std_decode(point)
    return std_code(({"L": "R", "R": "L"}[leaf], w))
