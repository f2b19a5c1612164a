"""Dagger self-similar structures at ``S`` and what they induce.

A structure is a unitary ``code : S□S -> S``; ``decode`` is its dagger.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .errors import ArrowError
from .gen import random_unitary
from .prefix import (
    PrefixArrow, assoc, assoc_inv, compose_all, dagger, is_unitary, render, sym, tensor,
)
from .trees import S

SS = (S, S)
ONE = PrefixArrow.identity(S)


class NotUnitary(ArrowError):
    pass


@dataclass(frozen=True)
class SelfSimilarStructure:
    code: PrefixArrow

    def __post_init__(self):
        if self.code.dom != SS or self.code.cod != S:
            raise ArrowError("code must be an arrow S□S -> S")
        if not is_unitary(self.code):
            raise NotUnitary(f"code is not unitary: {render(self.code)}")

    @property
    def decode(self) -> PrefixArrow:
        return dagger(self.code)


@dataclass(frozen=True)
class InternalizedOps:
    tensor: Callable[[PrefixArrow, PrefixArrow], PrefixArrow]
    tau: PrefixArrow
    sigma: PrefixArrow


def standard() -> SelfSimilarStructure:
    return SelfSimilarStructure(PrefixArrow(SS, S, (("", "0", "L", ""), ("", "1", "R", ""))))


SWAP_BITS = PrefixArrow.untyped(("1", "0"), ("0", "1"))


def from_unitary(u: PrefixArrow, base: SelfSimilarStructure) -> SelfSimilarStructure:
    if u.dom != S or u.cod != S or not is_unitary(u):
        raise NotUnitary(f"not a unitary endo-arrow of S: {render(u)}")
    return SelfSimilarStructure(compose_all(u, base.code))


def swap() -> SelfSimilarStructure:
    return from_unitary(SWAP_BITS, standard())


def unique_unitary(a: SelfSimilarStructure, b: SelfSimilarStructure) -> PrefixArrow:
    """The unitary ``U`` with ``b.code = U a.code``."""
    return compose_all(b.code, a.decode)


def internalize(f: PrefixArrow, g: PrefixArrow, s: SelfSimilarStructure) -> PrefixArrow:
    return compose_all(s.code, tensor(f, g), s.decode)


def induced_tau(s: SelfSimilarStructure) -> PrefixArrow:
    return compose_all(s.code, tensor(s.code, ONE), assoc(S, S, S), tensor(ONE, s.decode), s.decode)


def induced_sigma(s: SelfSimilarStructure) -> PrefixArrow:
    return compose_all(s.code, sym(S, S), s.decode)


def induced_isos(s: SelfSimilarStructure) -> InternalizedOps:
    return InternalizedOps(lambda f, g: internalize(f, g, s), induced_tau(s), induced_sigma(s))


def random_sss(rng: random.Random, kmin: int = 2, kmax: int = 8, max_depth: int | None = None) -> SelfSimilarStructure:
    return from_unitary(random_unitary(rng, S, S, kmin, kmax, max_depth), standard())


# -- law checks ---------------------------------------------------------------

@dataclass
class LawCheck:
    name: str
    lhs: PrefixArrow
    rhs: PrefixArrow

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def lax_ah_conditions(s: SelfSimilarStructure) -> list[LawCheck]:
    tau = induced_tau(s)
    code, decode = s.code, s.decode
    return [
        LawCheck(
            "lax associativity",
            compose_all(code, tensor(code, ONE), assoc(S, S, S)),
            compose_all(tau, code, tensor(ONE, code)),
        ),
        LawCheck(
            "lax Frobenius condition",
            compose_all(decode, dagger(tau), code),
            compose_all(tensor(ONE, code), assoc_inv(S, S, S), tensor(decode, ONE)),
        ),
        LawCheck("classical structure condition", compose_all(code, decode), ONE),
        LawCheck(
            "lax symmetry",
            compose_all(sym(S, S), decode),
            compose_all(decode, induced_sigma(s)),
        ),
    ]


def overly_restrictive_frobenius(s: SelfSimilarStructure) -> LawCheck:
    """The strict Frobenius square, which only a degenerate object could satisfy."""
    return LawCheck(
        "overly restrictive Frobenius condition",
        compose_all(s.decode, s.code),
        compose_all(tensor(ONE, s.code), assoc_inv(S, S, S), tensor(s.decode, ONE)),
    )


def check_lax_ah(s: SelfSimilarStructure) -> list[LawCheck]:
    return lax_ah_conditions(s)


def check_strict_collapse(s: SelfSimilarStructure) -> bool:
    """True iff the induced associator is not the identity, i.e. no strict collapse."""
    return induced_tau(s) != ONE


def embed_p2_arrows(s: SelfSimilarStructure) -> tuple[PrefixArrow, PrefixArrow]:
    """``(π_l ⊳, π_r ⊳)`` without checking the polycyclic relations."""
    from .prefix import pi_l, pi_r

    return compose_all(pi_l(S, S), s.decode), compose_all(pi_r(S, S), s.decode)
