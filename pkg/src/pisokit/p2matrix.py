"""Polycyclic-monoid embeddings and the 2x2 matrix representations they give.

Matrix "addition" is the join of orthogonal arrows, so products are only
defined when every pair of summands is orthogonal; this is checked at run time.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import ArrowError
from .prefix import PrefixArrow, compose_all, dagger, join, join_all, pi_l, pi_r, iota_l, iota_r, render
from .selfsim import ONE, SS, SelfSimilarStructure, internalize, unique_unitary
from .trees import S

ZERO = PrefixArrow.zero(S, S)


class EmbeddingError(ArrowError):
    pass


@dataclass(frozen=True)
class P2Embedding:
    p: PrefixArrow
    q: PrefixArrow

    def relations(self) -> dict[str, bool]:
        p, q = self.p, self.q
        pd, qd = dagger(p), dagger(q)
        try:
            strong = join(compose_all(pd, p), compose_all(qd, q)) == ONE
        except ArrowError:
            strong = False
        return {
            "p p† = 1": compose_all(p, pd) == ONE,
            "q q† = 1": compose_all(q, qd) == ONE,
            "p q† = 0": compose_all(p, qd) == ZERO,
            "q p† = 0": compose_all(q, pd) == ZERO,
            "p†p ∨ q†q = 1": strong,
        }

    @property
    def basis(self) -> tuple[PrefixArrow, PrefixArrow]:
        return self.p, self.q


def embed_p2(s: SelfSimilarStructure) -> P2Embedding:
    e = P2Embedding(compose_all(pi_l(S, S), s.decode), compose_all(pi_r(S, S), s.decode))
    failed = [k for k, ok in e.relations().items() if not ok]
    if failed:
        raise EmbeddingError(f"embedding violates {failed}")
    return e


def sss_from_embedding(e: P2Embedding) -> SelfSimilarStructure:
    """Rebuild the structure: ``decode = ι_l p ∨ ι_r q``."""
    decode = join(compose_all(iota_l(S, S), e.p), compose_all(iota_r(S, S), e.q))
    return SelfSimilarStructure(dagger(decode))


@dataclass(frozen=True)
class Matrix2:
    e00: PrefixArrow
    e01: PrefixArrow
    e10: PrefixArrow
    e11: PrefixArrow

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def rows(cls, rows) -> "Matrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def __getitem__(self, ij: tuple[int, int]) -> PrefixArrow:
        i, j = ij
        return (self.e00, self.e01, self.e10, self.e11)[2 * i + j]

    def __iter__(self) -> Iterator[PrefixArrow]:
        return iter((self.e00, self.e01, self.e10, self.e11))

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return mat_mul(self, other)

    def dagger(self) -> "Matrix2":
        """Conjugate transpose."""
        return Matrix2(dagger(self.e00), dagger(self.e10), dagger(self.e01), dagger(self.e11))

    @property
    def is_diagonal(self) -> bool:
        return self.e01.is_zero and self.e10.is_zero

    def __str__(self) -> str:
        return render_matrix(self)


def matrix_rep(f: PrefixArrow, s: SelfSimilarStructure, embedding: Optional[P2Embedding] = None) -> Matrix2:
    x = (embedding or embed_p2(s)).basis
    return Matrix2(*(compose_all(x[i], f, dagger(x[j])) for i, j in itertools.product((0, 1), repeat=2)))


def mat_mul(m: Matrix2, n: Matrix2) -> Matrix2:
    entries = []
    for i, j in itertools.product((0, 1), repeat=2):
        a = compose_all(m[i, 0], n[0, j])
        b = compose_all(m[i, 1], n[1, j])
        entries.append(join(a, b))
    return Matrix2(*entries)


def reconstruct(m: Matrix2, s: SelfSimilarStructure) -> PrefixArrow:
    """``⋁ x_i† e_ij x_j``; inverse of :func:`matrix_rep`."""
    x = embed_p2(s).basis
    parts = [compose_all(dagger(x[i]), m[i, j], x[j]) for i, j in itertools.product((0, 1), repeat=2)]
    return join_all(parts)


def change_matrix(source: SelfSimilarStructure, target: SelfSimilarStructure) -> Matrix2:
    """``u_ij = x_i y_j†`` for the source basis ``x`` and target basis ``y``."""
    x, y = embed_p2(source).basis, embed_p2(target).basis
    return Matrix2(*(compose_all(x[i], dagger(y[j])) for i, j in itertools.product((0, 1), repeat=2)))


def rebase(f: PrefixArrow, source: SelfSimilarStructure, target: SelfSimilarStructure) -> tuple[Matrix2, Matrix2]:
    """``([f]_target directly, U† [f]_source U)``; the two must agree."""
    u = change_matrix(source, target)
    direct = matrix_rep(f, target)
    conjugated = mat_mul(mat_mul(u.dagger(), matrix_rep(f, source)), u)
    return direct, conjugated


def is_diagonalized_by(f: PrefixArrow, source: SelfSimilarStructure, target: SelfSimilarStructure) -> bool:
    direct, conjugated = rebase(f, source, target)
    if direct != conjugated:
        raise ArrowError("change of representation is inconsistent")
    return direct.is_diagonal


def diagonal_form(x: PrefixArrow, y: PrefixArrow, source: SelfSimilarStructure, target: SelfSimilarStructure) -> Matrix2:
    """``[X ⊎_target Y]_source``: the matrices ``target`` diagonalises."""
    return matrix_rep(internalize(x, y, target), source)


def diagonal_parts(g: PrefixArrow, target: SelfSimilarStructure) -> Optional[tuple[PrefixArrow, PrefixArrow]]:
    """``(X, Y)`` with ``g = X ⊎_target Y`` if such exist, else ``None``."""
    p, q = embed_p2(target).basis
    x = compose_all(p, g, dagger(p))
    y = compose_all(q, g, dagger(q))
    return (x, y) if internalize(x, y, target) == g else None


# -- bounded search for a diagonalising structure ----------------------------

def _split_code(words: list[str]) -> list[str]:
    """A complete prefix code with ``len(words)`` words, as balanced as possible."""
    n = len(words)
    if n == 1:
        return [""]
    k = (n + 1) // 2
    return ["0" + w for w in _split_code(words[:k])] + ["1" + w for w in _split_code(words[k:])]


def _clopen(words) -> PrefixArrow:
    return PrefixArrow.untyped(*((w, w) for w in words))


def structure_for_partition(left: list[str], right: list[str]) -> SelfSimilarStructure:
    """A structure whose left summand lands on ``left`` and right on ``right``."""
    code = [("", w, "L", a) for w, a in zip(left, _split_code(left))]
    code += [("", w, "R", b) for w, b in zip(right, _split_code(right))]
    return SelfSimilarStructure(PrefixArrow(SS, S, tuple(code)))


def find_diagonalizing(f: PrefixArrow, max_depth: int = 4) -> Optional[SelfSimilarStructure]:
    """Search clopen splittings of ``S`` up to ``max_depth`` for one ``f`` preserves.

    ``[f]`` is diagonal exactly when ``f`` maps each half of the splitting into
    itself, so only the splitting matters.  Iterative deepening; first hit wins.
    """
    for d in range(1, max_depth + 1):
        words = ["".join(b) for b in itertools.product("01", repeat=d)]
        # the first word always goes left, so each splitting is tried once
        for mask in range(0, 2 ** (len(words) - 1) - 1):
            right = [w for i, w in enumerate(words[1:]) if mask >> i & 1 == 0]
            left = [words[0]] + [w for i, w in enumerate(words[1:]) if mask >> i & 1]
            if not right:
                continue
            e_left, e_right = _clopen(left), _clopen(right)
            if compose_all(e_right, f, e_left).is_zero and compose_all(e_left, f, e_right).is_zero:
                lt = [t[1] for t in e_left.terms]
                rt = [t[1] for t in e_right.terms]
                return structure_for_partition(sorted(lt), sorted(rt))
    return None


def render_matrix(m: Matrix2) -> str:
    def cell(a: PrefixArrow) -> str:
        return "1" if a == ONE else render(a)

    return f"[[{cell(m.e00)}, {cell(m.e01)}],[{cell(m.e10)}, {cell(m.e11)}]]"
