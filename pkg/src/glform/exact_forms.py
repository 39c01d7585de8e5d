"""Exact symmetric integer bilinear forms: signature, determinant, Smith
normal form, definiteness.  All arithmetic is integral or rational; no
floating point anywhere."""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels


class NotSymmetric(ValueError):
    pass


@dataclass(frozen=True)
class SymMatrix:
    """Immutable symmetric integer matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for r in self.rows:
            if len(r) != n:
                raise ValueError("matrix is not square")
            for x in r:
                if not isinstance(x, int):
                    raise TypeError(f"non-integer entry {x!r}")
        for i in range(n):
            for j in range(i):
                if self.rows[i][j] != self.rows[j][i]:
                    raise NotSymmetric(
                        f"entries ({i},{j}) and ({j},{i}) differ")

    @classmethod
    def from_rows(cls, rows) -> "SymMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class SignatureTriple:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus


def signature_triple(m: SymMatrix) -> SignatureTriple:
    """Inertia of a symmetric integer form by exact congruence reduction."""
    return SignatureTriple(*_kernels.signature_triple(m.to_lists()))


def det_exact(m: SymMatrix) -> int:
    """Determinant; the empty form has determinant 1."""
    return _kernels.det_exact(m.to_lists())


def smith_normal_form(m: SymMatrix) -> list[int]:
    """Invariant factors d1 | d2 | ..., nonnegative, zeros last."""
    if m.n == 0:
        return []
    return _kernels.smith_invariant_factors(m.to_lists())


def definiteness(m: SymMatrix) -> str:
    """One of 'positive', 'negative', 'indefinite', 'degenerate', 'empty'."""
    if m.n == 0:
        return "empty"
    t = signature_triple(m)
    if t.n_zero > 0:
        return "degenerate"
    if t.n_minus == 0:
        return "positive"
    if t.n_plus == 0:
        return "negative"
    return "indefinite"
