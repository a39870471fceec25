"""Exponent vectors: the free commutative monoid on ``n`` generators.

Storage is 0-based (``exps[0]`` is the exponent of ``X_1``) while the weight
uses 1-based ranks, so ``mweight((2, 1, 1)) == 1*2 + 2*1 + 3*1 == 7``.

Monomials are ordered degree first, then lexicographically on the exponent
vector (graded lex).  ``(0, 1, 0) < (1, 0, 0)`` and ``(1, 0, 0) < (0, 0, 2)``.
"""

from __future__ import annotations

from functools import total_ordering
from itertools import combinations_with_replacement
from typing import Iterable, Iterator

from .errors import ArityError


@total_ordering
class Monomial:
    """Immutable exponent vector with a fixed arity."""

    __slots__ = ("exps", "_hash", "_deg")

    def __init__(self, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_hash", hash(exps))
        object.__setattr__(self, "_deg", sum(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def zero(cls, arity: int) -> Monomial:
        return cls((0,) * arity)

    @classmethod
    def var(cls, arity: int, i: int, power: int = 1) -> Monomial:
        """``X_i**power`` with a 1-based variable index ``i``."""
        if not 1 <= i <= arity:
            raise IndexError(f"variable index {i} outside 1..{arity}")
        exps = [0] * arity
        exps[i - 1] = power
        return cls(exps)

    @property
    def arity(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return self._deg

    @property
    def weight(self) -> int:
        return sum(i * e for i, e in enumerate(self.exps, start=1))

    def _check(self, other: Monomial) -> None:
        if not isinstance(other, Monomial):
            raise TypeError(f"expected Monomial, got {type(other).__name__}")
        if len(self.exps) != len(other.exps):
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def sort_key(self) -> tuple[int, ...]:
        return (self._deg,) + self.exps

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        self._check(other)
        return self.sort_key() < other.sort_key()

    def __iter__(self) -> Iterator[int]:
        return iter(self.exps)

    def __len__(self) -> int:
        return len(self.exps)

    def __getitem__(self, i):
        return self.exps[i]

    def __repr__(self):
        return f"Monomial({self.exps})"

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


def mzero(arity: int) -> Monomial:
    return Monomial.zero(arity)


def madd(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise sum; raises ArityError on mismatched arity."""
    return a + b


def mdeg(m: Monomial) -> int:
    return m.degree


def mweight(m: Monomial) -> int:
    """Rank-weighted degree ``sum(i * k_i)`` with 1-based ranks."""
    return m.weight


def mnmc_le(a: Monomial, b: Monomial) -> bool:
    """Graded-lex comparison: ``(deg a, *a) <= (deg b, *b)`` lexicographically."""
    a._check(b)
    return a.sort_key() <= b.sort_key()


def monomials_up_to_degree(arity: int, degree: int) -> Iterator[Monomial]:
    """Every monomial of total degree ``<= degree`` in ``arity`` variables."""
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(arity), d):
            exps = [0] * arity
            for i in combo:
                exps[i] += 1
            yield Monomial(exps)
