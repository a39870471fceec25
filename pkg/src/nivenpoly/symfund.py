"""Elementary symmetric polynomials and the constructive fundamental theorem.

:func:`symf` rewrites a symmetric polynomial ``p`` in ``n`` variables as
``t(σ_1, ..., σ_n)``.  Each step peels off the leading term
``α X_1^{k_1} ... X_n^{k_n}`` by subtracting
``α σ_1^{k_1-k_2} σ_2^{k_2-k_3} ... σ_n^{k_n}``, which has the same
leading term, so the remainder's leading monomial strictly drops.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import ArityError, CertificateError, InternalProgressError, NotSymmetricError
from .monomial import Monomial
from .mpoly import (
    MPoly,
    adjacent_transpositions,
    coeff,
    is_symmetric,
    mcompose,
    meval,
    mlead,
    mpoly_to_json,
    msym,
    total_degree,
)
from .upoly import UPoly

_MESYM_CACHE: dict[tuple[int, int], MPoly] = {}


def mesym(n: int, k: int) -> MPoly:
    """σ_{n,k}: sum over k-subsets of ``{1..n}`` of the product of their variables.

    ``mesym(n, 0) == 1`` and ``mesym(n, k) == 0`` for ``k > n``.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be natural numbers")
    key = (n, k)
    if key not in _MESYM_CACHE:
        terms = {}
        # binary-counter order over subsets of {1..n}; only the k-subsets contribute
        for bits in range(1 << n):
            if bin(bits).count("1") == k:
                terms[Monomial((bits >> i) & 1 for i in range(n))] = 1
        _MESYM_CACHE[key] = MPoly(n, terms)
    return _MESYM_CACHE[key]


def elementary_basis(n: int) -> list[MPoly]:
    """``[σ_{n,1}, ..., σ_{n,n}]``, the substitution used by the decomposition."""
    return [mesym(n, k) for k in range(1, n + 1)]


def vieta(c, roots: Sequence) -> UPoly:
    """Coefficients of ``c * prod(X - r)`` read off the elementary symmetric values."""
    n = len(roots)
    c = Fraction(c) if isinstance(c, int) else c
    coeffs = []
    for i in range(n + 1):
        sign = -1 if (n - i) % 2 else 1
        coeffs.append(c * sign * meval(mesym(n, n - i), list(roots)))
    return UPoly(coeffs)


def _recomposition_target(m: Monomial) -> Monomial:
    """``(k_1⊖k_2, ..., k_{n-1}⊖k_n, k_n)`` with truncated subtraction."""
    k = m.exps
    return Monomial(
        [max(k[i] - k[i + 1], 0) for i in range(len(k) - 1)] + list(k[-1:])
    )


class _Recomposer:
    """Caches ``X^m ∘ S`` via cached powers of each σ_{n,i}."""

    def __init__(self, n: int):
        self.n = n
        self.basis = elementary_basis(n)
        self._powers: list[dict[int, MPoly]] = [{0: MPoly.one(n)} for _ in range(n)]

    def power(self, i: int, e: int) -> MPoly:
        cache = self._powers[i]
        top = max(cache)
        while top < e:
            cache[top + 1] = cache[top] * self.basis[i]
            top += 1
        return cache[e]

    def image(self, m: Monomial) -> MPoly:
        result = MPoly.one(self.n)
        for i, e in enumerate(m.exps):
            if e:
                result = result * self.power(i, e)
        return result


def _symf1(p: MPoly, rec: _Recomposer) -> tuple[MPoly, MPoly]:
    if p.is_zero():
        return MPoly.zero(p.arity), MPoly.zero(p.arity)
    lead = mlead(p)
    alpha = coeff(p, lead)
    m = _recomposition_target(lead)
    return MPoly.monomial(m, alpha), p - rec.image(m).scale(alpha)


def symf1(p: MPoly) -> tuple[MPoly, MPoly]:
    """One peeling step: ``(α X^m, p - α (X^m ∘ S))``; ``(0, 0)`` for ``p == 0``."""
    return _symf1(p, _Recomposer(p.arity))


@dataclass(frozen=True)
class Decomposition:
    """Result of :func:`symf`, carrying its own re-checkable certificate."""

    t: MPoly
    remainder: MPoly
    iterations: int
    weight_bound: int
    input_degree: int
    source: MPoly = field(repr=False)
    lead_trace: tuple[Monomial, ...] = field(default=(), repr=False)

    @property
    def arity(self) -> int:
        return self.t.arity

    def recompose(self) -> MPoly:
        return mcompose(self.t, elementary_basis(self.arity), arity=self.arity)

    def verify(self) -> bool:
        """Re-run the recomposition and weight checks from scratch."""
        return (
            self.remainder.is_zero()
            and self.recompose() == self.source
            and max_weight(self.t) <= self.input_degree
        )

    def to_json(self, verified: bool | None = None) -> dict:
        return {
            "t": mpoly_to_json(self.t),
            "iterations": self.iterations,
            "weight_bound": self.weight_bound,
            "input_degree": self.input_degree,
            "verified": self.verify() if verified is None else verified,
        }


def max_weight(p: MPoly) -> int:
    return max((m.weight for m, _ in p.items()), default=0)


def default_fuel(p: MPoly) -> int:
    """Number of monomials of degree ``<= deg p`` in ``n`` variables."""
    return comb(total_degree(p) + p.arity, p.arity)


def symf(p: MPoly, max_fuel: int | None = None) -> Decomposition:
    """Decompose a symmetric ``p`` into the elementary symmetric basis.

    Raises:
        NotSymmetricError: ``p`` is not symmetric.
        InternalProgressError: the leading monomials stopped decreasing, or
            ``max_fuel`` ran out before the remainder vanished.
    """
    if not is_symmetric(p):
        raise NotSymmetricError("input polynomial is not symmetric")
    fuel = default_fuel(p) if max_fuel is None else max_fuel
    rec = _Recomposer(p.arity)
    t = MPoly.zero(p.arity)
    rest = p
    trace: list[Monomial] = []
    iterations = 0
    while not rest.is_zero():
        if iterations >= fuel:
            raise InternalProgressError(f"fuel of {fuel} exhausted with nonzero remainder")
        lead = mlead(rest)
        if trace and not lead < trace[-1]:
            raise InternalProgressError(f"leading monomial {lead} did not decrease")
        trace.append(lead)
        q, rest = _symf1(rest, rec)
        t = t + q
        iterations += 1
    return Decomposition(
        t=t,
        remainder=rest,
        iterations=iterations,
        weight_bound=max_weight(t),
        input_degree=total_degree(p),
        source=p,
        lead_trace=tuple(trace),
    )


def decompose_verified(p: MPoly, max_fuel: int | None = None) -> Decomposition:
    """:func:`symf` followed by a fresh recomposition; raises CertificateError on mismatch."""
    d = symf(p, max_fuel)
    if not d.verify():
        raise CertificateError("recomposition certificate failed")
    return d


def is_permutation_stable(ts: Sequence[MPoly]) -> bool:
    """Whether every adjacent transposition of the variables permutes ``ts`` as a multiset."""
    if not ts:
        return True
    k = ts[0].arity
    if any(q.arity != k for q in ts):
        raise ArityError("tuple entries have differing arities")
    base = Counter(ts)
    return all(Counter(msym(s, q) for q in ts) == base for s in adjacent_transpositions(k))


def check_msym_comp(p: MPoly, ts: Sequence[MPoly]) -> bool:
    """Permutation-stability premise for ``p ∘ ts`` to be symmetric.

    When the premise holds and ``p`` is symmetric, the composition is
    computed and checked; a failure there raises CertificateError.
    """
    if len(ts) != p.arity:
        raise ArityError(f"{len(ts)} entries for a polynomial of arity {p.arity}")
    stable = is_permutation_stable(ts)
    if stable and ts and is_symmetric(p):
        if not is_symmetric(mcompose(p, ts)):
            raise CertificateError("composition with a stable tuple is not symmetric")
    return stable


def subset_sums(n: int) -> list[MPoly]:
    """``Σ_{i∈S} β_i`` for every nonempty ``S ⊆ {1..n}`` in binary-counter order."""
    forms = []
    for bits in range(1, 1 << n):
        forms.append(MPoly(n, {Monomial.var(n, i + 1): 1 for i in range(n) if bits >> i & 1}))
    return forms


def power_sum(n: int, k: int) -> MPoly:
    return MPoly(n, {Monomial.var(n, i, k): 1 for i in range(1, n + 1)}) if n else MPoly.zero(0)


def symmetric_from_orbits(n: int, orbits: Sequence[tuple[Sequence[int], Fraction]]) -> MPoly:
    """Sum of orbit sums ``c * Σ_{σ∈S_n} X^{σ(e)}`` over distinct images."""
    total = MPoly.zero(n)
    for exps, c in orbits:
        images = {tuple(e) for e in itertools.permutations(exps)}
        total = total + MPoly(n, {Monomial(e): c for e in images})
    return total
