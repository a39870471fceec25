"""Sparse multivariate polynomials with exact rational coefficients.

An :class:`MPoly` is a reduced map ``Monomial -> Fraction``: keys share the
polynomial's arity and no stored coefficient is zero.  Every constructor
output goes through :func:`_reduce`, so structural equality of the maps is
polynomial equality.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import ArityError, ZeroLeadError
from .monomial import Monomial


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


def _reduce(pairs: Iterable[tuple[Monomial, Fraction]]) -> dict[Monomial, Fraction]:
    """Merge duplicate keys and drop zero coefficients."""
    acc: dict[Monomial, Fraction] = {}
    for m, c in pairs:
        acc[m] = acc.get(m, 0) + c
    return {m: Fraction(c) for m, c in acc.items() if c != 0}


class MPoly:
    """Polynomial in ``arity`` indeterminates ``X_1..X_n`` over the rationals.

    Arithmetic operators accept ints and Fractions as constants.  Instances
    are immutable and hashable.
    """

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping | Iterable = ()):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        pairs = []
        for m, c in items:
            if not isinstance(m, Monomial):
                m = Monomial(m)
            if m.arity != arity:
                raise ArityError(f"monomial {m.exps} does not have arity {arity}")
            pairs.append((m, _as_fraction(c)))
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "_terms", _reduce(pairs))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _from_reduced(cls, arity: int, terms: dict[Monomial, Fraction]) -> MPoly:
        obj = object.__new__(cls)
        object.__setattr__(obj, "arity", arity)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # constructors

    @classmethod
    def zero(cls, arity: int) -> MPoly:
        return cls._from_reduced(arity, {})

    @classmethod
    def constant(cls, arity: int, c) -> MPoly:
        c = _as_fraction(c)
        if c == 0:
            return cls.zero(arity)
        return cls._from_reduced(arity, {Monomial.zero(arity): c})

    @classmethod
    def one(cls, arity: int) -> MPoly:
        return cls.constant(arity, 1)

    @classmethod
    def var(cls, arity: int, i: int) -> MPoly:
        """The indeterminate ``X_i`` (1-based)."""
        return cls._from_reduced(arity, {Monomial.var(arity, i): Fraction(1)})

    @classmethod
    def monomial(cls, m: Monomial | Sequence[int], c=1) -> MPoly:
        m = m if isinstance(m, Monomial) else Monomial(m)
        return cls(m.arity, {m: c})

    # introspection

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (
            len(self._terms) == 1 and Monomial.zero(self.arity) in self._terms
        )

    def constant_term(self) -> Fraction:
        return self._terms.get(Monomial.zero(self.arity), Fraction(0))

    @property
    def degree(self) -> int | None:
        """Total degree; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(m.degree for m in self._terms)

    # coercion helpers

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.arity != self.arity:
                raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Rational)):
            return MPoly.constant(self.arity, other)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MPoly._from_reduced(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._from_reduced(self.arity, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> MPoly:
        c = _as_fraction(c)
        if c == 0:
            return MPoly.zero(self.arity)
        return MPoly._from_reduced(self.arity, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                acc[k] = acc.get(k, 0) + c1 * c2
        return MPoly._from_reduced(self.arity, {m: c for m, c in acc.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(Fraction(1) / _as_fraction(other))
        return NotImplemented

    def __pow__(self, n: int) -> MPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = MPoly.one(self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # equality / hashing

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == MPoly.constant(self.arity, other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.arity, frozenset(self._terms.items())))
            )
        return self._hash

    def __repr__(self):
        return f"MPoly({self.arity}, {format_mpoly(self)!r})"

    def __str__(self):
        return format_mpoly(self)

    def to_json(self) -> dict:
        return mpoly_to_json(self)


# --- functional API -------------------------------------------------------


def _check_arity(p: MPoly, q: MPoly) -> None:
    if p.arity != q.arity:
        raise ArityError(f"arity mismatch: {p.arity} vs {q.arity}")


def coeff(p: MPoly, m: Monomial | Sequence[int]) -> Fraction:
    m = m if isinstance(m, Monomial) else Monomial(m)
    if m.arity != p.arity:
        raise ArityError(f"monomial arity {m.arity} vs polynomial arity {p.arity}")
    return p._terms.get(m, Fraction(0))


def add(p: MPoly, q: MPoly) -> MPoly:
    _check_arity(p, q)
    return p + q


def neg(p: MPoly) -> MPoly:
    return -p


def scale(c, p: MPoly) -> MPoly:
    return p.scale(c)


def mul(p: MPoly, q: MPoly) -> MPoly:
    _check_arity(p, q)
    return p * q


def msupp(p: MPoly) -> list[Monomial]:
    """Support sorted in descending graded-lex order."""
    return sorted(p._terms, key=Monomial.sort_key, reverse=True)


def mlead(p: MPoly) -> Monomial:
    if not p._terms:
        raise ZeroLeadError("the zero polynomial has no leading monomial")
    return max(p._terms, key=Monomial.sort_key)


def mlead_coeff(p: MPoly) -> Fraction:
    return p._terms[mlead(p)]


def total_degree(p: MPoly) -> int:
    """Total degree, with the zero polynomial reported as 0."""
    return p.degree or 0


def msize(p: MPoly) -> int:
    """Total degree plus one; 0 for the zero polynomial."""
    return 0 if not p._terms else p.degree + 1


def meval(p: MPoly, point: Sequence):
    """Evaluate at ``point``; works for any values supporting ``+``, ``*`` and ``**``."""
    if len(point) != p.arity:
        raise ArityError(f"point has {len(point)} entries, polynomial arity is {p.arity}")
    total = Fraction(0)
    for m, c in p._terms.items():
        term = c
        for x, e in zip(point, m.exps):
            if e:
                term = term * x**e
        total = total + term
    return total


def mcompose(p: MPoly, subs: Sequence[MPoly], arity: int | None = None) -> MPoly:
    """Substitute ``X_i -> subs[i-1]``.

    The result has the common arity of ``subs``; pass ``arity`` when ``subs``
    is empty (arity-0 ``p``).
    """
    if len(subs) != p.arity:
        raise ArityError(f"{len(subs)} substitutions for arity {p.arity}")
    arities = {q.arity for q in subs}
    if arity is not None:
        arities.add(arity)
    if len(arities) > 1:
        raise ArityError(f"substitutions have differing arities {sorted(arities)}")
    if not arities:
        raise ArityError("result arity cannot be inferred from empty substitutions")
    (target,) = arities
    powers: list[dict[int, MPoly]] = [{0: MPoly.one(target), 1: q} for q in subs]

    def power(i: int, e: int) -> MPoly:
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * subs[i]
        return cache[e]

    result = MPoly.zero(target)
    for m, c in p._terms.items():
        term = MPoly.constant(target, c)
        for i, e in enumerate(m.exps):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def mderiv(p: MPoly, i: int) -> MPoly:
    """Formal partial derivative with respect to ``X_i`` (1-based)."""
    if not 1 <= i <= p.arity:
        raise IndexError(f"variable index {i} outside 1..{p.arity}")
    terms = {}
    for m, c in p._terms.items():
        e = m.exps[i - 1]
        if e:
            exps = list(m.exps)
            exps[i - 1] = e - 1
            terms[Monomial(exps)] = c * e
    return MPoly._from_reduced(p.arity, terms)


class Permutation:
    """Bijection of ``{0..n-1}``; ``images[i]`` is where index ``i`` is sent."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def arity(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        """Swap of the 1-based variables ``X_i`` and ``X_j``."""
        images = list(range(n))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        if self.arity != other.arity:
            raise ArityError("permutation arity mismatch")
        return Permutation(self.images[other.images[i]] for i in range(self.arity))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def adjacent_transpositions(n: int) -> list[Permutation]:
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


def msym(s: Permutation, p: MPoly) -> MPoly:
    """Rename ``X_{i+1} -> X_{s(i)+1}``; ``msym(s∘t, p) == msym(s, msym(t, p))``."""
    if s.arity != p.arity:
        raise ArityError(f"permutation arity {s.arity} vs polynomial arity {p.arity}")
    terms = {}
    for m, c in p._terms.items():
        exps = [0] * p.arity
        for i, e in enumerate(m.exps):
            exps[s.images[i]] = e
        terms[Monomial(exps)] = c
    return MPoly._from_reduced(p.arity, terms)


def is_symmetric(p: MPoly) -> bool:
    """Invariance under the adjacent transpositions, which generate S_n."""
    return all(msym(s, p) == p for s in adjacent_transpositions(p.arity))


def is_symmetric_exhaustive(p: MPoly) -> bool:
    """Check every permutation of S_n.  Only for small arity."""
    return all(
        msym(Permutation(images), p) == p
        for images in itertools.permutations(range(p.arity))
    )


def is_integer_poly(p: MPoly) -> bool:
    return all(c.denominator == 1 for c in p._terms.values())


def symmetrize(m: Monomial, c=1) -> MPoly:
    """Orbit sum of ``m`` under S_n, each distinct image with coefficient ``c``."""
    images = {Monomial(e) for e in itertools.permutations(m.exps)}
    return MPoly(m.arity, {img: c for img in images})


# --- rendering ------------------------------------------------------------


def format_coeff(c: Fraction) -> str:
    return str(c)


def format_mpoly(p: MPoly, var_names: Sequence[str] | None = None) -> str:
    """Canonical text: descending graded-lex terms ``c*x1^a*x2^b``."""
    if not p._terms:
        return "0"
    pieces = []
    for m in msupp(p):
        c = p._terms[m]
        mono = _format_monomial(m, var_names)
        mag = abs(c)
        if mono == "1":
            body = format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_coeff(mag)}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


def _format_monomial(m: Monomial, var_names: Sequence[str] | None) -> str:
    if var_names is None:
        return str(m)
    parts = []
    for name, e in zip(var_names, m.exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def mpoly_to_json(p: MPoly) -> dict:
    return {
        "arity": p.arity,
        "terms": [
            {"coeff": format_coeff(p._terms[m]), "exps": list(m.exps)} for m in msupp(p)
        ],
    }


def mpoly_from_json(data: Mapping) -> MPoly:
    arity = int(data["arity"])
    return MPoly(arity, [(Monomial(t["exps"]), Fraction(t["coeff"])) for t in data["terms"]])
