"""Dense univariate polynomials over a commutative coefficient ring.

Coefficients are stored ascending (``coeffs[i]`` multiplies ``X**i``) with
trailing zeros trimmed.  The ring only needs ``+``, ``-``, ``*``, integer
scaling and truthiness as a zero test, so both ``Fraction`` and
:class:`~nivenpoly.mpoly.MPoly` coefficients work.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Any, Sequence

from .errors import ZeroPolyError


def _trim(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _normalize(c):
    return Fraction(c) if isinstance(c, int) and not isinstance(c, bool) else c


class UPoly:
    """Univariate polynomial; immutable and hashable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        object.__setattr__(self, "coeffs", _trim([_normalize(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    @classmethod
    def x(cls) -> UPoly:
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> UPoly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> UPoly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Sequence, c=1) -> UPoly:
        """Direct expansion of ``c * prod(X - r)``, one factor at a time."""
        result = cls([c])
        for r in roots:
            result = result * cls([-r, 1])
        return result

    @property
    def size(self) -> int:
        return len(self.coeffs)

    @property
    def degree(self) -> int | None:
        """``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def lead(self):
        if not self.coeffs:
            raise ZeroPolyError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _lift(self, other) -> UPoly:
        return other if isinstance(other, UPoly) else UPoly([other])

    def __add__(self, other) -> UPoly:
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self) -> UPoly:
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> UPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> UPoly:
        return self._lift(other) + (-self)

    def __mul__(self, other) -> UPoly:
        if not isinstance(other, UPoly):
            return UPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out: list[Any] = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                term = ca * cb
                out[i + j] = term if out[i + j] is None else out[i + j] + term
        return UPoly(out)

    def __rmul__(self, other) -> UPoly:
        return UPoly([other * c for c in self.coeffs])

    def __pow__(self, n: int) -> UPoly:
        if n < 0:
            raise ValueError("negative power")
        result = UPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == UPoly([other]).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        return ueval(self, x)

    def map(self, f) -> UPoly:
        return UPoly([f(c) for c in self.coeffs])

    def is_integer(self) -> bool:
        """All coefficients are rationals with denominator 1."""
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def __repr__(self):
        return f"UPoly({format_upoly(self)!r})"

    def __str__(self):
        return format_upoly(self)

    def to_json(self) -> dict:
        return upoly_to_json(self)


def uadd(p: UPoly, q: UPoly) -> UPoly:
    return p + q


def umul(p: UPoly, q: UPoly) -> UPoly:
    return p * q


def uscale(c, p: UPoly) -> UPoly:
    return UPoly([c * a for a in p.coeffs])


def ueval(p: UPoly, x):
    """Horner evaluation; ``x`` may be any value compatible with the coefficients."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def ucompose_linear(p: UPoly, a, b) -> UPoly:
    """``p(a*X + b)``."""
    lin = UPoly([b, a])
    acc = UPoly()
    for c in reversed(p.coeffs):
        acc = acc * lin + UPoly([c])
    return acc


def uderive(p: UPoly) -> UPoly:
    return UPoly([i * c for i, c in enumerate(p.coeffs)][1:])


def uderive_n(p: UPoly, i: int) -> UPoly:
    """The ``i``-th derivative by repeated differentiation."""
    for _ in range(i):
        if not p:
            break
        p = uderive(p)
    return p


def nderivn(p: UPoly, i: int) -> UPoly:
    """Divided derivative ``p^(i) / i!`` via ``C(j+i, i) * a_{j+i}``.

    Integer coefficients stay integer.
    """
    return UPoly([comb(j + i, i) * c for j, c in enumerate(p.coeffs[i:])])


def sd(p: UPoly, j0: int = 0) -> UPoly:
    """``Σ_{j0 <= j < size p} p^(j)``; ``sd(p, 0)`` is the full sum of derivatives."""
    total = UPoly()
    d = uderive_n(p, j0)
    for _ in range(j0, p.size):
        total = total + d
        d = uderive(d)
    return total


def synthetic_division(p: UPoly, x) -> tuple[UPoly, Any]:
    """Divide by ``X - x``; returns ``(quotient, remainder)``."""
    if not p:
        return UPoly(), Fraction(0)
    out = []
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
        out.append(acc)
    remainder = out.pop()
    return UPoly(list(reversed(out))), remainder


def mroot_mult(p: UPoly, x) -> int:
    """Largest ``m`` such that ``(X - x)**m`` divides ``p`` (field coefficients)."""
    if not p:
        raise ZeroPolyError("multiplicity of a root of the zero polynomial is unbounded")
    m = 0
    while True:
        q, r = synthetic_division(p, x)
        if r:
            return m
        p, m = q, m + 1


def fact(n: int) -> int:
    return factorial(n)


def format_upoly(p: UPoly, var: str = "X") -> str:
    """Descending ``a_k*X^k + ... + a_0``; non-scalar coefficients are parenthesized."""
    if not p.coeffs:
        return "0"
    pieces = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if isinstance(c, Fraction):
            negative = c < 0
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
        else:
            negative = False
            body = f"({c})" if not mono else f"({c})*{mono}"
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def upoly_to_json(p: UPoly) -> dict:
    out = []
    for c in p.coeffs:
        out.append(str(c) if isinstance(c, Fraction) else c.to_json())
    return {"coeffs": out}


def upoly_from_json(data) -> UPoly:
    from .mpoly import mpoly_from_json

    return UPoly(
        [Fraction(c) if isinstance(c, str) else mpoly_from_json(c) for c in data["coeffs"]]
    )
