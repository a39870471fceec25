"""Exact checks of the shared arithmetic skeleton behind the e and π proofs.

Given nonzero algebraic ``α_0..α_{n-1}`` and an integer ``c`` with
``T = c ∏(X - α_i)`` integral, the construction is

* ``F_p = X^(p-1) T^p``,
* ``F_pd = Σ_j F_p^(j)`` (all derivatives),
* ``G_p = (Σ_{j>=p} F_p^(j)) / p!``, integral when ``T`` is,
* ``E'_p = c^(np) (k F_pd(0) + Σ γ_i F_pd(α_i))``.

Everything here is exact except the integral identity
``∫_0^1 α e^{-αx} P(αx) dx = P_d(0) - e^{-α} P_d(α)``, which is checked
by adaptive Simpson quadrature against a high-precision closed form.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import CertificateError, IntegralityError, InvalidInputError, QuadratureError
from .mpoly import MPoly, is_integer_poly, is_symmetric, meval
from .symfund import Decomposition, decompose_verified, is_permutation_stable, subset_sums, vieta
from .upoly import UPoly, mroot_mult, nderivn, sd, ueval

MAX_SUBINTERVALS = 2**20


# --- primes and factorial dominance ---------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def find_p(a: int, b: int, lower_bounds: Sequence[int] = ()) -> int:
    """Smallest prime ``p`` with ``a * b**(p-1) < (p-1)!`` and ``p > max(lower_bounds)``."""
    if a < 1 or b < 1:
        raise InvalidInputError("a and b must be positive")
    floor = max((abs(int(x)) for x in lower_bounds), default=0)
    p = 2
    while True:
        if p > floor and is_prime(p) and a * b ** (p - 1) < math.factorial(p - 1):
            return p
        p += 1


def dominates(a: int, b: int, n: int) -> bool:
    """``a * b**(n-1) < (n-1)!`` by exact integer comparison."""
    return a * b ** (n - 1) < math.factorial(n - 1)


# --- the polynomial construction --------------------------------------------


def build_T(c, alpha: Sequence) -> UPoly:
    """``c * ∏(X - α_i)`` through Vieta's formula."""
    if c == 0:
        raise InvalidInputError("leading coefficient c must be nonzero")
    if any(a == 0 for a in alpha):
        raise InvalidInputError("every alpha must be nonzero")
    T = vieta(c, list(alpha))
    assert T.degree == len(alpha)
    return T


def build_Fp(T: UPoly, p: int) -> UPoly:
    """``X^(p-1) * T^p``."""
    if not T:
        raise InvalidInputError("T must be nonzero")
    if p < 1:
        raise InvalidInputError("p must be positive")
    return UPoly.monomial(p - 1) * T**p


def _require_integer(P: UPoly, name: str) -> None:
    if not P.is_integer():
        raise IntegralityError(f"{name} must have integer coefficients")


def check_lemma3(Fp: UPoly, p: int) -> bool:
    """Every coefficient of ``Σ_{j>=p} F_p^(j)`` is divisible by ``p!``."""
    _require_integer(Fp, "F_p")
    fp = math.factorial(p)
    return all(Fraction(c).numerator % fp == 0 for c in sd(Fp, p).coeffs)


def build_Gp(Fp: UPoly, p: int) -> UPoly:
    """``G_p = Σ_{i>=p} (i!/p!) * F_p^[i]`` with ``F_p^[i]`` the divided derivative.

    Raises IntegralityError if ``p! * G_p`` differs from ``sd(F_p, p)`` or an
    integral ``F_p`` yields a non-integral ``G_p``.
    """
    G = UPoly()
    ratio = 1  # i! / p!
    for i in range(p, Fp.size):
        if i > p:
            ratio *= i
        G = G + ratio * nderivn(Fp, i)
    if math.factorial(p) * G != sd(Fp, p):
        raise IntegralityError("p! * G_p does not reproduce the derivative tail")
    if Fp.is_integer() and not G.is_integer():
        raise IntegralityError("G_p lost integrality")
    return G


# --- skeleton inputs and report ------------------------------------------------


@dataclass(frozen=True)
class SkeletonInput:
    """Hypotheses of the main construction with rational ``alpha``."""

    c: int
    k: int
    gamma: tuple[int, ...]
    alpha: tuple[Fraction, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(g) for g in self.gamma))
        object.__setattr__(self, "alpha", tuple(Fraction(a) for a in self.alpha))
        if not self.alpha:
            raise InvalidInputError("need at least one alpha")
        if len(self.gamma) != len(self.alpha):
            raise InvalidInputError("gamma and alpha must have the same length")
        if self.c <= 0:
            raise InvalidInputError("c must be a positive integer")
        if self.k == 0:
            raise InvalidInputError("k must be nonzero")
        if any(a == 0 for a in self.alpha):
            raise InvalidInputError("every alpha must be nonzero")
        if not is_prime(self.p):
            raise InvalidInputError(f"p = {self.p} is not prime")

    @property
    def n(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class NivenReport:
    p_used: int
    T_integer: bool
    Fp_degree: int
    lemma3: bool
    Gp_integer: bool
    Fpd0_decomposition_ok: bool
    Fpd_alpha_divisible: bool
    divisible_by_fact_p_minus_1: bool
    divisible_by_fact_p: bool
    E_prime: Fraction
    bound_p: int
    quadrature_residuals: tuple[float, ...] = ()
    quadrature_tol: float | None = None
    root_multiplicities_ok: bool = True
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def Ep_prime_divisibility(self) -> tuple[bool, bool]:
        return self.divisible_by_fact_p_minus_1, self.divisible_by_fact_p

    @property
    def verdicts(self) -> dict[str, bool]:
        out = {
            "T_integer": self.T_integer,
            "lemma3": self.lemma3,
            "Gp_integer": self.Gp_integer,
            "root_multiplicities": self.root_multiplicities_ok,
            "Fpd0_decomposition": self.Fpd0_decomposition_ok,
            "Fpd_alpha_divisible": self.Fpd_alpha_divisible,
            "Ep_divisible_by_fact_p_minus_1": self.divisible_by_fact_p_minus_1,
            "Ep_not_divisible_by_fact_p": not self.divisible_by_fact_p,
        }
        if self.quadrature_tol is not None:
            out["quadrature"] = all(r < self.quadrature_tol for r in self.quadrature_residuals)
        return out

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict:
        return {
            "p_used": self.p_used,
            "bound_p": self.bound_p,
            "T_integer": self.T_integer,
            "Fp_degree": self.Fp_degree,
            "lemma3": self.lemma3,
            "Gp_integer": self.Gp_integer,
            "root_multiplicities_ok": self.root_multiplicities_ok,
            "Fpd0_decomposition_ok": self.Fpd0_decomposition_ok,
            "Fpd_alpha_divisible": self.Fpd_alpha_divisible,
            "Ep_prime_divisibility": {
                "divisible_by_fact_p_minus_1": self.divisible_by_fact_p_minus_1,
                "divisible_by_fact_p": self.divisible_by_fact_p,
            },
            "E_prime": str(self.E_prime),
            "quadrature_residuals": list(self.quadrature_residuals),
            "quadrature_tol": self.quadrature_tol,
            "verdicts": self.verdicts,
            "ok": self.ok,
            **self.extra,
        }


def dominance_constants(T: UPoly, alpha: Sequence, gamma: Sequence[int], c: int) -> tuple[int, int]:
    """Integers ``(a, b)`` with ``|E_p| <= a * b**(p-1)`` for real ``alpha``.

    Uses ``|I_{F_p}(α)| <= e^A A^p M^p`` where ``A = max |α_i|`` and ``M``
    bounds ``|T(α_i x)|`` on ``[0, 1]``.  ``M`` is a grid estimate rounded
    up with one unit of slack, not a certified bound.
    """
    alpha = [float(a) for a in alpha]
    A = max(abs(a) for a in alpha)
    grid = 512
    tf = [float(x) for x in T.coeffs]

    def t_at(y):
        acc = 0.0
        for co in reversed(tf):
            acc = acc * y + co
        return acc

    M = max(abs(t_at(a * j / grid)) for a in alpha for j in range(grid + 1))
    M = math.ceil(M) + 1
    cn = c ** len(alpha)
    weight = sum(abs(g) * math.exp(a) for g, a in zip(gamma, alpha))
    b = math.ceil(cn * A * M)
    a_const = math.ceil(cn * weight * math.exp(A) * A * M)
    return max(a_const, 1), max(b, 1)


def _floor_abs(x: Fraction) -> int:
    return abs(math.floor(x))


def check_Epd_structure(inp: SkeletonInput) -> NivenReport:
    """Exact verdicts for ``T``, ``F_p``, ``G_p`` and ``E'_p`` at one prime."""
    p, c = inp.p, inp.c
    T = build_T(c, inp.alpha)
    T_int = T.is_integer()
    if not T_int:
        raise InvalidInputError("T = c * prod(X - alpha_i) must have integer coefficients")
    Fp = build_Fp(T, p)
    mult_ok = mroot_mult(Fp, 0) == p - 1 and all(
        mroot_mult(Fp, a) == p * inp.alpha.count(a) for a in set(inp.alpha)
    )
    lemma3 = check_lemma3(Fp, p)
    Gp = build_Gp(Fp, p)
    Fpd = sd(Fp, 0)
    fp, fpm1 = math.factorial(p), math.factorial(p - 1)

    T0 = ueval(T, 0)
    fpd0 = ueval(Fpd, 0)
    fpd0_ok = fpd0 == fpm1 * T0**p + fp * ueval(Gp, 0)

    fpd_alpha = [ueval(Fpd, a) for a in inp.alpha]
    alpha_ok = all(v == fp * ueval(Gp, a) for v, a in zip(fpd_alpha, inp.alpha))

    scale = Fraction(c) ** (inp.n * p)
    E = scale * (inp.k * fpd0 + sum(g * v for g, v in zip(inp.gamma, fpd_alpha)))
    integral = E.denominator == 1
    div_pm1 = integral and E.numerator % fpm1 == 0
    div_p = integral and E.numerator % fp == 0

    a, b = dominance_constants(T, inp.alpha, inp.gamma, c)
    bound_p = find_p(a, b, [abs(inp.k), _floor_abs(T0), c])
    return NivenReport(
        p_used=p,
        T_integer=T_int,
        Fp_degree=Fp.degree,
        lemma3=lemma3,
        Gp_integer=Gp.is_integer(),
        Fpd0_decomposition_ok=fpd0_ok,
        Fpd_alpha_divisible=alpha_ok,
        divisible_by_fact_p_minus_1=div_pm1,
        divisible_by_fact_p=div_p,
        E_prime=E,
        bound_p=bound_p,
        root_multiplicities_ok=mult_ok,
        extra={"dominance_constants": {"a": a, "b": b}},
    )


# --- quadrature ------------------------------------------------------------------


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    max_subintervals: int = MAX_SUBINTERVALS,
    min_depth: int = 4,
) -> tuple[float, float]:
    """Adaptive Simpson with bisection; returns ``(value, error_estimate)``.

    Each accepted panel satisfies ``|S_left + S_right - S_whole| <= 15 * tol_panel``
    with the tolerance halved at every split.  The Richardson correction is
    added to the value.
    """
    if a == b:
        return 0.0, 0.0
    fa, fb, fm = f(a), f(b), f((a + b) / 2)
    whole = (b - a) / 6 * (fa + 4 * fm + fb)
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    total = 0.0
    err = 0.0
    panels = 1
    while stack:
        lo, hi, flo, fmid, fhi, s, eps, depth = stack.pop()
        mid = (lo + hi) / 2
        lm, rm = (lo + mid) / 2, (mid + hi) / 2
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6 * (flo + 4 * flm + fmid)
        right = (hi - mid) / 6 * (fmid + 4 * frm + fhi)
        delta = left + right - s
        if depth >= min_depth and abs(delta) <= 15 * eps:
            total += left + right + delta / 15
            err += abs(delta) / 15
            continue
        panels += 1
        if panels > max_subintervals:
            raise QuadratureError(f"no convergence within {max_subintervals} subintervals")
        stack.append((lo, mid, flo, flm, fmid, left, eps / 2, depth + 1))
        stack.append((mid, hi, fmid, frm, fhi, right, eps / 2, depth + 1))
    return total, err


def _horner_float(P: UPoly) -> Callable[[float], float]:
    coeffs = [float(c) for c in P.coeffs]

    def f(y: float) -> float:
        acc = 0.0
        for co in reversed(coeffs):
            acc = acc * y + co
        return acc

    return f


def lemma2_closed_form(P: UPoly, alpha) -> float:
    """``P_d(0) - e^{-α} P_d(α)`` evaluated exactly, then rounded to float."""
    alpha = Fraction(alpha)
    Pd = sd(P, 0)
    v0, va = Fraction(ueval(Pd, 0)), Fraction(ueval(Pd, alpha))
    digits = max(len(str(abs(v0.numerator))), len(str(abs(va.numerator))), 1)
    ctx = decimal.Context(prec=digits + 60)

    def dec(q: Fraction) -> decimal.Decimal:
        return ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))

    e_neg = ctx.exp(-dec(alpha))
    return float(ctx.subtract(dec(v0), ctx.multiply(e_neg, dec(va))))


def quadrature_check_lemma2(
    P: UPoly,
    alpha: float,
    tol: float = 1e-8,
    evaluator: Callable[[float], float] | None = None,
) -> float:
    """``|∫_0^1 α e^{-αx} P(αx) dx - (P_d(0) - e^{-α} P_d(α))|`` for real ``α``.

    ``evaluator`` replaces float Horner evaluation of ``P`` (useful when a
    factored form is numerically better conditioned).
    """
    if tol <= 0:
        raise InvalidInputError("tol must be positive")
    alpha = float(alpha)
    fP = evaluator or _horner_float(P)

    def integrand(x: float) -> float:
        return alpha * math.exp(-alpha * x) * fP(alpha * x)

    value, _ = adaptive_simpson(integrand, 0.0, 1.0, tol / 10)
    return abs(value - lemma2_closed_form(P, alpha))


def _factored_Fp(T: UPoly, p: int) -> Callable[[float], float]:
    t = _horner_float(T)

    def f(y: float) -> float:
        return y ** (p - 1) * t(y) ** p

    return f


# --- the e case --------------------------------------------------------------------


def e_case(n_e: int, a: Sequence[int], p: int | None = None, tol: float = 1e-8) -> NivenReport:
    """Skeleton for a hypothetical ``Σ a_i e^i = 0``: ``α_i = i+1``, ``γ_i = a_{i+1}``, ``k = a_0``."""
    a = [int(x) for x in a]
    if n_e < 1:
        raise InvalidInputError("n_e must be positive")
    if len(a) != n_e + 1:
        raise InvalidInputError(f"expected {n_e + 1} coefficients, got {len(a)}")
    if a[0] == 0:
        raise InvalidInputError("a_0 must be nonzero (0 is not a root)")
    if not any(a[1:]):
        raise InvalidInputError("at least one of a_1..a_n must be nonzero")
    alpha = [Fraction(i + 1) for i in range(n_e)]
    gamma = a[1:]
    T = build_T(1, alpha)
    if p is None:
        a_c, b_c = dominance_constants(T, alpha, gamma, 1)
        p = find_p(a_c, b_c, [abs(a[0]), _floor_abs(ueval(T, 0)), 1])
    elif not is_prime(p):
        raise InvalidInputError(f"p = {p} is not prime")
    report = check_Epd_structure(SkeletonInput(c=1, k=a[0], gamma=gamma, alpha=alpha, p=p))
    Fp = build_Fp(T, p)
    fF = _factored_Fp(T, p)
    residuals = tuple(
        quadrature_check_lemma2(Fp, float(al), tol, evaluator=fF) for al in alpha
    )
    return replace(report, quadrature_residuals=residuals, quadrature_tol=tol)


# --- the π case ----------------------------------------------------------------------


@dataclass(frozen=True)
class PiConstruction:
    n_pi: int
    alpha_prime: tuple[MPoly, ...]
    product: UPoly
    decompositions: tuple[Decomposition, ...]

    @property
    def product_coeffs(self) -> tuple[MPoly, ...]:
        return self.product.coeffs


@lru_cache(maxsize=None)
def pi_construct(n_pi: int) -> PiConstruction:
    """Subset sums of ``β_1..β_n``, their product polynomial and its decomposed coefficients.

    Coefficients are listed ascending in ``X``, the monic leading 1 included.
    """
    if not 1 <= n_pi <= 4:
        raise InvalidInputError("n_pi must lie in 1..4")
    forms = subset_sums(n_pi)
    if not is_permutation_stable(forms):
        raise CertificateError("subset sums are not permutation-stable")
    product = UPoly([MPoly.one(n_pi)])
    for q in forms:
        product = product * UPoly([-q, MPoly.one(n_pi)])
    decomps = []
    for q in product.coeffs:
        if not is_symmetric(q):
            raise CertificateError("product coefficient is not symmetric in beta")
        d = decompose_verified(q)
        if not is_integer_poly(d.t):
            raise CertificateError("decomposition lost integrality")
        decomps.append(d)
    return PiConstruction(n_pi, tuple(forms), product, tuple(decomps))


def elementary_values_from_monic(b: Sequence) -> list[Fraction]:
    """``σ_j(β) = (-1)^j b_{n-j}`` for ``B = X^n + b_{n-1} X^{n-1} + ... + b_0``."""
    n = len(b)
    return [(-1) ** j * Fraction(b[n - j]) for j in range(1, n + 1)]


def pi_coeff_values(n_pi: int, b: Sequence) -> list[Fraction]:
    """Rational coefficients (ascending) of ``∏(X - α'_j)`` for roots of the given ``B``."""
    if len(b) != n_pi:
        raise InvalidInputError(f"expected {n_pi} coefficients below the leading 1")
    construction = pi_construct(n_pi)
    sigma = elementary_values_from_monic(b)
    return [Fraction(meval(d.t, sigma)) for d in construction.decompositions]


def common_denominator(values: Sequence[Fraction]) -> int:
    return math.lcm(*(Fraction(v).denominator for v in values)) if values else 1


def split_zero_roots(values: Sequence[Fraction]) -> tuple[int, UPoly, int]:
    """From ``X^(k-1) T'`` (ascending coefficients) return ``(k, T', c)`` with ``c T'`` integral."""
    P = UPoly(values)
    if not P:
        raise InvalidInputError("zero polynomial")
    z = mroot_mult(P, 0)
    T_prime = UPoly(P.coeffs[z:])
    return z + 1, T_prime, common_denominator(T_prime.coeffs)
