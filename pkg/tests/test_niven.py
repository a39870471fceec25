import math
from fractions import Fraction

import pytest

from nivenpoly import (
    IntegralityError,
    InvalidInputError,
    MPoly,
    QuadratureError,
    SkeletonInput,
    UPoly,
    build_Fp,
    build_Gp,
    build_T,
    check_Epd_structure,
    check_lemma3,
    e_case,
    find_p,
    is_symmetric,
    mroot_mult,
    pi_coeff_values,
    pi_construct,
    quadrature_check_lemma2,
    sd,
    ueval,
)
from nivenpoly.niven import (
    adaptive_simpson,
    common_denominator,
    dominates,
    is_prime,
    lemma2_closed_form,
    split_zero_roots,
)

X = UPoly.x()

# E'_p for the e case with a = (1, ..., 1), computed independently with sympy
# (expand X^(p-1) T^p, sum all derivatives, evaluate at 0 and 1..n_e)
FROZEN_E_PRIME = {
    (2, 5): 323682756888,
    (3, 7): 70046148716124980376242810880,
    (2, 7): 9297117718136928720,
}


def test_build_T():
    assert build_T(1, [1, 2]) == X**2 - 3 * X + 2
    n = 4
    assert build_T(1, range(1, n + 1)) == UPoly.from_roots(range(1, n + 1))
    T = build_T(3, [2, -5, Fraction(1, 3)])
    assert ueval(T, 0) == 3 * (-1) ** 3 * 2 * -5 * Fraction(1, 3)
    with pytest.raises(InvalidInputError):
        build_T(1, [1, 0])


def test_build_Fp():
    assert build_Fp(X - 1, 2) == X**3 - 2 * X**2 + X
    T = build_T(1, [1, 2, 3])
    for p in (2, 3, 5):
        F = build_Fp(T, p)
        assert F.degree == (p - 1) + p * 3
        assert mroot_mult(F, 0) == p - 1
        assert all(mroot_mult(F, a) == p for a in (1, 2, 3))


def test_check_lemma3():
    T = build_T(1, [1, 2])
    assert check_lemma3(build_Fp(T, 3), 3)
    assert check_lemma3(build_Fp(T, 1), 1)
    assert check_lemma3(X, 2)
    assert sd(X, 2) == UPoly()
    with pytest.raises(IntegralityError):
        check_lemma3(UPoly([Fraction(1, 2), 1]), 2)


def test_check_lemma3_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    F = sympy.expand(x**2 * ((x - 1) * (x - 2)) ** 3)
    tail = sum(sympy.diff(F, x, j) for j in range(3, 9))
    coeffs = sympy.Poly(tail, x).all_coeffs()
    assert all(int(c) % 6 == 0 for c in coeffs)
    assert check_lemma3(build_Fp(build_T(1, [1, 2]), 3), 3)


@pytest.mark.parametrize("n_e,p", sorted(FROZEN_E_PRIME))
def test_Gp_identities(n_e, p):
    T = build_T(1, range(1, n_e + 1))
    F = build_Fp(T, p)
    G = build_Gp(F, p)
    fp = math.factorial(p)
    assert fp * G == sd(F, p)
    assert G.is_integer()
    Fpd = sd(F, 0)
    for a in range(1, n_e + 1):
        assert ueval(Fpd, a) == fp * ueval(G, a)
    assert ueval(Fpd, 0) == math.factorial(p - 1) * ueval(T, 0) ** p + fp * ueval(G, 0)


def test_Fpd0_identity_small_case():
    # T = X - 1, p = 3: F = X^2 (X-1)^3; by hand F''(0) = 2 * (-1)^3 = -2
    T = X - 1
    F = build_Fp(T, 3)
    assert F == X**5 - 3 * X**4 + 3 * X**3 - X**2
    Fpd0 = ueval(sd(F, 0), 0)
    G0 = ueval(build_Gp(F, 3), 0)
    assert Fpd0 == 2 * (-1) ** 3 + 6 * G0


@pytest.mark.parametrize("n_e,p", sorted(FROZEN_E_PRIME))
def test_Epd_structure_frozen(n_e, p):
    rep = check_Epd_structure(
        SkeletonInput(c=1, k=1, gamma=[1] * n_e, alpha=range(1, n_e + 1), p=p)
    )
    assert rep.E_prime == FROZEN_E_PRIME[(n_e, p)]
    assert rep.Fpd0_decomposition_ok and rep.Fpd_alpha_divisible
    assert rep.Ep_prime_divisibility == (True, False)
    assert rep.lemma3 and rep.Gp_integer and rep.T_integer and rep.root_multiplicities_ok


def test_Epd_boundary_k_multiple_of_p():
    rep = check_Epd_structure(SkeletonInput(c=1, k=5, gamma=[1, 1], alpha=[1, 2], p=5))
    E = rep.E_prime
    assert rep.divisible_by_fact_p == (E.numerator % 120 == 0)
    assert rep.divisible_by_fact_p_minus_1


def test_skeleton_input_validation():
    with pytest.raises(InvalidInputError):
        SkeletonInput(c=1, k=0, gamma=[1], alpha=[1], p=5)
    with pytest.raises(InvalidInputError):
        SkeletonInput(c=1, k=1, gamma=[1], alpha=[0], p=5)
    with pytest.raises(InvalidInputError):
        SkeletonInput(c=1, k=1, gamma=[1], alpha=[1], p=6)
    with pytest.raises(InvalidInputError):
        check_Epd_structure(SkeletonInput(c=1, k=1, gamma=[1], alpha=[Fraction(1, 2)], p=5))


def test_non_unit_leading_coefficient():
    # T = 2 (X - 1/2)(X - 3) = 2X^2 - 7X + 3 is integral
    rep = check_Epd_structure(
        SkeletonInput(c=2, k=1, gamma=[1, 1], alpha=[Fraction(1, 2), 3], p=11)
    )
    assert rep.T_integer and rep.Fpd0_decomposition_ok and rep.Fpd_alpha_divisible
    assert rep.divisible_by_fact_p_minus_1 and not rep.divisible_by_fact_p


def test_quadrature_closed_forms():
    assert quadrature_check_lemma2(UPoly([1]), 1.0) < 1e-12
    assert abs(lemma2_closed_form(UPoly([1]), 1) - (1 - math.exp(-1))) < 1e-15
    # integration by parts: ∫_0^1 x e^{-x} dx = 1 - 2/e
    assert abs(lemma2_closed_form(X, 1) - (1 - 2 * math.exp(-1))) < 1e-15
    assert quadrature_check_lemma2(X, 1.0) < 1e-12
    F3 = build_Fp(build_T(1, [1, 2]), 3)
    for alpha in (1.0, 2.0):
        assert quadrature_check_lemma2(F3, alpha) < 1e-8


@pytest.mark.parametrize("deg", [0, 3, 6, 10])
@pytest.mark.parametrize("alpha", [-3.0, -1.25, 0.5, 3.0])
def test_quadrature_identity_bounded_degree(deg, alpha):
    P = UPoly([Fraction((-1) ** i * (i + 1), i + 2) for i in range(deg + 1)])
    assert quadrature_check_lemma2(P, alpha) < 1e-8


def test_adaptive_simpson():
    value, err = adaptive_simpson(math.sin, 0.0, math.pi, 1e-12)
    assert abs(value - 2.0) < 1e-11
    assert adaptive_simpson(math.exp, 1.0, 1.0, 1e-9) == (0.0, 0.0)
    with pytest.raises(QuadratureError):
        adaptive_simpson(lambda x: math.sin(1 / x) if x else 0.0, 0.0, 1.0, 1e-14, max_subintervals=64)
    with pytest.raises(InvalidInputError):
        quadrature_check_lemma2(X, 1.0, tol=0)


def brute_find_p(a, b, bounds):
    floor = max(bounds, default=0)
    return next(
        p for p in range(2, 10_000)
        if is_prime(p) and p > floor and a * b ** (p - 1) < math.factorial(p - 1)
    )


def test_find_p_examples():
    # p = 2: 1 < 1! fails; p = 3: 1 < 2! holds
    assert find_p(1, 1, []) == 3
    p = find_p(10, 10, [])
    assert dominates(10, 10, p)
    assert find_p(1, 1, [7]) == 11


@pytest.mark.parametrize("a,b,bounds", [(1, 1, []), (10, 10, []), (3, 7, [2]), (449, 6, [1, 2]), (1, 2, [30])])
def test_find_p_is_minimal(a, b, bounds):
    assert find_p(a, b, bounds) == brute_find_p(a, b, bounds)


def test_e_case_examples():
    rep = e_case(2, (1, 1, 1), p=5)
    assert rep.Ep_prime_divisibility == (True, False)
    assert rep.ok
    auto = e_case(3, (1, 1, 1, 1))
    assert auto.p_used >= 7 and is_prime(auto.p_used)
    assert auto.ok
    with pytest.raises(InvalidInputError):
        e_case(2, (0, 1, 1))
    with pytest.raises(InvalidInputError):
        e_case(2, (1, 0, 0))
    with pytest.raises(InvalidInputError):
        e_case(2, (1, 1, 1), p=6)


def test_e_case_gamma_indices():
    # gamma[i] = a[i+1]: changing a_2 only moves the α = 2 contribution
    base = e_case(2, (1, 1, 1), p=5).E_prime
    bumped = e_case(2, (1, 1, 2), p=5).E_prime
    F = build_Fp(build_T(1, [1, 2]), 5)
    assert bumped - base == ueval(sd(F, 0), 2)


def test_report_json():
    data = e_case(2, (1, 1, 1), p=5).to_json()
    assert data["E_prime"] == str(FROZEN_E_PRIME[(2, 5)])
    assert data["Ep_prime_divisibility"] == {
        "divisible_by_fact_p_minus_1": True,
        "divisible_by_fact_p": False,
    }
    assert data["ok"] is True and all(data["verdicts"].values())
    assert len(data["quadrature_residuals"]) == 2


def test_pi_construct_small():
    one = pi_construct(1)
    b1 = MPoly.var(1, 1)
    assert one.alpha_prime == (b1,)
    assert one.product == UPoly([-b1, MPoly.one(1)])
    assert one.decompositions[0].t == -MPoly.var(1, 1)

    two = pi_construct(2)
    B1, B2 = MPoly.var(2, 1), MPoly.var(2, 2)
    assert two.alpha_prime == (B1, B2, B1 + B2)
    assert two.product.degree == 3
    assert all(is_symmetric(c) for c in two.product_coeffs)
    for n in (1, 2, 3):
        assert len(pi_construct(n).alpha_prime) == 2**n - 1
    with pytest.raises(InvalidInputError):
        pi_construct(0)
    with pytest.raises(InvalidInputError):
        pi_construct(5)


def test_pi_coeff_values():
    r = Fraction(7, 3)
    assert UPoly(pi_coeff_values(1, [-r])) == X - r
    assert pi_coeff_values(2, [2, -3]) == [-6, 11, -6, 1]
    # B = (X - 1/2)(X - 3): subset sums 1/2, 3, 7/2
    b = [Fraction(3, 2), Fraction(-7, 2)]
    values = pi_coeff_values(2, b)
    assert UPoly(values) == UPoly.from_roots([Fraction(1, 2), 3, Fraction(7, 2)])
    c = common_denominator(values)
    assert c == 4 and all((c * v).denominator == 1 for v in values)
    with pytest.raises(InvalidInputError):
        pi_coeff_values(2, [1])


def test_pi_coeff_values_three_roots():
    roots = [1, -2, 4]
    B = UPoly.from_roots(roots)
    alpha_prime = [1, -2, 4, -1, 5, 2, 3]
    assert UPoly(pi_coeff_values(3, list(B.coeffs[:3]))) == UPoly.from_roots(alpha_prime)


def test_split_zero_roots():
    # β = (1, -1): subset sums 1, -1, 0
    values = pi_coeff_values(2, [-1, 0])
    k, T_prime, c = split_zero_roots(values)
    assert k == 2 and T_prime == X**2 - 1 and c == 1
