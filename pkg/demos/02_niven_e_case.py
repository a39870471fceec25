# %% [markdown]
# # The arithmetic skeleton in the e case
#
# Suppose ``a_0 + a_1 e + a_2 e^2 = 0``.  Take ``alpha = (1, 2)``,
# ``T = (X - 1)(X - 2)`` and a prime ``p``.  Every quantity below is exact
# except the integral, which is checked by quadrature.

# %%
import math

from nivenpoly import build_Fp, build_Gp, build_T, e_case, find_p, sd, ueval

# %%
T = build_T(1, [1, 2])
p = 5
F = build_Fp(T, p)
G = build_Gp(F, p)
print("T   =", T)
print("F_5 =", F)
print("G_5 =", G)

# %% [markdown]
# Derivatives of order below ``p`` vanish at each root, so the full
# derivative sum at ``alpha_i`` is ``p!`` times ``G_p(alpha_i)``.

# %%
Fpd = sd(F, 0)
for a in (1, 2):
    print(a, ueval(Fpd, a), math.factorial(p) * ueval(G, a))
print("at 0:", ueval(Fpd, 0), "=", math.factorial(p - 1) * ueval(T, 0) ** p, "+", math.factorial(p) * ueval(G, 0))

# %% [markdown]
# ## The full report

# %%
report = e_case(2, (1, 1, 1), p=5)
print("E'_5 =", report.E_prime)
print("divisible by 4!, by 5!:", report.Ep_prime_divisibility)
print("quadrature residuals:", report.quadrature_residuals)
print("all verdicts hold:", report.ok)

# %% [markdown]
# Without ``p`` the harness picks the smallest admissible prime, using
# factorial dominance ``a * b^(p-1) < (p-1)!``.

# %%
print("find_p(10, 10):", find_p(10, 10))
auto = e_case(2, (1, 1, 1))
print("auto p =", auto.p_used, "ok =", auto.ok)
