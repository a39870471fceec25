# %% [markdown]
# # Subset sums of roots in the pi case
#
# Treat the roots ``beta_1..beta_n`` of a monic ``B`` as indeterminates.
# The product of ``X - s`` over all nonempty subset sums ``s`` has
# coefficients symmetric in ``beta``.  Those coefficients are therefore
# integer polynomials in the coefficients of ``B``.

# %%
from nivenpoly import UPoly, pi_coeff_values, pi_construct
from nivenpoly.niven import common_denominator, split_zero_roots

# %%
c = pi_construct(2)
print("subset sums:", [str(q) for q in c.alpha_prime])
for i, (q, d) in enumerate(zip(c.product_coeffs, c.decompositions)):
    print(f"[X^{i}] {q}   ->   {d.t}")

# %% [markdown]
# Plug in ``B = (X - 1)(X - 2) = X^2 - 3X + 2``.

# %%
values = pi_coeff_values(2, [2, -3])
print(UPoly(values), "==", UPoly.from_roots([1, 2, 3]))

# %% [markdown]
# Rational roots give rational coefficients.  A common denominator
# clears them.

# %%
values = pi_coeff_values(2, ["3/2", "-7/2"])
print(UPoly(values), " common denominator:", common_denominator(values))

# %% [markdown]
# A zero subset sum contributes a factor of ``X``.  It is split off
# before the main construction.

# %%
k, T_prime, c = split_zero_roots(pi_coeff_values(2, [-1, 0]))
print("k =", k, " T' =", T_prime, " c =", c)

# %%
three = pi_construct(3)
print(len(three.alpha_prime), "forms; all decompositions verified:", all(d.verify() for d in three.decompositions))
