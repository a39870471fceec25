# %% [markdown]
# # Writing a symmetric polynomial in elementary symmetric polynomials
#
# Monomials are ordered by total degree, then lexicographically.  The
# decomposition repeatedly removes the leading term.

# %%
from nivenpoly import mesym, mweight, Monomial, parse_poly, symf
from nivenpoly.symfund import elementary_basis
from nivenpoly.mpoly import mcompose, msupp

# %%
for k in range(1, 4):
    print(f"sigma_3,{k} =", mesym(3, k))

print("weight of x1^2*x2*x3:", mweight(Monomial((2, 1, 1))))

# %% [markdown]
# ## A worked example

# %%
p = parse_poly("x^3*y + x^3*z + x*y^3 + x*z^3 + y^3*z + y*z^3", 3)
print("support, leading first:", [str(m) for m in msupp(p)])

d = symf(p)
print("t =", d.t)
print("iterations:", d.iterations)
print("leading monomials visited:", [str(m) for m in d.lead_trace])
print(f"weight bound {d.weight_bound} <= degree {d.input_degree}")

# %% [markdown]
# The certificate: substituting sigma_3,i for x_i in t gives p back.

# %%
assert mcompose(d.t, elementary_basis(3)) == p
print("recomposition ok:", d.verify())

# %% [markdown]
# ## Power sums
#
# Newton's identities appear as decompositions of the power sums.

# %%
from nivenpoly.symfund import power_sum

for k in range(1, 6):
    print(f"p_{k} =", symf(power_sum(4, k)).t)
