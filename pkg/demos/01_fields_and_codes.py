# %% [markdown]
# # Finite fields and Reed-Solomon codes
#
# Field elements are stored as integers whose base-p digits are polynomial
# coefficients.  Codes are built from generator matrices over such a field.

# %%
from bsymbol import make_field, rs_code, encode, enumerate_codewords, shorten, min_distance_bruteforce

gf8 = make_field(2, 3, [1, 1, 0, 1])   # x^3 + x + 1
x = gf8(2)
print("x * x^2 in GF(8):", x * gf8(4))
print("powers of x:", [(x**e).rep for e in range(8)])

# %% [markdown]
# A Reed-Solomon code evaluates polynomials of degree below k at n distinct
# points.  It is MDS: d = n - k + 1.

# %%
gf11 = make_field(11)
rs = rs_code(gf11, 6, 4)
print("params:", rs.params, "codewords:", rs.size)
print("f(x) = x   ->", encode(rs, [0, 1, 0, 0]).reps)
print("f(x) = 3 + x^2 ->", encode(rs, [3, 0, 1, 0]).reps)

# %% [markdown]
# Shortening keeps the codewords that vanish on chosen coordinates and drops
# those coordinates.  The result is again MDS with the same distance.

# %%
short = shorten(rs, {2})
print("shortened on {2}:", short.params, "checked d =", min_distance_bruteforce(short))
first = [w.reps for _, w in zip(range(4), enumerate_codewords(short))]
print("first codewords:", first)
