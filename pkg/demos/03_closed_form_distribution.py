# %% [markdown]
# # Exact b-weight distributions of MDS codes
#
# For an [n, k, d] MDS code the number of codewords of each b-weight has a
# closed form in n, k, q and b.  No codeword is ever generated.

# %%
from bsymbol import DistributionQuery, b_distribution, corollary_check

dist = b_distribution(DistributionQuery(q=11, n=6, k=4, b=3))
print(dist.mode, dist.as_list(), "total", dist.total)

# %% [markdown]
# Growing b pushes every codeword towards full weight.  Once d + b - 1
# reaches n no nonzero codeword can hide a window of b zeros.

# %%
for b in range(1, 7):
    d = b_distribution(DistributionQuery(11, 6, 4, b))
    print(f"b={b}  {d.mode:<13} {d.as_list()}")

# %% [markdown]
# The formulas are exact integers, so large parameters are fine.

# %%
big = b_distribution(DistributionQuery(q=257, n=40, k=12, b=5))
print("[40,12]_257, b=5: smallest weights", {w: big[w] for w in big.support()[:4]})
print("sums to q^k:", big.total == 257**12)

# %% [markdown]
# Several special cases have short independent formulas; each applicable one
# is checked against the general result.

# %%
for check in corollary_check(DistributionQuery(11, 6, 4, 3)):
    print(check)
