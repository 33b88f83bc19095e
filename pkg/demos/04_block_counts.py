# %% [markdown]
# # Counting building blocks
#
# The general formula assembles codeword counts for fixed block patterns.
# Those counts rest on two ingredients: bounded compositions and the
# Hamming weight counts of MDS codes.

# %%
from bsymbol import FProfile, f_count, f_weight, hamming_count, n_b, n_infty
from bsymbol.counting import compositions

print("compositions of 5 into 2 parts:", list(compositions(5, 2)), "=", n_infty(2, 5))
print("parts at most 2:", n_b(4, 2, 3), " parts at most 3:", n_b(5, 3, 4))

# %% [markdown]
# A block of length L with m nonzeros and no zero run of length b-1 or more:

# %%
for m in range(1, 7):
    print(f"L=6, m={m}, b=3: {f_weight(3, 6, m)}  b=4: {f_weight(4, 6, m)}")

# %% [markdown]
# Codewords of a length-sum(L) MDS code with distance d whose blocks start
# and end nonzero and contain no long zero run:

# %%
for lengths in [(3,), (4,), (1, 2), (1, 3), (2, 2, 2)]:
    print(lengths, f_count(FProfile(b=3, d=3, lengths=lengths, q=11)))
print("Hamming counts A(3,3), A(4,3):", hamming_count(3, 3, 11), hamming_count(4, 3, 11))
