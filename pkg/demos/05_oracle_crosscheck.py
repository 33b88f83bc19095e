# %% [markdown]
# # Cross-checking against exhaustive enumeration
#
# The oracle generates every codeword and tallies weights.  It shares no
# code with the closed form beyond field arithmetic and the weight function.

# %%
import time

from bsymbol import DistributionQuery, b_distribution, make_field, rs_code
from bsymbol.oracle import brute_distributions

for q, n, k in [(11, 6, 4), (13, 8, 5), (9, 7, 3)]:
    p, m = {9: (3, 2)}.get(q, (q, 1))
    code = rs_code(make_field(p, m), n, k)
    t0 = time.perf_counter()
    scans = brute_distributions(code, range(1, n + 1))
    elapsed = time.perf_counter() - t0
    agree = all(
        scans[b].as_list() == b_distribution(DistributionQuery(q, n, k, b)).as_list()
        for b in scans
    )
    print(f"{code.params}: {code.size} codewords, all b agree: {agree} ({elapsed:.2f}s)")

# %% [markdown]
# Field representation does not matter: GF(9) built on two different
# irreducible polynomials gives identical distributions.

# %%
a = rs_code(make_field(3, 2, [2, 2, 1]), 7, 3)
b = rs_code(make_field(3, 2, [1, 0, 1]), 7, 3)
print(brute_distributions(a, [3])[3].as_list() == brute_distributions(b, [3])[3].as_list())
