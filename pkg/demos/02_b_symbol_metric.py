# %% [markdown]
# # Reading b symbols at a time
#
# A b-symbol channel returns every cyclic window of b consecutive
# coordinates.  The b-weight counts the windows that are not all zero.

# %%
from bsymbol import b_weight, b_distance, read_vector, shape_decompose, weight_from_shape

v = [1, 0, 0, 1, 0]
print("windows of", v, "for b=2:", read_vector(v, 2).windows)
for b in range(1, 6):
    print(f"  b={b}: weight {b_weight(v, b)}")

# %% [markdown]
# The distance between two words is the b-weight of their difference.

# %%
print("D_2:", b_distance([1, 0, 0, 1, 0], [0, 0, 0, 1, 0], 2))

# %% [markdown]
# The weight depends only on the zero pattern, and through that only on a
# coarse block structure: leading and trailing zeros, blocks without long
# zero runs, and the long zero runs between them.  The block sizes alone
# determine the weight.

# %%
v = [0, 1, 0, 1, 0, 0, 0, 2, 0]
shape = shape_decompose(v, 3)
print("shape:", shape, "t =", shape.t, "l =", shape.l)
print("weight from shape:", weight_from_shape(shape), "direct:", b_weight(v, 3))
