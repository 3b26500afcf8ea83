# %% [markdown]
# Fusion rings: Ising, the C_M family and their dimensions.

# %%
from fusionkit import (build_cm, build_ising, deligne_product, fp_dims, invertibles, pointed_ring,
                       ring_isomorphic, subring_generated, universal_grading, validate_ring)

ising = build_ising()
print(ising.labels)
print("Z x Z =", {ising.labels[c]: n for c, n in ising.product(2, 2).items()})
print("valid:", validate_ring(ising).ok)

# %%
d = fp_dims(ising)
print([str(x) for x in d.dims], "total", d.total)   # 1, 1, √2 and 4

# %%
# C_8 is the subring of Ising x Z_8 generated by Z x 1
big = deligne_product(ising, pointed_ring((8,)))
sub = subring_generated(big, [big.index("Z⊠1")])
c8, grading = build_cm(8)
print(sub.rank, c8.rank, ring_isomorphic(sub.as_ring(), c8) is not None)

# %%
print("G(C_8) =", invertibles(c8).invariant_factors)
print("U(C_8) =", universal_grading(c8).group.invariant_factors)
for j in range(4):
    z = c8.index(f"Z⊠{2 * j + 1}")
    print(c8.labels[z], "dual", c8.labels[c8.dual[z]])
