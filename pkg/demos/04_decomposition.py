# %% [markdown]
# Splitting a ring as I_N x B and recovering the factors.

# %%
import json

from fusionkit import (NIsingSpec, build_cm, build_nising, cyclic_extension_identify, decompose_gty,
                       deligne_product, fermionic_moore_read_ring, invertibles, is_isomorphism,
                       pointed_ring)

ring = deligne_product(build_nising(NIsingSpec(3)).ring, pointed_ring((2, 3)))
d = decompose_gty(ring)
print("N =", d.N, " B =", invertibles(d.B).invariant_factors)
back = deligne_product(build_nising(NIsingSpec(d.N)).ring, d.B)
print("witness ok:", is_isomorphism(back, ring, d.trace.witness))

# %%
t = d.trace
print(json.dumps({k: t.to_json()[k] for k in ("universal_factors", "Z", "g", "B0", "M")},
                 ensure_ascii=False, indent=1))

# %%
for M in (6, 12, 24, 40):
    dm = decompose_gty(build_cm(M)[0])
    print(f"C_{M}: N={dm.N}, |B|={dm.B_order}")

# %%
mr = fermionic_moore_read_ring()
res = decompose_gty(mr)
print(res.ok, res.step, res.reason)
print(cyclic_extension_identify(mr).note)
