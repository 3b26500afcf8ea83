# %% [markdown]
# N-Ising rings, induced braidings and their Mueger centres.

# %%
from fusionkit import (InducedBraiding, NIsingSpec, RootOfUnity, build_nising, degeneracy_criterion,
                       induced_center, ising_pairing, self_dual_noninvertibles, twist_obstruction,
                       verify_nofact, verify_prime)
from fusionkit.roots import I, MINUS_ONE

for N in range(1, 5):
    r = build_nising(NIsingSpec(N)).ring
    print(N, r.rank, verify_nofact(N).holds, verify_prime(N).prime)

# %%
print("self-dual Z_j:", {M: len(self_dual_noninvertibles(M)) for M in range(2, 17, 2)})

# %%
pairing = ising_pairing()
print("delta vs Z:", pairing.s_delta_Z, " q(delta):", pairing.q_delta)
for N, xi in [(2, RootOfUnity.of_order(8)), (3, RootOfUnity.of_order(16))]:
    rep = induced_center(N, InducedBraiding(pairing, xi))
    print(N, rep.center_labels, rep.verdict.value, rep.witness_label)

# %%
for N in (3, 4):
    t = degeneracy_criterion(N, MINUS_ONE)
    print(N, sum(r.slightly_degenerate for r in t.rows), "of", len(t.rows), t.equivalence_holds)

# %%
for N, z in [(2, I), (3, I), (3, RootOfUnity.of_order(8)), (3, MINUS_ONE)]:
    v = twist_obstruction(NIsingSpec(N, z))
    print(N, z, v.status.value, "-", v.reason)
