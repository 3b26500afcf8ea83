# %% [markdown]
# Braidings on Z_M and the quadratic forms they induce.

# %%
from math import gcd

from fusionkit import (FiniteAbelianGroup, RootOfUnity, CyclicBraiding, classify_center,
                       enumerate_braidings, enumerate_quadratic_forms, quadratic_from_xi, radical,
                       split_svect_factor)
from fusionkit.roots import MINUS_ONE, ONE

for M in range(1, 9):
    plus = len(enumerate_braidings(M, ONE))
    minus = len(enumerate_braidings(M, MINUS_ONE))
    forms = len(enumerate_quadratic_forms(FiniteAbelianGroup.cyclic(M)))
    print(f"M={M}: zeta=1 -> {plus}, zeta=-1 -> {minus}, forms {forms}, gcd {gcd(M * M, 2 * M)}")

# %%
xi = RootOfUnity.of_order(8)
q = quadratic_from_xi(CyclicBraiding(4, xi))
print("q on Z_4:", [str(q((j,))) for j in range(4)])
print("radical:", list(radical(q)), classify_center(q).verdict.value)

# %%
# xi = i is not primitive: the radical is {0, 2} and q(2) = 1
qi = quadratic_from_xi(CyclicBraiding(4, RootOfUnity.of_order(4)))
c = classify_center(qi)
print(sorted(radical(qi)), c.verdict.value, "witness", c.witness)

# %%
# a fermion in the radical splits off
G = FiniteAbelianGroup((2, 4))
for form in enumerate_quadratic_forms(G):
    s = split_svect_factor(form)
    if s is not None:
        print("u =", s.u, "complement", s.complement_factors)
        break
