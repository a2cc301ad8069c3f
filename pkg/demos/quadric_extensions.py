"""Bundles on the quadric P1 x P1 from extension data.

Builds V from random data (r, m), prints its cohomology, and shows that the
Aut(L) and T actions change the data but not the bundle, while the U1 slice
puts the data in normal form.

    python3 demos/quadric_extensions.py [r] [m]
"""

import random
import sys

from instantons.hirzebruch import (
    aut_action, build_quadric_bundle, bundle_cohomology, cohomology_table, generic_splitting,
    normalize_u1_slice, random_aut, random_extension_data, random_t, splitting_profile, t_action,
)

r = int(sys.argv[1]) if len(sys.argv) > 1 else 3
m = int(sys.argv[2]) if len(sys.argv) > 2 else 5
rng = random.Random(0)
e = random_extension_data(r, m, rng)
a, rho = generic_splitting(m, r)
print(f"rank {r}, c2 = {m}: L = O(-{a})^{r - rho} + O(-{a + 1})^{rho}, points {list(map(str, e.points))}")

pres = build_quadric_bundle(e)
h = bundle_cohomology(pres)
print(f"h(V) = {h}, chi = {h[0] - h[1] + h[2]} = r - m")
got, want = splitting_profile(pres, range(a - 1, a + 3))
print(f"h0(V(k,0)) for k = {a - 1}..{a + 2}: {got} (pushforward of V is L: {want})\n")

print("[III] before normalizing:", [[str(x) for x in row] for row in e.block("III")])
w, e2 = normalize_u1_slice(e)
print("H1 of the normalizing element:", w.H1)
print("[III] after normalizing: ", [[str(x) for x in row] for row in e2.block("III")], "\n")

w, t = random_aut(r, m, rng), random_t(e.ring, rng, e.points)
moved = t_action(t, aut_action(w, e))
print("acting with a random (w, t) changes the data:", moved != e)
tw = [(k1, k2) for k1 in range(-2, a + 2) for k2 in range(-2, 2)]
same = cohomology_table(pres, tw) == cohomology_table(build_quadric_bundle(moved), tw)
print(f"but all {len(tw)} twisted cohomology groups agree:", same)
