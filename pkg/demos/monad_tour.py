"""A walk through one rank-2, charge-2 instanton.

Samples a monad, prints its cohomology table, checks the invariants that
every instanton must have, and shows that isomorphism testing sees through
a random change of frame.

    python3 demos/monad_tour.py [seed]
"""

import random
import sys

from instantons.algebra import QQ, Matrix, is_invertible
from instantons.checks import check_end_dims, check_tangent_dimension, check_tensor_vanishing
from instantons.cohomology import CohomologyTable, monad_cohomology
from instantons.monad import act, monad_isomorphic, sample_instanton, splitting_type
from instantons.monad import find_trivializing_line

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
m = sample_instanton(2, 2, seed)
print(f"sampled a monad O(-1)^{m.n} -> O^{m.rank_middle} -> O(1)^{m.n} (seed {seed})\n")

table = CohomologyTable.build(lambda k: monad_cohomology(m, k), range(-4, 3))
print("h^i(F(k)):")
print("   k  " + "  ".join(f"h{i}" for i in range(4)))
for k in table.twists():
    print(f"  {k:>2}  " + "  ".join(f"{h:>2}" for h in table.row(k)))
print("instanton condition: h1(F(-2)) = h2(F(-2)) = 0, and h1(F(-1)) = n = 2\n")

end = check_end_dims(m)
print(f"End F: h = {end.computed['h(End F)']}  -> moduli dimension 4rn - r^2 + 1 = 13")
tan = check_tangent_dimension(m, h1_end=end.computed["h(End F)"][1])
print(f"linearized ADHM-type equations: nullity {tan.computed['nullity']} = 8rn + 6n^2; "
      f"minus the group dimension {tan.computed['group_dim']} leaves 13 again\n")

line = find_trivializing_line(m)
print(f"restriction to a random line splits as {splitting_type(m, line).degrees}")

other = sample_instanton(2, 1, seed)
tv = check_tensor_vanishing(m, other)
print(f"F (x) G with a charge-1 bundle G: h1((F(x)G)(-1)) = {tv.computed['h1((F*G)(-1))']}"
      f" = r''n' + r'n'' = 6 ({tv.status})\n")

rng = random.Random(seed)


def gl(k):
    while True:
        M = Matrix([[rng.randint(-2, 2) for _ in range(k)] for _ in range(k)], QQ)
        if is_invertible(M):
            return M


moved = act(m, gl(6), gl(2), gl(2))
g = monad_isomorphic(m, moved)
print("a randomly re-framed copy is recognised:", g is not None)
print("an independent sample is told apart:   ",
      monad_isomorphic(m, sample_instanton(2, 2, seed + 1)) is None)
