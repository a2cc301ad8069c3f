"""Quaternionic ADHM data and the reality checks.

Solves the charge-one constraints, turns them into a monad over Q(i), and
checks what a physical instanton must satisfy: invariance under the real
structure, trivial restriction to twistor lines, and the two-plane pairing.
A non-real sample is shown failing for contrast.

    python3 demos/real_instantons.py [seed]
"""

import sys

from instantons.adhm import (
    check_atiyah_pair, check_real_line_trivial, quaternionic_charge_one, rho_pullback,
)
from instantons.algebra import QQI
from instantons.monad import monad_isomorphic, sample_instanton

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
d, m, rep = quaternionic_charge_one(seed)
print("charge-one quaternionic data; validation:",
      ", ".join(f"{it.name}={it.ok}" for it in rep.items))

g = monad_isomorphic(m, rho_pullback(m))
print("monad isomorphic to its conjugate pullback:", g is not None)
if g is not None:
    print("  intertwiner on the middle term:", g[1])

lines = check_real_line_trivial(m, trials=20, seed=seed)
print(f"trivial on {lines.computed['trivial']}/20 sampled twistor lines")
print("two-plane criterion:", check_atiyah_pair(m).status)

plain = sample_instanton(2, 2, seed).change_field(QQI)
print("\na sampled charge-2 instanton with no real structure:")
print("  isomorphic to its conjugate pullback:", monad_isomorphic(plain, rho_pullback(plain)) is not None)
print("  two-plane criterion:", check_atiyah_pair(plain).status)
