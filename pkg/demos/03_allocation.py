"""The full allocation pipeline on a heterogeneous instance.

Reduces the instance to an ordered one, runs the recursive moving-knife
procedure, lifts the result back to the original objects, and prints the
per-agent report plus the per-level knife trace.
"""

from fairchores import (
    allocate,
    allocate_two_agents_tight,
    moving_knife,
    normalize,
    reduce_to_ordered,
)

raw = [
    [5, 1, 1, 1, 1, 1],   # one big chore, several small ones
    [2, 2, 2, 2, 1, 1],   # fairly flat
    [1, 1, 1, 1, 3, 3],   # disagrees about which chores are bad
]
inst = normalize(raw)

alloc, report = allocate(inst)
print("allocation report")
for r in report.agents:
    print(f"  agent {r.agent + 1}: bundle {sorted(e + 1 for e in alloc.bundles[r.agent])},"
          f" cost {r.cost}, alpha {r.alpha}, cap {r.cap},"
          f" satisfied {r.satisfied}")

print()
print("knife trace (on the ordered instance)")
red = reduce_to_ordered(inst)
_, trace = moving_knife(red.ordered)
for lvl in trace.levels:
    print(f"  level with {lvl.level_n} agents: served agent {lvl.served_agent + 1}"
          f" after {lvl.prefix_len} knife steps, bundle cost {lvl.served_value}")
    for i, c in lvl.bundle_costs.items():
        print(f"    unserved agent {i + 1} values the served bundle at {c}")

print()
print("two-agent tight procedure (divide and choose against the exact oracle)")
two = normalize([[3, 2, 2, 2, 1], [1, 1, 4, 2, 2]])
alloc2 = allocate_two_agents_tight(two)
for i in range(2):
    cost = two.profile[i].value_of(alloc2.bundles[i])
    print(f"  agent {i + 1}: bundle {sorted(e + 1 for e in alloc2.bundles[i])}, cost {cost}")
