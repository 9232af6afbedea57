"""Guarantee-satisfying allocation for heterogeneous agents.

Pipeline: reduce the instance to an ordered one (every row non-increasing),
run the recursive moving-knife procedure against the monotone guarantee, then
lift the ordered allocation back to the original objects with a picking
sequence.  Every agent ends with disutility at most guarantee(n, alpha_i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import Allocation, DisutilityVector, Instance, ValidationError, order_vector
from .mms import minmax_partition
from .shares import guarantee, hill_share

F = Fraction


@dataclass(frozen=True)
class OrderedReduction:
    """Per-agent independently sorted instance plus the sorting permutations.

    ``permutations[i][p]`` is the original object index holding agent i's
    p-th largest disutility.
    """

    ordered: Instance
    permutations: tuple[tuple[int, ...], ...]
    original: Instance


@dataclass(frozen=True)
class KnifeLevel:
    """Trace of one recursion level of the moving-knife procedure."""

    agents: tuple[int, ...]             # active agents, original indices
    level_n: int
    alphas: dict[int, Fraction]         # current (renormalised) max entries
    caps: dict[int, Fraction]           # guarantee(level_n, alpha_i)
    prefix_values: dict[int, Fraction]  # knife-set disutility at loop exit
    served_agent: int
    prefix_len: int                     # knife length t at loop exit
    removed_position: Optional[int]     # ordered position of the dropped object
    served_value: Fraction              # served agent's bundle value, current scale
    bundle_costs: dict[int, Fraction]   # unserved agents' C_i = v_i(served bundle)
    renorm_factors: dict[int, Fraction]  # 1 - C_i per unserved agent
    early_exhaustion: bool


@dataclass(frozen=True)
class KnifeTrace:
    levels: tuple[KnifeLevel, ...]


@dataclass(frozen=True)
class AgentReport:
    agent: int
    alpha: Fraction
    cap: Fraction
    cost: Fraction
    satisfied: bool


@dataclass(frozen=True)
class AllocationReport:
    agents: tuple[AgentReport, ...]
    trace: Optional[KnifeTrace] = None


def reduce_to_ordered(inst: Instance) -> OrderedReduction:
    ordered_rows = []
    perms = []
    for row in inst.profile:
        o, p = order_vector(row)
        ordered_rows.append(o)
        perms.append(p)
    ordered = Instance(tuple(ordered_rows), inst.scale_factors)
    return OrderedReduction(ordered, tuple(perms), inst)


def moving_knife(ordered: Instance) -> tuple[Allocation, KnifeTrace]:
    """Allocate ordered positions so each agent stays within her guarantee.

    Works level by level: all agents advance a shared prefix knife one object
    at a time while anyone is still within her cap; one agent who just crossed
    takes her prefix minus the last object; the rest renormalise and recurse.
    """
    n, m = ordered.n, ordered.m
    bundles: list[set[int]] = [set() for _ in range(n)]
    levels: list[KnifeLevel] = []
    active = list(range(n))
    remaining = list(range(m))
    vals = {i: dict(enumerate(ordered.profile[i].values)) for i in active}

    while active:
        n_ = len(active)
        if n_ == 1:
            bundles[active[0]].update(remaining)
            break
        alphas = {i: (vals[i][remaining[0]] if remaining else F(0)) for i in active}
        caps = {i: guarantee(n_, alphas[i]) for i in active}
        prefix = {i: F(0) for i in active}
        t = 0
        exhausted = False
        while any(prefix[i] <= caps[i] for i in active):
            if t == len(remaining):
                exhausted = True
                break
            e = remaining[t]
            for i in active:
                prefix[i] += vals[i][e]
            t += 1
        if exhausted:
            served = next(i for i in active if prefix[i] <= caps[i])
            bundles[served].update(remaining)
            levels.append(KnifeLevel(
                agents=tuple(active), level_n=n_, alphas=alphas, caps=caps,
                prefix_values=dict(prefix), served_agent=served, prefix_len=t,
                removed_position=None, served_value=prefix[served],
                bundle_costs={}, renorm_factors={}, early_exhaustion=True,
            ))
            break
        removed = remaining[t - 1]
        served = next(i for i in active if prefix[i] - vals[i][removed] <= caps[i])
        bundle = remaining[: t - 1]
        bundles[served].update(bundle)
        rest = remaining[t - 1:]
        costs = {i: prefix[i] - vals[i][removed] for i in active if i != served}
        factors = {i: 1 - costs[i] for i in costs}
        levels.append(KnifeLevel(
            agents=tuple(active), level_n=n_, alphas=alphas, caps=caps,
            prefix_values=dict(prefix), served_agent=served, prefix_len=t,
            removed_position=removed, served_value=prefix[served] - vals[served][removed],
            bundle_costs=costs, renorm_factors=factors, early_exhaustion=False,
        ))
        active = [i for i in active if i != served]
        if len(active) == 1:
            bundles[active[0]].update(rest)
            break
        remaining = rest
        new_vals = {}
        for i in active:
            f_ = factors[i]
            if f_ == 0:
                new_vals[i] = {e: F(0) for e in remaining}
            else:
                new_vals[i] = {e: vals[i][e] / f_ for e in remaining}
        vals = new_vals

    alloc = Allocation(tuple(frozenset(b) for b in bundles))
    alloc.validate(m)
    return alloc, KnifeTrace(tuple(levels))


def lift_allocation(red: OrderedReduction, ordered_alloc: Allocation) -> Allocation:
    """Picking-sequence lift of an ordered-position allocation.

    Positions are processed from last (cheapest) to first; the holder of the
    position picks her cheapest not-yet-taken original object (tie: lowest
    object index).  When position t is processed only m - t objects are gone,
    so at least one object no costlier than her t-th largest remains; each
    agent's real bundle therefore costs no more than her ordered bundle.
    """
    m = red.ordered.m
    ordered_alloc.validate(m)
    owner = {}
    for i, b in enumerate(ordered_alloc.bundles):
        for pos in b:
            owner[pos] = i
    taken: set[int] = set()
    real: list[set[int]] = [set() for _ in range(ordered_alloc.n)]
    for pos in range(m - 1, -1, -1):
        a = owner[pos]
        row = red.original.profile[a].values
        pick = min((j for j in range(m) if j not in taken), key=lambda j: (row[j], j))
        taken.add(pick)
        real[a].add(pick)
    return Allocation(tuple(frozenset(b) for b in real))


def allocate(inst: Instance) -> tuple[Allocation, AllocationReport]:
    """Full pipeline; the report gives per-agent alpha, cap, cost and flag."""
    n = inst.n
    if n == 1:
        alloc = Allocation((frozenset(range(inst.m)),))
        row = inst.profile[0]
        rep = AgentReport(0, row.alpha(), F(1), row.total(), True)
        return alloc, AllocationReport((rep,))
    red = reduce_to_ordered(inst)
    ordered_alloc, trace = moving_knife(red.ordered)
    real = lift_allocation(red, ordered_alloc)
    reports = []
    for i in range(n):
        row = inst.profile[i]
        alpha = row.alpha()
        cap = guarantee(n, alpha)
        cost = row.value_of(real.bundles[i])
        reports.append(AgentReport(i, alpha, cap, cost, cost <= cap))
    return real, AllocationReport(tuple(reports), trace)


def allocate_two_agents_tight(inst: Instance, **limits) -> Allocation:
    """Two-agent procedure meeting the tighter non-monotone share bound.

    The agent with the smaller worst-case share bound computes her exact
    min-max 2-partition; the other takes whichever bundle she likes better.
    """
    if inst.n != 2:
        raise ValidationError("procedure is specific to n = 2")
    alphas = [row.alpha() for row in inst.profile]

    def bound(i: int) -> Fraction:
        if alphas[i] == 0:
            return F(0)
        if alphas[i] == 1:
            return F(1)
        return hill_share(2, alphas[i], inst.m)

    bounds = [bound(0), bound(1)]
    if alphas[0] == 0 and alphas[1] > 0:
        divider = 1
    elif alphas[1] == 0 and alphas[0] > 0:
        divider = 0
    else:
        divider = 0 if bounds[0] <= bounds[1] else 1
    chooser = 1 - divider
    _, parts = minmax_partition(inst.profile[divider], 2, **limits)
    b0, b1 = parts.bundles
    ch_row = inst.profile[chooser]
    if ch_row.value_of(b0) <= ch_row.value_of(b1):
        chosen, other = b0, b1
    else:
        chosen, other = b1, b0
    bundles = [frozenset(), frozenset()]
    bundles[chooser] = chosen
    bundles[divider] = other
    return Allocation(tuple(bundles))
