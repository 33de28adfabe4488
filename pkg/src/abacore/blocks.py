"""Blocks of charged multipartitions and the group action on them.

A block is labeled by the charge tuple of the e-core of the underlying
partition together with the quotient weight; two charged multipartitions
lie in the same block exactly when those agree.  The extended affine
symmetric group acts on block labels through its action on the core
charges, and orbits of that action are classified by an invariant computed
on the level-l side.
"""

from functools import lru_cache
from typing import NamedTuple

from .actions import act_charge_e
from .nodes import boundary_nodes, e_tilde
from .partitions import (
    as_charges,
    as_multipartition,
    check_modulus,
    mp_size,
    multipartitions_of,
    partition_of_symbol,
)
from .quotients import (
    _require_domain,
    generalized_core,
    in_closed_domain,
    tau_e,
    tau_e_inverse,
    tau_l,
    tau_l_inverse,
)


class BlockId(NamedTuple):
    core_multicharge: tuple
    weight: int
    e: int
    l: int
    m: int


def _sort_key(b):
    return (b.weight, b.core_multicharge)


def block_id(mp, charges, e):
    """Label the block of a charged multipartition.

    The label is the e-symbol charge tuple of the e-core of the underlying
    partition, plus the e-quotient size (which equals the generalized core
    weight).
    """
    mp = as_multipartition(mp)
    l = len(mp)
    charges = as_charges(charges, l)
    e = check_modulus(e)
    _require_domain(charges, e)
    p, m = tau_l_inverse(mp, charges, e)
    quotient, s_e = tau_e(p, m, e)
    return BlockId(s_e, mp_size(quotient), e, l, m)


def blocks_of(n, charges, e):
    """Group all multipartitions of total size n into blocks.

    Returns a dict from BlockId to the sorted tuple of members, with the
    blocks ordered by (weight, core charge tuple).
    """
    charges = tuple(int(x) for x in charges)
    l = len(charges)
    groups = {}
    for mp in multipartitions_of(n, l):
        groups.setdefault(block_id(mp, charges, e), []).append(mp)
    return {
        b: tuple(sorted(groups[b])) for b in sorted(groups, key=_sort_key)
    }


@lru_cache(maxsize=None)
def uglov_set(charges, e, n):
    """Multipartitions of size n reachable from the empty one by good nodes.

    Layered construction: the empty multipartition at size zero, then every
    image of a layer under the node-adding crystal operators.
    """
    charges = tuple(int(x) for x in charges)
    e = check_modulus(e)
    n = int(n)
    if n == 0:
        return frozenset({((),) * len(charges)})
    out = set()
    for mp in uglov_set(charges, e, n - 1):
        for i in range(e):
            image = e_tilde(i, mp, charges, e)
            if image is not None:
                out.add(image)
    return frozenset(out)


def is_scopes(b, i, l):
    """Charge-gap test: no member of the block has an addable i-node.

    For i >= 1 the condition is s_i - s_{i-1} >= w.  For i = 0 the wrapped
    difference needs one unit more: s_0 - s_{e-1} >= w + 1.  The cheapest
    member with an addable i-node raises a runner-(i-1) bead to value v and
    opens a runner-i hole next to it, which costs s_i - s_{i-1} + 1 moves;
    in the wrapped case the hole sits one value above the bead, so one move
    comes for free and the cost is s_0 - s_{e-1}.  (Both w + e and w + l
    readings of the adjustment fail against the brute-force path; w + 1 is
    what it confirms, and it does not depend on the level.)
    """
    e = b.e
    if not 0 <= i < e:
        raise ValueError("residue out of range")
    s = b.core_multicharge
    w = b.weight
    if i == 0:
        return s[0] - s[e - 1] >= w + 1
    return s[i] - s[i - 1] >= w


def is_scopes_exhaustive(b, i, l):
    """Brute-force route: check every member of the block for addable i-nodes.

    Members are enumerated through their e-quotients (all e-multipartitions
    of size w at the block's core charges) and the addable-node check runs
    on the underlying charged partition, which carries the same addable
    residues as its level-l counterpart.
    """
    e = b.e
    if not 0 <= i < e:
        raise ValueError("residue out of range")
    s_e = b.core_multicharge
    w = b.weight
    core_p, core_m = tau_e_inverse(((),) * e, s_e)
    core_size = mp_size(tau_l(core_p, core_m, e, l)[0])
    for quotient in multipartitions_of(w, e):
        p, m = tau_e_inverse(quotient, s_e)
        member = tau_l(p, m, e, l)[0]
        assert mp_size(member) <= core_size + e * l * w
        addable, _ = boundary_nodes((p,), (m,), e, i)
        if addable:
            return False
    return True


def block_action(word, b, l):
    """Act on the block label through the core charges; the weight rides along."""
    s = act_charge_e(word, b.core_multicharge, l)
    return BlockId(s, b.weight, b.e, l, sum(s))


def level_multicharge(s_e, e, l):
    """The level-l charge tuple attached to an e-core charge tuple.

    Computed by carrying the core with that label through the level-l
    decomposition of its underlying partition.  Constant on orbits of the
    index-preserving generators, and separates them.
    """
    p, m = tau_e_inverse(((),) * e, tuple(int(x) for x in s_e))
    return tau_l(p, m, e, l)[1]


def orbit_equivalent(b1, b2, l):
    """Whether two block labels lie in one orbit of the sigma generators."""
    if (b1.e, b1.l, b1.m) != (b2.e, b2.l, b2.m) or b1.l != l:
        raise ValueError("context mismatch")
    if b1.weight != b2.weight:
        return False
    e = b1.e
    return level_multicharge(b1.core_multicharge, e, l) == level_multicharge(
        b2.core_multicharge, e, l
    )


def realize_multicharge(start, target, e):
    """Build a multipartition charged at `start` whose core charges are `target`.

    The witness is assembled directly on the doubly indexed abacus.  Core
    charges of a configuration depend only on its bead counts per e-runner,
    level charges only on the counts per level bucket, so it suffices to
    deform the empty configuration at `start` until its runner counts match
    those of the target core while the bucket counts never change.  Each
    step moves one bead from an overfull runner to an underfull one inside
    a single bucket, choosing the cheapest such move, and drops the count
    distance to the target by exactly two; termination is asserted through
    that strictly decreasing distance.  The post-condition is re-checked
    through generalized_core before returning.
    """
    start = tuple(int(x) for x in start)
    l = len(start)
    target = tuple(int(x) for x in target)
    e = check_modulus(e)
    _require_domain(start, e)
    if len(target) != l or sum(target) != sum(start) or not in_closed_domain(target, e):
        raise ValueError("unreachable multicharge")

    core_p, m = tau_l_inverse(((),) * l, target, e)
    runner_charges = tau_e(core_p, m, e)[1]
    bottom = e * min((0,) + runner_charges + start)
    need = [t - l * (bottom // e) for t in runner_charges]
    buckets = [set(range(bottom, start[l - 1 - d])) for d in range(l)]
    counts = [0] * e
    for vals in buckets:
        for v in vals:
            counts[v % e] += 1
    assert sum(counts) == sum(need) and min(need) >= 0

    while counts != need:
        gap = sum(abs(a - b) for a, b in zip(counts, need))
        c = next(q for q in range(e) if counts[q] > need[q])
        cp = next(q for q in range(e) if counts[q] < need[q])
        best = None
        for d, vals in enumerate(buckets):
            ours = [v for v in vals if v % e == c]
            if not ours:
                continue
            out = max(ours)
            add = bottom + (cp - bottom) % e
            while add in vals:
                add += e
            if best is None or add - out < best[0]:
                best = (add - out, d, out, add)
        _, d, out, add = best
        buckets[d].remove(out)
        buckets[d].add(add)
        counts[c] -= 1
        counts[cp] += 1
        assert sum(abs(a - b) for a, b in zip(counts, need)) == gap - 2

    witness = tuple(
        partition_of_symbol(tuple(sorted(buckets[l - 1 - j])), start[j])
        for j in range(l)
    )
    assert generalized_core(witness, start, e).core_charges == target
    return witness


def reachable_multicharges(start, e, bound):
    """Core charge tuples of every multipartition of size at most `bound`."""
    start = tuple(int(x) for x in start)
    l = len(start)
    out = set()
    for n in range(int(bound) + 1):
        for mp in multipartitions_of(n, l):
            out.add(generalized_core(mp, start, e).core_charges)
    return frozenset(out)
