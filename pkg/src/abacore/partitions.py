"""Partitions, beta-sets and charged symbols.

A partition is a tuple of weakly decreasing positive integers; () is the
empty partition.  The symbol of a partition p at charge m is the strictly
increasing sequence of beta-numbers

    p[i] - (i + 1) + m        for the rows i = 0, 1, 2, ...

where p is padded with zero rows.  Row len(p)+k contributes m - len(p) - k,
so every position strictly below m - len(p) carries a bead ("trivial tail").
A finite window of rows therefore determines the whole symbol: the window
holds the top `rows` beta-numbers and everything below it is full.  On an
abacus picture, position j holds a black bead exactly when j is a
beta-number.

Charge bookkeeping that gets used all over the place: if a window's bottom
position is W and it holds r beads, the charge is W + r.
"""

from functools import lru_cache
from itertools import product
from typing import NamedTuple


def as_partition(p):
    """Normalize to a tuple of decreasing positive ints; drop trailing zeros."""
    p = tuple(int(x) for x in p)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(a < b for a, b in zip(p, p[1:])) or (p and p[-1] < 0):
        raise ValueError(f"not a partition: {p}")
    return p


def as_multipartition(mp):
    mp = tuple(as_partition(c) for c in mp)
    if not mp:
        raise ValueError("a multipartition needs at least one component")
    return mp


def as_charges(charges, l):
    charges = tuple(int(s) for s in charges)
    if len(charges) != l:
        raise ValueError(f"expected {l} charges, got {len(charges)}")
    return charges


def check_modulus(e):
    e = int(e)
    if e < 2:
        raise ValueError("the modulus e must be at least 2")
    return e


def size(p):
    return sum(p)


def mp_size(mp):
    return sum(sum(c) for c in mp)


def beta_set(p, m, rows):
    """The top `rows` beta-numbers of p at charge m, strictly increasing.

    Every position below the returned window is a bead.  `rows` must cover
    all of p's rows, otherwise nontrivial beads would fall outside the
    window.
    """
    p = as_partition(p)
    m, rows = int(m), int(rows)
    if rows < len(p):
        raise ValueError("window too small")
    parts = p + (0,) * (rows - len(p))
    return tuple(parts[i] - (i + 1) + m for i in reversed(range(rows)))


def partition_of_symbol(betas, m):
    """Inverse of beta_set: the partition encoded by a beta window at charge m."""
    betas = tuple(int(b) for b in betas)
    if any(a >= b for a, b in zip(betas, betas[1:])):
        raise ValueError("symbol entries must be strictly increasing")
    parts = [b + i + 1 - m for i, b in enumerate(reversed(betas))]
    if parts and parts[-1] < 0:
        raise ValueError("symbol window does not match the charge")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


class Symbol(NamedTuple):
    """A partition together with its charge; beta-numbers are a derived view."""

    partition: tuple
    charge: int

    def window(self, rows):
        return beta_set(self.partition, self.charge, rows)


def shift_symbol(s, r):
    """The shifted symbol X[r]: same partition, charge moved by r."""
    s = Symbol(*s)
    return Symbol(as_partition(s.partition), s.charge + int(r))


def partitions_of(n, max_part=None):
    """Generate the partitions of n, largest first part first."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n):
    return tuple(partitions_of(n))


def compositions_of(n, k):
    """Weak compositions of n into k parts."""
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions_of(n - first, k - 1):
            yield (first,) + rest


def multipartitions_of(n, l):
    """Generate the l-component multipartitions of total size n."""
    for sizes in compositions_of(n, l):
        yield from product(*(partition_list(s) for s in sizes))
