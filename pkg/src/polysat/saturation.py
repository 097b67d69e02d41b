"""k-norms, saturated chain partitions, and polyunsaturation certificates.

The minimum-norm searches are exact: min over all chain partitions of a
sum of k-norms is computed by a memoized recursion over element subsets.
The chain containing the lowest uncovered element is branched on, so each
partition is considered once; memoization on the uncovered mask collapses
the search to at most 2^n states.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import (
    BadK,
    BudgetExceeded,
    PartitionMismatch,
    SizeLimitExceeded,
)
from .kfamily import dk
from .poset import Chain, Poset, bits, height

DEFAULT_LIMIT_N = 16
HARD_LIMIT_N = 24
DEFAULT_BUDGET_S = 600.0


def worker_threads():
    """Worker-thread cap from POLYSAT_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("POLYSAT_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class ChainPartition:
    """A partition of the ground set of a poset into chains."""

    poset: Poset
    chains: tuple

    def __post_init__(self):
        seen = 0
        for chain in self.chains:
            if not chain.is_valid(self.poset):
                raise PartitionMismatch("block is not a chain")
            m = chain.mask()
            if m & seen:
                raise PartitionMismatch("blocks overlap")
            seen |= m
        if seen != (1 << self.poset.n) - 1:
            raise PartitionMismatch("blocks do not cover the ground set")

    def __len__(self):
        return len(self.chains)


@dataclass(frozen=True)
class Witness:
    partition: ChainPartition


@dataclass(frozen=True)
class NoJointPartition:
    min_joint_norm: int


@dataclass(frozen=True)
class PolyunsatReport:
    c: int
    pair_verdicts: dict = field(default_factory=dict)
    conclusion: bool = True


def mk(cp, k):
    """k-norm: sum over blocks of min(k, block size)."""
    if k < 1:
        raise BadK("k must be positive")
    return sum(min(k, len(chain)) for chain in cp.chains)


def is_k_saturated(p, cp, k):
    if cp.poset != p:
        raise PartitionMismatch("partition belongs to a different poset")
    return mk(cp, k) == dk(p, k)


def enumerate_chain_partitions(p, limit_n=DEFAULT_LIMIT_N):
    """Every chain partition exactly once, deterministically.

    Branches on the lowest-index uncovered element; its chain extends only
    upward in index, which is sound under topological indexing.
    """
    if p.n > limit_n:
        raise SizeLimitExceeded(f"partition enumeration limited to n<={limit_n}")
    chains = []

    def rec(uncovered):
        if not uncovered:
            yield ChainPartition(p, tuple(Chain(tuple(c)) for c in chains))
            return
        i = (uncovered & -uncovered).bit_length() - 1
        rest = uncovered & ~(1 << i)
        chain = [i]
        chains.append(chain)
        yield from _extend(chain, i, rest)
        chains.pop()

    def _extend(chain, top, rest):
        yield from rec(rest)
        for j in bits(p.up[top] & rest):
            chain.append(j)
            yield from _extend(chain, j, rest & ~(1 << j))
            chain.pop()

    yield from rec((1 << p.n) - 1)


class _NormSearch:
    """Exact minimizer of sum_{k in ks} m_k over all chain partitions."""

    def __init__(self, p, ks, budget_s=None):
        self.p = p
        self.ks = tuple(sorted(ks))
        self.memo = {}
        self.deadline = (
            time.monotonic() + budget_s if budget_s is not None else None
        )
        self.ticks = 0

    def _contrib(self, size):
        return sum(k if k < size else size for k in self.ks)

    def _tick(self):
        self.ticks += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("search ran past its time budget")

    def minimum(self, mask):
        if mask == 0:
            return 0
        cached = self.memo.get(mask)
        if cached is not None:
            return cached
        self._tick()
        p = self.p
        i = (mask & -mask).bit_length() - 1
        best = [None]

        def extend(top, rest, size):
            value = self._contrib(size) + self.minimum(rest)
            if best[0] is None or value < best[0]:
                best[0] = value
            for j in bits(p.up[top] & rest):
                extend(j, rest & ~(1 << j), size + 1)

        extend(i, mask & ~(1 << i), 1)
        self.memo[mask] = best[0]
        return best[0]

    def witness(self, mask):
        """Reconstruct one minimizing partition from the memo table."""
        chains = []
        while mask:
            i = (mask & -mask).bit_length() - 1
            target = self.minimum(mask)
            found = [None]

            def extend(chain, top, rest, size):
                if found[0] is None and self._contrib(size) + self.minimum(
                    rest
                ) == target:
                    found[0] = (tuple(chain), rest)
                    return
                for j in bits(self.p.up[top] & rest):
                    if found[0] is not None:
                        return
                    chain.append(j)
                    extend(chain, j, rest & ~(1 << j), size + 1)
                    chain.pop()

            extend([i], i, mask & ~(1 << i), 1)
            chain, mask = found[0]
            chains.append(Chain(chain))
        return ChainPartition(self.p, tuple(chains))


def _check_limit(p, limit_n):
    if limit_n > HARD_LIMIT_N:
        raise SizeLimitExceeded(
            f"subset search refuses limits above n={HARD_LIMIT_N}"
        )
    if p.n > limit_n:
        raise SizeLimitExceeded(
            f"n={p.n} exceeds the search limit {limit_n}; raise --limit-n"
        )


def min_norm(p, k, limit_n=DEFAULT_LIMIT_N, budget_s=None):
    """Minimum m_k over all chain partitions, with one minimizer.

    By Greene-Kleitman the value equals d_k; a mismatch is a bug, so it is
    asserted.
    """
    if k < 1:
        raise BadK("k must be positive")
    _check_limit(p, limit_n)
    search = _NormSearch(p, (k,), budget_s)
    full = (1 << p.n) - 1
    value = search.minimum(full)
    assert value == dk(p, k), "Greene-Kleitman violated: bug in dk or search"
    return value, search.witness(full)


def min_joint_norm(p, k, l, limit_n=DEFAULT_LIMIT_N, budget_s=None):
    """Minimum m_k + m_l over all chain partitions, with one minimizer."""
    if not 1 <= k < l:
        raise BadK("need 1 <= k < l")
    _check_limit(p, limit_n)
    search = _NormSearch(p, (k, l), budget_s)
    full = (1 << p.n) - 1
    value = search.minimum(full)
    return value, search.witness(full)


def find_saturated(p, ks, limit_n=DEFAULT_LIMIT_N, budget_s=None):
    """A partition saturated for every k in ks, or None (exhaustive).

    A partition attains sum_k m_k = sum_k d_k iff it is k-saturated for
    every k in ks, since each m_k >= d_k individually.
    """
    ks = sorted(set(ks))
    if not ks or ks[0] < 1:
        raise BadK("ks must be positive")
    _check_limit(p, limit_n)
    search = _NormSearch(p, ks, budget_s)
    full = (1 << p.n) - 1
    floor = sum(dk(p, k) for k in ks)
    if search.minimum(full) != floor:
        return None
    return search.witness(full)


def is_polyunsaturated(p, limit_n=DEFAULT_LIMIT_N, budget_s=None):
    """Exhaustive per-pair verdicts for all nonconsecutive k < l < height.

    Vacuously polyunsaturated when the height is below 4.
    """
    _check_limit(p, limit_n)
    c = height(p)
    pairs = [
        (k, l) for k in range(1, c - 2) for l in range(k + 2, c)
    ]

    def verdict(pair):
        k, l = pair
        floor = dk(p, k) + dk(p, l)
        value, partition = min_joint_norm(
            p, k, l, limit_n=limit_n, budget_s=budget_s
        )
        if value == floor:
            return Witness(partition)
        return NoJointPartition(value)

    threads = worker_threads()
    if threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(verdict, pairs))
    else:
        results = [verdict(pair) for pair in pairs]
    verdicts = dict(zip(pairs, results))
    conclusion = all(isinstance(v, NoJointPartition) for v in verdicts.values())
    return PolyunsatReport(c=c, pair_verdicts=verdicts, conclusion=conclusion)
