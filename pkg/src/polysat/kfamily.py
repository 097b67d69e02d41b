"""Exact maximum k-family sizes and difference sequences.

A k-family is a union of k antichains; by Mirsky's dual of Dilworth, a
set is a k-family exactly when its induced height is at most k.  dk uses
that characterization inside a branch-and-bound; dk_oracle maximizes over
antichain unions directly and exists to cross-check dk.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadK, NotRanked, SizeLimitExceeded
from .poset import bits, height, popcount, ranks

ORACLE_LIMIT = 10


@dataclass(frozen=True)
class DSequence:
    """Cumulative sequence d_1..d_c; strictly increasing and concave."""

    d: tuple

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.d, self.d[1:])):
            raise ValueError("d sequence must be strictly increasing")
        deltas = [b - a for a, b in zip((0,) + self.d, self.d)]
        if any(a < b for a, b in zip(deltas, deltas[1:])):
            raise ValueError("d sequence must be concave")

    def delta(self):
        return DeltaSequence(
            tuple(b - a for a, b in zip((0,) + self.d, self.d))
        )


@dataclass(frozen=True)
class DeltaSequence:
    """Difference sequence with the convention delta b_1 = b_1."""

    b: tuple

    def __post_init__(self):
        if not self.b or any(x < 1 for x in self.b):
            raise ValueError("entries must be positive")
        if any(a > b for a, b in zip(self.b[1:], self.b[:-1])):
            raise ValueError("sequence must be nonincreasing")

    @property
    def c(self):
        return len(self.b)

    def total(self):
        return sum(self.b)

    def partial_sums(self):
        out = []
        acc = 0
        for x in self.b:
            acc += x
            out.append(acc)
        return tuple(out)


def _greedy_chain_cover(p):
    """Partition into few chains by repeatedly peeling a longest chain."""
    uncovered = (1 << p.n) - 1
    chains = []
    while uncovered:
        best_len = [0] * p.n
        prev = [-1] * p.n
        top = -1
        for y in bits(uncovered):
            ln = 1
            pr = -1
            for x in bits(p.down[y] & uncovered):
                if best_len[x] + 1 > ln:
                    ln = best_len[x] + 1
                    pr = x
            best_len[y] = ln
            prev[y] = pr
            if top < 0 or ln > best_len[top]:
                top = y
        chain = []
        x = top
        while x >= 0:
            chain.append(x)
            x = prev[x]
        chain.reverse()
        chains.append(chain)
        for x in chain:
            uncovered &= ~(1 << x)
    return chains


def _greedy_kfamily(p, k):
    """Feasible incumbent: take elements in index order while height <= k."""
    lens = [0] * p.n
    mask = 0
    count = 0
    for y in range(p.n):
        ln = 1
        for x in bits(p.down[y] & mask):
            if lens[x] + 1 > ln:
                ln = lens[x] + 1
        if ln <= k:
            lens[y] = ln
            mask |= 1 << y
            count += 1
    return count


def dk(p, k):
    """Size of a largest k-family, by branch-and-bound.

    Prunes with the chain-cover bound: a height-<=k set meets any chain in
    at most k elements.
    """
    if k < 1:
        raise BadK("k must be positive")
    n = p.n
    if k >= height(p):
        return n
    chains = _greedy_chain_cover(p)
    chain_of = [0] * n
    for ci, chain in enumerate(chains):
        for x in chain:
            chain_of[x] = ci
    rem = [len(c) for c in chains]
    kept_in = [0] * len(chains)
    lens = [0] * n
    best = _greedy_kfamily(p, k)
    kept_mask = 0

    def rec(i, kept):
        nonlocal best, kept_mask
        bound = kept
        for ci, r in enumerate(rem):
            cap = k - kept_in[ci]
            if cap > 0:
                bound += r if r < cap else cap
        if bound <= best:
            return
        if i == n:
            best = kept
            return
        ci = chain_of[i]
        rem[ci] -= 1
        ln = 1
        for x in bits(p.down[i] & kept_mask):
            if lens[x] + 1 > ln:
                ln = lens[x] + 1
        if ln <= k:
            lens[i] = ln
            kept_mask |= 1 << i
            kept_in[ci] += 1
            rec(i + 1, kept + 1)
            kept_in[ci] -= 1
            kept_mask &= ~(1 << i)
        rec(i + 1, kept)
        rem[ci] += 1

    rec(0, 0)
    return best


def dk_oracle(p, k):
    """Slow independent oracle: best union of k antichains directly.

    Runs a reachable-union DP over maximal antichains; every antichain
    union is dominated by a union of maximal ones.
    """
    if p.n > ORACLE_LIMIT:
        raise SizeLimitExceeded(f"oracle limited to n<={ORACLE_LIMIT}")
    if k < 1:
        raise BadK("k must be positive")
    antichains = []
    full = (1 << p.n) - 1
    for mask in range(1, full + 1):
        if any(p.up[x] & mask for x in bits(mask)):
            continue
        antichains.append(mask)
    maximal = [
        a
        for a in antichains
        if not any(b != a and b & a == a for b in antichains)
    ]
    frontier = {0}
    for _ in range(k):
        unions = {u | a for u in frontier for a in maximal}
        frontier = {
            u for u in unions if not any(v != u and v | u == v for v in unions)
        }
    return max(popcount(u) for u in frontier)


def d_sequence(p):
    h = height(p)
    return DSequence(tuple(dk(p, k) for k in range(1, h + 1)))


def delta_sequence(p):
    return d_sequence(p).delta()


def is_strong_sperner(p):
    """True iff the k largest ranks form a maximum k-family for every k."""
    classes = ranks(p)
    if classes is None:
        raise NotRanked("poset has no consistent rank function")
    sizes = sorted((len(c) for c in classes), reverse=True)
    acc = 0
    for k, size in enumerate(sizes, start=1):
        acc += size
        if acc != dk(p, k):
            return False
    return True
