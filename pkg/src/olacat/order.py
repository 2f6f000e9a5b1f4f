"""The interval-finite order on eligible weights and block bookkeeping.

The order is generated by two kinds of downward steps from a weight:

* a simple reflection of the finite factor acting by the dot action, when
  it lowers the weight;
* adding a root whose psi grading is negative.

``leq_order`` explores these steps inside the finite factor of rank r + 1,
r being the larger eligibility rank.  ``leq_order_direct`` tests the closed
description instead: mu is a finite Weyl group rearrangement of lam + nu
with nu a sum of psi-negative roots.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DomainError, ResourceLimitError
from .kl import class_values
from .symalg import in_sym_support
from .weights import (EligibleWeight, Root, WeightIndex, block_class, box_positions,
                      class_boxes, class_of, dominance_geq, from_shifted, psi,
                      rho_box_coefficient)

__all__ = [
    "PosetEdge", "triangle_down", "leq_order", "leq_order_direct", "interval",
    "interval_graph", "hasse_edges", "chain_bound", "longest_chain",
    "block_class", "linkage_chain",
]

DOT_REFLECTION = "dot-reflection"
PSI_NEGATIVE_ROOT = "psi-negative-root"


@dataclass(frozen=True)
class PosetEdge:
    lower: EligibleWeight
    upper: EligibleWeight
    kind: str


def _down_edges(lam: EligibleWeight, R: int):
    x = class_values(lam, R)
    boxes = class_boxes(lam.n, R)
    current = {p: v for box, vals in zip(boxes, x) for p, v in zip(box, vals)}
    out = []
    for box, vals in zip(boxes, x):
        for t in range(len(box) - 1):
            if vals[t] > vals[t + 1]:
                swapped = dict(current)
                swapped[box[t]], swapped[box[t + 1]] = vals[t + 1], vals[t]
                out.append(PosetEdge(from_shifted(lam.n, lam.level, swapped), lam, DOT_REFLECTION))
    pts = box_positions(lam.n, R)
    for p in pts:
        for q in pts:
            if class_of(p) > class_of(q):
                out.append(PosetEdge(lam + Root(p, q).weight(lam.n), lam, PSI_NEGATIVE_ROOT))
    return out


def triangle_down(lam: EligibleWeight, r: int) -> list[PosetEdge]:
    """All one-step predecessors of lam inside the finite factor of rank r + 1."""
    if r < lam.eligibility_rank:
        raise DomainError(f"rank {r} is below the eligibility rank of {lam}")
    return _down_edges(lam, r + 1)


def _comparable_shape(mu, lam):
    if lam.n != mu.n:
        raise DomainError("weights with different block counts")
    return (block_class(lam) == block_class(mu) and dominance_geq(lam, mu)
            and psi(mu) <= psi(lam))


class _Frame:
    """Integer-vector view of the weights of one interval search.

    A weight is the tuple of its finite coefficients on the box positions of
    rank R, in index order; the level is fixed by the upper end point.
    """

    def __init__(self, n, level, R):
        self.n = n
        self.level = level
        self.pts = box_positions(n, R)
        slot = {p: t for t, p in enumerate(self.pts)}
        self.psi2 = [n - 2 * class_of(p) for p in self.pts]
        self.back = [level[p.k - 1] - p.i for p in self.pts]
        self.pairs = [(slot[a], slot[b]) for box in class_boxes(n, R) for a, b in zip(box, box[1:])]
        self.roots = [(slot[p], slot[q]) for p in self.pts for q in self.pts if class_of(p) > class_of(q)]

    def vec(self, lam):
        v = [0] * len(self.pts)
        idx = {p: t for t, p in enumerate(self.pts)}
        for p, b in lam.finite:
            v[idx[p]] = b
        return tuple(v)

    def weight(self, v):
        return EligibleWeight.make(self.n, self.level, [(p, b) for p, b in zip(self.pts, v) if b])

    def down(self, v):
        back = self.back
        for a, b in self.pairs:
            xa, xb = v[a] + back[a], v[b] + back[b]
            if xa > xb:
                w = list(v)
                w[a] = xb - back[a]
                w[b] = xa - back[b]
                yield tuple(w), DOT_REFLECTION
        for p, q in self.roots:
            w = list(v)
            w[p] += 1
            w[q] -= 1
            yield tuple(w), PSI_NEGATIVE_ROOT


def _explore(mu, lam, rank=None, depth=None, stop_at_target=False, max_depth=None):
    """Downward search from lam, keeping only weights that stay above mu.

    ``depth`` truncates the search silently, ``max_depth`` raises instead.
    Returns the frame, the search distances and the edges (lower, upper, kind)
    as integer vectors.
    """
    r = max(mu.eligibility_rank, lam.eligibility_rank) if rank is None else rank
    fr = _Frame(lam.n, lam.level, r + 1)
    top, goal = fr.vec(lam), fr.vec(mu)
    psi2 = fr.psi2
    goal_psi = sum(a * b for a, b in zip(goal, psi2))
    dist = {top: 0}
    edges = []
    queue = deque([top])
    while queue:
        g = queue.popleft()
        if stop_at_target and g == goal:
            break
        if depth is not None and dist[g] >= depth:
            continue
        for h, kind in fr.down(g):
            if sum(a * b for a, b in zip(h, psi2)) < goal_psi:
                continue
            run = 0
            for a, b in zip(h, goal):
                run += a - b
                if run < 0:
                    break
            else:
                edges.append((h, g, kind))
                if h not in dist:
                    dist[h] = dist[g] + 1
                    if max_depth is not None and dist[h] > max_depth:
                        raise ResourceLimitError("search depth", dist[h], max_depth)
                    queue.append(h)
    return fr, dist, edges


def leq_order(mu: EligibleWeight, lam: EligibleWeight, rank: int | None = None,
              max_depth: int | None = None) -> bool:
    """mu <= lam in the interval-finite order, by exhaustive downward search."""
    if mu == lam:
        return True
    if not _comparable_shape(mu, lam):
        return False
    fr, dist, _ = _explore(mu, lam, rank, stop_at_target=True, max_depth=max_depth)
    return fr.vec(mu) in dist


def leq_order_direct(mu: EligibleWeight, lam: EligibleWeight) -> bool:
    """mu <= lam via the closed description of the order.

    We need a rearrangement kappa of mu inside each class such that
    kappa - lam is a sum of psi-negative roots.  Only the positive part of
    kappa - lam in each class matters for that, and it is smallest when the
    values of kappa are matched to those of lam in the same relative order.
    """
    if mu == lam:
        return True
    if not _comparable_shape(mu, lam):
        return False
    R = max(mu.eligibility_rank, lam.eligibility_rank) + 1
    boxes = class_boxes(lam.n, R)
    values = {}
    for box, a, b in zip(boxes, class_values(lam, R), class_values(mu, R)):
        order = sorted(range(len(box)), key=lambda t: (-a[t], t))
        for t, v in zip(order, sorted(b, reverse=True)):
            values[box[t]] = v
    kappa = from_shifted(lam.n, lam.level, values)
    return in_sym_support(kappa - lam)


def interval(mu: EligibleWeight, lam: EligibleWeight, rank: int | None = None,
             depth: int | None = None, max_depth: int | None = None) -> frozenset:
    """All gamma with mu <= gamma <= lam."""
    nodes, _ = interval_graph(mu, lam, rank, depth, max_depth)
    return nodes


def interval_graph(mu, lam, rank=None, depth=None, max_depth=None):
    """The interval together with the one-step edges between its elements.

    ``depth`` limits the downward search to that many steps from lam.
    """
    if mu == lam:
        return frozenset([lam]), []
    if not _comparable_shape(mu, lam):
        return frozenset(), []
    fr, dist, edges = _explore(mu, lam, rank, depth, max_depth=max_depth)
    goal = fr.vec(mu)
    if goal not in dist:
        return frozenset(), []
    preds = {}
    for low, up, _ in edges:
        preds.setdefault(low, []).append(up)
    alive = {goal}
    stack = [goal]
    while stack:
        g = stack.pop()
        for h in preds.get(g, ()):
            if h not in alive:
                alive.add(h)
                stack.append(h)
    named = {v: fr.weight(v) for v in alive}
    kept = []
    seen = set()
    for low, up, kind in edges:
        if low in alive and up in alive and (low, up) not in seen:
            seen.add((low, up))
            kept.append(PosetEdge(named[low], named[up], kind))
    return frozenset(named.values()), kept


def hasse_edges(mu, lam, rank=None, max_depth=None) -> list[PosetEdge]:
    """Covering edges of the interval (one-step edges implied by no longer path)."""
    nodes, edges = interval_graph(mu, lam, rank, max_depth=max_depth)
    succ = {}
    for e in edges:
        succ.setdefault(e.lower, set()).add(e.upper)

    def reach(a):
        seen = set()
        stack = [a]
        while stack:
            g = stack.pop()
            for h in succ.get(g, ()):
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
        return seen

    out = []
    for e in edges:
        others = succ[e.lower] - {e.upper}
        if not any(e.upper in reach(o) for o in others):
            out.append(e)
    return out


def chain_bound(mu: EligibleWeight, lam: EligibleWeight, rank: int | None = None) -> int:
    """psi(lam - mu) plus the pairing of lam - mu with rho of the rank r + 1 factor."""
    r = max(mu.eligibility_rank, lam.eligibility_rank) if rank is None else rank
    d = lam - mu
    total = psi(d) + sum(b * rho_box_coefficient(p, lam.n, r + 1) for p, b in d.finite)
    return int(total)


def longest_chain(mu, lam, rank=None, max_depth=None) -> int | None:
    """Number of steps in the longest chain of one-step edges from lam down to mu."""
    nodes, edges = interval_graph(mu, lam, rank, max_depth=max_depth)
    if not nodes:
        return None
    succ = {}
    for e in edges:
        succ.setdefault(e.upper, []).append(e.lower)
    memo = {}

    def longest(g):
        if g == mu:
            return 0
        if g not in memo:
            memo[g] = max(1 + longest(h) for h in succ[g])
        return memo[g]

    return longest(lam)


def _pivot(c, n):
    return WeightIndex(1, 1) if c == 0 else WeightIndex(-1, c)


def linkage_chain(lam: EligibleWeight, mu: EligibleWeight, verify: bool = True) -> list[EligibleWeight]:
    """A chain from lam to mu whose steps add or remove one root of psi-degree -1.

    Every step goes down by such a root (the lower weight is then a
    constituent of the standard module of the upper one) or up by one.
    """
    if lam.n != mu.n or block_class(lam) != block_class(mu):
        raise DomainError("weights lie in different blocks")
    n = lam.n
    steps = {}

    def add(p, q, sign):
        key = (p, q)
        steps[key] = steps.get(key, 0) + sign

    d = (mu - lam).finite
    pivot_mass = [0] * (n + 1)
    for p, b in d:
        c = class_of(p)
        piv = _pivot(c, n)
        pivot_mass[c] += b
        if p == piv:
            continue
        # eps_p - eps_piv written with a neighbouring pivot x
        if c >= 1:
            x = _pivot(c - 1, n)
            add(p, x, b)
            add(piv, x, -b)
        else:
            x = _pivot(1, n)
            add(x, piv, b)
            add(x, p, -b)
    # remaining sum_c pivot_mass[c] eps_{piv_c}, telescoped over adjacent pivots
    carry = 0
    for c in range(n, 0, -1):
        carry += pivot_mass[c]
        if carry:
            add(_pivot(c, n), _pivot(c - 1, n), carry)
    chain = [lam]
    cur = lam
    down = [(k, v) for k, v in sorted(steps.items()) if v > 0]
    up = [(k, -v) for k, v in sorted(steps.items()) if v < 0]
    for (p, q), count in down:
        for _ in range(count):
            cur = cur + Root(p, q).weight(n)
            chain.append(cur)
    for (p, q), count in up:
        for _ in range(count):
            cur = cur - Root(p, q).weight(n)
            chain.append(cur)
    if cur != mu:
        raise AssertionError("linkage chain did not reach its endpoint")
    if verify:
        from .olamult import standard_simple_multiplicity
        for a, b in zip(chain, chain[1:]):
            if psi(b) < psi(a):
                ok = standard_simple_multiplicity(a, b) > 0
            else:
                ok = standard_simple_multiplicity(b, a) > 0
            if not ok:
                raise AssertionError(f"uncertified linkage step {a} -> {b}")
    return chain
