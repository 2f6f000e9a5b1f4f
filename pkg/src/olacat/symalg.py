"""Weight multiplicities of the symmetric algebra on the psi-negative roots.

Every root ``eps_p - eps_q`` with ``psi = -d < 0`` is counted ``2**d - 1``
times (think of the copies as colours).  A weight ``nu`` of the symmetric
algebra is a sum of such roots, so it always has zero level and lies below
zero in the dominance order.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .errors import DomainError
from .weights import EligibleWeight, Root, box_positions, class_of, psi


def r_multiplicity(alpha: Root) -> int:
    """How many times alpha occurs in the weighted root space."""
    d = -alpha.psi()
    return 2 ** d - 1 if d >= 1 else 0


@dataclass(frozen=True)
class WeightedRootSpace:
    n: int
    r: int
    entries: dict = field(compare=False, hash=False)


@lru_cache(maxsize=None)
def weighted_root_space(n: int, r: int) -> WeightedRootSpace:
    pts = box_positions(n, r)
    entries = {}
    for p in pts:
        for q in pts:
            if class_of(p) > class_of(q):
                alpha = Root(p, q)
                entries[alpha] = r_multiplicity(alpha)
    return WeightedRootSpace(n, r, entries)


def _validate(nu: EligibleWeight, r: int):
    if any(nu.level):
        raise DomainError("symmetric algebra weights have zero level")
    if not nu.is_eligible(r):
        raise DomainError(f"weight {nu} is not {r}-eligible")


@lru_cache(maxsize=None)
def _plan(n: int, r: int):
    """Roots in the order used by the DP, plus bookkeeping that drives the pruning."""
    pts = box_positions(n, r)
    slot = {p: t for t, p in enumerate(pts)}
    roots = sorted(weighted_root_space(n, r).entries.items(),
                   key=lambda e: (min(slot[e[0].p], slot[e[0].q]), max(slot[e[0].p], slot[e[0].q])))
    table = [(slot[a.p], slot[a.q], -a.psi(), m) for a, m in roots]
    # last root index touching each slot; a slot is settled after that
    last = [-1] * len(pts)
    for j, (s, t, _, _) in enumerate(table):
        last[s] = max(last[s], j)
        last[t] = max(last[t], j)
    settle = defaultdict(list)
    for s, j in enumerate(last):
        settle[j + 1].append(s)
    classes = [class_of(p) for p in pts]
    return pts, slot, table, dict(settle), classes


def _transport_feasible(vec, classes, n):
    # Net flow between the classes: roots move mass from higher to lower
    # class numbers.  With T_c the total of vec on class c, the prefix sums
    # of T over classes 0..k must stay <= 0.
    totals = [0] * (n + 1)
    for v, c in zip(vec, classes):
        totals[c] += v
    run = 0
    for c in range(n + 1):
        run += totals[c]
        if run > 0:
            return False
    return True


def sym_weight_mult(nu: EligibleWeight, r: int) -> int:
    """Dimension of the nu weight space of the symmetric algebra at rank r."""
    _validate(nu, r)
    n = nu.n
    pts, slot, table, settle, classes = _plan(n, r)
    deg = -psi(nu)
    if deg < 0 or deg.denominator != 1:
        return 0
    deg = int(deg)
    target = [0] * len(pts)
    for p, b in nu.finite:
        target[slot[p]] = b
    if not _transport_feasible(target, classes, n):
        return 0

    @lru_cache(maxsize=None)
    def count(j, rem, budget):
        for s in settle.get(j, ()):
            if rem[s]:
                return 0
        if j == len(table):
            return 1 if budget == 0 and not any(rem) else 0
        s, t, d, m = table[j]
        total = 0
        c = 0
        cur = list(rem)
        while c * d <= budget:
            total += comb(m + c - 1, c) * count(j + 1, tuple(cur), budget - c * d)
            cur[s] -= 1
            cur[t] += 1
            c += 1
        return total

    # rem is what the remaining roots still have to produce
    return count(0, tuple(target), deg)


def sym_support_degree(nu: EligibleWeight, r: int | None = None) -> int | None:
    """-psi(nu) when nu is a weight of the symmetric algebra, otherwise None."""
    if any(nu.level):
        raise DomainError("symmetric algebra weights have zero level")
    if r is None:
        r = nu.eligibility_rank
    deg = -psi(nu)
    if deg < 0 or deg.denominator != 1:
        return None
    return int(deg) if sym_weight_mult(nu, r) else None


def sym_table(n: int, r: int, degree: int) -> dict[EligibleWeight, int]:
    """All weights of psi-degree -degree at rank r with their multiplicities."""
    if degree < 0:
        return {}
    pts = box_positions(n, r)
    slot = {p: t for t, p in enumerate(pts)}
    layer = {(tuple([0] * len(pts)), 0): 1}
    for alpha, m in weighted_root_space(n, r).entries.items():
        d = -alpha.psi()
        s, t = slot[alpha.p], slot[alpha.q]
        nxt = defaultdict(int)
        for (vec, used), mult in layer.items():
            c = 0
            cur = list(vec)
            while used + c * d <= degree:
                nxt[(tuple(cur), used + c * d)] += mult * comb(m + c - 1, c)
                cur[s] += 1
                cur[t] -= 1
                c += 1
        layer = nxt
    out = {}
    for (vec, used), mult in layer.items():
        if used == degree:
            out[EligibleWeight.make(n, None, [(pts[t], v) for t, v in enumerate(vec) if v])] = mult
    return out


def in_sym_support(nu: EligibleWeight) -> bool:
    """Whether nu is a sum of psi-negative roots (at any large enough rank).

    Positive entries of nu must be fed by negative entries in strictly
    smaller classes.  With P_c the positive mass and T_c the total of class
    c, that happens exactly when P_k <= -(T_0 + ... + T_{k-1}) for every k.
    """
    if any(nu.level):
        return False
    pos = [0] * (nu.n + 1)
    tot = [0] * (nu.n + 1)
    for p, b in nu.finite:
        c = class_of(p)
        tot[c] += b
        pos[c] += max(b, 0)
    if sum(tot):
        return False
    before = 0
    for c in range(nu.n + 1):
        if pos[c] > -before:
            return False
        before += tot[c]
    return True
