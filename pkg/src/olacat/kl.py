"""Kazhdan-Lusztig polynomials of symmetric groups and Verma multiplicities.

Permutations are tuples in one-line notation on ``1..m``.  Polynomials in q
are coefficient tuples in ascending degree with no trailing zeros.

Multiplicities use the dominant base point.  Inside one class of positions
the rho-shifted coordinates of a weight are turned into a permutation that
sends each position to the rank of its value, largest value first, so the
dominant arrangement is the identity.  Equal values are ranked so that the
later position wins, which picks the longest representative of the coset
of the stabiliser.  Then ``m(lam, mu)`` is the product over classes of
``P_{a, b}(1)`` where ``a`` and ``b`` are the permutations of ``lam`` and
``mu``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, ResourceLimitError
from .weights import EligibleWeight, class_boxes, rho_shift
from .weyl import dominance_geq

DEFAULT_KL_BOUND = 8


@dataclass(frozen=True)
class KLPolynomial:
    coeffs: tuple = ()

    def __call__(self, q=1):
        return sum(c * q ** d for d, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


def check_perm(w) -> tuple:
    w = tuple(int(a) for a in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def length(w) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _add(a, b, shift=0, scale=1):
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for d, c in enumerate(b):
        out[d + shift] += scale * c
    return _trim(out)


# Memo: w -> {x: coefficient tuple of P_{x,w}} over the lower Bruhat interval.
_columns: dict = {}
_lock = threading.RLock()


def _swap(w, i):
    w = list(w)
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def _column(w):
    col = _columns.get(w)
    if col is not None:
        return col
    with _lock:
        col = _columns.get(w)
        if col is None:
            col = _build_column(w)
            _columns[w] = col
    return col


def _build_column(w):
    descents = [i for i in range(len(w) - 1) if w[i] > w[i + 1]]
    if not descents:
        return {w: (1,)}
    s = descents[0]
    v = _swap(w, s)
    col_v = _column(v)
    lw = length(w)
    lv = lw - 1
    # z < v with z s < z and nonzero top coefficient mu(z, v)
    corrections = []
    for z, pz in col_v.items():
        if z == v or z[s] < z[s + 1]:
            continue
        gap = lv - length(z)
        if gap % 2 == 1:
            top = (gap - 1) // 2
            mu = pz[top] if top < len(pz) else 0
            if mu:
                corrections.append((mu, (lw - length(z)) // 2, _column(z)))
    lower = set(col_v) | {_swap(x, s) for x in col_v}
    col = {}
    for x in lower:
        xs = _swap(x, s)
        c = 1 if x[s] > x[s + 1] else 0
        p = _add(_add((), col_v.get(xs, ()), shift=1 - c), col_v.get(x, ()), shift=c)
        for mu, sh, col_z in corrections:
            pxz = col_z.get(x)
            if pxz:
                p = _add(p, pxz, shift=sh, scale=-mu)
        if p:
            col[x] = p
    return col


def _check_bound(m, bound):
    if m > bound:
        raise ResourceLimitError("kl group size", m, bound)


def kl_polynomial(x, w, bound: int = DEFAULT_KL_BOUND) -> KLPolynomial:
    """P_{x,w} in S_m; the zero polynomial unless x <= w in Bruhat order."""
    x, w = check_perm(x), check_perm(w)
    if len(x) != len(w):
        raise DomainError("permutations from different symmetric groups")
    _check_bound(len(w), bound)
    return KLPolynomial(_column(w).get(x, ()))


@lru_cache(maxsize=None)
def bruhat_lower_interval(w) -> frozenset:
    """All x <= w, reached by length-decreasing transpositions."""
    w = tuple(w)
    seen = {w}
    stack = [w]
    while stack:
        y = stack.pop()
        for i in range(len(y)):
            for j in range(i + 1, len(y)):
                if y[i] > y[j]:
                    z = list(y)
                    z[i], z[j] = z[j], z[i]
                    z = tuple(z)
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
    return frozenset(seen)


def bruhat_leq(x, w) -> bool:
    """Tableau criterion for x <= w."""
    x, w = tuple(x), tuple(w)
    for k in range(1, len(w)):
        if sorted(x[:k], reverse=True) > sorted(w[:k], reverse=True):
            return False
        if any(a > b for a, b in zip(sorted(x[:k]), sorted(w[:k]))):
            return False
    return True


# ----------------------------------------------------------------------
# Verma multiplicities

def rank_perm(values) -> tuple:
    """Position -> rank of its value (largest first, ties favour the later position)."""
    order = sorted(range(len(values)), key=lambda t: (-values[t], -t))
    perm = [0] * len(values)
    for rank, t in enumerate(order, start=1):
        perm[t] = rank
    return tuple(perm)


def class_values(lam: EligibleWeight, r: int) -> list[list[int]]:
    """Rho-shifted values of lam on each class box of rank r."""
    x = rho_shift(lam)
    return [x.values(box) for box in class_boxes(lam.n, r)]


def stable_rank(*weights: EligibleWeight) -> int:
    """Least rank beyond which enlarging the finite factor changes no multiplicity.

    It is at least one more than the eligibility ranks, and large enough that
    in every class the next positions outside the box carry values strictly
    beyond all values inside the box: smaller on the positive side, larger on
    the negative side.  Past this rank each enlargement adds fixed points at
    the ends of every class permutation.
    """
    n = weights[0].n
    r = max(w.eligibility_rank for w in weights) + 1
    while True:
        ok = True
        for lam in weights:
            for c, vals in enumerate(class_values(lam, r)):
                if not vals:
                    continue
                if c < n and lam.level[c] - (r + 1) >= min(vals):
                    ok = False
                if c > 0 and lam.level[c - 1] + r + 1 <= max(vals):
                    ok = False
        if ok:
            return r
        r += 1


def segments(w) -> list[tuple[int, int]]:
    """Maximal consecutive blocks [lo, hi) that w maps onto themselves."""
    out = []
    lo = 0
    high = 0
    for t, a in enumerate(w):
        high = max(high, a)
        if high == t + 1:
            out.append((lo, t + 1))
            lo = t + 1
    return out


def class_multiplicity(a, b, bound: int = DEFAULT_KL_BOUND) -> int:
    """P_{a,b}(1), factored over the parabolic blocks of b."""
    if a == b:
        return 1
    total = 1
    for lo, hi in segments(b):
        sa = a[lo:hi]
        if sorted(sa) != list(range(lo + 1, hi + 1)):
            return 0
        if hi - lo == 1:
            continue
        sa = tuple(v - lo for v in sa)
        sb = tuple(v - lo for v in b[lo:hi])
        if sa == sb:
            continue
        _check_bound(hi - lo, bound)
        total *= kl_polynomial(sa, sb, bound)(1)
        if not total:
            return 0
    return total


def verma_multiplicity(lam: EligibleWeight, mu: EligibleWeight, rank: int | None = None,
                       bound: int = DEFAULT_KL_BOUND) -> int:
    """m(lam, mu): multiplicity of the simple of highest weight mu in the Verma of lam.

    Computed in the finite factor of the given rank, or of the stable rank
    when ``rank`` is None.
    """
    if lam.n != mu.n:
        raise DomainError("weights with different block counts")
    if lam.level != mu.level or not dominance_geq(lam, mu):
        return 0
    if rank is None:
        rank = stable_rank(lam, mu)
    elif rank < max(lam.eligibility_rank, mu.eligibility_rank):
        raise DomainError(f"rank {rank} does not contain the supports of both weights")
    total = 1
    for vl, vm in zip(class_values(lam, rank), class_values(mu, rank)):
        if sorted(vl) != sorted(vm):
            return 0
        total *= class_multiplicity(rank_perm(vl), rank_perm(vm), bound)
        if not total:
            return 0
    return total
