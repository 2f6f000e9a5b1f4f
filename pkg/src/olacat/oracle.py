"""Slow, independent recomputations used to certify the fast code paths.

Nothing here calls the algorithms of the other modules; only the value
types (partitions, weights, KL polynomials) are shared.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict

from .errors import ResourceLimitError
from .kl import KLPolynomial
from .partitions import Partition
from .weights import EligibleWeight

LR_CAP = 10
KL_CAP = 5
SYM_PSI_CAP = 3
SYM_RANK_CAP = 3
HEIGHT_CAP = 8


# ----------------------------------------------------------------------
# Littlewood-Richardson through Gelfand-Tsetlin patterns

def _gt_monomials(lam, nvars):
    """Exponent vectors of s_lam in nvars variables, one per Gelfand-Tsetlin pattern."""
    top = list(lam) + [0] * (nvars - len(lam))
    out = Counter()

    def rows_below(row):
        # all rows of length len(row) - 1 interlacing with row
        ranges = [range(row[j + 1], row[j] + 1) for j in range(len(row) - 1)]
        return itertools.product(*ranges)

    def rec(row, exps):
        if len(row) == 0:
            out[tuple(reversed(exps))] += 1
            return
        for below in rows_below(row):
            rec(list(below), exps + [sum(row) - sum(below)])

    rec(top, [])
    return out


def naive_lr(lam, mu, nu) -> int:
    """Coefficient of s_nu in s_lam * s_mu by expanding both in |nu| variables."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    N = sum(nu)
    if N > LR_CAP:
        raise ResourceLimitError("naive_lr size", N, LR_CAP)
    if sum(lam) + sum(mu) != N:
        return 0
    if N == 0:
        return 1
    if len(lam) > N or len(mu) > N:
        return 0
    f = _gt_monomials(lam, N)
    g = _gt_monomials(mu, N)
    # coefficient of x^(nu + delta) in a_delta * f * g, where a_delta is the
    # Vandermonde alternant sum over w of sign(w) x^(w delta)
    delta = list(range(N - 1, -1, -1))
    target = [a + d for a, d in zip(list(nu) + [0] * (N - len(nu)), delta)]
    total = 0
    for perm in itertools.permutations(range(N)):
        inv = sum(1 for i in range(N) for j in range(i + 1, N) if perm[i] > perm[j])
        e = tuple(target[t] - delta[perm[t]] for t in range(N))
        if min(e) < 0:
            continue
        coeff = 0
        for a, ca in f.items():
            b = tuple(x - y for x, y in zip(e, a))
            if min(b) >= 0:
                coeff += ca * g.get(b, 0)
        total += -coeff if inv % 2 else coeff
    return total


# ----------------------------------------------------------------------
# Kazhdan-Lusztig through R-polynomials

def _rank_matrix_leq(x, w):
    m = len(w)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if sum(1 for a in x[:i] if a >= j) > sum(1 for a in w[:i] if a >= j):
                return False
    return True


def _inv(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def _left(s, w):
    """s_s * w: exchange the values s and s + 1."""
    return tuple(s + 1 if a == s else s if a == s + 1 else a for a in w)


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _r_poly(x, w, memo):
    key = (x, w)
    if key in memo:
        return memo[key]
    if not _rank_matrix_leq(x, w):
        res = []
    elif x == w:
        res = [1]
    else:
        s = next(v for v in range(1, len(w)) if w.index(v + 1) < w.index(v))
        sw, sx = _left(s, w), _left(s, x)
        if _inv(sx) < _inv(x):
            res = _r_poly(sx, sw, memo)
        else:
            res = _padd(_pmul([-1, 1], _r_poly(x, sw, memo)), _pmul([0, 1], _r_poly(sx, sw, memo)))
    memo[key] = res
    return res


def naive_kl(x, w) -> KLPolynomial:
    """P_{x,w} from the inversion formula with R-polynomials."""
    x, w = tuple(x), tuple(w)
    if len(w) > KL_CAP:
        raise ResourceLimitError("naive_kl group size", len(w), KL_CAP)
    if not _rank_matrix_leq(x, w):
        return KLPolynomial(())
    rmemo = {}
    interval = [y for y in itertools.permutations(range(1, len(w) + 1))
                if _rank_matrix_leq(x, y) and _rank_matrix_leq(y, w)]
    interval.sort(key=_inv, reverse=True)
    P = {}
    lw = _inv(w)
    for y in interval:
        if y == w:
            P[y] = [1]
            continue
        d = lw - _inv(y)
        acc = []
        for z in interval:
            if z != y and _inv(z) > _inv(y) and _rank_matrix_leq(y, z):
                acc = _padd(acc, _pmul(_r_poly(y, z, rmemo), P[z]))
        low = [-c for c in acc[: (d + 1) // 2]]  # degrees below d/2
        P[y] = low
    res = P[x]
    while res and res[-1] == 0:
        res.pop()
    return KLPolynomial(tuple(res))


# ----------------------------------------------------------------------
# symmetric algebra of the weighted root space

def _psi2(i, k, n):
    """Twice the psi grading of a basis weight."""
    return n + 1 - 2 * k + (1 if i > 0 else -1)


def naive_colored_roots(n, r):
    """(p, q, color) for every psi-negative root eps_p - eps_q in the rank-r box."""
    pts = [(i, k) for k in range(1, n + 1) for i in list(range(1, r + 1)) + list(range(-r, 0))]
    out = []
    for p in pts:
        for q in pts:
            d = (_psi2(*p, n) - _psi2(*q, n)) // 2
            if p != q and d < 0:
                for color in range(2 ** (-d) - 1):
                    out.append((p, q, color, -d))
    return out


def _check_sym_caps(deg, r):
    if deg > SYM_PSI_CAP:
        raise ResourceLimitError("naive_sym psi degree", deg, SYM_PSI_CAP)
    if r > SYM_RANK_CAP:
        raise ResourceLimitError("naive_sym rank", r, SYM_RANK_CAP)


def naive_sym_table(n, r, max_degree):
    """Counter {frozenset of ((i,k), coeff)}: count, over all multisets of colored roots."""
    _check_sym_caps(max_degree, r)
    roots = naive_colored_roots(n, r)
    table = Counter()
    for size in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(len(roots)), size):
            if sum(roots[t][3] for t in combo) > max_degree:
                continue
            vec = defaultdict(int)
            for t in combo:
                p, q, _, _ = roots[t]
                vec[p] += 1
                vec[q] -= 1
            table[frozenset((p, c) for p, c in vec.items() if c)] += 1
    return table


def naive_sym_mult(nu: EligibleWeight, r: int) -> int:
    """Number of multisets of colored psi-negative roots summing to nu."""
    n = nu.n
    deg2 = -sum(b * _psi2(p.i, p.k, n) for p, b in nu.finite)
    if deg2 < 0 or deg2 % 2:
        return 0
    deg = deg2 // 2
    _check_sym_caps(deg, r)
    if any(abs(p.i) > r for p, _ in nu.finite) or any(nu.level):
        return 0
    key = frozenset((tuple(p), b) for p, b in nu.finite)
    roots = naive_colored_roots(n, r)
    count = 0
    for size in range(deg + 1):
        for combo in itertools.combinations_with_replacement(range(len(roots)), size):
            if sum(roots[t][3] for t in combo) != deg:
                continue
            vec = defaultdict(int)
            for t in combo:
                p, q, _, _ = roots[t]
                vec[p] += 1
                vec[q] -= 1
            if frozenset((p, c) for p, c in vec.items() if c) == key:
                count += 1
    return count


# ----------------------------------------------------------------------
# dominance by explicit decomposition

def _order_key(p):
    i, k = p
    return (k, 1 if i < 0 else 0, i)


def naive_dominance(lam: EligibleWeight, mu: EligibleWeight) -> bool:
    """Search for a decomposition of lam - mu into roots eps_p - eps_q with p before q."""
    if lam.level != mu.level:
        return False
    diff = defaultdict(int)
    for p, b in lam.finite:
        diff[tuple(p)] += b
    for p, b in mu.finite:
        diff[tuple(p)] -= b
    diff = {p: b for p, b in diff.items() if b}
    height = sum(b for b in diff.values() if b > 0)
    if height > HEIGHT_CAP:
        raise ResourceLimitError("naive_dominance height", height, HEIGHT_CAP)
    pts = sorted(diff, key=_order_key)

    def search(d):
        live = [p for p in pts if d[p]]
        if not live:
            return True
        p = live[0]
        if d[p] < 0:
            return False
        for q in pts:
            if _order_key(q) > _order_key(p):
                d[p] -= 1
                d[q] += 1
                ok = search(d)
                d[p] += 1
                d[q] -= 1
                if ok:
                    return True
        return False

    return search(dict(diff))
