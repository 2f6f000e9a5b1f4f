"""Partitions, Littlewood-Richardson coefficients and Schur polynomials.

Polynomials are plain dictionaries mapping exponent tuples to integer
coefficients; zero coefficients are never stored.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator

from .errors import DomainError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers (trailing zeros are stripped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise DomainError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero beyond the length."""
        return self[i] if i < len(self) else 0

    def contains(self, other: "Partition") -> bool:
        """Diagram containment ``other ⊆ self``."""
        return len(other) <= len(self) and all(a <= self[i] for i, a in enumerate(other))

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for p in self if p > j) for j in range(self.part(0)))

    def __repr__(self):
        return "Partition(" + str(self) + ")"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read the bracket form ``[3,1,1]``; ``[]`` is the empty partition."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise DomainError(f"partition must be written as [a,b,...]: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return cls()
        try:
            return cls(int(p) for p in body.split(","))
        except ValueError as exc:
            raise DomainError(f"bad partition {text!r}: {exc}") from None


EMPTY = Partition()


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def subpartitions(outer: Partition, size: int) -> Iterator[Partition]:
    """Partitions of ``size`` whose diagram fits inside ``outer``."""

    def rec(i, left, cap):
        if left == 0:
            yield ()
            return
        if i >= len(outer):
            return
        for a in range(min(cap, outer[i], left), 0, -1):
            for rest in rec(i + 1, left - a, a):
                yield (a,) + rest

    for parts in rec(0, size, size):
        yield Partition(parts)


def _count_lr_tableaux(outer: Partition, inner: Partition, content: Partition) -> int:
    # Cells of outer/inner in reverse reading order: rows top to bottom,
    # each row right to left.  The reading word must be a lattice word.
    cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, inner.part(r) - 1, -1)]
    filling = {}
    counts = [0] * (len(content) + 1)

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(content)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, min(hi, r + 1) + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_coefficient(lam, mu, nu) -> int:
    """The Littlewood-Richardson coefficient c^nu_{lam,mu}."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    if not mu:
        return 1
    return _count_lr_tableaux(nu, lam, mu)


def lr_product(lam, mu) -> dict[Partition, int]:
    """Expand s_lam * s_mu in the Schur basis."""
    lam, mu = Partition(lam), Partition(mu)
    out = {}
    for nu in partitions_of(lam.size + mu.size):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def multi_lr(gamma, alphas) -> int:
    """Coefficient of s_gamma in the product of s_alpha over ``alphas``."""
    gamma = Partition(gamma)
    alphas = [Partition(a) for a in alphas]
    if sum(a.size for a in alphas) != gamma.size:
        return 0
    current = {EMPTY: 1}
    for alpha in alphas:
        nxt = defaultdict(int)
        for beta, mult in current.items():
            for nu in subpartitions(gamma, beta.size + alpha.size):
                c = lr_coefficient(beta, alpha, nu)
                if c:
                    nxt[nu] += mult * c
        current = nxt
    return current.get(gamma, 0)


def semistandard_tableaux(lam, k: int) -> Iterator[dict]:
    """Semistandard fillings of lam with entries 1..k, as ``{(row, col): entry}``."""
    lam = Partition(lam)
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    filling = {}

    def rec(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        lo = max(filling.get((r, c - 1), 1), filling.get((r - 1, c), 0) + 1)
        for v in range(lo, k + 1):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    return rec(0)


def schur_poly(lam, k: int) -> dict[tuple[int, ...], int]:
    """s_lam(x_1, ..., x_k) as ``{exponent tuple: coefficient}``."""
    lam = Partition(lam)
    if k < 1:
        raise DomainError("number of variables must be positive")
    poly = defaultdict(int)
    if len(lam) > k:
        return {}
    for tab in semistandard_tableaux(lam, k):
        exps = [0] * k
        for v in tab.values():
            exps[v - 1] += 1
        poly[tuple(exps)] += 1
    return dict(poly)
