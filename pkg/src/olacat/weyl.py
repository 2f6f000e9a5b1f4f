"""Finitary permutations of the index set, acting on eligible weights."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import DomainError
from .weights import (EligibleWeight, Root, WeightIndex, check_index, class_boxes,
                      class_of, dominance_geq, index_key, rho_shift)


@dataclass(frozen=True)
class WeylElement:
    """A permutation of the index set moving finitely many points.

    ``moved`` holds the pairs ``(p, sigma(p))`` with ``sigma(p) != p``.
    """

    moved: tuple = ()

    @classmethod
    def from_mapping(cls, mapping) -> "WeylElement":
        pairs = {WeightIndex(*p): WeightIndex(*q) for p, q in dict(mapping).items() if tuple(p) != tuple(q)}
        if set(pairs) != set(pairs.values()):
            raise DomainError("mapping is not a permutation of its support")
        return cls(tuple(sorted(pairs.items(), key=lambda t: index_key(t[0]))))

    @classmethod
    def identity(cls) -> "WeylElement":
        return cls()

    def __call__(self, p):
        p = WeightIndex(*p)
        return dict(self.moved).get(p, p)

    @property
    def support(self) -> frozenset:
        return frozenset(p for p, _ in self.moved)

    def inverse(self) -> "WeylElement":
        return WeylElement.from_mapping({q: p for p, q in self.moved})

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition: ``(s * t)(p) == s(t(p))``."""
        pts = self.support | other.support
        return WeylElement.from_mapping({p: self(other(p)) for p in pts})

    def is_identity(self) -> bool:
        return not self.moved


def reflection(alpha: Root) -> WeylElement:
    return WeylElement.from_mapping({alpha.p: alpha.q, alpha.q: alpha.p})


def _check(sigma, lam):
    for p in sigma.support:
        check_index(p, lam.n)


def act(sigma: WeylElement, lam: EligibleWeight) -> EligibleWeight:
    """Permute full coefficients: the result at p is lam's coefficient at sigma^-1(p)."""
    _check(sigma, lam)
    inv = sigma.inverse()
    pts = sigma.support | {p for p, _ in lam.finite}
    fin = [(p, lam.full(inv(p)) - lam.level[p.k - 1]) for p in pts]
    return EligibleWeight.make(lam.n, lam.level, fin)


def dot(sigma: WeylElement, lam: EligibleWeight) -> EligibleWeight:
    """sigma(lam + rho) - rho, computed on rho-shifted coordinates."""
    _check(sigma, lam)
    inv = sigma.inverse()
    x = rho_shift(lam)
    pts = sigma.support | {p for p, _ in lam.finite}
    fin = [(p, x(inv(p)) + p.i - lam.level[p.k - 1]) for p in pts]
    return EligibleWeight.make(lam.n, lam.level, fin)


def linked(lam: EligibleWeight, mu: EligibleWeight) -> WeylElement | None:
    """A permutation sigma with dot(sigma, lam) == mu, or None.

    Equal values are matched inside each class first, so a witness in the
    finite Weyl group is returned whenever one exists.
    """
    if lam.n != mu.n:
        raise DomainError("weights with different block counts")
    if lam.level != mu.level:
        return None
    r = max(lam.eligibility_rank, mu.eligibility_rank)
    xl, xm = rho_shift(lam), rho_shift(mu)
    spare_src = defaultdict(list)
    spare_tgt = defaultdict(list)
    mapping = {}
    for box in class_boxes(lam.n, r):
        src, tgt = defaultdict(list), defaultdict(list)
        for p in box:
            src[xl(p)].append(p)
            tgt[xm(p)].append(p)
        for v in set(src) | set(tgt):
            a, b = src[v], tgt[v]
            m = min(len(a), len(b))
            mapping.update(zip(a[:m], b[:m]))
            spare_src[v] += a[m:]
            spare_tgt[v] += b[m:]
    for v in set(spare_src) | set(spare_tgt):
        a = sorted(spare_src[v], key=index_key)
        b = sorted(spare_tgt[v], key=index_key)
        if len(a) != len(b):
            return None
        mapping.update(zip(a, b))
    return WeylElement.from_mapping(mapping)


def in_finite_weyl(sigma: WeylElement) -> bool:
    """Whether sigma only permutes positions inside their classes."""
    return all(class_of(p) == class_of(q) for p, q in sigma.moved)


def leq_fin(mu: EligibleWeight, lam: EligibleWeight) -> bool:
    """mu is obtained from lam by the finite Weyl group and lies below it."""
    sigma = linked(lam, mu)
    return sigma is not None and in_finite_weyl(sigma) and dominance_geq(lam, mu)
