"""Multiplicity formulas for standard, parabolic Verma, injective and tensor modules."""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .kl import (DEFAULT_KL_BOUND, bruhat_lower_interval, class_values, rank_perm,
                 stable_rank, verma_multiplicity)
from .partitions import Partition, lr_coefficient, partitions_of, subpartitions
from .symalg import sym_table, sym_weight_mult
from .weights import (EligibleWeight, block_class, class_boxes, dominance_geq,
                      from_shifted, psi, render_weight)


class PartitionTuple(tuple):
    """A fixed-length sequence of partitions, one per block."""

    def __new__(cls, parts):
        return super().__new__(cls, (Partition(p) for p in parts))

    @property
    def size(self):
        return sum(p.size for p in self)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self) + "]"


@dataclass(frozen=True)
class FlagLayer:
    weight: EligibleWeight
    multiplicity: int
    psi_degree: Fraction


@dataclass
class MultiplicityTable:
    base: EligibleWeight
    entries: dict = field(default_factory=dict)
    rank_used: int = 0
    stabilized: bool = True

    def __getitem__(self, mu):
        return self.entries.get(mu, 0)

    def __len__(self):
        return len(self.entries)


def _check_pair(lam, mu):
    if lam.n != mu.n:
        raise DomainError("weights with different block counts")


def auto_rank(*weights, rank=None) -> int:
    """Default truncation: one more than the largest eligibility rank."""
    need = max(w.eligibility_rank for w in weights)
    if rank is None:
        return need + 1
    if rank < need:
        raise DomainError(f"rank {rank} is below the eligibility rank {need}")
    return rank


def arrangements_above(lam: EligibleWeight, r: int):
    """Weights obtained by rearranging lam's rho-shifted values inside each class box
    of rank r along the lower Bruhat interval of lam's class permutations.

    These are exactly the rearrangements kappa with kappa >= lam in Bruhat
    order, so the ones that can satisfy m(kappa, lam) != 0.
    """
    per_class = []
    for vals in class_values(lam, r):
        desc = sorted(vals, reverse=True)
        options = {tuple(desc[a - 1] for a in perm) for perm in bruhat_lower_interval(rank_perm(vals))}
        per_class.append(sorted(options, reverse=True))
    boxes = class_boxes(lam.n, r)
    for choice in itertools.product(*per_class):
        values = {}
        for box, vals in zip(boxes, choice):
            values.update(zip(box, vals))
        yield from_shifted(lam.n, lam.level, values)


def standard_simple_multiplicity(lam: EligibleWeight, mu: EligibleWeight, rank: int | None = None,
                                 bound: int = DEFAULT_KL_BOUND) -> int:
    """[A(lam) : L(mu)] as the sum over nu of m(lam + nu, mu) * dim S(R)_nu."""
    _check_pair(lam, mu)
    if block_class(lam) != block_class(mu) or not dominance_geq(lam, mu):
        return 0
    deg = psi(lam) - psi(mu)
    if deg < 0 or deg.denominator != 1:
        return 0
    r = auto_rank(lam, mu, rank=rank)
    total = 0
    for kappa in arrangements_above(mu, r):
        if not dominance_geq(lam, kappa) or psi(kappa) != psi(mu):
            continue
        nu = kappa - lam
        if psi(nu) != -deg:
            continue
        s = sym_weight_mult(nu, r)
        if s:
            total += s * verma_multiplicity(kappa, mu, bound=bound)
    return total


def standard_psi_layer(lam: EligibleWeight, p, r: int) -> list[FlagLayer]:
    """Weights lam + nu of psi-degree p with their symmetric algebra multiplicities."""
    if not lam.is_eligible(r):
        raise DomainError(f"weight {lam} is not {r}-eligible")
    p = Fraction(p)
    deg = psi(lam) - p
    if deg < 0 or deg.denominator != 1:
        return []
    table = sym_table(lam.n, r, int(deg))
    layers = [FlagLayer(lam + nu, mult, p) for nu, mult in table.items()]
    layers.sort(key=lambda layer: render_weight(layer.weight))
    return layers


def psi_layer_multiplicity(lam: EligibleWeight, mu: EligibleWeight, r: int,
                           bound: int = DEFAULT_KL_BOUND) -> int:
    """Same number as standard_simple_multiplicity, read off the psi layer of mu's degree."""
    _check_pair(lam, mu)
    return sum(layer.multiplicity * verma_multiplicity(layer.weight, mu, bound=bound)
               for layer in standard_psi_layer(lam, psi(mu), r))


def _in_parabolic_orbit(lam, mu, r):
    if lam.level != mu.level or not mu.is_eligible(r + 1):
        return False
    return all(sorted(a) == sorted(b) for a, b in zip(class_values(lam, r + 1), class_values(mu, r + 1)))


def parabolic_verma_multiplicity(lam: EligibleWeight, mu: EligibleWeight, r: int,
                                 bound: int = DEFAULT_KL_BOUND) -> int | None:
    """[M_r(lam) : L(mu)].

    Returns None when mu is in the orbit of lam but not r-eligible: no closed
    formula is available there.
    """
    _check_pair(lam, mu)
    if not lam.is_eligible(r):
        raise DomainError(f"weight {lam} is not {r}-eligible")
    if not _in_parabolic_orbit(lam, mu, r):
        return 0
    if not mu.is_eligible(r):
        return None
    return verma_multiplicity(lam, mu, bound=bound)


def injective_standard_flag(lam: EligibleWeight, bound: int = DEFAULT_KL_BOUND) -> MultiplicityTable:
    """Standard filtration multiplicities of the injective hull of L(lam).

    By reciprocity the multiplicity of A(mu) is m(mu, lam).  The candidates
    mu are the rearrangements above lam at the stable rank, where nothing
    changes any more.
    """
    R = stable_rank(lam)
    table = MultiplicityTable(base=lam, rank_used=R, stabilized=True)
    for mu in arrangements_above(lam, R):
        m = verma_multiplicity(mu, lam, rank=R, bound=bound)
        if m:
            table.entries[mu] = m
    return table


# ----------------------------------------------------------------------
# tensor injectives

def _component_layers(lam: Partition, mu: Partition):
    layers = defaultdict(lambda: defaultdict(int))
    for j in range(min(lam.size, mu.size) + 1):
        for gamma in partitions_of(j):
            if not (lam.contains(gamma) and mu.contains(gamma)):
                continue
            for a in subpartitions(lam, lam.size - j):
                ca = lr_coefficient(a, gamma, lam)
                if not ca:
                    continue
                for b in subpartitions(mu, mu.size - j):
                    cb = lr_coefficient(b, gamma, mu)
                    if cb:
                        layers[j][(a, b)] += ca * cb
    return layers


def socle_layers_tensor_injective(lam, mu) -> list[tuple[int, dict]]:
    """Socle layers of I(lam, mu), numbered from 1.

    Each layer maps pairs of partition tuples to multiplicities.
    """
    lam, mu = PartitionTuple(lam), PartitionTuple(mu)
    if len(lam) != len(mu):
        raise DomainError("partition tuples of different lengths")
    acc = {0: {(PartitionTuple(()), PartitionTuple(())): 1}}
    for a, b in zip(lam, mu):
        comp = _component_layers(a, b)
        nxt = defaultdict(lambda: defaultdict(int))
        for j1, t1 in acc.items():
            for j2, t2 in comp.items():
                for (x1, y1), c1 in t1.items():
                    for (x2, y2), c2 in t2.items():
                        key = (PartitionTuple(x1 + (x2,)), PartitionTuple(y1 + (y2,)))
                        nxt[j1 + j2][key] += c1 * c2
        acc = nxt
    top = max((j for j, t in acc.items() if t), default=0)
    return [(j + 1, dict(acc.get(j, {}))) for j in range(top + 1)]


def la_dual_decomposition(lam, mu) -> dict:
    """Multiplicities of the injectives I(alpha, beta) in the large-annihilator dual."""
    out = defaultdict(int)
    for _, layer in socle_layers_tensor_injective(lam, mu):
        for key, c in layer.items():
            out[key] += c
    return dict(out)
