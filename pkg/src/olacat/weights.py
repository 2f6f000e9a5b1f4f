"""Eligible weights, roots, gradings and the weight text grammar.

Indices are pairs ``(i, k)`` with ``i`` a nonzero integer and ``k`` a block
number in ``1..n``.  Inside a block the positive indices come first in
increasing order, followed by the negative ones, also increasing, so the
order reads ``1, 2, 3, ..., -3, -2, -1``.  Blocks are ordered by ``k``.

Positions are grouped into *classes*, numbered ``0..n``: the positive
indices of block ``k`` form class ``k - 1``, the negative indices of block
``k`` form class ``k``.  Two positions share a class exactly when their psi
gradings agree, and each class is a single factor of the finite reductive
part of the Lie algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import DomainError, WeightIndexError, WeightParseError


class WeightIndex(NamedTuple):
    i: int
    k: int


def index_key(p):
    """Sort key realising the total order on indices."""
    i, k = p
    return (k, i < 0, i)


def check_index(p, n):
    i, k = p
    if i == 0:
        raise WeightIndexError("index i must be nonzero")
    if not 1 <= k <= n:
        raise WeightIndexError(f"block k={k} outside 1..{n}")


def class_of(p) -> int:
    """Class number of a position, 0..n."""
    i, k = p
    return k - 1 if i > 0 else k


def index_psi(p, n) -> Fraction:
    """psi of the basis weight at position p."""
    return Fraction(n, 2) - class_of(p)


def class_boxes(n: int, r: int) -> list[list[WeightIndex]]:
    """Positions with |i| <= r, grouped by class, each class in index order."""
    boxes = []
    for c in range(n + 1):
        box = []
        if c >= 1:
            box += [WeightIndex(-j, c) for j in range(r, 0, -1)]
        if c < n:
            box += [WeightIndex(j, c + 1) for j in range(1, r + 1)]
        boxes.append(box)
    return boxes


def box_positions(n: int, r: int) -> list[WeightIndex]:
    """All positions with |i| <= r, in index order."""
    return sorted((p for box in class_boxes(n, r) for p in box), key=index_key)


@dataclass(frozen=True)
class EligibleWeight:
    """An integral eligible weight.

    ``level[k-1]`` is the coefficient of the level weight of block ``k``;
    ``finite`` lists the nonzero corrections ``((i, k), b)`` in index order.
    Build instances with :meth:`make`.
    """

    n: int
    level: tuple
    finite: tuple

    @classmethod
    def make(cls, n: int, level: Iterable[int] | None = None,
             finite: Mapping | Iterable | None = None) -> "EligibleWeight":
        if n < 1:
            raise DomainError("block count n must be positive")
        level = tuple(int(a) for a in level) if level is not None else (0,) * n
        if len(level) != n:
            raise DomainError(f"level vector must have length {n}")
        items = finite.items() if isinstance(finite, Mapping) else (finite or ())
        acc = {}
        for p, b in items:
            p = WeightIndex(*p)
            check_index(p, n)
            acc[p] = acc.get(p, 0) + int(b)
        fin = tuple(sorted(((p, b) for p, b in acc.items() if b), key=lambda t: index_key(t[0])))
        return cls(n, level, fin)

    @property
    def finite_map(self) -> dict:
        return dict(self.finite)

    def coeff(self, p) -> int:
        """Finite coefficient at p."""
        for q, b in self.finite:
            if q == p:
                return b
        return 0

    def full(self, p) -> int:
        """Full coefficient at p, that is the pairing with the basis weight."""
        return self.level[p[1] - 1] + self.coeff(p)

    @property
    def eligibility_rank(self) -> int:
        """Least r such that the weight is r-eligible."""
        return max((abs(p.i) for p, _ in self.finite), default=0)

    def is_eligible(self, r: int) -> bool:
        return self.eligibility_rank <= r

    def _combine(self, other, sign):
        if not isinstance(other, EligibleWeight):
            return NotImplemented
        if other.n != self.n:
            raise DomainError("weights with different block counts")
        level = [a + sign * b for a, b in zip(self.level, other.level)]
        fin = list(self.finite) + [(p, sign * b) for p, b in other.finite]
        return EligibleWeight.make(self.n, level, fin)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return EligibleWeight.make(self.n, [-a for a in self.level], [(p, -b) for p, b in self.finite])

    def scaled(self, c: int) -> "EligibleWeight":
        return EligibleWeight.make(self.n, [c * a for a in self.level], [(p, c * b) for p, b in self.finite])

    @property
    def is_zero(self) -> bool:
        return not self.finite and not any(self.level)

    def __str__(self):
        return render_weight(self)


def zero(n: int) -> EligibleWeight:
    return EligibleWeight.make(n)


def eps(i: int, k: int, n: int) -> EligibleWeight:
    return EligibleWeight.make(n, finite={(i, k): 1})


def omega(k: int, n: int) -> EligibleWeight:
    level = [0] * n
    level[k - 1] = 1
    return EligibleWeight.make(n, level)


@dataclass(frozen=True)
class Root:
    """The root eps_p - eps_q."""

    p: WeightIndex
    q: WeightIndex

    def __post_init__(self):
        object.__setattr__(self, "p", WeightIndex(*self.p))
        object.__setattr__(self, "q", WeightIndex(*self.q))
        if self.p == self.q:
            raise DomainError("a root needs two distinct indices")

    @property
    def is_positive(self) -> bool:
        return index_key(self.p) < index_key(self.q)

    def __neg__(self):
        return Root(self.q, self.p)

    def weight(self, n: int) -> EligibleWeight:
        return EligibleWeight.make(n, finite=[(self.p, 1), (self.q, -1)])

    def psi(self) -> int:
        # Integral by construction: a difference of two class numbers.
        return class_of(self.q) - class_of(self.p)

    @property
    def is_finite(self) -> bool:
        return self.psi() == 0

    def __str__(self):
        return f"e[{self.p.i},{self.p.k}]-e[{self.q.i},{self.q.k}]"


# ----------------------------------------------------------------------
# gradings and pairings

def pairing(lam: EligibleWeight, p) -> int:
    check_index(p, lam.n)
    return lam.full(WeightIndex(*p))


def psi(xi) -> Fraction:
    """psi grading, exact; level weights are sent to zero."""
    if isinstance(xi, Root):
        return Fraction(xi.psi())
    return sum((b * index_psi(p, xi.n) for p, b in xi.finite), Fraction(0))


def phi(xi) -> tuple[int, ...]:
    """Block grading: component k is level[k] plus the finite coefficients of block k."""
    if isinstance(xi, Root):
        out = [0] * max(xi.p.k, xi.q.k)
        out[xi.p.k - 1] += 1
        out[xi.q.k - 1] -= 1
        return tuple(out)
    out = list(xi.level)
    for p, b in xi.finite:
        out[p.k - 1] += b
    return tuple(out)


def rho_box_coefficient(p, n: int, r: int) -> int:
    """Coefficient at p of the half-sum-free rho of the rank-r finite factor.

    This is the sum of positive roots of the factor: inside a class box of
    size m the t-th position (0-based) carries m - 1 - 2t; zero outside.
    """
    i, k = p
    if abs(i) > r:
        return 0
    c = class_of(p)
    m = r if c in (0, n) else 2 * r
    if i > 0:
        t = i - 1 + (r if c > 0 else 0)
    else:
        t = r + i
    return m - 1 - 2 * t


def theta(xi, r: int, n: int | None = None) -> int:
    """theta grading at rank r: pairing with the finite-factor rho plus the gl(n) part."""
    if isinstance(xi, Root):
        n = n if n is not None else max(xi.p.k, xi.q.k)
        xi = xi.weight(n)
    n = xi.n
    total = sum(b * rho_box_coefficient(p, n, r) for p, b in xi.finite)
    f = phi(xi)
    total += sum(f[k - 1] * (n + 1 - 2 * k) for k in range(1, n + 1))
    return total


class RhoShifted:
    """The function p -> pairing(lam, p) - i, stored as level background plus corrections."""

    def __init__(self, lam: EligibleWeight):
        self.n = lam.n
        self.level = lam.level
        self.corrections = lam.finite_map

    def __call__(self, p) -> int:
        i, k = p
        return self.level[k - 1] + self.corrections.get((i, k), 0) - i

    def values(self, positions):
        return [self(p) for p in positions]


def rho_shift(lam: EligibleWeight) -> RhoShifted:
    return RhoShifted(lam)


def from_shifted(n: int, level, values: Mapping) -> EligibleWeight:
    """Inverse of rho_shift on the given positions (others take the background)."""
    fin = [(p, x + p[0] - level[p[1] - 1]) for p, x in values.items()]
    return EligibleWeight.make(n, level, fin)


def dominance_geq(lam: EligibleWeight, mu: EligibleWeight) -> bool:
    """True when lam - mu is a sum of positive roots."""
    if lam.n != mu.n or lam.level != mu.level:
        return False
    diff = (lam - mu).finite
    if sum(b for _, b in diff) != 0:
        return False
    running = 0
    for _, b in diff:  # already in index order
        running += b
        if running < 0:
            return False
    return True


def block_class(lam: EligibleWeight) -> tuple:
    """Block tag: the level vector and the total finite coefficient."""
    return (lam.level, sum(b for _, b in lam.finite))


# ----------------------------------------------------------------------
# text grammar

class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise WeightParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self, signed=True):
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
            self.skip()
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            raise WeightParseError("expected an integer", start)
        return int("".join(self.text[start:self.pos].split()))


def parse_weight(text: str, n: int) -> EligibleWeight:
    """Parse the weight grammar, e.g. ``"w[1] - 2*e[-1,1] + e[3,2]"``.

    A leading sign on the first term is accepted as well.
    """
    if n < 1:
        raise DomainError("block count n must be positive")
    sc = _Scanner(text)
    if text.strip() == "0":
        return zero(n)
    level = [0] * n
    fin = []
    first = True
    while True:
        ch = sc.peek()
        sign = 1
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            sc.pos += 1
        elif not first:
            raise WeightParseError(f"expected '+' or '-', found {ch!r}", sc.pos)
        elif ch == "":
            raise WeightParseError("empty weight", sc.pos)
        coeff = 1
        if sc.peek().isdigit():
            coeff = sc.integer(signed=False)
            if sc.peek() == "*":
                sc.pos += 1
        atom_pos = sc.pos
        atom = sc.peek()
        if atom == "w":
            sc.pos += 1
            sc.expect("[")
            k = sc.integer()
            sc.expect("]")
            if not 1 <= k <= n:
                raise WeightIndexError(f"block k={k} outside 1..{n} (at position {atom_pos})")
            level[k - 1] += sign * coeff
        elif atom == "e":
            sc.pos += 1
            sc.expect("[")
            i = sc.integer()
            sc.expect(",")
            k = sc.integer()
            sc.expect("]")
            try:
                check_index((i, k), n)
            except WeightIndexError as exc:
                raise WeightIndexError(f"{exc} (at position {atom_pos})") from None
            fin.append(((i, k), sign * coeff))
        else:
            raise WeightParseError(f"expected 'w[' or 'e[', found {atom or 'end of input'!r}", sc.pos)
        first = False
        if sc.peek() == "":
            break
    return EligibleWeight.make(n, level, fin)


def render_weight(lam: EligibleWeight) -> str:
    terms = [(a, f"w[{k}]") for k, a in enumerate(lam.level, start=1) if a]
    terms += [(b, f"e[{p.i},{p.k}]") for p, b in lam.finite]
    if not terms:
        return "0"
    out = []
    for idx, (c, atom) in enumerate(terms):
        mag = abs(c)
        body = atom if mag == 1 else f"{mag}*{atom}"
        if c < 0:
            out.append("-" + body)
        else:
            out.append(("+" if idx else "") + body)
    return "".join(out)
