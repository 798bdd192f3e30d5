"""Dimension and degree-bound formulas for H^i(G, H^0(lam) (x) H^0(lam*)^(1)).

Everything here assumes p > h. A dominant weight with nonzero cohomology in
positive degree has the shape ``lam = p*mu + w.0`` with ``mu`` dominant; the
dimension in degree ``i`` is then the alternating sum over ``u`` in ``W`` of
``P_{(i - l(w))/2}(u.lam - mu)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import AmbiguousDecomposition, InvalidPrime, NegativeDimension, ShortRootInG2
from .kostant import PartitionTable, _integral_root_coords
from .rootsys import RootSystem, Weight
from .weyl import WeylElement, WeylGroup


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(rs: RootSystem, p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidPrime(f"p = {p} is not prime")
    if p <= rs.coxeter_number:
        raise InvalidPrime(f"p = {p} must exceed the Coxeter number {rs.coxeter_number} of {rs.spec.name}")


@dataclass(frozen=True)
class Decomposition:
    lam: Weight
    mu: Weight
    w: WeylElement
    p: int


@dataclass(frozen=True)
class Term:
    u: WeylElement
    sign: int
    argument: Weight
    value: int


@dataclass
class DimResult:
    lam: Weight
    degree: int
    dimension: int
    decomposition: Optional[Decomposition] = None
    terms: list[Term] = field(default_factory=list)


def decompose(rs: RootSystem, W: WeylGroup, lam: Weight, p: int) -> list[Decomposition]:
    """All (mu, w) with lam = p*mu + w.0 and mu dominant, sorted by l(w)."""
    out = []
    for w in W:
        diff = [a - b for a, b in zip(lam.fund, W.dot(w, rs.zero()).fund)]
        if all(d % p == 0 and d >= 0 for d in diff):
            mu = rs.weight([d // p for d in diff])
            out.append(Decomposition(lam, mu, w, p))
    out.sort(key=lambda d: (d.w.length, d.w.index))
    return out


def unique_decomposition(rs: RootSystem, W: WeylGroup, lam: Weight, p: int) -> Optional[Decomposition]:
    found = decompose(rs, W, lam, p)
    if len(found) > 1:
        raise AmbiguousDecomposition(f"{lam} has {len(found)} decompositions at p = {p}")
    return found[0] if found else None


class AlternatingSum:
    """The u-sum for a fixed (lam, mu), reusable across part counts.

    Only arguments ``u.lam - mu`` that are nonnegative integral combinations of
    simple roots can contribute; the rest are dropped once, up front.
    """

    def __init__(self, W: WeylGroup, lam: Weight, mu: Weight, elements: Optional[Sequence[WeylElement]] = None):
        self.lam, self.mu = lam, mu
        self.arguments: list[tuple[WeylElement, Weight]] = []
        self.live: list[tuple[WeylElement, tuple[int, ...]]] = []
        for u in W.elements if elements is None else elements:
            arg = W.dot(u, lam) - mu
            self.arguments.append((u, arg))
            vec = _integral_root_coords(arg)
            if vec is not None:
                self.live.append((u, vec))

    def value(self, table: PartitionTable, m: int) -> int:
        if m < 0:
            return 0
        return sum(u.sign * table.partition(vec, m) for u, vec in self.live)

    def terms(self, table: PartitionTable, m: int) -> list[Term]:
        return [Term(u, u.sign, arg, table.partition(arg, m)) for u, arg in self.arguments]


def alternating_sum(
    table: PartitionTable,
    W: WeylGroup,
    lam: Weight,
    mu: Weight,
    m: int,
    elements: Optional[Sequence[WeylElement]] = None,
) -> int:
    """sum over u of (-1)^l(u) P_m(u.lam - mu), optionally over a subset of W."""
    return AlternatingSum(W, lam, mu, elements).value(table, m)


def part_count(i: int, w: WeylElement) -> Optional[int]:
    """(i - l(w))/2 when it is a nonnegative integer, else None."""
    d = i - w.length
    if d < 0 or d % 2:
        return None
    return d // 2


def dim_frobtwist_cohomology(
    rs: RootSystem, W: WeylGroup, table: PartitionTable, lam: Weight, p: int, i: int, with_terms: bool = True
) -> DimResult:
    """dim H^i(G, H^0(lam) (x) H^0(lam*)^(1)) for dominant lam and p > h."""
    check_prime(rs, p)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    dec = unique_decomposition(rs, W, lam, p)
    if dec is None:
        return DimResult(lam, i, 0)
    m = part_count(i, dec.w)
    if m is None:
        return DimResult(lam, i, 0, dec)
    summer = AlternatingSum(W, lam, dec.mu)
    dim = summer.value(table, m)
    if dim < 0:
        raise NegativeDimension(f"alternating sum {dim} < 0 at lam = {lam}, i = {i}")
    return DimResult(lam, i, dim, dec, summer.terms(table, m) if with_terms else [])


# candidate weights ------------------------------------------------------------


def mu_bound(p: int, i_max: int) -> int:
    """Largest <mu, highest^vee> allowed by (p - 1)<mu, highest^vee> - 1 <= i_max."""
    return (i_max + 1) // (p - 1)


def candidate_pairs(rs: RootSystem, W: WeylGroup, p: int, i_max: int) -> Iterator[Decomposition]:
    """Decompositions p*mu + w.0 of dominant weights that can carry cohomology in degrees <= i_max."""
    zero = rs.zero()
    dots = [(w, W.dot(w, zero)) for w in W]
    for mu in rs.dominant_weights(mu_bound(p, i_max)):
        base = p * mu
        for w, d in dots:
            lam = base + d
            if rs.is_dominant(lam):
                yield Decomposition(lam, mu, w, p)


@dataclass
class UpperBound:
    degree: int
    total: int
    contributions: list[tuple[Weight, int]]


def cohomology_upper_bound(rs: RootSystem, W: WeylGroup, table: PartitionTable, p: int, i: int) -> UpperBound:
    """Upper bound for dim H^i(G(F_p), k) as a sum of per-weight dimensions.

    The sum runs over w with l(w) = i mod 2 and dominant mu; pairs with
    (p - 1)<mu, highest^vee> - 1 > i contribute nothing and are skipped, as are
    pairs whose lam = p*mu + w.0 is not dominant.
    """
    check_prime(rs, p)
    total = 0
    contributions = []
    seen: dict[tuple[int, ...], Decomposition] = {}
    for dec in candidate_pairs(rs, W, p, i):
        prev = seen.setdefault(dec.lam.fund, dec)
        if prev is not dec:
            raise AmbiguousDecomposition(f"{dec.lam} has two decompositions at p = {p}")
        m = part_count(i, dec.w)
        if m is None:
            continue
        dim = AlternatingSum(W, dec.lam, dec.mu).value(table, m)
        if dim < 0:
            raise NegativeDimension(f"alternating sum {dim} < 0 at lam = {dec.lam}, i = {i}")
        if dim:
            total += dim
            contributions.append((dec.lam, dim))
    return UpperBound(i, total, contributions)


# degree inequalities ------------------------------------------------------------


def degree_lower_bound(
    rs: RootSystem, W: WeylGroup, gamma1: Decomposition, gamma2: Decomposition, sigma: int, p: int
) -> int:
    """Lower bound on i for Ext^i(V(gamma2)^(1), H^0(gamma1)) != 0.

    Returns the larger of the bound along the positive root ``sigma`` and the
    bound along the highest root. ``sigma`` must be long in type G2.
    """
    d1, w1 = gamma1.mu, gamma1.w
    d2, w2 = gamma2.mu, gamma2.w
    if d1.is_zero() or d2.is_zero():
        raise ValueError("both weights must have nonzero mu (a dominant nonzero gamma forces this for p > h)")
    if rs.spec.family == "G" and not rs.is_long[sigma]:
        raise ShortRootInG2("in type G2 the root sigma must be long")
    w2dot = W.dot(w2, rs.zero())
    along_sigma = p * rs.pairing(d2, sigma) - rs.pairing(d1, sigma) + w1.length + rs.pairing(w2dot, sigma)
    top = rs.highest_root_index
    along_top = p * rs.pairing(d2, top) - rs.pairing(d1, top) + w1.length - w2.length - 1
    return max(along_sigma, along_top)


def fundamental_weight_degree_bound(n: int, p: int, j: int) -> tuple[Fraction, tuple[int, ...]]:
    """Type A_n bound [2(p-1)/(n+1) - 1] j (n+1-j) for lam = p*omega_j + w.0.

    Also returns the only weight that can attain it, (p - n - 1) omega_j, in
    fundamental coordinates.
    """
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in 1..{n}")
    bound = (Fraction(2 * (p - 1), n + 1) - 1) * j * (n + 1 - j)
    witness = tuple(p - n - 1 if k == j else 0 for k in range(1, n + 1))
    return bound, witness


def general_vanishing_bound(p: int, r: int = 1) -> int:
    """H^i(G(F_q), k) = 0 for 0 < i < r(p - 2) whenever p > h."""
    return r * (p - 2)


# reference values -------------------------------------------------------------


@dataclass(frozen=True)
class SharpBound:
    degree: int
    dimension: int
    witnesses: tuple[tuple[int, ...], ...]
    case: str


def _omega(n: int, *pairs: tuple[int, int]) -> tuple[int, ...]:
    """Fundamental coordinates of sum c * omega_j over (j, c) pairs."""
    v = [0] * n
    for j, c in pairs:
        v[j - 1] += c
    return tuple(v)


def expected_sharp_bound(family: str, rank: int, p: int, r: int = 1) -> Optional[SharpBound]:
    """Least positive degree with H^i(G(F_q), k) != 0, q = p^r, where known.

    Returns None outside the covered hypotheses. Witness weights (fundamental
    coordinates) are listed for r = 1 only.
    """
    family = family.upper()
    n = rank
    if r < 1 or not is_prime(p):
        return None
    q = p**r

    def wit(*ws):
        return tuple(sorted(ws)) if r == 1 else ()

    if family == "C" and n >= 2 and p > 2 * n:
        return SharpBound(r * (p - 2), 1, wit(_omega(n, (1, p - 2 * n))), "C_n, p > 2n")
    if family != "A" or n < 2 or p <= n + 1:
        return None
    top = _omega(n, (1, p - n), (n, p - n))
    if r == 1:
        if p == n + 2:
            return SharpBound(p - 2, 2, wit(_omega(n, (1, 1)), _omega(n, (n, 1))), "A_n, p = n + 2")
        if n == 2:
            if (p - 1) % 3 == 0:
                return SharpBound(2 * p - 6, 2, wit(_omega(2, (1, p - 3)), _omega(2, (2, p - 3))), "A_2, 3 | p - 1")
            return SharpBound(2 * p - 3, 1, wit(top), "A_2, 3 does not divide p - 1")
        if n == 3:
            return SharpBound(2 * p - 6, 1, wit(_omega(3, (2, p - 4))), "A_3, p > 5")
        return SharpBound(2 * p - 3, 1, wit(top), "A_n, n > 3, p > n + 2")
    if p <= 2 * (n + 1):
        return None
    if n == 2:
        if (q - 1) % 3 == 0:
            return SharpBound(r * (2 * p - 6), 2, (), "A_2, 3 | q - 1")
        return SharpBound(r * (2 * p - 3), 1, (), "A_2, 3 does not divide q - 1")
    if n == 3:
        return SharpBound(r * (2 * p - 6), 1, (), "A_3, p > 8")
    return SharpBound(r * (2 * p - 3), 1, (), "A_n, n > 3, p > 2(n + 1)")


__all__ = [
    "AlternatingSum",
    "Decomposition",
    "DimResult",
    "SharpBound",
    "Term",
    "UpperBound",
    "alternating_sum",
    "candidate_pairs",
    "check_prime",
    "cohomology_upper_bound",
    "decompose",
    "degree_lower_bound",
    "dim_frobtwist_cohomology",
    "expected_sharp_bound",
    "fundamental_weight_degree_bound",
    "general_vanishing_bound",
    "is_prime",
    "mu_bound",
    "part_count",
    "unique_decomposition",
]
