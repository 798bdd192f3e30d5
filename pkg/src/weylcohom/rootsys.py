"""Irreducible root systems with Bourbaki numbering and exact lattice arithmetic.

Roots are realized in the usual orthonormal epsilon coordinates only long
enough to read off inner products; everything public is expressed either in
fundamental-weight coordinates (integers) or simple-root coordinates
(rationals).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidRank

FAMILIES = ("A", "B", "C", "D", "G", "F")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper() if isinstance(self.family, str) else self.family
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise InvalidRank(f"unsupported family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidRank(f"rank must be an integer, got {self.rank!r}")
        if fam == "G" and self.rank != 2:
            raise InvalidRank("type G requires rank 2")
        if fam == "F" and self.rank != 4:
            raise InvalidRank("type F requires rank 4")
        if fam in _MIN_RANK and self.rank < _MIN_RANK[fam]:
            raise InvalidRank(f"type {fam} requires rank >= {_MIN_RANK[fam]}, got {self.rank}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Weight:
    """A weight-lattice vector held in both coordinate systems.

    ``fund`` are the coordinates in the basis of fundamental weights and
    ``root`` those in the basis of simple roots. Build instances through
    :meth:`RootSystem.weight` or :meth:`RootSystem.from_root`, which check that
    the two agree.
    """

    fund: tuple[int, ...]
    root: tuple[Fraction, ...]

    def __add__(self, other: Weight) -> Weight:
        return Weight(
            tuple(a + b for a, b in zip(self.fund, other.fund)),
            tuple(a + b for a, b in zip(self.root, other.root)),
        )

    def __sub__(self, other: Weight) -> Weight:
        return Weight(
            tuple(a - b for a, b in zip(self.fund, other.fund)),
            tuple(a - b for a, b in zip(self.root, other.root)),
        )

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.fund), tuple(-a for a in self.root))

    def __mul__(self, k: int) -> Weight:
        if not isinstance(k, int):
            return NotImplemented
        return Weight(tuple(k * a for a in self.fund), tuple(k * a for a in self.root))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.fund)

    def __str__(self):
        terms = [f"{c}w{i + 1}" if c != 1 else f"w{i + 1}" for i, c in enumerate(self.fund) if c]
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _epsilon_simple_roots(family: str, n: int) -> list[tuple[Fraction, ...]]:
    def e(dim, *pairs):
        v = [Fraction(0)] * dim
        for idx, c in pairs:
            v[idx] += Fraction(c)
        return tuple(v)

    if family == "A":
        return [e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if family in "BCD":
        roots = [e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        if family == "B":
            roots.append(e(n, (n - 1, 1)))
        elif family == "C":
            roots.append(e(n, (n - 1, 2)))
        else:
            roots.append(e(n, (n - 2, 1), (n - 1, 1)))
        return roots
    if family == "G":
        return [e(3, (0, 1), (1, -1)), e(3, (0, -2), (1, 1), (2, 1))]
    if family == "F":
        h = Fraction(1, 2)
        return [
            e(4, (1, 1), (2, -1)),
            e(4, (2, 1), (3, -1)),
            e(4, (3, 1)),
            e(4, (0, h), (1, -h), (2, -h), (3, -h)),
        ]
    raise InvalidRank(family)


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _invert(matrix: list[list[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _det(matrix: list[list[int]]) -> int:
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return int(det)


class RootSystem:
    """Immutable tables for one irreducible root system.

    Attributes of note: ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so that
    fundamental coordinates are ``cartan @ root_coords``; ``positive_roots``
    are ordered by height, ties by root coordinates (descending, so simple
    roots appear as alpha_1, ..., alpha_n).
    """

    def __init__(self, spec: RootSystemSpec):
        self.spec = spec
        n = self.rank = spec.rank
        eps = _epsilon_simple_roots(spec.family, n)
        self.gram = [[_dot(a, b) for b in eps] for a in eps]
        self.cartan = [[int(2 * self.gram[i][j] / self.gram[i][i]) for j in range(n)] for i in range(n)]
        self.det = _det(self.cartan)
        inv = _invert(self.cartan)
        self.inv_cartan_times_det = [[int(x * self.det) for x in row] for row in inv]
        self._inv_cartan = inv

        self.simple_roots = [self.from_root([int(i == j) for j in range(n)]) for i in range(n)]
        self.positive_roots = self._generate_positive_roots()
        self.root_index = {b.root: k for k, b in enumerate(self.positive_roots)}

        self._norms = [self._norm(b) for b in self.positive_roots]
        long_norm = max(self._norms)
        self.is_long = [nb == long_norm for nb in self._norms]
        # coefficients of beta^vee in the simple coroots; integral for every root
        self.coroots = [
            tuple(int(b.root[k] * self.gram[k][k] / nb) for k in range(n))
            for b, nb in zip(self.positive_roots, self._norms)
        ]

        self.rho = self.weight([1] * n)
        self.highest_root = max(self.positive_roots, key=lambda b: (self.height(b), b.root))
        self.highest_root_index = self.root_index[self.highest_root.root]
        short = [b for b, lg in zip(self.positive_roots, self.is_long) if not lg]
        self.highest_short_root = max(short, key=self.height) if short else self.highest_root
        # height of the highest root plus one; <rho, highest^vee> + 1 only agrees when simply laced
        self.coxeter_number = int(self.height(self.highest_root)) + 1
        self.longest_matrix = self._longest_element_matrix()

    # construction helpers -------------------------------------------------

    def _norm(self, w: Weight) -> Fraction:
        n = self.rank
        return sum(
            (w.root[i] * self.gram[i][j] * w.root[j] for i in range(n) for j in range(n)),
            Fraction(0),
        )

    def _generate_positive_roots(self) -> list[Weight]:
        n = self.rank
        seen = {tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)}
        frontier = list(seen)
        while frontier:
            new = []
            for root in frontier:
                fund = self._fund_of_root(root)
                for i in range(n):
                    c = fund[i]
                    img = tuple(r - c * int(k == i) for k, r in enumerate(root))
                    if all(x >= 0 for x in img) and any(img) and img not in seen:
                        seen.add(img)
                        new.append(img)
            frontier = new
        roots = [self.from_root(r) for r in seen]
        roots.sort(key=lambda b: (sum(b.root), tuple(-x for x in b.root)))
        return roots

    def _fund_of_root(self, root: Sequence[Fraction]) -> tuple[int, ...]:
        out = []
        for i in range(self.rank):
            v = sum((self.cartan[i][j] * root[j] for j in range(self.rank)), Fraction(0))
            if v.denominator != 1:
                raise ValueError(f"root coordinates {tuple(root)} are not in the weight lattice")
            out.append(int(v))
        return tuple(out)

    def _longest_element_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        mat = [[int(i == j) for j in range(n)] for i in range(n)]
        v = list(self.rho.fund)
        while True:
            i = next((k for k in range(n) if v[k] > 0), None)
            if i is None:
                break
            v = list(self.reflect_fund(v, i))
            mat = [list(self.reflect_fund(col, i)) for col in zip(*mat)]
            mat = [list(r) for r in zip(*mat)]
        return tuple(tuple(r) for r in mat)

    # weights ----------------------------------------------------------------

    def weight(self, fund: Iterable[int]) -> Weight:
        """Weight from fundamental-weight coordinates."""
        fund = tuple(int(x) for x in fund)
        if len(fund) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(fund)}")
        root = tuple(
            sum((self._inv_cartan[i][j] * fund[j] for j in range(self.rank)), Fraction(0))
            for i in range(self.rank)
        )
        return Weight(fund, root)

    def from_root(self, root: Iterable) -> Weight:
        """Weight from simple-root coordinates (must land in the weight lattice)."""
        root = tuple(Fraction(x) for x in root)
        if len(root) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(root)}")
        return Weight(self._fund_of_root(root), root)

    def omega(self, i: int) -> Weight:
        """The fundamental weight omega_i (1-based, Bourbaki numbering)."""
        return self.weight([int(j == i - 1) for j in range(self.rank)])

    def alpha(self, i: int) -> Weight:
        return self.simple_roots[i - 1]

    def zero(self) -> Weight:
        return self.weight([0] * self.rank)

    def check(self, w: Weight) -> None:
        if w.fund != self._fund_of_root(w.root):
            raise ValueError(f"inconsistent coordinates {w.fund} / {w.root}")

    # lattice arithmetic -----------------------------------------------------

    def reflect_fund(self, fund: Sequence[int], i: int) -> tuple[int, ...]:
        """s_i applied to a vector in fundamental coordinates."""
        c = fund[i]
        return tuple(fund[k] - c * self.cartan[k][i] for k in range(self.rank))

    def pairing(self, lam: Weight, beta: int) -> int:
        """<lam, beta^vee> for the positive root with index ``beta``."""
        return sum(c * f for c, f in zip(self.coroots[beta], lam.fund))

    def pairing_highest(self, lam: Weight) -> int:
        return self.pairing(lam, self.highest_root_index)

    def apply_matrix(self, mat, lam: Weight) -> Weight:
        return self.weight(tuple(sum(r[j] * lam.fund[j] for j in range(self.rank)) for r in mat))

    def dual_weight(self, lam: Weight) -> Weight:
        """lam* = -w_0(lam)."""
        return -self.apply_matrix(self.longest_matrix, lam)

    def is_dominant(self, lam: Weight) -> bool:
        return all(c >= 0 for c in lam.fund)

    def height(self, lam: Weight) -> Fraction:
        return sum(lam.root, Fraction(0))

    def in_root_lattice(self, lam: Weight) -> bool:
        return all(c.denominator == 1 for c in lam.root)

    def coeff_stats(self, gamma: Weight) -> tuple[tuple[Fraction, ...], Fraction, int]:
        """(M_j values, their max M, the largest 1-based index m attaining M)."""
        coeffs = gamma.root
        top = max(coeffs)
        m = max(j + 1 for j, c in enumerate(coeffs) if c == top)
        return coeffs, top, m

    def dominant_weights(self, bound: int) -> list[Weight]:
        """Dominant weights with <mu, highest_root^vee> <= bound, in lexicographic order."""
        coeffs = self.coroots[self.highest_root_index]
        out: list[tuple[int, ...]] = []

        def rec(prefix: list[int], remaining: int):
            k = len(prefix)
            if k == self.rank:
                out.append(tuple(prefix))
                return
            for c in range(remaining // coeffs[k] + 1):
                rec(prefix + [c], remaining - c * coeffs[k])

        if bound >= 0:
            rec([], bound)
        return [self.weight(f) for f in sorted(out)]

    @property
    def spec_hash(self) -> str:
        return hashlib.sha256(f"{self.spec.family}{self.spec.rank}".encode()).hexdigest()[:16]

    def __repr__(self):
        return f"RootSystem({self.spec.name})"


@lru_cache(maxsize=None)
def build(spec: RootSystemSpec) -> RootSystem:
    return RootSystem(spec)


def root_system(family: str, rank: int) -> RootSystem:
    return build(RootSystemSpec(family, rank))
