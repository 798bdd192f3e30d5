"""Finite Weyl groups as integer matrices on fundamental-weight coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import GroupTooLarge
from .rootsys import RootSystem, Weight

DEFAULT_GROUP_CAP = 10**6

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    index: int
    matrix: Matrix
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1


def weyl_group_order(rs: RootSystem) -> int:
    fam, n = rs.spec.family, rs.spec.rank
    if fam == "A":
        return factorial(n + 1)
    if fam in "BC":
        return 2**n * factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * factorial(n)
    return {"G": 12, "F": 1152}[fam]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


class WeylGroup:
    """All elements of W in BFS-by-length order.

    ``generator_table[k][i]`` is the index of ``s_i * elements[k]``. Ties in the
    BFS are broken by discovery order, i.e. by the sequence of generator
    indices used to reach an element.
    """

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_GROUP_CAP):
        order = weyl_group_order(rs)
        if order > cap:
            raise GroupTooLarge(f"|W({rs.spec.name})| = {order} exceeds cap {cap}")
        self.rs = rs
        n = rs.rank
        self.reflections: list[Matrix] = []
        for i in range(n):
            cols = [rs.reflect_fund([int(j == k) for j in range(n)], i) for k in range(n)]
            self.reflections.append(tuple(zip(*cols)))

        identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        matrices = [identity]
        lengths = [0]
        index = {identity: 0}
        table: list[list[int]] = []
        k = 0
        while k < len(matrices):
            row = []
            for i in range(n):
                prod = _matmul(self.reflections[i], matrices[k])
                j = index.get(prod)
                if j is None:
                    j = index[prod] = len(matrices)
                    matrices.append(prod)
                    lengths.append(lengths[k] + 1)
                row.append(j)
            table.append(row)
            k += 1
        assert len(matrices) == order, (len(matrices), order)
        self.elements = [WeylElement(i, m, l) for i, (m, l) in enumerate(zip(matrices, lengths))]
        self.generator_table = table
        self._index = index
        self.longest = max(self.elements, key=lambda w: w.length)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, k: int) -> WeylElement:
        return self.elements[k]

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def lookup(self, matrix: Matrix) -> WeylElement:
        return self.elements[self._index[matrix]]

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self.lookup(_matmul(a.matrix, b.matrix))

    def from_word(self, word) -> WeylElement:
        """Element s_{word[0]} s_{word[1]} ... with 1-based generator labels."""
        k = 0
        for i in reversed(list(word)):
            k = self.generator_table[k][i - 1]
        return self.elements[k]

    def reduced_word(self, w: WeylElement) -> list[int]:
        """A reduced word (1-based labels) found by descending through left descents."""
        word = []
        k = w.index
        while self.elements[k].length:
            length = self.elements[k].length
            for i, j in enumerate(self.generator_table[k]):
                if self.elements[j].length < length:
                    word.append(i + 1)
                    k = j
                    break
        return word

    # actions ----------------------------------------------------------------

    def act(self, w: WeylElement, lam: Weight) -> Weight:
        return self.rs.apply_matrix(w.matrix, lam)

    def dot(self, w: WeylElement, lam: Weight) -> Weight:
        """w . lam = w(lam + rho) - rho."""
        rho = self.rs.rho
        return self.act(w, lam + rho) - rho

    def inversions(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for b in self.rs.positive_roots if _is_negative(self.act(w, b)))

    def minus_w_dot_zero_roots(self, w: WeylElement) -> list[int]:
        """Indices of the l(w) distinct positive roots summing to -w.0.

        For a reduced word s_{b_1} ... s_{b_m} these are b_1, s_{b_1}(b_2), ...,
        s_{b_1}...s_{b_{m-1}}(b_m).
        """
        rs = self.rs
        word = self.reduced_word(w)
        out = []
        prefix = self.identity
        for i in word:
            beta = self.act(prefix, rs.simple_roots[i - 1])
            out.append(rs.root_index[beta.root])
            prefix = self.multiply(prefix, self.lookup(self.reflections[i - 1]))
        return out

    def stabilizer(self, lam: Weight) -> list[WeylElement]:
        return [w for w in self.elements if self.act(w, lam) == lam]


def _is_negative(lam: Weight) -> bool:
    return all(c <= 0 for c in lam.root) and any(c < 0 for c in lam.root)


@lru_cache(maxsize=None)
def _cached(rs: RootSystem, cap: int) -> WeylGroup:
    return WeylGroup(rs, cap)


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> WeylGroup:
    return _cached(rs, cap)


def sum_of_roots(rs: RootSystem, indices) -> Weight:
    total = rs.zero()
    for k in indices:
        total = total + rs.positive_roots[k]
    return total


__all__ = [
    "DEFAULT_GROUP_CAP",
    "WeylElement",
    "WeylGroup",
    "enumerate_group",
    "sum_of_roots",
    "weyl_group_order",
]
