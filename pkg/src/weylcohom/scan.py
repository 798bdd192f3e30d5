"""Exhaustive vanishing-range scans and the fixed-weight alternating-sum checks."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .cohom import (
    AlternatingSum,
    Decomposition,
    SharpBound,
    alternating_sum,
    candidate_pairs,
    check_prime,
    expected_sharp_bound,
    part_count,
)
from .errors import AmbiguousDecomposition, NegativeDimension, NotCovered, WeylCohomError
from .kostant import PartitionTable
from .rootsys import RootSystem, RootSystemSpec, Weight, build
from .weyl import WeylGroup, enumerate_group

MATCH, MISMATCH, NOT_COVERED = "MATCH", "MISMATCH", "NOT_COVERED"

# desk-scale limits for full scans
MAX_RANK = {"A": 6, "B": 4, "C": 4, "D": 4, "G": 2, "F": 4}
MAX_PRIME = 31


class ScanTooLarge(WeylCohomError):
    pass


def default_i_max(p: int) -> int:
    return 2 * p - 2


@dataclass
class Witness:
    lam: Weight
    degree: int
    dimension: int
    decomposition: Decomposition
    # (u index, sign, P value) for the u with nonzero partition count
    terms: list[tuple[int, int, int]] = field(default_factory=list)


@dataclass
class ScanReport:
    spec: RootSystemSpec
    p: int
    i_max: int
    least_degree: Optional[int]
    witnesses: list[Witness]
    nonzero: list[tuple[Weight, int, int]]
    candidates: int
    pairs_checked: int
    expected: Optional[SharpBound]
    verdict: str

    @property
    def total_dimension(self) -> int:
        return sum(w.dimension for w in self.witnesses)


def enumerate_candidates(rs: RootSystem, W: WeylGroup, p: int, i_max: int) -> list[Decomposition]:
    """Dominant weights that can carry nonzero cohomology in degrees 1..i_max.

    Sorted by fundamental coordinates. Two decompositions of the same weight
    raise :class:`AmbiguousDecomposition`.
    """
    check_prime(rs, p)
    by_lam: dict[tuple[int, ...], Decomposition] = {}
    for dec in candidate_pairs(rs, W, p, i_max):
        if dec.lam.fund in by_lam:
            raise AmbiguousDecomposition(f"{dec.lam} has two decompositions at p = {p}")
        by_lam[dec.lam.fund] = dec
    return [by_lam[k] for k in sorted(by_lam)]


def _dims_for(summers: list[AlternatingSum], decs: list[Decomposition], table: PartitionTable, i: int) -> list[int]:
    out = []
    for summer, dec in zip(summers, decs):
        m = part_count(i, dec.w)
        dim = 0 if m is None else summer.value(table, m)
        if dim < 0:
            raise NegativeDimension(f"alternating sum {dim} < 0 at lam = {dec.lam}, i = {i}")
        out.append(dim)
    return out


# worker-process state for jobs > 1
_WORKER: dict = {}


def _worker_init(family: str, rank: int, p: int, i_max: int) -> None:
    rs = build(RootSystemSpec(family, rank))
    W = enumerate_group(rs)
    decs = enumerate_candidates(rs, W, p, i_max)
    _WORKER.update(
        table=PartitionTable(rs),
        decs=decs,
        summers=[AlternatingSum(W, d.lam, d.mu) for d in decs],
    )


def _worker_task(args: tuple[int, int, int]) -> list[int]:
    i, lo, hi = args
    return _dims_for(_WORKER["summers"][lo:hi], _WORKER["decs"][lo:hi], _WORKER["table"], i)


def vanishing_scan(
    rs: RootSystem,
    W: WeylGroup,
    table: PartitionTable,
    p: int,
    i_max: Optional[int] = None,
    early_exit: bool = False,
    jobs: int = 1,
    expected: Optional[SharpBound] = None,
) -> ScanReport:
    """Evaluate every candidate weight in every degree 1..i_max.

    Degrees are visited in ascending order; with ``early_exit`` the scan stops
    once the first degree with nonzero cohomology has been fully evaluated.
    The report does not depend on ``jobs``.
    """
    check_prime(rs, p)
    if i_max is None:
        i_max = default_i_max(p)
    if expected is None:
        expected = expected_sharp_bound(rs.spec.family, rs.spec.rank, p, 1)
    decs = enumerate_candidates(rs, W, p, i_max)

    pool = None
    if jobs > 1 and decs:
        pool = ProcessPoolExecutor(
            max_workers=jobs, initializer=_worker_init, initargs=(rs.spec.family, rs.spec.rank, p, i_max)
        )
        step = max(1, -(-len(decs) // (4 * jobs)))
        chunks = [(lo, min(lo + step, len(decs))) for lo in range(0, len(decs), step)]
    else:
        summers = [AlternatingSum(W, d.lam, d.mu) for d in decs]

    least = None
    nonzero: list[tuple[Decomposition, int, int]] = []
    pairs = 0
    try:
        for i in range(1, i_max + 1):
            if pool is not None:
                dims = [d for part in pool.map(_worker_task, [(i, lo, hi) for lo, hi in chunks]) for d in part]
            else:
                dims = _dims_for(summers, decs, table, i)
            pairs += len(decs)
            for dec, dim in zip(decs, dims):
                if dim:
                    nonzero.append((dec, i, dim))
            if least is None and any(dims):
                least = i
                if early_exit:
                    break
    finally:
        if pool is not None:
            pool.shutdown()

    witnesses = []
    for dec, i, dim in nonzero:
        if i != least:
            continue
        m = part_count(i, dec.w)
        summer = AlternatingSum(W, dec.lam, dec.mu)
        terms = [(t.u.index, t.sign, t.value) for t in summer.terms(table, m) if t.value]
        witnesses.append(Witness(dec.lam, i, dim, dec, terms))

    report = ScanReport(
        spec=rs.spec,
        p=p,
        i_max=i_max,
        least_degree=least,
        witnesses=witnesses,
        nonzero=[(dec.lam, i, dim) for dec, i, dim in nonzero],
        candidates=len(decs),
        pairs_checked=pairs,
        expected=expected,
        verdict=NOT_COVERED,
    )
    report.verdict = compare(report, expected)
    return report


def compare(report: ScanReport, expected: Optional[SharpBound]) -> str:
    if expected is None:
        return NOT_COVERED
    found = sorted(w.lam.fund for w in report.witnesses)
    ok = report.least_degree == expected.degree and report.total_dimension == expected.dimension
    if expected.witnesses:
        ok = ok and found == sorted(expected.witnesses)
    return MATCH if ok else MISMATCH


def check_desk_scale(spec: RootSystemSpec, p: int) -> None:
    if spec.rank > MAX_RANK[spec.family] or p > MAX_PRIME:
        raise ScanTooLarge(
            f"{spec.name} at p = {p} exceeds desk-scale limits (rank <= {MAX_RANK[spec.family]}, p <= {MAX_PRIME})"
        )


def verify_theorem(
    family: str, rank: int, p: int, r: int = 1, jobs: int = 1, table: Optional[PartitionTable] = None
) -> ScanReport:
    """Scan up to two degrees past the known sharp bound and compare against it."""
    spec = RootSystemSpec(family, rank)
    expected = expected_sharp_bound(spec.family, rank, p, r)
    if expected is None or r != 1:
        raise NotCovered(f"no r = 1 sharp bound is known for {spec.name} at p = {p} (r = {r})")
    check_desk_scale(spec, p)
    rs = build(spec)
    W = enumerate_group(rs)
    table = table or PartitionTable(rs)
    return vanishing_scan(rs, W, table, p, expected.degree + 2, jobs=jobs, expected=expected)


# fixed-weight alternating sums ---------------------------------------------------


def check_a3_middle_weight_sum(p: int, table: Optional[PartitionTable] = None) -> dict:
    """A_3: sum_u (-1)^l(u) P_{p-5}(u.((p-4) omega_2) - omega_2), expected to be 1."""
    if p <= 4:
        raise ValueError("requires p > 4")
    rs = build(RootSystemSpec("A", 3))
    W = enumerate_group(rs)
    table = table or PartitionTable(rs)
    total = alternating_sum(table, W, (p - 4) * rs.omega(2), rs.omega(2), p - 5)
    return {"sum": total, "pass": total == 1}


def check_a4_p11_sums(table: Optional[PartitionTable] = None) -> dict:
    """A_4, p = 11: the two alternating sums at 6 omega_2 and 6 omega_2 + highest root.

    Both are expected to vanish, as is the first one restricted to the
    stabilizer of omega_2.
    """
    rs = build(RootSystemSpec("A", 4))
    W = enumerate_group(rs)
    table = table or PartitionTable(rs)
    w2 = rs.omega(2)
    sum_a = alternating_sum(table, W, 6 * w2, w2, 6)
    sum_b = alternating_sum(table, W, 6 * w2 + rs.highest_root, w2, 7)
    sum_a_stab = alternating_sum(table, W, 6 * w2, w2, 6, W.stabilizer(w2))
    return {"sum_a": sum_a, "sum_b": sum_b, "sum_a_stabilizer": sum_a_stab, "pass": sum_a == 0 and sum_b == 0}
