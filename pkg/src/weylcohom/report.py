"""Serialization of results to JSON, CSV and plain-text tables.

JSON output never contains floats: counts and dimensions are decimal
strings, rationals are ``"a/b"`` strings, and small structural integers
(degrees, ranks, primes) are JSON integers.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .cohom import Decomposition, DimResult, SharpBound, UpperBound
from .rootsys import RootSystem, Weight
from .scan import ScanReport

SCHEMA_VERSION = "weylcohom.report/1"


def rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def weight(w: Weight) -> dict:
    return {"fund": list(w.fund), "root": [rational(c) for c in w.root]}


def decomposition(d: Decomposition | None, W=None) -> dict | None:
    if d is None:
        return None
    out = {"mu": weight(d.mu), "w_index": d.w.index, "w_length": d.w.length}
    if W is not None:
        out["w_word"] = W.reduced_word(d.w)
    return out


def sharp_bound(sb: SharpBound | None) -> dict | None:
    if sb is None:
        return None
    return {
        "degree": sb.degree,
        "dimension": str(sb.dimension),
        "witnesses": [list(w) for w in sb.witnesses],
        "case": sb.case,
    }


def root_system_info(rs: RootSystem, W) -> dict:
    return {
        "type": rs.spec.name,
        "rank": rs.rank,
        "cartan": rs.cartan,
        "cartan_det": rs.det,
        "coxeter_number": rs.coxeter_number,
        "weyl_group_order": str(len(W)),
        "rho": weight(rs.rho),
        "highest_root": weight(rs.highest_root),
        "highest_short_root": weight(rs.highest_short_root),
        "positive_roots": [
            {"index": k, "root": [rational(c) for c in b.root], "long": rs.is_long[k]}
            for k, b in enumerate(rs.positive_roots)
        ],
    }


def dim_result(res: DimResult, W) -> dict:
    return {
        "lambda": weight(res.lam),
        "degree": res.degree,
        "dimension": str(res.dimension),
        "decomposition": decomposition(res.decomposition, W),
        "terms": [
            {"u_index": t.u.index, "sign": t.sign, "argument": weight(t.argument), "value": str(t.value)}
            for t in res.terms
            if t.value
        ],
    }


def upper_bound(ub: UpperBound) -> dict:
    return {
        "degree": ub.degree,
        "total": str(ub.total),
        "contributions": [{"lambda": weight(lam), "dimension": str(d)} for lam, d in ub.contributions],
    }


def scan_report(rep: ScanReport, W=None) -> dict:
    return {
        "type": rep.spec.name,
        "p": rep.p,
        "i_max": rep.i_max,
        "least_degree": rep.least_degree,
        "total_dimension": str(rep.total_dimension),
        "witnesses": [
            {
                "lambda": weight(w.lam),
                "degree": w.degree,
                "dimension": str(w.dimension),
                "decomposition": decomposition(w.decomposition, W),
                "terms": [{"u_index": u, "sign": s, "value": str(v)} for u, s, v in w.terms],
            }
            for w in rep.witnesses
        ],
        "nonzero": [{"lambda": list(lam.fund), "degree": i, "dimension": str(d)} for lam, i, d in rep.nonzero],
        "candidates": str(rep.candidates),
        "pairs_checked": str(rep.pairs_checked),
        "expected": sharp_bound(rep.expected),
        "verdict": rep.verdict,
    }


def envelope(command: str, config: dict, result: dict) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command, "config": config, "result": result}


def to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def rows_to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * wd for wd in widths))
    return "\n".join(lines) + "\n"


def fund_str(fund) -> str:
    return " ".join(str(c) for c in fund)


def scan_rows(rep: ScanReport) -> tuple[list[str], list[list]]:
    header = ["lambda", "degree", "dimension", "mu", "w_length"]
    rows = [
        [fund_str(w.lam.fund), w.degree, w.dimension, fund_str(w.decomposition.mu.fund), w.decomposition.w.length]
        for w in rep.witnesses
    ]
    return header, rows
