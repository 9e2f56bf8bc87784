"""Batch theorem verification over streams of graphs.

Every claim is turned into one :class:`TheoremVerdict` per graph. Claims
indexed by ``k`` (the order/size bound, monotonicity, the trivial threshold
and the Omega characterization) are folded into a single verdict whose
``details`` carry the per-k values; the worst per-k status wins.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from . import bounds, families, solvers
from .graph import Graph, Graph6Error, parse_graph6, to_graph6
from .solvers import NodeLimitExceeded, SolveOptions


class ClaimId(str, enum.Enum):
    THM21 = "thm2.1"
    THM22_LK = "thm2.2-lk"
    THM22_RHO_O = "thm2.2-rho_o"
    RHO_O_MIN_DEGREE = "eq-rho_o-n/delta"
    REMARK_RHO = "remark-rho"
    THM33 = "thm3.3"
    EQ1 = "eq1"
    MONOTONICITY = "monotonicity"
    LK_THRESHOLD = "lk-threshold"
    TIGHT_OMEGA = "tightness-omega"
    TIGHT_SIGMA = "tightness-sigma"
    TIGHT_GAMMA = "tightness-gamma"
    TIGHT_GAMMA_PRIME = "tightness-gamma-prime"


class Status(str, enum.Enum):
    HOLDS = "holds"
    TIGHT = "tight"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"
    FINDING = "finding"


# worst status first when folding per-k results
_SEVERITY = [Status.VIOLATED, Status.FINDING, Status.TIGHT, Status.HOLDS, Status.INAPPLICABLE]

HUNTABLE = frozenset(ClaimId) - {ClaimId.LK_THRESHOLD}


@dataclass(frozen=True)
class TheoremVerdict:
    graph: str
    claim_id: ClaimId
    status: Status
    details: dict = field(default_factory=dict, hash=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "claim": self.claim_id.value,
            "status": self.status.value,
            "details": self.details,
        }


@dataclass
class SweepSummary:
    graphs_processed: int = 0
    malformed: int = 0
    counts: dict = field(default_factory=dict)
    tight: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, verdicts: Sequence[TheoremVerdict]):
        self.graphs_processed += 1
        for v in verdicts:
            self.counts.setdefault(v.claim_id.value, Counter())[v.status.value] += 1
            if v.status is Status.TIGHT:
                self.tight.setdefault(v.claim_id.value, []).append(v.graph)
            elif v.status is Status.VIOLATED:
                self.violations.append(v.to_dict())
            elif v.status is Status.FINDING:
                self.findings.append(v.to_dict())

    def merge(self, other: "SweepSummary") -> "SweepSummary":
        out = SweepSummary(
            self.graphs_processed + other.graphs_processed,
            self.malformed + other.malformed,
            wall_time=self.wall_time + other.wall_time,
        )
        for claim in sorted(set(self.counts) | set(other.counts)):
            out.counts[claim] = self.counts.get(claim, Counter()) + other.counts.get(claim, Counter())
        for claim in sorted(set(self.tight) | set(other.tight)):
            out.tight[claim] = self.tight.get(claim, []) + other.tight.get(claim, [])
        out.violations = self.violations + other.violations
        out.findings = self.findings + other.findings
        return out

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    def agreement_rate(self, claim: Union[ClaimId, str] = ClaimId.TIGHT_GAMMA_PRIME) -> Optional[float]:
        c = self.counts.get(ClaimId(claim).value, Counter())
        applicable = sum(v for s, v in c.items() if s != Status.INAPPLICABLE.value)
        if not applicable:
            return None
        agreed = c.get(Status.HOLDS.value, 0) + c.get(Status.TIGHT.value, 0)
        return agreed / applicable

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "graphs_processed": self.graphs_processed,
            "malformed": self.malformed,
            "violations": self.violation_count,
            "counts": {c: dict(sorted(v.items())) for c, v in sorted(self.counts.items())},
            "tight": {c: v for c, v in sorted(self.tight.items())},
            "gamma_prime_agreement": self.agreement_rate(),
            "violation_records": self.violations,
            "findings": self.findings,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


class _Invariants:
    """Lazily computed invariant values for one graph."""

    def __init__(self, g: Graph, opts: SolveOptions):
        self.g = g
        self.opts = opts
        self._cache: dict = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def rho(self) -> int:
        return self._get("rho", lambda: solvers.packing_number(self.g, self.opts).value)

    def rho_o(self) -> int:
        return self._get("rho_o", lambda: solvers.open_packing_number(self.g, self.opts).value)

    def lk_result(self, k: int) -> solvers.SolveResult:
        return self._get(("L", k), lambda: solvers.limited_packing_number(self.g, k, self.opts))

    def lk(self, k: int) -> int:
        return self.lk_result(k).value

    def gamma_x2(self) -> int:
        return self._get("gx2", lambda: solvers.double_domination_number(self.g, self.opts).value)


def _inapplicable(g6: str, claim: ClaimId, reason: str) -> TheoremVerdict:
    return TheoremVerdict(g6, claim, Status.INAPPLICABLE, {"reason": reason})


def _from_bound(g6: str, claim: ClaimId, ev: bounds.BoundEvaluation, **extra) -> TheoremVerdict:
    if not ev.applicable:
        return _inapplicable(g6, claim, ev.reason)
    status = Status.VIOLATED if not ev.holds else Status.TIGHT if ev.tight else Status.HOLDS
    return TheoremVerdict(g6, claim, status, {**ev.to_dict(), **extra})


def _fold(statuses: Iterable[Status]) -> Status:
    present = set(statuses)
    for s in _SEVERITY:
        if s in present:
            return s
    return Status.INAPPLICABLE


def _characterization(g6, claim, tight: bool, witness, g, soft=False) -> TheoremVerdict:
    member = witness is not None
    details = {"bound_tight": tight, "member": member}
    if member:
        details["witness"] = witness.to_dict()
        details["certificate_valid"] = families.check_witness(g, witness)
    if tight != member or (member and not details["certificate_valid"]):
        status = Status.FINDING if soft else Status.VIOLATED
    else:
        status = Status.TIGHT if tight else Status.HOLDS
    return TheoremVerdict(g6, claim, status, details)


def _k_values(g: Graph, k_range: Optional[Sequence[int]]) -> list[int]:
    if k_range is not None:
        return sorted(set(k for k in k_range if k >= 1))
    return list(range(1, g.max_degree + 1))


def _claim(inv: _Invariants, g6: str, claim: ClaimId, ks: list[int]) -> TheoremVerdict:
    g = inv.g
    n, delta, Delta = g.n, g.min_degree, g.max_degree
    connected = g.is_connected()

    if claim is ClaimId.THM21:
        ev = bounds.l2_pendant_bound(g)
        if not ev.applicable:
            return _inapplicable(g6, claim, ev.reason)
        return _from_bound(g6, claim, bounds.l2_pendant_bound(g, inv.lk(2)))

    if claim is ClaimId.THM22_LK:
        per_k = {}
        for k in ks:
            ev = bounds.lk_order_size_bound(g, k)
            if ev.applicable:
                ev = bounds.lk_order_size_bound(g, k, inv.lk(k))
            per_k[k] = _from_bound(g6, claim, ev)
        if not per_k:
            return _inapplicable(g6, claim, "no k in range")
        status = _fold(v.status for v in per_k.values())
        return TheoremVerdict(g6, claim, status, {"per_k": {str(k): v.details for k, v in per_k.items()}})

    if claim is ClaimId.THM22_RHO_O:
        if delta < 1:
            return _inapplicable(g6, claim, "requires no isolated vertex")
        return _from_bound(g6, claim, bounds.open_packing_order_size_bound(g, inv.rho_o()))

    if claim is ClaimId.RHO_O_MIN_DEGREE:
        if n < 2 or not connected:
            return _inapplicable(g6, claim, "requires a connected graph with n >= 2")
        return _from_bound(g6, claim, bounds.open_packing_min_degree_bound(g, inv.rho_o()))

    if claim is ClaimId.REMARK_RHO:
        if n < 2 or not connected:
            return _inapplicable(g6, claim, "requires a connected graph with n >= 2")
        return _from_bound(g6, claim, bounds.packing_min_degree_bound(g, inv.rho()))

    if claim is ClaimId.THM33:
        if delta < 2:
            return _inapplicable(g6, claim, "requires delta >= 2")
        gx2, rho = inv.gamma_x2(), inv.rho()
        new, prior_sum, prior = bounds.double_domination_bounds(g, gx2, rho)
        v = _from_bound(g6, claim, new, prior_sum=prior_sum.to_dict(), prior=prior.to_dict())
        implied = new.details.get("implies_prior_sum") and new.details.get("implies_prior")
        if v.status is not Status.VIOLATED and not (prior_sum.holds and prior.holds and implied):
            return TheoremVerdict(g6, claim, Status.VIOLATED, v.details)
        return v

    if claim is ClaimId.EQ1:
        if delta < 2:
            return _inapplicable(g6, claim, "requires delta >= 2")
        gx2 = inv.gamma_x2()
        res = inv.lk_result(delta - 1)
        complement = set(g.vertices()) - res.witness
        complement_ok = solvers.is_tuple_dominating(g, complement, 2)
        lhs = gx2 + res.value
        details = {"gamma_x2": gx2, f"L{delta - 1}": res.value, "n": n,
                   "complement_double_dominating": complement_ok}
        if lhs > n or not complement_ok:
            return TheoremVerdict(g6, claim, Status.VIOLATED, details)
        return TheoremVerdict(g6, claim, Status.TIGHT if lhs == n else Status.HOLDS, details)

    if claim is ClaimId.MONOTONICITY:
        if Delta < 1:
            return _inapplicable(g6, claim, "requires Delta >= 1")
        per_k = {}
        for k in range(1, Delta + 1):
            a, b = inv.lk(k), inv.lk(k + 1)
            st = Status.VIOLATED if b < a + 1 else Status.TIGHT if b == a + 1 else Status.HOLDS
            per_k[str(k)] = {"L_k": a, "L_k+1": b, "status": st.value}
        statuses = [Status(d["status"]) for d in per_k.values()]
        status = Status.VIOLATED if Status.VIOLATED in statuses else (
            Status.TIGHT if Status.TIGHT in statuses else Status.HOLDS)
        return TheoremVerdict(g6, claim, status, {"per_k": per_k})

    if claim is ClaimId.LK_THRESHOLD:
        if n == 0:
            return _inapplicable(g6, claim, "empty graph")
        per_k = {}
        ok = True
        for k in sorted(set(range(1, Delta + 2)) | set(ks)):
            full = inv.lk(k) == n
            pred = bounds.lk_trivial_threshold(g, k)
            per_k[str(k)] = {"L_k": inv.lk(k), "threshold": pred}
            ok &= full == pred
        return TheoremVerdict(g6, claim, Status.HOLDS if ok else Status.VIOLATED, {"per_k": per_k})

    if claim is ClaimId.TIGHT_OMEGA:
        per_k = {}
        for k in ks:
            if k > Delta:
                continue
            ev = bounds.lk_order_size_bound(g, k)
            if not ev.applicable:
                continue
            ev = bounds.lk_order_size_bound(g, k, inv.lk(k))
            per_k[k] = _characterization(g6, claim, ev.tight, families.recognize_omega(g, k), g)
        if not per_k:
            return _inapplicable(g6, claim, "no applicable k <= Delta")
        status = _fold(v.status for v in per_k.values())
        return TheoremVerdict(g6, claim, status, {"per_k": {str(k): v.details for k, v in per_k.items()}})

    if claim is ClaimId.TIGHT_SIGMA:
        if delta < 1:
            return _inapplicable(g6, claim, "requires no isolated vertex")
        ev = bounds.open_packing_order_size_bound(g, inv.rho_o())
        return _characterization(g6, claim, ev.tight, families.recognize_sigma(g), g)

    if claim is ClaimId.TIGHT_GAMMA:
        if n < 2 or not connected:
            return _inapplicable(g6, claim, "requires a connected graph with n >= 2")
        ev = bounds.open_packing_min_degree_bound(g, inv.rho_o())
        return _characterization(g6, claim, ev.tight, families.recognize_gamma(g), g)

    if claim is ClaimId.TIGHT_GAMMA_PRIME:
        if n < 2 or not connected:
            return _inapplicable(g6, claim, "requires a connected graph with n >= 2")
        ev = bounds.packing_min_degree_bound(g, inv.rho())
        return _characterization(g6, claim, ev.tight, families.recognize_gamma_prime(g), g, soft=True)

    raise ValueError(f"unknown claim {claim!r}")


def verify_graph(
    g: Graph,
    k_range: Optional[Sequence[int]] = None,
    opts: SolveOptions = solvers.DEFAULT_OPTIONS,
    claims: Optional[Iterable[ClaimId]] = None,
) -> list[TheoremVerdict]:
    """One verdict per claim, in :class:`ClaimId` order."""
    g6 = to_graph6(g)
    inv = _Invariants(g, opts)
    ks = _k_values(g, k_range)
    wanted = list(ClaimId) if claims is None else [ClaimId(c) for c in claims]
    out = []
    for claim in wanted:
        try:
            out.append(_claim(inv, g6, claim, ks))
        except NodeLimitExceeded as exc:
            out.append(_inapplicable(g6, claim, f"resource: {exc}"))
    return out


def _verify_record(args) -> Optional[list[TheoremVerdict]]:
    record, k_range, opts, claims = args
    if isinstance(record, Graph):
        g = record
    else:
        try:
            g = parse_graph6(record)
        except Graph6Error:
            return None
    return verify_graph(g, k_range, opts, claims)


def iter_verdicts(
    stream: Iterable[Union[Graph, str]],
    k_range: Optional[Sequence[int]] = None,
    opts: SolveOptions = solvers.DEFAULT_OPTIONS,
    claims: Optional[Iterable[ClaimId]] = None,
    jobs: int = 1,
):
    """Yield the verdict list per record in input order (None for malformed)."""
    claims = None if claims is None else tuple(ClaimId(c) for c in claims)
    tasks = ((rec, k_range, opts, claims) for rec in stream)
    if jobs <= 1:
        yield from map(_verify_record, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_verify_record, tasks, chunksize=8)


def verify_stream(
    stream: Iterable[Union[Graph, str]],
    k_range: Optional[Sequence[int]] = None,
    opts: SolveOptions = solvers.DEFAULT_OPTIONS,
    jobs: int = 1,
    on_verdicts=None,
) -> SweepSummary:
    """Verify every graph in ``stream``; string records are parsed as graph6
    and counted as malformed when they fail to parse."""
    start = time.perf_counter()
    summary = SweepSummary()
    for verdicts in iter_verdicts(stream, k_range, opts, jobs=jobs):
        if verdicts is None:
            summary.malformed += 1
            continue
        summary.add(verdicts)
        if on_verdicts is not None:
            on_verdicts(verdicts)
    summary.wall_time = time.perf_counter() - start
    return summary


def hunt_tight(
    claim_id: Union[ClaimId, str],
    stream: Iterable[Union[Graph, str]],
    k_range: Optional[Sequence[int]] = None,
    opts: SolveOptions = solvers.DEFAULT_OPTIONS,
    jobs: int = 1,
) -> list[str]:
    """graph6 strings of the graphs in ``stream`` that attain ``claim_id`` with equality."""
    try:
        claim = ClaimId(claim_id)
    except ValueError:
        raise ValueError(f"unknown claim id {claim_id!r}") from None
    if claim not in HUNTABLE:
        raise ValueError(f"claim {claim.value} has no tightness notion")
    out = []
    for verdicts in iter_verdicts(stream, k_range, opts, claims=[claim], jobs=jobs):
        if verdicts and verdicts[0].status is Status.TIGHT:
            out.append(verdicts[0].graph)
    return out


def verdicts_to_jsonl(verdicts: Iterable[TheoremVerdict]) -> str:
    return "".join(json.dumps(v.to_dict(), sort_keys=True) + "\n" for v in verdicts)


def tight_table_csv(summary: SweepSummary) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["claim", "graph6"])
    for claim, graphs in sorted(summary.tight.items()):
        for g6 in graphs:
            w.writerow([claim, g6])
    return buf.getvalue()
