"""Sweeps over the parameter grid and rendering of their reports."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import construction, verify
from .gordon import GordonParams, Legacy, ParamDomain, Variant, valid_params
from .report import FAIL, CheckReport

SUITE_NAME = "qgordon"

TEXT = "text"
JSON = "json"

# check id -> callable; every task in a sweep names one of these
REGISTRY = {
    "theorem": verify.check_theorem,
    "counts_vs_series": verify.check_counts_vs_series,
    "oracle": verify.check_oracle,
    "count_recurrences": verify.check_count_recurrences,
    "functional_eqs": verify.check_functional_eqs,
    "bracket_arbitration": verify.check_bracket,
    "legacy": verify.check_legacy,
    "q_recurrence": verify.check_q_recurrence,
    "jtp": verify.check_jtp,
    "pentagonal": verify.check_pentagonal,
    "negative_control": verify.negative_control,
    "matrix_adjugate": construction.check_matrix_adjugate,
    "simplified_recurrences": construction.check_simplified_recurrences,
    "iterated_forms": construction.check_iterated_forms,
    "initial_conditions": construction.check_initial_conditions,
    "d1_reduction": construction.check_d1_reduction,
}
CHECK_IDS = tuple(REGISTRY)

# pair bounds outside the validated domain, each expected to break the identities
NEGATIVE_CONTROLS = ((3, 1), (3, 2), (4, 3))
# the (4, 3) control first breaks at q^39, so the controls never run below this order
NEGATIVE_CONTROL_ORDER = 60
JTP_MAX_MODULUS = 12
JTP_ORDER = 80
PENTAGONAL_ORDER = 100
MATRIX_MAX_D = 5


def jobs_from_env(default: int = 1) -> int:
    """Worker count from ``QGORDON_JOBS`` if set, else ``default``."""
    raw = os.environ.get("QGORDON_JOBS")
    if not raw:
        return default
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"QGORDON_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ValueError("QGORDON_JOBS must be at least 1")
    return jobs


@dataclass(frozen=True)
class SuiteConfig:
    """What a sweep covers and how it reports.

    Univariate checks run to ``q^order_n``; bivariate ones use the square
    window ``(order_m, order_m)``.  ``brute_n`` bounds the brute-force checks
    and ``construction_n`` the index range of the construction checks.
    """

    max_d: int = 4
    max_k: int = 4
    order_n: int = 50
    order_m: int = 30
    n_max_terms: int = 6
    construction_n: int = 5
    brute_n: int = 25
    checks: tuple[str, ...] = CHECK_IDS
    output: str = TEXT
    parallel: int = 1

    def __post_init__(self):
        object.__setattr__(self, "checks", tuple(self.checks))
        if self.max_d < 1 or self.max_d > self.max_k:
            raise ValueError(f"need 1 <= max_d <= max_k, got {self.max_d}, {self.max_k}")
        if min(self.order_n, self.order_m, self.n_max_terms, self.construction_n, self.brute_n) < 1:
            raise ValueError("orders and depths must be at least 1")
        if self.brute_n > 25:
            raise ValueError("brute_n is limited to 25")
        unknown = set(self.checks) - set(REGISTRY)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.output not in (TEXT, JSON):
            raise ValueError(f"unknown output format {self.output!r}")
        if self.parallel < 1:
            raise ValueError("parallel must be at least 1")

    def as_json(self) -> dict:
        out = asdict(self)
        out["checks"] = list(self.checks)
        return out


@dataclass(frozen=True)
class Task:
    check_id: str
    args: tuple
    kwargs: tuple = field(default_factory=tuple)

    def run(self) -> CheckReport:
        return REGISTRY[self.check_id](*self.args, **dict(self.kwargs))


def _run(task: Task) -> CheckReport:
    return task.run()


def legacy_cases(max_k: int):
    """Every admissible ``(theorem, k, a)`` of the earlier identities with ``k <= max_k``."""
    out = []
    for theorem in (Legacy.T2_1, Legacy.T2_2, Legacy.T2_2_OVERLINE, Legacy.T2_3):
        for k in range(1, max_k + 1):
            for a in range(1, k + 1):
                try:
                    verify.legacy_domain(theorem, k, a)
                except ParamDomain:
                    continue
                out.append((theorem, k, a))
    return out


def tasks(config: SuiteConfig) -> list[Task]:
    """The sweep's work list in a fixed order."""
    c = config
    grid = valid_params(c.max_d, c.max_k)
    M = c.order_m
    out: list[Task] = []
    want = set(c.checks)

    def add(check_id, *args, **kwargs):
        if check_id in want:
            out.append(Task(check_id, args, tuple(sorted(kwargs.items()))))

    for p in grid:
        for v in (Variant.EVEN, Variant.ODD_OVERLINE):
            add("theorem", p, v, c.order_n)
            add("counts_vs_series", p, v, M, M)
            add("oracle", p, v, c.brute_n)
        add("count_recurrences", p, min(c.brute_n, 20))
        add("functional_eqs", p, M, M, c.n_max_terms)
        add("bracket_arbitration", p, M, M, c.n_max_terms)
        add("simplified_recurrences", p, c.construction_n, M, M)
        add("iterated_forms", p, c.construction_n, M, M)
        add("initial_conditions", p, c.construction_n, M, M)
    for theorem, k, a in legacy_cases(c.max_k):
        add("legacy", theorem, k, a, c.order_n)
    for k in range(1, c.max_k + 1):
        for a in range(1, k + 1):
            add("q_recurrence", k, a, M, M)
            add("d1_reduction", k, a, c.construction_n, M, M)
    for modulus in range(2, JTP_MAX_MODULUS + 1):
        for a in range(1, modulus):
            add("jtp", a, modulus, JTP_ORDER)
    add("pentagonal", PENTAGONAL_ORDER)
    control_n = max(c.order_n, NEGATIVE_CONTROL_ORDER)
    for d, e in NEGATIVE_CONTROLS:
        add("negative_control", d, d, e, 1, 1, control_n)
        add("initial_conditions", GordonParams.relax(d, d, e, 1, 1), c.construction_n, M, M)
    add("negative_control", 3, 3, 3, 1, 1, control_n)
    for d in range(1, MATRIX_MAX_D + 1):
        for n in range(c.construction_n + 1):
            for which in (construction.Which.ALPHA, construction.Which.BETA):
                add("matrix_adjugate", d, d, n, which, M, M)
    return out


def _report_key(r: CheckReport):
    return r.sort_key() + (str(r.order),)


def run_tasks(work: list[Task], parallel: int = 1) -> list[CheckReport]:
    """Run tasks (in worker processes when ``parallel > 1``) and sort the reports canonically."""
    if parallel > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            # large contiguous chunks keep neighbouring tasks (which share cached terms) together
            chunk = max(1, len(work) // (parallel * 4))
            reports = list(pool.map(_run, work, chunksize=chunk))
    else:
        reports = [t.run() for t in work]
    return sorted(reports, key=_report_key)


def sweep(config: SuiteConfig) -> list[CheckReport]:
    return run_tasks(tasks(config), config.parallel)


def summarize(reports) -> dict[str, int]:
    """``pass``/``fail`` count raw statuses; ``unexpected`` counts departures from the expected status."""
    reports = list(reports)
    fails = sum(1 for r in reports if r.status == FAIL)
    return {
        "pass": len(reports) - fails,
        "fail": fails,
        "unexpected": sum(1 for r in reports if not r.as_expected),
    }


def bracket_selection(reports) -> set[str]:
    """Candidates chosen wherever the arbitration could tell them apart."""
    chosen = set()
    for r in reports:
        if r.check_id in ("bracket_arbitration", "iterated_forms"):
            label = r.params.get("variant") or ""
            if label and "=" not in label:
                chosen.add(label)
    return chosen


def emit_report(reports, fmt: str = TEXT, *, config: dict | None = None, timing: bool = True) -> str:
    """Render reports as the JSON document or as an aligned text table."""
    reports = list(reports)
    if fmt == JSON:
        doc = {
            "suite": SUITE_NAME,
            "config": config or {},
            "results": [r.to_json(timing) for r in reports],
            "summary": summarize(reports),
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt != TEXT:
        raise ValueError(f"unknown output format {fmt!r}")
    return _text_table(reports, timing)


def _fmt_params(p: dict) -> str:
    parts = [f"{k}={p[k]}" for k in ("d", "k", "e", "a", "f") if p.get(k) is not None]
    if p.get("variant") is not None:
        parts.append(str(p["variant"]))
    return " ".join(parts)


def _text_table(reports, timing: bool) -> str:
    header = ("check", "params", "order", "status", "expected", "first mismatch", "ms")
    rows = [header]
    for r in reports:
        m, n = r.order
        order = f"({'-' if m is None else m}, {'-' if n is None else n})"
        mm = r.first_mismatch
        where = "" if mm is None else f"x^{mm.x_deg} q^{mm.q_exp}: {mm.lhs} != {mm.rhs}" if mm.x_deg is not None else f"q^{mm.q_exp}: {mm.lhs} != {mm.rhs}"
        status = r.status if r.as_expected else r.status + " !"
        rows.append((r.check_id, _fmt_params(r.params), order, status, r.expected_status, where, f"{r.elapsed:.1f}" if timing else "0"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    s = summarize(reports)
    lines.append("")
    lines.append(f"{len(reports)} checks: {s['pass']} pass, {s['fail']} fail, {s['unexpected']} unexpected")
    chosen = bracket_selection(reports)
    if chosen:
        lines.append("bracket reading selected: " + ", ".join(sorted(chosen)))
    return "\n".join(lines) + "\n"
