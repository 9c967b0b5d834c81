"""Command-line front end.

Exit codes: 0 when every check behaves as expected (negative controls
included), 1 when at least one result is unexpected, 2 for invalid
parameters or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construction, verify
from .gordon import GordonParams, Legacy, ParamDomain, Variant, andrews_Q, product_rhs, series_C, series_T
from .partitions import ConstraintSet, Parity, brute_count, dp_counts
from .series import BiSeries, SeriesError, theta_sum
from .suite import CHECK_IDS, JSON, TEXT, SuiteConfig, emit_report, jobs_from_env, run_tasks, sweep, summarize, Task

EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_params(p, *, defaults: bool = False):
    for name in ("d", "k", "e", "a", "f"):
        p.add_argument(f"--{name}", type=int, default=1 if defaults else None)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.EVEN.value)


def _add_output(p):
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--no-timing", action="store_true", help="zero elapsed times (stable output)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qgordon", description="Exact checks of Gordon-type partition identities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run one check at one parameter set")
    v.add_argument("check", choices=CHECK_IDS)
    _add_params(v)
    v.add_argument("--order", type=int, required=True, help="q-truncation N")
    v.add_argument("--xorder", type=int, help="x-truncation M (bivariate checks; defaults to N)")
    v.add_argument("--n-max", type=int, default=5, help="term index depth")
    v.add_argument("--n", type=int, default=1, help="index n for matrix_adjugate")
    v.add_argument("--which", choices=[w.value for w in construction.Which], default="alpha")
    v.add_argument("--theorem", choices=[t.value for t in Legacy if t is not Legacy.Q_SERIES], default="gordon")
    v.add_argument("--modulus", type=int, help="modulus for jtp")
    _add_output(v)

    s = sub.add_parser("sweep", help="run the checks over the parameter grid")
    s.add_argument("--max-d", type=int, default=4)
    s.add_argument("--max-k", type=int, default=4)
    s.add_argument("--order", type=int, default=50, help="q-truncation for univariate checks")
    s.add_argument("--xorder", type=int, default=30, help="window side for bivariate checks")
    s.add_argument("--n-max", type=int, default=6, help="term identity depth")
    s.add_argument("--brute-n", type=int, default=25)
    s.add_argument("--checks", nargs="+", choices=CHECK_IDS, default=list(CHECK_IDS))
    s.add_argument("--jobs", type=int, help="worker processes (default: QGORDON_JOBS or 1)")
    _add_output(s)

    c = sub.add_parser("count", help="count partitions under frequency conditions")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--pair-bound", type=int, required=True)
    c.add_argument("--initial-bound", type=int, required=True)
    c.add_argument("--divisor", type=int, default=1)
    c.add_argument("--parity", choices=[p.value for p in Parity], default="none")
    c.add_argument("--brute", action="store_true", help="enumerate partitions instead of the DP")

    e = sub.add_parser("expand", help="print a series")
    e.add_argument("what", choices=("product", "theta", "series-c", "series-t", "q"))
    _add_params(e)
    e.add_argument("--modulus", type=int, help="modulus for theta")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--xorder", type=int, help="keep x up to this degree (series-c, series-t, q)")
    e.add_argument("--json", action="store_true")
    return parser


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _params(args, relaxed: bool = False) -> GordonParams:
    _need(args, "d", "k", "e", "a", "f")
    vals = (args.d, args.k, args.e, args.a, args.f)
    return GordonParams.relax(*vals) if relaxed else GordonParams(*vals)


def _verify_task(args) -> Task:
    N = args.order
    M = args.xorder if args.xorder is not None else N
    check = args.check
    variant = Variant(args.variant)
    if check == "theorem":
        return Task(check, (_params(args), variant, N))
    if check == "counts_vs_series":
        return Task(check, (_params(args), variant, M, N))
    if check == "oracle":
        return Task(check, (_params(args), variant, min(N, 25)))
    if check == "count_recurrences":
        return Task(check, (_params(args), min(N, 25)))
    if check in ("functional_eqs", "bracket_arbitration"):
        return Task(check, (_params(args), M, N, args.n_max))
    if check in ("simplified_recurrences", "iterated_forms"):
        return Task(check, (_params(args), args.n_max, M, N))
    if check == "initial_conditions":
        p = _params(args, relaxed=True)
        return Task(check, (p, args.n_max, M, N))
    if check == "negative_control":
        _params(args, relaxed=True)
        return Task(check, (args.d, args.k, args.e, args.a, args.f, N))
    if check == "legacy":
        _need(args, "k", "a")
        verify.legacy_domain(args.theorem, args.k, args.a)
        return Task(check, (Legacy(args.theorem), args.k, args.a, N))
    if check in ("q_recurrence", "d1_reduction"):
        _need(args, "k", "a")
        if not 1 <= args.a <= args.k:
            raise ParamDomain(f"need 1 <= a <= k, got k={args.k}, a={args.a}")
        if check == "q_recurrence":
            return Task(check, (args.k, args.a, M, N))
        return Task(check, (args.k, args.a, args.n_max, M, N))
    if check == "jtp":
        _need(args, "a", "modulus")
        if not 0 < args.a < args.modulus:
            raise ParamDomain(f"need 0 < a < modulus, got a={args.a}, modulus={args.modulus}")
        return Task(check, (args.a, args.modulus, N))
    if check == "pentagonal":
        return Task(check, (N,))
    if check == "matrix_adjugate":
        _need(args, "d", "e")
        if not 1 <= args.e <= args.d or args.n < 0:
            raise ParamDomain(f"need 1 <= e <= d and n >= 0, got d={args.d}, e={args.e}, n={args.n}")
        return Task(check, (args.d, args.e, args.n, construction.Which(args.which), M, N))
    raise UsageError(f"unknown check {check!r}")  # pragma: no cover


def _finish(reports, args, config: dict, out) -> int:
    fmt = JSON if args.json else TEXT
    out.write(emit_report(reports, fmt, config=config, timing=not args.no_timing))
    return EXIT_OK if summarize(reports)["unexpected"] == 0 else EXIT_UNEXPECTED


def _cmd_verify(args, out) -> int:
    if args.order < 1 or (args.xorder is not None and args.xorder < 1):
        raise UsageError("orders must be at least 1")
    task = _verify_task(args)
    config = {"command": "verify", "check": args.check, "order": args.order, "xorder": args.xorder}
    return _finish(run_tasks([task]), args, config, out)


def _cmd_sweep(args, out) -> int:
    jobs = args.jobs if args.jobs is not None else jobs_from_env()
    config = SuiteConfig(
        max_d=args.max_d,
        max_k=args.max_k,
        order_n=args.order,
        order_m=args.xorder,
        n_max_terms=args.n_max,
        brute_n=args.brute_n,
        checks=tuple(dict.fromkeys(args.checks)),
        output=JSON if args.json else TEXT,
        parallel=jobs,
    )
    doc = config.as_json()
    doc.pop("parallel")  # worker count does not change results
    return _finish(sweep(config), args, doc, out)


def _cmd_count(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    c = ConstraintSet(args.pair_bound, args.initial_bound, args.divisor, Parity(args.parity))
    value = brute_count(args.n, None, c) if args.brute else dp_counts(c, args.n)[args.n]
    out.write(f"{value}\n")
    return EXIT_OK


def _cmd_expand(args, out) -> int:
    N = args.order
    if N < 0:
        raise UsageError("--order must be non-negative")
    if args.what == "theta":
        _need(args, "a", "modulus")
        series = theta_sum(args.a, args.modulus, N)
    elif args.what == "product":
        series = product_rhs(_params(args), Variant(args.variant), N)
    elif args.what in ("series-c", "series-t"):
        p = _params(args)
        build = series_C if args.what == "series-c" else series_T
        series = build(p, 0, N, collapse=True) if args.xorder is None else build(p, args.xorder, N)
    else:
        _need(args, "k", "a")
        if not 0 <= args.a <= args.k:
            raise ParamDomain(f"need 0 <= a <= k, got k={args.k}, a={args.a}")
        series = andrews_Q(args.k, args.a, N if args.xorder is None else args.xorder, N)
    out.write(_render_series(series, args.json))
    return EXIT_OK


def _render_series(series, as_json: bool) -> str:
    if isinstance(series, BiSeries):
        rows = {m: series.row(m).coefficient_list(0, series.q_trunc) for m in range(series.x_trunc + 1)}
        if as_json:
            return json.dumps({"x_order": series.x_trunc, "q_order": series.q_trunc, "rows": {str(m): [str(c) for c in r] for m, r in rows.items()}}, indent=2) + "\n"
        return "".join(f"x^{m}: " + " ".join(map(str, r)) + "\n" for m, r in rows.items())
    coeffs = series.coefficient_list(0, series.trunc_order)
    if as_json:
        return json.dumps({"q_order": series.trunc_order, "coefficients": [str(c) for c in coeffs]}, indent=2) + "\n"
    return " ".join(map(str, coeffs)) + "\n"


COMMANDS = {"verify": _cmd_verify, "sweep": _cmd_sweep, "count": _cmd_count, "expand": _cmd_expand}


def dispatch(argv=None, out=None, err=None) -> int:
    """Parse ``argv`` and run the command; returns the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"qgordon: usage error: {exc}\n")
        return EXIT_USAGE
    except (ParamDomain, ValueError, SeriesError) as exc:
        err.write(f"qgordon: invalid parameters: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE


def main() -> None:
    sys.exit(dispatch())
