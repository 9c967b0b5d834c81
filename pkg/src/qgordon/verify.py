"""Exact checks of the counting identities and the series that prove them.

Every check returns a :class:`~qgordon.report.CheckReport`.  Mismatches are
recorded, never raised, so a sweep always runs to completion.
"""

from __future__ import annotations

from .gordon import (
    BRACKET_CANDIDATES,
    DEFAULT_BRACKET,
    Family,
    GordonParams,
    Legacy,
    TermKind,
    Variant,
    _mono,
    _xq,
    expand,
    legacy_domain,
    legacy_rhs,
    product_rhs,
    series_C_exponent,
    series_T_exponent,
    term_spec,
    triple_product,
)
from .partitions import ConstraintSet, Parity, brute_table, dp_genfun
from .report import FAIL, PASS, CheckReport, Recorder, params_dict
from .series import INFINITE, BiSeries, LaurentSeries, evaluate_x, qpochhammer, theta_sum


def constraint_set(p: GordonParams, variant: Variant = Variant.EVEN) -> ConstraintSet:
    """Frequency conditions counted by the even family (``da + f``) or the overline family (``da``)."""
    if Variant(variant) is Variant.EVEN:
        return ConstraintSet(p.pair_bound, p.initial_bound, p.d, Parity.EVEN_PARTS)
    return ConstraintSet(p.pair_bound, p.overline_bound, p.d, Parity.ODD_PARTS)


def gordon_params(p: GordonParams, variant=None, **extra) -> dict:
    out = params_dict(*p.astuple(), variant=None if variant is None else Variant(variant).value)
    out.update(extra)
    return out


def _expected(p: GordonParams) -> str:
    return PASS if p.valid else FAIL


# -- counted side against the series ------------------------------------------


def check_counts_vs_series(p: GordonParams, variant, M: int, N: int, *, candidate: str = DEFAULT_BRACKET, expected: str | None = None) -> CheckReport:
    """Bivariate generating function of the counts against ``C`` or ``T``, exact to ``(M, N)``."""
    variant = Variant(variant)
    rec = Recorder()
    counted = dp_genfun(constraint_set(p, variant), N, M)
    if variant is Variant.EVEN:
        series = series_C_exponent(p.family, p.initial_bound, M, N, candidate=candidate)
    else:
        series = series_T_exponent(p.family, p.overline_bound, M, N)
    rec.compare(counted, series, "counts vs series", M, N)
    params = gordon_params(p, variant)
    return rec.report("counts_vs_series", params, (M, N), expected or _expected(p))


def check_theorem(p: GordonParams, variant, N: int, *, method: str = "pochhammer", expected: str | None = None) -> CheckReport:
    """Counted side at ``x = 1`` against the product formula, exact to ``q^N``."""
    variant = Variant(variant)
    rec = Recorder()
    counted = evaluate_x(dp_genfun(constraint_set(p, variant), N), 0)
    rec.compare(counted, product_rhs(p, variant, N, method), "counts vs product", q_upto=N)
    return rec.report("theorem", gordon_params(p, variant), (None, N), expected or _expected(p))


def check_oracle(p: GordonParams, variant, n_max: int) -> CheckReport:
    """The transfer DP against brute-force enumeration for every ``(m, n)`` with ``n <= n_max``."""
    c = constraint_set(p, variant)
    rec = Recorder()
    dp = dp_genfun(c, n_max, n_max)
    table = brute_table(c, n_max)
    brute = BiSeries(table, n_max, n_max)
    rec.compare(dp, brute, "dp vs brute force", n_max, n_max)
    return rec.report("oracle", gordon_params(p, variant), (n_max, n_max))


# -- count recurrences -----------------------------------------------------------


def _counts(c: ConstraintSet, n_max: int):
    table = brute_table(c, n_max)

    def b(m: int, n: int) -> int:
        if m < 0 or n < 0:
            return 0
        return table.get((m, n), 0)

    return b


def _overline_after_erasing(p: GordonParams) -> int:
    """Initial bound of the overline partition left after erasing the 1's."""
    d, k, a = p.d, p.k, p.a
    return d * k - d * a + d if p.f <= p.e else d * k - d * a


def check_count_recurrences(p: GordonParams, n_max: int) -> CheckReport:
    """Both erase-the-ones recurrences and the boundary conditions on brute-force counts."""
    if n_max > 25:
        raise ValueError("brute-force recurrences are limited to n_max <= 25")
    d, k, e, a, f = p.astuple()
    K = p.pair_bound
    E = p.initial_bound
    rec = Recorder()
    b = _counts(ConstraintSet(K, E, d, Parity.EVEN_PARTS), n_max)
    b_prev = _counts(ConstraintSet(K, E - 1, d, Parity.EVEN_PARTS), n_max)
    bbar_to = _counts(ConstraintSet(K, _overline_after_erasing(p), d, Parity.ODD_PARTS), n_max)
    bbar_hi = _counts(ConstraintSet(K, d * a + d, d, Parity.ODD_PARTS), n_max)
    bbar = _counts(ConstraintSet(K, d * a, d, Parity.ODD_PARTS), n_max)
    b_to = _counts(ConstraintSet(K, d * k - d * a + e, d, Parity.EVEN_PARTS), n_max)
    zero_even = _counts(ConstraintSet(K, 0, d, Parity.EVEN_PARTS), n_max)
    zero_odd = _counts(ConstraintSet(K, 0, d, Parity.ODD_PARTS), n_max)
    for m in range(n_max + 1):
        for n in range(n_max + 1):
            lhs, rhs = b(m, n) - b_prev(m, n), bbar_to(m - (E - 1), n - m)
            if lhs != rhs:
                rec.fail(n, lhs, rhs, "even-to-odd count recurrence", m)
            lhs, rhs = bbar_hi(m, n) - bbar(m, n), b_to(m - d * a, n - m)
            if lhs != rhs:
                rec.fail(n, lhs, rhs, "odd-to-even count recurrence", m)
            if (m == 0) != (n == 0):
                for fn, label in ((b, "even"), (bbar, "overline")):
                    if fn(m, n):
                        rec.fail(n, fn(m, n), 0, f"{label} count outside m, n > 0", m)
            for fn, label in ((zero_even, "even"), (zero_odd, "overline")):
                if fn(m, n):
                    rec.fail(n, fn(m, n), 0, f"{label} count with initial bound 0", m)
    for fn, label in ((b, "even"), (bbar, "overline")):
        if fn(0, 0) != 1:
            rec.fail(0, fn(0, 0), 1, f"{label} empty partition", 0)
    return rec.report("count_recurrences", gordon_params(p), (n_max, n_max))


# -- functional equations --------------------------------------------------------


def _term(kind: TermKind, fam: Family, n: int, E: int, M: int, N: int, *, shift: int = 0, lead=None, candidate: str = DEFAULT_BRACKET) -> BiSeries:
    spec = term_spec(kind, fam, n, E, candidate=candidate).substitute(shift, False)
    if lead is not None:
        spec = spec.times(lead)
    return expand(spec, M, N)


def term_identity_sides(p: GordonParams, which: str, n: int, M: int, N: int, candidate: str = DEFAULT_BRACKET):
    """Left and right sides of one termwise difference identity at index ``n``.

    ``which`` is one of ``"alpha_even"``, ``"beta_even"``, ``"alpha_odd"`` and
    ``"beta_odd"``: the difference of an even (resp. odd) term at consecutive
    initial bounds, against a shifted odd (resp. even) term.
    """
    fam = p.family
    d, k, e, a = p.d, p.k, p.e, p.a
    E = p.initial_bound
    Ebar = _overline_after_erasing(p)
    c = candidate
    if which == "alpha_even":
        lhs = _term(TermKind.C_ALPHA, fam, n, E, M, N, candidate=c) - _term(TermKind.C_ALPHA, fam, n, E - 1, M, N, candidate=c)
        rhs = _term(TermKind.T_BETA, fam, n - 1, Ebar, M, N, shift=1, lead=_xq(E - 1))
    elif which == "beta_even":
        lhs = _term(TermKind.C_BETA, fam, n, E, M, N, candidate=c) - _term(TermKind.C_BETA, fam, n, E - 1, M, N, candidate=c)
        rhs = _term(TermKind.T_ALPHA, fam, n, Ebar, M, N, shift=1, lead=_xq(E - 1))
    elif which == "alpha_odd":
        lhs = _term(TermKind.T_ALPHA, fam, n, d * a + d, M, N) - _term(TermKind.T_ALPHA, fam, n, d * a, M, N)
        rhs = _term(TermKind.C_BETA, fam, n - 1, d * k - d * a + e, M, N, shift=1, lead=_xq(d * a), candidate=c)
    elif which == "beta_odd":
        lhs = _term(TermKind.T_BETA, fam, n, d * a + d, M, N) - _term(TermKind.T_BETA, fam, n, d * a, M, N)
        rhs = _term(TermKind.C_ALPHA, fam, n, d * k - d * a + e, M, N, shift=1, lead=_xq(d * a), candidate=c)
    else:
        raise ValueError(f"unknown term identity {which!r}")
    return lhs, rhs


TERM_IDENTITIES = ("alpha_even", "beta_even", "alpha_odd", "beta_odd")


def _series_equations(rec: Recorder, p: GordonParams, M: int, N: int, candidate: str) -> None:
    fam = p.family
    d, k, e, a = p.d, p.k, p.e, p.a
    E = p.initial_bound
    lhs = series_C_exponent(fam, E, M, N, candidate=candidate) - series_C_exponent(fam, E - 1, M, N, candidate=candidate)
    rhs = series_T_exponent(fam, _overline_after_erasing(p), M, N, shift=1).shift(E - 1, E - 1)
    rec.compare(lhs, rhs, "C difference vs shifted T", M, N)
    lhs = series_T_exponent(fam, d * a + d, M, N) - series_T_exponent(fam, d * a, M, N)
    rhs = series_C_exponent(fam, d * k - d * a + e, M, N, shift=1, candidate=candidate).shift(d * a, d * a)
    rec.compare(lhs, rhs, "T difference vs shifted C", M, N)


def _boundaries(rec: Recorder, p: GordonParams, M: int, N: int, n_max: int, candidate: str) -> None:
    fam = p.family
    for n in range(n_max + 1):
        for kinds, label in (((TermKind.C_ALPHA, TermKind.C_BETA), "even"), ((TermKind.T_ALPHA, TermKind.T_BETA), "odd")):
            total = sum((_term(kind, fam, n, 0, M, N, candidate=candidate) for kind in kinds), BiSeries.zero(M, N))
            rec.compare(total, BiSeries.zero(M, N), f"{label} terms at initial bound 0, n={n}", M, N)
    zero = BiSeries.zero(M, N)
    rec.compare(series_C_exponent(fam, 0, M, N, candidate=candidate), zero, "C at initial bound 0", M, N)
    rec.compare(series_T_exponent(fam, 0, M, N), zero, "T at initial bound 0", M, N)
    one = LaurentSeries.one(N)
    rec.compare(series_C_exponent(fam, p.initial_bound, M, N, candidate=candidate).at_x_zero(), one, "C at x=0", q_upto=N)
    rec.compare(series_T_exponent(fam, p.overline_bound, M, N).at_x_zero(), one, "T at x=0", q_upto=N)


def check_functional_eqs(p: GordonParams, M: int, N: int, n_max: int, *, candidate: str = DEFAULT_BRACKET) -> CheckReport:
    """Series-level equations, the four termwise identities for ``n <= n_max`` and the boundaries."""
    rec = Recorder()
    _series_equations(rec, p, M, N, candidate)
    for n in range(n_max + 1):
        for which in TERM_IDENTITIES:
            lhs, rhs = term_identity_sides(p, which, n, M, N, candidate)
            rec.compare(lhs, rhs, f"{which} term identity at n={n}", M, N)
    _boundaries(rec, p, M, N, n_max, candidate)
    return rec.report("functional_eqs", gordon_params(p, None), (M, N), _expected(p))


def bracket_outcomes(p: GordonParams, M: int, N: int, n_max: int) -> dict[str, Recorder]:
    """For each bracket candidate, the counted side and the termwise identities it feeds."""
    out = {}
    for cand in BRACKET_CANDIDATES:
        rec = Recorder()
        counted = dp_genfun(constraint_set(p, Variant.EVEN), N, M)
        rec.compare(counted, series_C_exponent(p.family, p.initial_bound, M, N, candidate=cand), "counts vs C", M, N)
        for n in range(n_max + 1):
            for which in ("beta_even", "alpha_odd"):
                lhs, rhs = term_identity_sides(p, which, n, M, N, cand)
                rec.compare(lhs, rhs, f"{which} term identity at n={n}", M, N)
        out[cand] = rec
    return out


def selected_brackets(outcomes: dict[str, Recorder]) -> tuple[str, ...]:
    return tuple(c for c, rec in outcomes.items() if rec.mismatch is None)


def check_bracket(p: GordonParams, M: int, N: int, n_max: int) -> CheckReport:
    """Arbitrate between the two readings of the ``c_beta`` bracket.

    The report's variant records the surviving candidates (``"B"``, or
    ``"A=B"`` when the parameters cannot tell them apart).  The check fails
    when the default reading does not survive.
    """
    rec = Recorder()
    outcomes = bracket_outcomes(p, M, N, n_max)
    chosen = selected_brackets(outcomes)
    if DEFAULT_BRACKET not in chosen:
        rec.mismatch = outcomes[DEFAULT_BRACKET].mismatch
        rec.notes.extend(outcomes[DEFAULT_BRACKET].notes)
    label = "=".join(chosen) if chosen else "none"
    return rec.report("bracket_arbitration", gordon_params(p, None) | {"variant": label}, (M, N))


# -- earlier identities and the product machinery --------------------------------


def legacy_constraints(theorem: Legacy, k: int, a: int) -> ConstraintSet:
    theorem = Legacy(theorem)
    if theorem is Legacy.T2_1:
        return ConstraintSet(k, a)
    if theorem is Legacy.T2_2_OVERLINE:
        return ConstraintSet(k, a, 2, Parity.ODD_PARTS)
    return ConstraintSet(k, a, 2, Parity.EVEN_PARTS)


def legacy_as_params(theorem: Legacy, k: int, a: int) -> tuple[GordonParams, Variant]:
    """The same frequency conditions written as ``(d, k, e, a, f)``.

    The result may fall outside the validated domain (``a = 0`` or ``k < d``),
    so it is built with the relaxed constructor.
    """
    theorem = Legacy(theorem)
    if theorem is Legacy.T2_1:
        return GordonParams.relax(1, k - 1, 1, a - 1, 1), Variant.EVEN
    if theorem is Legacy.T2_2_OVERLINE:
        return GordonParams.relax(2, (k - 1) // 2, 1, a // 2, 1), Variant.ODD_OVERLINE
    e = 2 if k % 2 == 0 else 1
    if theorem is Legacy.T2_2:
        f = e
    else:
        f = 1 if k % 2 == 0 else 2
    return GordonParams.relax(2, (k - e) // 2, e, (a - f) // 2, f), Variant.EVEN


def check_legacy(theorem: Legacy, k: int, a: int, N: int) -> CheckReport:
    """Counts against an earlier identity's product, and that product against the general one.

    Raises ParamDomain when ``(k, a)`` violates the theorem's congruences.
    """
    theorem = Legacy(theorem)
    legacy_domain(theorem, k, a)
    rec = Recorder()
    rhs = legacy_rhs(theorem, k, a, N)
    counted = evaluate_x(dp_genfun(legacy_constraints(theorem, k, a), N), 0)
    rec.compare(counted, rhs, "counts vs earlier product", q_upto=N)
    p, variant = legacy_as_params(theorem, k, a)
    if constraint_set(p, variant) != legacy_constraints(theorem, k, a):
        raise AssertionError(f"parameter translation of {theorem.value} is inconsistent")
    rec.compare(product_rhs(p, variant, N), rhs, "general product vs earlier product", q_upto=N)
    params = params_dict(p.d, k, p.e, a, p.f, theorem.value)
    return rec.report("legacy", params, (None, N))


def check_q_recurrence(k: int, a: int, M: int, N: int) -> CheckReport:
    """Andrews' ``Q_{k,a}`` series: its recurrence, boundaries, and agreement with ``d = 1``."""
    from .gordon import andrews_Q

    rec = Recorder()
    lhs = andrews_Q(k, a, M, N) - andrews_Q(k, a - 1, M, N)
    rhs = andrews_Q(k, k - a + 1, M, N, shift=1).shift(a - 1, a - 1)
    rec.compare(lhs, rhs, "Q recurrence", M, N)
    rec.compare(andrews_Q(k, 0, M, N), BiSeries.zero(M, N), "Q at a=0", M, N)
    rec.compare(andrews_Q(k, a, M, N).at_x_zero(), LaurentSeries.one(N), "Q at x=0", q_upto=N)
    fam = Family(1, k - 1, 1)
    rec.compare(series_C_exponent(fam, a, M, N), andrews_Q(k, a, M, N), "Q vs d=1 C", M, N)
    rec.compare(series_T_exponent(fam, a, M, N), andrews_Q(k, a, M, N), "Q vs d=1 T", M, N)
    return rec.report("q_recurrence", params_dict(1, k, None, a, None, Legacy.Q_SERIES.value), (M, N))


def check_jtp(a: int, modulus: int, N: int) -> CheckReport:
    """The bilateral theta sum against the triple product."""
    rec = Recorder()
    rec.compare(theta_sum(a, modulus, N), triple_product(a, modulus, N), "theta sum vs product", q_upto=N)
    return rec.report("jtp", params_dict(a=a, k=modulus, variant="theta"), (None, N))


def pentagonal_series(N: int) -> LaurentSeries:
    """``sum_j (-1)^j q^(j(3j-1)/2)`` over all integers ``j``, written down directly."""
    coeffs: dict[int, int] = {}
    j = 0
    while j * (3 * j - 1) // 2 <= N:
        for g in {j * (3 * j - 1) // 2, j * (3 * j + 1) // 2}:
            if g <= N:
                coeffs[g] = (-1) ** j
        j += 1
    return LaurentSeries(coeffs, N)


def check_pentagonal(N: int) -> CheckReport:
    rec = Recorder()
    rec.compare(qpochhammer(1, 1, INFINITE, N), pentagonal_series(N), "(q;q)_inf vs pentagonal numbers", q_upto=N)
    return rec.report("pentagonal", params_dict(), (None, N))


def negative_control(d: int, k: int, e: int, a: int, f: int, N: int) -> CheckReport:
    """Product formula at a pair bound outside the validated domain; failure is expected.

    A valid parameter set may be passed as the contrasting control, in which
    case PASS is expected.
    """
    p = GordonParams.relax(d, k, e, a, f)
    r = check_theorem(p, Variant.EVEN, N)
    r.check_id = "negative_control"
    return r
