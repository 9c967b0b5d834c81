"""Step-by-step checks of how the term families are built.

The terms can be derived rather than guessed: one-step relations between
neighbouring residue classes form cyclic linear systems, the systems are
inverted, the resulting recurrences in ``n`` are iterated down to ``n = 0``,
and the two base terms are pinned down by the boundary conditions.  Each
stage is checked here against the closed-form terms at concrete ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .gordon import (
    BRACKET_CANDIDATES,
    DEFAULT_BRACKET,
    Factor,
    GordonParams,
    Piece,
    TermSpec,
    _binom,
    _mono,
    _xq,
    andrews_alpha_spec,
    andrews_beta_spec,
    c_alpha_spec,
    c_beta_spec,
    expand,
    t_alpha_spec,
    t_beta_spec,
)
from .report import FAIL, PASS, CheckReport, Recorder, params_dict
from .series import INFINITE, BiSeries, Monomial, mul, pochhammer


class Which(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"


RELATIONS = ("c_alpha", "c_beta", "t_alpha", "t_beta")


def _params(p: GordonParams, variant=None) -> dict:
    return params_dict(*p.astuple(), variant=variant)


def _expected(p: GordonParams) -> str:
    return PASS if p.valid else FAIL


def _poly(*monos: Monomial) -> TermSpec:
    return TermSpec((Piece(tuple(monos)),))


# -- cyclic matrix systems -------------------------------------------------------


@dataclass(frozen=True)
class MonomialMatrix:
    """A square matrix of Laurent polynomials in ``x`` and ``q``.

    Each entry is a tuple of monomials; the empty tuple is zero.  For ``d >= 2``
    every entry is a single monomial or zero.  In the ``1 x 1`` case the
    diagonal and the wrap-around entry coincide and the entry is a binomial.
    """

    entries: tuple[tuple[tuple[Monomial, ...], ...], ...]

    def __post_init__(self):
        if not self.entries or any(len(row) != len(self.entries) for row in self.entries):
            raise ValueError("matrix must be square and non-empty")

    @property
    def size(self) -> int:
        return len(self.entries)

    def series(self, x_trunc: int, q_trunc: int) -> list[list[BiSeries]]:
        out = []
        for row in self.entries:
            cells = []
            for monos in row:
                s = BiSeries.zero(x_trunc, q_trunc)
                for m in monos:
                    s = s + m.series(x_trunc, q_trunc)
                cells.append(s)
            out.append(cells)
        return out

    def times(self, other: "MonomialMatrix", x_trunc: int, q_trunc: int) -> list[list[BiSeries]]:
        """Matrix product as series; the guard rule keeps every entry exact."""
        a, b = self.series(x_trunc, q_trunc), other.series(x_trunc, q_trunc)
        d = self.size
        return [[sum((mul(a[i][t], b[t][j]) for t in range(1, d)), mul(a[i][0], b[0][j])) for j in range(d)] for i in range(d)]


def _diagonal(which: Which, n: int) -> Monomial:
    """``q^-n`` for the alpha system, ``x q^(n+1)`` for the beta system."""
    return _mono(0, -n) if which is Which.ALPHA else _mono(1, n + 1)


def system_matrix(d: int, n: int, which: Which, corner: int = -1) -> MonomialMatrix:
    """``y`` on the diagonal, ``-1`` below it and ``corner`` in the top-right entry.

    Row ``i`` is the relation between residue classes ``i`` and ``i - 1``.
    Class ``0`` wraps round to ``d - 1``, so the relations themselves put
    ``-1`` in the corner; other values are accepted to show what breaks.
    """
    which = Which(which)
    y = _diagonal(which, n)
    cells = [[[] for _ in range(d)] for _ in range(d)]
    for i in range(d):
        cells[i][i].append(y)
        if i > 0:
            cells[i][i - 1].append(_mono(sign=-1))
    if corner:
        cells[0][d - 1].append(_mono(sign=corner))
    return MonomialMatrix(tuple(tuple(tuple(c) for c in row) for row in cells))


def adjugate_matrix(d: int, n: int, which: Which) -> MonomialMatrix:
    """The claimed inverse with its scalar prefactor removed.

    Entry ``(i, j)`` depends only on ``t = (i - j) mod d``: ``q^(n(t+1))``
    for the alpha system and ``(x q^(n+1))^(d-1-t)`` for the beta system.
    """
    which = Which(which)
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            t = (i - j) % d
            m = _mono(0, n * (t + 1)) if which is Which.ALPHA else _mono(d - 1 - t, (n + 1) * (d - 1 - t))
            row.append((m,))
        rows.append(tuple(row))
    return MonomialMatrix(tuple(rows))


def adjugate_scalar(d: int, n: int, which: Which, x_trunc: int, q_trunc: int) -> BiSeries:
    """``1 - q^(dn)`` (alpha) or ``(x q^(n+1))^d - 1`` (beta)."""
    if Which(which) is Which.ALPHA:
        return BiSeries.one(x_trunc, q_trunc) - BiSeries.monomial(1, 0, d * n, x_trunc, q_trunc)
    return BiSeries.monomial(1, d, d * (n + 1), x_trunc, q_trunc) - BiSeries.one(x_trunc, q_trunc)


def check_matrix_adjugate(d: int, e: int, n: int, which, M: int, N: int, *, corner: int = -1) -> CheckReport:
    """System matrix times the prefactor-free inverse equals the scalar times the identity.

    ``e`` only shapes the right-hand side of the system, not its matrix; it is
    validated and recorded so reports line up with the other checks.
    """
    which = Which(which)
    if not 1 <= e <= d or n < 0:
        raise ValueError(f"need 1 <= e <= d and n >= 0, got d={d}, e={e}, n={n}")
    rec = Recorder()
    # q^-n entries cost n orders under the guard rule
    prod = system_matrix(d, n, which, corner).times(adjugate_matrix(d, n, which), M, N + n)
    scalar = adjugate_scalar(d, n, which, M, N)
    zero = BiSeries.zero(M, N)
    for i in range(d):
        for j in range(d):
            rec.compare(prod[i][j], scalar if i == j else zero, f"entry ({i},{j})", M, N)
    expected = PASS if corner == -1 else FAIL
    # n has no slot of its own in the parameter record; it rides in the variant
    params = params_dict(d=d, e=e, variant=f"{which.value}:n={n}")
    return rec.report("matrix_adjugate", params, (M, N), expected)


# -- one-step relations ----------------------------------------------------------


def _class_exponent(p: GordonParams, f: int) -> int:
    """``dk + d + f - 1`` when ``f <= e``, else ``dk + f - 1``."""
    return p.d * p.k + (p.d if f <= p.e else 0) + f - 1


def _x_power(n: int, p: int) -> Monomial:
    """``(x q^(n+1))^p``."""
    return _mono(p, p * (n + 1))


def _q_power(n: int, p: int) -> Monomial:
    """``(q^-n)^p``."""
    return _mono(0, -n * p)


def relation_sides(p: GordonParams, which: str, n: int, f: int = 1, candidate: str = DEFAULT_BRACKET):
    """Both sides of a one-step relation as term specs.

    ``"c_alpha"`` and ``"c_beta"`` relate classes ``f`` and ``f - 1`` at the
    same ``n``; ``"t_alpha"`` and ``"t_beta"`` express an odd term through an
    even one, with the scalar denominator multiplied across.
    """
    fam = p.family
    d, K = p.d, p.pair_bound
    if which == "c_alpha":
        lhs = c_alpha_spec(fam, f, n).times(_q_power(n, 1)) - c_alpha_spec(fam, f - 1, n)
        rhs = t_beta_spec(fam, n - 1).substitute(1).times(_x_power(n, _class_exponent(p, f)))
    elif which == "c_beta":
        lhs = c_beta_spec(fam, f, n, candidate).times(_x_power(n, 1)) - c_beta_spec(fam, f - 1, n, candidate)
        rhs = t_alpha_spec(fam, n).substitute(1).times(_q_power(n, _class_exponent(p, f)))
    elif which == "t_alpha":
        lhs = t_alpha_spec(fam, n) * _poly(_mono(0, -d * n), _mono(sign=-1))
        rhs = c_beta_spec(fam, p.e, n - 1, candidate).substitute(1).times(_x_power(n, K))
    elif which == "t_beta":
        lhs = t_beta_spec(fam, n) * _poly(_x_power(n, d), _mono(sign=-1))
        rhs = c_alpha_spec(fam, p.e, n).substitute(1).times(_q_power(n, K))
    else:
        raise ValueError(f"unknown relation {which!r}")
    return lhs, rhs


def solved_sides(p: GordonParams, which: str, n: int, f: int, candidate: str = DEFAULT_BRACKET):
    """The cyclic systems solved for class ``f`` in ``0..d-1``, denominators cleared.

    The alpha solution is multiplied by ``(1 - q^(nd))(1 - xq)`` and the beta
    solution by ``((x q^(n+1))^d - 1)(1 - xq)``.
    """
    fam = p.family
    d, k, e = p.d, p.k, p.e
    one_minus_xq = _poly(_mono(), _xq(1, -1))
    if which == "c_alpha":
        if f < e:
            num = ((_xq(e), _xq(d + f, -1), n * (d + f)), (_xq(d + f), _xq(d + e, -1), n * (2 * d + f)))
        elif f == e:
            num = ((_xq(e), _xq(d + e, -1), n * (d + e)),)
        else:
            num = ((_xq(f), _xq(d + e, -1), n * (d + f)), (_xq(e), _xq(f, -1), n * f))
        lhs = c_alpha_spec(fam, f, n) * _poly(_mono(), _mono(0, n * d, -1)) * one_minus_xq
        rhs = t_beta_spec(fam, n - 1).substitute(1).times(_x_power(n, d * k))
    elif which == "c_beta":
        if f < e:
            num = ((_xq(e - f), _xq(d, -1), -n * f), (_mono(), _xq(e - f, -1), -n * (d + f)))
        elif f == e:
            num = ((_mono(), _xq(d, -1), -n * e),)
        else:
            num = ((_mono(), _xq(d - f + e, -1), -n * f), (_xq(d - f + e), _xq(d, -1), -n * (f - d)))
        lhs = c_beta_spec(fam, f, n, candidate) * _poly(_x_power(n, d), _mono(sign=-1)) * one_minus_xq
        rhs = t_alpha_spec(fam, n).substitute(1).times(_q_power(n, d * k))
    else:
        raise ValueError(f"unknown solved form {which!r}")
    poly = tuple(m.qshift(s) for a, b, s in num for m in (a, b))
    return lhs, rhs * _poly(*poly)


def check_simplified_recurrences(p: GordonParams, n_max: int, M: int, N: int, *, candidate: str = DEFAULT_BRACKET) -> CheckReport:
    """The four one-step relations for ``1 <= n <= n_max`` and every class, plus the solved systems."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rec = Recorder()
    for n in range(1, n_max + 1):
        for which in RELATIONS:
            classes = range(1, p.d + 1) if which.startswith("c_") else (None,)
            for f in classes:
                lhs, rhs = relation_sides(p, which, n, f or 1, candidate)
                rec.compare(expand(lhs, M, N), expand(rhs, M, N), f"{which} relation n={n} f={f}", M, N)
        for which in ("c_alpha", "c_beta"):
            for f in range(p.d):
                lhs, rhs = solved_sides(p, which, n, f, candidate)
                rec.compare(expand(lhs, M, N), expand(rhs, M, N), f"{which} solved n={n} f={f}", M, N)
    return rec.report("simplified_recurrences", _params(p, candidate), (M, N), _expected(p))


# -- iterated closed forms --------------------------------------------------------


def _iterated_prefactor(p: GordonParams, n: int, sign: int) -> Monomial:
    K = p.pair_bound
    return _mono(K * n, (n * n + n) * K + p.d * _binom(n), sign * (-1) ** n)


def t0_spec(p: GordonParams) -> TermSpec:
    """``t_alpha_0(x) = ((xq^2)^d; q^2d)_inf / (((xq)^d; q^d)_inf (xq^2; q^2)_inf)``."""
    d = p.d
    return TermSpec(
        (Piece((_mono(),)),),
        (Factor(_mono(d, 2 * d), 2 * d, INFINITE, 1), Factor(_xq(d), d, INFINITE, -1), Factor(_mono(1, 2), 2, INFINITE, -1)),
    )


def _bracket_iterated(p: GordonParams, f: int, n: int, beta: bool) -> tuple[Piece, ...]:
    d, e = p.d, p.e
    den = (Factor(_xq(d), 1, 1, -1),)

    def piece(monos, s):
        return Piece(tuple(m.qshift(s) for m in monos), den)

    if f == e:
        return (Piece((_mono(),)),)
    if not beta and f < e:
        return (piece((_mono(), _xq(d + f - e, -1)), n * (f - e)), piece((_xq(d + f - e), _xq(d, -1)), n * (d + f - e)))
    if not beta:
        return (piece((_xq(f - e), _xq(d, -1)), n * (f - e)), piece((_mono(), _xq(f - e, -1)), n * (f - d - e)))
    if f < e:
        return (piece((_xq(e - f), _xq(d, -1)), n * (e - f)), piece((_mono(), _xq(e - f, -1)), n * (e - d - f)))
    return (piece((_mono(), _xq(d - f + e, -1)), n * (e - f)), piece((_xq(d - f + e), _xq(d, -1)), n * (e - f + d)))


def iterated_spec(p: GordonParams, which: str, n: int, f: int = 1) -> TermSpec:
    """A term written as an explicit prefactor times a base term at a shifted argument."""
    d = p.d
    t0 = t0_spec(p)
    if which in ("t_alpha", "t_beta"):
        sign = 1 if which == "t_alpha" else -1
        common = (
            Factor(_mono(d, 2 * d), 2 * d, n, 1),
            Factor(_mono(0, d), d, n, -1),
            Factor(_mono(d, d * (n + 1)), d, n, -1),
            Factor(_mono(1, 2), 2, n, -1),
        )
        pre = TermSpec((Piece((_iterated_prefactor(p, n, sign),)),), common)
        return pre * t0.substitute(2 * n)
    f = p.family.residue(f)
    if which == "c_alpha":
        # t_beta_0 = -t_alpha_0 at x q^(2n-1); the leading minus cancels it
        common = (
            Factor(_xq(d), 2 * d, n, 1),
            Factor(_mono(0, d), d, n, -1),
            Factor(_mono(d, d * (n + 1)), d, n - 1, -1),
            Factor(_xq(1), 2, n, -1),
        )
        pre = TermSpec(_bracket_iterated(p, f, n, beta=False), common).times(_iterated_prefactor(p, n, 1))
        return pre * t0.substitute(2 * n - 1)
    if which == "c_beta":
        common = (
            Factor(_xq(d), 2 * d, n + 1, 1),
            Factor(_mono(0, d), d, n, -1),
            Factor(_mono(d, d * (n + 1)), d, n + 1, -1),
            Factor(_xq(1), 2, n + 1, -1),
        )
        pre = TermSpec(_bracket_iterated(p, f, n, beta=True), common).times(_iterated_prefactor(p, n, -1))
        return pre * t0.substitute(2 * n + 1)
    raise ValueError(f"unknown term {which!r}")


def defined_spec(p: GordonParams, which: str, n: int, f: int = 1, candidate: str = DEFAULT_BRACKET) -> TermSpec:
    fam = p.family
    if which == "t_alpha":
        return t_alpha_spec(fam, n)
    if which == "t_beta":
        return t_beta_spec(fam, n)
    if which == "c_alpha":
        return c_alpha_spec(fam, f, n)
    return c_beta_spec(fam, f, n, candidate)


def _iterated_recorder(p: GordonParams, n_max: int, M: int, N: int, candidate: str) -> Recorder:
    rec = Recorder()
    for n in range(n_max + 1):
        for which in RELATIONS:
            classes = range(1, p.d + 1) if which.startswith("c_") else (1,)
            for f in classes:
                got = expand(iterated_spec(p, which, n, f), M, N)
                want = expand(defined_spec(p, which, n, f, candidate), M, N)
                rec.compare(got, want, f"{which} iterated n={n} f={f}", M, N)
    return rec


def check_iterated_forms(p: GordonParams, n_max: int, M: int, N: int) -> CheckReport:
    """Iterated closed forms against the defining formulas for ``0 <= n <= n_max``.

    Both bracket candidates are tried; the variant records the ones that
    agree, and the check fails unless the default reading is among them.
    """
    outcomes = {c: _iterated_recorder(p, n_max, M, N, c) for c in BRACKET_CANDIDATES}
    chosen = tuple(c for c, r in outcomes.items() if r.mismatch is None)
    rec = outcomes[DEFAULT_BRACKET]
    label = "=".join(chosen) if chosen else "none"
    return rec.report("iterated_forms", _params(p, label), (M, N), _expected(p))


# -- initial conditions ----------------------------------------------------------


def matching_braces(p: GordonParams, n: int) -> tuple[TermSpec, TermSpec]:
    """The two bracketed combinations that must agree term by term."""
    d, e = p.d, p.e
    den = (Factor(_xq(d), 1, 1, -1),)
    left = TermSpec(
        (
            Piece((_mono(0, -n * e), _xq(d - e, -1).qshift(-n * e)), den),
            Piece((_xq(d - e).qshift(n * (d - e)), _xq(d, -1).qshift(n * (d - e))), den),
        )
    )
    right = TermSpec(
        (
            Piece((_xq(e).qshift(n * e), _xq(d, -1).qshift(n * e)), den),
            Piece((_mono(0, n * (e - d)), _xq(e, -1).qshift(n * (e - d))), den),
        )
    )
    return left, right


def matching_sides(p: GordonParams, n: int) -> tuple[TermSpec, TermSpec]:
    """The full matching display, with ``t_beta_0 = -t_alpha_0`` on the left."""
    d = p.d
    left_brace, right_brace = matching_braces(p, n)
    t0 = t0_spec(p)
    lhs = (-t0.substitute(2 * n - 1)) * left_brace
    ratio = TermSpec(
        (Piece((_mono(), _mono(d, (2 * n + 1) * d, -1))),),
        (
            Factor(_mono(d, 2 * n * d), 1, 1, -1),
            Factor(_mono(d, (2 * n + 1) * d), 1, 1, -1),
            Factor(_mono(1, 2 * n + 1), 1, 1, -1),
        ),
    )
    rhs = (-t0.substitute(2 * n + 1)) * ratio * right_brace
    return lhs, rhs


def check_initial_conditions(p: GordonParams, n_max: int, M: int, N: int) -> CheckReport:
    """Base terms from the product, ``t_alpha_0(0) = 1``, ``t_beta_0 = -t_alpha_0`` and the matching display.

    The matching holds only for ``e = d`` or ``2e = d``; for other ``e`` the
    expected status is FAIL.
    """
    rec = Recorder()
    d = p.d
    fam = p.family
    product = pochhammer(_mono(d, 2 * d), 2 * d, INFINITE, M, N)
    product = mul(product, pochhammer(_xq(d), d, INFINITE, M, N, invert=True))
    product = mul(product, pochhammer(_mono(1, 2), 2, INFINITE, M, N, invert=True))
    ta0 = expand(t_alpha_spec(fam, 0), M, N)
    rec.compare(ta0, product, "t_alpha_0 vs product", M, N)
    rec.compare(ta0.at_x_zero(), BiSeries.one(0, N).row(0), "t_alpha_0 at x=0", q_upto=N)
    rec.compare(expand(t_beta_spec(fam, 0), M, N), -ta0, "t_beta_0 vs -t_alpha_0", M, N)
    for n in range(n_max + 1):
        left, right = matching_braces(p, n)
        rec.compare(expand(left, M, N), expand(right, M, N), f"braces n={n}", M, N)
        lhs, rhs = matching_sides(p, n)
        rec.compare(expand(lhs, M, N), expand(rhs, M, N), f"matching display n={n}", M, N)
    return rec.report("initial_conditions", _params(p), (M, N), _expected(p))


# -- the d = 1 reduction -----------------------------------------------------------


def check_d1_reduction(k: int, a: int, n_max: int, M: int, N: int) -> CheckReport:
    """For ``d = 1`` the four term families collapse onto Andrews' ``alpha_n`` and ``beta_n``.

    Also checks the two termwise relations behind the ``Q_{k,a}`` recurrence.
    """
    if not 1 <= a <= k:
        raise ValueError(f"need 1 <= a <= k, got k={k}, a={a}")
    p = GordonParams.relax(1, k - 1, 1, a - 1, 1)
    fam = p.family
    rec = Recorder()
    for n in range(n_max + 1):
        alpha = expand(andrews_alpha_spec(k, n), M, N)
        beta = expand(andrews_beta_spec(k, n), M, N)
        rec.compare(alpha, -beta, f"alpha = -beta n={n}", M, N)
        for spec, want, label in (
            (c_alpha_spec(fam, 1, n), alpha, "c_alpha"),
            (c_beta_spec(fam, 1, n), beta, "c_beta"),
            (t_alpha_spec(fam, n), alpha, "t_alpha"),
            (t_beta_spec(fam, n), beta, "t_beta"),
        ):
            rec.compare(expand(spec, M, N), want, f"{label} n={n}", M, N)
        lhs = andrews_alpha_spec(k, n).times(_q_power(n, a)) - andrews_alpha_spec(k, n).times(_q_power(n, a - 1))
        rhs = andrews_beta_spec(k, n - 1).substitute(1).times(_x_power(n, k - a + 1)).times(_xq(a - 1))
        rec.compare(expand(lhs, M, N), expand(rhs, M, N), f"alpha difference n={n}", M, N)
        lhs = andrews_beta_spec(k, n).times(_x_power(n, a)) - andrews_beta_spec(k, n).times(_x_power(n, a - 1))
        rhs = andrews_alpha_spec(k, n).substitute(1).times(_q_power(n, k - a + 1)).times(_xq(a - 1))
        rec.compare(expand(lhs, M, N), expand(rhs, M, N), f"beta difference n={n}", M, N)
    return rec.report("d1_reduction", params_dict(1, k, None, a, None, "q-series"), (M, N))
