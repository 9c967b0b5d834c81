"""The analytic side: term families, the series C and T, and product formulas.

A parameter family ``(d, k, e)`` fixes the pair bound ``K = dk + e`` and the
modulus ``2dk + 2e + d``.  Four term families live on it:

* ``c_alpha[f]_n`` and ``c_beta[f]_n`` for the even family (``d | f_{2i}``),
  where ``f`` is a residue class mod ``d`` written in ``1..d``;
* ``t_alpha_n`` and ``t_beta_n = -t_alpha_n`` for the odd family.

A generating series with initial bound ``E`` is the sum over ``n`` of the
"attached" terms ``alpha_n * q^(-nE) + beta_n * (x q^(n+1))^E``.  None of the
terms depend on ``E``, which is why one set of terms serves every initial
bound at once.

Every object is first written down as a :class:`TermSpec` (monomials and
Pochhammer factors).  Substitutions ``x -> x q^c`` and ``x -> q^c`` act on
that description, never on a truncated series.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from functools import lru_cache

from .series import (
    INFINITE,
    BiSeries,
    LaurentSeries,
    Monomial,
    apply_pochhammer,
    qpochhammer,
    theta_sum,
)


class ParamDomain(ValueError):
    """Parameters outside the domain where a formula is asserted."""


class TermKind(enum.Enum):
    C_ALPHA = "c_alpha"
    C_BETA = "c_beta"
    T_ALPHA = "t_alpha"
    T_BETA = "t_beta"


class Variant(enum.Enum):
    EVEN = "even"
    ODD_OVERLINE = "odd"


# Two readings of the c_beta bracket for f < e.  "B" uses (xq)^(e-f) - (xq)^d
# in the first numerator; "A" repeats 1 - (xq)^(e-f) in both numerators.
BRACKET_CANDIDATES = ("A", "B")
DEFAULT_BRACKET = "B"


@dataclass(frozen=True)
class GordonParams:
    """``(d, k, e, a, f)``: pair bound ``dk + e``, initial bound ``da + f`` (or ``da``).

    The validated domain is ``1 <= a, d <= k``, ``1 <= f <= d`` and
    ``e in {d, d/2}``.  ``relaxed=True`` only keeps the structural bounds
    (``1 <= e, f <= d``, ``a >= 0``) for negative controls and boundary
    instances.
    """

    d: int
    k: int
    e: int
    a: int
    f: int
    relaxed: bool = field(default=False, compare=False)

    def __post_init__(self):
        d, k, e, a, f = self.d, self.k, self.e, self.a, self.f
        if d < 1 or k < 0 or not 1 <= e <= d or not 1 <= f <= d or a < 0:
            raise ParamDomain(f"structurally invalid parameters {self.astuple()}")
        if self.relaxed:
            return
        if not (1 <= a <= k and d <= k):
            raise ParamDomain(f"need 1 <= a, d <= k, got {self.astuple()}")
        if not (e == d or 2 * e == d):
            raise ParamDomain(f"need e = d or 2e = d, got d={d}, e={e}")

    @classmethod
    def relax(cls, d: int, k: int, e: int, a: int, f: int) -> "GordonParams":
        return cls(d, k, e, a, f, relaxed=True)

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.d, self.k, self.e, self.a, self.f)

    @property
    def valid(self) -> bool:
        try:
            GordonParams(*self.astuple())
        except ParamDomain:
            return False
        return True

    @property
    def family(self) -> "Family":
        return Family(self.d, self.k, self.e)

    @property
    def pair_bound(self) -> int:
        return self.d * self.k + self.e

    @property
    def initial_bound(self) -> int:
        return self.d * self.a + self.f

    @property
    def overline_bound(self) -> int:
        return self.d * self.a

    @property
    def modulus(self) -> int:
        return 2 * self.d * self.k + 2 * self.e + self.d


@dataclass(frozen=True)
class Family:
    d: int
    k: int
    e: int

    @property
    def K(self) -> int:
        return self.d * self.k + self.e

    @property
    def modulus(self) -> int:
        return 2 * self.d * self.k + 2 * self.e + self.d

    def residue(self, E: int) -> int:
        """Class of initial bound ``E`` mod d, written in ``1..d`` (so ``E = 0`` gives ``d``)."""
        return (E - 1) % self.d + 1


def valid_params(max_d: int = 4, max_k: int = 4):
    """All validated ``GordonParams`` with ``d <= max_d`` and ``k <= max_k`` in a fixed order."""
    out = []
    for d in range(1, max_d + 1):
        for k in range(d, max_k + 1):
            for e in sorted({d, d // 2} - {0}):
                if not (e == d or 2 * e == d):
                    continue
                for a in range(1, k + 1):
                    for f in range(1, d + 1):
                        out.append(GordonParams(d, k, e, a, f))
    return out


# -- symbolic term descriptions ----------------------------------------------


@dataclass(frozen=True)
class Factor:
    """``(base; q^step)_count`` raised to ``power`` (+1 or -1).

    A negative count follows the usual convention
    ``(a; q)_{-m} = 1 / prod_{i=1..m} (1 - a q^(-i))``.
    """

    base: Monomial
    step: int
    count: int | None
    power: int = 1

    def substitute(self, shift: int, collapse: bool) -> "Factor":
        return replace(self, base=self.base.substitute(shift, collapse))


@dataclass(frozen=True)
class Piece:
    numerator: tuple[Monomial, ...]
    factors: tuple[Factor, ...] = ()

    def substitute(self, shift: int, collapse: bool) -> "Piece":
        return Piece(
            tuple(m.substitute(shift, collapse) for m in self.numerator),
            tuple(f.substitute(shift, collapse) for f in self.factors),
        )


@dataclass(frozen=True)
class TermSpec:
    """``prod(common) * sum(pieces)``; each piece is a Laurent polynomial times local factors."""

    pieces: tuple[Piece, ...]
    common: tuple[Factor, ...] = ()

    def substitute(self, shift: int = 0, collapse: bool = False) -> "TermSpec":
        if shift == 0 and not collapse:
            return self
        return TermSpec(
            tuple(p.substitute(shift, collapse) for p in self.pieces),
            tuple(f.substitute(shift, collapse) for f in self.common),
        )

    def times(self, mono: Monomial) -> "TermSpec":
        return TermSpec(tuple(Piece(tuple(m * mono for m in p.numerator), p.factors) for p in self.pieces), self.common)

    def times_poly(self, monos) -> "TermSpec":
        """Multiply by a Laurent polynomial given as a sequence of monomials."""
        return self * TermSpec((Piece(tuple(monos)),))

    def over(self, *factors: "Factor") -> "TermSpec":
        """Attach further common factors."""
        return TermSpec(self.pieces, self.common + tuple(factors))

    def __mul__(self, other: "TermSpec") -> "TermSpec":
        pieces = tuple(
            Piece(tuple(m * n for m in p.numerator for n in r.numerator), p.factors + r.factors)
            for p in self.pieces
            for r in other.pieces
        )
        return TermSpec(pieces, self.common + other.common)

    def __neg__(self) -> "TermSpec":
        return self.times(Monomial(-1, 0, 0))

    def __add__(self, other: "TermSpec") -> "TermSpec":
        if self.common == other.common:
            return TermSpec(self.pieces + other.pieces, self.common)
        # push each side's common factors down into its pieces
        left = tuple(Piece(p.numerator, self.common + p.factors) for p in self.pieces)
        right = tuple(Piece(p.numerator, other.common + p.factors) for p in other.pieces)
        return TermSpec(left + right)

    def __sub__(self, other: "TermSpec") -> "TermSpec":
        return self + (-other)

    def lowest_qdeg(self) -> int | None:
        degs = [m.qdeg for p in self.pieces for m in p.numerator]
        return min(degs) if degs else None

    def lowest_xdeg(self) -> int | None:
        degs = [m.xdeg for p in self.pieces for m in p.numerator]
        return min(degs) if degs else None

    def expand(self, x_trunc: int, q_trunc: int) -> BiSeries:
        """Exact expansion to ``(x_trunc, q_trunc)``; factor bases must have non-negative q-degree."""
        qlow, xlow = self.lowest_qdeg(), self.lowest_xdeg()
        if qlow is None or qlow > q_trunc or xlow > x_trunc:
            return BiSeries.zero(x_trunc, q_trunc)
        Mw, Nw = x_trunc - xlow, q_trunc - qlow
        common = BiSeries.one(Mw, Nw)
        for fac in self.common:
            common = _apply(common, fac)
        total = BiSeries.zero(x_trunc, q_trunc)
        for piece in self.pieces:
            body = common
            for fac in piece.factors:
                body = _apply(body, fac)
            for m in piece.numerator:
                total = total + body.shift(m.xdeg, m.qdeg).scale(m.sign).truncate(x_trunc, q_trunc)
        return total

    def expand_q(self, q_trunc: int) -> LaurentSeries:
        """Expansion of a term with no x left (after collapsing)."""
        if any(m.xdeg for p in self.pieces for m in p.numerator):
            raise ValueError("term still depends on x; collapse it first")
        return self.expand(0, q_trunc).row(0)


def _apply(s: BiSeries, fac: Factor) -> BiSeries:
    if fac.count is not None and fac.count < 0:
        for i in range(1, -fac.count + 1):
            s = _apply(s, Factor(fac.base.qshift(-fac.step * i), fac.step, 1, -fac.power))
        return s
    if fac.base.qdeg < 0 or (fac.base.qdeg == 0 and fac.base.xdeg == 0 and fac.power < 0):
        raise ValueError(f"factor base {fac.base} would need a Laurent expansion")
    return apply_pochhammer(s, fac.base, fac.step, fac.count, invert=fac.power < 0)


def _mono(xdeg: int = 0, qdeg: int = 0, sign: int = 1) -> Monomial:
    return Monomial(sign, xdeg, qdeg)


def _xq(p: int, sign: int = 1) -> Monomial:
    return Monomial(sign, p, p)


def _over_one_minus_xq_d(d: int) -> tuple[Factor, ...]:
    return (Factor(_xq(d), 1, 1, -1),)


def _bracket(d: int, first: tuple[Monomial, ...], second_shift: int, second: tuple[Monomial, ...]) -> tuple[Piece, ...]:
    """``first/(1-(xq)^d) + q^second_shift * second/(1-(xq)^d)``."""
    den = _over_one_minus_xq_d(d)
    return (Piece(first, den), Piece(tuple(m.qshift(second_shift) for m in second), den))


def _binom(n: int) -> int:
    return n * (n + 1) // 2


def _common_c(fam: Family, n: int) -> tuple[Factor, ...]:
    d = fam.d
    return (
        Factor(_xq(d), 2 * d, INFINITE, 1),  # ((xq)^d; q^2d)_inf
        Factor(_mono(0, d), d, n, -1),  # 1/(q^d; q^d)_n
        Factor(_mono(d, d * (n + 1)), d, INFINITE, -1),  # 1/((xq^(n+1))^d; q^d)_inf
        Factor(_mono(1, 1), 2, INFINITE, -1),  # 1/(xq; q^2)_inf
    )


def _common_t(fam: Family, n: int) -> tuple[Factor, ...]:
    d = fam.d
    return (
        Factor(_mono(d, 2 * d), 2 * d, INFINITE, 1),  # ((xq^2)^d; q^2d)_inf
        Factor(_mono(0, d), d, n, -1),
        Factor(_mono(d, d * (n + 1)), d, INFINITE, -1),
        Factor(_mono(1, 2), 2, INFINITE, -1),  # 1/(xq^2; q^2)_inf
    )


def c_alpha_spec(fam: Family, f: int, n: int) -> TermSpec:
    """``c_alpha[f]_n(x; q)`` with ``f`` read mod d in ``1..d``."""
    if n < 0:
        return TermSpec(())
    d, e = fam.d, fam.e
    f = fam.residue(f)
    lead = _mono(fam.K * n, fam.modulus * _binom(n) + n * (f - e), (-1) ** n)
    if f < e:
        pieces = _bracket(d, (_mono(), _xq(d + f - e, -1)), n * d, (_xq(d + f - e), _xq(d, -1)))
    elif f == e:
        pieces = (Piece((_mono(),)),)
    else:
        pieces = _bracket(d, (_xq(f - e), _xq(d, -1)), -n * d, (_mono(), _xq(f - e, -1)))
    return TermSpec(pieces, _common_c(fam, n)).times(lead)


def c_beta_spec(fam: Family, f: int, n: int, candidate: str = DEFAULT_BRACKET) -> TermSpec:
    """``c_beta[f]_n(x; q)`` including its leading minus sign."""
    if n < 0:
        return TermSpec(())
    if candidate not in BRACKET_CANDIDATES:
        raise ValueError(f"unknown bracket candidate {candidate!r}")
    d, e = fam.d, fam.e
    f = fam.residue(f)
    lead = _mono(fam.K * n, fam.modulus * _binom(n) + n * (e - f), -((-1) ** n))
    if f < e:
        if candidate == "B":
            first = (_xq(e - f), _xq(d, -1))
        else:
            first = (_mono(), _xq(e - f, -1))
        pieces = _bracket(d, first, -n * d, (_mono(), _xq(e - f, -1)))
    elif f == e:
        pieces = (Piece((_mono(),)),)
    else:
        pieces = _bracket(d, (_mono(), _xq(d - f + e, -1)), n * d, (_xq(d - f + e), _xq(d, -1)))
    return TermSpec(pieces, _common_c(fam, n)).times(lead)


def t_alpha_spec(fam: Family, n: int) -> TermSpec:
    if n < 0:
        return TermSpec(())
    lead = _mono(fam.K * n, fam.modulus * _binom(n), (-1) ** n)
    return TermSpec((Piece((_mono(),)),), _common_t(fam, n)).times(lead)


def t_beta_spec(fam: Family, n: int) -> TermSpec:
    return t_alpha_spec(fam, n).times(_mono(sign=-1))


def attachment(kind: TermKind, n: int, E: int) -> Monomial:
    """``(q^-n)^E`` for alpha kinds, ``(x q^(n+1))^E`` for beta kinds."""
    if kind in (TermKind.C_ALPHA, TermKind.T_ALPHA):
        return _mono(0, -n * E)
    return _mono(E, (n + 1) * E)


def term_spec(kind: TermKind, fam: Family, n: int, E: int, *, attached: bool = True, candidate: str = DEFAULT_BRACKET) -> TermSpec:
    """Term of ``kind`` at index ``n`` for initial bound ``E`` (the class of ``f`` is read off ``E``)."""
    kind = TermKind(kind)
    if kind is TermKind.C_ALPHA:
        spec = c_alpha_spec(fam, fam.residue(E), n)
    elif kind is TermKind.C_BETA:
        spec = c_beta_spec(fam, fam.residue(E), n, candidate)
    elif kind is TermKind.T_ALPHA:
        spec = t_alpha_spec(fam, n)
    else:
        spec = t_beta_spec(fam, n)
    return spec.times(attachment(kind, n, E)) if attached else spec


def valuation_bound(fam: Family, n: int, E: int) -> int:
    """Lower bound on the q-valuation of every attached term at index ``n``."""
    return fam.modulus * _binom(n) - n * (E + fam.d)


def _last_index(fam: Family, E: int, x_trunc: int | None, q_trunc: int) -> int:
    n = 0
    while True:
        growing = fam.modulus * (n + 1) > E + fam.d
        if growing and valuation_bound(fam, n, E) > q_trunc:
            return n - 1
        if x_trunc is not None and fam.K * n > x_trunc:
            return n - 1
        n += 1


@lru_cache(maxsize=4096)
def _expand_cached(spec: TermSpec, x_trunc: int, q_trunc: int) -> BiSeries:
    return spec.expand(x_trunc, q_trunc)


def expand(spec: TermSpec, x_trunc: int, q_trunc: int, *, shift: int = 0, collapse: bool = False):
    """Expand a term spec after the substitution ``x -> x q^shift`` (``x -> q^shift`` if collapsing)."""
    spec = spec.substitute(shift, collapse)
    if collapse:
        return _expand_cached(spec, 0, q_trunc).row(0)
    return _expand_cached(spec, x_trunc, q_trunc)


def build_term(kind: TermKind, p: GordonParams, n: int, x_trunc: int, q_trunc: int, *, shift: int = 0, collapse: bool = False, candidate: str = DEFAULT_BRACKET):
    """One attached term of C (initial bound ``da + f``) or T (initial bound ``da``)."""
    kind = TermKind(kind)
    E = p.initial_bound if kind in (TermKind.C_ALPHA, TermKind.C_BETA) else p.overline_bound
    spec = term_spec(kind, p.family, n, E, candidate=candidate)
    return expand(spec, x_trunc, q_trunc, shift=shift, collapse=collapse)


def _series(kinds, fam: Family, E: int, x_trunc: int, q_trunc: int, shift: int, collapse: bool, candidate: str):
    if E < 0:
        raise ParamDomain("initial bound must be non-negative")
    last = _last_index(fam, E, None if collapse else x_trunc, q_trunc)
    total = LaurentSeries.zero(q_trunc) if collapse else BiSeries.zero(x_trunc, q_trunc)
    for n in range(last + 1):
        bound = valuation_bound(fam, n, E)
        for kind in kinds:
            spec = term_spec(kind, fam, n, E, candidate=candidate)
            term = expand(spec, x_trunc, q_trunc, shift=shift, collapse=collapse)
            v = term.valuation if collapse else term.q_valuation
            if v is not None and v < bound:
                raise AssertionError(f"{kind.value}_{n} has q-valuation {v} below bound {bound}")
            total = total + term
    return total


def series_C_exponent(fam: Family, E: int, x_trunc: int, q_trunc: int, *, shift: int = 0, collapse: bool = False, candidate: str = DEFAULT_BRACKET):
    """``C_{dk+e, E}(x q^shift; q)`` for any initial bound ``E >= 0``."""
    return _series((TermKind.C_ALPHA, TermKind.C_BETA), fam, E, x_trunc, q_trunc, shift, collapse, candidate)


def series_T_exponent(fam: Family, E: int, x_trunc: int, q_trunc: int, *, shift: int = 0, collapse: bool = False):
    """``T_{dk+e, E}(x q^shift; q)``; ``E`` is normally a multiple of d."""
    return _series((TermKind.T_ALPHA, TermKind.T_BETA), fam, E, x_trunc, q_trunc, shift, collapse, DEFAULT_BRACKET)


def series_C(p: GordonParams, x_trunc: int, q_trunc: int, *, shift: int = 0, collapse: bool = False, candidate: str = DEFAULT_BRACKET):
    return series_C_exponent(p.family, p.initial_bound, x_trunc, q_trunc, shift=shift, collapse=collapse, candidate=candidate)


def series_T(p: GordonParams, x_trunc: int, q_trunc: int, *, shift: int = 0, collapse: bool = False):
    return series_T_exponent(p.family, p.overline_bound, x_trunc, q_trunc, shift=shift, collapse=collapse)


# -- product sides -------------------------------------------------------------


def triple_product(z: int, modulus: int, N: int, method: str = "pochhammer") -> LaurentSeries:
    """``(q^z, q^(modulus-z), q^modulus; q^modulus)_inf``."""
    if z % modulus == 0:
        return LaurentSeries.zero(N)
    if method == "theta":
        return theta_sum(z, modulus, N)
    if not 0 < z < modulus:
        raise ParamDomain(f"triple product needs 0 < z < modulus, got z={z}")
    out = qpochhammer(z, modulus, INFINITE, N)
    out = out * qpochhammer(modulus - z, modulus, INFINITE, N)
    return out * qpochhammer(modulus, modulus, INFINITE, N)


def _ratio(num: dict[int, int], d: int, N: int) -> LaurentSeries:
    """Polynomial ``num`` divided by ``1 - q^d``."""
    return LaurentSeries(num, N).div_binomial(1, d)


def product_rhs(p: GordonParams, variant: Variant, N: int, method: str = "pochhammer") -> LaurentSeries:
    """Infinite-product side for the even family (three f-cases) or the overline family."""
    variant = Variant(variant)
    d, k, e, a, f = p.astuple()
    mod = p.modulus
    if variant is Variant.ODD_OVERLINE:
        pre = qpochhammer(d, 2 * d, INFINITE, N, invert=True) * qpochhammer(2, 2, INFINITE, N, invert=True)
        return pre * triple_product(d * a, mod, N, method)
    pre = qpochhammer(2 * d, 2 * d, INFINITE, N, invert=True) * qpochhammer(1, 2, INFINITE, N, invert=True)
    main = triple_product(d * a + e, mod, N, method)
    if f == e:
        return pre * main
    if f < e:
        s = d - e + f
        other = triple_product(d * (a - 1) + e, mod, N, method)
        body = _ratio({0: 1, s: -1}, d, N) * main + _ratio({s: 1, d: -1}, d, N) * other
    else:
        s = f - e
        other = triple_product(d * (a + 1) + e, mod, N, method)
        body = _ratio({s: 1, d: -1}, d, N) * main + _ratio({0: 1, s: -1}, d, N) * other
    return pre * body


# -- earlier identities ----------------------------------------------------------


class Legacy(enum.Enum):
    T2_1 = "gordon"
    T2_2 = "andrews"
    T2_2_OVERLINE = "andrews-overline"
    T2_3 = "kim-yee"
    Q_SERIES = "q-series"


def legacy_domain(theorem: Legacy, k: int, a: int) -> None:
    theorem = Legacy(theorem)
    if not 1 <= a <= k:
        raise ParamDomain(f"need 1 <= a <= k, got k={k}, a={a}")
    if theorem is Legacy.T2_2 and (a - k) % 2:
        raise ParamDomain("Andrews' parity identity needs a = k mod 2")
    if theorem is Legacy.T2_2_OVERLINE and (k % 2 == 0 or a % 2):
        raise ParamDomain("the overline identity needs k odd and a even")
    if theorem is Legacy.T2_3 and (a - k) % 2 == 0:
        raise ParamDomain("the Kim-Yee identity needs a != k mod 2")


def legacy_rhs(theorem: Legacy, k: int, a: int, N: int, x_trunc: int | None = None):
    """Right-hand side of one of the earlier identities (LaurentSeries) or Andrews' ``Q_{k,a}(x; q)``."""
    theorem = Legacy(theorem)
    if theorem is Legacy.Q_SERIES:
        if not 0 <= a <= k:
            raise ParamDomain(f"need 0 <= a <= k, got k={k}, a={a}")
        return andrews_Q(k, a, N if x_trunc is None else x_trunc, N)
    legacy_domain(theorem, k, a)
    if theorem is Legacy.T2_1:
        return triple_product(a, 2 * k + 1, N) * qpochhammer(1, 1, INFINITE, N, invert=True)
    minus_q_odd = qpochhammer(1, 2, INFINITE, N, sign=-1)
    if theorem is Legacy.T2_2:
        pre = minus_q_odd * qpochhammer(2, 2, INFINITE, N, invert=True)
        return pre * triple_product(a, 2 * k + 2, N)
    if theorem is Legacy.T2_2_OVERLINE:
        pre = qpochhammer(1, 2, INFINITE, N, sign=-1, invert=True) * qpochhammer(1, 1, INFINITE, N, invert=True)
        return pre * triple_product(a, 2 * k + 2, N)
    pre = minus_q_odd * qpochhammer(2, 2, INFINITE, N, invert=True)
    body = triple_product(a + 1, 2 * k + 2, N) + triple_product(a - 1, 2 * k + 2, N).shift(1).truncate(N)
    return (pre * body).div_binomial(-1, 1)


def andrews_alpha_spec(k: int, n: int) -> TermSpec:
    """``alpha_n(x; q) = (-1)^n x^(kn) q^((2k+1) n(n+1)/2) / ((q;q)_n (xq^(n+1);q)_inf)``."""
    if n < 0:
        return TermSpec(())
    lead = _mono(k * n, (2 * k + 1) * _binom(n), (-1) ** n)
    common = (Factor(_mono(0, 1), 1, n, -1), Factor(_mono(1, n + 1), 1, INFINITE, -1))
    return TermSpec((Piece((lead,)),), common)


def andrews_beta_spec(k: int, n: int) -> TermSpec:
    return andrews_alpha_spec(k, n).times(_mono(sign=-1))


def andrews_Q(k: int, a: int, x_trunc: int, q_trunc: int, *, shift: int = 0) -> BiSeries:
    """``Q_{k,a}(x q^shift; q) = sum_n alpha_n q^(-na) + beta_n (x q^(n+1))^a``."""
    total = BiSeries.zero(x_trunc, q_trunc)
    n = 0
    while True:
        if (2 * k + 1) * (n + 1) > a and (2 * k + 1) * _binom(n) - n * a > q_trunc:
            break
        if k * n > x_trunc:
            break
        alpha = andrews_alpha_spec(k, n).times(_mono(0, -n * a))
        beta = andrews_beta_spec(k, n).times(_mono(a, (n + 1) * a))
        total = total + expand(alpha, x_trunc, q_trunc, shift=shift) + expand(beta, x_trunc, q_trunc, shift=shift)
        n += 1
    return total
