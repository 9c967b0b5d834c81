"""Exact truncated Laurent series in q and bivariate series in (x, q).

Coefficients are Python integers held in numpy object arrays, so nothing
ever overflows.  Every series carries an absolute truncation order: the
coefficients of all exponents up to and including that order are known
exactly, nothing is known beyond it.

Bivariate series are power series in x (degrees ``0..M``) whose coefficients
are Laurent series in q sharing one truncation order ``N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "INFINITE",
    "SeriesError",
    "NotAUnit",
    "DivergentProduct",
    "NonTruncating",
    "UnsafeEvaluation",
    "LaurentSeries",
    "BiSeries",
    "Monomial",
    "add",
    "mul",
    "invert_unit",
    "pochhammer",
    "apply_pochhammer",
    "qpochhammer",
    "theta_sum",
    "evaluate_x",
]

INFINITE = None


class SeriesError(ArithmeticError):
    pass


class NotAUnit(SeriesError):
    pass


class DivergentProduct(SeriesError):
    pass


class NonTruncating(SeriesError):
    pass


class UnsafeEvaluation(SeriesError):
    pass


def _zeros(n: int) -> np.ndarray:
    return np.zeros(max(n, 0), dtype=object)


class LaurentSeries:
    """A truncated Laurent series ``sum c_j q^j + O(q^(N+1))``.

    Storage is dense from the valuation up to the last nonzero coefficient.
    Instances are immutable.
    """

    __slots__ = ("_lo", "_c", "_trunc")

    def __init__(self, coeffs: Mapping[int, int] | None = None, trunc: int = 0):
        coeffs = coeffs or {}
        keep = {e: int(c) for e, c in coeffs.items() if c and e <= trunc}
        if keep:
            lo, hi = min(keep), max(keep)
            arr = _zeros(hi - lo + 1)
            for e, c in keep.items():
                arr[e - lo] = c
        else:
            lo, arr = 0, _zeros(0)
        self._set(lo, arr, trunc)

    def _set(self, lo: int, arr: np.ndarray, trunc: int) -> None:
        trunc = int(trunc)
        if lo > trunc:
            arr = arr[:0]
        elif lo + len(arr) - 1 > trunc:
            arr = arr[: trunc - lo + 1]
        if len(arr):
            nz = np.flatnonzero(arr != 0)
            if len(nz) == 0:
                arr, lo = arr[:0], 0
            else:
                first, last = int(nz[0]), int(nz[-1])
                arr = arr[first : last + 1]
                lo += first
        else:
            lo = 0
        self._lo = lo
        self._c = arr
        self._trunc = trunc

    @classmethod
    def _from_array(cls, lo: int, arr: np.ndarray, trunc: int) -> "LaurentSeries":
        s = cls.__new__(cls)
        s._set(lo, arr, trunc)
        return s

    @classmethod
    def from_list(cls, coeffs: Sequence[int], trunc: int | None = None, lo: int = 0):
        """Series with ``coeffs[i]`` at exponent ``lo + i``; default truncation is the last index."""
        arr = np.array([int(c) for c in coeffs], dtype=object)
        if trunc is None:
            trunc = lo + len(coeffs) - 1
        return cls._from_array(lo, arr, trunc)

    @classmethod
    def zero(cls, trunc: int) -> "LaurentSeries":
        return cls._from_array(0, _zeros(0), trunc)

    @classmethod
    def one(cls, trunc: int) -> "LaurentSeries":
        return cls.monomial(1, 0, trunc)

    @classmethod
    def monomial(cls, coeff: int, exp: int, trunc: int) -> "LaurentSeries":
        return cls._from_array(exp, np.array([int(coeff)], dtype=object), trunc)

    # -- inspection -------------------------------------------------------

    @property
    def trunc_order(self) -> int:
        return self._trunc

    @property
    def valuation(self) -> int | None:
        return self._lo if len(self._c) else None

    @property
    def degree(self) -> int | None:
        return self._lo + len(self._c) - 1 if len(self._c) else None

    def is_zero(self) -> bool:
        return len(self._c) == 0

    @property
    def coeffs(self) -> dict[int, int]:
        return {self._lo + i: int(c) for i, c in enumerate(self._c) if c}

    def __getitem__(self, exp: int) -> int:
        if exp > self._trunc:
            raise IndexError(f"q^{exp} lies beyond truncation order {self._trunc}")
        i = exp - self._lo
        if 0 <= i < len(self._c):
            return int(self._c[i])
        return 0

    def coefficient_list(self, start: int = 0, stop: int | None = None) -> list[int]:
        """Coefficients of ``q^start .. q^stop`` (``stop`` defaults to the truncation order)."""
        stop = self._trunc if stop is None else stop
        return [self[e] for e in range(start, stop + 1)]

    def _low_bound(self) -> int:
        # smallest exponent that may carry a nonzero coefficient
        return self._lo if len(self._c) else self._trunc + 1

    # -- arithmetic -------------------------------------------------------

    def truncate(self, trunc: int) -> "LaurentSeries":
        if trunc > self._trunc:
            raise ValueError(f"cannot raise truncation {self._trunc} to {trunc}")
        return LaurentSeries._from_array(self._lo, self._c, trunc)

    def shift(self, exp: int) -> "LaurentSeries":
        """Multiply by ``q^exp`` exactly; the truncation order moves with it."""
        return LaurentSeries._from_array(self._lo + exp, self._c, self._trunc + exp)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries._from_array(self._lo, -self._c, self._trunc)

    def __add__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        if isinstance(other, int):
            other = LaurentSeries.monomial(other, 0, self._trunc)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = min(self._trunc, other._trunc)
        if not len(other._c):
            return self.truncate(trunc)
        if not len(self._c):
            return other.truncate(trunc)
        lo = min(self._lo, other._lo)
        hi = max(self._lo + len(self._c), other._lo + len(other._c))
        arr = _zeros(hi - lo)
        arr[self._lo - lo : self._lo - lo + len(self._c)] += self._c
        arr[other._lo - lo : other._lo - lo + len(other._c)] += other._c
        return LaurentSeries._from_array(lo, arr, trunc)

    __radd__ = __add__

    def __sub__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentSeries":
        return (-self) + other

    def scale(self, c: int) -> "LaurentSeries":
        return LaurentSeries._from_array(self._lo, self._c * int(c), self._trunc)

    def __mul__(self, other: "LaurentSeries | int") -> "LaurentSeries":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        trunc = min(self._trunc + other._low_bound(), other._trunc + self._low_bound())
        if not len(self._c) or not len(other._c):
            return LaurentSeries.zero(trunc)
        # only the part of each operand that can reach exponent <= trunc matters
        a = self._c[: max(trunc - self._lo - other._lo + 1, 0)]
        b = other._c[: max(trunc - self._lo - other._lo + 1, 0)]
        if not len(a) or not len(b):
            return LaurentSeries.zero(trunc)
        return LaurentSeries._from_array(self._lo + other._lo, np.convolve(a, b), trunc)

    __rmul__ = __mul__

    def mul_binomial(self, c: int, j: int) -> "LaurentSeries":
        """Multiply by ``1 - c q^j``."""
        return self - self.shift(j).scale(c)

    def div_binomial(self, c: int, j: int) -> "LaurentSeries":
        """Divide by ``1 - c q^j`` for ``j > 0``: solves ``t = s + c q^j t``."""
        if j <= 0:
            return self * invert_unit(LaurentSeries({0: 1, j: -c}, self._trunc + max(0, -j)))
        if not len(self._c):
            return self
        lo, trunc = self._lo, self._trunc
        t = _zeros(trunc - lo + 1)
        t[: len(self._c)] = self._c
        for start in range(j, len(t), j):
            stop = min(start + j, len(t))
            t[start:stop] += c * t[start - j : stop - j]
        return LaurentSeries._from_array(lo, t, trunc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self._trunc == other._trunc
            and self._lo == other._lo
            and len(self._c) == len(other._c)
            and bool(np.all(self._c == other._c))
        )

    def __hash__(self) -> int:
        return hash((self._trunc, self._lo, tuple(self._c)))

    def first_mismatch(self, other: "LaurentSeries", upto: int | None = None):
        """Lowest exponent where the two series differ, as ``(exp, mine, theirs)``, or None."""
        upto = min(self._trunc, other._trunc) if upto is None else upto
        if upto > min(self._trunc, other._trunc):
            raise ValueError("comparison window exceeds a truncation order")
        diff = self.truncate(upto) - other.truncate(upto)
        if diff.is_zero():
            return None
        e = diff.valuation
        return e, self[e], other[e]

    def __repr__(self) -> str:
        return _format_terms(self.coeffs.items(), lambda e: _qpow(e)) + f" + O(q^{self._trunc + 1})"


def _qpow(e: int) -> str:
    return "" if e == 0 else ("q" if e == 1 else f"q^{e}")


def _format_terms(items: Iterable[tuple[object, int]], fmt) -> str:
    out = []
    for key, c in items:
        body = fmt(key)
        if body:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            piece = mag + body
        else:
            piece = str(abs(c))
        out.append(("- " if c < 0 else "+ ") + piece)
    if not out:
        return "0"
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[1:]


class BiSeries:
    """Power series in x with LaurentSeries coefficients, truncated at ``x^M`` and ``q^N``."""

    __slots__ = ("_rows", "_M", "_N")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None, x_trunc: int = 0, q_trunc: int = 0):
        by_m: dict[int, dict[int, int]] = {}
        for (m, j), c in (coeffs or {}).items():
            if m < 0:
                raise ValueError("x-degrees must be non-negative")
            if m <= x_trunc:
                by_m.setdefault(m, {})[j] = c
        rows = [LaurentSeries(by_m.get(m), q_trunc) for m in range(x_trunc + 1)]
        self._set(rows, x_trunc, q_trunc)

    def _set(self, rows: Sequence[LaurentSeries], M: int, N: int) -> None:
        rows = list(rows[: M + 1])
        rows = [r if r.trunc_order == N else r.truncate(N) for r in rows]
        while rows and rows[-1].is_zero():
            rows.pop()
        self._rows = tuple(rows)
        self._M = M
        self._N = N

    @classmethod
    def from_rows(cls, rows: Sequence[LaurentSeries], x_trunc: int, q_trunc: int | None = None) -> "BiSeries":
        if q_trunc is None:
            q_trunc = min((r.trunc_order for r in rows), default=0)
        s = cls.__new__(cls)
        s._set(rows, x_trunc, q_trunc)
        return s

    @classmethod
    def zero(cls, x_trunc: int, q_trunc: int) -> "BiSeries":
        return cls.from_rows([], x_trunc, q_trunc)

    @classmethod
    def one(cls, x_trunc: int, q_trunc: int) -> "BiSeries":
        return cls.from_rows([LaurentSeries.one(q_trunc)], x_trunc, q_trunc)

    @classmethod
    def monomial(cls, coeff: int, xdeg: int, qdeg: int, x_trunc: int, q_trunc: int) -> "BiSeries":
        rows = [LaurentSeries.zero(q_trunc)] * xdeg + [LaurentSeries.monomial(coeff, qdeg, q_trunc)]
        return cls.from_rows(rows, x_trunc, q_trunc)

    @classmethod
    def from_laurent(cls, s: LaurentSeries, x_trunc: int = 0) -> "BiSeries":
        return cls.from_rows([s], x_trunc, s.trunc_order)

    # -- inspection -------------------------------------------------------

    @property
    def x_trunc(self) -> int:
        return self._M

    @property
    def q_trunc(self) -> int:
        return self._N

    @property
    def by_x_degree(self) -> tuple[LaurentSeries, ...]:
        return tuple(self.row(m) for m in range(self._M + 1))

    def row(self, m: int) -> LaurentSeries:
        if m > self._M:
            raise IndexError(f"x^{m} lies beyond truncation order {self._M}")
        if 0 <= m < len(self._rows):
            return self._rows[m]
        return LaurentSeries.zero(self._N)

    def __getitem__(self, key: tuple[int, int]) -> int:
        m, j = key
        return self.row(m)[j]

    def is_zero(self) -> bool:
        return not self._rows

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return {(m, j): c for m, r in enumerate(self._rows) for j, c in r.coeffs.items()}

    @property
    def q_valuation(self) -> int | None:
        vals = [r.valuation for r in self._rows if not r.is_zero()]
        return min(vals) if vals else None

    @property
    def x_valuation(self) -> int | None:
        for m, r in enumerate(self._rows):
            if not r.is_zero():
                return m
        return None

    def _qlow(self) -> int:
        v = self.q_valuation
        return self._N + 1 if v is None else v

    def _xlow(self) -> int:
        v = self.x_valuation
        return self._M + 1 if v is None else v

    # -- arithmetic -------------------------------------------------------

    def truncate(self, x_trunc: int | None = None, q_trunc: int | None = None) -> "BiSeries":
        M = self._M if x_trunc is None else x_trunc
        N = self._N if q_trunc is None else q_trunc
        if M > self._M or N > self._N:
            raise ValueError("cannot raise a truncation order")
        return BiSeries.from_rows(self._rows, M, N)

    def shift(self, xdeg: int = 0, qdeg: int = 0) -> "BiSeries":
        """Multiply by ``x^xdeg q^qdeg`` exactly; both truncation orders move with it."""
        if xdeg < 0:
            raise ValueError("x-shift must be non-negative")
        rows = [LaurentSeries.zero(self._N + qdeg)] * xdeg + [r.shift(qdeg) for r in self._rows]
        return BiSeries.from_rows(rows, self._M + xdeg, self._N + qdeg)

    def scale(self, c: int) -> "BiSeries":
        return BiSeries.from_rows([r.scale(c) for r in self._rows], self._M, self._N)

    def __neg__(self) -> "BiSeries":
        return self.scale(-1)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        if not isinstance(other, BiSeries):
            return NotImplemented
        M, N = min(self._M, other._M), min(self._N, other._N)
        rows = [self.row(m) + other.row(m) for m in range(M + 1)]
        return BiSeries.from_rows(rows, M, N)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other: "BiSeries | int") -> "BiSeries":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, BiSeries):
            return NotImplemented
        return mul(self, other)

    def mul_binomial(self, c: int, p: int, j: int) -> "BiSeries":
        """Multiply by ``1 - c x^p q^j``."""
        return self - self.shift(p, j).scale(c).truncate(x_trunc=self._M) if p <= self._M else self

    def div_binomial(self, c: int, p: int, j: int) -> "BiSeries":
        """Divide by ``1 - c x^p q^j``."""
        if j < 0 or (p == 0 and j == 0):
            # exact polynomial, so its truncation can be padded freely
            binom = BiSeries({(0, 0): 1, (p, j): -c}, self._M, self._N + 2 * abs(j))
            return self * invert_unit(binom)
        if p == 0:
            return BiSeries.from_rows([r.div_binomial(c, j) for r in self._rows], self._M, self._N)
        rows = list(self.by_x_degree)
        for m in range(p, self._M + 1):
            prev = rows[m - p]
            if not prev.is_zero():
                rows[m] = rows[m] + prev.shift(j).scale(c)
        return BiSeries.from_rows(rows, self._M, self._N)

    def at_x_zero(self) -> LaurentSeries:
        return self.row(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self._M == other._M and self._N == other._N and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._M, self._N, self._rows))

    def first_mismatch(self, other: "BiSeries", x_upto: int | None = None, q_upto: int | None = None):
        """Lowest ``(m, j, mine, theirs)`` in (x-degree, q-exponent) order where the series differ."""
        M = min(self._M, other._M) if x_upto is None else x_upto
        N = min(self._N, other._N) if q_upto is None else q_upto
        for m in range(M + 1):
            hit = self.row(m).first_mismatch(other.row(m), N)
            if hit is not None:
                return (m,) + hit
        return None

    def __repr__(self) -> str:
        def fmt(key):
            m, j = key
            xs = "" if m == 0 else ("x" if m == 1 else f"x^{m}")
            qs = _qpow(j)
            return "*".join(p for p in (xs, qs) if p)

        items = sorted(self.coeffs.items())
        return _format_terms(items, fmt) + f" + O(x^{self._M + 1}, q^{self._N + 1})"


def add(s: BiSeries, t: BiSeries) -> BiSeries:
    return s + t


def mul(s, t):
    """Cauchy product.

    The q-truncation follows ``min(N_s + val_t, N_t + val_s)`` with ``val`` the
    lowest q-exponent over all x-degrees, so the result is exact to its order.
    """
    if isinstance(s, LaurentSeries) and isinstance(t, LaurentSeries):
        return s * t
    if isinstance(s, LaurentSeries):
        s = BiSeries.from_laurent(s, t.x_trunc)
    if isinstance(t, LaurentSeries):
        t = BiSeries.from_laurent(t, s.x_trunc)
    N = min(s._N + t._qlow(), t._N + s._qlow())
    M = min(s._M + t._xlow(), t._M + s._xlow(), max(s._M, t._M))
    rows = []
    for m in range(M + 1):
        acc = LaurentSeries.zero(N)
        for i in range(max(0, m - len(t._rows) + 1), min(m, len(s._rows) - 1) + 1):
            a, b = s._rows[i], t._rows[m - i]
            if a.is_zero() or b.is_zero():
                continue
            acc = acc + a * b
        rows.append(acc)
    return BiSeries.from_rows(rows, M, N)


def invert_unit(s):
    """Multiplicative inverse of a unit.

    The lowest term (x-degree 0 first, then lowest q-exponent) must be
    ``+1`` or ``-1`` times a power of q.  The result satisfies
    ``mul(s, t) == 1`` up to the guard-adjusted truncation.
    """
    if isinstance(s, LaurentSeries):
        return _invert_laurent(s)
    s0 = s.row(0)
    t0 = _invert_laurent(s0)
    rows = [t0]
    for m in range(1, s.x_trunc + 1):
        acc = None
        for i in range(1, m + 1):
            si = s.row(i)
            if si.is_zero():
                continue
            term = si * rows[m - i]
            acc = term if acc is None else acc + term
        rows.append(LaurentSeries.zero(t0.trunc_order) if acc is None else -(t0 * acc))
    N = min(r.trunc_order for r in rows)
    return BiSeries.from_rows(rows, s.x_trunc, N)


def _invert_laurent(s: LaurentSeries) -> LaurentSeries:
    if s.is_zero():
        raise NotAUnit("zero series has no inverse")
    v = s.valuation
    lead = s[v]
    if lead not in (1, -1):
        raise NotAUnit(f"lowest coefficient {lead} is not +1 or -1")
    # s = lead q^v (1 + r); inverse = lead q^-v (1 + r)^-1, known to N - 2v
    width = s.trunc_order - v
    a = np.array([lead * s[v + i] for i in range(width + 1)], dtype=object)
    t = _zeros(width + 1)
    t[0] = 1
    for i in range(1, width + 1):
        t[i] = -np.dot(a[1 : i + 1], t[i - 1 :: -1][:i]) if i else 0
    return LaurentSeries._from_array(-v, t * lead, width - v)


@dataclass(frozen=True)
class Monomial:
    """A signed monomial ``sign * x^xdeg * q^qdeg``."""

    sign: int = 1
    xdeg: int = 0
    qdeg: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("monomial sign must be +1 or -1")
        if self.xdeg < 0:
            raise ValueError("x-degree must be non-negative")

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.xdeg + other.xdeg, self.qdeg + other.qdeg)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.sign, self.xdeg, self.qdeg)

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative powers are not monomials in x")
        return Monomial(self.sign**k, self.xdeg * k, self.qdeg * k)

    def qshift(self, j: int) -> "Monomial":
        return Monomial(self.sign, self.xdeg, self.qdeg + j)

    def substitute(self, shift: int = 0, collapse: bool = False) -> "Monomial":
        """Apply ``x -> x q^shift`` (or ``x -> q^shift`` when collapsing)."""
        q = self.qdeg + shift * self.xdeg
        return Monomial(self.sign, 0 if collapse else self.xdeg, q)

    def series(self, x_trunc: int, q_trunc: int) -> BiSeries:
        return BiSeries.monomial(self.sign, self.xdeg, self.qdeg, x_trunc, q_trunc)


def pochhammer(a: Monomial, step: int, count: int | None, x_trunc: int, q_trunc: int, *, invert: bool = False) -> BiSeries:
    """``prod_{i<count} (1 - a q^(step*i))`` (or its reciprocal), exact to ``(x_trunc, q_trunc)``.

    ``count=INFINITE`` multiplies factors until their q-exponent passes the
    truncation order, which needs ``step > 0`` and ``a.qdeg >= 0``.
    """
    return apply_pochhammer(BiSeries.one(x_trunc, q_trunc), a, step, count, invert=invert)


def apply_pochhammer(s: BiSeries, a: Monomial, step: int, count: int | None, *, invert: bool = False) -> BiSeries:
    """Multiply ``s`` (q-valuation >= 0) by ``(a; q^step)_count`` or divide by it."""
    if count is INFINITE:
        if step <= 0 or a.qdeg < 0:
            raise DivergentProduct(f"factors 1 - {a} q^({step}i) never leave the window")
    elif count < 0:
        raise ValueError("count must be non-negative")
    if a.xdeg > s.x_trunc:
        return s
    i = 0
    while count is INFINITE or i < count:
        j = a.qdeg + step * i
        if count is INFINITE and j > s.q_trunc:
            break
        if a.xdeg == 0 and j == 0:
            if invert:
                raise NotAUnit(f"factor 1 - ({a.sign}) is not a unit")
            if a.sign == 1:
                return BiSeries.zero(s.x_trunc, s.q_trunc)
        s = s.div_binomial(a.sign, a.xdeg, j) if invert else s.mul_binomial(a.sign, a.xdeg, j)
        i += 1
    return s


def qpochhammer(qdeg: int, step: int, count: int | None, q_trunc: int, *, sign: int = 1, invert: bool = False) -> LaurentSeries:
    """Univariate ``(sign*q^qdeg; q^step)_count`` as a LaurentSeries."""
    return pochhammer(Monomial(sign, 0, qdeg), step, count, 0, q_trunc, invert=invert).row(0)


def theta_sum(exponent_a: int, modulus_M: int, N: int) -> LaurentSeries:
    """``sum_{n in Z} (-1)^n q^(M*n*(n-1)/2 + a*n)`` truncated at ``q^N``."""
    a, M = exponent_a, modulus_M
    if M <= 0 or not 0 < a < M:
        raise NonTruncating(f"need 0 < a < M, got a={a}, M={M}")
    coeffs: dict[int, int] = {}
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            e = M * n * (n - 1) // 2 + a * n
            if e > N:
                break
            coeffs[e] = coeffs.get(e, 0) + (-1) ** abs(n)
            n += direction
    return LaurentSeries(coeffs, N)


def evaluate_x(s: BiSeries, c: int) -> LaurentSeries:
    """Substitute ``x -> q^c`` and sum over x-degrees.

    For ``c = 0`` every x-degree ``m`` must have q-valuation at least ``m``
    (true of partition generating functions); the result is then exact up to
    ``min(N, M)``.  For ``c > 0`` all q-valuations must be non-negative and
    the result is exact up to ``min(N, (M+1)*c - 1)``, or one better per
    x-degree when the ``m``-certificate holds.
    """
    if c < 0:
        raise UnsafeEvaluation("x -> q^c needs c >= 0")
    rows = s.by_x_degree
    certified = all(r.is_zero() or r.valuation >= m for m, r in enumerate(rows))
    if c == 0 and not certified:
        raise UnsafeEvaluation("some x^m coefficient has q-valuation below m")
    if not certified and any(r.valuation is not None and r.valuation < 0 for r in rows):
        raise UnsafeEvaluation("negative q-valuation with x -> q^c")
    bound = (s.x_trunc + 1) * (c + (1 if certified else 0)) - 1
    N = min(s.q_trunc, bound)
    acc = LaurentSeries.zero(N)
    for m, r in enumerate(rows):
        if not r.is_zero():
            acc = acc + r.shift(c * m)
    return acc
