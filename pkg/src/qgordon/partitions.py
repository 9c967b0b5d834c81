"""Partitions under Gordon-type frequency conditions.

Two independent counting routes:

* :func:`brute_count` walks every partition of ``n`` and filters it.  It is
  the ground truth and deliberately shares no code with the DP.
* :func:`dp_genfun` builds the bivariate generating function
  ``sum b(m, n) x^m q^n`` by a transfer over part sizes whose state is the
  multiplicity of the previous part size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .series import BiSeries, LaurentSeries

ANY = None


class Parity(enum.Enum):
    EVEN_PARTS = "even"  # d | f_{2i}
    ODD_PARTS = "odd"  # d | f_{2i+1}, including f_1
    NONE = "none"


@dataclass(frozen=True)
class FrequencyProfile:
    """A partition in frequency notation: part size -> multiplicity (all >= 1)."""

    freqs: tuple[tuple[int, int], ...]
    weight: int = field(init=False)
    parts: int = field(init=False)

    def __post_init__(self):
        if any(i < 1 or f < 1 for i, f in self.freqs):
            raise ValueError("part sizes and multiplicities must be positive")
        object.__setattr__(self, "weight", sum(i * f for i, f in self.freqs))
        object.__setattr__(self, "parts", sum(f for _, f in self.freqs))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "FrequencyProfile":
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        return cls(tuple(sorted(counts.items())))

    def f(self, i: int) -> int:
        """Multiplicity of part ``i``; zero for absent parts and for ``i <= 0``."""
        return dict(self.freqs).get(i, 0)

    def as_parts(self) -> list[int]:
        return [i for i, f in sorted(self.freqs, reverse=True) for _ in range(f)]


@dataclass(frozen=True)
class ConstraintSet:
    """``f_i + f_{i+1} < pair_bound``, ``f_1 < initial_bound`` and a divisibility class."""

    pair_bound: int
    initial_bound: int
    divisor: int = 1
    parity: Parity = Parity.NONE

    def __post_init__(self):
        if self.pair_bound < 1 or self.initial_bound < 0 or self.divisor < 1:
            raise ValueError(f"invalid constraint set {self}")
        # with divisor 1 the parity condition is vacuous; normalise so equal conditions compare equal
        object.__setattr__(self, "parity", Parity.NONE if self.divisor == 1 else Parity(self.parity))

    def admits(self, p: FrequencyProfile) -> bool:
        freqs = dict(p.freqs)
        if freqs.get(1, 0) >= self.initial_bound:
            return False
        for i, f in freqs.items():
            if f + freqs.get(i + 1, 0) >= self.pair_bound:
                return False
            if self.parity is Parity.EVEN_PARTS and i % 2 == 0 and f % self.divisor:
                return False
            if self.parity is Parity.ODD_PARTS and i % 2 == 1 and f % self.divisor:
                return False
        return True


def iter_partitions(n: int) -> Iterator[FrequencyProfile]:
    """Every partition of ``n``, largest part first, as frequency profiles."""
    if n < 0:
        return
    for parts in _partitions_max(n, n):
        yield FrequencyProfile.from_parts(parts)


def _partitions_max(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_max(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _all_partitions(n: int) -> tuple[FrequencyProfile, ...]:
    return tuple(iter_partitions(n))


def brute_count(n: int, m: int | None, c: ConstraintSet) -> int:
    """Number of partitions of ``n`` (into exactly ``m`` parts unless ``m`` is ANY) admitted by ``c``."""
    if n < 0 or (m is not None and m < 0):
        return 0
    return sum(1 for p in _all_partitions(n) if (m is None or p.parts == m) and c.admits(p))


def brute_table(c: ConstraintSet, n_max: int) -> dict[tuple[int, int], int]:
    """Nonzero ``brute_count(n, m, c)`` for all ``n <= n_max`` keyed by ``(m, n)``."""
    table: dict[tuple[int, int], int] = {}
    for n in range(n_max + 1):
        for p in _all_partitions(n):
            if c.admits(p):
                table[(p.parts, n)] = table.get((p.parts, n), 0) + 1
    return table


def _int_dtype(N: int):
    # coefficients never exceed p(N); p(400) < 2**63
    return np.int64 if N <= 400 else object


def _transfer(c: ConstraintSet, N: int, M: int | None) -> np.ndarray:
    """Run the DP; returns counts indexed ``[m, n]`` (or ``[n]`` when M is None)."""
    shape = (N + 1,) if M is None else (M + 1, N + 1)
    dtype = _int_dtype(N)
    if c.initial_bound == 0:
        return np.zeros(shape, dtype=dtype)
    K = c.pair_bound
    # state[f] = weight-indexed counts whose last processed part size has multiplicity f
    start = np.zeros(shape, dtype=dtype)
    start[(0,) * len(shape)] = 1
    states = [start]
    for i in range(1, N + 1):
        cum = list(states)
        for f in range(1, len(cum)):
            cum[f] = cum[f - 1] + cum[f]
        top = min(K - 1, N // i)
        if M is not None:
            top = min(top, M)
        new = []
        for f in range(top + 1):
            if i == 1 and f >= c.initial_bound:
                break
            allowed_prev = K - 1 - f
            if allowed_prev < 0:
                break
            if _blocked(c, i, f):
                new.append(np.zeros(shape, dtype=dtype))
                continue
            src = cum[min(allowed_prev, len(cum) - 1)]
            out = np.zeros(shape, dtype=dtype)
            w = i * f
            if M is None:
                out[w:] = src[: N + 1 - w]
            else:
                out[f:, w:] = src[: M + 1 - f, : N + 1 - w]
            new.append(out)
        states = new
    return sum(states[1:], states[0].copy())


def _blocked(c: ConstraintSet, i: int, f: int) -> bool:
    if c.divisor == 1 or c.parity is Parity.NONE:
        return False
    constrained = (i % 2 == 0) if c.parity is Parity.EVEN_PARTS else (i % 2 == 1)
    return constrained and f % c.divisor != 0


def dp_genfun(c: ConstraintSet, N: int, x_trunc: int | None = None) -> BiSeries:
    """``sum_{m,n} b(m, n) x^m q^n`` exact to ``(x_trunc, N)``; ``x_trunc`` defaults to ``N``."""
    M = N if x_trunc is None else x_trunc
    table = _transfer(c, N, M)
    rows = [LaurentSeries.from_list([int(v) for v in table[m]], N) for m in range(M + 1)]
    return BiSeries.from_rows(rows, M, N)


def dp_counts(c: ConstraintSet, N: int) -> LaurentSeries:
    """Counted side ``sum_n B(n) q^n`` (all part counts), exact to ``q^N``."""
    return LaurentSeries.from_list([int(v) for v in _transfer(c, N, None)], N)


def residue_genfun(allowed: Iterable[int], modulus: int, N: int) -> LaurentSeries:
    """``prod 1/(1 - q^p)`` over parts ``p >= 1`` congruent to an allowed residue.

    Residues are taken in ``[1, modulus]``; ``modulus`` itself stands for 0.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    wanted = {r % modulus for r in allowed}
    s = LaurentSeries.one(N)
    for p in range(1, N + 1):
        if p % modulus in wanted:
            s = s.div_binomial(1, p)
    return s
