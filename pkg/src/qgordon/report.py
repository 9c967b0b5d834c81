"""Structured check results."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class Mismatch:
    x_deg: int | None
    q_exp: int
    lhs: int
    rhs: int

    def to_json(self) -> dict[str, Any]:
        return {"x_deg": self.x_deg, "q_exp": self.q_exp, "lhs": str(self.lhs), "rhs": str(self.rhs)}

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "Mismatch":
        return cls(obj["x_deg"], obj["q_exp"], int(obj["lhs"]), int(obj["rhs"]))


@dataclass
class CheckReport:
    check_id: str
    params: dict[str, Any]
    order: tuple[int | None, int | None]
    status: str
    first_mismatch: Mismatch | None = None
    elapsed: float = 0.0  # milliseconds
    expected_status: str = PASS
    detail: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == FAIL) != (self.first_mismatch is not None):
            raise ValueError("FAIL requires a mismatch and PASS forbids one")

    @property
    def ok(self) -> bool:
        return self.status == PASS

    @property
    def as_expected(self) -> bool:
        return self.status == self.expected_status

    def sort_key(self):
        p = self.params
        return (self.check_id, tuple(str(p.get(key)) for key in PARAM_KEYS))

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        p = self.params
        return {
            "check": self.check_id,
            "params": {key: p.get(key) for key in PARAM_KEYS},
            "order": {"m": self.order[0], "n": self.order[1]},
            "status": self.status,
            "expected_status": self.expected_status,
            "first_mismatch": None if self.first_mismatch is None else self.first_mismatch.to_json(),
            "elapsed_ms": round(self.elapsed, 3) if timing else 0,
        }


PARAM_KEYS = ("d", "k", "e", "a", "f", "variant")


def params_dict(d=None, k=None, e=None, a=None, f=None, variant=None) -> dict[str, Any]:
    return {"d": d, "k": k, "e": e, "a": a, "f": f, "variant": variant}


def _mkey(m: Mismatch):
    return (-1 if m.x_deg is None else m.x_deg, m.q_exp)


class Recorder:
    """Collects the first mismatch across several comparisons and times the check."""

    def __init__(self):
        self.mismatch: Mismatch | None = None
        self.notes: list[str] = []
        self._t0 = time.perf_counter()

    def compare(self, lhs, rhs, label: str = "", x_upto: int | None = None, q_upto: int | None = None) -> bool:
        from .series import BiSeries

        if isinstance(lhs, BiSeries) or isinstance(rhs, BiSeries):
            hit = lhs.first_mismatch(rhs, x_upto, q_upto)
            mm = None if hit is None else Mismatch(*hit)
        else:
            hit = lhs.first_mismatch(rhs, q_upto)
            mm = None if hit is None else Mismatch(None, *hit)
        if mm is not None:
            if self.mismatch is None or _mkey(mm) < _mkey(self.mismatch):
                self.mismatch = mm
            if label:
                self.notes.append(label)
            return False
        return True

    def fail(self, q_exp: int, lhs: int, rhs: int, label: str = "", x_deg: int | None = None) -> None:
        mm = Mismatch(x_deg, q_exp, lhs, rhs)
        if self.mismatch is None or _mkey(mm) < _mkey(self.mismatch):
            self.mismatch = mm
        if label:
            self.notes.append(label)


    def report(self, check_id: str, params: dict, order, expected: str = PASS) -> CheckReport:
        return CheckReport(
            check_id,
            params,
            tuple(order),
            FAIL if self.mismatch is not None else PASS,
            self.mismatch,
            (time.perf_counter() - self._t0) * 1000.0,
            expected,
            "; ".join(dict.fromkeys(self.notes)),
        )
