"""Result types shared by the oracle and the closed-form classifiers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional

from .exactpoly import format_rational


class Region(enum.Enum):
    HALF_LINE = "half-line"
    REAL_LINE = "real-line"


class Verdict(enum.Enum):
    STRICTLY_POSITIVE = "strictly_positive"
    NONNEGATIVE_WITH_ZEROS = "nonnegative_with_zeros"
    INDEFINITE = "indefinite"

    @property
    def nonnegative(self) -> bool:
        return self is not Verdict.INDEFINITE


class CertificateConflict(RuntimeError):
    """A closed-form verdict could not be backed by an exact witness or zero set."""


@dataclass(frozen=True, order=True)
class ZeroLocation:
    """A real root: exact when ``lo == hi``, otherwise isolated in ``(lo, hi)``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = field(default=1, compare=False)

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("isolating interval must have lo <= hi")

    @classmethod
    def at(cls, x: Fraction, multiplicity: int = 1) -> "ZeroLocation":
        return cls(Fraction(x), Fraction(x), multiplicity)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("irrational zero has no exact value")
        return self.lo

    def to_json(self) -> Any:
        if self.exact:
            return format_rational(self.lo)
        return {"interval": [format_rational(self.lo), format_rational(self.hi)]}


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    zeros: tuple[ZeroLocation, ...] = ()
    witness: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.verdict is Verdict.NONNEGATIVE_WITH_ZEROS and not self.zeros:
            raise ValueError("nonnegative_with_zeros needs at least one zero")
        if self.verdict is not Verdict.NONNEGATIVE_WITH_ZEROS and self.zeros:
            raise ValueError("zeros only accompany nonnegative_with_zeros")
        if (self.verdict is Verdict.INDEFINITE) != (self.witness is not None):
            raise ValueError("a witness accompanies exactly the indefinite verdict")

    @classmethod
    def positive(cls) -> "Classification":
        return cls(Verdict.STRICTLY_POSITIVE)

    @classmethod
    def with_zeros(cls, zeros) -> "Classification":
        zs = tuple(sorted(zeros))
        if not zs:
            return cls(Verdict.STRICTLY_POSITIVE)
        return cls(Verdict.NONNEGATIVE_WITH_ZEROS, zs)

    @classmethod
    def indefinite(cls, witness: Fraction) -> "Classification":
        return cls(Verdict.INDEFINITE, witness=Fraction(witness))

    def exact_zeros(self) -> tuple[Fraction, ...]:
        return tuple(z.lo for z in self.zeros if z.exact)


@dataclass(frozen=True)
class Certificate:
    """Which rule decided a verdict, plus every intermediate quantity.

    ``method`` names the decision procedure (``"cubic"``, ``"quintic"``,
    ``"oracle"``...), ``case`` the rule inside it (``"(B)"``, ``"(9iv)"``).
    Reductions to smaller problems are kept in ``steps``.
    """

    method: str
    case: str
    values: Mapping[str, Any] = field(default_factory=dict)
    steps: tuple["Certificate", ...] = ()

    def to_json(self) -> dict:
        out = {
            "method": self.method,
            "case": self.case,
            "values": {k: _json_value(v) for k, v in self.values.items()},
        }
        if self.steps:
            out["steps"] = [s.to_json() for s in self.steps]
        return out


def _json_value(v: Any) -> Any:
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (Fraction, int)):
        return format_rational(Fraction(v))
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, enum.Enum):
        return v.value
    return str(v)
