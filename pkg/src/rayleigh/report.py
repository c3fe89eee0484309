"""Property reports and the seeded sampler shared by the checkers."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import MatroidError


class Verdict(str, Enum):
    HOLDS = "HOLDS"
    VIOLATED = "VIOLATED"
    NO_VIOLATION_FOUND = "NO_VIOLATION_FOUND"
    CERTIFIED = "CERTIFIED"


@dataclass
class PropertyReport:
    """Outcome of one property check.

    ``witnesses`` are plain dicts with string-encoded exact rationals, so a
    report serializes to JSON without loss. ``runtime_ms`` is recorded but
    only written out on request, keeping default output byte-stable.
    """

    property: str
    verdict: Verdict
    matroid_name: str | None = None
    parameters: dict = field(default_factory=dict)
    witnesses: list[dict] = field(default_factory=list)
    work: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    certificate: str | None = None
    runtime_ms: float | None = None

    @property
    def ok(self) -> bool:
        return self.verdict in (Verdict.HOLDS, Verdict.CERTIFIED)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "property": self.property,
            "verdict": self.verdict.value,
            "matroid_name": self.matroid_name,
            "parameters": self.parameters,
            "witnesses": self.witnesses,
            "work": self.work,
        }
        if self.notes:
            out["notes"] = self.notes
        if self.certificate:
            out["certificate"] = self.certificate
        out["runtime_ms"] = round(self.runtime_ms, 3) if timing and self.runtime_ms is not None else None
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False)


def fmt(x) -> str:
    return str(Fraction(x))


def fmt_assignment(labels: Sequence[str], values: Sequence[Fraction]) -> dict[str, str]:
    return {lab: fmt(v) for lab, v in zip(labels, values)}


POSITIVE = "POSITIVE"
REAL = "REAL"


@dataclass(frozen=True)
class SampleDomain:
    """Where random assignments are drawn from.

    POSITIVE draws numerator and denominator independently and uniformly
    from 1..bound. REAL also flips the sign with probability 1/2 and emits
    an exact zero with probability ``zero_probability``.
    """

    mode: str = POSITIVE
    bound: int = 100
    zero_probability: Fraction = Fraction(1, 20)

    def __post_init__(self):
        if self.mode not in (POSITIVE, REAL):
            raise MatroidError(f"unknown sampling mode {self.mode!r}")
        if self.bound < 1:
            raise MatroidError("sampling bound must be at least 1")
        object.__setattr__(self, "zero_probability", Fraction(self.zero_probability))

    def describe(self) -> dict:
        out = {"domain": self.mode, "bound": self.bound}
        if self.mode == REAL:
            out["zero_probability"] = fmt(self.zero_probability)
        return out


class Sampler:
    """Deterministic stream of exact rational points."""

    def __init__(self, domain: SampleDomain, seed: int):
        self.domain = domain
        self.rng = random.Random(seed)

    def value(self) -> Fraction:
        d, rng = self.domain, self.rng
        if d.mode == REAL:
            z = d.zero_probability
            if rng.randrange(z.denominator) < z.numerator:
                return Fraction(0)
        v = Fraction(rng.randint(1, d.bound), rng.randint(1, d.bound))
        if d.mode == REAL and rng.random() < 0.5:
            v = -v
        return v

    def point(self, n: int) -> list[Fraction]:
        return [self.value() for _ in range(n)]

    def nonnegative(self) -> Fraction:
        return Fraction(self.rng.randint(0, self.domain.bound), self.rng.randint(1, self.domain.bound))


def complete_point(labels: Sequence[str], partial: Mapping[str, object], default=1) -> list[Fraction]:
    """Values by position, with unassigned labels set to ``default``."""
    unknown = set(map(str, partial)) - set(labels)
    if unknown:
        raise MatroidError(f"assignment mentions unknown elements {sorted(unknown)}")
    return [Fraction(partial.get(lab, default)) for lab in labels]
