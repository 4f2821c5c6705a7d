"""Packaging for structure cells and suite reports.

A structure cell wraps one piece of the 2-categorical structure carried by
the tensor of permutative categories: either a functor (1-cell) or a
transformation (2-cell), together with the bookkeeping the axiom suites use
to decide how the cell gets checked.  Reports collect named pass/fail
outcomes with witnesses and serialize to plain dicts for the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..perm_core import MonTransform, PermCategory, SymMonFunctor

__all__ = [
    "StructureCell",
    "CheckOutcome",
    "Report",
    "invert_transform",
    "functor_cell",
    "transform_cell",
]


@dataclass(frozen=True)
class StructureCell:
    """One named piece of structure.

    kind is "functor" or "transform"; payload is the SymMonFunctor or
    MonTransform itself.  strategy records how equalities involving the cell
    are certified: "coherence" when the term prover decides them, or
    "evaluation" when they are checked by evaluating on enumerated data.
    inverse, when present, is the payload of an explicit inverse cell.
    """

    name: str
    kind: str
    payload: Any
    source_desc: str
    target_desc: str
    strategy: str = "coherence"
    inverse: Optional[Any] = None

    def __call__(self, x):
        if self.kind != "functor":
            raise TypeError(f"{self.name} is not a functor cell")
        return self.payload(x)

    def at(self, x):
        if self.kind != "transform":
            raise TypeError(f"{self.name} is not a transform cell")
        return self.payload.at(x)


def functor_cell(name: str, fun: SymMonFunctor, source_desc: str,
                 target_desc: str, strategy: str = "coherence",
                 inverse: SymMonFunctor | None = None) -> StructureCell:
    return StructureCell(name, "functor", fun, source_desc, target_desc,
                         strategy, inverse)


def transform_cell(name: str, tr: MonTransform, source_desc: str,
                   target_desc: str, strategy: str = "coherence",
                   inverse: MonTransform | None = None) -> StructureCell:
    return StructureCell(name, "transform", tr, source_desc, target_desc,
                         strategy, inverse)


def invert_transform(cod: PermCategory, phi: MonTransform,
                     name: str = "") -> MonTransform:
    """Componentwise inverse; requires every component invertible in cod."""

    def at(x):
        inv = cod.try_invert(phi.at(x))
        if inv is None:
            raise ValueError(f"NotInvertible: component of {phi.name!r} at {x!r}")
        return inv

    return MonTransform(phi.tgt_fun, phi.src_fun, at,
                        name=name or f"{phi.name}^-1")


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckOutcome:
    name: str
    passed: bool
    detail: str = ""
    witness: Any = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.witness is not None:
            d["witness"] = repr(self.witness)
        return d


@dataclass
class Report:
    title: str
    outcomes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def add(self, name: str, passed: bool, detail: str = "",
            witness: Any = None) -> None:
        self.outcomes.append(CheckOutcome(name, passed, detail, witness))

    def extend(self, other: "Report") -> None:
        self.outcomes.extend(other.outcomes)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [o.to_dict() for o in self.outcomes],
        }

    def summary_lines(self) -> list:
        lines = []
        for o in self.outcomes:
            status = "ok" if o.passed else "FAIL"
            tail = f"  ({o.detail})" if o.detail else ""
            lines.append(f"[{status}] {o.name}{tail}")
        lines.append(f"{'PASS' if self.passed else 'FAIL'}: {self.title}")
        return lines
