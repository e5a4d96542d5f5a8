"""Schemes, alternatives, validation, and fuzzy-to-crisp lowering.

A scheme fixes the criteria (order, kind, orientation, weight term), the
linguistic scales, optional per-criterion term aliases, and optional
eligibility rules. Alternatives carry one cell per criterion: a real for
crisp criteria, a term code for linguistic ones. Lowering defuzzifies the
linguistic cells and yields the crisp matrix both engines consume.

Weight terms resolve against the scale named "importance", which every
scheme must define. Crisp cells are conceptually degenerate TFNs (x, x, x),
so a single lowering path serves both kinds.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .fuzzy import (
    LinguisticScale,
    LinguisticTerm,
    defuzzify_centroid,
    lookup_term,
)

ORIENTATIONS = ("benefit", "cost")
ELIGIBILITY_OPS = (">=", "<=", "=")


class InvalidDataset(DomainError):
    """Lowering was asked for a dataset that fails validation."""

    def __init__(self, issues: list["ValidationIssue"]):
        lines = "; ".join(str(i) for i in issues[:5])
        more = "" if len(issues) <= 5 else f" (+{len(issues) - 5} more)"
        super().__init__(f"dataset is invalid: {lines}{more}")
        self.issues = issues


class UnknownAlternative(DomainError):
    """An alternative id is not present in the dataset."""


@dataclass(frozen=True)
class Criterion:
    """One evaluation dimension: id, kind, orientation, and fuzzy weight."""

    id: str
    description: str
    data_kind: str  # "crisp" or "linguistic"
    scale: str | None
    orientation: str  # "benefit" or "cost"
    weight_term: LinguisticTerm

    def __post_init__(self):
        if self.data_kind not in ("crisp", "linguistic"):
            raise ValueError(f"criterion {self.id!r}: bad kind {self.data_kind!r}")
        if self.orientation not in ORIENTATIONS:
            raise ValueError(
                f"criterion {self.id!r}: bad orientation {self.orientation!r}"
            )
        if self.data_kind == "linguistic" and not self.scale:
            raise ValueError(f"criterion {self.id!r}: linguistic kind needs a scale")


@dataclass(frozen=True)
class EligibilityRule:
    """Declarative screen applied to lowered cell values before ranking."""

    criterion: str
    op: str
    value: float

    def __post_init__(self):
        if self.op not in ELIGIBILITY_OPS:
            raise ValueError(f"bad eligibility op {self.op!r}")

    def admits(self, x: float) -> bool:
        if self.op == ">=":
            return x >= self.value
        if self.op == "<=":
            return x <= self.value
        return x == self.value


@dataclass(frozen=True)
class Scheme:
    """A configured scholarship type: criteria, scales, aliases, screens."""

    name: str
    criteria: tuple[Criterion, ...]
    scales: tuple[LinguisticScale, ...]
    aliases: dict[str, dict[str, str]] = field(default_factory=dict)
    eligibility: tuple[EligibilityRule, ...] = ()

    def __post_init__(self):
        if not self.criteria:
            raise ValueError(f"scheme {self.name!r} needs at least one criterion")
        ids = [c.id for c in self.criteria]
        if len(set(ids)) != len(ids):
            raise ValueError(f"scheme {self.name!r} has duplicate criterion ids")
        scale_names = {s.name for s in self.scales}
        for c in self.criteria:
            if c.data_kind == "linguistic" and c.scale not in scale_names:
                raise ValueError(
                    f"criterion {c.id!r} references unknown scale {c.scale!r}"
                )

    def criterion_ids(self) -> list[str]:
        return [c.id for c in self.criteria]

    def scale_by_name(self, name: str) -> LinguisticScale:
        for s in self.scales:
            if s.name == name:
                return s
        raise KeyError(name)

    def resolve_term(self, criterion: Criterion, code: str) -> LinguisticTerm:
        """Look up a cell's term code, applying the criterion's alias map."""
        mapped = self.aliases.get(criterion.id, {}).get(code, code)
        return lookup_term(self.scale_by_name(criterion.scale), mapped)


@dataclass(frozen=True)
class Alternative:
    """A candidate row: id plus one cell per criterion."""

    id: str
    cells: tuple

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))


@dataclass(frozen=True)
class CrispMatrix:
    """Lowered decision matrix: row ids plus an m x n grid of finite reals."""

    alternatives: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        grid = np.array(self.values, dtype=np.float64)
        if grid.ndim != 2:
            raise ValueError("matrix must be two-dimensional")
        if grid.shape[0] != len(self.alternatives):
            raise ValueError("row count does not match alternative count")
        if not np.all(np.isfinite(grid)):
            raise ValueError("matrix values must be finite")
        grid.flags.writeable = False
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "values", grid)


@dataclass(frozen=True)
class ValidationIssue:
    """One problem found in a dataset, with its location."""

    kind: str  # UnknownTerm, KindMismatch, ArityMismatch, DuplicateId, NonFinite
    row: str
    column: str | None
    message: str

    def __str__(self) -> str:
        where = self.row if self.column is None else f"{self.row}/{self.column}"
        return f"{where}: {self.kind}: {self.message}"


def validate_dataset(scheme: Scheme, alts: list[Alternative]) -> list[ValidationIssue]:
    """Collect every problem in the dataset; an empty list means valid."""
    issues: list[ValidationIssue] = []

    seen: set[str] = set()
    for alt in alts:
        if alt.id in seen:
            issues.append(
                ValidationIssue("DuplicateId", alt.id, None, "duplicate alternative id")
            )
        seen.add(alt.id)

    for alt in alts:
        if len(alt.cells) != len(scheme.criteria):
            issues.append(
                ValidationIssue(
                    "ArityMismatch",
                    alt.id,
                    None,
                    f"expected {len(scheme.criteria)} cells, got {len(alt.cells)}",
                )
            )
        for crit, cell in zip(scheme.criteria, alt.cells):
            if crit.data_kind == "crisp":
                # bool is an int subtype; reject it as a kind error anyway
                if isinstance(cell, bool) or not isinstance(cell, (int, float)):
                    issues.append(
                        ValidationIssue(
                            "KindMismatch",
                            alt.id,
                            crit.id,
                            f"expected a number, got {cell!r}",
                        )
                    )
                elif not np.isfinite(cell):
                    issues.append(
                        ValidationIssue(
                            "NonFinite", alt.id, crit.id, f"non-finite value {cell!r}"
                        )
                    )
            else:
                if not isinstance(cell, str):
                    issues.append(
                        ValidationIssue(
                            "KindMismatch",
                            alt.id,
                            crit.id,
                            f"expected a term code, got {cell!r}",
                        )
                    )
                else:
                    mapped = scheme.aliases.get(crit.id, {}).get(cell, cell)
                    scale = scheme.scale_by_name(crit.scale)
                    if all(t.code != mapped for t in scale.terms):
                        issues.append(
                            ValidationIssue(
                                "UnknownTerm",
                                alt.id,
                                crit.id,
                                f"term {cell!r} is not in scale {scale.name!r}",
                            )
                        )
    return issues


def lower_to_crisp(scheme: Scheme, alts: list[Alternative]) -> CrispMatrix:
    """Defuzzify linguistic cells and copy crisp cells verbatim."""
    issues = validate_dataset(scheme, alts)
    if issues:
        raise InvalidDataset(issues)
    grid = np.empty((len(alts), len(scheme.criteria)), dtype=np.float64)
    for i, alt in enumerate(alts):
        for j, (crit, cell) in enumerate(zip(scheme.criteria, alt.cells)):
            if crit.data_kind == "crisp":
                grid[i, j] = float(cell)
            else:
                grid[i, j] = defuzzify_centroid(scheme.resolve_term(crit, cell).tfn)
    return CrispMatrix(tuple(a.id for a in alts), grid)


def weight_vector(scheme: Scheme) -> list[float]:
    """Per-criterion defuzzified weights, in criterion order, unnormalized."""
    return [defuzzify_centroid(c.weight_term.tfn) for c in scheme.criteria]


def orientation_vector(scheme: Scheme) -> list[str]:
    return [c.orientation for c in scheme.criteria]


def apply_eligibility(
    scheme: Scheme, alts: list[Alternative]
) -> tuple[list[Alternative], list[str]]:
    """Split alternatives into (admitted, excluded ids) per the scheme rules."""
    if not scheme.eligibility:
        return list(alts), []
    by_id = {c.id: (idx, c) for idx, c in enumerate(scheme.criteria)}
    kept, excluded = [], []
    for alt in alts:
        ok = True
        for rule in scheme.eligibility:
            idx, crit = by_id[rule.criterion]
            cell = alt.cells[idx]
            if crit.data_kind == "crisp":
                x = float(cell)
            else:
                x = defuzzify_centroid(scheme.resolve_term(crit, cell).tfn)
            if not rule.admits(x):
                ok = False
                break
        if ok:
            kept.append(alt)
        else:
            excluded.append(alt.id)
    return kept, excluded


def rank_descending(values, ids=None) -> np.ndarray:
    """1-based ranks: descending value, ties broken by ascending id.

    With ids omitted, ties keep input row order. Ranks are a permutation
    of 1..m recomputed from full-precision values.
    """
    m = len(values)
    keys = list(range(m)) if ids is None else list(ids)
    order = sorted(range(m), key=lambda i: (-values[i], keys[i]))
    ranks = np.empty(m, dtype=np.int64)
    for position, i in enumerate(order, start=1):
        ranks[i] = position
    return ranks
