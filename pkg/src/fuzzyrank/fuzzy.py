"""Triangular fuzzy numbers, linguistic terms, and defuzzification.

A triangular fuzzy number (TFN) is a triple (a, b, c) describing a triangular
membership function with peak at b. Linguistic scales map short term codes
such as "VG" to TFNs; a dataset cell holding a term code is lowered to a crisp
value by defuzzifying the term's TFN.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


class OrderViolation(DomainError):
    """TFN fields are out of order (requires a <= b <= c)."""


class UnknownTerm(DomainError):
    """A term code is not a member of the scale it was looked up in."""

    def __init__(self, code: str, scale: str):
        super().__init__(f"term {code!r} is not in scale {scale!r}")
        self.code = code
        self.scale = scale


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Triangle (a, b, c): left support, peak, right support."""

    a: float
    b: float
    c: float


@dataclass(frozen=True)
class LinguisticTerm:
    """A named rating such as "Very Good" with its TFN."""

    code: str
    label: str
    tfn: TriangularFuzzyNumber


@dataclass(frozen=True)
class LinguisticScale:
    """Ordered collection of terms; defuzzified values strictly increase."""

    name: str
    terms: tuple[LinguisticTerm, ...]

    def __post_init__(self):
        if len(self.terms) < 2:
            raise ValueError(f"scale {self.name!r} needs at least 2 terms")
        codes = [t.code for t in self.terms]
        if len(set(codes)) != len(codes):
            raise ValueError(f"scale {self.name!r} has duplicate term codes")
        values = [defuzzify_centroid(t.tfn) for t in self.terms]
        if any(u >= v for u, v in zip(values, values[1:])):
            raise ValueError(
                f"scale {self.name!r} terms must strictly increase when defuzzified"
            )


def make_tfn(a: float, b: float, c: float) -> TriangularFuzzyNumber:
    """Build a TFN, rejecting out-of-order triples. No normalization."""
    if a > b or b > c:
        raise OrderViolation(f"need a <= b <= c, got ({a}, {b}, {c})")
    return TriangularFuzzyNumber(float(a), float(b), float(c))


def defuzzify_centroid(t: TriangularFuzzyNumber) -> float:
    """Collapse a TFN to the mean of its three parameters."""
    return (t.a + t.b + t.c) / 3.0


def lookup_term(scale: LinguisticScale, code: str) -> LinguisticTerm:
    """Find a term by exact, case-sensitive code match."""
    for term in scale.terms:
        if term.code == code:
            return term
    raise UnknownTerm(code, scale.name)
