"""Scheme files, dataset files, and their canonical forms.

Scheme files are JSON with the shape:

    {
      "name": str,
      "scales": [{"name": str, "terms": [{"code", "label", "a", "b", "c"}]}],
      "criteria": [{"id", "description", "kind", "scale"?, "orientation",
                    "weight_term"}],
      "aliases": {criterion id: {from code: to code}},          # optional
      "eligibility": [{"criterion", "op" (>=|<=|=), "value"}]   # optional
    }

Unknown keys are rejected everywhere. Weight terms resolve against the
scale named "importance", which must be present. `serialize_scheme` emits
the canonical form: fixed key order, two-space indent, trailing newline;
the bundled scheme files are stored canonically, so load then serialize is
a byte-level fixed point.

Dataset files are CSV (UTF-8, decimal points, LF or CRLF). The header must
start with "id" followed by the scheme's criterion ids in scheme order;
surplus trailing columns are ignored, which lets one file serve schemes
that use a prefix of its columns. Crisp cells parse as floats, linguistic
cells stay term codes; deeper checks live in `validate_dataset`.

Errors carry locations: a line/column pair for text-level problems, a JSON
pointer for structural ones.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import DomainError
from .fuzzy import LinguisticScale, LinguisticTerm, lookup_term, make_tfn
from .model import Alternative, Criterion, EligibilityRule, Scheme

IMPORTANCE_SCALE = "importance"


class ParseError(DomainError):
    """The file is not well-formed at the text level."""

    def __init__(self, source: str, line: int, column: int, message: str):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.source = source
        self.line = line
        self.column = column


class SchemaViolation(DomainError):
    """The file parses but violates the documented structure."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer


class UnknownScaleReference(SchemaViolation):
    """A criterion or the weight convention references a missing scale."""


class HeaderMismatch(DomainError):
    """The CSV header does not open with "id" plus the scheme's criteria."""

    def __init__(self, expected: list[str], got: list[str]):
        super().__init__(f"header mismatch: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


def _require_keys(obj: dict, pointer: str, required: tuple, optional: tuple = ()):
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise SchemaViolation(pointer, f"unknown keys {sorted(unknown)}")
    missing = [k for k in required if k not in obj]
    if missing:
        raise SchemaViolation(pointer, f"missing keys {missing}")


def _require(condition: bool, pointer: str, message: str):
    if not condition:
        raise SchemaViolation(pointer, message)


def _number(value, pointer: str) -> float:
    _require(
        isinstance(value, (int, float)) and not isinstance(value, bool),
        pointer,
        f"expected a number, got {value!r}",
    )
    return float(value)


def _string(value, pointer: str) -> str:
    _require(isinstance(value, str) and value != "", pointer, "expected a non-empty string")
    return value


def parse_scheme(text: str, source: str = "<scheme>") -> Scheme:
    """Parse and fully validate a scheme document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, e.lineno, e.colno, e.msg) from e
    _require(isinstance(doc, dict), "/", "scheme document must be a JSON object")
    _require_keys(doc, "/", ("name", "scales", "criteria"), ("aliases", "eligibility"))

    name = _string(doc["name"], "/name")

    _require(isinstance(doc["scales"], list), "/scales", "expected a list")
    scales = []
    for si, raw in enumerate(doc["scales"]):
        pointer = f"/scales/{si}"
        _require(isinstance(raw, dict), pointer, "expected an object")
        _require_keys(raw, pointer, ("name", "terms"))
        scale_name = _string(raw["name"], f"{pointer}/name")
        _require(isinstance(raw["terms"], list), f"{pointer}/terms", "expected a list")
        terms = []
        for ti, t in enumerate(raw["terms"]):
            tp = f"{pointer}/terms/{ti}"
            _require(isinstance(t, dict), tp, "expected an object")
            _require_keys(t, tp, ("code", "label", "a", "b", "c"))
            try:
                tfn = make_tfn(
                    _number(t["a"], f"{tp}/a"),
                    _number(t["b"], f"{tp}/b"),
                    _number(t["c"], f"{tp}/c"),
                )
            except DomainError as e:
                raise SchemaViolation(tp, str(e)) from e
            terms.append(
                LinguisticTerm(_string(t["code"], f"{tp}/code"),
                               _string(t["label"], f"{tp}/label"), tfn)
            )
        try:
            scales.append(LinguisticScale(scale_name, tuple(terms)))
        except ValueError as e:
            raise SchemaViolation(pointer, str(e)) from e

    by_name = {s.name: s for s in scales}
    if IMPORTANCE_SCALE not in by_name:
        raise UnknownScaleReference(
            "/scales", f"no scale named {IMPORTANCE_SCALE!r} for weight terms"
        )
    importance = by_name[IMPORTANCE_SCALE]

    _require(isinstance(doc["criteria"], list), "/criteria", "expected a list")
    criteria = []
    for ci, raw in enumerate(doc["criteria"]):
        pointer = f"/criteria/{ci}"
        _require(isinstance(raw, dict), pointer, "expected an object")
        _require_keys(
            raw,
            pointer,
            ("id", "description", "kind", "orientation", "weight_term"),
            ("scale",),
        )
        cid = _string(raw["id"], f"{pointer}/id")
        kind = _string(raw["kind"], f"{pointer}/kind")
        _require(kind in ("crisp", "linguistic"), f"{pointer}/kind",
                 f"kind must be crisp or linguistic, got {kind!r}")
        scale_ref = raw.get("scale")
        if kind == "linguistic":
            scale_ref = _string(scale_ref, f"{pointer}/scale")
            if scale_ref not in by_name:
                raise UnknownScaleReference(
                    f"{pointer}/scale", f"unknown scale {scale_ref!r}"
                )
        else:
            _require(scale_ref is None, f"{pointer}/scale",
                     "crisp criteria do not take a scale")
        orientation = _string(raw["orientation"], f"{pointer}/orientation")
        _require(orientation in ("benefit", "cost"), f"{pointer}/orientation",
                 f"orientation must be benefit or cost, got {orientation!r}")
        code = _string(raw["weight_term"], f"{pointer}/weight_term")
        try:
            weight_term = lookup_term(importance, code)
        except DomainError as e:
            raise SchemaViolation(f"{pointer}/weight_term", str(e)) from e
        try:
            criteria.append(
                Criterion(cid, _string(raw["description"], f"{pointer}/description"),
                          kind, scale_ref, orientation, weight_term)
            )
        except ValueError as e:
            raise SchemaViolation(pointer, str(e)) from e

    crit_by_id = {c.id: c for c in criteria}

    aliases: dict[str, dict[str, str]] = {}
    if "aliases" in doc:
        _require(isinstance(doc["aliases"], dict), "/aliases", "expected an object")
        for cid, mapping in doc["aliases"].items():
            pointer = f"/aliases/{cid}"
            _require(cid in crit_by_id, pointer, f"unknown criterion {cid!r}")
            crit = crit_by_id[cid]
            _require(crit.data_kind == "linguistic", pointer,
                     "aliases apply to linguistic criteria only")
            _require(isinstance(mapping, dict), pointer, "expected an object")
            scale = by_name[crit.scale]
            resolved = {}
            for src, dst in mapping.items():
                dst = _string(dst, f"{pointer}/{src}")
                try:
                    lookup_term(scale, dst)
                except DomainError as e:
                    raise SchemaViolation(f"{pointer}/{src}", str(e)) from e
                resolved[src] = dst
            aliases[cid] = resolved

    eligibility = []
    if "eligibility" in doc:
        _require(isinstance(doc["eligibility"], list), "/eligibility", "expected a list")
        for ri, raw in enumerate(doc["eligibility"]):
            pointer = f"/eligibility/{ri}"
            _require(isinstance(raw, dict), pointer, "expected an object")
            _require_keys(raw, pointer, ("criterion", "op", "value"))
            cid = _string(raw["criterion"], f"{pointer}/criterion")
            _require(cid in crit_by_id, f"{pointer}/criterion",
                     f"unknown criterion {cid!r}")
            op = _string(raw["op"], f"{pointer}/op")
            _require(op in (">=", "<=", "="), f"{pointer}/op",
                     f"op must be >=, <= or =, got {op!r}")
            eligibility.append(
                EligibilityRule(cid, op, _number(raw["value"], f"{pointer}/value"))
            )

    try:
        return Scheme(name, tuple(criteria), tuple(scales), aliases, tuple(eligibility))
    except ValueError as e:
        raise SchemaViolation("/", str(e)) from e


def load_scheme(path) -> Scheme:
    """Read and parse a scheme file."""
    path = Path(path)
    return parse_scheme(path.read_text(encoding="utf-8"), source=str(path))


def serialize_scheme(scheme: Scheme) -> str:
    """Canonical JSON form: fixed key order, 2-space indent, trailing newline."""
    doc: dict = {
        "name": scheme.name,
        "scales": [
            {
                "name": s.name,
                "terms": [
                    {"code": t.code, "label": t.label,
                     "a": t.tfn.a, "b": t.tfn.b, "c": t.tfn.c}
                    for t in s.terms
                ],
            }
            for s in scheme.scales
        ],
        "criteria": [],
    }
    for c in scheme.criteria:
        entry = {"id": c.id, "description": c.description, "kind": c.data_kind}
        if c.data_kind == "linguistic":
            entry["scale"] = c.scale
        entry["orientation"] = c.orientation
        entry["weight_term"] = c.weight_term.code
        doc["criteria"].append(entry)
    if scheme.aliases:
        doc["aliases"] = {cid: dict(m) for cid, m in scheme.aliases.items()}
    if scheme.eligibility:
        doc["eligibility"] = [
            {"criterion": r.criterion, "op": r.op, "value": r.value}
            for r in scheme.eligibility
        ]
    return json.dumps(doc, indent=2) + "\n"


def parse_dataset(text: str, scheme: Scheme, source: str = "<dataset>") -> list[Alternative]:
    """Parse CSV rows into alternatives; deeper checks are validate_dataset's."""
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(source, 1, 1, "empty dataset: missing header row") from None
    expected = ["id"] + scheme.criterion_ids()
    if [h.strip() for h in header[: len(expected)]] != expected:
        raise HeaderMismatch(expected, header)

    n = len(scheme.criteria)
    alts = []
    for row in reader:
        if not row or all(cell.strip() == "" for cell in row):
            continue
        cells = []
        for crit, raw in zip(scheme.criteria, row[1 : 1 + n]):
            raw = raw.strip()
            if crit.data_kind == "crisp":
                try:
                    cells.append(float(raw))
                except ValueError:
                    # keep the raw text; validate_dataset reports the kind error
                    cells.append(raw)
            else:
                cells.append(raw)
        alts.append(Alternative(row[0].strip(), tuple(cells)))
    return alts


def load_dataset(path, scheme: Scheme) -> list[Alternative]:
    """Read and parse a dataset file against the scheme's column contract."""
    path = Path(path)
    return parse_dataset(path.read_text(encoding="utf-8-sig"), scheme, source=str(path))
