"""Fusion-ring shadow of a modular tensor category: labels, fusion
coefficients, duals, and twists, plus the JSON file format and validator.

Only the data the rank formulas consume is modeled.  Quantum dimensions
and S/T matrices are deliberately absent, so non-degeneracy of the
braiding is an *unverified assumption* of every downstream computation.

Twists are exact rationals r with 0 <= r < 1, meaning theta = exp(2*pi*i*r).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import (
    DualityViolation,
    DuplicateLabel,
    InvalidRational,
    ParseError,
    UnknownLabel,
)


@dataclass(frozen=True, eq=False)
class ModularData:
    name: str
    labels: tuple[str, ...]
    unit: int
    fusion: dict[tuple[int, int, int], int]
    dual: tuple[int, ...]
    twists: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.labels)

    def n(self, x: int, y: int, z: int) -> int:
        """Fusion coefficient N_{xy}^z; absent triples are 0."""
        return self.fusion.get((x, y, z), 0)

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"unknown label {label!r}") from None


@dataclass(frozen=True)
class Violation:
    rule: str
    indices: tuple[int, ...]
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def derive_duals(
    labels: tuple[str, ...], unit: int, fusion: dict[tuple[int, int, int], int]
) -> tuple[int, ...]:
    """dual(x) is the unique y with N_{x,y}^unit = 1."""
    duals = []
    for x in range(len(labels)):
        candidates = [
            y
            for y in range(len(labels))
            if fusion.get((x, y, unit), 0) > 0
        ]
        if len(candidates) != 1 or fusion[(x, candidates[0], unit)] != 1:
            raise DualityViolation(
                f"label {labels[x]!r} has no unique dual: "
                f"candidates {[labels[y] for y in candidates]}"
            )
        duals.append(candidates[0])
    return tuple(duals)


def parse_mtc(source: str | bytes) -> ModularData:
    """Parse the JSON file format into a ModularData.

    Duals are derived from the fusion coefficients when the file omits them.
    """
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} col {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    for key in ("name", "labels", "unit", "fusion", "twists"):
        if key not in doc:
            raise ParseError(f"missing required field {key!r}")

    labels = doc["labels"]
    if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
        raise ParseError('"labels" must be an array of strings')
    if len(set(labels)) != len(labels):
        dupes = sorted({l for l in labels if labels.count(l) > 1})
        raise DuplicateLabel(f"duplicate labels: {dupes}")
    index = {l: i for i, l in enumerate(labels)}

    def lookup(label) -> int:
        if label not in index:
            raise UnknownLabel(f"unknown label {label!r}")
        return index[label]

    unit = lookup(doc["unit"])

    fusion: dict[tuple[int, int, int], int] = {}
    for entry in doc["fusion"]:
        if not (isinstance(entry, list) and len(entry) == 4):
            raise ParseError(f"fusion entry must be [x, y, z, n], got {entry!r}")
        x, y, z, mult = entry
        if not isinstance(mult, int) or mult < 1:
            raise ParseError(f"fusion multiplicity must be a positive integer, got {mult!r}")
        key = (lookup(x), lookup(y), lookup(z))
        if key in fusion:
            raise ParseError(f"duplicate fusion entry for ({x}, {y}, {z})")
        fusion[key] = mult

    twists_doc = doc["twists"]
    if set(twists_doc) != set(labels):
        missing = sorted(set(labels) - set(twists_doc))
        extra = sorted(set(twists_doc) - set(labels))
        if extra:
            raise UnknownLabel(f"twists reference unknown labels {extra}")
        raise ParseError(f"twists missing for labels {missing}")
    twists = []
    for label in labels:
        pair = twists_doc[label]
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(v, int) for v in pair)):
            raise ParseError(f"twist of {label!r} must be [numerator, denominator]")
        num, den = pair
        if den == 0:
            raise InvalidRational(f"twist of {label!r} has denominator 0")
        twists.append(Fraction(num, den) % 1)

    if "duals" in doc:
        duals_doc = doc["duals"]
        if set(duals_doc) != set(labels):
            raise ParseError("duals must map every label")
        dual = tuple(lookup(duals_doc[label]) for label in labels)
    else:
        dual = derive_duals(tuple(labels), unit, fusion)

    return ModularData(
        name=str(doc["name"]),
        labels=tuple(labels),
        unit=unit,
        fusion=fusion,
        dual=dual,
        twists=tuple(twists),
    )


def load_mtc(path: str | Path) -> ModularData:
    return parse_mtc(Path(path).read_bytes())


def serialize_mtc(m: ModularData) -> str:
    """Canonical serialization: fixed key order, fusion sorted by labels."""
    fusion_entries = sorted(
        (
            [m.labels[x], m.labels[y], m.labels[z], mult]
            for (x, y, z), mult in m.fusion.items()
        ),
    )
    doc = {
        "name": m.name,
        "labels": list(m.labels),
        "unit": m.labels[m.unit],
        "fusion": fusion_entries,
        "twists": {
            label: [m.twists[i].numerator, m.twists[i].denominator]
            for i, label in enumerate(m.labels)
        },
        "duals": {label: m.labels[m.dual[i]] for i, label in enumerate(m.labels)},
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def validate_mtc(m: ModularData) -> ValidationReport:
    """Check every fusion-ring axiom; reports all violations, not the first."""
    violations: list[Violation] = []
    rng = range(m.rank)
    lab = m.labels

    # unit laws
    for x in rng:
        for y in rng:
            want = 1 if x == y else 0
            if m.n(m.unit, x, y) != want:
                violations.append(Violation(
                    "unit-law", (m.unit, x, y),
                    f"N_{{1,{lab[x]}}}^{lab[y]} = {m.n(m.unit, x, y)}, expected {want}",
                ))
            if m.n(x, m.unit, y) != want:
                violations.append(Violation(
                    "unit-law", (x, m.unit, y),
                    f"N_{{{lab[x]},1}}^{lab[y]} = {m.n(x, m.unit, y)}, expected {want}",
                ))

    # associativity, via the sparse support
    by_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for (x, y, z), mult in m.fusion.items():
        by_pair.setdefault((x, y), []).append((z, mult))

    def product_sums(x: int, y: int, z: int) -> dict[int, int]:
        # sum over w of N_{xy}^w N_{wz}^u, as a sparse map u -> value
        out: dict[int, int] = {}
        for w, nw in by_pair.get((x, y), ()):
            for u, nu in by_pair.get((w, z), ()):
                out[u] = out.get(u, 0) + nw * nu
        return out

    for x in rng:
        for y in rng:
            for z in rng:
                lhs = product_sums(x, y, z)
                rhs: dict[int, int] = {}
                for w, nw in by_pair.get((y, z), ()):
                    for u, nu in by_pair.get((x, w), ()):
                        rhs[u] = rhs.get(u, 0) + nw * nu
                if lhs != rhs:
                    for u in sorted(set(lhs) | set(rhs)):
                        l, r = lhs.get(u, 0), rhs.get(u, 0)
                        if l != r:
                            violations.append(Violation(
                                "associativity", (x, y, z, u),
                                f"(({lab[x]} {lab[y]}) {lab[z]} -> {lab[u]}) = {l} "
                                f"but ({lab[x]} ({lab[y]} {lab[z]}) -> {lab[u]}) = {r}",
                            ))

    # duality
    for x in rng:
        for y in rng:
            want = 1 if y == m.dual[x] else 0
            got = m.n(x, y, m.unit)
            if got != want:
                violations.append(Violation(
                    "duality", (x, y),
                    f"N_{{{lab[x]},{lab[y]}}}^1 = {got}, expected {want}",
                ))
        if m.dual[m.dual[x]] != x:
            violations.append(Violation(
                "duality", (x,),
                f"dual is not an involution at {lab[x]!r}",
            ))
    if m.dual[m.unit] != m.unit:
        violations.append(Violation(
            "duality", (m.unit,), "dual of the unit is not the unit"))

    # twist of unit
    if m.twists[m.unit] != 0:
        violations.append(Violation(
            "unit-twist", (m.unit,),
            f"twist of the unit is {m.twists[m.unit]}, expected 0",
        ))

    return ValidationReport(tuple(violations))
