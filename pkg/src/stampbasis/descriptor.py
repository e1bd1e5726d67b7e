"""JSON descriptors for the three basis kinds, with re-verification.

Schema: {"kind", "params": {...}, "elements": [...], "claimed": {...}}.
Integers above 2^53 are written as decimal strings so that every JSON
consumer reads them exactly; the parser accepts either form.

    kind        params        claimed keys
    cyclic      modulus       order
    segment     budget        reach
    structured  period        order, essential_count, essential_sizes
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cyclic import CyclicBasis, cyclic_order
from .errors import MalformedDescriptor, NotABasis, VerificationMismatch
from .intbasis import StructuredIntegerBasis, basis_order, enumerate_essential
from .segment import SegmentBasis, reach

KINDS = {"cyclic": "modulus", "segment": "budget", "structured": "period"}
CLAIM_KEYS = {
    "cyclic": ("order",),
    "segment": ("reach",),
    "structured": ("order", "essential_count", "essential_sizes"),
}
SAFE_INT = 2**53


def _enc(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > SAFE_INT else value
    if isinstance(value, (list, tuple)):
        return [_enc(v) for v in value]
    if isinstance(value, dict):
        return {k: _enc(v) for k, v in value.items()}
    return value


def _int(value, where: str) -> int:
    if isinstance(value, bool):
        raise MalformedDescriptor(f"{where}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and value.lstrip("-").isdigit():
        return int(value)
    raise MalformedDescriptor(f"{where}: expected an integer, got {value!r}")


@dataclass(frozen=True)
class BasisDescriptor:
    kind: str
    params: dict
    elements: tuple[int, ...]
    claimed: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise MalformedDescriptor(f"unknown kind {self.kind!r}; expected one of {sorted(KINDS)}")
        key = KINDS[self.kind]
        if key not in self.params:
            raise MalformedDescriptor(f"{self.kind} descriptor needs params.{key}")
        unknown = set(self.claimed) - set(CLAIM_KEYS[self.kind])
        if unknown:
            raise MalformedDescriptor(f"unknown claimed fields for {self.kind}: {sorted(unknown)}")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": _enc(dict(self.params)),
            "elements": _enc(list(self.elements)),
            "claimed": _enc(dict(self.claimed)),
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data) -> "BasisDescriptor":
        if not isinstance(data, dict):
            raise MalformedDescriptor("descriptor must be a JSON object")
        for key in ("kind", "params", "elements"):
            if key not in data:
                raise MalformedDescriptor(f"missing field {key!r}")
        if not isinstance(data["params"], dict) or not isinstance(data["elements"], list):
            raise MalformedDescriptor("params must be an object and elements a list")
        claimed = data.get("claimed") or {}
        if not isinstance(claimed, dict):
            raise MalformedDescriptor("claimed must be an object")
        params = {k: _int(v, f"params.{k}") for k, v in data["params"].items()}
        elements = tuple(_int(v, "elements") for v in data["elements"])
        parsed = {}
        for k, v in claimed.items():
            if v is None:
                parsed[k] = None
            elif isinstance(v, list):
                parsed[k] = [_int(x, f"claimed.{k}") for x in v]
            else:
                parsed[k] = _int(v, f"claimed.{k}")
        return cls(data["kind"], params, elements, parsed)

    @classmethod
    def from_json(cls, text: str) -> "BasisDescriptor":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedDescriptor(f"invalid JSON: {exc.msg} at line {exc.lineno}") from None
        return cls.from_dict(data)

    def basis(self):
        try:
            if self.kind == "cyclic":
                return CyclicBasis(self.params["modulus"], self.elements)
            if self.kind == "segment":
                return SegmentBasis(self.elements, self.params["budget"])
            return StructuredIntegerBasis(self.params["period"], self.elements)
        except ValueError as exc:
            raise MalformedDescriptor(str(exc)) from None


def measure(desc: BasisDescriptor) -> dict:
    """Recompute every claimable field of a descriptor."""
    basis = desc.basis()
    if desc.kind == "cyclic":
        return {"order": cyclic_order(basis.modulus, basis.elements)}
    if desc.kind == "segment":
        return {"reach": reach(basis).reach}
    out = {"order": basis_order(basis)}
    if out["order"] is None:
        out.update(essential_count=None, essential_sizes=None)
    else:
        found = enumerate_essential(basis)
        out.update(essential_count=len(found), essential_sizes=sorted(e.size for e in found))
    return out


def verify(desc: BasisDescriptor) -> dict:
    """Measured values; raises VerificationMismatch on the first disagreeing claim."""
    actual = measure(desc)
    for key in CLAIM_KEYS[desc.kind]:
        if key in desc.claimed and desc.claimed[key] != actual[key]:
            raise VerificationMismatch(key, desc.claimed[key], actual[key])
    return actual


def structured(basis: StructuredIntegerBasis, claimed: dict | None = None) -> BasisDescriptor:
    return BasisDescriptor("structured", {"period": basis.period}, basis.finite_part, claimed or {})


def cyclic(modulus: int, elements, claimed: dict | None = None) -> BasisDescriptor:
    return BasisDescriptor("cyclic", {"modulus": modulus}, tuple(sorted(elements)), claimed or {})


def segment(stamps, budget: int, claimed: dict | None = None) -> BasisDescriptor:
    return BasisDescriptor("segment", {"budget": budget}, tuple(sorted(stamps)), claimed or {})
