"""Soft topologies on a finite signature.

A space is an open family over a signature together with an `absolute`
soft set: the whole lattice for an ordinary space, the carrier for a
subspace. Every operator (complement, interior, closure, and the semi
machinery built on top) is relative to the absolute, which is what lets
subspaces be analyzed as first-class spaces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import kernels
from .core import (
    SoftSet,
    SpaceSignature,
    bit_cap,
    make_absolute,
    make_null,
    parse_set_literal,
    parse_signature,
)
from .errors import BitCapExceeded, InvalidTopology, LiteralError, SignatureMismatch


@dataclass(frozen=True)
class AxiomViolation:
    """First failed topology axiom, with the witnessing member sets."""

    code: str  # carrier | missing-null | missing-absolute | union | intersection
    witnesses: tuple[SoftSet, ...]

    def __str__(self):
        lits = [json.dumps(w.to_literal()) for w in self.witnesses]
        if self.code == "missing-null":
            return "the null soft set is not a member"
        if self.code == "missing-absolute":
            return "the absolute soft set is not a member"
        if self.code == "carrier":
            return f"member {lits[0]} is not contained in the absolute set"
        joiner = "union" if self.code == "union" else "intersection"
        return f"{joiner} of {lits[0]} and {lits[1]} is not a member"

    def to_obj(self) -> dict:
        return {
            "axiom": self.code,
            "witnesses": [w.to_literal() for w in self.witnesses],
        }


class SoftTopology:
    """Immutable open family; construct via validate_topology or the factories."""

    __slots__ = ("signature", "absolute", "opens", "_mask_set", "_cache")

    def __init__(self, signature: SpaceSignature, opens: Iterable[SoftSet],
                 absolute: SoftSet | None = None):
        absolute = make_absolute(signature) if absolute is None else absolute
        if absolute.signature != signature:
            raise SignatureMismatch("absolute set bound to a different signature")
        seen: dict[int, SoftSet] = {}
        for o in opens:
            if o.signature != signature:
                raise SignatureMismatch("open set bound to a different signature")
            if o.mask & ~absolute.mask:
                raise InvalidTopology(AxiomViolation("carrier", (o,)))
            seen[o.mask] = o
        ordered = tuple(seen[m] for m in sorted(seen))
        self.signature = signature
        self.absolute = absolute
        self.opens = ordered
        self._mask_set = frozenset(seen)
        self._cache: dict = {}

    # -- identity ----------------------------------------------------------

    def open_masks(self) -> list[int]:
        return [o.mask for o in self.opens]

    def encoding(self) -> str:
        parts = [self.signature.key(), ",".join(o.encoding() for o in self.opens)]
        if not self.absolute.is_absolute:
            parts.append(f"abs={self.absolute.encoding()}")
        return "::".join(parts)

    def __eq__(self, other):
        return isinstance(other, SoftTopology) and self.encoding() == other.encoding()

    def __hash__(self):
        return hash(self.encoding())

    def __repr__(self):
        return f"SoftTopology({self.signature.n}x{self.signature.m}, {len(self.opens)} opens)"

    # -- membership and complements ----------------------------------------

    def _inside(self, g: SoftSet) -> SoftSet:
        if g.signature != self.signature:
            raise SignatureMismatch("set bound to a different signature")
        if g.mask & ~self.absolute.mask:
            raise LiteralError("set lies outside the space's absolute set")
        return g

    def is_open(self, g: SoftSet) -> bool:
        return self._inside(g).mask in self._mask_set

    def relative_complement(self, g: SoftSet) -> SoftSet:
        return SoftSet(self.signature, self.absolute.mask ^ self._inside(g).mask)

    def closed_sets(self) -> tuple[SoftSet, ...]:
        masks = sorted(self.absolute.mask ^ o.mask for o in self.opens)
        return tuple(SoftSet(self.signature, m) for m in masks)

    def is_closed(self, g: SoftSet) -> bool:
        return (self.absolute.mask ^ self._inside(g).mask) in self._mask_set

    # -- interior / closure --------------------------------------------------

    def interior(self, g: SoftSet) -> SoftSet:
        m = kernels.interior_mask(self._inside(g).mask, self.open_masks())
        return SoftSet(self.signature, m)

    def closure(self, g: SoftSet) -> SoftSet:
        m = kernels.closure_mask(self._inside(g).mask, self.open_masks(), self.absolute.mask)
        return SoftSet(self.signature, m)

    def lattice(self) -> Iterator[SoftSet]:
        """Every soft set under the absolute, in ascending encoding order."""
        for m in kernels.submasks(self.absolute.mask):
            yield SoftSet(self.signature, m)

    def to_obj(self) -> dict:
        if not self.absolute.is_absolute:
            raise LiteralError("only whole spaces have a file form; export the base space")
        return {
            "signature": self.signature.to_obj(),
            "opens": [o.to_literal() for o in self.opens],
        }


def check_topology(sig: SpaceSignature, opens: Iterable[SoftSet],
                   absolute: SoftSet | None = None) -> AxiomViolation | None:
    """First violated axiom of a candidate family, or None when valid."""
    absolute = make_absolute(sig) if absolute is None else absolute
    masks = []
    for o in opens:
        if o.signature != sig:
            raise SignatureMismatch("candidate set bound to a different signature")
        masks.append(o.mask)
    hit = kernels.check_family(masks, absolute.mask)
    if hit is None:
        return None
    code, a, b = hit
    wit = tuple(SoftSet(sig, m) for m in (a, b) if m >= 0)
    return AxiomViolation(code, wit)


def validate_topology(sig: SpaceSignature, opens: Iterable[SoftSet],
                      absolute: SoftSet | None = None) -> SoftTopology:
    """Validate the axioms and return the space; raises InvalidTopology."""
    opens = tuple(opens)
    violation = check_topology(sig, opens, absolute)
    if violation is not None:
        raise InvalidTopology(violation)
    return SoftTopology(sig, opens, absolute)


def indiscrete(sig: SpaceSignature) -> SoftTopology:
    return SoftTopology(sig, (make_null(sig), make_absolute(sig)))


def discrete(sig: SpaceSignature, cap: int | None = None) -> SoftTopology:
    cap = bit_cap() if cap is None else cap
    if sig.bits > cap:
        raise BitCapExceeded(f"discrete space on {sig.bits} bits exceeds the {cap}-bit cap")
    return SoftTopology(sig, (SoftSet(sig, m) for m in range(1 << sig.bits)))


def from_subbasis(sig: SpaceSignature, seeds: Iterable[SoftSet],
                  cap: int | None = None) -> SoftTopology:
    """Smallest topology containing the seeds.

    Closes under pairwise union and intersection to a fixpoint (which on a
    finite lattice is closure under arbitrary unions) after adding the null
    and absolute sets. The family may not exceed 2**cap members.
    """
    cap = bit_cap() if cap is None else cap
    limit = 1 << cap
    family = {0, sig.full_mask}
    for s in seeds:
        if s.signature != sig:
            raise SignatureMismatch("seed set bound to a different signature")
        family.add(s.mask)
    pending = sorted(family)
    while pending:
        fresh: set[int] = set()
        members = sorted(family)
        for x in pending:
            for y in members:
                u = x | y
                if u not in family:
                    fresh.add(u)
                w = x & y
                if w not in family:
                    fresh.add(w)
        family |= fresh
        if len(family) > limit:
            raise BitCapExceeded(
                f"generated family exceeds 2^{cap} members; raise SOFTTOPO_BITCAP to allow"
            )
        pending = sorted(fresh)
    return SoftTopology(sig, (SoftSet(sig, m) for m in sorted(family)))


def subspace(t: SoftTopology, carrier: SoftSet) -> SoftTopology:
    """Relative topology {O ∩ carrier}; the new absolute is the old one ∩ carrier."""
    if carrier.signature != t.signature:
        raise SignatureMismatch("carrier bound to a different signature")
    absolute = t.absolute & carrier
    opens = {o.mask & absolute.mask for o in t.opens}
    return SoftTopology(t.signature, (SoftSet(t.signature, m) for m in sorted(opens)), absolute)


def is_basis(t: SoftTopology, basis: Iterable[SoftSet]) -> bool:
    """True when every open is a union of basis members (null = empty union)."""
    bmasks = []
    for b in basis:
        if not t.is_open(b):
            raise LiteralError("basis candidate contains a non-open set")
        bmasks.append(b.mask)
    for o in t.opens:
        acc = 0
        for bm in bmasks:
            if bm & ~o.mask == 0:
                acc |= bm
        if acc != o.mask:
            return False
    return True


# -- space files -------------------------------------------------------------


def parse_space(obj) -> SoftTopology:
    """Parse {"signature": {...}, "opens": [...]} and validate the axioms."""
    if not isinstance(obj, Mapping):
        raise LiteralError("space must be an object")
    extra = set(obj) - {"signature", "opens"}
    if extra:
        raise LiteralError(f"unknown space fields: {sorted(extra)}")
    if "signature" not in obj or "opens" not in obj:
        raise LiteralError("space needs 'signature' and 'opens'")
    sig = parse_signature(obj["signature"])
    if not isinstance(obj["opens"], (list, tuple)):
        raise LiteralError("'opens' must be a list of soft set literals")
    opens = tuple(parse_set_literal(sig, lit) for lit in obj["opens"])
    return validate_topology(sig, opens)


def load_space(path: str) -> SoftTopology:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise LiteralError(f"cannot read space file {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise LiteralError(f"space file {path} is not valid JSON: {exc}")
    return parse_space(obj)


def save_space(t: SoftTopology, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(t.to_obj(), fh, indent=1, sort_keys=False)
        fh.write("\n")
