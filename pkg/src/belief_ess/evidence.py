"""Dempster-Shafer primitives: frames of discernment, mass functions, belief
and plausibility measures.

Subsets of a frame are represented as bitmasks over the ordered element list,
which fixes iteration order and keeps power-set enumeration O(2^N). Frames are
capped at 16 elements; every use in this library needs only 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from types import MappingProxyType
from typing import Iterable, Mapping, Union

#: Single tolerance used across the library for normalization and degeneracy.
NORMALIZATION_TOL = 1e-12

MAX_FRAME_SIZE = 16

Subset = Union[int, str, Iterable[str]]


class EvidenceError(ValueError):
    """Base class for mass-function construction and query errors."""


class UnknownElement(EvidenceError):
    """A label or bitmask refers to something outside the frame."""


class EmptySetAssigned(EvidenceError):
    """Mass was assigned to the empty set, which is structurally excluded."""


class NegativeWeight(EvidenceError):
    """A mass assignment carried a negative weight."""


class NotNormalized(EvidenceError):
    """Assigned weights do not sum to 1 within tolerance."""


@dataclass(frozen=True)
class FrameOfDiscernment:
    """Ordered set of mutually exclusive, collectively exhaustive events."""

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        if not 1 <= len(self.elements) <= MAX_FRAME_SIZE:
            raise EvidenceError(
                f"frame must have between 1 and {MAX_FRAME_SIZE} elements, "
                f"got {len(self.elements)}"
            )
        if len(set(self.elements)) != len(self.elements):
            raise EvidenceError(f"frame elements must be distinct: {self.elements}")

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        """Bitmask of the whole frame."""
        return (1 << self.size) - 1

    def mask(self, subset: Subset) -> int:
        """Convert a subset (bitmask, single label, or label iterable) to a bitmask."""
        if isinstance(subset, int):
            if not 0 <= subset <= self.full_mask:
                raise UnknownElement(f"bitmask {subset:#x} outside frame of size {self.size}")
            return subset
        if isinstance(subset, str):
            subset = (subset,)
        mask = 0
        for label in subset:
            try:
                mask |= 1 << self.elements.index(label)
            except ValueError:
                raise UnknownElement(f"label {label!r} not in frame {self.elements}") from None
        return mask

    def labels(self, mask: int) -> tuple[str, ...]:
        """Element labels contained in a bitmask, in frame order."""
        return tuple(e for i, e in enumerate(self.elements) if mask >> i & 1)

    def complement(self, mask: int) -> int:
        return self.full_mask & ~self.mask(mask)


@dataclass(frozen=True)
class MassFunction:
    """Basic probability assignment over the non-empty subsets of a frame.

    Invariants, enforced at construction: every stored weight is >= 0, the
    empty set is unrepresentable, and the weights sum to 1 within
    NORMALIZATION_TOL. Build instances through make_mass_function, which also
    renormalizes inputs that are off by at most the tolerance.
    """

    frame: FrameOfDiscernment
    masses: Mapping[int, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "masses", MappingProxyType(dict(self.masses)))
        for mask, weight in self.masses.items():
            if mask == 0:
                raise EmptySetAssigned("mass on the empty set is not representable")
            if not 0 < mask <= self.frame.full_mask:
                raise UnknownElement(f"bitmask {mask:#x} outside frame {self.frame.elements}")
            if weight < 0:
                raise NegativeWeight(f"mass {weight} on {self.frame.labels(mask)}")
        total = fsum(self.masses.values())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(f"masses sum to {total!r}, expected 1")

    def by_labels(self) -> dict[tuple[str, ...], float]:
        """Masses keyed by label tuples, for display and serialization."""
        return {self.frame.labels(mask): w for mask, w in sorted(self.masses.items())}


def make_mass_function(
    frame: FrameOfDiscernment,
    assignments: Iterable[tuple[Subset, float]],
) -> MassFunction:
    """Build a MassFunction from (subset, weight) pairs.

    Duplicate subsets are summed. Weights must be non-negative and sum to 1
    within NORMALIZATION_TOL; a sum within tolerance but not exactly 1 is
    renormalized by dividing every weight by the sum. Exact-zero weights are
    dropped.
    """
    accumulated: dict[int, float] = {}
    for subset, weight in assignments:
        mask = frame.mask(subset)
        if mask == 0:
            raise EmptySetAssigned("cannot assign mass to the empty set")
        if weight < 0:
            raise NegativeWeight(f"negative weight {weight} on {frame.labels(mask)}")
        accumulated[mask] = accumulated.get(mask, 0.0) + weight
    total = fsum(accumulated.values())
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"weights sum to {total!r}, expected 1 within {NORMALIZATION_TOL}")
    if total != 1.0:
        accumulated = {mask: w / total for mask, w in accumulated.items()}
    accumulated = {mask: w for mask, w in accumulated.items() if w != 0.0}
    return MassFunction(frame, accumulated)


def belief(m: MassFunction, subset: Subset) -> float:
    """Total mass committed to subsets of `subset` (lower probability bound)."""
    mask = m.frame.mask(subset)
    return fsum(w for b, w in m.masses.items() if b & mask == b)


def plausibility(m: MassFunction, subset: Subset) -> float:
    """Total mass not contradicting `subset` (upper probability bound).

    Computed directly as the mass of all subsets intersecting `subset`; equal
    to 1 - belief of the complement.
    """
    mask = m.frame.mask(subset)
    return fsum(w for b, w in m.masses.items() if b & mask != 0)
