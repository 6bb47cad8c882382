"""Canonical collection values and the indistinguishability machinery.

Micro-atoms carry a species and nothing else: two occurrences of the same
species are structurally identical, and the engine never mints hidden
per-object identifiers for them. Macro-atoms are classical labelled
individuals. Collections are stored canonically as a map from equivalence
class to member count, so "same quantity of members per class" (the weak
extensionality criterion) and structural equality of the representation are
the same relation by construction.

Identity is deliberately partial: ``extensional_equal`` refuses micro-atom
occurrences, for which only the total equivalence ``indistinguishable``
is defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Tuple, Union

from .errors import CountExceedsUniverse, IllFormedIdentity, UnknownLabel, UnknownSpecies
from .universe import Universe


class Tri(Enum):
    """Three-valued answer to a membership query."""

    YES = "yes"
    NO = "no"
    INDETERMINATE = "indeterminate"

    def __str__(self) -> str:
        return self.value

    @staticmethod
    def from_bool(b: bool) -> "Tri":
        return Tri.YES if b else Tri.NO


# --- Elements: the things that can occur in a collection ---------------------

@dataclass(frozen=True)
class MAtomOcc:
    """A micro-atom occurrence. Only the species is observable."""

    species: str


@dataclass(frozen=True)
class MAtom:
    """A macro-atom: a labelled classical individual."""

    label: str


@dataclass(frozen=True)
class QSetElem:
    """A collection occurring as an element of another collection."""

    qset: "QSet"


Element = Union[MAtomOcc, MAtom, QSetElem]


# --- Class descriptors: keys of the canonical representation -----------------

@dataclass(frozen=True)
class MSpecies:
    name: str


@dataclass(frozen=True)
class MLabel:
    name: str


@dataclass(frozen=True)
class QClass:
    """Equivalence class of collections, keyed by canonical form."""

    qset: "QSet"


ClassDescriptor = Union[MSpecies, MLabel, QClass]

# Deterministic descriptor order: kind rank, then name, then recursive form.
_KIND_MSPECIES = 0
_KIND_MLABEL = 1
_KIND_QCLASS = 2


def descriptor_key(desc: ClassDescriptor):
    """Sort key realizing the canonical descriptor order."""
    if isinstance(desc, MSpecies):
        return (_KIND_MSPECIES, desc.name)
    if isinstance(desc, MLabel):
        return (_KIND_MLABEL, desc.name)
    return (_KIND_QCLASS, desc.qset.structure_key())


def prefixed_form(desc: ClassDescriptor) -> str:
    """Render a descriptor with its sort prefix, e.g. ``m:photon``."""
    if isinstance(desc, MSpecies):
        return f"m:{desc.name}"
    if isinstance(desc, MLabel):
        return f"M:{desc.name}"
    return str(desc.qset)

def compact_form(desc: ClassDescriptor) -> str:
    """Render a descriptor without prefix, as used in enumeration output."""
    if isinstance(desc, MSpecies):
        return desc.name
    if isinstance(desc, MLabel):
        return desc.name
    return str(desc.qset)


# --- Canonical collections ----------------------------------------------------

@dataclass(frozen=True)
class QSet:
    """A collection in canonical form: (class, count) pairs in canonical order.

    Counts are at least 1, pairs are strictly ordered by ``descriptor_key``,
    and nested collections are themselves canonical. Use :func:`canonicalize`
    to build one; the raw constructor is for internal use on data that already
    satisfies the invariants (they are re-checked cheaply).
    """

    items: Tuple[Tuple[ClassDescriptor, int], ...]

    def __post_init__(self):
        previous = None
        for desc, count in self.items:
            if not isinstance(count, int) or isinstance(count, bool) or count < 1:
                raise ValueError(f"class count must be a positive integer, got {count!r}")
            key = descriptor_key(desc)
            if previous is not None and key <= previous:
                raise ValueError("class descriptors must be strictly ordered; use canonicalize()")
            previous = key

    @staticmethod
    def empty() -> "QSet":
        return _EMPTY

    def count(self, desc: ClassDescriptor) -> int:
        for d, c in self.items:
            if d == desc:
                return c
        return 0

    def descriptors(self) -> tuple[ClassDescriptor, ...]:
        return tuple(d for d, _ in self.items)

    def quasi_cardinal(self) -> int:
        return sum(c for _, c in self.items)

    def is_empty(self) -> bool:
        return not self.items

    def issubset(self, other: "QSet") -> bool:
        """Class-wise count comparison: every class held at most as often."""
        return all(c <= other.count(d) for d, c in self.items)

    def structure_key(self):
        return tuple((descriptor_key(d), c) for d, c in self.items)

    def __contains__(self, desc: ClassDescriptor) -> bool:
        return self.count(desc) > 0

    def __str__(self) -> str:
        inner = ", ".join(f"{prefixed_form(d)}:{c}" for d, c in self.items)
        return f"[{inner}]"


_EMPTY = QSet(())


def _validate_descriptor(desc: ClassDescriptor, universe: Universe) -> None:
    if isinstance(desc, MSpecies):
        universe.multiplicity(desc.name)
    elif isinstance(desc, MLabel):
        universe.check_label(desc.name)
    elif isinstance(desc, QClass):
        validate_qset(desc.qset, universe)
    else:
        raise TypeError(f"not a class descriptor: {desc!r}")


def validate_qset(q: QSet, universe: Universe) -> None:
    """Check every class of ``q`` (recursively) against the universe bounds."""
    for desc, count in q.items:
        _validate_descriptor(desc, universe)
        _check_bound(desc, count, universe)


def _check_bound(desc: ClassDescriptor, count: int, universe: Universe) -> None:
    if isinstance(desc, MSpecies):
        limit = universe.multiplicity(desc.name)
        if count > limit:
            raise CountExceedsUniverse(
                f"{count} occurrences of species {desc.name!r} requested, universe holds {limit}")
    elif isinstance(desc, MLabel):
        if count > 1:
            raise CountExceedsUniverse(
                f"macro-atom {desc.name!r} is a single individual, cannot occur {count} times")
    # Collection classes have no declared population bound: the theory does
    # not fix how many indistinguishable collections exist.


def canonicalize(
    counts: Mapping[ClassDescriptor, int] | Iterable[Tuple[ClassDescriptor, int]],
    universe: Universe,
) -> QSet:
    """Build a canonical collection from a class-to-count builder.

    Zero counts are dropped, duplicate descriptors are summed, all referenced
    species and labels are checked against the universe, and species counts
    may not exceed the declared multiplicity. Already canonical input is
    returned structurally unchanged (canonicalization is idempotent).
    """
    pairs = counts.items() if isinstance(counts, Mapping) else counts
    merged: dict[ClassDescriptor, int] = {}
    for desc, count in pairs:
        if not isinstance(count, int) or isinstance(count, bool):
            raise ValueError(f"class count must be an integer, got {count!r}")
        if count < 0:
            raise ValueError(f"class count must be non-negative, got {count}")
        if count == 0:
            continue
        _validate_descriptor(desc, universe)
        merged[desc] = merged.get(desc, 0) + count
    for desc, count in merged.items():
        _check_bound(desc, count, universe)
    return QSet(tuple(sorted(merged.items(), key=lambda item: descriptor_key(item[0]))))


# --- Bridges between elements and classes -------------------------------------

def class_of(x: Element) -> ClassDescriptor:
    """The equivalence class an element belongs to."""
    if isinstance(x, MAtomOcc):
        return MSpecies(x.species)
    if isinstance(x, MAtom):
        return MLabel(x.label)
    if isinstance(x, QSetElem):
        return QClass(x.qset)
    raise TypeError(f"not an element: {x!r}")


def element_of(desc: ClassDescriptor) -> Element:
    """A representative element of a class. For micro-atom classes the
    representative is anonymous: any member of the species would do."""
    if isinstance(desc, MSpecies):
        return MAtomOcc(desc.name)
    if isinstance(desc, MLabel):
        return MAtom(desc.name)
    if isinstance(desc, QClass):
        return QSetElem(desc.qset)
    raise TypeError(f"not a class descriptor: {desc!r}")


def validate_element(x: Element, universe: Universe) -> None:
    """Check that an element refers only to declared species and labels."""
    if isinstance(x, MAtomOcc):
        universe.multiplicity(x.species)
    elif isinstance(x, MAtom):
        universe.check_label(x.label)
    elif isinstance(x, QSetElem):
        validate_qset(x.qset, universe)
    else:
        raise TypeError(f"not an element: {x!r}")


# --- The equivalence machinery -------------------------------------------------

def indistinguishable(x: Element, y: Element) -> bool:
    """Total equivalence: same species, same label, or canonically equal
    collections. Never errors; cross-sort pairs are simply not equivalent."""
    if isinstance(x, MAtomOcc) and isinstance(y, MAtomOcc):
        return x.species == y.species
    if isinstance(x, MAtom) and isinstance(y, MAtom):
        return x.label == y.label
    if isinstance(x, QSetElem) and isinstance(y, QSetElem):
        return x.qset == y.qset
    return False


def extensional_equal(x: Element, y: Element) -> bool:
    """Identity surrogate for macro-atoms and collections.

    Raises IllFormedIdentity when either argument is a micro-atom occurrence:
    for those, equality is not a formula and only ``indistinguishable``
    applies.
    """
    if isinstance(x, MAtomOcc) or isinstance(y, MAtomOcc):
        raise IllFormedIdentity("identity is not defined for micro-atoms; use indistinguishability")
    if isinstance(x, MAtom) and isinstance(y, MAtom):
        return x.label == y.label
    if isinstance(x, QSetElem) and isinstance(y, QSetElem):
        return x.qset == y.qset
    return False


def sim(x: QSet, y: QSet) -> bool:
    """Every member of ``x`` indistinguishable from every member of ``y``.

    Vacuously true when either collection is empty. Note this is not
    reflexive: a collection with members of two different classes is not
    similar to itself.
    """
    if x.is_empty() or y.is_empty():
        return True
    xs = set(x.descriptors())
    ys = set(y.descriptors())
    return len(xs) == 1 and xs == ys


def qsim(x: QSet, y: QSet) -> bool:
    """Similar and of equal quasi-cardinal."""
    return sim(x, y) and x.quasi_cardinal() == y.quasi_cardinal()


def quotient(q: QSet) -> tuple[Tuple[ClassDescriptor, int], ...]:
    """The class/count readout of ``q`` in canonical order."""
    return q.items


def is_set(q: QSet) -> bool:
    """No micro-atom species anywhere in the transitive closure.

    Such collections behave classically: identity applies to all their
    members and membership queries are two-valued.
    """
    for desc, _ in q.items:
        if isinstance(desc, MSpecies):
            return False
        if isinstance(desc, QClass) and not is_set(desc.qset):
            return False
    return True
