"""Constructors and laws over canonical collections.

Weak classes and weak pairs collect everything indistinguishable from the
given elements, so their micro-atom classes always appear at full declared
population. Strong singletons and n-singletons carve sub-collections of a
weak class with a prescribed quasi-cardinal. Strong difference removes one
member indistinguishable from its operand, dropping the quasi-cardinal by
exactly one. Separation filters by predicates that are invariant under
indistinguishability by construction: the predicate grammar can only inspect
class descriptors, never tell two members of a class apart, so classes are
kept or dropped whole.

Cardinals are plain non-negative ints, kept within an unsigned 64-bit range
for the power operation; leaving that range raises Overflow rather than
silently producing huge values.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Union

from .core import (
    ClassDescriptor,
    Element,
    MAtom,
    MAtomOcc,
    MLabel,
    MSpecies,
    QClass,
    QSet,
    QSetElem,
    canonicalize,
    class_of,
    prefixed_form,
    validate_element,
)
from .errors import (
    BetaExceedsQc,
    CountExceedsUniverse,
    EvalTypeError,
    NoIndistinguishableElement,
    Overflow,
)
from .universe import Universe

# 2**n must stay representable in an unsigned 64-bit word.
MAX_POWER_EXPONENT = 63


# --- Predicates (the separation formula fragment) ---------------------------

class Predicate:
    """Base class; subclasses form the class-level predicate grammar."""


@dataclass(frozen=True)
class PTrue(Predicate):
    pass


@dataclass(frozen=True)
class PFalse(Predicate):
    pass


@dataclass(frozen=True)
class SpeciesIs(Predicate):
    name: str


@dataclass(frozen=True)
class IsMicro(Predicate):
    """Any micro-atom class."""


@dataclass(frozen=True)
class IsMacro(Predicate):
    """Any macro-atom class, or a specific one when a label is given."""

    label: str | None = None


@dataclass(frozen=True)
class IsQSet(Predicate):
    """The class of a nested collection."""


@dataclass(frozen=True)
class QcCompare(Predicate):
    """Compare the quasi-cardinal of a nested collection class with a bound.

    False on atom classes: atoms have no quasi-cardinal.
    """

    op: str
    bound: int


@dataclass(frozen=True)
class PNot(Predicate):
    inner: Predicate


@dataclass(frozen=True)
class PAnd(Predicate):
    left: Predicate
    right: Predicate


@dataclass(frozen=True)
class POr(Predicate):
    left: Predicate
    right: Predicate


_CMP = {
    "<": operator.lt,
    "<=": operator.le,
    "=": operator.eq,
    "!=": operator.ne,
    ">=": operator.ge,
    ">": operator.gt,
}

COMPARISON_OPS = tuple(_CMP)


def predicate_holds(pred: Predicate, desc: ClassDescriptor) -> bool:
    """Evaluate a predicate on a class descriptor. Total: never errors."""
    match pred:
        case PTrue():
            return True
        case PFalse():
            return False
        case SpeciesIs(name):
            return isinstance(desc, MSpecies) and desc.name == name
        case IsMicro():
            return isinstance(desc, MSpecies)
        case IsMacro(label):
            if not isinstance(desc, MLabel):
                return False
            return label is None or desc.name == label
        case IsQSet():
            return isinstance(desc, QClass)
        case QcCompare(op, bound):
            if not isinstance(desc, QClass):
                return False
            return _CMP[op](desc.qset.quasi_cardinal(), bound)
        case PNot(inner):
            return not predicate_holds(inner, desc)
        case PAnd(left, right):
            return predicate_holds(left, desc) and predicate_holds(right, desc)
        case POr(left, right):
            return predicate_holds(left, desc) or predicate_holds(right, desc)
    raise TypeError(f"not a predicate: {pred!r}")


# --- Constructors -------------------------------------------------------------

def weak_class(x: Element, universe: Universe) -> QSet:
    """All objects indistinguishable from ``x``.

    For a micro-atom this is its species at full declared population; for a
    macro-atom, the one labelled individual. A canonical collection counts as
    a single object of the model's domain, so its weak class has one member:
    the model cannot distinguish copies it has no way to represent.
    """
    if isinstance(x, MAtomOcc):
        return canonicalize({MSpecies(x.species): universe.multiplicity(x.species)}, universe)
    if isinstance(x, MAtom):
        universe.check_label(x.label)
        return canonicalize({MLabel(x.label): 1}, universe)
    if isinstance(x, QSetElem):
        return canonicalize({QClass(x.qset): 1}, universe)
    raise TypeError(f"not an element: {x!r}")


def weak_pair(x: Element, y: Element, universe: Universe) -> QSet:
    """Everything indistinguishable from either ``x`` or ``y``.

    Class-wise maximum of the two weak classes; coincides with
    ``weak_class(x)`` when the arguments are indistinguishable.
    """
    a = weak_class(x, universe)
    b = weak_class(y, universe)
    merged = {d: c for d, c in a.items}
    for d, c in b.items:
        merged[d] = max(merged.get(d, 0), c)
    return canonicalize(merged, universe)


def strong_singleton(x: Element, universe: Universe) -> QSet:
    """A sub-collection of the weak class of ``x`` holding exactly one member."""
    validate_element(x, universe)
    return canonicalize({class_of(x): 1}, universe)


def n_singleton(x: Element, n: int, universe: Universe) -> QSet:
    """A sub-collection of the weak class of ``x`` with quasi-cardinal ``n``.

    Defined for atoms only. ``n`` may not exceed the class population;
    ``n = 0`` yields the empty collection.
    """
    if isinstance(x, QSetElem):
        raise EvalTypeError("n-singleton is defined for atoms, not collections")
    if not isinstance(x, (MAtomOcc, MAtom)):
        raise TypeError(f"not an element: {x!r}")
    if n < 0:
        raise ValueError(f"cardinal must be non-negative, got {n}")
    if isinstance(x, MAtomOcc):
        population = universe.multiplicity(x.species)
    else:
        universe.check_label(x.label)
        population = 1
    if n > population:
        raise CountExceedsUniverse(
            f"n-singleton of size {n} requested, class of {class_of(x)} holds {population}")
    return canonicalize({class_of(x): n}, universe)


def strong_difference(q: QSet, y: Element) -> QSet:
    """Drop one member of ``q`` indistinguishable from ``y``.

    The quasi-cardinal decreases by exactly one. Raises
    NoIndistinguishableElement when no member of ``q`` qualifies.
    """
    target = class_of(y)
    items = []
    found = False
    for desc, count in q.items:
        if desc == target:
            found = True
            if count > 1:
                items.append((desc, count - 1))
        else:
            items.append((desc, count))
    if not found:
        raise NoIndistinguishableElement(
            f"no member of {q} is indistinguishable from class {prefixed_form(target)}")
    return QSet(tuple(items))


def separation(q: QSet, pred: Predicate) -> QSet:
    """Sub-collection of the classes satisfying the predicate, kept whole."""
    return QSet(tuple((d, c) for d, c in q.items if predicate_holds(pred, d)))


def quasi_cardinal(q: QSet) -> int:
    """Total member count. Equals the classical cardinality when ``q`` has no
    micro-atom species in its transitive closure."""
    return q.quasi_cardinal()


def power_qc(q: QSet) -> int:
    """Quasi-cardinal of the power collection: 2 to the quasi-cardinal.

    The power collection itself is never materialized; its unit
    sub-collections have no canonical element-level representation.
    """
    n = q.quasi_cardinal()
    if n > MAX_POWER_EXPONENT:
        raise Overflow(f"2^{n} exceeds the supported 64-bit cardinal range")
    return 1 << n


def sub_qset(q: QSet, beta: int) -> QSet:
    """A deterministic witness sub-collection with quasi-cardinal ``beta``.

    Greedy in canonical class order; any witness satisfies the existence
    requirement, this one is reproducible.
    """
    if beta < 0:
        raise ValueError(f"cardinal must be non-negative, got {beta}")
    total = q.quasi_cardinal()
    if beta > total:
        raise BetaExceedsQc(f"requested quasi-cardinal {beta} exceeds qc = {total}")
    remaining = beta
    items = []
    for desc, count in q.items:
        if remaining == 0:
            break
        take = min(count, remaining)
        items.append((desc, take))
        remaining -= take
    return QSet(tuple(items))


def ordered_pair(x: Element, y: Element, universe: Universe) -> QSet:
    """Pair construction via nested weak classes.

    For indistinguishable arguments this collapses to the doubly nested weak
    class of ``x`` and is symmetric under swapping, so no order can actually
    be encoded on such pairs.
    """
    first = QSetElem(weak_class(x, universe))
    second = QSetElem(weak_pair(x, y, universe))
    return weak_pair(first, second, universe)
