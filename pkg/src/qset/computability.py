"""Enumeration, three-valued membership, and the undecidability harness.

Enumeration prints every member of a finite collection by repeated strong
difference: each loop turn removes one member and emits a token for it, so
the quasi-cardinal is a strictly decreasing loop variant and the run
terminates after exactly qc steps. Emission indices on the tokens order the
printout; they assert nothing about which indistinguishable object was
removed, because there is no fact of that kind the engine could report.

Membership is three-valued. A candidate micro-atom of species ``s`` against
a collection holding ``n`` of that species out of a declared population
``N``: no members of the class means no; the full population means yes
(the collection contains the whole weak class); anything in between is
indeterminate, because nothing observable distinguishes a member from a
non-member of the same species. The harness below makes that impossibility
checkable at desk scale: it enumerates every deterministic yes/no strategy
over what is actually observable and exhibits, for each, hidden
configurations with identical observations but opposite ground truth.
Hidden per-object identifiers exist only here, as the harness's inaccessible
ground truth; no engine operation ever sees them.

The weak class of an atom is trivially enumerable here because universes are
finite by declaration. That says nothing about weak classes of unbounded
population, whose enumerability remains an open question; this module only
covers the declared-finite case.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Tuple

from .core import (
    ClassDescriptor,
    Element,
    MAtom,
    MAtomOcc,
    MLabel,
    MSpecies,
    QClass,
    QSet,
    Tri,
    canonicalize,
    class_of,
    compact_form,
    element_of,
    is_set,
    validate_element,
)
from .ops import strong_difference
from .universe import Universe

MAX_HARNESS_N = 6

_HARNESS_SPECIES = "specimen"


@dataclass(frozen=True)
class EmissionToken:
    """One printed member: its class plus the position in the printout.

    The index is unique per run and orders the output; it is not an object
    identity.
    """

    descriptor: ClassDescriptor
    index: int

    def line(self) -> str:
        return f"{compact_form(self.descriptor)}#{self.index}"


def enumerate_qset(q: QSet) -> Tuple[EmissionToken, ...]:
    """Print all members of ``q`` and only them, as emission tokens.

    One token per strong-difference step; the empty collection emits
    nothing. Token classes follow canonical descriptor order, each class
    appearing exactly its count many times.
    """
    tokens = []
    current = q
    index = 0
    while not current.is_empty():
        desc = current.items[0][0]
        removed_from = current
        current = strong_difference(current, element_of(desc))
        # What was printed is removed_from minus current: one member of desc.
        assert removed_from.quasi_cardinal() - current.quasi_cardinal() == 1
        index += 1
        tokens.append(EmissionToken(desc, index))
    return tuple(tokens)


@dataclass(frozen=True)
class Observation:
    """Exactly what a membership decision procedure can see.

    The candidate's class, the queried collection's class/count readout, and
    the declared species populations. No per-object identifiers appear here,
    which is the whole point.
    """

    candidate_class: ClassDescriptor
    qset_quotient: Tuple[Tuple[ClassDescriptor, int], ...]
    universe_counts: Tuple[Tuple[str, int], ...]


def observation_of(candidate: Element, q: QSet, universe: Universe) -> Observation:
    validate_element(candidate, universe)
    return Observation(
        candidate_class=class_of(candidate),
        qset_quotient=q.items,
        universe_counts=tuple(universe.m_species.items()),
    )


def decide_membership(candidate: Element, q: QSet, universe: Universe) -> Tri:
    """Three-valued membership of ``candidate`` in ``q``.

    Macro-atoms are classical: yes iff their label class is present. A
    micro-atom candidate is decided only at the boundaries: no members of
    its species means NO, the full declared population means YES, anything
    strictly between is INDETERMINATE. A candidate collection without
    micro-atom species behaves classically; one with them is NO when its
    class is absent and INDETERMINATE when present, since the population of
    a collection class is not a declared quantity and the full-class
    argument is unavailable.
    """
    validate_element(candidate, universe)
    if isinstance(candidate, MAtom):
        return Tri.from_bool(MLabel(candidate.label) in q)
    if isinstance(candidate, MAtomOcc):
        species = candidate.species
        n = q.count(MSpecies(species))
        population = universe.multiplicity(species)
        if n == 0:
            return Tri.NO
        if n == population:
            return Tri.YES
        return Tri.INDETERMINATE
    # Candidate is a collection.
    present = QClass(candidate.qset) in q
    if is_set(candidate.qset):
        return Tri.from_bool(present)
    if not present:
        return Tri.NO
    return Tri.INDETERMINATE


# --- The adversarial harness ---------------------------------------------------

Strategy = Callable[[Observation], Tri]


def constant_strategy(answer: Tri) -> Strategy:
    if answer not in (Tri.YES, Tri.NO):
        raise ValueError("a decision strategy must commit to yes or no")
    return lambda _obs: answer


@dataclass(frozen=True)
class HiddenConfiguration:
    """Ground truth the harness scores against but no strategy can observe.

    ``member_ids`` says which of the ``universe_size`` objects of the species
    actually sit in the collection, and ``candidate_id`` which object the
    query is about. These identifiers model a fact of the matter the
    observable layer cannot access; they never leave this module.
    """

    species: str
    universe_size: int
    member_ids: frozenset[int]
    candidate_id: int

    @property
    def candidate_is_member(self) -> bool:
        return self.candidate_id in self.member_ids


def hidden_configurations(universe_size: int, n: int) -> Iterator[HiddenConfiguration]:
    """All ways of hiding an n-member collection and a candidate in N objects."""
    ids = range(1, universe_size + 1)
    for members in itertools.combinations(ids, n):
        for candidate in ids:
            yield HiddenConfiguration(
                species=_HARNESS_SPECIES,
                universe_size=universe_size,
                member_ids=frozenset(members),
                candidate_id=candidate,
            )


def _harness_setup(universe_size: int, n: int):
    universe = Universe({_HARNESS_SPECIES: universe_size}, frozenset())
    collection = canonicalize({MSpecies(_HARNESS_SPECIES): n}, universe)
    candidate = MAtomOcc(_HARNESS_SPECIES)
    return universe, collection, candidate


def observe_configuration(config: HiddenConfiguration) -> Observation:
    """Project a hidden configuration onto its observable part.

    The collection size and the declared population are observable; the
    member identifiers and the candidate identifier are not representable in
    an Observation, so configurations differing only in those project
    identically.
    """
    universe = Universe({config.species: config.universe_size}, frozenset())
    collection = canonicalize(
        {MSpecies(config.species): len(config.member_ids)}, universe)
    return observation_of(MAtomOcc(config.species), collection, universe)


def game_accuracy(universe_size: int, n: int, strategy: Strategy) -> Fraction:
    """Fraction of hidden configurations the strategy answers correctly.

    The candidate is drawn uniformly from the ``universe_size`` objects; the
    best any strategy can do is max(n/N, 1 - n/N).
    """
    if not 0 <= n <= universe_size:
        raise ValueError(f"need 0 <= n <= N, got n={n}, N={universe_size}")
    correct = 0
    total = 0
    for config in hidden_configurations(universe_size, n):
        answer = strategy(observe_configuration(config))
        if answer not in (Tri.YES, Tri.NO):
            raise ValueError("a decision strategy must commit to yes or no")
        total += 1
        if (answer is Tri.YES) == config.candidate_is_member:
            correct += 1
    return Fraction(correct, total)


@dataclass(frozen=True)
class CellResult:
    """Outcome of the strategy sweep for one (N, n) pair."""

    universe_size: int
    n: int
    observations: int
    strategies: int
    max_accuracy: Fraction
    every_strategy_errs: bool
    engine_answer: Tri
    engine_correct_everywhere: bool | None
    verdict: str


@dataclass(frozen=True)
class UndecidabilityReport:
    """Sweep over all N up to the limit and all n from 0 to N."""

    max_universe_size: int
    cells: Tuple[CellResult, ...]

    def confirmed(self) -> bool:
        """True when every interior cell defeats every strategy and both
        boundary rules score perfectly."""
        for cell in self.cells:
            interior = 0 < cell.n < cell.universe_size
            if interior:
                ceiling = max(
                    Fraction(cell.n, cell.universe_size),
                    1 - Fraction(cell.n, cell.universe_size),
                )
                if not cell.every_strategy_errs:
                    return False
                if cell.max_accuracy != ceiling:
                    return False
                if cell.engine_answer is not Tri.INDETERMINATE:
                    return False
            else:
                if not cell.engine_correct_everywhere:
                    return False
        return True


def _sweep_cell(universe_size: int, n: int) -> CellResult:
    universe, collection, candidate = _harness_setup(universe_size, n)
    configs = list(hidden_configurations(universe_size, n))

    # Observation-blindness: every hidden configuration projects identically.
    observations = {observe_configuration(config) for config in configs}
    obs_list = sorted(observations, key=repr)
    assert len(obs_list) == 1

    strategy_tables = [
        dict(zip(obs_list, answers))
        for answers in itertools.product((Tri.YES, Tri.NO), repeat=len(obs_list))
    ]

    max_accuracy = Fraction(0)
    every_strategy_errs = True
    for table in strategy_tables:
        correct = sum(
            (table[observe_configuration(config)] is Tri.YES) == config.candidate_is_member
            for config in configs
        )
        accuracy = Fraction(correct, len(configs))
        max_accuracy = max(max_accuracy, accuracy)
        if accuracy == 1:
            every_strategy_errs = False

    engine_answer = decide_membership(candidate, collection, universe)
    interior = 0 < n < universe_size
    if interior:
        engine_correct = None
        verdict = "undecidable" if every_strategy_errs else "refuted"
    else:
        truth = n == universe_size  # n = 0 means nobody is a member
        engine_correct = engine_answer is Tri.from_bool(truth) and all(
            config.candidate_is_member == truth for config in configs
        )
        verdict = "decided-yes" if truth else "decided-no"
    return CellResult(
        universe_size=universe_size,
        n=n,
        observations=len(obs_list),
        strategies=len(strategy_tables),
        max_accuracy=max_accuracy,
        every_strategy_errs=every_strategy_errs,
        engine_answer=engine_answer,
        engine_correct_everywhere=engine_correct,
        verdict=verdict,
    )


def exhaustive_undecidability_check(max_universe_size: int) -> UndecidabilityReport:
    """Sweep every species size N up to the limit and every n in 0..N.

    For each interior cell the harness enumerates all deterministic
    strategies over the observation space and confirms each errs on at least
    one hidden configuration; boundary cells confirm the definite yes/no
    rules score perfectly. The limit keeps the strategy space enumerable.
    """
    if not 1 <= max_universe_size <= MAX_HARNESS_N:
        raise ValueError(f"need 1 <= N <= {MAX_HARNESS_N}, got {max_universe_size}")
    cells = [
        _sweep_cell(universe_size, n)
        for universe_size in range(1, max_universe_size + 1)
        for n in range(0, universe_size + 1)
    ]
    return UndecidabilityReport(max_universe_size=max_universe_size, cells=tuple(cells))
