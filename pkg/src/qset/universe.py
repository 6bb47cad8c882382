"""Declared finite universe: micro-atom species with multiplicities, labelled macro-atoms.

The universe fixes how many objects each micro-atom species contributes,
which gives every equivalence class a definite finite population. Macro-atoms
are classical individuals, so each label contributes exactly one object.
Universes are immutable once constructed.

File format (UTF-8, line oriented)::

    # comment
    matom photon 4
    Matom alice

``matom <species> <multiplicity>`` declares a micro-atom species,
``Matom <label>`` a macro-atom. Blank lines and ``#`` comments are ignored.
Duplicate declarations, multiplicities below 1, and names shared between the
two namespaces are load errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import AbstractSet, Iterable, Mapping

from .errors import UniverseFormatError, UnknownLabel, UnknownSpecies

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _valid_name(name: str) -> bool:
    return bool(_NAME_RE.match(name))


@dataclass(frozen=True, eq=False)
class Universe:
    """Immutable declaration of the finite population the engine works over."""

    m_species: Mapping[str, int]
    m_atom_labels: AbstractSet[str]

    def __post_init__(self):
        species = dict(self.m_species)
        labels = frozenset(self.m_atom_labels)
        for name, mult in species.items():
            if not _valid_name(name):
                raise ValueError(f"invalid species name {name!r}")
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise ValueError(f"species {name!r} needs an integer multiplicity >= 1, got {mult!r}")
        for label in labels:
            if not _valid_name(label):
                raise ValueError(f"invalid macro-atom label {label!r}")
        shared = set(species) & labels
        if shared:
            raise ValueError(f"names used as both species and label: {sorted(shared)}")
        object.__setattr__(self, "m_species", MappingProxyType(dict(sorted(species.items()))))
        object.__setattr__(self, "m_atom_labels", labels)

    def has_species(self, name: str) -> bool:
        return name in self.m_species

    def has_label(self, name: str) -> bool:
        return name in self.m_atom_labels

    def multiplicity(self, species: str) -> int:
        """Declared population of a species; raises UnknownSpecies otherwise."""
        try:
            return self.m_species[species]
        except KeyError:
            raise UnknownSpecies(f"unknown micro-atom species {species!r}") from None

    def check_label(self, label: str) -> None:
        if label not in self.m_atom_labels:
            raise UnknownLabel(f"unknown macro-atom label {label!r}")

    def species_names(self) -> tuple[str, ...]:
        return tuple(self.m_species)

    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(self.m_atom_labels))

    def declaration_lines(self) -> list[str]:
        """The declarations in canonical order, suitable for re-loading."""
        lines = [f"matom {name} {mult}" for name, mult in self.m_species.items()]
        lines += [f"Matom {label}" for label in self.labels()]
        return lines


def parse_universe(text: str, source: str = "<universe>") -> Universe:
    """Parse universe declarations from text; raises UniverseFormatError."""
    species: dict[str, int] = {}
    labels: set[str] = set()

    def declared(name: str) -> bool:
        return name in species or name in labels

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        directive = fields[0]
        if directive == "matom":
            if len(fields) != 3:
                raise UniverseFormatError(
                    f"{source}:{lineno}: expected 'matom <species> <multiplicity>'", lineno)
            name, mult_text = fields[1], fields[2]
            if not _valid_name(name):
                raise UniverseFormatError(f"{source}:{lineno}: invalid species name {name!r}", lineno)
            if declared(name):
                raise UniverseFormatError(f"{source}:{lineno}: duplicate declaration of {name!r}", lineno)
            try:
                mult = int(mult_text)
            except ValueError:
                raise UniverseFormatError(
                    f"{source}:{lineno}: multiplicity must be an integer, got {mult_text!r}", lineno) from None
            if mult < 1:
                raise UniverseFormatError(
                    f"{source}:{lineno}: multiplicity must be >= 1, got {mult}", lineno)
            species[name] = mult
        elif directive == "Matom":
            if len(fields) != 2:
                raise UniverseFormatError(f"{source}:{lineno}: expected 'Matom <label>'", lineno)
            label = fields[1]
            if not _valid_name(label):
                raise UniverseFormatError(f"{source}:{lineno}: invalid label {label!r}", lineno)
            if declared(label):
                raise UniverseFormatError(f"{source}:{lineno}: duplicate declaration of {label!r}", lineno)
            labels.add(label)
        else:
            raise UniverseFormatError(
                f"{source}:{lineno}: unknown directive {directive!r} (expected 'matom' or 'Matom')", lineno)
    return Universe(species, labels)


def load_universe(path) -> Universe:
    """Load a universe declaration file; raises UniverseFormatError or OSError."""
    with open(path, encoding="utf-8") as handle:
        return parse_universe(handle.read(), source=str(path))
