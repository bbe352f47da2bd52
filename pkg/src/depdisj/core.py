"""Domain types for dependency groups and their alternative-case encoding.

Base constraints are opaque tokens: two atoms are the same constraint exactly
when their tokens are equal.  A group of dependent disjunctions is encoded as

* alternatives: one alternative variable per distinct atom of each
  disjunction, written ``a_j^i`` for disjunction ``i`` whose representative
  disjunct position is ``j``;
* cases: a duplicate-free DNF whose rows pick one alternative variable per
  disjunction.

All values here are immutable.  :func:`canonicalize` is the only sanctioned
way to build a :class:`CaseForm` from loose rows; it removes duplicates and
fixes a total row order so structural equality is formula equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import EmptyCaseForm, EmptyGroup, InvalidToken, RaggedGroup, ScopeMismatch

__all__ = [
    "AltVar",
    "CaseRow",
    "CaseForm",
    "AltCaseForm",
    "DependencyGroup",
    "canonicalize",
    "check_token",
]


def check_token(token: str, what: str = "atom") -> str:
    if not isinstance(token, str) or not token:
        raise InvalidToken(f"{what} must be a nonempty string, got {token!r}")
    if "#" in token or any(ch.isspace() for ch in token):
        raise InvalidToken(f"{what} {token!r} contains whitespace or '#'")
    return token


class AltVar(NamedTuple):
    """Alternative variable ``a_rep^index``.

    ``rep`` is the smallest 1-based disjunct position holding this variable's
    atom within disjunction ``index``.
    """

    index: int
    rep: int

    def __str__(self) -> str:
        return f"a{self.rep}^{self.index}"


# One case row: AltVars sorted by disjunction index, one per index in scope.
CaseRow = tuple  # tuple[AltVar, ...]


def _normalize_row(row: Iterable[AltVar]) -> CaseRow:
    row = tuple(sorted(AltVar(*av) for av in row))
    for prev, cur in zip(row, row[1:]):
        if prev.index == cur.index:
            raise ScopeMismatch(f"row chooses two variables for disjunction {cur.index}")
    return row


@dataclass(frozen=True)
class CaseForm:
    """Canonical DNF over alternative variables.

    ``scope`` is the sorted tuple of disjunction indices; ``rows`` are sorted
    and duplicate free.  Construct through :func:`canonicalize`.
    """

    scope: tuple
    rows: tuple

    def __post_init__(self):
        if not self.rows:
            raise EmptyCaseForm("a case form needs at least one row")
        for row in self.rows:
            if tuple(av.index for av in row) != self.scope:
                raise ScopeMismatch(f"row {format_row(row)} does not cover scope {set(self.scope)}")
        for prev, cur in zip(self.rows, self.rows[1:]):
            if not prev < cur:
                raise ValueError("case rows must be strictly increasing; use canonicalize()")

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return " v ".join(f"({format_row(r)})" for r in self.rows)

    def column(self, index: int) -> tuple:
        """Representatives chosen for ``index``, one per row."""
        pos = self.scope.index(index)
        return tuple(row[pos].rep for row in self.rows)


def format_row(row: CaseRow) -> str:
    return " & ".join(str(av) for av in row)


def canonicalize(rows: Iterable[Iterable[AltVar]]) -> CaseForm:
    """Deduplicate and sort ``rows`` into a :class:`CaseForm`.

    Rows may list their variables in any order; all rows must range over the
    same disjunction indices.
    """
    normalized = {_normalize_row(r) for r in rows}
    if not normalized:
        raise EmptyCaseForm("cannot canonicalize an empty row sequence")
    scopes = {tuple(av.index for av in r) for r in normalized}
    if len(scopes) != 1:
        raise ScopeMismatch(f"rows range over different scopes: {sorted(scopes)}")
    (scope,) = scopes
    return CaseForm(scope, tuple(sorted(normalized)))


@dataclass(frozen=True)
class AltCaseForm:
    """Alternatives (AltVar -> atom) together with the cases choosing among them."""

    alternatives: Mapping
    cases: CaseForm

    def __post_init__(self):
        seen = {}
        for av, atom in self.alternatives.items():
            key = (av.index, atom)
            if key in seen:
                raise ValueError(f"{seen[key]} and {av} both stand for {atom!r}; alternatives are not compact")
            seen[key] = av
        for row in self.cases.rows:
            for av in row:
                if av not in self.alternatives:
                    raise ValueError(f"case variable {av} has no alternative")

    def atoms(self, row: CaseRow) -> tuple:
        return tuple(self.alternatives[av] for av in row)


@dataclass(frozen=True)
class DependencyGroup:
    """A named conjunction of dependent disjunctions of equal width.

    ``indices`` records which disjunction of the original group each row came
    from.  It is bookkeeping for recombining split groups and does not take
    part in equality.
    """

    name: str
    disjunctions: tuple
    indices: tuple = field(default=None, compare=False)

    def __post_init__(self):
        check_token(self.name, "group name")
        disjunctions = tuple(tuple(d) for d in self.disjunctions)
        object.__setattr__(self, "disjunctions", disjunctions)
        if not disjunctions:
            raise EmptyGroup(f"group {self.name!r} has no disjunctions", group=self.name)
        widths = {len(d) for d in disjunctions}
        if len(widths) != 1:
            raise RaggedGroup(
                f"group {self.name!r} mixes disjunction widths {sorted(widths)}", group=self.name
            )
        if 0 in widths:
            raise EmptyGroup(f"group {self.name!r} has empty disjunctions", group=self.name)
        for d in disjunctions:
            for atom in d:
                check_token(atom)
        indices = self.indices
        if indices is None:
            indices = tuple(range(1, len(disjunctions) + 1))
        indices = tuple(indices)
        if len(indices) != len(disjunctions) or len(set(indices)) != len(indices):
            raise ValueError(f"group {self.name!r}: indices {indices} do not match its disjunctions")
        object.__setattr__(self, "indices", indices)

    @property
    def width(self) -> int:
        return len(self.disjunctions[0])

    def __len__(self) -> int:
        return len(self.disjunctions)

    def with_name(self, name: str) -> "DependencyGroup":
        return DependencyGroup(name, self.disjunctions, self.indices)


def make_group(name: str, disjunctions: Sequence[Sequence[str]]) -> DependencyGroup:
    """Build a group from whitespace-separated strings or atom sequences."""
    rows = [d.split() if isinstance(d, str) else d for d in disjunctions]
    return DependencyGroup(name, rows)
