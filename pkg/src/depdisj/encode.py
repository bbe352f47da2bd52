"""Conversion between dependency groups and compact alternative-case forms."""

from __future__ import annotations

from typing import Sequence

from .core import AltCaseForm, AltVar, DependencyGroup, canonicalize
from .errors import ScopeOverlap

__all__ = ["encode_group", "decode_groups", "representatives"]


def representatives(disjunction: Sequence[str]) -> list:
    """1-based position of the first occurrence of each disjunct's atom."""
    first = {}
    reps = []
    for pos, atom in enumerate(disjunction, start=1):
        reps.append(first.setdefault(atom, pos))
    return reps


def encode_group(group: DependencyGroup) -> AltCaseForm:
    """Encode ``group`` as a compact alternative-case form.

    Equal atoms within one disjunction share an alternative variable, so the
    raw per-disjunct rows may collapse; ``canonicalize`` merges them.
    """
    alternatives = {}
    columns = []
    for index, disjunction in zip(group.indices, group.disjunctions):
        reps = representatives(disjunction)
        for rep, atom in zip(reps, disjunction):
            alternatives[AltVar(index, rep)] = atom
        columns.append([AltVar(index, rep) for rep in reps])
    cases = canonicalize(zip(*columns))
    return AltCaseForm(alternatives, cases)


def decode_groups(forms: Sequence[AltCaseForm], base: str) -> list:
    """Rebuild one dependency group per form.

    A lone form keeps ``base`` as its name; otherwise form ``k`` (1-based,
    in the given order) becomes ``base.k``.  Disjunct ``r`` of every output
    disjunction is the atom chosen by case row ``r``.
    """
    seen = set()
    for form in forms:
        overlap = seen.intersection(form.cases.scope)
        if overlap:
            raise ScopeOverlap(f"disjunctions {sorted(overlap)} appear in more than one form")
        seen.update(form.cases.scope)

    groups = []
    for k, form in enumerate(forms, start=1):
        name = base if len(forms) == 1 else f"{base}.{k}"
        rows = form.cases.rows
        disjunctions = [
            tuple(form.alternatives[row[pos]] for row in rows)
            for pos in range(len(form.cases.scope))
        ]
        groups.append(DependencyGroup(name, disjunctions, form.cases.scope))
    return groups
