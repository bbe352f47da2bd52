"""Brute-force reference semantics.

These functions define what the optimizer must preserve and are written
without any of its shortcuts: solutions are enumerated explicitly and
independence is decided by building the free combination and comparing it
with the original.  They are exponential and meant for small instances.
"""

from __future__ import annotations

from itertools import product

from .core import AltCaseForm, CaseForm, DependencyGroup
from .errors import ScopeOverlap
from .modularize import _check_subscope, confine, free_combine

__all__ = [
    "solutions",
    "group_solutions",
    "combined_solutions",
    "independent_by_free_combination",
    "set_partitions",
    "finest_factorization",
]


# A solution is a tuple of (disjunction index, atom) pairs sorted by index.


def solutions(form: AltCaseForm) -> set:
    """One solution per case row of ``form``."""
    scope = form.cases.scope
    return {tuple(zip(scope, form.atoms(row))) for row in form.cases.rows}


def group_solutions(group: DependencyGroup) -> set:
    """Admissible joint choices read straight off the group: column ``k`` of every disjunction."""
    order = sorted(range(len(group)), key=lambda p: group.indices[p])
    return {
        tuple((group.indices[p], group.disjunctions[p][k]) for p in order)
        for k in range(group.width)
    }


def combined_solutions(groups) -> set:
    """Cartesian recombination of independent groups, merged on disjunction index."""
    seen = set()
    for g in groups:
        overlap = seen.intersection(g.indices)
        if overlap:
            raise ScopeOverlap(f"disjunctions {sorted(overlap)} occur in more than one group")
        seen.update(g.indices)
    combined = set()
    for parts in product(*(group_solutions(g) for g in groups)):
        combined.add(tuple(sorted(pair for part in parts for pair in part)))
    return combined


def independent_by_free_combination(case: CaseForm, m_sub) -> bool:
    """Literal independence test: does the free combination of the two confinements give ``case`` back?"""
    m_sub = _check_subscope(case, m_sub, proper=True)
    left = confine(case, m_sub)
    right = confine(case, set(case.scope) - m_sub)
    return free_combine(left, right) == case


def set_partitions(items):
    """All set partitions of ``items`` as lists of blocks."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for partial in set_partitions(rest):
        for n in range(len(partial)):
            yield partial[:n] + [[head, *partial[n]]] + partial[n + 1:]
        yield [[head], *partial]


def finest_factorization(case: CaseForm):
    """Scope partition with the most blocks whose confinements recombine to ``case``.

    Tries every set partition of the scope, so only usable for a handful of
    disjunctions.  Returns a sorted list of sorted index tuples.
    """
    best = None
    for blocks in set_partitions(case.scope):
        combined = None
        for block in blocks:
            part = confine(case, block)
            combined = part if combined is None else free_combine(combined, part)
        if combined == case and (best is None or len(blocks) > len(best)):
            best = blocks
    return sorted(tuple(sorted(b)) for b in best)
