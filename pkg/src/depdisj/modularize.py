"""Splitting case forms and dependency groups into independent parts.

A case form over disjunctions ``M`` is independent with respect to a
bipartition ``M1 | M2`` when it equals the free combination of its two
confinements.  Because both confinements are projections of the original
rows, that holds exactly when the confinement row counts multiply to the
original row count, so the search never builds a free combination.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice
from math import isqrt

from .core import AltCaseForm, CaseForm, DependencyGroup, canonicalize
from .encode import decode_groups, encode_group
from .errors import BadSubscope, GroupTooLarge, NothingToSplit, ScopeOverlap
from .kernels import make_scanner

__all__ = [
    "DEFAULT_MAX_GROUP_SIZE",
    "SearchStats",
    "bipartitions",
    "confine",
    "free_combine",
    "independent_split",
    "is_prime",
    "modularize_case",
    "modularize_group",
]

DEFAULT_MAX_GROUP_SIZE = 24
_CHUNK = 2048


@dataclass
class SearchStats:
    """Instrumentation for :func:`modularize_case`."""

    confinements: int = 0
    bipartitions: int = 0
    splits: int = 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def _check_subscope(case: CaseForm, m_sub, proper: bool) -> frozenset:
    m_sub = frozenset(m_sub)
    if not m_sub:
        raise BadSubscope("subscope must be nonempty")
    if not m_sub <= set(case.scope):
        raise BadSubscope(f"{sorted(m_sub)} is not a subset of scope {list(case.scope)}")
    if proper and len(m_sub) == len(case.scope):
        raise BadSubscope("subscope must be a proper subset of the scope")
    return m_sub


def confine(case: CaseForm, m_sub) -> CaseForm:
    """Project ``case`` onto the disjunctions in ``m_sub`` and drop duplicate rows."""
    m_sub = _check_subscope(case, m_sub, proper=False)
    keep = [pos for pos, i in enumerate(case.scope) if i in m_sub]
    if len(keep) == len(case.scope):
        return case
    return canonicalize(tuple(row[p] for p in keep) for row in case.rows)


def free_combine(a: CaseForm, b: CaseForm) -> CaseForm:
    """DNF of ``a & b`` for case forms over disjoint scopes: every row pairing."""
    overlap = set(a.scope) & set(b.scope)
    if overlap:
        raise ScopeOverlap(f"free combination needs disjoint scopes; both use {sorted(overlap)}")
    return canonicalize(ra + rb for ra in a.rows for rb in b.rows)


def independent_split(case: CaseForm, m_sub):
    """The two confinements if ``case`` splits along ``m_sub``, else ``None``."""
    m_sub = _check_subscope(case, m_sub, proper=True)
    left = confine(case, m_sub)
    right = confine(case, set(case.scope) - m_sub)
    if len(left) * len(right) == len(case):
        return left, right
    return None


def bipartitions(scope):
    """Unordered bipartitions of ``scope``, each listed once.

    The first set always holds the smallest index.  Pairs come by increasing
    size of that set, ties in lexicographic order.
    """
    ordered = sorted(scope)
    if len(ordered) < 2:
        raise NothingToSplit(f"scope {ordered} has nothing to split")
    return _bipartitions(ordered)


def _bipartitions(ordered):
    first, rest = ordered[0], ordered[1:]
    everything = frozenset(ordered)
    for size in range(len(ordered) - 1):
        for combo in combinations(rest, size):
            left = frozenset((first, *combo))
            yield left, everything - left


def _bipartition_masks(k):
    """Bit-mask twin of :func:`bipartitions` over column positions ``0..k-1``."""
    for size in range(k - 1):
        for combo in combinations(range(1, k), size):
            mask = 1
            for c in combo:
                mask |= 1 << c
            yield mask


def _part_key(case: CaseForm):
    return len(case.scope), case.scope


def _dense_codes(case: CaseForm):
    columns = []
    for pos in range(len(case.scope)):
        values = sorted({row[pos].rep for row in case.rows})
        lookup = {v: n for n, v in enumerate(values)}
        columns.append([lookup[row[pos].rep] for row in case.rows])
    return [list(r) for r in zip(*columns)]


def modularize_case(case: CaseForm, *, max_group_size=DEFAULT_MAX_GROUP_SIZE, stats=None, backend=None):
    """Split ``case`` into modular parts whose free combination is ``case``.

    Parts are ordered by number of disjunctions, then by their indices.
    ``stats`` (a :class:`SearchStats`) collects instrumentation counts.
    """
    if stats is None:
        stats = SearchStats()
    parts = _modularize(case, max_group_size, stats, backend)
    return sorted(parts, key=_part_key)


def _modularize(case, max_group_size, stats, backend):
    scope = case.scope
    if len(scope) == 1:
        return [case]
    if len(case) == 1:
        # a single case row fixes every disjunction
        return [CaseForm((av.index,), ((av,),)) for av in case.rows[0]]
    if is_prime(len(case)):
        return [case]

    # a disjunction with one value in every row factors out as a 1-row part
    constant = [i for i in scope if len(set(case.column(i))) == 1]
    if constant:
        stats.splits += 1
        peeled = []
        for i in constant:
            stats.confinements += 1
            peeled.append(confine(case, {i}))
        stats.confinements += 1
        core = confine(case, set(scope) - set(constant))
        return peeled + _modularize(core, max_group_size, stats, backend)

    if max_group_size is not None and len(scope) > max_group_size:
        raise GroupTooLarge(
            f"{len(scope)} disjunctions exceed the search limit of {max_group_size}"
            f" ({2 ** (len(scope) - 1) - 1} bipartitions)",
            size=len(scope),
            limit=max_group_size,
        )

    scanner = make_scanner(_dense_codes(case), len(scope), backend)
    masks = _bipartition_masks(len(scope))
    total = len(case)
    found = None
    try:
        while found is None:
            chunk = list(islice(masks, _CHUNK))
            if not chunk:
                break
            hit = scanner.scan(chunk, total)
            if hit >= 0:
                found = chunk[hit]
                stats.bipartitions += hit + 1
            else:
                stats.bipartitions += len(chunk)
    finally:
        stats.confinements += scanner.confinements

    if found is None:
        return [case]
    stats.splits += 1
    m_sub = {i for pos, i in enumerate(scope) if found >> pos & 1}
    left = confine(case, m_sub)
    right = confine(case, set(scope) - m_sub)
    return _modularize(left, max_group_size, stats, backend) + _modularize(
        right, max_group_size, stats, backend
    )


def modularize_group(group: DependencyGroup, *, max_group_size=DEFAULT_MAX_GROUP_SIZE, stats=None, backend=None):
    """Split ``group`` into independent dependency groups.

    A group that does not split comes back under its own name with
    duplicate disjunct columns removed and its disjunct order otherwise kept.
    """
    form = encode_group(group)
    try:
        parts = modularize_case(form.cases, max_group_size=max_group_size, stats=stats, backend=backend)
    except GroupTooLarge as exc:
        raise GroupTooLarge(
            f"group {group.name!r}: {exc}", group=group.name, size=exc.size, limit=exc.limit
        ) from None
    if len(parts) == 1:
        return [_drop_duplicate_columns(group)]
    forms = [AltCaseForm({av: form.alternatives[av] for row in p.rows for av in row}, p) for p in parts]
    return decode_groups(forms, group.name)


def _drop_duplicate_columns(group: DependencyGroup) -> DependencyGroup:
    columns = list(zip(*group.disjunctions))
    kept = list(dict.fromkeys(columns))
    if len(kept) == len(columns):
        return group
    return DependencyGroup(group.name, list(zip(*kept)), group.indices)
