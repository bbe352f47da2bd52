import pytest

from depdisj.core import DependencyGroup, make_group
from depdisj.encode import encode_group
from depdisj.errors import BadSubscope, ScopeOverlap
from depdisj.modularize import modularize_group
from depdisj.oracle import (
    combined_solutions,
    finest_factorization,
    group_solutions,
    independent_by_free_combination,
    set_partitions,
    solutions,
)

WORKED = make_group(
    "d",
    ["phi phi phi phi phi' phi'", "psi psi' psi psi' psi psi'", "chi chi chi' chi' chi' chi'"],
)


def sol(*atoms):
    return tuple(enumerate(atoms, start=1))


def test_solutions_four():
    form = encode_group(make_group("d", ["phi phi phi' phi'", "psi psi' psi psi'"]))
    assert solutions(form) == {
        sol("phi", "psi"),
        sol("phi", "psi'"),
        sol("phi'", "psi"),
        sol("phi'", "psi'"),
    }


def test_solutions_in_sync():
    form = encode_group(make_group("d", ["phi phi phi'", "psi psi' psi'"]))
    assert solutions(form) == {sol("phi", "psi"), sol("phi", "psi'"), sol("phi'", "psi'")}


def test_solutions_single():
    assert solutions(encode_group(make_group("d", ["phi"]))) == {sol("phi")}


def test_combined_lieben():
    lieben = make_group(
        "d",
        ["lieben lieben liebt liebt", "bse bse fin fin", "comp elist elist comp", "elist comp comp elist"],
    )
    out = modularize_group(lieben)
    assert len(out) == 2
    combined = combined_solutions(out)
    assert len(combined) == 4
    assert combined == group_solutions(lieben)


def test_combined_single_group():
    g = make_group("d", ["a b", "c d"])
    assert combined_solutions([g]) == group_solutions(g)


def test_combined_worked_example():
    out = modularize_group(WORKED)
    assert [g.width for g in out] == [2, 3]
    combined = combined_solutions(out)
    assert len(combined) == 6
    assert combined == group_solutions(WORKED) == solutions(encode_group(WORKED))


def test_combined_overlap():
    a = DependencyGroup("a", [("x",)], (1,))
    b = DependencyGroup("b", [("y",)], (1,))
    with pytest.raises(ScopeOverlap):
        combined_solutions([a, b])


def test_literal_independence():
    case = encode_group(WORKED).cases
    assert independent_by_free_combination(case, {1, 2}) is False
    assert independent_by_free_combination(case, {2}) is True
    with pytest.raises(BadSubscope):
        independent_by_free_combination(case, {1, 2, 3})


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(range(n))) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_finest_factorization_worked():
    assert finest_factorization(encode_group(WORKED).cases) == [(1, 3), (2,)]
