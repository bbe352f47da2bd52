import random

import pytest

from depdisj import kernels
from depdisj.kernels import make_scanner


def random_codes(rng, nrows, ncols, card=3):
    return [[rng.randrange(card) for _ in range(ncols)] for _ in range(nrows)]


def brute_count(codes, mask):
    cols = [c for c in range(len(codes[0])) if mask >> c & 1]
    return len({tuple(r[c] for c in cols) for r in codes})


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.Scanner in (kernels.PyScanner, kernels.CScanner)


def test_count_matches_brute_force(backend):
    rng = random.Random(11)
    for _ in range(200):
        nrows, ncols = rng.randint(1, 40), rng.randint(1, 8)
        codes = random_codes(rng, nrows, ncols, rng.randint(1, 5))
        scanner = make_scanner(codes, ncols, backend)
        for mask in range(1, 1 << ncols):
            assert scanner.count(mask) == brute_count(codes, mask)
        assert scanner.confinements == (1 << ncols) - 1


def test_count_empty_mask(backend):
    assert make_scanner([[0, 1], [1, 0]], 2, backend).count(0) == 1


def test_scan_backends_agree():
    if kernels.CScanner is None:
        pytest.skip("compiled scanner not built")
    rng = random.Random(3)
    for _ in range(300):
        nrows, ncols = rng.randint(1, 30), rng.randint(2, 7)
        codes = random_codes(rng, nrows, ncols, rng.randint(1, 4))
        masks = [m for m in range(1, 1 << ncols) if m & 1 and m != (1 << ncols) - 1]
        total = len({tuple(r) for r in codes})
        codes = [list(r) for r in {tuple(r) for r in codes}]
        py = make_scanner(codes, ncols, "python")
        cy = make_scanner(codes, ncols, "cython")
        assert py.scan(masks, total) == cy.scan(masks, total)
        assert py.confinements == cy.confinements


def test_unknown_backend():
    with pytest.raises(ValueError):
        make_scanner([[0]], 1, "fortran")
