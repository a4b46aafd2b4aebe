"""Acceptance criteria, one test each.

Every criterion is exact (no numeric tolerance).  Runtime bounds are asserted
where stated; "milliseconds" is pinned as < 0.5 s.  A pass/fail line per
criterion is printed in the pytest terminal summary.
"""

import time

import numpy as np
import pytest

from gbtd.construction import build_mp
from gbtd.designs import (
    GbtdArray,
    gbtd_to_matrix,
    matrix_to_gbtd,
    permute_points,
    permute_symbols,
    swap_design_columns,
    swap_design_rows,
    swap_matrix_columns,
    swap_matrix_rows,
)
from gbtd.fixtures import example1_design, example2_matrix, example3_matrix
from gbtd.verify import (
    brute_force_hblock_agreement,
    cross_group_pairs,
    hstar_locality,
    lemma3_counts,
    solve_agreement,
    verify_bibd,
    verify_gbtd,
    verify_matrix,
)

DESK_PRIMES = [3, 5, 7, 11, 13]
MS_BUDGET = 0.5


@pytest.mark.criterion(1, "build_Mp(5) equals the worked 25x25 M_5 table")
def test_c1_fixture_reproduction():
    t0 = time.perf_counter()
    M = build_mp(5)
    elapsed = time.perf_counter() - t0
    expected = example3_matrix()
    assert M.entries.shape == (25, 25)
    assert np.array_equal(M.entries, expected.entries)
    assert elapsed < MS_BUDGET


@pytest.mark.criterion(2, "gbtd_to_matrix(worked GBTD(3,3)) equals the worked M'")
def test_c2_conversion_reproduction():
    R = example1_design()
    t0 = time.perf_counter()
    M = gbtd_to_matrix(R)
    elapsed = time.perf_counter() - t0
    assert np.array_equal(M.entries, example2_matrix().entries)
    assert M.entries[0].tolist() == [1, 1, 2, 0, 2, 0, 2, 0, 1]
    assert elapsed < MS_BUDGET


@pytest.mark.criterion(3, "M_p passes (1)(2)(3) and its design is a GBTD/BIBD for p in {3,5,7,11,13}")
def test_c3_existence_at_desk_scale():
    t0 = time.perf_counter()
    for p in DESK_PRIMES:
        M = build_mp(p)
        assert verify_matrix(M).overall, p
        R = matrix_to_gbtd(M)
        report = verify_gbtd(R)
        assert report.overall, (p, report.format())
        assert report["pair balance"].passed and report["block count"].passed
        assert R.n_blocks == p * (p * p - 1)
    assert time.perf_counter() - t0 < 2.0


@pytest.mark.criterion(4, "gbtd_to_matrix(matrix_to_gbtd(M_p)) == M_p")
def test_c4_round_trip():
    for p in DESK_PRIMES:
        M = build_mp(p)
        assert gbtd_to_matrix(matrix_to_gbtd(M)) == M, p


@pytest.mark.criterion(5, "lemma3_counts(p, m) == (p-1, (p-1)/2) for all primes p <= 47, all m")
def test_c5_lemma3():
    primes = [p for p in range(3, 48) if all(p % d for d in range(2, p))]
    t0 = time.perf_counter()
    for p in primes:
        for m in range(p):
            assert lemma3_counts(p, m) == (p - 1, (p - 1) // 2), (p, m)
    assert time.perf_counter() - t0 < 1.0


@pytest.mark.criterion(6, "analytic agreement rows equal brute force on cross-group column pairs")
def test_c6_theorem4_oracle():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20261015)

    def check(M, p, j1, m, j2, n):
        predicted = solve_agreement(p, j1, m, j2, n)
        assert len(predicted) == p - 1
        assert predicted == brute_force_hblock_agreement(M, j1 * p + m, j2 * p + n)

    for p in (3, 5, 7):
        M = build_mp(p)
        assert hstar_locality(M)["cross-group agreement inside H*"].passed
        for pair in cross_group_pairs(p):
            check(M, p, *pair)
    for p in (11, 13):
        M = build_mp(p)
        assert hstar_locality(M)["cross-group agreement inside H*"].passed
        for _ in range(1000):
            j1, j2 = sorted(rng.choice(p, size=2, replace=False).tolist())
            m, n = rng.integers(0, p, size=2).tolist()
            check(M, p, j1, m, j2, n)
    assert time.perf_counter() - t0 < 5.0


def _random_design_op(R: GbtdArray, rng) -> GbtdArray:
    op = rng.integers(3)
    if op == 0:
        a, b = rng.integers(0, R.m, size=2).tolist()
        return swap_design_rows(R, a, b)
    if op == 1:
        a, b = rng.integers(0, R.n_cols, size=2).tolist()
        return swap_design_columns(R, a, b)
    return permute_points(R, rng.permutation(R.v))


def _random_matrix_op(M, rng):
    op = rng.integers(3)
    if op == 0:
        return permute_symbols(M, rng.permutation(M.p))
    if op == 1:
        a, b = rng.integers(1, M.side, size=2).tolist()
        return swap_matrix_rows(M, a, b)
    a, b = rng.integers(0, M.side, size=2).tolist()
    return swap_matrix_columns(M, a, b)


@pytest.mark.criterion(7, "random compositions of equivalence operations preserve validity")
def test_c7_equivalence_closure():
    rng = np.random.default_rng(7)
    for start in (example1_design(), matrix_to_gbtd(build_mp(5))):
        for _ in range(100):
            R = start
            for _ in range(rng.integers(1, 9)):
                R = _random_design_op(R, rng)
            assert verify_gbtd(R).overall
    M5 = build_mp(5)
    for _ in range(100):
        M = M5
        for _ in range(rng.integers(1, 9)):
            M = _random_matrix_op(M, rng)
        assert verify_matrix(M).overall


@pytest.mark.criterion(8, "every random single-entry / single-point mutation is detected")
def test_c8_mutation_soundness():
    rng = np.random.default_rng(8)
    M5 = build_mp(5)
    for _ in range(100):
        r, c = rng.integers(0, 25, size=2)
        E = M5.entries.copy()
        E[r, c] = (E[r, c] + rng.integers(1, 5)) % 5
        assert not verify_matrix(M5.with_entries(E)).overall, (r, c)

    R = example1_design()
    for _ in range(100):
        row, col, slot = rng.integers(0, 3), rng.integers(0, 8), rng.integers(0, 3)
        block = R.cells[row, col]
        replacement = rng.choice(np.setdiff1d(np.arange(9), block))
        cells = R.cells.copy()
        cells[row, col, slot] = replacement
        mutated = GbtdArray(cells)
        assert not (verify_gbtd(mutated).overall and verify_bibd(mutated).overall)
