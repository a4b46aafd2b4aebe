import numpy as np
import pytest

from gbtd.construction import (
    ColAddress,
    RowAddress,
    SymbolMatrix,
    build_mp,
    hblock_row,
    hstar_row,
    vblock_start,
)
from gbtd.verify import verify_matrix
from gbtd.zp import ModulusError

from conftest import PRIMES


def segment(row, p, j):
    return row[j * p:(j + 1) * p].tolist()


def test_hstar_rows_from_worked_table():
    assert hstar_row(5, 2).tolist() == np.repeat([2, 3, 4, 0, 1], 5).tolist()
    assert hstar_row(3, 0).tolist() == [0, 0, 0, 1, 1, 1, 2, 2, 2]
    assert hstar_row(5, 4).tolist() == np.repeat([4, 0, 1, 2, 3], 5).tolist()


def test_hblock_segments_from_worked_table():
    assert segment(hblock_row(5, 1, 0), 5, 2) == [3, 4, 0, 1, 2]
    assert segment(hblock_row(5, 0, 2), 5, 4) == [3, 4, 0, 1, 2]
    # 0 < 4 takes the -l+1 branch
    assert segment(hblock_row(5, 4, 0), 5, 4) == [1, 2, 3, 4, 0]


@pytest.mark.parametrize("l", [4, 5, -1])
def test_hblock_rejects_inner_row(l):
    with pytest.raises(ValueError):
        hblock_row(5, 0, l)


def test_last_block_of_last_group_uses_shifted_branch():
    # (H_4, V_4) column in the worked table reads >1, >0, >4, >3
    starts = [vblock_start(5, 4, l, 4).value for l in range(4)]
    assert starts == [1, 0, 4, 3]
    for p in PRIMES:
        for l in range(p - 1):
            assert vblock_start(p, p - 1, l, p - 1).value == (-l + 1) % p


@pytest.mark.parametrize("p", PRIMES)
def test_starts_progress_by_group_index(p):
    for i in range(p):
        for j in range(p - 1):
            starts = [vblock_start(p, i, l, j).value for l in range(p - 1)]
            assert all((b - a) % p == j for a, b in zip(starts, starts[1:]))


def test_build_mp_matches_worked_table(ex3):
    assert build_mp(5) == ex3


def test_build_mp3_passes_verifier():
    M = build_mp(3)
    assert M.entries.shape == (9, 9)
    assert verify_matrix(M).overall


@pytest.mark.parametrize("bad", [2, 4, 9, 1])
def test_build_mp_rejects(bad):
    with pytest.raises(ModulusError):
        build_mp(bad)


@pytest.mark.parametrize("p", PRIMES)
def test_symbol_balance(p, mp_cache):
    E = mp_cache(p).entries
    for axis in (0, 1):
        counts = np.apply_along_axis(np.bincount, axis, E, minlength=p)
        assert np.all(counts == p)


@pytest.mark.parametrize("p", PRIMES)
def test_same_group_columns_agree_only_in_hstar(p, mp_cache):
    E = mp_cache(p).entries
    for j in range(p):
        for a in range(p):
            for b in range(a + 1, p):
                rows = np.flatnonzero(E[:, j * p + a] == E[:, j * p + b]).tolist()
                assert rows == list(range(p))


def test_row_address_roundtrip():
    p = 7
    flats = [RowAddress.from_flat(p, r).flat(p) for r in range(p * p)]
    assert flats == list(range(p * p))
    assert RowAddress.hblock(2, 3).flat(p) == p + 2 * (p - 1) + 3
    with pytest.raises(ValueError):
        RowAddress.hblock(0, p - 1).flat(p)


def test_col_address_roundtrip():
    p = 5
    assert [ColAddress.from_flat(p, c).flat(p) for c in range(25)] == list(range(25))
    assert ColAddress(3, 1).flat(p) == 16


def test_entry_addressing(ex3):
    # row 2 of H_1, group V_3: progression starting at 0
    assert ex3.entry(RowAddress.hblock(1, 2), ColAddress(3, 2)).value == 2


def test_symbol_matrix_validates():
    with pytest.raises(ValueError):
        SymbolMatrix(3, np.zeros((8, 9), dtype=int))
    bad = np.zeros((9, 9), dtype=int)
    bad[4, 4] = 3
    with pytest.raises(ValueError, match=r"\(4, 4\)"):
        SymbolMatrix(3, bad)


def test_symbol_matrix_is_immutable(ex3):
    with pytest.raises(ValueError):
        ex3.entries[0, 0] = 1
