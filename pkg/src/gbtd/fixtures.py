"""Worked examples: a GBTD(3,3), its matrix, and the symbolic table of M_5.

The published examples label points 1..9; they are stored here verbatim and
translated to 0-based points by subtracting 1.
"""

from __future__ import annotations

from importlib import resources

import numpy as np

from gbtd.construction import SymbolMatrix
from gbtd.designs import GbtdArray

# Rows of the GBTD(3,3), 1-based point labels, 8 design columns per row.
EXAMPLE1_ROWS = (
    "129 349 569 145 357 178 238 267",
    "357 167 138 236 468 245 749 589",
    "468 258 247 789 129 369 165 134",
)
# Deficient tuple of each design row, 1-based.
EXAMPLE1_DEFICIENT = ("468", "129", "357")

EXAMPLE2_ROWS = (
    "1 1 2 0 2 0 2 0 1",
    "0 0 1 2 1 2 1 2 0",
    "1 2 0 0 2 1 1 2 0",
    "1 2 1 2 0 0 2 1 0",
    "0 1 1 0 0 1 2 2 2",
    "2 2 0 1 0 1 0 1 2",
    "0 1 2 1 1 2 0 0 2",
    "2 0 0 1 2 2 1 0 1",
    "2 0 2 2 1 0 0 1 1",
)

# M_5 as a table of length-5 vector blocks: "=i" is the constant vector
# (i,...,i) and ">i" the progression (i, i+1, ..., i+4) mod 5.
EXAMPLE3_TABLE = (
    # H*
    "=0 =1 =2 =3 =4",
    "=1 =2 =3 =4 =0",
    "=2 =3 =4 =0 =1",
    "=3 =4 =0 =1 =2",
    "=4 =0 =1 =2 =3",
    # H_0
    ">0 >0 >0 >0 >0",
    ">0 >1 >2 >3 >4",
    ">0 >2 >4 >1 >3",
    ">0 >3 >1 >4 >2",
    # H_1
    ">1 >2 >3 >4 >1",
    ">1 >3 >0 >2 >4",
    ">1 >4 >2 >0 >3",
    ">1 >0 >4 >3 >2",
    # H_2
    ">2 >4 >1 >3 >1",
    ">2 >0 >3 >1 >0",
    ">2 >1 >0 >4 >3",
    ">2 >2 >2 >2 >2",
    # H_3
    ">3 >1 >4 >2 >1",
    ">3 >2 >1 >0 >0",
    ">3 >3 >3 >3 >4",
    ">3 >4 >0 >1 >2",
    # H_4
    ">4 >3 >2 >1 >1",
    ">4 >4 >4 >4 >0",
    ">4 >0 >1 >2 >4",
    ">4 >1 >3 >0 >3",
)


def example1_design() -> GbtdArray:
    return GbtdArray.from_blocks(
        [[[int(ch) - 1 for ch in cell] for cell in row.split()] for row in EXAMPLE1_ROWS]
    )


def example1_deficient_tuples() -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(int(ch) - 1 for ch in t)) for t in EXAMPLE1_DEFICIENT)


def example2_matrix() -> SymbolMatrix:
    return SymbolMatrix(3, [[int(x) for x in row.split()] for row in EXAMPLE2_ROWS])


def expand_vector_table(table, p: int) -> np.ndarray:
    rows = []
    for line in table:
        row = []
        for tok in line.split():
            kind, i = tok[0], int(tok[1:])
            if kind == "=":
                row.extend([i] * p)
            elif kind == ">":
                row.extend((i + c) % p for c in range(p))
            else:
                raise ValueError(f"bad table token {tok!r}")
        rows.append(row)
    return np.array(rows)


def example3_matrix() -> SymbolMatrix:
    return SymbolMatrix(5, expand_vector_table(EXAMPLE3_TABLE, 5))


FIXTURE_FILES = {
    "example1": "example1_design.json",
    "example2": "example2_matrix.json",
    "example3": "example3_matrix.json",
}


def fixture_path(name: str):
    """Path to a bundled fixture document (see ``FIXTURE_FILES``)."""
    return resources.files("gbtd") / "data" / FIXTURE_FILES[name]
