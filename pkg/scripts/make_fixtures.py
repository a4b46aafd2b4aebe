"""Regenerate the bundled fixture documents under src/gbtd/data/."""

from pathlib import Path

from gbtd.documents import DesignDocument, emit
from gbtd.fixtures import (
    EXAMPLE1_DEFICIENT,
    EXAMPLE1_ROWS,
    EXAMPLE2_ROWS,
    FIXTURE_FILES,
    example1_design,
    example2_matrix,
    example3_matrix,
)

DATA = Path(__file__).resolve().parents[1] / "src" / "gbtd" / "data"


def documents() -> dict[str, DesignDocument]:
    return {
        "example1": DesignDocument.of(
            example1_design(),
            {
                "source": "worked example GBTD(3,3)",
                "note": "points translated from 1-based labels 1..9 to 0..8 by subtracting 1",
                "original_rows_1based": list(EXAMPLE1_ROWS),
                "original_deficient_tuples_1based": list(EXAMPLE1_DEFICIENT),
            },
        ),
        "example2": DesignDocument.of(
            example2_matrix(),
            {
                "source": "matrix M' obtained from the worked GBTD(3,3)",
                "note": "row 0 is the deficiency row; column j is 0-based point j (1-based label j+1)",
                "original_rows": list(EXAMPLE2_ROWS),
            },
        ),
        "example3": DesignDocument.of(
            example3_matrix(),
            {
                "source": "M_5 expanded from its constant/progression vector-block table",
                "note": "rows: H* then H_0..H_4; columns: V_0..V_4; 0-based throughout",
            },
        ),
    }


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    for name, doc in documents().items():
        (DATA / FIXTURE_FILES[name]).write_bytes(emit(doc))


if __name__ == "__main__":
    main()
