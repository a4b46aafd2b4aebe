"""JSON and plain-grid serialization of matrices and designs.

JSON documents look like::

    {
      "kind": "matrix",
      "p": 3,
      "metadata": {...},
      "entries": [
        [0, 0, 0, 1, 1, 1, 2, 2, 2],
        ...
      ]
    }

with ``"blocks"`` (p rows of p^2-1 point lists) in place of ``"entries"`` for
``kind == "design"``.  ``metadata`` is optional.  The grid format is p^2 lines
of p^2 space-separated integers and carries matrices only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import isqrt
from typing import Any, Literal, Union

from gbtd.construction import SymbolMatrix
from gbtd.designs import GbtdArray
from gbtd.zp import check_prime

Payload = Union[SymbolMatrix, GbtdArray]


class DocumentError(ValueError):
    pass


@dataclass
class DesignDocument:
    kind: Literal["matrix", "design"]
    p: int
    payload: Payload
    metadata: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def of(cls, payload: Payload, metadata: dict[str, Any] | None = None) -> DesignDocument:
        kind = "matrix" if isinstance(payload, SymbolMatrix) else "design"
        return cls(kind, payload.p, payload, dict(metadata or {}))


def emit(doc: DesignDocument, format: str = "json") -> bytes:
    if format == "grid":
        if doc.kind != "matrix":
            raise DocumentError("the grid format holds matrices only")
        return "".join(" ".join(map(str, row)) + "\n" for row in doc.payload.to_list()).encode()
    if format != "json":
        raise DocumentError(f"unknown format {format!r}")

    lines = ["{", f'  "kind": "{doc.kind}",', f'  "p": {doc.p},']
    if doc.metadata:
        lines.append(f'  "metadata": {json.dumps(doc.metadata, sort_keys=True, ensure_ascii=False)},')
    if doc.kind == "matrix":
        key, rows = "entries", doc.payload.to_list()
    else:
        key, rows = "blocks", doc.payload.cells.tolist()
    lines.append(f'  "{key}": [')
    body = [f"    {json.dumps(row, separators=(', ', ': '))}" for row in rows]
    lines.append(",\n".join(body))
    lines.append("  ]")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def parse(data: bytes | str, format: str | None = None) -> DesignDocument:
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"input is not UTF-8 text (byte {exc.start})") from None
    else:
        text = data
    if format is None:
        format = "json" if text.lstrip().startswith("{") else "grid"
    if format == "json":
        return _parse_json(text)
    if format == "grid":
        return _parse_grid(text)
    raise DocumentError(f"unknown format {format!r}")


def _check_p(p: Any) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise DocumentError(f'"p" must be an integer, got {p!r}')
    if p < 3 or not check_prime(p):
        raise DocumentError(f'"p" must be an odd prime, got {p}')
    return p


def _int_in(value: Any, lo: int, hi: int, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{where}: expected an integer, got {value!r}")
    if not lo <= value < hi:
        raise DocumentError(f"{where}: {value} is outside [{lo}, {hi})")
    return value


def _list_of(value: Any, length: int, where: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(f"{where}: expected a list, got {type(value).__name__}")
    if len(value) != length:
        raise DocumentError(f"{where}: expected {length} items, got {len(value)}")
    return value


def _parse_json(text: str) -> DesignDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"JSON syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise DocumentError("top level must be a JSON object")
    kind = obj.get("kind")
    if kind not in ("matrix", "design"):
        raise DocumentError(f'"kind" must be "matrix" or "design", got {kind!r}')
    p = _check_p(obj.get("p"))
    metadata = obj.get("metadata", {})
    if not isinstance(metadata, dict):
        raise DocumentError('"metadata" must be an object')
    n = p * p

    if kind == "matrix":
        unknown = set(obj) - {"kind", "p", "metadata", "entries"}
        if unknown:
            raise DocumentError(f"unexpected keys {sorted(unknown)}")
        rows = _list_of(obj.get("entries"), n, "entries")
        for r, row in enumerate(rows):
            _list_of(row, n, f"entries[{r}]")
            for c, x in enumerate(row):
                _int_in(x, 0, p, f"entries[{r}][{c}]")
        return DesignDocument("matrix", p, SymbolMatrix(p, rows), metadata)

    unknown = set(obj) - {"kind", "p", "metadata", "blocks"}
    if unknown:
        raise DocumentError(f"unexpected keys {sorted(unknown)}")
    rows = _list_of(obj.get("blocks"), p, "blocks")
    for r, row in enumerate(rows):
        _list_of(row, n - 1, f"blocks[{r}]")
        for t, block in enumerate(row):
            _list_of(block, p, f"blocks[{r}][{t}]")
            for s, x in enumerate(block):
                _int_in(x, 0, n, f"blocks[{r}][{t}][{s}]")
    return DesignDocument("design", p, GbtdArray(rows), metadata)


def _parse_grid(text: str) -> DesignDocument:
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise DocumentError("empty grid")
    n = len(lines)
    p = isqrt(n)
    if p * p != n:
        raise DocumentError(f"grid has {n} rows, which is not p^2 for an integer p")
    try:
        _check_p(p)
    except DocumentError as exc:
        raise DocumentError(f"grid has {n} rows: {exc}") from None
    rows = []
    for no, toks in lines:
        if len(toks) != n:
            raise DocumentError(f"line {no}: expected {n} entries, got {len(toks)}")
        row = []
        for c, tok in enumerate(toks, 1):
            try:
                x = int(tok)
            except ValueError:
                raise DocumentError(f"line {no}, entry {c}: {tok!r} is not an integer") from None
            row.append(_int_in(x, 0, p, f"line {no}, entry {c}"))
        rows.append(row)
    return DesignDocument("matrix", p, SymbolMatrix(p, rows))


def read_document(path: str, format: str | None = None) -> DesignDocument:
    with open(path, "rb") as fh:
        return parse(fh.read(), format)

