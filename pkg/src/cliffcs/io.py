"""JSON matrix files and plain-text circuit files.

A matrix file looks like

    {"format_version": 1, "ring": "zomega", "sde": 4,
     "rows": [[["3", "0", "1", "0"], ...], ...]}

where each entry is the coordinate list [a, b, c, d] of a + bω + cω² + dω³
and the matrix is rows/√2^sde.  Coordinates are written as decimal strings;
plain JSON integers are accepted on input.  A 6×6 file holds an SO(6)
matrix and must have b = c = d = 0 everywhere.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from .errors import ParseError
from .so6 import SO6Matrix
from .u4 import U4Matrix

FORMAT_VERSION = 1


def _coord(x) -> int:
    if isinstance(x, bool):
        raise ParseError("booleans are not coordinates")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip(), 10)
        except ValueError:
            raise ParseError(f"bad coordinate {x!r}") from None
    raise ParseError(f"bad coordinate {x!r}")


def matrix_to_dict(m: U4Matrix | SO6Matrix) -> dict:
    if isinstance(m, U4Matrix):
        rows = [[[str(int(v)) for v in m.coords(i, j)] for j in range(4)] for i in range(4)]
    else:
        rows = [[[str(x), "0", "0", "0"] for x in r] for r in m.rows]
    return {"format_version": FORMAT_VERSION, "ring": "zomega", "sde": m.k, "rows": rows}


def matrix_from_dict(doc: dict) -> U4Matrix | SO6Matrix:
    if not isinstance(doc, dict):
        raise ParseError("matrix document must be a JSON object")
    if doc.get("format_version", FORMAT_VERSION) != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {doc.get('format_version')!r}")
    if doc.get("ring", "zomega") != "zomega":
        raise ParseError(f"unsupported ring {doc.get('ring')!r}")
    try:
        k = doc["sde"]
        rows = doc["rows"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ParseError("sde must be a non-negative integer")
    n = len(rows) if isinstance(rows, list) else -1
    if n not in (4, 6) or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ParseError("rows must be a 4×4 or 6×6 array")
    coords = []
    for r in rows:
        row = []
        for x in r:
            if not isinstance(x, list) or len(x) != 4:
                raise ParseError("each entry must be a list of four coordinates")
            row.append(tuple(_coord(v) for v in x))
        coords.append(row)
    if n == 4:
        planes = np.empty((4, 4, 4), dtype=object)
        for i in range(4):
            for j in range(4):
                for c in range(4):
                    planes[c, i, j] = coords[i][j][c]
        return U4Matrix(planes, k)
    if any(x[1] or x[2] or x[3] for r in coords for x in r):
        raise ParseError("6×6 matrices must have integer entries")
    return SO6Matrix([[x[0] for x in r] for r in coords], k)


def dumps_matrix(m: U4Matrix | SO6Matrix) -> str:
    return json.dumps(matrix_to_dict(m), indent=None, separators=(", ", ": "))


def loads_matrix(text: str) -> U4Matrix | SO6Matrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return matrix_from_dict(doc)


def read_matrix(path: Union[str, Path]) -> U4Matrix | SO6Matrix:
    return loads_matrix(Path(path).read_text())


def write_matrix(path: Union[str, Path], m: U4Matrix | SO6Matrix) -> None:
    Path(path).write_text(dumps_matrix(m) + "\n")


# ------------------------------------------------------------------ circuits


def parse_circuit(text: str) -> tuple[str, ...]:
    """Tokens of a circuit file; '#' starts a comment running to end of line."""
    out: list[str] = []
    for line in text.splitlines():
        out.extend(line.split("#", 1)[0].split())
    return tuple(out)


def format_circuit(tokens: Sequence[str], comment: str | None = None) -> str:
    head = "".join(f"# {line}\n" for line in comment.splitlines()) if comment else ""
    return head + " ".join(tokens) + "\n"


def read_circuit(path: Union[str, Path]) -> tuple[str, ...]:
    return parse_circuit(Path(path).read_text())
