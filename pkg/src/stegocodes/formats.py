"""File formats: matrices, partitions, coding tables, codes, leader lists.

Matrices, partitions, and tables are single JSON documents; words inside
them use the canonical text form (digit string for q <= 10, comma-separated
integers above).  Codes and leader lists are line-oriented: a ``q n`` header
line followed by one word per line.  All writers are deterministic, and
``parse(dump(x))`` reproduces x for every format.
"""

from __future__ import annotations

import json
from typing import Sequence

from .errors import BudgetExceededError, FormatError
from .field import GF, Word
from .perfect import LinearCode
from .stegocode import BlockCode, CodingTable, PartitionCode, StegoMatrix

# Partitions larger than this refuse to serialize explicitly.
_DUMP_LIMIT = 1 << 20


def _loads(text: str, what: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad {what} file: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError(f"bad {what} file: expected a JSON object")
    return doc


def _need(doc: dict, what: str, *keys):
    for key in keys:
        if key not in doc:
            raise FormatError(f"bad {what} file: missing field {key!r}")
    return [doc[k] for k in keys]


def dump_matrix(H: StegoMatrix) -> str:
    doc = {
        "q": H.field.q,
        "k": H.k,
        "n": H.n,
        "t": H.t,
        "rows": [r.to_text() for r in H.rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_matrix(text: str) -> StegoMatrix:
    doc = _loads(text, "matrix")
    q, k, n, t, rows = _need(doc, "matrix", "q", "k", "n", "t", "rows")
    f = GF(q)
    if len(rows) != k:
        raise FormatError(f"bad matrix file: {len(rows)} rows, expected k={k}")
    words = [Word.from_text(f, r, n) for r in rows]
    return StegoMatrix(words, t)


def dump_partition(S: PartitionCode) -> str:
    qn = S.field.q**S.n
    if qn > _DUMP_LIMIT:
        raise BudgetExceededError(
            f"refusing to write {qn} words explicitly", required=qn, cap=_DUMP_LIMIT
        )
    parts = [
        [Word.unpack(S.field, S.n, x).to_text() for x in sorted(S.part_packed(i))]
        for i in range(S.M)
    ]
    doc = {"q": S.field.q, "n": S.n, "t": S.t, "parts": parts}
    return json.dumps(doc, indent=2) + "\n"


def parse_partition(text: str) -> PartitionCode:
    doc = _loads(text, "partition")
    q, n, t, parts = _need(doc, "partition", "q", "n", "t", "parts")
    f = GF(q)
    return PartitionCode.from_parts(
        f, n, t, [[Word.from_text(f, w, n) for w in part] for part in parts]
    )


def dump_table(table: CodingTable) -> str:
    H = table.matrix
    entries = [[y.to_text(), z.to_text()] for y, z in table.entries()]
    doc = {"q": H.field.q, "k": H.k, "n": H.n, "t": H.t, "entries": entries}
    return json.dumps(doc, indent=2) + "\n"


def parse_table(text: str) -> list[tuple[Word, Word]]:
    """Table files parse to (syndrome, solution) pairs; the matrix is not
    stored with them, so reconstruction stays explicit."""
    doc = _loads(text, "table")
    q, k, n, entries = _need(doc, "table", "q", "k", "n", "entries")
    f = GF(q)
    return [(Word.from_text(f, y, k), Word.from_text(f, z, n)) for y, z in entries]


def dump_code(code) -> str:
    """Code file: the ``q n`` header line, then one codeword per line."""
    if isinstance(code, LinearCode):
        code = code.as_block()
    lines = [f"{code.field.q} {code.n}"]
    lines.extend(w.to_text() for w in code.codewords())
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> BlockCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("bad code file: empty")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"bad code file: header must be 'q n', got {lines[0]!r}")
    try:
        q, n = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"bad code file: header must be 'q n', got {lines[0]!r}") from None
    f = GF(q)
    words = [Word.from_text(f, ln, n) for ln in lines[1:]]
    if not words:
        raise FormatError("bad code file: no codewords")
    return BlockCode.from_words(words)


def dump_check_matrix(code: LinearCode, t: int) -> str:
    """Linear codes may travel as their check matrix in the matrix format."""
    return dump_matrix(StegoMatrix(code.check_rows, t))


def dump_leaders(leaders: Sequence[Word]) -> str:
    """Leaders file: same line layout as a code file, order preserved."""
    f = leaders[0].field
    lines = [f"{f.q} {len(leaders[0])}"]
    lines.extend(w.to_text() for w in leaders)
    return "\n".join(lines) + "\n"


def parse_leaders(text: str) -> list[Word]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("bad leaders file: empty")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"bad leaders file: header must be 'q n', got {lines[0]!r}")
    q, n = int(head[0]), int(head[1])
    f = GF(q)
    return [Word.from_text(f, ln, n) for ln in lines[1:]]
