"""Integer sequence files, bundled reference tables, and table output.

The b-file format is the one OEIS uses: one ``<index> <value>`` pair per
line, ``#`` comment lines and blank lines ignored. When a file starts
with a comment, its first word is taken as the sequence id.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources

from .count import CountTable
from .errors import DowError

# bundled reference columns, keyed by sequence id used in CountTable
FIXTURES = ("K", "I", "S", "L", "J", "T", "diagrams-all", "diagrams-irr", "diagrams-sir")

FORMATS = ("aligned-text", "csv", "json-lines", "bfile")


@dataclass(frozen=True)
class SequenceFile:
    id: str
    entries: tuple  # ((index, value), ...), indices strictly increasing

    def as_dict(self) -> dict:
        return dict(self.entries)


def parse_bfile(text: str, id: str | None = None) -> SequenceFile:
    entries = []
    first_comment = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if first_comment is None and not entries:
                first_comment = line[1:].strip()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DowError(f"line {lineno}: expected '<index> <value>', got {raw!r}")
        try:
            n, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DowError(f"line {lineno}: non-integer field in {raw!r}") from None
        if entries and n <= entries[-1][0]:
            raise DowError(f"line {lineno}: index {n} does not increase")
        entries.append((n, v))
    if id is None:
        id = first_comment.split()[0] if first_comment else ""
    return SequenceFile(id, tuple(entries))


def format_bfile(seq: SequenceFile) -> str:
    lines = [f"# {seq.id}"] if seq.id else []
    lines += [f"{n} {v}" for n, v in seq.entries]
    return "\n".join(lines) + "\n"


def load_fixture(sequence_id: str) -> SequenceFile:
    """Reference values for one bundled column (see :data:`FIXTURES`)."""
    if sequence_id not in FIXTURES:
        raise KeyError(sequence_id)
    text = resources.files("dowords").joinpath("data", f"{sequence_id}.txt").read_text()
    return parse_bfile(text)


def to_sequence_file(t: CountTable) -> SequenceFile:
    return SequenceFile(t.sequence_id, tuple(sorted(t.values.items())))


@dataclass(frozen=True)
class AlignmentReport:
    ok: bool
    shift: int | None
    overlap: int
    mismatch: tuple | None = None  # (n, computed, reference) at shift 0

    def __str__(self):
        if self.ok:
            return f"aligned with shift {self.shift} over {self.overlap} terms"
        if self.mismatch is None:
            return "no overlapping indices"
        n, c, r = self.mismatch
        return f"no valid shift; first mismatch at n={n}: computed {c}, reference {r}"


def cross_check(computed: CountTable, reference: SequenceFile, max_shift: int = 3) -> AlignmentReport:
    """Find ``s`` with ``|s| <= max_shift`` such that
    ``computed[n] == reference[n + s]`` on every shared index.

    Shifts are tried in the order 0, 1, -1, 2, -2, ... so the smallest one
    wins. Failure is reported, not raised.
    """
    if not computed.values or not reference.entries:
        raise ValueError("both sequences must be nonempty")
    if max_shift < 0:
        raise ValueError("max_shift must be non-negative")
    ref = reference.as_dict()
    for s in [0] + [d for k in range(1, max_shift + 1) for d in (k, -k)]:
        shared = [n for n in sorted(computed.values) if n + s in ref]
        if shared and all(computed.values[n] == ref[n + s] for n in shared):
            return AlignmentReport(True, s, len(shared))
    mismatch = None
    for n in sorted(computed.values):
        if n in ref and computed.values[n] != ref[n]:
            mismatch = (n, computed.values[n], ref[n])
            break
    return AlignmentReport(False, None, 0, mismatch)


def _common_range(tables):
    idx = tables[0].indices
    for t in tables[1:]:
        if t.indices != idx:
            raise ValueError(f"tables {tables[0].sequence_id} and {t.sequence_id} cover different indices")
    return idx


def emit_table(tables: list[CountTable], fmt: str = "aligned-text", headers=None) -> str:
    """Render count tables as text.

    aligned-text
        header row, then one row per n; columns right-aligned.
    csv
        header ``n,<id>...``, one row per n.
    json-lines
        one object per n; values are strings so big integers survive.
    bfile
        exactly one table in b-file format.

    ``headers`` overrides the column names (default: the sequence ids).
    """
    if not tables:
        raise ValueError("nothing to emit")
    if fmt == "bfile":
        if len(tables) != 1:
            raise ValueError("bfile output holds a single sequence")
        return format_bfile(to_sequence_file(tables[0]))
    idx = _common_range(tables)
    names = list(headers) if headers else [t.sequence_id for t in tables]
    if fmt == "aligned-text":
        rows = [["n"] + names] + [[str(n)] + [str(t.values[n]) for t in tables] for n in idx]
        widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
        return "".join(" ".join(cell.rjust(w) for cell, w in zip(r, widths)) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n"] + names)
        for n in idx:
            writer.writerow([n] + [t.values[n] for t in tables])
        return buf.getvalue()
    if fmt == "json-lines":
        out = []
        for n in idx:
            row = {"n": n}
            row.update({name: str(t.values[n]) for name, t in zip(names, tables)})
            out.append(json.dumps(row))
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
