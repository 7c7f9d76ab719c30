"""Parameter sweeps and their CSV / JSON encodings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import astuple, dataclass, fields
from itertools import product
from typing import Iterable, TextIO

from subpacket.closed_form import subpacketization_level
from subpacket.params import Parameters, derive_shape, is_valid

COLUMNS = (
    "N", "K", "D", "T", "S",
    "L_numerator", "L_denominator", "subpacketization", "multiplier",
)
# Serialised as decimal strings in JSON; the rest fit comfortably in a JSON number.
BIG_COLUMNS = frozenset({"L_numerator", "L_denominator", "subpacketization", "multiplier"})


@dataclass(frozen=True)
class SweepRow:
    N: int
    K: int
    D: int
    T: int
    S: int
    L_numerator: int
    L_denominator: int
    subpacketization: int
    multiplier: int

    @classmethod
    def from_params(cls, p: Parameters) -> "SweepRow":
        shape = derive_shape(p)
        res = subpacketization_level(p)
        return cls(
            p.N, p.K, p.D, shape.T, shape.S,
            res.L.numerator, res.L.denominator, res.subpacketization, res.multiplier,
        )


def parse_range(text: str) -> range:
    """Inclusive ``a..b`` (or a single integer) to a Python range."""
    lo, sep, hi = text.strip().partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise ValueError(f"malformed range {text!r}: expected a..b with integers") from None
    if b < a:
        raise ValueError(f"malformed range {text!r}: empty (end < start)")
    return range(a, b + 1)


def sweep(N: range, K: range, D: range) -> tuple[list[SweepRow], int]:
    """Rows for every valid triple in lexicographic (N, K, D) order, plus the skipped count."""
    rows = []
    skipped = 0
    for n, k, d in product(N, K, D):
        if is_valid(n, k, d):
            rows.append(SweepRow.from_params(Parameters(n, k, d)))
        else:
            skipped += 1
    return rows, skipped


def write_csv(rows: Iterable[SweepRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(astuple(row))


def write_json(rows: Iterable[SweepRow], out: TextIO) -> None:
    records = [
        {name: (str(value) if name in BIG_COLUMNS else value) for name, value in zip(COLUMNS, astuple(row))}
        for row in rows
    ]
    json.dump(records, out, indent=2)
    out.write("\n")


def read_csv(text: str) -> list[SweepRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [SweepRow(**{k: int(v) for k, v in rec.items()}) for rec in reader]


def read_json(text: str) -> list[SweepRow]:
    names = [f.name for f in fields(SweepRow)]
    return [SweepRow(**{k: int(rec[k]) for k in names}) for rec in json.loads(text)]
