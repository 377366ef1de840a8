"""Sequence grammar and the 32-feature numeric encoding.

Grammar: ``base ('*'? base)* ('-P=O')?`` with base in {A, C, G, T}.  A ``*``
marks a phosphorothioate linkage between the two adjacent bases; the literal
``-P=O`` suffix flags records that lost sulfur (the selectable class).

The feature layout is a fixed on-disk contract: 4 nucleotide counts, 16
ordered di-nucleotide counts (AA..TT, lexicographic), 10 unordered
di-nucleotide counts ({A,A}..{T,T}), total length, sulfur count — 32 columns
in that order.
"""

from __future__ import annotations

import numpy as np

from .data import AsoRecord, Dataset, VALID_BASES

PO_SUFFIX = "-P=O"

NUCLEOTIDES = list(VALID_BASES)
ORDERED_PAIRS = [a + b for a in NUCLEOTIDES for b in NUCLEOTIDES]
UNORDERED_PAIRS = [
    a + b for i, a in enumerate(NUCLEOTIDES) for b in NUCLEOTIDES[i:]
]
FEATURE_NAMES: tuple[str, ...] = tuple(
    NUCLEOTIDES + ORDERED_PAIRS + ["u" + p for p in UNORDERED_PAIRS] + ["length", "sulfur"]
)
N_FEATURES = len(FEATURE_NAMES)
assert N_FEATURES == 32

_ORDERED_INDEX = {p: 4 + i for i, p in enumerate(ORDERED_PAIRS)}
_UNORDERED_INDEX = {p: 20 + i for i, p in enumerate(UNORDERED_PAIRS)}
_LENGTH_COL = 30
_SULFUR_COL = 31


class SequenceParseError(ValueError):
    """Raised for text that does not match the sequence grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_sequence(text: str) -> tuple[tuple[str, ...], int, bool]:
    """Parse grammar text into (bases, sulfur_count, po_loss)."""
    po_loss = text.endswith(PO_SUFFIX)
    body = text[: -len(PO_SUFFIX)] if po_loss else text
    if not body:
        raise SequenceParseError("empty sequence", 0)

    bases: list[str] = []
    sulfur = 0
    expect_base = True
    for pos, ch in enumerate(body):
        if ch in VALID_BASES:
            bases.append(ch)
            expect_base = False
        elif ch == "*":
            if expect_base or pos == 0:
                raise SequenceParseError("linkage marker '*' must follow a base", pos)
            sulfur += 1
            expect_base = True
        else:
            raise SequenceParseError(f"illegal character {ch!r}", pos)
    if expect_base:
        raise SequenceParseError("trailing linkage marker", len(body) - 1)
    return tuple(bases), sulfur, po_loss


def format_sequence(
    bases: tuple[str, ...], sulfur_positions: tuple[int, ...], po_loss: bool
) -> str:
    """Inverse of parse_sequence; sulfur_positions are linkage indices 0..n-2."""
    marked = set(sulfur_positions)
    parts = [bases[0]]
    for i, base in enumerate(bases[1:]):
        if i in marked:
            parts.append("*")
        parts.append(base)
    if po_loss:
        parts.append(PO_SUFFIX)
    return "".join(parts)


def record_from_text(text: str, t_r: float) -> AsoRecord:
    bases, sulfur, po_loss = parse_sequence(text)
    return AsoRecord(
        sequence=text, bases=bases, sulfur_count=sulfur, po_loss=po_loss, t_r=t_r
    )


def encode_record(record: AsoRecord) -> np.ndarray:
    """Encode one record into the 32-feature vector (counts as float64)."""
    vec = np.zeros(N_FEATURES, dtype=np.float64)
    for base in record.bases:
        vec[NUCLEOTIDES.index(base)] += 1.0
    for left, right in zip(record.bases, record.bases[1:]):
        vec[_ORDERED_INDEX[left + right]] += 1.0
        key = left + right if left <= right else right + left
        vec[_UNORDERED_INDEX[key]] += 1.0
    vec[_LENGTH_COL] = len(record.bases)
    vec[_SULFUR_COL] = record.sulfur_count
    return vec


def encode_dataset(dataset: Dataset) -> tuple[np.ndarray, np.ndarray]:
    """Encode all records: row i of the matrix is record i, target i is t_r."""
    n = len(dataset)
    x = np.zeros((n, N_FEATURES), dtype=np.float64)
    y = np.zeros(n, dtype=np.float64)
    for i, record in enumerate(dataset.records):
        try:
            x[i] = encode_record(record)
        except Exception as exc:
            raise ValueError(f"row {i}: {exc}") from exc
        y[i] = record.t_r
    return x, y
