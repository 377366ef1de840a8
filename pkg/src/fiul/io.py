"""CSV readers and writers for the input and feature file formats.

Input file contract: UTF-8, header ``sequence,tr`` with an optional third
``dataset`` column, '.' decimal separator, one record per line.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .data import AsoRecord, Dataset
from .encoder import FEATURE_NAMES, encode_dataset, record_from_text


def load_dataset(path: str | Path, label: str | None = None) -> Dataset:
    """Load the standard input CSV; parse errors cite the offending data row."""
    path = Path(path)
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file") from None
        header = [h.strip() for h in header]
        if header[:2] != ["sequence", "tr"] or len(header) > 3 or (
            len(header) == 3 and header[2] != "dataset"
        ):
            raise ValueError(
                f"{path}: expected header 'sequence,tr' (optional 'dataset'), got {header}"
            )
        has_tag = len(header) == 3

        records: list[AsoRecord] = []
        tags: set[str] = set()
        for row_no, row in enumerate(reader, start=1):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(f"{path}: row {row_no}: expected {len(header)} fields")
            try:
                records.append(record_from_text(row[0].strip(), float(row[1])))
            except Exception as exc:
                raise ValueError(f"{path}: row {row_no}: {exc}") from exc
            if has_tag:
                tags.add(row[2].strip())

    if label is None:
        if len(tags) == 1:
            label = tags.pop()
        else:
            label = path.stem
    return Dataset(records=tuple(records), label=label)


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["sequence", "tr"])
        for record in dataset.records:
            writer.writerow([record.sequence, format(record.t_r, ".17g")])


def write_feature_csv(dataset: Dataset, path: str | Path) -> None:
    """Write the encoded matrix with the fixed 32-column header plus ``tr``."""
    x, y = encode_dataset(dataset)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(list(FEATURE_NAMES) + ["tr"])
        for row, target in zip(x, y):
            cells = [format(v, ".17g") for v in row]
            cells.append(format(target, ".17g"))
            writer.writerow(cells)


def load_feature_csv(path: str | Path) -> tuple[np.ndarray, np.ndarray]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header[:-1]) != FEATURE_NAMES or header[-1] != "tr":
            raise ValueError(f"{path}: not a feature CSV")
        rows = [[float(c) for c in row] for row in reader if row]
    arr = np.array(rows, dtype=np.float64).reshape(len(rows), len(FEATURE_NAMES) + 1)
    return arr[:, :-1], arr[:, -1]
