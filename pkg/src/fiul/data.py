"""Dataset container, seeded shuffling and stratified train/test splitting.

Row identity is positional: every index set downstream (splits, mutation
views) refers to the position of a record in ``Dataset.records``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import rng

VALID_BASES = ("A", "C", "G", "T")
MAX_SEQUENCE_LENGTH = 50


@dataclass(frozen=True)
class AsoRecord:
    """One sequence with its phosphorothioation info and retention time.

    ``sequence`` keeps the raw text form (linkage markers and class suffix
    included); ``bases`` is the parsed nucleotide list.
    """

    sequence: str
    bases: tuple[str, ...]
    sulfur_count: int
    po_loss: bool
    t_r: float

    def __post_init__(self):
        n = len(self.bases)
        if not 1 <= n <= MAX_SEQUENCE_LENGTH:
            raise ValueError(f"sequence length {n} outside 1..{MAX_SEQUENCE_LENGTH}")
        bad = [b for b in self.bases if b not in VALID_BASES]
        if bad:
            raise ValueError(f"invalid base(s) {bad!r}")
        if not 0 <= self.sulfur_count <= n - 1:
            raise ValueError(
                f"sulfur_count {self.sulfur_count} outside 0..{n - 1} for length {n}"
            )
        if not self.t_r > 0:
            raise ValueError(f"t_r must be positive, got {self.t_r}")


@dataclass(frozen=True)
class Dataset:
    records: tuple[AsoRecord, ...]
    label: str = "unnamed"
    gradient_minutes: float = 0.0

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class SplitResult:
    train_indices: tuple[int, ...]
    test_indices: tuple[int, ...]
    seed: int


def shuffle(dataset: Dataset, seed: int) -> Dataset:
    """Return a permuted copy; the permutation depends only on (seed, N)."""
    n = len(dataset)
    if n == 0:
        raise ValueError("empty dataset")
    perm = rng.permutation(n, seed)
    return Dataset(
        records=tuple(dataset.records[p] for p in perm),
        label=dataset.label,
        gradient_minutes=dataset.gradient_minutes,
    )


def split(
    dataset: Dataset,
    train_fraction: float,
    stratify_on_po_loss: bool,
    seed: int,
) -> SplitResult:
    """Deterministic train/test split with |train| = floor(fraction * N).

    Stratified mode partitions the po_loss and native strata independently
    (floor of fraction per stratum) and then tops the train set up to the
    global floor from the stratum with the larger fractional remainder, so
    the class proportion in train never drifts more than one record from
    the full-dataset proportion.
    """
    n = len(dataset)
    if n == 0:
        raise ValueError("empty dataset")
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must be in (0, 1), got {train_fraction}")

    n_train = math.floor(train_fraction * n)
    if not stratify_on_po_loss:
        perm = rng.permutation(n, seed)
        train = perm[:n_train]
        test = perm[n_train:]
        return SplitResult(tuple(sorted(train)), tuple(sorted(test)), seed)

    strata = {
        True: [i for i, r in enumerate(dataset.records) if r.po_loss],
        False: [i for i, r in enumerate(dataset.records) if not r.po_loss],
    }
    train: list[int] = []
    test: list[int] = []
    leftovers: dict[bool, tuple[float, list[int]]] = {}
    for flag, members in strata.items():
        if not members:
            continue
        sub = rng.permutation(len(members), rng.derive_seed(seed, f"stratum:{flag}"))
        ordered = [members[p] for p in sub]
        take = math.floor(train_fraction * len(members))
        train.extend(ordered[:take])
        remainder = train_fraction * len(members) - take
        leftovers[flag] = (remainder, ordered[take:])

    # Per-stratum floors can undershoot the global floor by at most one
    # record; hand it to the stratum that lost the most to flooring
    # (native stratum wins ties, for determinism).
    deficit = n_train - len(train)
    if deficit > 0:
        order = sorted(leftovers.items(), key=lambda kv: (-kv[1][0], kv[0]))
        for _, (_, rest) in order:
            if deficit == 0:
                break
            if rest:
                train.append(rest.pop(0))
                deficit -= 1
    for _, (_, rest) in leftovers.items():
        test.extend(rest)

    return SplitResult(tuple(sorted(train)), tuple(sorted(test)), seed)
