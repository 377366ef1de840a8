"""The two data mutators, expressed as nested per-iteration row-index views.

Both mutators draw a single seeded permutation up front and keep prefixes of
it, so the rows kept at iteration k+1 are always a subset of those kept at
iteration k.  Views address training-row indices only; record contents and
the test set are never touched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import rng

REDUCE = "reduce"
SELECT = "select"
MUTATOR_KINDS = (REDUCE, SELECT)


@dataclass(frozen=True)
class MutationSchedule:
    kept_fractions: tuple[float, ...]
    step: float
    floor_fraction: float

    def __len__(self) -> int:
        return len(self.kept_fractions)


@dataclass(frozen=True)
class MutationView:
    iteration: int
    kept_fraction: float
    kept_train_indices: tuple[int, ...]
    mutator_kind: str
    target_class_size: int | None = None


def _snap(x: float) -> float:
    # kills 1 - 9*0.1 = 0.09999999999999998 style accumulation
    return round(x, 12)


def build_schedule(step: float = 0.1, floor_fraction: float = 0.1) -> MutationSchedule:
    """Kept fractions [1.0, 1-step, ..., floor_fraction], uniformly spaced."""
    if not 0.0 < step < 1.0:
        raise ValueError(f"step must be in (0, 1), got {step}")
    if not 0.0 < floor_fraction <= 1.0:
        raise ValueError(f"floor_fraction must be in (0, 1], got {floor_fraction}")
    span = 1.0 - floor_fraction
    n_steps = round(span / step)
    if abs(n_steps * step - span) > 1e-9:
        raise ValueError(
            f"(1 - floor_fraction) = {span} is not an integer multiple of step {step}"
        )
    fractions = [_snap(1.0 - k * step) for k in range(n_steps + 1)]
    fractions[0] = 1.0
    fractions[-1] = floor_fraction
    return MutationSchedule(tuple(fractions), step, floor_fraction)


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def kept_size(total: int, fraction: float) -> int:
    """round-half-up of total*fraction, never below 1."""
    return max(1, _round_half_up(total * fraction))


def reduce_views(
    train_indices: Sequence[int], schedule: MutationSchedule, seed: int
) -> list[MutationView]:
    """Whole-training-set reduction: iteration k keeps round(|train| * f_k) rows."""
    n = len(train_indices)
    if n == 0:
        raise ValueError("empty training set")
    perm = rng.permutation(n, seed)
    shuffled = [train_indices[p] for p in perm]
    views = []
    for k, frac in enumerate(schedule.kept_fractions):
        size = kept_size(n, frac)
        views.append(
            MutationView(
                iteration=k,
                kept_fraction=frac,
                kept_train_indices=tuple(sorted(shuffled[:size])),
                mutator_kind=REDUCE,
            )
        )
    return views


def select_views(
    train_indices: Sequence[int],
    class_flags: Sequence[bool],
    schedule: MutationSchedule,
    seed: int,
) -> list[MutationView]:
    """Class-targeted reduction: only flagged rows shrink, the rest always stay.

    ``class_flags`` aligns positionally with ``train_indices``.
    """
    if len(class_flags) != len(train_indices):
        raise ValueError("class_flags must align with train_indices")
    members = [idx for idx, flag in zip(train_indices, class_flags) if flag]
    others = [idx for idx, flag in zip(train_indices, class_flags) if not flag]
    m = len(members)
    if m == 0:
        raise ValueError("empty target class")
    perm = rng.permutation(m, seed)
    shuffled = [members[p] for p in perm]
    views = []
    for k, frac in enumerate(schedule.kept_fractions):
        size = kept_size(m, frac)
        kept = sorted(others + shuffled[:size])
        views.append(
            MutationView(
                iteration=k,
                kept_fraction=frac,
                kept_train_indices=tuple(kept),
                mutator_kind=SELECT,
                target_class_size=size,
            )
        )
    return views
