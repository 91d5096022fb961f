"""Reduction of any valid cover to the portrait of the squaring map.

The driver runs three steps in order and records a full trace:

1. component count: apply one split when the portrait has one component;
2. pre-period structure: close the tail of each strictly pre-periodic
   critical point, first critical point first, then verify both components
   are cycles;
3. cycle lengths: shorten the first critical component to a fixed point,
   then the second, then run one terminating verification.

Verification-only runs are materialised as moveless trace entries so that
the step counters are exact: step 1 runs once, step 2 at most three times,
and step 3 exactly k1 + k2 - 1 times, where k1 and k2 are the two cycle
lengths on entry to step 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cover import MarkedCover, PortraitError, derive_portrait, orbit_profile
from .features import FeatureVector, TwoComponents, classify
from .moves import Move, apply_move, decrease_cycle, make_periodic, split

SQUARING_FEATURES = TwoComponents((0, 1), (0, 1))


class StepTag(str, Enum):
    STEP1 = "step1"
    STEP2 = "step2"
    STEP3 = "step3"


@dataclass(frozen=True)
class TraceEntry:
    """One run of one step: its move (None for a verification-only run)
    and the feature vector after the run."""

    step: StepTag
    move: Move | None
    features: FeatureVector


@dataclass(frozen=True)
class ReductionTrace:
    initial: MarkedCover
    entries: tuple[TraceEntry, ...]
    final: MarkedCover
    step1_runs: int
    step2_runs: int
    step3_runs: int
    minted_count: int

    @property
    def moves(self) -> tuple[Move, ...]:
        return tuple(e.move for e in self.entries if e.move is not None)


@dataclass(frozen=True)
class BoundReport:
    step1_runs: int
    step2_runs: int
    step3_runs: int
    step3_expected: int

    @property
    def passed(self) -> bool:
        return (
            self.step1_runs == 1
            and self.step2_runs <= 3
            and self.step3_runs == self.step3_expected
        )


def reduce(cover: MarkedCover) -> ReductionTrace:
    """Drive ``cover`` to the squaring-map portrait, recording every run."""
    derive_portrait(cover)  # raises on an invalid input
    entries: list[TraceEntry] = []
    work = cover

    def record(step: StepTag, move: Move | None) -> None:
        entries.append(
            TraceEntry(step=step, move=move, features=classify(derive_portrait(work)))
        )

    # Step 1: number of components.
    if not isinstance(classify(derive_portrait(work)), TwoComponents):
        outcome = split(work)
        work = outcome.cover
        record(StepTag.STEP1, outcome.move)
    else:
        record(StepTag.STEP1, None)

    # Step 2: pre-period structure, first critical point first.
    for j in (1, 2):
        if orbit_profile(work, work.critical[j - 1]).tail_length > 0:
            outcome = make_periodic(work, j)
            work = outcome.cover
            record(StepTag.STEP2, outcome.move)
    features = classify(derive_portrait(work))
    assert isinstance(features, TwoComponents)
    assert features.comp1[0] == 0 and features.comp2[0] == 0
    record(StepTag.STEP2, None)

    # Step 3: cycle lengths, first component fully, then the second.
    for j in (1, 2):
        while orbit_profile(work, work.critical[j - 1]).cycle_length > 1:
            outcome = decrease_cycle(work, j)
            work = outcome.cover
            record(StepTag.STEP3, outcome.move)
    features = classify(derive_portrait(work))
    assert features == SQUARING_FEATURES
    record(StepTag.STEP3, None)

    return ReductionTrace(
        initial=cover,
        entries=tuple(entries),
        final=work,
        step1_runs=sum(e.step is StepTag.STEP1 for e in entries),
        step2_runs=sum(e.step is StepTag.STEP2 for e in entries),
        step3_runs=sum(e.step is StepTag.STEP3 for e in entries),
        minted_count=sum(e.move.minted is not None for e in entries if e.move),
    )


def verify_step_bounds(trace: ReductionTrace) -> BoundReport:
    """Recount the runs of each step and check them against the bounds.

    The expected step-3 count is recomputed from the trace itself: the
    moves preceding the first step-3 entry are replayed onto the initial
    cover, and k1 + k2 - 1 is read off the resulting cycle lengths.  Raises
    :class:`PortraitError` on a malformed trace (counter mismatch, missing
    step-3 entry, or a replay failure).
    """
    counts = {tag: sum(e.step is tag for e in trace.entries) for tag in StepTag}
    stored = (trace.step1_runs, trace.step2_runs, trace.step3_runs)
    if stored != (counts[StepTag.STEP1], counts[StepTag.STEP2], counts[StepTag.STEP3]):
        raise PortraitError("trace counters disagree with trace entries")
    if counts[StepTag.STEP3] == 0:
        raise PortraitError("trace has no step-3 entry")

    work = trace.initial
    for entry in trace.entries:
        if entry.step is StepTag.STEP3:
            break
        if entry.move is not None:
            work = apply_move(work, entry.move)
    portrait = derive_portrait(work)
    features = classify(portrait)
    if not isinstance(features, TwoComponents):
        raise PortraitError("cover at step-3 entry does not have two components")
    if features.comp1[0] != 0 or features.comp2[0] != 0:
        raise PortraitError("cover at step-3 entry has a pre-periodic component")
    expected = features.comp1[1] + features.comp2[1] - 1

    return BoundReport(
        step1_runs=counts[StepTag.STEP1],
        step2_runs=counts[StepTag.STEP2],
        step3_runs=counts[StepTag.STEP3],
        step3_expected=expected,
    )
