"""The three portrait-rewriting moves, realised as validated half-twist swaps.

Every move is one transposition of marked points, optionally preceded by
minting a fresh preimage of a critical point.  The moves are:

* :func:`split` - turn a one-component portrait into a two-component one,
  dispatching on the pre-period pattern of the input;
* :func:`make_periodic` - close the tail of a strictly pre-periodic
  critical point into its cycle;
* :func:`decrease_cycle` - shorten the cycle of one cyclic component by
  one, dropping a point out of the portrait.

Each move validates its precondition, applies exactly the mint/swap pair it
records, and returns the resulting cover together with its portrait, so a
move outcome can always be reproduced by replaying the recorded operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import (
    MarkedCover,
    MoveError,
    Portrait,
    apply_swap,
    derive_portrait,
    mint_preimage,
    orbit_profile,
)
from .features import (
    Contained,
    DisjointPrePeriods,
    FeatureVector,
    Intersecting,
    OneCycle,
    OnePrePeriod,
    TwoComponents,
    classify,
)

SPLIT_CYCLE_ADJACENT = "F1.1a"
SPLIT_CYCLE = "F1.1b"
SPLIT_ONE_PREPERIOD = "F1.2"
SPLIT_CONTAINED = "F1.3"
SPLIT_CONTAINED_BOUNDARY = "F1.3-boundary"
SPLIT_DISJOINT = "F1.4"
SPLIT_INTERSECTING = "F1.5"
MAKE_PERIODIC = "F2"
DECREASE_CYCLE = "F3"

FUNCTION_TAGS = (
    SPLIT_CYCLE_ADJACENT,
    SPLIT_CYCLE,
    SPLIT_ONE_PREPERIOD,
    SPLIT_CONTAINED,
    SPLIT_CONTAINED_BOUNDARY,
    SPLIT_DISJOINT,
    SPLIT_INTERSECTING,
    MAKE_PERIODIC,
    DECREASE_CYCLE,
)


@dataclass(frozen=True)
class Move:
    """One transposition with an optional freshly minted preimage.

    When ``minted`` is present it is a (point, image) pair whose image was a
    critical point of the pre-move cover, and the minted point is the first
    swap operand.
    """

    swap: tuple[str, str]
    minted: tuple[str, str] | None = None
    function_tag: str = ""


@dataclass(frozen=True)
class MoveOutcome:
    cover: MarkedCover
    move: Move
    portrait: Portrait


def apply_move(cover: MarkedCover, move: Move) -> MarkedCover:
    """Replay a recorded move: mint (if present) then swap."""
    if move.minted is not None:
        name, image = move.minted
        if image not in cover.critical:
            raise MoveError(f"minted image {image!r} is not a critical point")
        j = cover.critical.index(image) + 1
        cover, minted_name = mint_preimage(cover, j, name=name)
        if minted_name != name:
            raise MoveError(f"mint produced {minted_name!r}, expected {name!r}")
    return apply_swap(cover, *move.swap)


def _finish(
    cover: MarkedCover, mint_for: str | None, a: str | None, b: str, tag: str
) -> MoveOutcome:
    # When a preimage is minted it becomes the first swap operand.
    minted = None
    if mint_for is not None:
        j = cover.critical.index(mint_for) + 1
        cover, name = mint_preimage(cover, j)
        minted = (name, mint_for)
        a = name
    assert a is not None
    result = apply_swap(cover, a, b)
    move = Move(swap=(a, b), minted=minted, function_tag=tag)
    return MoveOutcome(cover=result, move=move, portrait=derive_portrait(result))


def split(cover: MarkedCover) -> MoveOutcome:
    """Split a one-component portrait into two components.

    Dispatches on the pre-period pattern of the input portrait.  The swap
    sites (and whether a preimage is minted first) depend on the pattern;
    see the function tag on the returned move.
    """
    portrait = derive_portrait(cover)
    features = classify(portrait)
    c1, c2 = portrait.critical

    if isinstance(features, TwoComponents):
        raise MoveError("portrait already has two components")

    if isinstance(features, OneCycle):
        if features.dist12 == 1 or features.dist21 == 1:
            # One critical point is the image of the other: swapping the
            # pair pins one of them to a fixed point.
            return _finish(cover, None, c1, c2, SPLIT_CYCLE_ADJACENT)
        gap = features.dist12
        last = portrait.iterate(c1, features.cycle - 1)
        return _finish(cover, None, portrait.iterate(c1, gap - 1), last, SPLIT_CYCLE)

    if isinstance(features, OnePrePeriod):
        pre = c1 if orbit_profile(cover, c1).tail_length > 0 else c2
        tail = features.tail
        if tail < 2:
            raise MoveError("pre-period of length 1 cannot occur in a valid portrait")
        return _finish(
            cover, pre, None, portrait.iterate(pre, tail - 1), SPLIT_ONE_PREPERIOD
        )

    if isinstance(features, Contained):
        tail1 = orbit_profile(cover, c1).tail_length
        outer = c1 if tail1 == features.tail_outer else c2
        inner = c2 if outer == c1 else c1
        if features.gap == 1:
            # The prescribed mint-and-swap site would be the outer critical
            # point itself, which only reproduces an isomorphic portrait.
            # Swapping the critical pair splits instead: the inner critical
            # point becomes fixed, since its only preimage was the outer one.
            return _finish(cover, None, outer, inner, SPLIT_CONTAINED_BOUNDARY)
        return _finish(
            cover, outer, None, portrait.iterate(outer, features.gap - 1), SPLIT_CONTAINED
        )

    if isinstance(features, DisjointPrePeriods):
        if features.tail1 < 2 or features.tail2 < 2:
            raise MoveError("pre-period of length 1 cannot occur in a valid portrait")
        entry1 = portrait.iterate(c1, features.tail1)
        entry2 = portrait.iterate(c2, features.tail2)
        if entry1 == entry2:
            raise MoveError("coinciding entry points cannot occur in a valid portrait")
        return _finish(cover, None, entry1, entry2, SPLIT_DISJOINT)

    assert isinstance(features, Intersecting)
    if features.unique1 < 2:
        raise MoveError("unique pre-period of length 1 cannot occur in a valid portrait")
    return _finish(
        cover, c1, None, portrait.iterate(c1, features.unique1 - 1), SPLIT_INTERSECTING
    )


def make_periodic(cover: MarkedCover, j: int) -> MoveOutcome:
    """Close the tail of a strictly pre-periodic critical point.

    Requires a two-component portrait with critical point ``j`` strictly
    pre-periodic (tail r, cycle k).  Mints a preimage of that critical
    point and swaps it with the last cycle point, producing a cycle of
    length r + k; the other component is untouched.
    """
    portrait = derive_portrait(cover)
    if not isinstance(classify(portrait), TwoComponents):
        raise MoveError("portrait must have two components")
    if j not in (1, 2):
        raise MoveError(f"critical index must be 1 or 2, got {j}")
    target = cover.critical[j - 1]
    profile = orbit_profile(cover, target)
    if profile.tail_length == 0:
        raise MoveError(f"critical point {target!r} is already periodic")
    last = portrait.iterate(target, profile.tail_length + profile.cycle_length - 1)
    return _finish(cover, target, None, last, MAKE_PERIODIC)


def decrease_cycle(cover: MarkedCover, j: int) -> MoveOutcome:
    """Shorten the cycle of critical point ``j`` by one.

    Requires a two-component portrait whose components are both cycles and
    cycle length k > 1 for component ``j``.  Swaps the first and second
    iterates of the critical point; the second iterate drops out of the
    portrait as a fixed marked point.  For k = 2 the swap touches the
    critical point itself and the critical label migrates to its image,
    which becomes a fixed critical point.
    """
    portrait = derive_portrait(cover)
    features = classify(portrait)
    if not isinstance(features, TwoComponents):
        raise MoveError("portrait must have two components")
    if features.comp1[0] != 0 or features.comp2[0] != 0:
        raise MoveError("both components must be cycles")
    if j not in (1, 2):
        raise MoveError(f"critical index must be 1 or 2, got {j}")
    target = cover.critical[j - 1]
    cycle_length = (features.comp1 if j == 1 else features.comp2)[1]
    if cycle_length <= 1:
        raise MoveError(f"cycle of {target!r} already has length 1")
    return _finish(
        cover, None, portrait.iterate(target, 1), portrait.iterate(target, 2),
        DECREASE_CYCLE,
    )


def expected_features(before: FeatureVector, move_tag: str, j: int = 1) -> FeatureVector:
    """The feature vector each move is specified to produce.

    ``before`` is the input feature vector in stored critical order and
    ``j`` identifies the component for the two-component moves.  Split
    outcomes are stated up to relabeling of the critical pair; compare via
    canonical encodings.
    """
    if move_tag == SPLIT_CYCLE_ADJACENT:
        assert isinstance(before, OneCycle)
        return TwoComponents((0, 1), (0, before.cycle - 1))
    if move_tag == SPLIT_CYCLE:
        assert isinstance(before, OneCycle)
        return TwoComponents((0, before.dist12), (0, before.dist21))
    if move_tag == SPLIT_ONE_PREPERIOD:
        assert isinstance(before, OnePrePeriod)
        return TwoComponents((0, before.tail), (0, before.cycle))
    if move_tag == SPLIT_CONTAINED:
        assert isinstance(before, Contained)
        return TwoComponents((0, before.gap), (before.tail_inner, before.cycle))
    if move_tag == SPLIT_CONTAINED_BOUNDARY:
        assert isinstance(before, Contained)
        return TwoComponents((0, 1), (before.tail_outer - 1, before.cycle))
    if move_tag == SPLIT_DISJOINT:
        assert isinstance(before, DisjointPrePeriods)
        return TwoComponents(
            (before.tail1, before.dist21), (before.tail2, before.dist12)
        )
    if move_tag == SPLIT_INTERSECTING:
        assert isinstance(before, Intersecting)
        return TwoComponents(
            (0, before.unique1), (before.unique2 + before.shared, before.cycle)
        )
    if move_tag == MAKE_PERIODIC:
        assert isinstance(before, TwoComponents)
        tail, cycle = before.comp1 if j == 1 else before.comp2
        closed = (0, tail + cycle)
        return TwoComponents(
            closed if j == 1 else before.comp1, closed if j == 2 else before.comp2
        )
    if move_tag == DECREASE_CYCLE:
        assert isinstance(before, TwoComponents)
        tail, cycle = before.comp1 if j == 1 else before.comp2
        shorter = (0, cycle - 1)
        return TwoComponents(
            shorter if j == 1 else before.comp1, shorter if j == 2 else before.comp2
        )
    raise ValueError(f"unknown function tag {move_tag!r}")
