"""Hurwitz paths between covers: build and verify a transposition word
carrying one cover's portrait onto another's.

The word from ``g`` to ``h`` is the reduction word of ``g`` followed by the
reversed reduction word of ``h``, replayed through an identification of the
two reduced covers.  Since every swap is an involution, replaying ``h``'s
swaps in reverse rebuilds the portrait of ``h`` out of the identified
points; the minted points of ``h``'s reduction must merely exist, which the
junction arranges by copying them onto the ``g`` side as fresh marked
points.

Words are flat sequences of two record kinds: a mint record adds one marked
point with a prescribed image, and a swap record applies one transposition.
Consecutive mint records form one atomic batch, so the junction copies may
reference one another (a dropped fixed point copies to a fresh self-mapped
point).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cover import (
    MarkedCover,
    MoveError,
    PortraitError,
    apply_swap,
    derive_portrait,
    extend_cover,
    fresh_point_names,
)
from .features import FeatureVector, canonical_encoding, classify, features_isomorphic
from .moves import Move
from .reducer import SQUARING_FEATURES, reduce


@dataclass(frozen=True)
class MintRecord:
    """Add one fresh marked point with the given image."""

    point: str
    image: str


@dataclass(frozen=True)
class SwapRecord:
    """Apply the transposition exchanging ``a`` and ``b``."""

    a: str
    b: str
    tag: str = ""


WordRecord = MintRecord | SwapRecord
TranspositionWord = tuple[WordRecord, ...]


@dataclass(frozen=True)
class PathCertificate:
    """A verified transposition word from one cover to another.

    ``identification`` matches the critical pair of the second cover's
    reduced form to the critical pair of the first cover's reduced form.
    """

    word: TranspositionWord
    identification: tuple[tuple[str, str], tuple[str, str]]
    final_features: FeatureVector
    verified: bool

    @property
    def swap_count(self) -> int:
        return sum(isinstance(r, SwapRecord) for r in self.word)


def word_from_moves(moves: Iterable[Move]) -> TranspositionWord:
    """Lower recorded moves to word records (mint first when present)."""
    records: list[WordRecord] = []
    for move in moves:
        if move.minted is not None:
            records.append(MintRecord(*move.minted))
        records.append(SwapRecord(*move.swap, tag=move.function_tag))
    return tuple(records)


def reverse_word(word: TranspositionWord) -> TranspositionWord:
    """The inverse word: swaps in reverse order, mints dropped.

    Each transposition is its own inverse, and minted points persist as
    marked points, so the reversed swaps alone undo the map changes.
    """
    return tuple(
        record for record in reversed(word) if isinstance(record, SwapRecord)
    )


def rename_word(word: TranspositionWord, renaming: dict[str, str]) -> TranspositionWord:
    records: list[WordRecord] = []
    for record in word:
        if isinstance(record, MintRecord):
            records.append(MintRecord(renaming[record.point], renaming[record.image]))
        else:
            records.append(SwapRecord(renaming[record.a], renaming[record.b], record.tag))
    return tuple(records)


def replay(cover: MarkedCover, word: TranspositionWord) -> MarkedCover:
    """Fold the word records over ``cover`` in order.

    Raises when a swap operand is missing, a minted name collides, or a
    mint batch references a point that exists in neither the cover nor the
    batch.
    """
    batch: dict[str, str] = {}
    for record in word:
        if isinstance(record, MintRecord):
            if record.point in batch:
                raise MoveError(f"point {record.point!r} minted twice")
            batch[record.point] = record.image
            continue
        if batch:
            cover = extend_cover(cover, batch)
            batch = {}
        cover = apply_swap(cover, record.a, record.b)
    if batch:
        cover = extend_cover(cover, batch)
    return cover


def _require_reduced(cover: MarkedCover, role: str) -> None:
    if classify(derive_portrait(cover)) != SQUARING_FEATURES:
        raise MoveError(f"{role} does not have the squaring-map portrait")


def _transport(
    fg: MarkedCover, fh: MarkedCover, word_h: TranspositionWord
) -> tuple[MarkedCover, TranspositionWord, tuple[MintRecord, ...], dict[str, str]]:
    _require_reduced(fg, "first cover")
    _require_reduced(fh, "second cover")
    renaming = {fh.c1: fg.c1, fh.c2: fg.c2}
    extras = sorted(fh.points - {fh.c1, fh.c2})
    fresh = fresh_point_names(fg.points, len(extras))
    renaming.update(zip(extras, fresh))
    additions = {renaming[x]: renaming[fh.mapping[x]] for x in extras}
    extended = extend_cover(fg, additions)
    extension = tuple(MintRecord(name, image) for name, image in additions.items())
    return extended, rename_word(word_h, renaming), extension, renaming


def transport_word(
    fg: MarkedCover, fh: MarkedCover, word_h: TranspositionWord
) -> tuple[MarkedCover, TranspositionWord]:
    """Embed ``fh``'s marked points into ``fg`` and rename a word through it.

    Both covers must carry the squaring-map portrait.  The identification
    sends the first critical point of ``fh`` to the first critical point of
    ``fg`` (the portrait is symmetric, so the choice is a convention), and
    every non-portrait marked point of ``fh`` to a fresh copy whose
    dynamics mirror ``fh``.  The returned cover, restricted to the image of
    the identification, is isomorphic to ``fh`` as a marked self-map.
    """
    extended, renamed, _, _ = _transport(fg, fh, word_h)
    return extended, renamed


def connect(g: MarkedCover, h: MarkedCover) -> PathCertificate:
    """Build the transposition word carrying ``g``'s portrait onto ``h``'s.

    Reduces both covers, welds the two words at the reduced form, and
    verifies the result by replaying the whole word on ``g`` and comparing
    portrait features with ``h``.
    """
    trace_g = reduce(g)
    trace_h = reduce(h)
    word_h = word_from_moves(trace_h.moves)
    extended, _, extension, renaming = _transport(trace_g.final, trace_h.final, word_h)
    back = rename_word(reverse_word(word_h), renaming)
    word = word_from_moves(trace_g.moves) + extension + back

    final = replay(extended, back)
    final_features = classify(derive_portrait(final))
    verified = features_isomorphic(derive_portrait(final), derive_portrait(h))
    identification = (
        (trace_h.final.c1, trace_g.final.c1),
        (trace_h.final.c2, trace_g.final.c2),
    )
    return PathCertificate(
        word=word,
        identification=identification,
        final_features=final_features,
        verified=verified,
    )


def verify_certificate(g: MarkedCover, h: MarkedCover, cert: PathCertificate) -> bool:
    """Re-replay the certificate word on ``g`` and compare features with ``h``.

    Trusts nothing recorded in the certificate besides the word itself;
    returns False instead of raising when the replay breaks down.
    """
    try:
        final = replay(g, cert.word)
        replayed = classify(derive_portrait(final))
        target = classify(derive_portrait(h))
    except PortraitError:
        return False
    return canonical_encoding(replayed) == canonical_encoding(target)
