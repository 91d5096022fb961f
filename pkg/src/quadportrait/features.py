"""Feature classification of quadratic portraits.

A portrait of a marked quadratic cover is determined up to directed-graph
isomorphism by a small vector of combinatorial features: the number of
components, the pre-period pattern, and a handful of path lengths.  This
module computes that vector, and a canonical byte encoding of it that is
equal for two portraits exactly when they are isomorphic.

Encoding layout (stable across releases): one tag byte, then each length as
a big-endian 32-bit unsigned integer, minimised over the admissible
relabelings of the critical pair.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Union

from .cover import Portrait, _profile


@dataclass(frozen=True)
class TwoComponents:
    """Each critical point sits in its own component.

    ``comp1``/``comp2`` are the (tail length, cycle length) profiles of the
    first and second critical point, in the cover's stored order.
    """

    comp1: tuple[int, int]
    comp2: tuple[int, int]

    tag = 1

    def lengths(self) -> tuple[int, ...]:
        return (*self.comp1, *self.comp2)

    def labelings(self) -> tuple["FeatureVector", ...]:
        return (self, TwoComponents(self.comp2, self.comp1))


@dataclass(frozen=True)
class OneCycle:
    """Both critical points are periodic on a single shared cycle.

    ``dist12`` is the distance from the first critical point forward to the
    second, ``dist21`` the distance back; their sum is the cycle length.
    """

    dist12: int
    dist21: int

    tag = 2

    @property
    def cycle(self) -> int:
        return self.dist12 + self.dist21

    def lengths(self) -> tuple[int, ...]:
        return (self.dist12, self.dist21)

    def labelings(self) -> tuple["FeatureVector", ...]:
        return (self, OneCycle(self.dist21, self.dist12))


@dataclass(frozen=True)
class OnePrePeriod:
    """One critical point is strictly pre-periodic, the other periodic.

    ``tail`` is the pre-period length of the pre-periodic critical point
    (at least 2 in a valid portrait).  ``position`` is the distance around
    the cycle from the orbit's entry point to the periodic critical point
    (0 when the entry point is that critical point), and ``remainder``
    completes the cycle, so cycle length = position + remainder.
    """

    tail: int
    position: int
    remainder: int

    tag = 3

    @property
    def cycle(self) -> int:
        return self.position + self.remainder

    def lengths(self) -> tuple[int, ...]:
        return (self.tail, self.position, self.remainder)

    def labelings(self) -> tuple["FeatureVector", ...]:
        return (self,)


@dataclass(frozen=True)
class DisjointPrePeriods:
    """Both critical points pre-periodic with disjoint pre-periods.

    ``tail1``/``tail2`` are the pre-period lengths in stored order;
    ``dist12`` is the distance around the cycle from the entry point of the
    first pre-period to the entry point of the second, ``dist21`` the
    distance back.
    """

    tail1: int
    tail2: int
    dist12: int
    dist21: int

    tag = 4

    @property
    def cycle(self) -> int:
        return self.dist12 + self.dist21

    def lengths(self) -> tuple[int, ...]:
        return (self.tail1, self.tail2, self.dist12, self.dist21)

    def labelings(self) -> tuple["FeatureVector", ...]:
        return (self, DisjointPrePeriods(self.tail2, self.tail1, self.dist21, self.dist12))


@dataclass(frozen=True)
class Intersecting:
    """Both pre-periods distinct and intersecting.

    ``unique1``/``unique2`` count the points each pre-period does not share
    with the other (at least 2 each in a valid portrait); ``shared`` counts
    the common final stretch; ``cycle`` is the cycle length.
    """

    unique1: int
    unique2: int
    shared: int
    cycle: int

    tag = 5

    def lengths(self) -> tuple[int, ...]:
        return (self.unique1, self.unique2, self.shared, self.cycle)

    def labelings(self) -> tuple["FeatureVector", ...]:
        return (self, Intersecting(self.unique2, self.unique1, self.shared, self.cycle))


@dataclass(frozen=True)
class Contained:
    """One pre-period contained in the other.

    The outer critical point reaches the inner one after ``gap`` steps, so
    ``tail_outer`` = ``tail_inner`` + ``gap``.  ``cycle`` is the cycle
    length of the shared component.
    """

    tail_outer: int
    tail_inner: int
    gap: int
    cycle: int

    tag = 6

    def lengths(self) -> tuple[int, ...]:
        return (self.tail_outer, self.tail_inner, self.gap, self.cycle)

    def labelings(self) -> tuple["FeatureVector", ...]:
        return (self,)


FeatureVector = Union[
    TwoComponents, OneCycle, OnePrePeriod, DisjointPrePeriods, Intersecting, Contained
]


def _distance(portrait: Portrait, start: str, end: str) -> int:
    steps = 0
    x = start
    while x != end:
        x = portrait.image(x)
        steps += 1
        if steps > len(portrait.vertices):
            raise ValueError(f"no directed path from {start!r} to {end!r}")
    return steps


def _tail_points(portrait: Portrait, c: str) -> list[str]:
    """The strictly pre-periodic points on the orbit of ``c``, in order."""
    profile = _profile(portrait.mapping, c)
    points = []
    x = c
    for _ in range(profile.tail_length):
        points.append(x)
        x = portrait.image(x)
    return points


def classify(portrait: Portrait) -> FeatureVector:
    """Compute the feature vector of a valid quadratic portrait.

    Where the pattern is symmetric in the two critical points, the lengths
    follow the cover's stored critical order; where the pattern forces the
    roles apart (one pre-periodic critical point, or one pre-period inside
    the other), the roles are taken from the structure regardless of stored
    order.  Use :func:`canonical_encoding` for a fully order-free value.
    """
    c1, c2 = portrait.critical
    prof1 = _profile(portrait.mapping, c1)
    prof2 = _profile(portrait.mapping, c2)
    cycle1 = portrait.cycle_of(c1)
    if prof2.first_periodic not in cycle1:
        return TwoComponents(
            (prof1.tail_length, prof1.cycle_length),
            (prof2.tail_length, prof2.cycle_length),
        )

    if prof1.tail_length == 0 and prof2.tail_length == 0:
        return OneCycle(_distance(portrait, c1, c2), _distance(portrait, c2, c1))

    if prof1.tail_length == 0 or prof2.tail_length == 0:
        pre, per = (c1, c2) if prof1.tail_length > 0 else (c2, c1)
        pre_prof = prof1 if pre == c1 else prof2
        position = _distance(portrait, pre_prof.first_periodic, per)
        return OnePrePeriod(
            tail=pre_prof.tail_length,
            position=position,
            remainder=pre_prof.cycle_length - position,
        )

    tail1 = _tail_points(portrait, c1)
    tail2 = _tail_points(portrait, c2)
    if c2 in tail1:
        return Contained(
            tail_outer=len(tail1),
            tail_inner=len(tail2),
            gap=tail1.index(c2),
            cycle=prof1.cycle_length,
        )
    if c1 in tail2:
        return Contained(
            tail_outer=len(tail2),
            tail_inner=len(tail1),
            gap=tail2.index(c1),
            cycle=prof2.cycle_length,
        )
    shared_set = set(tail1) & set(tail2)
    if shared_set:
        unique1 = next(i for i, x in enumerate(tail1) if x in shared_set)
        return Intersecting(
            unique1=unique1,
            unique2=len(tail2) - (len(tail1) - unique1),
            shared=len(tail1) - unique1,
            cycle=prof1.cycle_length,
        )
    return DisjointPrePeriods(
        tail1=len(tail1),
        tail2=len(tail2),
        dist12=_distance(portrait, prof1.first_periodic, prof2.first_periodic),
        dist21=_distance(portrait, prof2.first_periodic, prof1.first_periodic),
    )


def _encode(fv: FeatureVector) -> bytes:
    return bytes([fv.tag]) + b"".join(struct.pack(">I", x) for x in fv.lengths())


def canonical_encoding(fv: FeatureVector) -> bytes:
    """A total-order-comparable byte string, identical for two feature
    vectors exactly when their portraits are isomorphic.

    Realised as the lexicographic minimum of the fixed serialization over
    the admissible relabelings of the critical pair (at most two).
    """
    return min(_encode(v) for v in fv.labelings())


def features_isomorphic(p: Portrait, q: Portrait) -> bool:
    """Whether two valid portraits are isomorphic, decided by features."""
    return canonical_encoding(classify(p)) == canonical_encoding(classify(q))
