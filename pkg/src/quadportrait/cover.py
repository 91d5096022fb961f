"""Combinatorial model of a marked quadratic branched cover.

A marked cover is a finite set of named points, a self-map of that set, and
an ordered pair of distinct critical points.  The local degree at a point is
implied rather than stored: an edge out of a critical point carries label 2,
every other edge carries label 1.

The induced *portrait* is the functional digraph on the forward orbits of
the critical pair.  Marked points that lie on neither critical orbit are
carried along by the cover but are invisible to the portrait, and the
quadratic validity rule (incoming label sum at most 2) is evaluated over
portrait vertices only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_MINTED_RE = re.compile(r"d([0-9]+)\Z")


class PortraitError(Exception):
    """Base class for every error raised by this package."""


class UnknownPointError(PortraitError):
    """A named point does not exist in the cover."""


class MoveError(PortraitError):
    """A rewriting move or mint was requested whose precondition fails."""


class InvalidCoverError(PortraitError):
    """A cover violates the quadratic portrait rules."""

    def __init__(self, report: "ValidationReport"):
        super().__init__(
            "invalid cover: "
            + "; ".join(f"{v.rule} at {','.join(v.points)}" for v in report.violations)
        )
        self.report = report


@dataclass(frozen=True)
class Violation:
    """One violated validity rule together with the offending point(s)."""

    rule: str
    points: tuple[str, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class OrbitProfile:
    """Rho-shape decomposition of one forward orbit.

    ``tail_length`` counts the strictly pre-periodic points on the orbit,
    including the queried point itself when it is not periodic.  Iterating
    the map ``tail_length`` times lands on ``first_periodic``, and
    ``cycle_length`` further iterations return to it.
    """

    tail_length: int
    cycle_length: int
    first_periodic: str


@dataclass(frozen=True)
class MarkedCover:
    """A finite point set with a total self-map and an ordered critical pair.

    ``mapping`` sends every point to its image; images must themselves be
    points of the cover.  Instances are immutable: every operation returns a
    new cover.
    """

    mapping: Mapping[str, str]
    critical: tuple[str, str]

    def __post_init__(self) -> None:
        mapping = dict(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        object.__setattr__(self, "critical", tuple(self.critical))
        if len(self.critical) != 2:
            raise ValueError("critical must be an ordered pair of points")
        c1, c2 = self.critical
        if c1 == c2:
            raise ValueError("critical points must be distinct")
        for name in mapping:
            if not _NAME_RE.match(name):
                raise ValueError(f"illegal point name {name!r}")
        for name, image in mapping.items():
            if image not in mapping:
                raise ValueError(f"image {image!r} of {name!r} is not a point")
        for c in self.critical:
            if c not in mapping:
                raise ValueError(f"critical point {c!r} is not a point")

    @property
    def points(self) -> frozenset[str]:
        return frozenset(self.mapping)

    @property
    def c1(self) -> str:
        return self.critical[0]

    @property
    def c2(self) -> str:
        return self.critical[1]

    def is_critical(self, p: str) -> bool:
        return p in self.critical

    def label(self, p: str) -> int:
        """Implied local degree at ``p``: 2 at a critical point, else 1."""
        return 2 if p in self.critical else 1

    def image(self, p: str) -> str:
        try:
            return self.mapping[p]
        except KeyError:
            raise UnknownPointError(f"unknown point {p!r}") from None

    def iterate(self, p: str, steps: int) -> str:
        for _ in range(steps):
            p = self.image(p)
        return p


@dataclass(frozen=True)
class Portrait:
    """The labeled functional digraph on the forward orbits of the criticals.

    ``mapping`` is the cover's self-map restricted to ``vertices``.  Edge
    labels are implied exactly as for covers.
    """

    vertices: frozenset[str]
    mapping: Mapping[str, str]
    critical: tuple[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "mapping", dict(self.mapping))
        object.__setattr__(self, "critical", tuple(self.critical))

    @property
    def c1(self) -> str:
        return self.critical[0]

    @property
    def c2(self) -> str:
        return self.critical[1]

    def is_critical(self, v: str) -> bool:
        return v in self.critical

    def label(self, v: str) -> int:
        return 2 if v in self.critical else 1

    def edges(self) -> Iterator[tuple[str, str, int]]:
        """Yield (origin, terminus, label) for every vertex, sorted by origin."""
        for v in sorted(self.vertices):
            yield v, self.mapping[v], self.label(v)

    def image(self, v: str) -> str:
        try:
            return self.mapping[v]
        except KeyError:
            raise UnknownPointError(f"unknown portrait vertex {v!r}") from None

    def iterate(self, v: str, steps: int) -> str:
        for _ in range(steps):
            v = self.image(v)
        return v

    def cycle_of(self, v: str) -> frozenset[str]:
        """The unique cycle in the component of ``v``."""
        return _cycle_points(self.mapping, v)


def _profile(mapping: Mapping[str, str], p: str) -> OrbitProfile:
    order: dict[str, int] = {}
    x = p
    while x not in order:
        order[x] = len(order)
        x = mapping[x]
    tail = order[x]
    return OrbitProfile(
        tail_length=tail, cycle_length=len(order) - tail, first_periodic=x
    )


def orbit_profile(cover: MarkedCover, p: str) -> OrbitProfile:
    """Tail length, cycle length and first periodic point of ``p``'s orbit."""
    if p not in cover.mapping:
        raise UnknownPointError(f"unknown point {p!r}")
    return _profile(cover.mapping, p)


def _cycle_points(mapping: Mapping[str, str], p: str) -> frozenset[str]:
    """The cycle reached by the forward orbit of ``p``."""
    start = _profile(mapping, p).first_periodic
    cycle = [start]
    x = mapping[start]
    while x != start:
        cycle.append(x)
        x = mapping[x]
    return frozenset(cycle)


def _orbit_vertices(mapping: Mapping[str, str], critical: tuple[str, str]) -> set[str]:
    seen: set[str] = set()
    for c in critical:
        x = c
        while x not in seen:
            seen.add(x)
            x = mapping[x]
    return seen


def label_sum_violations(
    mapping: Mapping[str, str], critical: tuple[str, str], vertices: set[str]
) -> tuple[Violation, ...]:
    """Check the incoming-label rule over an explicit vertex set.

    For each point, the labels of edges arriving from ``vertices`` must sum
    to at most 2.  Reports one violation per offending terminus.
    """
    incoming: dict[str, int] = {}
    for v in sorted(vertices):
        image = mapping[v]
        incoming[image] = incoming.get(image, 0) + (2 if v in critical else 1)
    return tuple(
        Violation("label-sum", (p,)) for p in sorted(incoming) if incoming[p] > 2
    )


def validate_cover(cover: MarkedCover) -> ValidationReport:
    """Check the quadratic compatibility rules over the portrait vertices.

    Never raises; collects violations.  Rules: the critical pair is two
    distinct points (guaranteed by construction, asserted anyway); incoming
    label sums over portrait vertices are at most 2; every portrait
    component contains a critical point (automatic, asserted anyway).
    """
    violations: list[Violation] = []
    c1, c2 = cover.critical
    if c1 == c2 or c1 not in cover.mapping or c2 not in cover.mapping:
        violations.append(Violation("critical-pair", cover.critical))
        return ValidationReport(tuple(violations))
    vertices = _orbit_vertices(cover.mapping, cover.critical)
    violations.extend(label_sum_violations(cover.mapping, cover.critical, vertices))
    critical_cycle_points = set()
    for c in cover.critical:
        critical_cycle_points |= _cycle_points(cover.mapping, c)
    for v in sorted(vertices):
        if _profile(cover.mapping, v).first_periodic not in critical_cycle_points:
            violations.append(Violation("component-critical", (v,)))
    return ValidationReport(tuple(violations))


def derive_portrait(cover: MarkedCover) -> Portrait:
    """The portrait on the critical pair and all of its forward iterates.

    Marked points outside both critical orbits are excluded from the
    portrait but remain in the cover.  Raises :class:`InvalidCoverError`
    (carrying the report) when the cover fails validation.
    """
    report = validate_cover(cover)
    if not report.passed:
        raise InvalidCoverError(report)
    vertices = _orbit_vertices(cover.mapping, cover.critical)
    return Portrait(
        vertices=frozenset(vertices),
        mapping={v: cover.mapping[v] for v in vertices},
        critical=cover.critical,
    )


def apply_swap(cover: MarkedCover, a: str, b: str) -> MarkedCover:
    """Precompose the cover with the transposition exchanging ``a`` and ``b``.

    The new map sends x to map(t(x)) where t swaps a and b, and the critical
    pair is transported through t (a swap that touches a critical point
    relocates the critical label).  Applying the same swap twice returns the
    original cover field-for-field.
    """
    if a == b:
        raise MoveError("swap operands must be distinct")
    for p in (a, b):
        if p not in cover.mapping:
            raise UnknownPointError(f"unknown point {p!r}")

    def tau(x: str) -> str:
        if x == a:
            return b
        if x == b:
            return a
        return x

    mapping = {x: cover.mapping[tau(x)] for x in cover.mapping}
    critical = (tau(cover.c1), tau(cover.c2))
    return MarkedCover(mapping=mapping, critical=critical)


def fresh_point_names(existing: frozenset[str] | set[str], count: int = 1) -> list[str]:
    """Draw ``count`` fresh names from the reserved ``d<n>`` namespace.

    Uses the smallest natural numbers whose names are not yet taken, so
    identical inputs always mint identical names.
    """
    used = set()
    for name in existing:
        m = _MINTED_RE.match(name)
        if m:
            used.add(int(m.group(1)))
    names: list[str] = []
    n = 0
    while len(names) < count:
        if n not in used:
            names.append(f"d{n}")
        n += 1
    return names


def is_minted_name(name: str) -> bool:
    """Whether ``name`` belongs to the reserved minted-point namespace."""
    return bool(_MINTED_RE.match(name))


def extend_cover(cover: MarkedCover, additions: Mapping[str, str]) -> MarkedCover:
    """Add a batch of fresh marked points with prescribed images.

    Images may refer to existing points or to other points of the same
    batch, so mutually referencing additions (including self-maps) are
    allowed.  Every added name must be unused.
    """
    for name in additions:
        if name in cover.mapping:
            raise MoveError(f"point {name!r} already exists")
        if not _NAME_RE.match(name):
            raise ValueError(f"illegal point name {name!r}")
    for name, image in additions.items():
        if image not in cover.mapping and image not in additions:
            raise UnknownPointError(f"image {image!r} of {name!r} is not a point")
    mapping = dict(cover.mapping)
    mapping.update(additions)
    return MarkedCover(mapping=mapping, critical=cover.critical)


def mint_preimage(
    cover: MarkedCover, j: int, name: str | None = None
) -> tuple[MarkedCover, str]:
    """Adjoin a fresh marked preimage of critical point ``j`` (1 or 2).

    Allowed only while the incoming label sum at that critical point over
    portrait vertices is strictly below 2, i.e. while the quadratic
    constraint leaves an unmarked preimage free.  Returns the extended cover
    and the minted name.
    """
    if j not in (1, 2):
        raise MoveError(f"critical index must be 1 or 2, got {j}")
    target = cover.critical[j - 1]
    vertices = _orbit_vertices(cover.mapping, cover.critical)
    incoming = sum(
        cover.label(v) for v in vertices if cover.mapping[v] == target
    )
    if incoming >= 2:
        raise MoveError(f"no unmarked preimage of {target!r}: label sum already {incoming}")
    if name is None:
        name = fresh_point_names(cover.points)[0]
    return extend_cover(cover, {name: target}), name
