"""Ground-truth machinery independent of the feature classification.

* :func:`brute_force_isomorphism` decides portrait isomorphism by direct
  propagation of a critical-point pairing along edges, with no reference to
  features;
* :func:`enumerate_portraits` generates every isomorphism class of valid
  quadratic portraits up to a vertex bound, by filtering raw self-maps and
  deduplicating with the brute-force check;
* :func:`random_cover` rejection-samples valid covers deterministically;
* :func:`cover_from_features` realises a feature vector as a concrete
  cover, the constructive converse of classification.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cover import MarkedCover, Portrait, derive_portrait, validate_cover
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


@dataclass(frozen=True)
class IsoWitness:
    """An explicit vertex bijection realising a portrait isomorphism."""

    bijection: tuple[tuple[str, str], ...]

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.bijection)


def _propagate(
    p: Portrait, q: Portrait, q_critical: tuple[str, str]
) -> dict[str, str] | None:
    """Grow a candidate isomorphism forward from one critical pairing.

    Every vertex has exactly one outgoing edge and is reachable from a
    critical point, so the pairing determines the whole map; it remains to
    check consistency, bijectivity and label preservation.
    """
    eta: dict[str, str] = {}
    stack = list(zip(p.critical, q_critical))
    while stack:
        v, w = stack.pop()
        if v in eta:
            if eta[v] != w:
                return None
            continue
        eta[v] = w
        stack.append((p.mapping[v], q.mapping[w]))
    if len(eta) != len(p.vertices):
        return None
    if set(eta.values()) != set(q.vertices):
        return None
    for v, w in eta.items():
        if p.label(v) != q.label(w):
            return None
    return eta


def brute_force_isomorphism(p: Portrait, q: Portrait) -> IsoWitness | None:
    """Search for a label-preserving digraph isomorphism directly.

    Tries both pairings of the critical points and propagates each along
    the edges; returns the first witness found, or None.
    """
    if len(p.vertices) != len(q.vertices):
        return None
    for q_critical in (q.critical, (q.c2, q.c1)):
        eta = _propagate(p, q, q_critical)
        if eta is not None:
            return IsoWitness(bijection=tuple(sorted(eta.items())))
    return None


def _map_is_valid(images: tuple[int, ...]) -> bool:
    """Fast validity filter for a raw self-map with critical points 0, 1.

    Requires every vertex to lie on a critical orbit and incoming label
    sums of at most 2 (a critical origin contributes 2).
    """
    m = len(images)
    seen: set[int] = set()
    for c in (0, 1):
        x = c
        while x not in seen:
            seen.add(x)
            x = images[x]
    if len(seen) != m:
        return False
    incoming = [0] * m
    for v in range(m):
        incoming[images[v]] += 2 if v < 2 else 1
        if incoming[images[v]] > 2:
            return False
    return True


def _chunk_valid_maps(args: tuple[int, int]) -> list[tuple[int, ...]]:
    m, first = args
    out = []
    for rest in itertools.product(range(m), repeat=m - 1):
        images = (first,) + rest
        if _map_is_valid(images):
            out.append(images)
    return out


def _valid_maps(m: int, workers: int) -> list[tuple[int, ...]]:
    if workers <= 1 or m < 4:
        return [t for t in itertools.product(range(m), repeat=m) if _map_is_valid(t)]
    chunks = [(m, first) for first in range(m)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_chunk_valid_maps, chunks))
    return [t for chunk in results for t in chunk]


def _cover_from_map(images: tuple[int, ...]) -> MarkedCover:
    mapping = {f"v{i}": f"v{images[i]}" for i in range(len(images))}
    return MarkedCover(mapping=mapping, critical=("v0", "v1"))


def _invariant_key(portrait: Portrait) -> tuple:
    """A cheap isomorphism-invariant bucket key (not feature-based)."""
    incoming = {v: 0 for v in portrait.vertices}
    for v in portrait.vertices:
        incoming[portrait.mapping[v]] += portrait.label(v)
    cycles = {portrait.cycle_of(portrait.c1), portrait.cycle_of(portrait.c2)}
    return (
        len(portrait.vertices),
        tuple(sorted(incoming.values())),
        tuple(sorted(len(c) for c in cycles)),
    )


def _sort_key(cover: MarkedCover) -> tuple:
    return (len(cover.points), tuple(sorted(cover.mapping.items())), cover.critical)


def enumerate_portraits(n: int, workers: int = 1) -> list[MarkedCover]:
    """All isomorphism classes of valid portraits on at most ``n`` vertices.

    Generates every self-map on a labeled vertex set with a designated
    critical pair such that all vertices lie on a critical orbit and the
    cover validates, then deduplicates with the brute-force isomorphism
    check.  Output order is deterministic (and independent of ``workers``):
    lexicographic on a canonical serialization, smallest classes first.
    """
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    reps: list[tuple[MarkedCover, Portrait]] = []
    buckets: dict[tuple, list[int]] = {}
    for m in range(2, n + 1):
        for images in _valid_maps(m, workers):
            cover = _cover_from_map(images)
            portrait = derive_portrait(cover)
            key = _invariant_key(portrait)
            known = buckets.setdefault(key, [])
            if any(
                brute_force_isomorphism(portrait, reps[i][1]) is not None
                for i in known
            ):
                continue
            known.append(len(reps))
            reps.append((cover, portrait))
    covers = [cover for cover, _ in reps]
    covers.sort(key=_sort_key)
    return covers


def random_cover(n: int, seed: int) -> MarkedCover:
    """A deterministic pseudo-random valid cover on at most ``n`` points.

    Rejection-samples self-maps until validation passes; the same seed
    always yields the identical cover.  The sampled cover may carry marked
    points outside the portrait.
    """
    if n < 2:
        raise ValueError(f"need at least 2 points, got {n}")
    rng = random.Random(seed)
    while True:
        m = rng.randint(2, n)
        names = [f"p{i}" for i in range(m)]
        mapping = {name: rng.choice(names) for name in names}
        cover = MarkedCover(mapping=mapping, critical=(names[0], names[1]))
        if validate_cover(cover).passed:
            return cover


def _rho(prefix: str, tail: int, cycle: int) -> dict[str, str]:
    """A tail of ``tail`` points feeding a cycle of ``cycle`` points."""
    size = tail + cycle
    mapping = {}
    for i in range(size):
        image = i + 1
        if image == size:
            image = tail
        mapping[f"{prefix}{i}"] = f"{prefix}{image}"
    return mapping


def cover_from_features(fv: FeatureVector) -> MarkedCover:
    """A canonical cover whose portrait classifies to ``fv``.

    Raises ValueError when the parameters cannot occur in a valid quadratic
    portrait (for example a pre-period of length 1).
    """

    def check(condition: bool, why: str) -> None:
        if not condition:
            raise ValueError(f"unrealisable features: {why}")

    if isinstance(fv, TwoComponents):
        for tail, cycle in (fv.comp1, fv.comp2):
            check(tail == 0 or tail >= 2, "pre-period length must be 0 or at least 2")
            check(cycle >= 1, "cycle length must be positive")
        mapping = _rho("a", *fv.comp1) | _rho("b", *fv.comp2)
        cover = MarkedCover(mapping=mapping, critical=("a0", "b0"))
    elif isinstance(fv, OneCycle):
        check(fv.dist12 >= 1 and fv.dist21 >= 1, "critical points must be distinct")
        mapping = _rho("x", 0, fv.cycle)
        cover = MarkedCover(mapping=mapping, critical=("x0", f"x{fv.dist12}"))
    elif isinstance(fv, OnePrePeriod):
        check(fv.tail >= 2, "pre-period length must be at least 2")
        check(fv.position >= 0, "cycle position must be nonnegative")
        check(fv.remainder >= 2, "the periodic critical point needs a free preimage")
        mapping = _rho("x", fv.tail, fv.cycle)
        cover = MarkedCover(
            mapping=mapping, critical=("x0", f"x{fv.tail + fv.position}")
        )
    elif isinstance(fv, DisjointPrePeriods):
        check(fv.tail1 >= 2 and fv.tail2 >= 2, "pre-period lengths must be at least 2")
        check(fv.dist12 >= 1 and fv.dist21 >= 1, "entry points must be distinct")
        mapping = _rho("c", 0, fv.cycle)
        for prefix, tail, entry in (
            ("a", fv.tail1, 0),
            ("b", fv.tail2, fv.dist12),
        ):
            for i in range(tail):
                mapping[f"{prefix}{i}"] = (
                    f"{prefix}{i + 1}" if i + 1 < tail else f"c{entry}"
                )
        cover = MarkedCover(mapping=mapping, critical=("a0", "b0"))
    elif isinstance(fv, Intersecting):
        check(fv.unique1 >= 2 and fv.unique2 >= 2, "unique parts must be at least 2")
        check(fv.shared >= 1, "shared part must be nonempty")
        check(fv.cycle >= 1, "cycle length must be positive")
        mapping = _rho("s", fv.shared, fv.cycle)
        for prefix, unique in (("a", fv.unique1), ("b", fv.unique2)):
            for i in range(unique):
                mapping[f"{prefix}{i}"] = (
                    f"{prefix}{i + 1}" if i + 1 < unique else "s0"
                )
        cover = MarkedCover(mapping=mapping, critical=("a0", "b0"))
    else:
        assert isinstance(fv, Contained)
        check(fv.tail_inner >= 2, "inner pre-period length must be at least 2")
        check(fv.gap >= 1, "the outer critical point must precede the inner one")
        check(fv.tail_outer == fv.tail_inner + fv.gap, "tail lengths must differ by the gap")
        check(fv.cycle >= 1, "cycle length must be positive")
        mapping = _rho("x", fv.tail_outer, fv.cycle)
        cover = MarkedCover(mapping=mapping, critical=("x0", f"x{fv.gap}"))

    portrait = derive_portrait(cover)  # raises when parameters are invalid
    realised = classify(portrait)
    if realised != fv:
        raise ValueError(f"unrealisable features: built {realised}, wanted {fv}")
    return cover
