"""Text formats: portrait files, trace/certificate files, and DOT export.

Portrait files are UTF-8 lines: ``#`` starts a comment, one line
``critical <id> <id>`` names the ordered critical pair, and each line
``map <id> <id>`` gives one point and its image.  Every mentioned point
must have exactly one map line.  Names from the reserved minted namespace
(``d`` followed by digits) are rejected in user portrait files.

Trace files carry a ``qpv1`` version header with a kind (``trace`` or
``certificate``), an ``initial`` cover block, a ``moves`` section of
records (``mint <id> -> <id>``, ``swap <id> <id> [tag]``,
``verify <step>``), and a ``final`` cover block.  Replaying the records
from the initial block reproduces the final block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import (
    MarkedCover,
    Portrait,
    PortraitError,
    _NAME_RE,
    is_minted_name,
)
from .connector import (
    MintRecord,
    PathCertificate,
    SwapRecord,
    TranspositionWord,
    replay,
)
from .features import (
    Contained,
    DisjointPrePeriods,
    FeatureVector,
    Intersecting,
    OneCycle,
    OnePrePeriod,
    TwoComponents,
    canonical_encoding,
)
from .reducer import ReductionTrace, StepTag

TRACE_VERSION = "qpv1"


class ParseError(PortraitError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class VerifyRecord:
    """A verification-only run of one step (no move)."""

    step: str


TraceRecord = MintRecord | SwapRecord | VerifyRecord


@dataclass(frozen=True)
class TraceDocument:
    """A parsed trace or certificate file."""

    kind: str
    initial: MarkedCover
    records: tuple[TraceRecord, ...]
    final: MarkedCover

    @property
    def word(self) -> TranspositionWord:
        return tuple(r for r in self.records if not isinstance(r, VerifyRecord))


def _stripped_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _check_name(name: str, lineno: int, allow_minted: bool) -> str:
    if not _NAME_RE.match(name):
        raise ParseError(f"illegal point name {name!r}", lineno)
    if not allow_minted and is_minted_name(name):
        raise ParseError(f"name {name!r} is reserved for minted points", lineno)
    return name


def _parse_cover_lines(
    lines: list[tuple[int, str]], allow_minted: bool
) -> MarkedCover:
    critical: tuple[str, str] | None = None
    critical_line = 0
    mapping: dict[str, str] = {}
    map_lines: dict[str, int] = {}
    for lineno, line in lines:
        tokens = line.split()
        if tokens[0] == "critical":
            if critical is not None:
                raise ParseError("duplicate critical line", lineno)
            if len(tokens) != 3:
                raise ParseError("critical line needs exactly two points", lineno)
            critical = (
                _check_name(tokens[1], lineno, allow_minted),
                _check_name(tokens[2], lineno, allow_minted),
            )
            if critical[0] == critical[1]:
                raise ParseError("critical points must be distinct", lineno)
            critical_line = lineno
        elif tokens[0] == "map":
            if len(tokens) != 3:
                raise ParseError("map line needs a point and its image", lineno)
            origin = _check_name(tokens[1], lineno, allow_minted)
            image = _check_name(tokens[2], lineno, allow_minted)
            if origin in mapping:
                raise ParseError(f"duplicate map line for {origin!r}", lineno)
            mapping[origin] = image
            map_lines[origin] = lineno
        else:
            raise ParseError(f"unknown directive {tokens[0]!r}", lineno)
    if critical is None:
        raise ParseError("missing critical line")
    for c in critical:
        if c not in mapping:
            raise ParseError(f"critical point {c!r} has no map line", critical_line)
    for origin, image in mapping.items():
        if image not in mapping:
            raise ParseError(
                f"image {image!r} of {origin!r} has no map line", map_lines[origin]
            )
    return MarkedCover(mapping=mapping, critical=critical)


def parse_portrait(text: str) -> MarkedCover:
    """Parse a user portrait file (minted names rejected)."""
    return _parse_cover_lines(_stripped_lines(text), allow_minted=False)


def serialize_portrait(cover: MarkedCover) -> str:
    """Serialize a cover; map lines are ordered lexicographically."""
    lines = [f"critical {cover.c1} {cover.c2}"]
    lines.extend(f"map {p} {cover.mapping[p]}" for p in sorted(cover.mapping))
    return "\n".join(lines) + "\n"


def export_dot(portrait: Portrait) -> str:
    """Render a portrait as a DOT digraph.

    Critical vertices get a distinguished shape; edge labels appear only
    when they equal 2.
    """
    lines = ["digraph portrait {"]
    for v in sorted(portrait.vertices):
        shape = "doublecircle" if portrait.is_critical(v) else "circle"
        lines.append(f'  "{v}" [shape={shape}];')
    for origin, terminus, label in portrait.edges():
        attr = ' [label="2"]' if label == 2 else ""
        lines.append(f'  "{origin}" -> "{terminus}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def describe_features(fv: FeatureVector) -> str:
    """A one-line human-readable rendering of a feature vector."""
    if isinstance(fv, TwoComponents):
        return (
            "two components: "
            f"(tail {fv.comp1[0]}, cycle {fv.comp1[1]}) and "
            f"(tail {fv.comp2[0]}, cycle {fv.comp2[1]})"
        )
    if isinstance(fv, OneCycle):
        return (
            f"one cycle of length {fv.cycle}: critical distances "
            f"{fv.dist12} and {fv.dist21}"
        )
    if isinstance(fv, OnePrePeriod):
        return (
            f"one pre-period: tail {fv.tail}, critical at position "
            f"{fv.position} of cycle {fv.cycle}"
        )
    if isinstance(fv, DisjointPrePeriods):
        return (
            f"disjoint pre-periods: tails {fv.tail1} and {fv.tail2}, "
            f"entry distances {fv.dist12} and {fv.dist21}"
        )
    if isinstance(fv, Intersecting):
        return (
            f"intersecting pre-periods: unique {fv.unique1} and {fv.unique2}, "
            f"shared {fv.shared}, cycle {fv.cycle}"
        )
    assert isinstance(fv, Contained)
    return (
        f"contained pre-periods: tails {fv.tail_outer} over {fv.tail_inner}, "
        f"gap {fv.gap}, cycle {fv.cycle}"
    )


def features_summary(fv: FeatureVector) -> str:
    return f"{describe_features(fv)} [{canonical_encoding(fv).hex()}]"


def _cover_block(cover: MarkedCover) -> list[str]:
    return serialize_portrait(cover).splitlines()


def _record_lines(records: tuple[TraceRecord, ...]) -> list[str]:
    lines = []
    for record in records:
        if isinstance(record, MintRecord):
            lines.append(f"mint {record.point} -> {record.image}")
        elif isinstance(record, SwapRecord):
            tag = f" {record.tag}" if record.tag else ""
            lines.append(f"swap {record.a} {record.b}{tag}")
        else:
            lines.append(f"verify {record.step}")
    return lines


def trace_records(trace: ReductionTrace) -> tuple[TraceRecord, ...]:
    """Lower trace entries to file records, verification runs included."""
    records: list[TraceRecord] = []
    for entry in trace.entries:
        if entry.move is None:
            records.append(VerifyRecord(entry.step.value))
            continue
        if entry.move.minted is not None:
            records.append(MintRecord(*entry.move.minted))
        records.append(SwapRecord(*entry.move.swap, tag=entry.move.function_tag))
    return tuple(records)


def serialize_trace(trace: ReductionTrace) -> str:
    lines = [f"{TRACE_VERSION} trace", "initial"]
    lines.extend(_cover_block(trace.initial))
    lines.append("moves")
    lines.extend(_record_lines(trace_records(trace)))
    lines.append("final")
    lines.extend(_cover_block(trace.final))
    return "\n".join(lines) + "\n"


def serialize_certificate(cert: PathCertificate, initial: MarkedCover) -> str:
    """Serialize a certificate; the final block is recomputed by replay."""
    final = replay(initial, cert.word)
    lines = [f"{TRACE_VERSION} certificate", "initial"]
    lines.extend(_cover_block(initial))
    lines.append("moves")
    lines.extend(_record_lines(tuple(cert.word)))
    lines.append("final")
    lines.extend(_cover_block(final))
    return "\n".join(lines) + "\n"


def _parse_record(lineno: int, line: str) -> TraceRecord:
    tokens = line.split()
    if tokens[0] == "mint":
        if len(tokens) != 4 or tokens[2] != "->":
            raise ParseError("mint record needs 'mint <id> -> <id>'", lineno)
        return MintRecord(
            _check_name(tokens[1], lineno, True), _check_name(tokens[3], lineno, True)
        )
    if tokens[0] == "swap":
        if len(tokens) not in (3, 4):
            raise ParseError("swap record needs 'swap <id> <id> [tag]'", lineno)
        tag = tokens[3] if len(tokens) == 4 else ""
        return SwapRecord(
            _check_name(tokens[1], lineno, True),
            _check_name(tokens[2], lineno, True),
            tag,
        )
    if tokens[0] == "verify":
        if len(tokens) != 2 or tokens[1] not in {s.value for s in StepTag}:
            raise ParseError("verify record needs a step name", lineno)
        return VerifyRecord(tokens[1])
    raise ParseError(f"unknown record {tokens[0]!r}", lineno)


def parse_trace(text: str) -> TraceDocument:
    lines = _stripped_lines(text)
    if not lines:
        raise ParseError("empty trace file")
    header_line, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2 or tokens[0] != TRACE_VERSION:
        raise ParseError(f"expected header '{TRACE_VERSION} <kind>'", header_line)
    kind = tokens[1]
    if kind not in ("trace", "certificate"):
        raise ParseError(f"unknown trace kind {kind!r}", header_line)

    sections: dict[str, list[tuple[int, str]]] = {}
    current: str | None = None
    for lineno, line in lines[1:]:
        if line in ("initial", "moves", "final"):
            if line in sections:
                raise ParseError(f"duplicate section {line!r}", lineno)
            sections[line] = []
            current = line
            continue
        if current is None:
            raise ParseError("content before the first section", lineno)
        sections[current].append((lineno, line))
    for section in ("initial", "moves", "final"):
        if section not in sections:
            raise ParseError(f"missing section {section!r}")

    initial = _parse_cover_lines(sections["initial"], allow_minted=True)
    final = _parse_cover_lines(sections["final"], allow_minted=True)
    records = tuple(_parse_record(lineno, line) for lineno, line in sections["moves"])
    return TraceDocument(kind=kind, initial=initial, records=records, final=final)
