"""Reduce any valid cover to the squaring-map portrait, with a full trace.

The driver runs three steps: one split if needed, then tail closures, then
cycle decreases.  Verification-only runs appear in the trace as moveless
entries, so the run counters can be checked exactly: step 1 runs once,
step 2 at most three times, step 3 exactly k1 + k2 - 1 times for the two
cycle lengths seen on entry to step 3.
"""

from quadportrait import MarkedCover, reduce, serialize_trace, verify_step_bounds
from quadportrait.formats import describe_features

cover = MarkedCover(
    {"A": "P", "P": "M", "B": "Q", "Q": "M", "M": "T", "T": "T"}, ("A", "B")
)
print("reducing a cover with intersecting pre-periods\n")

trace = reduce(cover)
for entry in trace.entries:
    if entry.move is None:
        action = "verify"
    else:
        mint = (
            f"mint {entry.move.minted[0]}->{entry.move.minted[1]}, "
            if entry.move.minted
            else ""
        )
        action = f"[{entry.move.function_tag}] {mint}swap {entry.move.swap[0]}<->{entry.move.swap[1]}"
    print(f"{entry.step.value}: {action}")
    print(f"         {describe_features(entry.features)}")

print()
bounds = verify_step_bounds(trace)
print(f"runs: step1={bounds.step1_runs} step2={bounds.step2_runs} "
      f"step3={bounds.step3_runs}, expected step3={bounds.step3_expected}")
print(f"counters check out: {bounds.passed}")
print(f"points minted along the way: {trace.minted_count}")
print(f"marked set grew from {len(trace.initial.points)} to {len(trace.final.points)}")

print()
print("the whole trace serializes to a replayable file:\n")
print(serialize_trace(trace))
