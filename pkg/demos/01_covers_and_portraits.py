"""Model marked quadratic covers and derive their portraits.

A cover is a finite self-map of named points with an ordered pair of
critical points.  Its portrait is the functional digraph on the forward
orbits of the critical pair; edges out of a critical point carry label 2.
"""

from quadportrait import (
    MarkedCover,
    derive_portrait,
    export_dot,
    orbit_profile,
    validate_cover,
)

print("== The squaring-map cover: two fixed critical points ==")
squaring = MarkedCover({"zero": "zero", "inf": "inf"}, ("zero", "inf"))
print("validates:", validate_cover(squaring).passed)
print(export_dot(derive_portrait(squaring)))

print("== A rabbit-shaped cover: critical 3-cycle plus a fixed critical point ==")
rabbit = MarkedCover(
    {"A": "P", "P": "Q", "Q": "A", "B": "B"}, ("A", "B")
)
profile = orbit_profile(rabbit, "A")
print(f"orbit of A: tail {profile.tail_length}, cycle {profile.cycle_length}, "
      f"enters at {profile.first_periodic}")

print()
print("== Marked points off the critical orbits stay out of the portrait ==")
with_stray = MarkedCover(
    {"A": "P", "P": "Q", "Q": "A", "B": "B", "stray": "P"}, ("A", "B")
)
portrait = derive_portrait(with_stray)
print("marked points: ", sorted(with_stray.points))
print("portrait vertices:", sorted(portrait.vertices))

print()
print("== The quadratic rule: incoming labels sum to at most 2 ==")
# A critical point with a tail of length one would overload its cycle
# entry point: label 2 from the critical point plus 1 from the cycle.
too_short = MarkedCover({"A": "T", "T": "T", "B": "B"}, ("A", "B"))
report = validate_cover(too_short)
print("validates:", report.passed)
for violation in report.violations:
    print(f"  violated {violation.rule} at {', '.join(violation.points)}")
