"""The three rewriting moves: split, make periodic, decrease a cycle.

Every move is a single half-twist swap of two marked points, sometimes
preceded by minting a fresh preimage of a critical point.  Swapping a
critical point relocates the critical label, which two boundary cases
below rely on.
"""

from quadportrait import (
    MarkedCover,
    classify,
    decrease_cycle,
    derive_portrait,
    make_periodic,
    split,
)
from quadportrait.formats import describe_features


def show(title, before, outcome):
    mint = f"mint {outcome.move.minted[0]}->{outcome.move.minted[1]}, " if outcome.move.minted else ""
    swap = f"swap {outcome.move.swap[0]}<->{outcome.move.swap[1]}"
    print(title)
    print(f"  before: {describe_features(classify(derive_portrait(before)))}")
    print(f"  move:   [{outcome.move.function_tag}] {mint}{swap}")
    print(f"  after:  {describe_features(classify(outcome.portrait))}")
    print()


print("== Splitting a one-component portrait ==\n")

cycle4 = MarkedCover({"A": "P", "P": "B", "B": "Q", "Q": "A"}, ("A", "B"))
show("shared cycle, distant critical points:", cycle4, split(cycle4))

adjacent = MarkedCover({"A": "B", "B": "A"}, ("A", "B"))
show("shared cycle, adjacent critical points (the swap touches them):",
     adjacent, split(adjacent))

one_pre = MarkedCover(
    {"A": "P", "P": "T", "T": "B", "B": "U", "U": "T"}, ("A", "B")
)
show("one pre-period (a preimage is minted):", one_pre, split(one_pre))

contained = MarkedCover({"A": "X", "X": "B", "B": "Q", "Q": "T", "T": "T"}, ("A", "B"))
show("contained pre-periods:", contained, split(contained))

boundary = MarkedCover({"A": "B", "B": "Q", "Q": "T", "T": "T"}, ("A", "B"))
show("contained pre-periods at gap 1 (swap the critical pair instead):",
     boundary, split(boundary))

print("== Making a pre-periodic critical point periodic ==\n")
two_comp = MarkedCover({"A": "P", "P": "T", "T": "T", "B": "B"}, ("A", "B"))
show("the tail closes into the cycle:", two_comp, make_periodic(two_comp, 1))

print("== Decreasing a cycle ==\n")
rabbit = MarkedCover({"A": "P", "P": "Q", "Q": "A", "B": "B"}, ("A", "B"))
outcome = decrease_cycle(rabbit, 1)
show("a point drops out of the portrait:", rabbit, outcome)
print(f"  dropped point still marked: {'Q' in outcome.cover.points}, "
      f"maps to {outcome.cover.mapping['Q']}")
print()

basilica = MarkedCover({"A": "P", "P": "A", "B": "B"}, ("A", "B"))
outcome = decrease_cycle(basilica, 1)
show("cycle length two: the critical label migrates:", basilica, outcome)
print(f"  critical pair afterwards: {outcome.cover.critical}")
