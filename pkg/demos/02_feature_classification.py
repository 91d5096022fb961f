"""Classify portraits by their combinatorial features.

Six patterns cover every valid quadratic portrait: separate components, a
single shared cycle, one pre-period, two disjoint pre-periods, distinct
intersecting pre-periods, or one pre-period contained in the other.  The
feature vector determines the portrait up to directed-graph isomorphism,
so a canonical byte encoding of it decides isomorphism outright.
"""

from quadportrait import (
    MarkedCover,
    canonical_encoding,
    classify,
    derive_portrait,
    features_isomorphic,
)
from quadportrait.formats import describe_features

menagerie = {
    "squaring": {"A": "A", "B": "B"},
    "one shared cycle": {"A": "P", "P": "B", "B": "Q", "Q": "A"},
    "one pre-period": {"A": "P", "P": "T", "T": "B", "B": "U", "U": "T"},
    "disjoint pre-periods": {
        "A": "P", "P": "T1", "T1": "T2", "T2": "T1", "B": "Q", "Q": "T2"
    },
    "intersecting pre-periods": {
        "A": "P", "P": "M", "B": "Q", "Q": "M", "M": "T", "T": "T"
    },
    "contained pre-periods": {"A": "B", "B": "Q", "Q": "T", "T": "T"},
}

for name, mapping in menagerie.items():
    cover = MarkedCover(mapping, ("A", "B"))
    features = classify(derive_portrait(cover))
    print(f"{name:26s} {describe_features(features)}")
    print(f"{'':26s} encoding {canonical_encoding(features).hex()}")

print()
print("== Isomorphism is a feature comparison ==")
rabbit = MarkedCover({"A": "P", "P": "Q", "Q": "A", "B": "B"}, ("A", "B"))
renamed = MarkedCover({"x": "y", "y": "z", "z": "x", "w": "w"}, ("x", "w"))
basilica = MarkedCover({"A": "P", "P": "A", "B": "B"}, ("A", "B"))
print("rabbit ~ renamed rabbit:", features_isomorphic(
    derive_portrait(rabbit), derive_portrait(renamed)))
print("rabbit ~ basilica:      ", features_isomorphic(
    derive_portrait(rabbit), derive_portrait(basilica)))

print()
print("== The encoding is invariant under relabeling the critical pair ==")
cycle = MarkedCover({"A": "P", "P": "B", "B": "Q", "Q": "R", "R": "A"}, ("A", "B"))
flipped = MarkedCover(cycle.mapping, ("B", "A"))
print("stored orders differ: ", classify(derive_portrait(cycle)) !=
      classify(derive_portrait(flipped)))
print("encodings agree:      ", canonical_encoding(classify(derive_portrait(cycle)))
      == canonical_encoding(classify(derive_portrait(flipped))))
