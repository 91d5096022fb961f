"""Connect any two covers by a verified word of half-twist swaps.

Reducing both covers to the squaring-map portrait and reversing the second
word yields a path from the first cover to one carrying the second cover's
portrait.  The certificate records the whole word; verification replays it
from scratch and compares portrait features.
"""

from quadportrait import (
    MarkedCover,
    MintRecord,
    connect,
    derive_portrait,
    replay,
    serialize_certificate,
    verify_certificate,
)
from quadportrait.formats import describe_features

rabbit = MarkedCover({"A": "P", "P": "Q", "Q": "A", "B": "B"}, ("A", "B"))
airplane_like = MarkedCover(
    {"A": "P", "P": "T", "T": "B", "B": "U", "U": "T"}, ("A", "B")
)

cert = connect(rabbit, airplane_like)
print("path from the rabbit-shaped cover to a pre-periodic one")
print(f"  swaps in the word: {cert.swap_count}")
print(f"  reduced-form identification: {cert.identification}")
print(f"  arrived at: {describe_features(cert.final_features)}")
print(f"  verified:   {cert.verified}")
print()

print("word records (mints create marked points, swaps transform):")
for record in cert.word:
    if isinstance(record, MintRecord):
        print(f"  mint {record.point} -> {record.image}")
    else:
        tag = f"  [{record.tag}]" if record.tag else ""
        print(f"  swap {record.a} {record.b}{tag}")
print()

print("independent verification replays the word on the start cover:")
print("  verify_certificate:", verify_certificate(rabbit, airplane_like, cert))

final = replay(rabbit, cert.word)
print("  final marked points:", sorted(final.points))
print("  final portrait:     ", sorted(derive_portrait(final).vertices))
print()

print("certificates serialize with their initial and final covers:\n")
print(serialize_certificate(cert, rabbit))
