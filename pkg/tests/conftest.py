import pytest

from quadportrait import MarkedCover, enumerate_portraits


def cov(text: str) -> MarkedCover:
    """Build a cover from compact notation: 'A*>B B*>A D>A'.

    Each token is origin>image; a '*' marks a critical point (on any
    occurrence), and the critical order is the order of first starred
    appearance.
    """
    mapping: dict[str, str] = {}
    critical: list[str] = []

    def handle(name: str) -> str:
        if name.endswith("*"):
            name = name[:-1]
            if name not in critical:
                critical.append(name)
        return name

    for token in text.split():
        origin, image = token.split(">")
        origin = handle(origin)
        mapping[origin] = handle(image)
    assert len(critical) == 2, f"need exactly two starred points in {text!r}"
    return MarkedCover(mapping=mapping, critical=(critical[0], critical[1]))


SQUARING = "A*>A B*>B"
TWO_CYCLE = "A*>B* B>A"
BASILICA = "A*>P P>A B*>B"
RABBIT = "A*>P P>Q Q>A B*>B"


def applicable_outcomes(cover):
    """Every move outcome whose precondition holds for ``cover``."""
    from quadportrait import TwoComponents, classify, derive_portrait
    from quadportrait import decrease_cycle, make_periodic, split

    features = classify(derive_portrait(cover))
    if not isinstance(features, TwoComponents):
        return [split(cover)]
    outcomes = []
    tails = (features.comp1[0], features.comp2[0])
    cycles = (features.comp1[1], features.comp2[1])
    for j in (1, 2):
        if tails[j - 1] > 0:
            outcomes.append(make_periodic(cover, j))
        elif tails == (0, 0) and cycles[j - 1] > 1:
            outcomes.append(decrease_cycle(cover, j))
    return outcomes


@pytest.fixture(scope="session")
def classes5():
    return enumerate_portraits(5)


@pytest.fixture(scope="session")
def classes6():
    return enumerate_portraits(6)


@pytest.fixture(scope="session")
def classes7():
    return enumerate_portraits(7)
