"""The three worked finite algebras used throughout the test corpus.

Tables are transcribed by element name; ids follow the listed order.
"""

from __future__ import annotations

from .algebra import FiniteAlgebra, validate


def _build(names, one, zero, arrow_rows, squig_rows) -> FiniteAlgebra:
    idx = {s: i for i, s in enumerate(names)}
    arrow = tuple(tuple(idx[v] for v in row.split()) for row in arrow_rows)
    squig = tuple(tuple(idx[v] for v in row.split()) for row in squig_rows)
    return validate(
        names, idx[one], arrow, squig, zero=idx[zero] if zero else None
    )


def four_element_bounded() -> FiniteAlgebra:
    """Proper bounded pseudo-BCK algebra on {1,a,b,c} with bottom a."""
    return _build(
        ("1", "a", "b", "c"),
        "1",
        "a",
        ("1 a b c", "1 1 1 1", "1 a 1 c", "1 b 1 1"),
        ("1 a b c", "1 1 1 1", "1 c 1 c", "1 c 1 1"),
    )


def six_element_involutive() -> FiniteAlgebra:
    """Involutive pseudo-BCK algebra on {1,a,b,c,d,e} with bottom e."""
    return _build(
        ("1", "a", "b", "c", "d", "e"),
        "1",
        "e",
        (
            "1 a b c d e",
            "1 1 d 1 1 d",
            "1 c 1 1 1 c",
            "1 a d 1 d a",
            "1 c b c 1 b",
            "1 1 1 1 1 1",
        ),
        (
            "1 a b c d e",
            "1 1 c 1 1 c",
            "1 d 1 1 1 d",
            "1 d b 1 d b",
            "1 a c c 1 a",
            "1 1 1 1 1 1",
        ),
    )


def six_element_smarandache() -> FiniteAlgebra:
    """Bounded pseudo-BCK algebra on {0,a,b,c,d,1} hosting the
    linearly ordered substructure {0,c,d,1}."""
    return _build(
        ("0", "a", "b", "c", "d", "1"),
        "1",
        "0",
        (
            "1 1 1 1 1 1",
            "0 1 1 1 c 1",
            "0 b 1 1 c 1",
            "0 b b 1 c 1",
            "0 b b 1 1 1",
            "0 a b c d 1",
        ),
        (
            "1 1 1 1 1 1",
            "0 1 1 1 c 1",
            "0 c 1 1 c 1",
            "0 a b 1 c 1",
            "0 a b 1 1 1",
            "0 a b c d 1",
        ),
    )


def one_element() -> FiniteAlgebra:
    return validate(("1",), 0, ((0,),), ((0,),), zero=0)


def two_chain() -> FiniteAlgebra:
    """The two-element Boolean chain 0 < 1."""
    return validate(
        ("0", "1"), 1, ((1, 1), (0, 1)), ((1, 1), (0, 1)), zero=0
    )
