"""Seeded generation of certified algebras for the property suites.

Random tables essentially never satisfy the axioms, so instances are drawn
from constructions that are certified by re-validation: Goedel and
Lukasiewicz chains, direct products, relative-pseudo-complement algebras
of small distributive lattices, the three worked noncommutative algebras,
and random relabelings, subalgebras and quotients of all of these.  Every
instance goes back through :func:`psbck.algebra.validate`, so nothing
uncertified can leak into a suite.
"""

from __future__ import annotations

import random
from itertools import product

from .algebra import FiniteAlgebra, validate
from .deduction import congruence_from, enumerate_ds_n
from . import goldens


def goedel_chain(k: int) -> FiniteAlgebra:
    """k-element chain with x -> y = 1 if x <= y else y."""
    names = tuple(f"g{i}" for i in range(k))
    top = k - 1
    table = tuple(
        tuple(top if x <= y else y for y in range(k)) for x in range(k)
    )
    return validate(names, top, table, table, zero=0)


def lukasiewicz_chain(k: int) -> FiniteAlgebra:
    """k-element chain with x -> y = min(top, top - x + y)."""
    names = tuple(f"l{i}" for i in range(k))
    top = k - 1
    table = tuple(
        tuple(min(top, top - x + y) for y in range(k)) for x in range(k)
    )
    return validate(names, top, table, table, zero=0)


def direct_product(A: FiniteAlgebra, B: FiniteAlgebra) -> FiniteAlgebra:
    pairs = list(product(A.elements, B.elements))
    pos = {p: i for i, p in enumerate(pairs)}
    names = tuple(f"{A.name(x)}.{B.name(y)}" for x, y in pairs)
    arrow = tuple(
        tuple(pos[(A.arrow[x1][x2], B.arrow[y1][y2])] for x2, y2 in pairs)
        for x1, y1 in pairs
    )
    squig = tuple(
        tuple(pos[(A.squig[x1][x2], B.squig[y1][y2])] for x2, y2 in pairs)
        for x1, y1 in pairs
    )
    zero = None
    if A.zero is not None and B.zero is not None:
        zero = pos[(A.zero, B.zero)]
    return validate(names, pos[(A.one, B.one)], arrow, squig, zero=zero)


def heyting_from_order(leq_rows: tuple[tuple[int, ...], ...],
                       names=None) -> FiniteAlgebra:
    """Relative pseudo-complement algebra of a finite lattice order.

    x -> y is the greatest z with z meet x <= y; both implications agree.
    """
    n = len(leq_rows)
    elems = range(n)

    def meet(x, y):
        lower = [z for z in elems if leq_rows[z][x] and leq_rows[z][y]]
        for m in lower:
            if all(leq_rows[c][m] for c in lower):
                return m
        raise ValueError("order is not a meet-semilattice")

    tops = [x for x in elems if all(leq_rows[y][x] for y in elems)]
    bots = [x for x in elems if all(leq_rows[x][y] for y in elems)]
    if len(tops) != 1 or len(bots) != 1:
        raise ValueError("order needs unique top and bottom")

    def imp(x, y):
        cand = [z for z in elems if leq_rows[meet(z, x)][y]]
        for m in cand:
            if all(leq_rows[c][m] for c in cand):
                return m
        raise ValueError("relative pseudo-complement missing")

    table = tuple(tuple(imp(x, y) for y in elems) for x in elems)
    names = names or tuple(f"h{i}" for i in range(n))
    return validate(names, tops[0], table, table, zero=bots[0])


def nonlinear_heyting() -> FiniteAlgebra:
    """Five elements 0 < a,b < c < 1 (a,b incomparable): not prelinear."""
    le = [
        [1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1],
        [0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1],
    ]
    rows = tuple(tuple(bool(v) for v in r) for r in le)
    return heyting_from_order(rows, names=("0", "a", "b", "c", "1"))


def relabel(A: FiniteAlgebra, perm: list[int], prefix: str = "x") -> FiniteAlgebra:
    """Isomorphic copy with element id i moved to perm[i]."""
    n = A.n
    names = [""] * n
    for i in range(n):
        names[perm[i]] = f"{prefix}{A.name(i)}"
    arrow = [[0] * n for _ in range(n)]
    squig = [[0] * n for _ in range(n)]
    for x, y in product(range(n), repeat=2):
        arrow[perm[x]][perm[y]] = perm[A.arrow[x][y]]
        squig[perm[x]][perm[y]] = perm[A.squig[x][y]]
    zero = perm[A.zero] if A.zero is not None else None
    return validate(
        tuple(names),
        perm[A.one],
        tuple(tuple(r) for r in arrow),
        tuple(tuple(r) for r in squig),
        zero=zero,
    )


_SEEDS = None


def _seed_pool():
    global _SEEDS
    if _SEEDS is None:
        _SEEDS = [
            goldens.one_element(),
            goldens.two_chain(),
            goldens.four_element_bounded(),
            goldens.six_element_involutive(),
            goldens.six_element_smarandache(),
            goedel_chain(3),
            goedel_chain(4),
            goedel_chain(5),
            goedel_chain(6),
            lukasiewicz_chain(3),
            lukasiewicz_chain(4),
            lukasiewicz_chain(5),
            lukasiewicz_chain(6),
            direct_product(goedel_chain(2), goedel_chain(3)),
            direct_product(goedel_chain(2), lukasiewicz_chain(3)),
            direct_product(lukasiewicz_chain(2), lukasiewicz_chain(3)),
            direct_product(goedel_chain(2), goedel_chain(2)),
            nonlinear_heyting(),
        ]
    return _SEEDS


def random_algebra(rng: random.Random, max_size: int = 6) -> FiniteAlgebra:
    """One certified algebra, size <= max_size, from a random recipe."""
    pool = [a for a in _seed_pool() if a.n <= max_size]
    base = rng.choice(pool)
    move = rng.random()
    if move < 0.25 and base.n > 1:
        # quotient by a random normal deductive system
        quots = enumerate_ds_n(base)
        H = rng.choice(quots)
        base = congruence_from(base, H).algebra
    if base.n > 1 and rng.random() < 0.7:
        perm = list(range(base.n))
        rng.shuffle(perm)
        base = relabel(base, perm, prefix=f"p{rng.randrange(1000)}_")
    return base


def random_batch(seed: int, count: int, max_size: int = 6) -> list[FiniteAlgebra]:
    rng = random.Random(seed)
    return [random_algebra(rng, max_size) for _ in range(count)]
