"""Finite pseudo-BCK algebras given as operation tables.

An algebra is a carrier of n named elements with two implication tables
(``arrow`` for -> and ``squig`` for ~>), a top constant ``one`` and an
optional bottom ``zero``.  The order is always derived from ``arrow``:
x <= y iff arrow[x][y] == one.  Instances are only built through
:func:`validate`, so every ``FiniteAlgebra`` in circulation satisfies the
six defining axioms (and bottomness of ``zero`` when present).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import MalformedInput, NotCertified, UnboundedAlgebra

DEFAULT_MAX_CARRIER = 24


def max_carrier_cap() -> int:
    """Default carrier cap; overridable via the PSBCK_MAX_N env var."""
    raw = os.environ.get("PSBCK_MAX_N")
    if raw is None:
        return DEFAULT_MAX_CARRIER
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_MAX_CARRIER


@dataclass(frozen=True)
class Diagnostic:
    """One violated axiom with a single (lexicographically least) witness."""

    axiom: str
    witness: tuple[str, ...]
    detail: str = ""

    def __str__(self) -> str:
        w = ",".join(self.witness)
        tail = f" ({self.detail})" if self.detail else ""
        return f"{self.axiom}[{w}]{tail}"


@dataclass(frozen=True)
class FiniteAlgebra:
    element_names: tuple[str, ...]
    one: int
    arrow: tuple[tuple[int, ...], ...]
    squig: tuple[tuple[int, ...], ...]
    zero: int | None = None

    @property
    def n(self) -> int:
        return len(self.element_names)

    @property
    def elements(self) -> range:
        return range(len(self.element_names))

    @property
    def bounded(self) -> bool:
        return self.zero is not None

    def name(self, x: int) -> str:
        return self.element_names[x]

    def index(self, name: str) -> int:
        try:
            return self.element_names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    @cached_property
    def order(self) -> tuple[tuple[bool, ...], ...]:
        one = self.one
        return tuple(
            tuple(v == one for v in row) for row in self.arrow
        )

    def leq(self, x: int, y: int) -> bool:
        return self.arrow[x][y] == self.one

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def down_set(self, x: int) -> tuple[int, ...]:
        return tuple(y for y in self.elements if self.leq(y, x))

    def up_set(self, x: int) -> tuple[int, ...]:
        return tuple(y for y in self.elements if self.leq(x, y))

    # -- bounded-algebra machinery ------------------------------------

    def _require_bounded(self):
        if self.zero is None:
            raise UnboundedAlgebra("operation requires a bounded algebra")

    def neg_minus(self, x: int) -> int:
        self._require_bounded()
        return self.arrow[x][self.zero]

    def neg_sim(self, x: int) -> int:
        self._require_bounded()
        return self.squig[x][self.zero]

    def double_neg_ms(self, x: int) -> int:
        """x^{-~} = (x -> 0) ~> 0."""
        return self.neg_sim(self.neg_minus(x))

    def double_neg_sm(self, x: int) -> int:
        """x^{~-} = (x ~> 0) -> 0."""
        return self.neg_minus(self.neg_sim(x))

    def regular_elements(self) -> frozenset[int]:
        self._require_bounded()
        return frozenset(
            x for x in self.elements
            if self.double_neg_ms(x) == x and self.double_neg_sm(x) == x
        )

    def dense_elements(self) -> frozenset[int]:
        self._require_bounded()
        one = self.one
        return frozenset(
            x for x in self.elements
            if self.double_neg_ms(x) == one and self.double_neg_sm(x) == one
        )

    def is_good(self) -> bool:
        self._require_bounded()
        return all(
            self.double_neg_ms(x) == self.double_neg_sm(x)
            for x in self.elements
        )

    def is_involutive(self) -> bool:
        return self.regular_elements() == frozenset(self.elements)

    def is_glivenko(self) -> bool:
        self._require_bounded()
        if not self.is_good():
            return False
        dn = [self.double_neg_ms(x) for x in self.elements]
        for x, y in product(self.elements, repeat=2):
            if dn[self.arrow[x][y]] != self.arrow[x][dn[y]]:
                return False
            if dn[self.squig[x][y]] != self.squig[x][dn[y]]:
                return False
        return True

    def is_linear(self) -> bool:
        return all(
            self.leq(x, y) or self.leq(y, x)
            for x, y in product(self.elements, repeat=2)
        )

    # -- restriction ---------------------------------------------------

    def subalgebra(self, members) -> "FiniteAlgebra":
        """Restrict to a subset closed under both implications.

        The subset must contain ``one``; ``zero`` is kept iff present in it.
        Element order follows the parent ids.
        """
        keep = sorted(set(members))
        if self.one not in keep:
            raise MalformedInput("subalgebra must contain the constant 1")
        pos = {x: i for i, x in enumerate(keep)}
        for x, y in product(keep, repeat=2):
            if self.arrow[x][y] not in pos or self.squig[x][y] not in pos:
                raise MalformedInput(
                    f"subset not closed under implications at "
                    f"({self.name(x)},{self.name(y)})"
                )
        names = tuple(self.name(x) for x in keep)
        arrow = tuple(tuple(pos[self.arrow[x][y]] for y in keep) for x in keep)
        squig = tuple(tuple(pos[self.squig[x][y]] for y in keep) for x in keep)
        zero = pos.get(self.zero) if self.zero is not None else None
        # bottomness of the inherited zero is re-checked by validate
        if zero is not None and any(arrow[zero][j] != pos[self.one] for j in range(len(keep))):
            zero = None
        return validate(names, pos[self.one], arrow, squig, zero=zero)


def diagnose(element_names, one, arrow, squig, zero=None) -> list[Diagnostic]:
    """Check the pseudo-BCK axioms on raw tables.

    Structural problems (ragged rows, out-of-range ids, duplicate names)
    raise MalformedInput before any axiom is looked at.  Returns one
    diagnostic per violated axiom, each with its lexicographically least
    witness tuple.
    """
    names = tuple(element_names)
    n = len(names)
    if n == 0:
        raise MalformedInput("empty carrier")
    if len(set(names)) != n:
        raise MalformedInput("duplicate element names")
    if any(not s or any(c.isspace() for c in s) for s in names):
        raise MalformedInput("element names must be non-empty and space-free")
    for label, table in (("arrow", arrow), ("squig", squig)):
        if len(table) != n or any(len(row) != n for row in table):
            raise MalformedInput(f"{label} table is not {n}x{n}")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise MalformedInput(f"{label} entry {v!r} out of range")
    if not 0 <= one < n:
        raise MalformedInput("constant 1 out of range")
    if zero is not None and not 0 <= zero < n:
        raise MalformedInput("constant 0 out of range")

    arrow = tuple(tuple(row) for row in arrow)
    squig = tuple(tuple(row) for row in squig)

    def leq(x, y):
        return arrow[x][y] == one

    diags = []

    def record(axiom, witness, detail=""):
        diags.append(Diagnostic(axiom, tuple(names[w] for w in witness), detail))

    rng = range(n)
    for x in rng:
        if arrow[x][x] != one or squig[x][x] != one:
            record("psBCK3", (x,), "x -> x and x ~> x must be 1")
            break
    for x in rng:
        if arrow[x][one] != one or squig[x][one] != one:
            record("psBCK4", (x,), "x <= 1 must hold in both tables")
            break
    for x, y in product(rng, repeat=2):
        if (arrow[x][y] == one) != (squig[x][y] == one):
            record("psBCK6", (x, y), "arrow and squig must agree on the order")
            break
    for x, y in product(rng, repeat=2):
        if x != y and arrow[x][y] == one and arrow[y][x] == one:
            record("psBCK5", (x, y), "antisymmetry fails")
            break
    ok1 = True
    for x, y, z in product(rng, repeat=3):
        if not leq(arrow[x][y], squig[arrow[y][z]][arrow[x][z]]):
            record("psBCK1", (x, y, z), "arrow half fails")
            ok1 = False
            break
        if not leq(squig[x][y], arrow[squig[y][z]][squig[x][z]]):
            record("psBCK1", (x, y, z), "squig half fails")
            ok1 = False
            break
    for x, y in product(rng, repeat=2):
        if not leq(x, squig[arrow[x][y]][y]) or not leq(x, arrow[squig[x][y]][y]):
            record("psBCK2", (x, y))
            break
    if zero is not None:
        for x in rng:
            if arrow[zero][x] != one or squig[zero][x] != one:
                record("bound", (x,), "0 <= x fails")
                break
    # transitivity of the derived order is a theorem; a failure here on
    # tables passing everything above would expose a checker bug
    if ok1 and not diags:
        for x, y, z in product(rng, repeat=3):
            if leq(x, y) and leq(y, z) and not leq(x, z):
                record("order-transitivity", (x, y, z))
                break
    return diags


def validate(element_names, one, arrow, squig, zero=None,
             max_n=None) -> FiniteAlgebra:
    """Certify raw tables as a pseudo-BCK algebra or raise NotCertified."""
    cap = max_n if max_n is not None else max_carrier_cap()
    if len(element_names) > cap:
        raise MalformedInput(
            f"carrier size {len(element_names)} exceeds cap {cap}"
        )
    diags = diagnose(element_names, one, arrow, squig, zero)
    if diags:
        raise NotCertified(diags)
    return FiniteAlgebra(
        element_names=tuple(element_names),
        one=one,
        arrow=tuple(tuple(row) for row in arrow),
        squig=tuple(tuple(row) for row in squig),
        zero=zero,
    )


@dataclass(frozen=True)
class LawResult:
    law: str
    ok: bool
    witness: tuple[str, ...] = ()


def derived_law_suite(algebra: FiniteAlgebra) -> list[LawResult]:
    """Self-test: the arithmetic facts every certified algebra must satisfy.

    Covers the exchange/monotonicity laws of the implication pair and, on
    bounded algebras, the negation arithmetic.  A failure on a certified
    algebra indicates an internal bug.
    """
    A = algebra
    rng = A.elements
    results = []

    def check(law, ok, witness=()):
        results.append(LawResult(law, ok, tuple(A.name(w) for w in witness)))

    def first_fail(label, pred, arity):
        for tup in product(rng, repeat=arity):
            if not pred(*tup):
                check(label, False, tup)
                return
        check(label, True)

    ar, sq, leq = A.arrow, A.squig, A.leq
    first_fail("exchange", lambda x, y, z: ar[x][sq[y][z]] == sq[y][ar[x][z]], 3)
    first_fail(
        "left-antitone",
        lambda x, y, z: not leq(x, y)
        or (leq(ar[y][z], ar[x][z]) and leq(sq[y][z], sq[x][z])),
        3,
    )
    first_fail(
        "right-monotone",
        lambda x, y, z: not leq(x, y)
        or (leq(ar[z][x], ar[z][y]) and leq(sq[z][x], sq[z][y])),
        3,
    )
    first_fail(
        "prefixing",
        lambda x, y, z: leq(ar[x][y], ar[ar[z][x]][ar[z][y]])
        and leq(sq[x][y], sq[sq[z][x]][sq[z][y]]),
        3,
    )
    if not A.bounded:
        return results

    nm, ns = A.neg_minus, A.neg_sim
    first_fail("dn-expansion", lambda x: leq(x, ns(nm(x))) and leq(x, nm(ns(x))), 1)
    first_fail(
        "contraposition-swap",
        lambda x, y: ar[x][ns(y)] == sq[y][nm(x)] and sq[x][nm(y)] == ar[y][ns(x)],
        2,
    )
    first_fail(
        "dn-contraposition",
        lambda x, y: ar[ns(x)][ns(nm(y))] == sq[nm(y)][nm(ns(x))]
        and sq[nm(x)][nm(ns(y))] == ar[ns(y)][ns(nm(x))],
        2,
    )
    first_fail(
        "neg-antitone",
        lambda x, y: not leq(x, y)
        or (
            leq(nm(y), nm(x))
            and leq(ns(y), ns(x))
            and leq(ns(nm(x)), ns(nm(y)))
            and leq(nm(ns(x)), nm(ns(y)))
        ),
        2,
    )
    first_fail("triple-neg", lambda x: nm(ns(nm(x))) == nm(x) and ns(nm(ns(x))) == ns(x), 1)
    first_fail(
        "dn-implication-1",
        lambda x, y: ar[x][ns(nm(y))] == sq[nm(y)][nm(x)] == ar[ns(nm(x))][ns(nm(y))]
        and sq[x][nm(ns(y))] == ar[ns(y)][ns(x)] == sq[nm(ns(x))][nm(ns(y))],
        2,
    )
    first_fail(
        "dn-implication-2",
        lambda x, y: ar[x][ns(y)] == sq[nm(ns(y))][nm(x)] == ar[ns(nm(x))][ns(y)]
        and sq[x][nm(y)] == ar[ns(nm(y))][ns(x)] == sq[nm(ns(x))][nm(y)],
        2,
    )
    first_fail(
        "dn-stability",
        lambda x, y: nm(ns(ar[x][nm(ns(y))])) == ar[x][nm(ns(y))]
        and ns(nm(sq[x][ns(nm(y))])) == sq[x][ns(nm(y))],
        2,
    )
    first_fail(
        "neg-contraposition",
        lambda x, y: leq(ar[x][y], sq[nm(y)][nm(x)]) and leq(sq[x][y], ar[ns(y)][ns(x)]),
        2,
    )
    return results
