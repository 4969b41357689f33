"""Unary operators on a finite pseudo-BCK algebra.

Covers checking and exhaustive enumeration of interior operators, closure
operators and very-true (truth-stressing) operators, the canonical
truth-depressing hedge pair, and the liftings to the regular-element
subalgebra and the dense-element quotient.

Enumeration is a depth-first assignment over element ids in increasing
order, so results come out in lexicographic order of image vectors.
Pruning: the image of x is restricted to the down-set (interior/VTO) or
up-set (closure) of x, monotonicity is enforced against already-assigned
comparable elements, and the remaining axioms are a cheap final filter.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .algebra import FiniteAlgebra
from .errors import (
    CarrierTooLarge,
    GlivenkoRequired,
    NotVto,
    ParentMismatch,
    UnboundedAlgebra,
    WellDefinednessFailure,
)

DEFAULT_ENUM_CAP = 10


def enum_cap() -> int:
    raw = os.environ.get("PSBCK_MAX_N")
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class UnaryMap:
    parent: FiniteAlgebra
    image: tuple[int, ...]

    def __post_init__(self):
        n = self.parent.n
        if len(self.image) != n or any(not 0 <= v < n for v in self.image):
            raise ValueError("unary map must be total over the carrier")

    def __call__(self, x: int) -> int:
        return self.image[x]

    def names(self) -> tuple[str, ...]:
        return tuple(self.parent.name(v) for v in self.image)

    def __le__(self, other: "UnaryMap") -> bool:
        _same_parent(self, other)
        return all(
            self.parent.leq(a, b) for a, b in zip(self.image, other.image)
        )


def _same_parent(f: UnaryMap, g: UnaryMap):
    if f.parent is not g.parent and f.parent != g.parent:
        raise ParentMismatch("maps live on different algebras")


def identity_map(algebra: FiniteAlgebra) -> UnaryMap:
    return UnaryMap(algebra, tuple(algebra.elements))


def globalization(algebra: FiniteAlgebra) -> UnaryMap:
    """The crisp hedge: 1 to 1, everything else to 0."""
    if algebra.zero is None:
        raise UnboundedAlgebra("globalization needs a bottom element")
    return UnaryMap(
        algebra,
        tuple(
            algebra.one if x == algebra.one else algebra.zero
            for x in algebra.elements
        ),
    )


def compose(f: UnaryMap, g: UnaryMap) -> UnaryMap:
    """Pointwise composition (f o g)(x) = f(g(x))."""
    _same_parent(f, g)
    return UnaryMap(f.parent, tuple(f.image[v] for v in g.image))


def fix_points(f: UnaryMap) -> frozenset[int]:
    return frozenset(x for x in f.parent.elements if f.image[x] == x)


def image_set(f: UnaryMap) -> frozenset[int]:
    return frozenset(f.image)


def kernel(f: UnaryMap) -> frozenset[int]:
    one = f.parent.one
    return frozenset(x for x in f.parent.elements if f.image[x] == one)


@dataclass(frozen=True)
class Witness:
    axiom: str
    elements: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.axiom}[{','.join(self.elements)}]"


def _witness(A: FiniteAlgebra, axiom: str, tup) -> Witness:
    return Witness(axiom, tuple(A.name(t) for t in tup))


def is_interior(A: FiniteAlgebra, f: UnaryMap) -> Witness | None:
    """None if f is an interior operator, else the first violated axiom."""
    im = f.image
    for x in A.elements:
        if not A.leq(im[x], x):
            return _witness(A, "IO1", (x,))
    for x, y in product(A.elements, repeat=2):
        if A.leq(x, y) and not A.leq(im[x], im[y]):
            return _witness(A, "IO2", (x, y))
    for x in A.elements:
        if im[im[x]] != im[x]:
            return _witness(A, "IO3", (x,))
    return None


def is_closure(A: FiniteAlgebra, f: UnaryMap) -> Witness | None:
    im = f.image
    for x in A.elements:
        if not A.leq(x, im[x]):
            return _witness(A, "CO1", (x,))
    for x, y in product(A.elements, repeat=2):
        if A.leq(x, y) and not A.leq(im[x], im[y]):
            return _witness(A, "CO2", (x, y))
    for x in A.elements:
        if im[im[x]] != im[x]:
            return _witness(A, "CO3", (x,))
    return None


def is_vto(A: FiniteAlgebra, f: UnaryMap) -> Witness | None:
    im = f.image
    if im[A.one] != A.one:
        return _witness(A, "VT1", (A.one,))
    for x in A.elements:
        if not A.leq(im[x], x):
            return _witness(A, "VT2", (x,))
    for x in A.elements:
        if not A.leq(im[x], im[im[x]]):
            return _witness(A, "VT3", (x,))
    for x, y in product(A.elements, repeat=2):
        if not A.leq(im[A.arrow[x][y]], A.arrow[im[x]][im[y]]):
            return _witness(A, "VT4", (x, y))
        if not A.leq(im[A.squig[x][y]], A.squig[im[x]][im[y]]):
            return _witness(A, "VT4", (x, y))
    return None


def _enumerate_monotone(A: FiniteAlgebra, allowed, final_ok, max_n=None):
    """DFS over image vectors, increasing element id, increasing value.

    ``allowed[x]`` is the candidate pool for f(x) (already order-restricted);
    monotonicity against assigned comparable elements prunes the branch.
    ``final_ok`` filters complete vectors.
    """
    cap = max_n if max_n is not None else enum_cap()
    if A.n > cap:
        raise CarrierTooLarge(f"carrier size {A.n} exceeds enumeration cap {cap}")
    n = A.n
    leq = A.leq
    image: list[int] = []
    out: list[UnaryMap] = []

    def rec(i: int):
        if i == n:
            v = tuple(image)
            if final_ok(v):
                out.append(UnaryMap(A, v))
            return
        for w in allowed[i]:
            ok = True
            for j in range(i):
                if leq(j, i) and not leq(image[j], w):
                    ok = False
                    break
                if leq(i, j) and not leq(w, image[j]):
                    ok = False
                    break
            if ok:
                image.append(w)
                rec(i + 1)
                image.pop()

    rec(0)
    return out


def enumerate_interior(A: FiniteAlgebra, max_n=None) -> list[UnaryMap]:
    allowed = [sorted(A.down_set(x)) for x in A.elements]

    def final_ok(v):
        return all(v[v[x]] == v[x] for x in A.elements)

    return _enumerate_monotone(A, allowed, final_ok, max_n)


def enumerate_closure(A: FiniteAlgebra, max_n=None) -> list[UnaryMap]:
    allowed = [sorted(A.up_set(x)) for x in A.elements]

    def final_ok(v):
        return all(v[v[x]] == v[x] for x in A.elements)

    return _enumerate_monotone(A, allowed, final_ok, max_n)


def enumerate_vto(A: FiniteAlgebra, max_n=None) -> list[UnaryMap]:
    # monotonicity is a consequence of VT4, so the monotone DFS loses nothing
    allowed = [
        [A.one] if x == A.one else sorted(A.down_set(x)) for x in A.elements
    ]
    ar, sq, leq = A.arrow, A.squig, A.leq

    def final_ok(v):
        for x in A.elements:
            if not leq(v[x], v[v[x]]):
                return False
        for x, y in product(A.elements, repeat=2):
            if not leq(v[ar[x][y]], ar[v[x]][v[y]]):
                return False
            if not leq(v[sq[x][y]], sq[v[x]][v[y]]):
                return False
        return True

    return _enumerate_monotone(A, allowed, final_ok, max_n)


def certify_vto(A: FiniteAlgebra, f: UnaryMap) -> UnaryMap:
    w = is_vto(A, f)
    if w is not None:
        raise NotVto(f"map is not a very true operator: {w}")
    return f


# -- truth-depressing hedges ------------------------------------------


def sigma_hedges(A: FiniteAlgebra, v: UnaryMap) -> tuple[UnaryMap, UnaryMap]:
    """Canonical hedge pair for a very true operator on a bounded algebra.

    s1(x) = v(x^-)^~ and s2(x) = v(x^~)^-.  Both are closure operators and
    (v, s1, s2) satisfies ST1-ST3.
    """
    if A.zero is None:
        raise UnboundedAlgebra("hedges need a bounded algebra")
    certify_vto(A, v)
    s1 = UnaryMap(A, tuple(A.neg_sim(v.image[A.neg_minus(x)]) for x in A.elements))
    s2 = UnaryMap(A, tuple(A.neg_minus(v.image[A.neg_sim(x)]) for x in A.elements))
    return s1, s2


def is_vtst(A: FiniteAlgebra, v: UnaryMap, s1: UnaryMap, s2: UnaryMap) -> Witness | None:
    """ST1-ST3 for a hedge pair attached to a certified very true operator."""
    if A.zero is None:
        raise UnboundedAlgebra("the hedge axioms mention 0")
    certify_vto(A, v)
    if s1.image[A.zero] != A.zero or s2.image[A.zero] != A.zero:
        return _witness(A, "ST1", (A.zero,))
    for x in A.elements:
        if not A.leq(x, s1.image[x]) or not A.leq(x, s2.image[x]):
            return _witness(A, "ST2", (x,))
    for x, y in product(A.elements, repeat=2):
        if not A.leq(v.image[A.arrow[x][y]], A.arrow[s1.image[x]][s1.image[y]]):
            return _witness(A, "ST3", (x, y))
        if not A.leq(v.image[A.squig[x][y]], A.squig[s2.image[x]][s2.image[y]]):
            return _witness(A, "ST3", (x, y))
    return None


@dataclass(frozen=True)
class VtstStructure:
    algebra: FiniteAlgebra
    v: UnaryMap
    s1: UnaryMap
    s2: UnaryMap

    def __post_init__(self):
        w = is_vtst(self.algebra, self.v, self.s1, self.s2)
        if w is not None:
            raise NotVto(f"hedge axioms fail: {w}")


# -- liftings ----------------------------------------------------------


def _require_glivenko(A: FiniteAlgebra):
    if A.zero is None or not A.is_good() or not A.is_glivenko():
        raise GlivenkoRequired(
            "lifting needs a bounded good algebra with the Glivenko property"
        )


def lift_to_reg(A: FiniteAlgebra, f: UnaryMap, kind: str = "vto"):
    """Transport f to the regular-element subalgebra via double negation.

    Returns (subalgebra, lifted map).  ``kind`` selects which certificate
    is re-checked on the subalgebra ("interior" or "vto").
    """
    _require_glivenko(A)
    checker = is_interior if kind == "interior" else is_vto
    w = checker(A, f)
    if w is not None:
        raise NotVto(f"input map fails {w}")
    reg = sorted(A.regular_elements())
    sub = A.subalgebra(reg)
    pos = {x: i for i, x in enumerate(reg)}
    lifted = UnaryMap(
        sub, tuple(pos[A.double_neg_ms(f.image[x])] for x in reg)
    )
    w = checker(sub, lifted)
    if w is not None:
        raise WellDefinednessFailure(f"lifted map fails {w}")
    return sub, lifted


def lift_to_den_quotient(A: FiniteAlgebra, f: UnaryMap, kind: str = "vto"):
    """Transport f to the quotient by the dense elements.

    Returns (quotient, lifted map).  The lift sends the class of x to the
    class of f applied to the double negation of x; applying f directly to
    a representative is not class-independent (globalization on any algebra
    with a dense element below 1 already breaks it), whereas the double
    negation is constant on each class, which makes this the transport of
    the regular-element lift along the isomorphism with the quotient.
    Well-definedness is still asserted on every element; a failure signals
    a precondition bug.
    """
    from .deduction import DeductiveSystem, congruence_from

    _require_glivenko(A)
    checker = is_interior if kind == "interior" else is_vto
    w = checker(A, f)
    if w is not None:
        raise NotVto(f"input map fails {w}")
    den = DeductiveSystem.from_members(A, A.dense_elements())
    if not den.normal:
        raise WellDefinednessFailure("Den(A) is not a normal deductive system")
    quot = congruence_from(A, den)
    q = quot.algebra
    img = [None] * q.n
    for x in A.elements:
        cls = quot.class_of[x]
        val = quot.class_of[f.image[A.double_neg_ms(x)]]
        if img[cls] is None:
            img[cls] = val
        elif img[cls] != val:
            raise WellDefinednessFailure(
                f"map disagrees inside class of {A.name(x)}"
            )
    lifted = UnaryMap(q, tuple(img))
    w = checker(q, lifted)
    if w is not None:
        raise WellDefinednessFailure(f"lifted map fails {w}")
    return quot, lifted
