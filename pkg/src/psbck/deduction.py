"""Deductive systems, congruences and quotient algebras.

Deductive systems are enumerated as the closure system generated from {1}:
starting from the saturation of {1}, repeatedly adjoin one element and
re-saturate under both modus ponens forms.  This visits every closed set
once and never scans the full power set, which keeps carriers up to the
documented cap (20) feasible.  Results are ordered by (cardinality, bitset
value) with bit i standing for element id i.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product

from .algebra import FiniteAlgebra, validate
from .errors import (
    CarrierTooLarge,
    MalformedInput,
    NotNormal,
    NotVds,
    WellDefinednessFailure,
)
from .operators import UnaryMap, certify_vto, is_vto

DEFAULT_SUBSET_CAP = 20


def subset_cap() -> int:
    raw = os.environ.get("PSBCK_MAX_N")
    if raw is None:
        return DEFAULT_SUBSET_CAP
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_SUBSET_CAP


def _saturate(A: FiniteAlgebra, mask: int) -> int:
    """Close a bitset under modus ponens for both implications."""
    changed = True
    while changed:
        changed = False
        for x in A.elements:
            if not mask >> x & 1:
                continue
            for y in A.elements:
                if mask >> y & 1:
                    continue
                if mask >> A.arrow[x][y] & 1 or mask >> A.squig[x][y] & 1:
                    mask |= 1 << y
                    changed = True
    return mask


def _closed_sets(A: FiniteAlgebra, max_n=None) -> list[int]:
    cap = max_n if max_n is not None else subset_cap()
    if A.n > cap:
        raise CarrierTooLarge(f"carrier size {A.n} exceeds subset cap {cap}")
    bottom = _saturate(A, 1 << A.one)
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for mask in frontier:
            for e in A.elements:
                if mask >> e & 1:
                    continue
                closed = _saturate(A, mask | 1 << e)
                if closed not in seen:
                    seen.add(closed)
                    nxt.append(closed)
        frontier = nxt
    return sorted(seen, key=lambda m: (bin(m).count("1"), m))


@dataclass(frozen=True)
class DeductiveSystem:
    parent: FiniteAlgebra
    members: frozenset[int]
    normal: bool

    @classmethod
    def from_members(cls, A: FiniteAlgebra, members) -> "DeductiveSystem":
        members = frozenset(members)
        mask = sum(1 << x for x in members)
        if A.one not in members or _saturate(A, mask) != mask:
            raise MalformedInput("subset is not a deductive system")
        return cls(A, members, _is_normal(A, members))

    def stable_under(self, v: UnaryMap) -> bool:
        return all(v.image[x] in self.members for x in self.members)

    def names(self) -> tuple[str, ...]:
        return tuple(
            self.parent.name(x) for x in sorted(self.members)
        )


def _is_normal(A: FiniteAlgebra, members: frozenset[int]) -> bool:
    return all(
        (A.arrow[x][y] in members) == (A.squig[x][y] in members)
        for x, y in product(A.elements, repeat=2)
    )


def _mask_to_ds(A: FiniteAlgebra, mask: int) -> DeductiveSystem:
    members = frozenset(x for x in A.elements if mask >> x & 1)
    return DeductiveSystem(A, members, _is_normal(A, members))


def enumerate_ds(A: FiniteAlgebra, max_n=None) -> list[DeductiveSystem]:
    return [_mask_to_ds(A, m) for m in _closed_sets(A, max_n)]


def enumerate_ds_n(A: FiniteAlgebra, max_n=None) -> list[DeductiveSystem]:
    return [d for d in enumerate_ds(A, max_n) if d.normal]


def enumerate_ds_v(A: FiniteAlgebra, v: UnaryMap, max_n=None) -> list[DeductiveSystem]:
    certify_vto(A, v)
    return [d for d in enumerate_ds(A, max_n) if d.stable_under(v)]


def enumerate_ds_nv(A: FiniteAlgebra, v: UnaryMap, max_n=None) -> list[DeductiveSystem]:
    return [d for d in enumerate_ds_v(A, v, max_n) if d.normal]


@dataclass(frozen=True)
class QuotientAlgebra:
    parent: FiniteAlgebra
    by: DeductiveSystem
    algebra: FiniteAlgebra
    class_of: tuple[int, ...]
    representatives: tuple[int, ...] = field(default=())

    def project(self, x: int) -> int:
        return self.class_of[x]

    def class_members(self, cls: int) -> tuple[int, ...]:
        return tuple(x for x in self.parent.elements if self.class_of[x] == cls)


def congruence_from(A: FiniteAlgebra, H: DeductiveSystem) -> QuotientAlgebra:
    """Quotient by the congruence induced by a normal deductive system.

    Classes: x ~ y iff x->y and y->x both lie in H.  Class ids follow the
    least-id representative; class names are "[rep]".  The inherited tables
    are checked to be independent of representatives and the quotient is
    re-certified as a pseudo-BCK algebra.
    """
    if not H.normal:
        raise NotNormal("quotients require a normal deductive system")
    mem = H.members
    related = [
        [A.arrow[x][y] in mem and A.arrow[y][x] in mem for y in A.elements]
        for x in A.elements
    ]
    class_of = [-1] * A.n
    reps: list[int] = []
    for x in A.elements:
        if class_of[x] != -1:
            continue
        cls = len(reps)
        reps.append(x)
        for y in range(x, A.n):
            if related[x][y]:
                class_of[y] = cls
    k = len(reps)
    arrow = [[None] * k for _ in range(k)]
    squig = [[None] * k for _ in range(k)]
    for x, y in product(A.elements, repeat=2):
        cx, cy = class_of[x], class_of[y]
        va, vs = class_of[A.arrow[x][y]], class_of[A.squig[x][y]]
        if arrow[cx][cy] is None:
            arrow[cx][cy], squig[cx][cy] = va, vs
        elif arrow[cx][cy] != va or squig[cx][cy] != vs:
            raise WellDefinednessFailure(
                f"tables disagree on classes of ({A.name(x)},{A.name(y)})"
            )
    names = tuple(f"[{A.name(r)}]" for r in reps)
    zero = class_of[A.zero] if A.zero is not None else None
    if zero is not None:
        z = zero
        if any(arrow[z][j] != class_of[A.one] for j in range(k)):
            zero = None
    quotient = validate(
        names,
        class_of[A.one],
        tuple(tuple(r) for r in arrow),
        tuple(tuple(r) for r in squig),
        zero=zero,
    )
    return QuotientAlgebra(A, H, quotient, tuple(class_of), tuple(reps))


def enumerate_congruences(A: FiniteAlgebra, max_n=None) -> list[QuotientAlgebra]:
    """One quotient per normal deductive system."""
    return [congruence_from(A, H) for H in enumerate_ds_n(A, max_n)]


def lift_vto_to_quotient(
    A: FiniteAlgebra, v: UnaryMap, H: DeductiveSystem
) -> tuple[QuotientAlgebra, UnaryMap]:
    """Induce a very true operator on A/H from a normal v-deductive system."""
    certify_vto(A, v)
    if not H.normal:
        raise NotNormal("lifting requires a normal deductive system")
    if not H.stable_under(v):
        raise NotVds("H is not stable under the operator")
    quot = congruence_from(A, H)
    q = quot.algebra
    img = [None] * q.n
    for x in A.elements:
        cls = quot.class_of[x]
        val = quot.class_of[v.image[x]]
        if img[cls] is None:
            img[cls] = val
        elif img[cls] != val:
            raise WellDefinednessFailure(
                f"induced map disagrees inside class of {A.name(x)}"
            )
    lifted = UnaryMap(q, tuple(img))
    w = is_vto(q, lifted)
    if w is not None:
        raise WellDefinednessFailure(f"induced map fails {w}")
    return quot, lifted


def vto_congruence_check(A: FiniteAlgebra, v: UnaryMap, max_n=None) -> bool:
    """Congruences from v-stable normal deductive systems are compatible
    with v (a theorem checker).

    Quantifying over all normal deductive systems would be wrong: the
    3-chain with globalization relates the two non-unit elements via the
    system they generate, but globalization separates them again.
    """
    certify_vto(A, v)
    for H in enumerate_ds_nv(A, v, max_n):
        mem = H.members
        for x, y in product(A.elements, repeat=2):
            if A.arrow[x][y] in mem and A.arrow[y][x] in mem:
                vx, vy = v.image[x], v.image[y]
                if A.arrow[vx][vy] not in mem or A.arrow[vy][vx] not in mem:
                    return False
    return True
