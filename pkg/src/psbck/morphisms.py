"""Homomorphisms between finite pseudo-BCK algebras.

Includes plain and very-true homomorphism checking/enumeration, transport
of substructures along a very-true homomorphism, the factor construction
through a quotient, the first-isomorphism instance, and a backtracking
isomorphism test.

Endomorphism enumeration has its own cap (|A| <= 8): the raw space is
|A|^|A| and pruning here is weaker than for operator search.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .algebra import FiniteAlgebra
from .deduction import (
    DeductiveSystem,
    QuotientAlgebra,
    enumerate_ds_v,
    lift_vto_to_quotient,
)
from .errors import (
    CarrierTooLarge,
    KernelContainmentViolated,
    MalformedInput,
    SurjectivityRequired,
)
from .operators import UnaryMap, Witness, certify_vto, is_vto

DEFAULT_HOM_CAP = 8


def hom_cap() -> int:
    raw = os.environ.get("PSBCK_MAX_N")
    if raw is None:
        return DEFAULT_HOM_CAP
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_HOM_CAP


@dataclass(frozen=True)
class Homomorphism:
    source: FiniteAlgebra
    target: FiniteAlgebra
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.n

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.n

    def kernel(self) -> frozenset[int]:
        one = self.target.one
        return frozenset(x for x in self.source.elements if self.map[x] == one)

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def names(self) -> tuple[str, ...]:
        return tuple(self.target.name(v) for v in self.map)


@dataclass(frozen=True)
class VtHomomorphism:
    base: Homomorphism
    v: UnaryMap
    u: UnaryMap

    def __call__(self, x: int) -> int:
        return self.base.map[x]

    @property
    def source(self):
        return self.base.source

    @property
    def target(self):
        return self.base.target


def is_hom(f: Homomorphism) -> Witness | None:
    A, B, m = f.source, f.target, f.map
    if len(m) != A.n or any(not 0 <= v < B.n for v in m):
        raise MalformedInput("map is not total into the target carrier")
    for x, y in product(A.elements, repeat=2):
        if m[A.arrow[x][y]] != B.arrow[m[x]][m[y]]:
            return Witness("hom-arrow", (A.name(x), A.name(y)))
        if m[A.squig[x][y]] != B.squig[m[x]][m[y]]:
            return Witness("hom-squig", (A.name(x), A.name(y)))
    return None


def is_vthom(f: Homomorphism, v: UnaryMap, u: UnaryMap) -> Witness | None:
    w = is_hom(f)
    if w is not None:
        return w
    certify_vto(f.source, v)
    certify_vto(f.target, u)
    for x in f.source.elements:
        if f.map[v.image[x]] != u.image[f.map[x]]:
            return Witness("intertwine", (f.source.name(x),))
    return None


def enumerate_hom(A: FiniteAlgebra, B: FiniteAlgebra, max_n=None) -> list[Homomorphism]:
    """All implication-preserving maps A -> B, lexicographic in map vectors.

    DFS fixes f(1)=1 and checks every preservation constraint as soon as
    all three participating elements are assigned.
    """
    cap = max_n if max_n is not None else hom_cap()
    if A.n > cap:
        raise CarrierTooLarge(f"source size {A.n} exceeds hom cap {cap}")
    n = A.n
    out: list[Homomorphism] = []
    m: list[int] = []

    def consistent(i: int) -> bool:
        # re-verify all constraints whose participants are all <= i and
        # that mention the freshly assigned element i
        for x in range(i + 1):
            for y in range(i + 1):
                for tab_a, tab_b in ((A.arrow, B.arrow), (A.squig, B.squig)):
                    z = tab_a[x][y]
                    if z > i or (x != i and y != i and z != i):
                        continue
                    if m[z] != tab_b[m[x]][m[y]]:
                        return False
        return True

    def rec(i: int):
        if i == n:
            out.append(Homomorphism(A, B, tuple(m)))
            return
        candidates = [B.one] if i == A.one else range(B.n)
        for w in candidates:
            m.append(w)
            if consistent(i):
                rec(i + 1)
            m.pop()

    rec(0)
    return out


def enumerate_vthom(
    A: FiniteAlgebra, v: UnaryMap, B: FiniteAlgebra, u: UnaryMap, max_n=None
) -> list[Homomorphism]:
    certify_vto(A, v)
    certify_vto(B, u)
    return [
        f
        for f in enumerate_hom(A, B, max_n)
        if all(f.map[v.image[x]] == u.image[f.map[x]] for x in A.elements)
    ]


def is_vt_subalgebra(A: FiniteAlgebra, v: UnaryMap, members) -> bool:
    """Subset closed under ->, ~>, containing 1 and stable under v."""
    members = frozenset(members)
    if A.one not in members:
        return False
    for x, y in product(sorted(members), repeat=2):
        if A.arrow[x][y] not in members or A.squig[x][y] not in members:
            return False
    return all(v.image[x] in members for x in members)


@dataclass(frozen=True)
class TransportReport:
    image_subalgebra: frozenset[int]
    image_is_vt_subalgebra: bool
    kernel: frozenset[int]
    kernel_is_normal_vds: bool
    pushforward_ok: bool | None  # None when f is not surjective
    pullback_ok: bool
    preimage_ker_u_is_vds: bool
    image_ker_v_is_uds: bool | None

    @property
    def ok(self) -> bool:
        checks = [
            self.image_is_vt_subalgebra,
            self.kernel_is_normal_vds,
            self.pullback_ok,
            self.preimage_ker_u_is_vds,
        ]
        checks += [c for c in (self.pushforward_ok, self.image_ker_v_is_uds) if c is not None]
        return all(checks)


def _is_ds(A: FiniteAlgebra, members: frozenset[int]) -> bool:
    if A.one not in members:
        return False
    for x in members:
        for y in A.elements:
            if y in members:
                continue
            if A.arrow[x][y] in members or A.squig[x][y] in members:
                return False
    return True


def _is_vds(A: FiniteAlgebra, v: UnaryMap, members: frozenset[int]) -> bool:
    return _is_ds(A, members) and all(v.image[x] in members for x in members)


def transport(f: VtHomomorphism, sub=None, max_n=None) -> TransportReport:
    """Verify how a very-true homomorphism moves substructures around.

    Checks: the image of a very-true subalgebra is one in the target; the
    kernel is a normal v-deductive system; pushforwards of v-deductive
    systems are u-deductive systems (surjective case only, reported as
    None otherwise); pullbacks of u-deductive systems are v-deductive
    systems; plus the kernel-of-operator corollaries.
    """
    A, B = f.source, f.target
    v, u = f.v, f.u
    w = is_vthom(f.base, v, u)
    if w is not None:
        raise MalformedInput(f"not a very true homomorphism: {w}")
    sub = frozenset(sub) if sub is not None else frozenset(A.elements)
    if not is_vt_subalgebra(A, v, sub):
        raise MalformedInput("given subset is not a very true subalgebra")
    image = frozenset(f.base.map[x] for x in sub)
    image_ok = is_vt_subalgebra(B, u, image)
    if image_ok:
        # the restricted operator must itself be a very true operator there
        sub_b = B.subalgebra(image)
        pos = {x: i for i, x in enumerate(sorted(image))}
        u_restr = UnaryMap(sub_b, tuple(pos[u.image[x]] for x in sorted(image)))
        image_ok = is_vto(sub_b, u_restr) is None

    ker = f.base.kernel()
    kernel_ok = _is_vds(A, v, ker) and DeductiveSystem.from_members(A, ker).normal

    surjective = f.base.is_surjective()
    if surjective:
        push_ok = True
        for D in enumerate_ds_v(A, v, max_n):
            img = frozenset(f.base.map[x] for x in D.members)
            if not _is_vds(B, u, img):
                push_ok = False
                break
    else:
        push_ok = None

    pull_ok = True
    for G in enumerate_ds_v(B, u, max_n):
        pre = frozenset(x for x in A.elements if f.base.map[x] in G.members)
        if not _is_vds(A, v, pre):
            pull_ok = False
            break

    ker_u = frozenset(x for x in B.elements if u.image[x] == B.one)
    pre_ker_u = frozenset(x for x in A.elements if f.base.map[x] in ker_u)
    pre_ok = _is_vds(A, v, pre_ker_u)

    if surjective:
        ker_v = frozenset(x for x in A.elements if v.image[x] == A.one)
        img_ker_v = frozenset(f.base.map[x] for x in ker_v)
        img_ok = _is_vds(B, u, img_ker_v)
    else:
        img_ok = None

    return TransportReport(
        image_subalgebra=image,
        image_is_vt_subalgebra=image_ok,
        kernel=ker,
        kernel_is_normal_vds=kernel_ok,
        pushforward_ok=push_ok,
        pullback_ok=pull_ok,
        preimage_ker_u_is_vds=pre_ok,
        image_ker_v_is_uds=img_ok,
    )


def pushforward_ds(f: VtHomomorphism, D: DeductiveSystem) -> frozenset[int]:
    if not f.base.is_surjective():
        raise SurjectivityRequired("pushforward needs a surjective homomorphism")
    return frozenset(f.base.map[x] for x in D.members)


@dataclass(frozen=True)
class FactorResult:
    quotient: QuotientAlgebra
    lifted_operator: UnaryMap
    factored: VtHomomorphism
    unique: bool
    image_preserved: bool
    kernel_is_quotient_of_kernel: bool


def factor(f: VtHomomorphism, H: DeductiveSystem, check_unique=True) -> FactorResult:
    """Factor a very-true homomorphism through A/H for H inside its kernel.

    Returns the induced map from the quotient; commutation with the
    projection holds by construction.  Uniqueness is asserted by exhaustive
    search over very-true homomorphisms on the quotient.
    """
    A, B = f.source, f.target
    w = is_vthom(f.base, f.v, f.u)
    if w is not None:
        raise MalformedInput(f"not a very true homomorphism: {w}")
    if not H.members <= f.base.kernel():
        raise KernelContainmentViolated("H must be contained in the kernel")
    quot, vhat = lift_vto_to_quotient(A, f.v, H)
    q = quot.algebra
    m = [None] * q.n
    for x in A.elements:
        cls = quot.class_of[x]
        if m[cls] is None:
            m[cls] = f.base.map[x]
        elif m[cls] != f.base.map[x]:
            raise KernelContainmentViolated(
                f"map not constant on class of {A.name(x)}"
            )
    base = Homomorphism(q, B, tuple(m))
    lifted = VtHomomorphism(base, vhat, f.u)
    w = is_vthom(base, vhat, f.u)
    if w is not None:
        raise MalformedInput(f"factored map fails {w}")

    unique = True
    if check_unique:
        matches = [
            g
            for g in enumerate_vthom(q, vhat, B, f.u, max_n=max(q.n, hom_cap()))
            if all(g.map[quot.class_of[x]] == f.base.map[x] for x in A.elements)
        ]
        unique = matches == [base]

    image_preserved = base.image() == f.base.image()
    ker_classes = frozenset(quot.class_of[x] for x in f.base.kernel())
    kernel_ok = base.kernel() == ker_classes
    return FactorResult(quot, vhat, lifted, unique, image_preserved, kernel_ok)


def first_isomorphism(f: VtHomomorphism) -> FactorResult:
    """Factor at H = Ker(f) with the target cut down to the image.

    The resulting map is a very-true isomorphism from A/Ker(f) onto Im(f).
    """
    A, B = f.source, f.target
    image = sorted(f.base.image())
    sub_b = B.subalgebra(image)
    pos = {x: i for i, x in enumerate(image)}
    u_restr = UnaryMap(sub_b, tuple(pos[f.u.image[x]] for x in image))
    base = Homomorphism(A, sub_b, tuple(pos[f.base.map[x]] for x in A.elements))
    g = VtHomomorphism(base, f.v, u_restr)
    H = DeductiveSystem.from_members(A, base.kernel())
    return factor(g, H)


def is_isomorphic(A: FiniteAlgebra, B: FiniteAlgebra) -> Homomorphism | None:
    """A bijective homomorphism, if one exists (backtracking search)."""
    if A.n != B.n:
        return None
    if (A.zero is None) != (B.zero is None):
        return None
    n = A.n
    m: list[int] = []
    used = [False] * n

    # order-profile invariant: |down-set|, |up-set| must match
    def profile(alg, x):
        return (len(alg.down_set(x)), len(alg.up_set(x)))

    prof_b: dict[tuple[int, int], list[int]] = {}
    for y in B.elements:
        prof_b.setdefault(profile(B, y), []).append(y)

    def consistent(i: int) -> bool:
        for x in range(i + 1):
            for y in range(i + 1):
                for tab_a, tab_b in ((A.arrow, B.arrow), (A.squig, B.squig)):
                    z = tab_a[x][y]
                    if z > i or (x != i and y != i and z != i):
                        continue
                    if m[z] != tab_b[m[x]][m[y]]:
                        return False
        return True

    def rec(i: int):
        if i == n:
            return Homomorphism(A, B, tuple(m))
        if i == A.one:
            candidates = [B.one]
        elif A.zero is not None and i == A.zero:
            candidates = [B.zero]
        else:
            candidates = prof_b.get(profile(A, i), [])
        for w in candidates:
            if used[w]:
                continue
            m.append(w)
            used[w] = True
            if consistent(i):
                found = rec(i + 1)
                if found is not None:
                    return found
            used[w] = False
            m.pop()
        return None

    return rec(0)
