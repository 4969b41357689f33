"""Residuated-structure classification and Smarandache substructures.

The pseudo-product is always derived from the order: x (.) y is the least
element of {z | x <= y->z}, which must coincide with the least element of
{z | y <= x~>z}.  User-supplied product tables are cross-checked against
this oracle, never trusted.  Lattice meets and joins likewise come from
the derived order; a missing bound is a classification witness, not an
exception.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .algebra import FiniteAlgebra
from .errors import CarrierTooLarge, NotFLw, NotSmarandache, PPRequired
from .operators import (
    UnaryMap,
    Witness,
    certify_vto,
    enumerate_interior,
    enumerate_vto,
    is_vto,
)

DEFAULT_SMARANDACHE_CAP = 16


def smarandache_cap() -> int:
    raw = os.environ.get("PSBCK_MAX_N")
    if raw is None:
        return DEFAULT_SMARANDACHE_CAP
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_SMARANDACHE_CAP


def _least(A: FiniteAlgebra, candidates) -> int | None:
    for m in candidates:
        if all(A.leq(m, c) for c in candidates):
            return m
    return None


def _greatest(A: FiniteAlgebra, candidates) -> int | None:
    for m in candidates:
        if all(A.leq(c, m) for c in candidates):
            return m
    return None


def meet(A: FiniteAlgebra, x: int, y: int) -> int | None:
    lower = [z for z in A.elements if A.leq(z, x) and A.leq(z, y)]
    return _greatest(A, lower)


def join(A: FiniteAlgebra, x: int, y: int) -> int | None:
    upper = [z for z in A.elements if A.leq(x, z) and A.leq(y, z)]
    return _least(A, upper)


def lattice_tables(A: FiniteAlgebra):
    """(meet table, join table) or (None, witness pair) if not a lattice."""
    n = A.n
    mt = [[0] * n for _ in range(n)]
    jt = [[0] * n for _ in range(n)]
    for x, y in product(A.elements, repeat=2):
        m, j = meet(A, x, y), join(A, x, y)
        if m is None or j is None:
            return None, (x, y)
        mt[x][y], jt[x][y] = m, j
    return (tuple(tuple(r) for r in mt), tuple(tuple(r) for r in jt)), None


@dataclass(frozen=True)
class ProductStructure:
    algebra: FiniteAlgebra
    odot: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...] | None
    join: tuple[tuple[int, ...], ...] | None


def pseudo_product(A: FiniteAlgebra):
    """(ProductStructure, None) or (None, first failing pair)."""
    n = A.n
    table = [[0] * n for _ in range(n)]
    for x, y in product(A.elements, repeat=2):
        s1 = [z for z in A.elements if A.leq(x, A.arrow[y][z])]
        s2 = [z for z in A.elements if A.leq(y, A.squig[x][z])]
        m1, m2 = _least(A, s1), _least(A, s2)
        if m1 is None or m2 is None or m1 != m2:
            return None, (x, y)
        table[x][y] = m1
    lat, _ = lattice_tables(A)
    mt, jt = lat if lat is not None else (None, None)
    return ProductStructure(A, tuple(tuple(r) for r in table), mt, jt), None


def cross_check_product(A: FiniteAlgebra, odot) -> tuple[int, int] | None:
    """First pair where a user-supplied product disagrees with the oracle."""
    ps, wit = pseudo_product(A)
    if ps is None:
        return wit
    for x, y in product(A.elements, repeat=2):
        if odot[x][y] != ps.odot[x][y]:
            return (x, y)
    return None


@dataclass(frozen=True)
class ClassificationReport:
    bounded: bool
    lattice: bool
    pp: bool
    flw: bool
    mtl: bool
    divisible: bool
    bl: bool
    mv: bool
    witnesses: tuple[tuple[str, str], ...] = ()

    def witness(self, level: str) -> str | None:
        return dict(self.witnesses).get(level)

    def levels(self) -> dict[str, bool]:
        return {
            "bounded": self.bounded,
            "lattice": self.lattice,
            "pp": self.pp,
            "flw": self.flw,
            "mtl": self.mtl,
            "divisible": self.divisible,
            "bl": self.bl,
            "mv": self.mv,
        }


def classify(A: FiniteAlgebra) -> ClassificationReport:
    wit: list[tuple[str, str]] = []

    def name_pair(t):
        return ",".join(A.name(v) for v in t)

    bounded = A.zero is not None
    if not bounded:
        wit.append(("bounded", "no bottom element"))

    lat, lat_wit = lattice_tables(A)
    lattice = lat is not None
    if not lattice:
        wit.append(("lattice", f"no bound for ({name_pair(lat_wit)})"))

    ps, pp_wit = pseudo_product(A)
    pp = ps is not None
    if not pp:
        wit.append(("pp", f"no pseudo-product at ({name_pair(pp_wit)})"))

    flw = bounded and lattice and pp
    if flw:
        od = ps.odot
        one = A.one
        for x in A.elements:
            if od[x][one] != x or od[one][x] != x:
                flw = False
                wit.append(("flw", f"unit law fails at {A.name(x)}"))
                break
        if flw:
            for x, y, z in product(A.elements, repeat=3):
                if od[od[x][y]][z] != od[x][od[y][z]]:
                    flw = False
                    wit.append(("flw", f"associativity fails at ({name_pair((x, y, z))})"))
                    break
        if flw:
            for x, y, z in product(A.elements, repeat=3):
                a = A.leq(od[x][y], z)
                if a != A.leq(x, A.arrow[y][z]) or a != A.leq(y, A.squig[x][z]):
                    flw = False
                    wit.append(("flw", f"residuation fails at ({name_pair((x, y, z))})"))
                    break
    elif bounded or lattice or pp:
        wit.append(("flw", "requires bounded + lattice + pseudo-product"))

    mtl = flw
    if flw:
        _, jt = lat
        for x, y in product(A.elements, repeat=2):
            if (
                jt[A.arrow[x][y]][A.arrow[y][x]] != A.one
                or jt[A.squig[x][y]][A.squig[y][x]] != A.one
            ):
                mtl = False
                wit.append(("mtl", f"prelinearity fails at ({name_pair((x, y))})"))
                break

    divisible = flw
    if flw:
        mt, _ = lat
        od = ps.odot
        for x, y in product(A.elements, repeat=2):
            if (
                od[A.arrow[x][y]][x] != mt[x][y]
                or od[x][A.squig[x][y]] != mt[x][y]
            ):
                divisible = False
                wit.append(("divisible", f"divisibility fails at ({name_pair((x, y))})"))
                break

    bl = mtl and divisible
    mv = flw
    if flw:
        _, jt = lat
        for x, y in product(A.elements, repeat=2):
            j = jt[x][y]
            if j != A.squig[A.arrow[x][y]][y] or j != A.arrow[A.squig[x][y]][y]:
                mv = False
                wit.append(("mv", f"join identity fails at ({name_pair((x, y))})"))
                break

    return ClassificationReport(
        bounded, lattice, pp, flw, mtl, divisible, bl, mv, tuple(wit)
    )


# -- very true operators on the richer classes ------------------------


@dataclass(frozen=True)
class PpSuiteReport:
    residuation_transfer: Witness | None  # x(.)y <= z  =>  v(x)(.)v(y) <= v(z)
    submultiplicative: Witness | None     # v(x)(.)v(y) <= v(x(.)y)
    vt4_prime: Witness | None
    vt4_holds: bool
    vt4_prime_holds: bool
    vt4_dprime_holds: bool

    @property
    def ok(self) -> bool:
        return (
            self.residuation_transfer is None
            and self.submultiplicative is None
            and self.vt4_prime is None
            and self.vt4_holds == self.vt4_prime_holds == self.vt4_dprime_holds
        )


def _vt4(A, im) -> bool:
    return all(
        A.leq(im[A.arrow[x][y]], A.arrow[im[x]][im[y]])
        and A.leq(im[A.squig[x][y]], A.squig[im[x]][im[y]])
        for x, y in product(A.elements, repeat=2)
    )


def _vt4_prime(A, im) -> bool:
    return all(
        A.leq(im[A.arrow[x][y]], A.arrow[im[x]][A.arrow[im[z]][im[y]]])
        and A.leq(im[A.squig[x][y]], A.squig[im[x]][A.squig[im[z]][im[y]]])
        for x, y, z in product(A.elements, repeat=3)
    )


def _vt4_dprime(A, od, im) -> bool:
    return all(
        A.leq(od[im[x]][im[y]], im[od[x][y]])
        for x, y in product(A.elements, repeat=2)
    )


def vt_pp_suite(A: FiniteAlgebra, v: UnaryMap) -> PpSuiteReport:
    """Product arithmetic of a very true operator on a pseudo-product algebra.

    Each of the three sub-multiplicativity formulations is evaluated
    independently; on a certified operator they must agree.
    """
    ps, _ = pseudo_product(A)
    if ps is None:
        raise PPRequired("algebra has no pseudo-product")
    certify_vto(A, v)
    od, im = ps.odot, v.image

    rt = None
    for x, y, z in product(A.elements, repeat=3):
        if A.leq(od[x][y], z) and not A.leq(od[im[x]][im[y]], im[z]):
            rt = Witness("pp-transfer", tuple(A.name(t) for t in (x, y, z)))
            break
    sm = None
    for x, y in product(A.elements, repeat=2):
        if not A.leq(od[im[x]][im[y]], im[od[x][y]]):
            sm = Witness("pp-submult", (A.name(x), A.name(y)))
            break
    vp = None
    for x, y, z in product(A.elements, repeat=3):
        if not A.leq(im[A.arrow[x][y]], A.arrow[im[x]][A.arrow[im[z]][im[y]]]):
            vp = Witness("vt4-prime", tuple(A.name(t) for t in (x, y, z)))
            break
        if not A.leq(im[A.squig[x][y]], A.squig[im[x]][A.squig[im[z]][im[y]]]):
            vp = Witness("vt4-prime", tuple(A.name(t) for t in (x, y, z)))
            break

    return PpSuiteReport(
        rt,
        sm,
        vp,
        _vt4(A, im),
        _vt4_prime(A, im),
        _vt4_dprime(A, od, im),
    )


def vt4_equivalence_check(A: FiniteAlgebra, max_n=None) -> bool:
    """The three sub-multiplicativity formulations agree extensionally.

    Quantified over all monotone decreasing idempotent maps fixing 1 (the
    hypotheses shared by all three formulations) on a pseudo-product
    algebra.
    """
    ps, _ = pseudo_product(A)
    if ps is None:
        raise PPRequired("algebra has no pseudo-product")
    od = ps.odot
    for f in enumerate_interior(A, max_n):
        if f.image[A.one] != A.one:
            continue
        a = _vt4(A, f.image)
        if a != _vt4_prime(A, f.image) or a != _vt4_dprime(A, od, f.image):
            return False
    return True


def _require_flw(A: FiniteAlgebra) -> ClassificationReport:
    report = classify(A)
    if not report.flw:
        raise NotFLw("algebra is not a bounded integral residuated lattice")
    return report


def is_vto_flw(A: FiniteAlgebra, v: UnaryMap) -> Witness | None:
    """VT1-VT4 plus the join axiom VT5; on success the equality variant holds."""
    _require_flw(A)
    w = is_vto(A, v)
    if w is not None:
        return w
    im = v.image
    for x, y in product(A.elements, repeat=2):
        j = join(A, x, y)
        if not A.leq(im[j], join(A, im[x], im[y])):
            return Witness("VT5", (A.name(x), A.name(y)))
    # VT5 + monotonicity force equality over joins
    for x, y in product(A.elements, repeat=2):
        if im[join(A, x, y)] != join(A, im[x], im[y]):
            return Witness("VT5-equality", (A.name(x), A.name(y)))
    return None


def enumerate_vto_flw(A: FiniteAlgebra, max_n=None) -> list[UnaryMap]:
    _require_flw(A)
    return [v for v in enumerate_vto(A, max_n) if is_vto_flw(A, v) is None]


@dataclass(frozen=True)
class CharacterizationResult:
    left: bool
    right: bool

    @property
    def agree(self) -> bool:
        return self.left == self.right


def mtl_characterization(A: FiniteAlgebra, max_n=None) -> CharacterizationResult:
    """Prelinearity holds iff every join-compatible operator splits 1.

    Left: every enumerated VT1-VT5 operator v satisfies
    v(x->y) v v(y->x) = 1 (and the ~> twin).  Right: prelinearity.
    """
    _require_flw(A)
    left = True
    for v in enumerate_vto_flw(A, max_n):
        im = v.image
        for x, y in product(A.elements, repeat=2):
            if (
                join(A, im[A.arrow[x][y]], im[A.arrow[y][x]]) != A.one
                or join(A, im[A.squig[x][y]], im[A.squig[y][x]]) != A.one
            ):
                left = False
                break
        if not left:
            break
    right = classify(A).mtl
    return CharacterizationResult(left, right)


def mv_characterization(A: FiniteAlgebra, max_n=None) -> CharacterizationResult:
    """Involutive join identities hold for all operators iff the algebra is MV."""
    _require_flw(A)
    left = True
    for v in enumerate_vto_flw(A, max_n):
        im = v.image
        for x, y in product(A.elements, repeat=2):
            j = im[join(A, x, y)]
            if (
                j != A.squig[A.arrow[im[x]][im[y]]][im[y]]
                or j != A.arrow[A.squig[im[x]][im[y]]][im[y]]
            ):
                left = False
                break
        if not left:
            break
    right = classify(A).mv
    return CharacterizationResult(left, right)


# -- Smarandache substructures -----------------------------------------


def _closed_subsets_with_bounds(A: FiniteAlgebra, max_n):
    cap = max_n if max_n is not None else smarandache_cap()
    if A.n > cap:
        raise CarrierTooLarge(f"carrier size {A.n} exceeds subset cap {cap}")
    must = 1 << A.one | 1 << A.zero
    free = [x for x in A.elements if not must >> x & 1]
    out = []
    for bits in range(1 << len(free)):
        mask = must
        for i, x in enumerate(free):
            if bits >> i & 1:
                mask |= 1 << x
        members = [x for x in A.elements if mask >> x & 1]
        if len(members) < 3 or len(members) == A.n:
            continue
        if all(
            mask >> A.arrow[x][y] & 1 and mask >> A.squig[x][y] & 1
            for x, y in product(members, repeat=2)
        ):
            out.append(frozenset(members))
    out.sort(key=lambda s: (len(s), sum(1 << x for x in s)))
    return out


def smarandache_search(A: FiniteAlgebra, max_n=None):
    """All proper implication-closed Q with 0,1 in Q, |Q| >= 3, whose
    induced structure is a pseudo-MTL algebra.

    Returns (Q, induced subalgebra, ClassificationReport) triples ordered
    by (cardinality, bitset value).
    """
    if A.zero is None:
        raise NotSmarandache("Smarandache structures need a bounded algebra")
    results = []
    for q in _closed_subsets_with_bounds(A, max_n):
        sub = A.subalgebra(q)
        report = classify(sub)
        if report.mtl:
            results.append((q, sub, report))
    return results


def _certify_smarandache(A: FiniteAlgebra, q) -> FiniteAlgebra:
    q = frozenset(q)
    if A.zero is None or A.zero not in q or A.one not in q:
        raise NotSmarandache("Q must contain both constants")
    if not 3 <= len(q) < A.n:
        raise NotSmarandache("Q must be proper with at least 3 elements")
    for x, y in product(sorted(q), repeat=2):
        if A.arrow[x][y] not in q or A.squig[x][y] not in q:
            raise NotSmarandache("Q is not closed under the implications")
    sub = A.subalgebra(q)
    if not classify(sub).mtl:
        raise NotSmarandache("Q does not carry a pseudo-MTL structure")
    return sub


def svto(A: FiniteAlgebra, q, max_n=None) -> list[UnaryMap]:
    """All VT1-VT5 operators on the substructure Q, lexicographic order."""
    sub = _certify_smarandache(A, q)
    return enumerate_vto_flw(sub, max_n)


def restrict_vto(A: FiniteAlgebra, v: UnaryMap, q):
    """(restriction of v to Q, None) or (None, reason)."""
    certify_vto(A, v)
    sub = _certify_smarandache(A, q)
    members = sorted(frozenset(q))
    if any(v.image[x] not in frozenset(q) for x in members):
        return None, "v does not map Q into Q"
    pos = {x: i for i, x in enumerate(members)}
    restr = UnaryMap(sub, tuple(pos[v.image[x]] for x in members))
    w = is_vto_flw(sub, restr)
    if w is not None:
        return None, f"restriction fails {w}"
    return restr, None


def flw_arithmetic_suite(A: FiniteAlgebra) -> Witness | None:
    """Residuated-lattice arithmetic that must hold on every certified
    bounded integral residuated lattice (first counterexample or None)."""
    report = _require_flw(A)
    assert report.flw
    ps, _ = pseudo_product(A)
    od = ps.odot
    lat, _ = lattice_tables(A)
    mt, jt = lat
    ar, sq, leq = A.arrow, A.squig, A.leq
    for x, y in product(A.elements, repeat=2):
        if not leq(od[x][y], x) or not leq(od[x][y], y):
            return Witness("product-below-factors", (A.name(x), A.name(y)))
    for x, y, z in product(A.elements, repeat=3):
        if not (
            leq(ar[x][y], ar[od[x][z]][od[y][z]])
            and leq(ar[od[x][z]][od[y][z]], ar[x][ar[z][y]])
            and leq(sq[x][y], sq[od[z][x]][od[z][y]])
            and leq(sq[od[z][x]][od[z][y]], sq[x][sq[z][y]])
        ):
            return Witness("product-monotone", tuple(A.name(t) for t in (x, y, z)))
        if not leq(od[ar[x][y]][x], mt[x][y]) or not leq(od[x][sq[x][y]], mt[x][y]):
            return Witness("semidivisibility", (A.name(x), A.name(y)))
        if (
            mt[ar[x][z]][ar[y][z]] != ar[jt[x][y]][z]
            or mt[sq[x][z]][sq[y][z]] != sq[jt[x][y]][z]
        ):
            return Witness("join-to-meet", tuple(A.name(t) for t in (x, y, z)))
        if not (
            leq(jt[x][y], mt[sq[ar[x][y]][y]][sq[ar[y][x]][x]])
            and leq(jt[x][y], mt[ar[sq[x][y]][y]][ar[sq[y][x]][x]])
        ):
            return Witness("join-bound", (A.name(x), A.name(y)))
    return None
