"""Every theorem of the library as an executable property.

``run_suite`` takes one certified algebra and grinds through all invariant
families that apply to it (operator laws, deduction/quotient laws,
homomorphism transport, class-tower facts), returning one named result per
family.  Anything failing here on a certified algebra is a build-rejecting
bug, not a data problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .algebra import FiniteAlgebra, derived_law_suite
from .classes import (
    classify,
    flw_arithmetic_suite,
    join,
    mtl_characterization,
    mv_characterization,
    smarandache_search,
    svto,
    vt4_equivalence_check,
    vt_pp_suite,
)
from .deduction import (
    DeductiveSystem,
    congruence_from,
    enumerate_ds,
    enumerate_ds_v,
    lift_vto_to_quotient,
    vto_congruence_check,
)
from .morphisms import (
    VtHomomorphism,
    enumerate_hom,
    factor,
    first_isomorphism,
    is_hom,
    transport,
)
from .operators import (
    UnaryMap,
    compose,
    enumerate_interior,
    enumerate_vto,
    fix_points,
    identity_map,
    image_set,
    is_closure,
    is_interior,
    is_vto,
    is_vtst,
    kernel,
    lift_to_den_quotient,
    lift_to_reg,
    sigma_hedges,
)
from .valuations import compose_with_vto, certify as certify_valuation


@dataclass(frozen=True)
class SuiteResult:
    name: str
    ok: bool
    detail: str = ""


def _all(name, pairs) -> SuiteResult:
    for ok, detail in pairs:
        if not ok:
            return SuiteResult(name, False, detail)
    return SuiteResult(name, True)


def run_suite(A: FiniteAlgebra, hom_limit: int = 8) -> list[SuiteResult]:
    out: list[SuiteResult] = []
    add = out.append

    # algebra-level self tests
    laws = derived_law_suite(A)
    add(_all("derived-laws", ((r.ok, f"{r.law}[{','.join(r.witness)}]") for r in laws)))
    add(
        _all(
            "order-agreement",
            (
                ((A.arrow[x][y] == A.one) == (A.squig[x][y] == A.one), f"{x},{y}")
                for x, y in product(A.elements, repeat=2)
            ),
        )
    )

    into = enumerate_interior(A)
    vto = enumerate_vto(A)
    into_set = {f.image for f in into}
    add(SuiteResult("vto-subset-into", all(v.image in into_set for v in vto)))

    # pointwise-order vs absorption for interior operators
    def phi_le_psi(f, g):
        return all(A.leq(a, b) for a, b in zip(f.image, g.image))

    add(
        _all(
            "interior-absorption",
            (
                (
                    phi_le_psi(f, g) == (compose(f, g).image == f.image),
                    f"{f.names()}/{g.names()}",
                )
                for f, g in product(into, repeat=2)
            ),
        )
    )

    # commutation <=> both composites interior <=> both composites idempotent
    def three_way(f, g):
        fg, gf = compose(f, g), compose(g, f)
        a = fg.image == gf.image
        b = is_interior(A, fg) is None and is_interior(A, gf) is None
        c = (
            compose(fg, fg).image == fg.image
            and compose(gf, gf).image == gf.image
        )
        return a == b == c

    add(
        _all(
            "interior-commutation",
            ((three_way(f, g), f"{f.names()}/{g.names()}") for f, g in product(into, repeat=2)),
        )
    )

    add(
        _all(
            "interior-fix-injective",
            (
                (fix_points(f) != fix_points(g) or f.image == g.image, f"{f.names()}/{g.names()}")
                for f, g in combinations(into, 2)
            ),
        )
    )
    add(
        _all(
            "vto-image-injective",
            (
                (image_set(f) != image_set(g) or f.image == g.image, f"{f.names()}/{g.names()}")
                for f, g in combinations(vto, 2)
            ),
        )
    )
    add(
        _all(
            "vto-composition-commutation",
            (
                (
                    (
                        is_vto(A, compose(f, g)) is None
                        and is_vto(A, compose(g, f)) is None
                    )
                    == (compose(f, g).image == compose(g, f).image),
                    f"{f.names()}/{g.names()}",
                )
                for f, g in product(vto, repeat=2)
            ),
        )
    )

    def vto_arithmetic(v):
        im = v.image
        one = A.one
        for x in A.elements:
            if (im[x] == one) != (x == one):
                return False, f"split-1 at {A.name(x)}"
            if im[im[x]] != im[x]:
                return False, f"idempotence at {A.name(x)}"
        for x, y in product(A.elements, repeat=2):
            if A.leq(x, y) and not A.leq(im[x], im[y]):
                return False, f"monotone at {A.name(x)},{A.name(y)}"
            if A.leq(im[x], y) != A.leq(im[x], im[y]):
                return False, f"galois at {A.name(x)},{A.name(y)}"
        if image_set(v) != fix_points(v):
            return False, "image/fix mismatch"
        if kernel(v) != frozenset({one}):
            return False, "kernel not {1}"
        if image_set(v) == frozenset(A.elements) and im != identity_map(A).image:
            return False, "surjective but not identity"
        mem = kernel(v)
        if not all(
            y in mem
            for x in mem
            for y in A.elements
            if A.arrow[x][y] in mem
        ):
            return False, "kernel not deductive"
        return True, ""

    add(_all("vto-arithmetic", (vto_arithmetic(v) for v in vto)))

    if A.bounded:
        nm, ns = A.neg_minus, A.neg_sim

        def interior_neg_arith(f):
            im = f.image
            for x, y in product(A.elements, repeat=2):
                if not A.leq(A.arrow[x][im[y]], A.arrow[im[x]][y]):
                    return False, "exchange-arrow"
                if not A.leq(A.squig[x][im[y]], A.squig[im[x]][y]):
                    return False, "exchange-squig"
                if not A.leq(im[A.arrow[x][y]], A.arrow[im[x]][y]):
                    return False, "apply-arrow"
                if not A.leq(im[A.squig[x][y]], A.squig[im[x]][y]):
                    return False, "apply-squig"
                if not A.leq(im[A.arrow[x][y]], A.squig[nm(y)][nm(x)]):
                    return False, "contraposition-arrow"
                if not A.leq(im[A.squig[x][y]], A.arrow[ns(y)][ns(x)]):
                    return False, "contraposition-squig"
            for x in A.elements:
                if not A.leq(im[nm(x)], nm(im[x])) or not A.leq(im[ns(x)], ns(im[x])):
                    return False, "neg-shrink"
                if not A.leq(x, ns(im[nm(x)])) or not A.leq(x, nm(im[ns(x)])):
                    return False, "neg-expand"
            return im[A.zero] == A.zero, "fixes 0"

        add(_all("interior-negation-arithmetic", (interior_neg_arith(f) for f in into)))

        def hedge_facts(v):
            s1, s2 = sigma_hedges(A, v)
            if is_closure(A, s1) is not None or is_closure(A, s2) is not None:
                return False, "sigma not closure"
            if is_vtst(A, v, s1, s2) is not None:
                return False, "sigma fails hedge axioms"
            ident = identity_map(A)
            if is_vtst(A, v, ident, ident) is not None:
                return False, "identity pair fails hedge axioms"
            # sandwich: Id <= s <= sigma for every certified hedge pair
            for s, sig in ((ident, s1), (ident, s2)):
                if not (ident <= s and s <= sig):
                    return False, "sandwich (identity)"
            if not (ident <= s1 and ident <= s2):
                return False, "sandwich (sigma)"
            return True, ""

        add(_all("hedges", (hedge_facts(v) for v in vto)))

        # composing the unit-cost valuation with any operator stays a valuation
        base = [Fraction(0) if x == A.one else Fraction(1) for x in A.elements]
        phi = certify_valuation(A, base)
        add(
            _all(
                "valuation-composition",
                (
                    (compose_with_vto(A, phi, v) is not None, "")
                    for v in vto
                ),
            )
        )

    # deduction laws
    ds = enumerate_ds(A)
    dsn = [d for d in ds if d.normal]
    whole = frozenset(A.elements)
    top = frozenset({A.one})

    def vds_facts(v):
        fam = enumerate_ds_v(A, v)
        members = {d.members for d in fam}
        if top not in members or whole not in members or kernel(v) not in members:
            return False, "boundary systems missing"
        if not members <= {d.members for d in ds}:
            return False, "not a subfamily of DS"
        return True, ""

    add(_all("vds-family", (vds_facts(v) for v in vto)))

    def quotient_facts(H):
        quot = congruence_from(A, H)
        proj = [quot.class_of[x] for x in A.elements]
        q = quot.algebra
        for x, y in product(A.elements, repeat=2):
            if proj[A.arrow[x][y]] != q.arrow[proj[x]][proj[y]]:
                return False, "projection not a homomorphism"
            if proj[A.squig[x][y]] != q.squig[proj[x]][proj[y]]:
                return False, "projection not a homomorphism"
        ker = frozenset(x for x in A.elements if proj[x] == q.one)
        if ker != H.members:
            return False, "projection kernel differs from H"
        if set(proj) != set(q.elements):
            return False, "projection not surjective"
        return True, ""

    add(_all("quotients", (quotient_facts(H) for H in dsn)))

    def lifted_vto_facts(v):
        for H in enumerate_ds_v(A, v):
            if not H.normal:
                continue
            quot, lifted = lift_vto_to_quotient(A, v, H)
            if is_vto(quot.algebra, lifted) is not None:
                return False, "lifted operator fails"
        return True, ""

    add(_all("quotient-vto", (lifted_vto_facts(v) for v in vto)))
    add(_all("congruence-compatibility", ((vto_congruence_check(A, v), "") for v in vto)))

    if A.bounded and A.is_good() and A.is_glivenko():
        add(
            _all(
                "regular-lift",
                (
                    (is_vto(*lift_to_reg(A, v, "vto")) is None, "")
                    for v in vto
                ),
            )
        )
        add(
            _all(
                "dense-quotient-lift",
                (
                    (
                        is_vto(
                            lift_to_den_quotient(A, v, "vto")[0].algebra,
                            lift_to_den_quotient(A, v, "vto")[1],
                        )
                        is None,
                        "",
                    )
                    for v in vto
                ),
            )
        )
        den = DeductiveSystem.from_members(A, A.dense_elements())
        add(SuiteResult("dense-normal-ds", den.members in {d.members for d in dsn}))

    # homomorphism transport (endomorphisms only, capped)
    if A.n <= hom_limit:
        homs = enumerate_hom(A, A)
        add(_all("homs-preserve", ((is_hom(f) is None, str(f.names())) for f in homs)))
        add(
            _all(
                "homs-monotone",
                (
                    (
                        not A.leq(x, y) or A.leq(f.map[x], f.map[y]),
                        f"{f.names()} at {A.name(x)},{A.name(y)}",
                    )
                    for f in homs
                    for x, y in product(A.elements, repeat=2)
                ),
            )
        )

        def transports(v):
            vhoms = [
                f
                for f in homs
                if all(f.map[v.image[x]] == v.image[f.map[x]] for x in A.elements)
            ]
            for f in vhoms:
                g = VtHomomorphism(f, v, v)
                rep = transport(g)
                if not rep.ok:
                    return False, f"transport {f.names()}"
                res = first_isomorphism(g)
                if not (
                    res.unique
                    and res.image_preserved
                    and res.kernel_is_quotient_of_kernel
                    and res.factored.base.is_injective()
                    and res.factored.base.is_surjective()
                ):
                    return False, f"first-isomorphism {f.names()}"
                for H in enumerate_ds_v(A, v):
                    if not H.normal or not H.members <= f.kernel():
                        continue
                    r = factor(g, H)
                    if not (r.unique and r.image_preserved and r.kernel_is_quotient_of_kernel):
                        return False, f"factor {f.names()} by {H.names()}"
            return True, ""

        add(_all("vthom-transport", (transports(v) for v in vto)))

    # class tower
    report = classify(A)
    incl = (
        (not report.mv or report.bl)
        and (not report.bl or (report.mtl and report.divisible))
        and (not report.mtl or report.flw)
        and (not report.divisible or report.flw)
        and (not report.flw or (report.pp and report.bounded and report.lattice))
    )
    add(SuiteResult("class-inclusions", incl))

    if report.pp:
        add(_all("pp-arithmetic", ((vt_pp_suite(A, v).ok, str(v.names())) for v in vto)))
        add(SuiteResult("vt4-equivalence", vt4_equivalence_check(A)))
    if report.flw:
        w = flw_arithmetic_suite(A)
        add(SuiteResult("flw-arithmetic", w is None, str(w or "")))
        add(SuiteResult("mtl-characterization", mtl_characterization(A).agree))
        add(SuiteResult("mv-characterization", mv_characterization(A).agree))
        # once the join inequality holds, monotonicity forces equality
        def join_equality(v):
            im = v.image
            pairs = list(product(A.elements, repeat=2))
            if any(not A.leq(im[join(A, x, y)], join(A, im[x], im[y])) for x, y in pairs):
                return True, ""
            for x, y in pairs:
                if im[join(A, x, y)] != join(A, im[x], im[y]):
                    return False, f"{v.names()} at {A.name(x)},{A.name(y)}"
            return True, ""

        add(_all("vto-join-equality", (join_equality(v) for v in vto)))

    if A.bounded and A.n <= 12:
        subs = smarandache_search(A)
        nested_ok = True
        detail = ""
        for (q1, _, _), (q2, _, _) in product(subs, repeat=2):
            if not (q1 < q2):
                continue
            for m in svto(A, q2):
                members2 = sorted(q2)
                lifted = {members2[i]: members2[m.image[i]] for i in range(len(members2))}
                if not all(lifted[x] in q1 for x in q1):
                    continue
                sub1 = A.subalgebra(q1)
                pos1 = {x: i for i, x in enumerate(sorted(q1))}
                cand = UnaryMap(sub1, tuple(pos1[lifted[x]] for x in sorted(q1)))
                if cand.image not in {s.image for s in svto(A, q1)}:
                    nested_ok = False
                    detail = f"{sorted(q1)} in {sorted(q2)}"
                    break
            if not nested_ok:
                break
        add(SuiteResult("smarandache-antitone", nested_ok, detail))

    return out
