import pytest

from psbck.deduction import DeductiveSystem
from psbck.errors import KernelContainmentViolated, SurjectivityRequired
from psbck.generate import relabel
from psbck.morphisms import (
    Homomorphism,
    VtHomomorphism,
    enumerate_hom,
    enumerate_vthom,
    factor,
    first_isomorphism,
    is_hom,
    is_isomorphic,
    is_vt_subalgebra,
    is_vthom,
    pushforward_ds,
    transport,
)
from psbck.operators import UnaryMap, enumerate_vto

PSI = [
    ("1", "1", "1", "1", "1", "1"),
    ("1", "a", "b", "c", "d", "e"),
    ("1", "b", "a", "d", "c", "e"),
]


def _hom(A, names):
    return Homomorphism(A, A, tuple(A.index(n) for n in names))


def test_endomorphisms_six_element(six_elt):
    homs = enumerate_hom(six_elt, six_elt)
    assert sorted(f.names() for f in homs) == sorted(PSI)
    assert all(is_hom(f) is None for f in homs)


def test_vthom_families_six_element(six_elt):
    # every map intertwines with the identity operator, so the first
    # operator admits all three endomorphisms just like the last one;
    # the eight in between reject the swap
    A = six_elt
    vto = enumerate_vto(A)
    assert len(vto) == 10
    small = {PSI[0], PSI[1]}
    for v in vto[1:-1]:
        got = {f.names() for f in enumerate_vthom(A, v, A, v)}
        assert got == small, v.names()
    for v in (vto[0], vto[-1]):
        assert {f.names() for f in enumerate_vthom(A, v, A, v)} == set(PSI)


def test_is_hom_witness(six_elt):
    bad = Homomorphism(six_elt, six_elt, tuple([six_elt.index("a")] * 6))
    assert is_hom(bad) is not None


def test_transport_swap_endomorphism(six_elt):
    A = six_elt
    v10 = enumerate_vto(A)[-1]
    psi3 = _hom(A, PSI[2])
    g = VtHomomorphism(psi3, v10, v10)
    assert is_vthom(psi3, v10, v10) is None
    rep = transport(g)
    assert rep.ok
    assert rep.pushforward_ok is True  # psi3 is bijective
    assert rep.kernel == frozenset({A.one})


def test_transport_constant_map_skips_pushforward(six_elt):
    A = six_elt
    v10 = enumerate_vto(A)[-1]
    psi1 = _hom(A, PSI[0])
    rep = transport(VtHomomorphism(psi1, v10, v10))
    assert rep.pushforward_ok is None
    assert rep.image_ker_v_is_uds is None
    assert rep.ok
    with pytest.raises(SurjectivityRequired):
        pushforward_ds(
            VtHomomorphism(psi1, v10, v10),
            DeductiveSystem.from_members(A, {A.one}),
        )


def test_vt_subalgebra_check(six_elt):
    A = six_elt
    v10 = enumerate_vto(A)[-1]
    assert is_vt_subalgebra(A, v10, set(A.elements))
    assert is_vt_subalgebra(A, v10, {A.one, A.index("e")})
    assert not is_vt_subalgebra(A, v10, {A.index("e")})


def test_factor_through_trivial_system(six_elt):
    A = six_elt
    v10 = enumerate_vto(A)[-1]
    psi3 = _hom(A, PSI[2])
    H = DeductiveSystem.from_members(A, {A.one})
    res = factor(VtHomomorphism(psi3, v10, v10), H)
    assert res.unique and res.image_preserved and res.kernel_is_quotient_of_kernel
    assert res.quotient.algebra.n == A.n


def test_factor_requires_kernel_containment(six_elt):
    A = six_elt
    v10 = enumerate_vto(A)[-1]
    psi3 = _hom(A, PSI[2])
    whole = DeductiveSystem.from_members(A, set(A.elements))
    with pytest.raises(KernelContainmentViolated):
        factor(VtHomomorphism(psi3, v10, v10), whole)


def test_first_isomorphism_constant_map(six_elt):
    A = six_elt
    v10 = enumerate_vto(A)[-1]
    psi1 = _hom(A, PSI[0])
    res = first_isomorphism(VtHomomorphism(psi1, v10, v10))
    assert res.quotient.algebra.n == 1
    assert res.factored.base.is_injective()
    assert res.factored.base.is_surjective()
    assert res.unique


def test_first_isomorphism_swap(six_elt):
    A = six_elt
    v10 = enumerate_vto(A)[-1]
    res = first_isomorphism(VtHomomorphism(_hom(A, PSI[2]), v10, v10))
    assert res.quotient.algebra.n == A.n
    assert res.factored.base.is_injective() and res.factored.base.is_surjective()


def test_isomorphism_detection(four_elt, six_elt):
    perm = [3, 0, 2, 1]
    other = relabel(four_elt, perm, prefix="y")
    iso = is_isomorphic(four_elt, other)
    assert iso is not None and is_hom(iso) is None
    assert is_isomorphic(four_elt, six_elt) is None
