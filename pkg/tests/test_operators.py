import pytest

from psbck import goldens
from psbck.errors import CarrierTooLarge, GlivenkoRequired, NotVto
from psbck.operators import (
    UnaryMap,
    compose,
    certify_vto,
    enumerate_closure,
    enumerate_interior,
    enumerate_vto,
    fix_points,
    globalization,
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

FOUR_INTO = [
    ("1", "a", "a", "a"),
    ("1", "a", "b", "a"),
    ("1", "a", "b", "c"),
    ("1", "a", "c", "c"),
    ("a", "a", "a", "a"),
    ("b", "a", "b", "a"),
    ("b", "a", "b", "c"),
    ("c", "a", "c", "c"),
]

FOUR_VTO = FOUR_INTO[:4]

SIX_VTO = [
    ("1", "a", "b", "c", "d", "e"),
    ("1", "a", "e", "a", "a", "e"),
    ("1", "a", "e", "a", "d", "e"),
    ("1", "a", "e", "c", "a", "e"),
    ("1", "e", "b", "b", "b", "e"),
    ("1", "e", "b", "b", "d", "e"),
    ("1", "e", "b", "c", "b", "e"),
    ("1", "e", "e", "c", "e", "e"),
    ("1", "e", "e", "e", "d", "e"),
    ("1", "e", "e", "e", "e", "e"),
]

SM_VTO = [
    ("0", "0", "0", "0", "0", "1"),
    ("0", "0", "0", "c", "d", "1"),
    ("0", "0", "0", "d", "d", "1"),
    ("0", "a", "a", "c", "d", "1"),
    ("0", "a", "b", "c", "d", "1"),
]


def test_interior_enumeration_four_element(four_elt):
    assert [f.names() for f in enumerate_interior(four_elt)] == FOUR_INTO


def test_vto_enumeration_four_element(four_elt):
    assert [f.names() for f in enumerate_vto(four_elt)] == FOUR_VTO


def test_vto_enumeration_six_element(six_elt):
    got = sorted(f.names() for f in enumerate_vto(six_elt))
    assert got == sorted(SIX_VTO)


def test_vto_enumeration_smarandache(six_sm):
    got = sorted(f.names() for f in enumerate_vto(six_sm))
    assert got == sorted(SM_VTO)


def test_vto_subset_of_interior(four_elt, six_elt, six_sm):
    for A in (four_elt, six_elt, six_sm):
        into = {f.image for f in enumerate_interior(A)}
        assert all(v.image in into for v in enumerate_vto(A))


def test_closure_enumeration_contains_identity(four_elt):
    clo = enumerate_closure(four_elt)
    assert identity_map(four_elt).image in {f.image for f in clo}
    assert all(is_closure(four_elt, f) is None for f in clo)


def _by_names(A, names):
    return UnaryMap(A, tuple(A.index(n) for n in names))


def test_composition_golden(four_elt):
    A = four_elt
    v1, v2, v4 = (_by_names(A, n) for n in (FOUR_VTO[0], FOUR_VTO[1], FOUR_VTO[3]))
    assert compose(v1, v2).image == compose(v2, v1).image == v1.image
    assert is_vto(A, compose(v1, v2)) is None
    assert compose(v4, v2).image != compose(v2, v4).image
    assert is_vto(A, compose(v4, v2)) is not None


def test_one_sided_composition_can_succeed_without_commuting(four_elt):
    # v2 after v4 lands on v1, a certified operator, although the
    # reversed composite fails; hence the commutation law must quantify
    # over both composites.
    A = four_elt
    v1, v2, v4 = (_by_names(A, n) for n in (FOUR_VTO[0], FOUR_VTO[1], FOUR_VTO[3]))
    assert compose(v2, v4).image == v1.image
    assert is_vto(A, compose(v2, v4)) is None
    assert compose(v2, v4).image != compose(v4, v2).image


def test_globalization_and_identity(four_elt, six_sm):
    for A in (four_elt, six_sm):
        assert is_vto(A, identity_map(A)) is None
        assert is_vto(A, globalization(A)) is None


def test_vto_maps_kernel_and_fixpoints(four_elt):
    for v in enumerate_vto(four_elt):
        assert kernel(v) == frozenset({four_elt.one})
        assert image_set(v) == fix_points(v)


def test_certify_vto_raises(four_elt):
    bad = UnaryMap(four_elt, (0, 0, 0, 0))
    with pytest.raises(NotVto):
        certify_vto(four_elt, bad)


def test_hedges_are_closures_and_satisfy_axioms(six_elt):
    A = six_elt
    for v in enumerate_vto(A):
        s1, s2 = sigma_hedges(A, v)
        assert is_closure(A, s1) is None and is_closure(A, s2) is None
        assert is_vtst(A, v, s1, s2) is None
        ident = identity_map(A)
        assert is_vtst(A, v, ident, ident) is None
        assert ident <= s1 and ident <= s2


def test_lift_to_reg_involutive_is_original(six_elt):
    # every element is regular, so the lift is the operator itself
    for v in enumerate_vto(six_elt):
        sub, lifted = lift_to_reg(six_elt, v, "vto")
        assert sub == six_elt
        assert lifted.image == v.image


def test_lift_to_reg_smarandache(six_sm):
    for v in enumerate_vto(six_sm):
        sub, lifted = lift_to_reg(six_sm, v, "vto")
        assert sub.element_names == ("0", "1")
        assert is_vto(sub, lifted) is None


def test_lift_to_den_quotient_smarandache(six_sm):
    # the quotient collapses the five dense elements onto the class of 1
    for v in enumerate_vto(six_sm):
        quot, lifted = lift_to_den_quotient(six_sm, v, "vto")
        assert quot.algebra.n == 2
        assert is_vto(quot.algebra, lifted) is None


def test_lift_to_den_quotient_direct_image_would_disagree(six_sm):
    # globalization sends the dense element a to 0, so applying the
    # operator to raw representatives is not constant on the class of 1;
    # the double-negation form is what the lift must use
    A = six_sm
    v = globalization(A)
    a = A.index("a")
    assert A.double_neg_ms(a) == A.one
    assert v.image[a] == A.zero and v.image[A.one] == A.one
    quot, lifted = lift_to_den_quotient(A, v, "vto")
    assert lifted.image == identity_map(quot.algebra).image


def test_lift_requires_glivenko(four_elt):
    with pytest.raises(GlivenkoRequired):
        lift_to_reg(four_elt, identity_map(four_elt), "vto")


def test_interior_lifts(six_sm):
    for f in enumerate_interior(six_sm):
        sub, lifted = lift_to_reg(six_sm, f, "interior")
        assert is_interior(sub, lifted) is None
        quot, liftq = lift_to_den_quotient(six_sm, f, "interior")
        assert is_interior(quot.algebra, liftq) is None


def test_enumeration_cap():
    A = goldens.six_element_involutive()
    with pytest.raises(CarrierTooLarge):
        enumerate_vto(A, max_n=4)
