from itertools import product

import pytest

from psbck import goldens
from psbck.algebra import FiniteAlgebra, derived_law_suite, diagnose, validate
from psbck.errors import MalformedInput, NotCertified, UnboundedAlgebra


def test_goldens_certify(four_elt, six_elt, six_sm):
    assert four_elt.n == 4 and six_elt.n == 6 and six_sm.n == 6


def test_every_single_entry_corruption_is_caught(four_elt):
    A = four_elt
    for tab_name in ("arrow", "squig"):
        base = getattr(A, tab_name)
        for i, j, v in product(range(4), range(4), range(4)):
            if v == base[i][j]:
                continue
            rows = [list(r) for r in base]
            rows[i][j] = v
            t = tuple(tuple(r) for r in rows)
            arrow = t if tab_name == "arrow" else A.arrow
            squig = A.squig if tab_name == "arrow" else t
            assert diagnose(A.element_names, A.one, arrow, squig, A.zero), (
                tab_name,
                i,
                j,
                v,
            )


def test_structural_errors_precede_axioms():
    with pytest.raises(MalformedInput):
        diagnose((), 0, (), ())
    with pytest.raises(MalformedInput):
        diagnose(("1", "1"), 0, ((0, 0), (0, 0)), ((0, 0), (0, 0)))
    with pytest.raises(MalformedInput):
        diagnose(("1", "a"), 0, ((0,), (0, 0)), ((0, 0), (0, 0)))
    with pytest.raises(MalformedInput):
        diagnose(("1", "a"), 5, ((0, 0), (0, 0)), ((0, 0), (0, 0)))
    with pytest.raises(MalformedInput):
        diagnose(("1", "a b"), 0, ((0, 0), (0, 0)), ((0, 0), (0, 0)))


def test_diagnose_reports_each_axiom_with_least_witness():
    # a -> a = a breaks reflexivity on element a (id 1)
    diags = diagnose(
        ("1", "a"), 0, ((0, 1), (0, 1)), ((0, 1), (0, 0))
    )
    axioms = {d.axiom for d in diags}
    assert "psBCK3" in axioms
    d3 = next(d for d in diags if d.axiom == "psBCK3")
    assert d3.witness == ("a",)


def test_validate_raises_with_diagnostics():
    with pytest.raises(NotCertified) as err:
        validate(("1", "a"), 0, ((0, 1), (0, 1)), ((0, 1), (0, 0)))
    assert err.value.diagnostics


def test_order_is_a_chain_on_the_four_element_algebra(four_elt):
    A = four_elt
    a, b, c = A.index("a"), A.index("b"), A.index("c")
    one = A.one
    assert A.is_linear()
    assert A.leq(a, c) and A.leq(c, b) and A.leq(b, one)
    assert not A.leq(b, c)
    assert A.down_set(c) == (a, c) or set(A.down_set(c)) == {a, c}
    assert set(A.up_set(c)) == {one, b, c}


def test_negation_properties(four_elt, six_elt, six_sm):
    assert not four_elt.is_good()
    assert six_elt.is_good() and six_elt.is_involutive() and six_elt.is_glivenko()
    assert six_sm.is_good() and six_sm.is_glivenko() and not six_sm.is_involutive()
    assert sorted(six_elt.name(x) for x in six_elt.dense_elements()) == ["1"]
    assert sorted(six_sm.name(x) for x in six_sm.regular_elements()) == ["0", "1"]
    assert sorted(six_sm.name(x) for x in six_sm.dense_elements()) == [
        "1",
        "a",
        "b",
        "c",
        "d",
    ]


def test_unbounded_negations_raise():
    A = validate(("1",), 0, ((0,),), ((0,),))
    with pytest.raises(UnboundedAlgebra):
        A.neg_minus(0)


def test_derived_laws_hold_on_goldens(four_elt, six_elt, six_sm):
    for A in (four_elt, six_elt, six_sm):
        bad = [r for r in derived_law_suite(A) if not r.ok]
        assert bad == []


def test_subalgebra_requires_closure(six_sm):
    q = {six_sm.index(n) for n in ("0", "c", "d", "1")}
    sub = six_sm.subalgebra(q)
    assert sub.element_names == ("0", "c", "d", "1")
    assert sub.is_linear()
    with pytest.raises(MalformedInput):
        six_sm.subalgebra({six_sm.one, six_sm.index("a"), six_sm.index("d")})
    with pytest.raises(MalformedInput):
        six_sm.subalgebra({six_sm.index("a")})


def test_carrier_cap_enforced():
    with pytest.raises(MalformedInput):
        validate(tuple(f"x{i}" for i in range(5)), 0, (), (), max_n=4)


def test_frozen_and_hashable(four_elt):
    assert four_elt == goldens.four_element_bounded()
    assert hash(four_elt.arrow) is not None
    assert isinstance(four_elt, FiniteAlgebra)
