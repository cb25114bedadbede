import pytest
from helpers import random_contexts

from triclique import fixtures
from triclique.context import triset_leq
from triclique.enumeration import WeededSystem
from triclique.errors import InputError
from triclique.operators import ORDERINGS, h_close, sigma_close
from triclique.witnesses import (
    check_non_commutativity,
    ferrers_witness,
    find_monotonicity_witness,
    global_closure_obstructions,
    is_monotone_on,
    no_global_closure_condition,
    same_extent_antiordinal_pairs,
)


def test_k1_full_witness():
    ctx = fixtures.K1()
    w = find_monotonicity_witness(ctx, "123", "full")
    assert w.lower == ctx.triple(["u1", "u2"], ["t1"], ["r1"])
    assert w.upper == ctx.triple(["u1", "u2"], ["t1"], ["r1", "r2"])
    assert triset_leq(w.lower, w.upper) and not triset_leq(w.closed_lower, w.closed_upper)


def test_k1_exact_weeding_still_has_a_witness():
    # A proper triset sitting under the removed generator keeps the violation.
    ctx = fixtures.K1()
    w = find_monotonicity_witness(ctx, "123", "weeded")
    assert w.lower == ctx.triple(["u1"], ["t1"], ["r1"])
    assert w.upper == ctx.triple(["u1", "u2"], ["t1"], ["r1", "r2"])


@pytest.mark.parametrize("name", ["K1", "K2", "K4"])
def test_downward_weeding_is_monotone(name):
    ctx = fixtures.NAMED[name]()
    for order in ORDERINGS:
        assert is_monotone_on(ctx, order, "weeded-downward")


def test_downward_weeding_monotone_random():
    for ctx in random_contexts(15, shape=(3, 3, 2), seed=4):
        assert find_monotonicity_witness(ctx, "123", WeededSystem(ctx, "downward")) is None


def test_diagonal_bottom_class():
    d2 = fixtures.diagonal_context(2)
    assert find_monotonicity_witness(d2, "123", "full") is None
    w = find_monotonicity_witness(d2, "123", "full", include_bottom=True)
    assert w is not None and w.lower.has_empty_product()


def test_unknown_domain():
    with pytest.raises(InputError):
        find_monotonicity_witness(fixtures.K1(), "123", "weeded-sideways")


def test_antiordinal_pairs():
    k1 = fixtures.K1()
    assert same_extent_antiordinal_pairs(k1) == [
        (k1.triple(["u1", "u2"], ["t1"], ["r1", "r2"]), k1.triple(["u1", "u2"], ["t1", "t2"], ["r1"]))
    ]
    assert same_extent_antiordinal_pairs(fixtures.diagonal_context(2)) == []
    assert same_extent_antiordinal_pairs(fixtures.power_context(2))


def test_no_global_closure():
    k1 = fixtures.K1()
    c1, c2, s = no_global_closure_condition(k1)
    assert s == k1.triple(["u1", "u2"], ["t1"], ["r1"])
    assert {c1, c2} == {
        k1.triple(["u1", "u2"], ["t1"], ["r1", "r2"]),
        k1.triple(["u1", "u2"], ["t1", "t2"], ["r1"]),
    }
    assert no_global_closure_condition(fixtures.diagonal_context(3)) is None
    k4 = fixtures.K4()
    meets = {m for _, _, m in global_closure_obstructions(k4)}
    assert k4.triple(["u1"], ["t4"], ["r1"]) in meets


def test_non_commutativity():
    k4 = fixtures.K4()
    o1, o2, s = check_non_commutativity(k4)
    assert s == k4.triple(["u1"], ["t4"], ["r1"])
    assert sigma_close(k4, o1, sigma_close(k4, o2, s)) != sigma_close(k4, o2, sigma_close(k4, o1, s))
    k1 = fixtures.K1()
    o1, o2, s = check_non_commutativity(k1)
    assert (str(o1), str(o2)) == ("123", "132")
    assert s == k1.triple(["u1", "u2"], ["t1"], ["r1"])
    assert check_non_commutativity(fixtures.diagonal_context(2)) is None


def test_ferrers_witness_on_shared_extent():
    k1 = fixtures.K1()
    x = k1.mask(1, ["u1", "u2"])
    w = ferrers_witness(k1, x)
    assert w is not None and w.lower.x == w.upper.x == x
    assert h_close(k1, w.lower) == w.closed_lower
