import pytest

from triclique import fixtures
from triclique.context import Triple
from triclique.errors import InputError
from triclique.operators import ORDERINGS, AxisOrdering, h_close, is_triconcept, sigma_close


def test_orderings():
    assert len(ORDERINGS) == 6 and len(set(ORDERINGS)) == 6
    assert AxisOrdering.parse("213") == AxisOrdering(2, 1, 3)
    assert str(AxisOrdering(3, 1, 2)) == "312"
    for bad in ("113", "12", "124", (1, 2)):
        with pytest.raises(InputError):
            AxisOrdering.parse(bad)


def test_h_on_k1():
    ctx = fixtures.K1()
    assert h_close(ctx, ctx.triple(["u1", "u2"], ["t1"], ["r1"])) == ctx.triple(["u1", "u2"], ["t1", "t2"], ["r1"])
    y = ctx.triple(["u1", "u2"], ["t1"], ["r1", "r2"])
    assert h_close(ctx, y) == y
    assert h_close(ctx, Triple(0, 0, 0)) == ctx.triple(ctx.objects, ctx.attributes, [])


def test_h_rejects_non_triset():
    ctx = fixtures.K1()
    with pytest.raises(InputError):
        h_close(ctx, ctx.triple(["u1", "u2"], ["t1", "t2"], ["r1", "r2"]))
    with pytest.raises(InputError):
        sigma_close(ctx, "123", ctx.triple(["u1", "u2"], ["t1", "t2"], ["r1", "r2"]))


def test_sigma_on_k4():
    ctx = fixtures.K4()
    s1 = ctx.triple(["u1"], ["t4"], ["r1"])
    assert sigma_close(ctx, "123", s1) == ctx.triple(["u1", "u2", "u3", "u4"], ["t4"], ["r1"])
    assert sigma_close(ctx, "213", s1) == ctx.triple(["u1"], ["t1", "t2", "t3", "t4"], ["r1"])
    assert sigma_close(ctx, "312", s1) == ctx.triple(["u1"], ["t4"], ["r1", "r2", "r3"])


def test_is_triconcept():
    ctx = fixtures.K1()
    assert is_triconcept(ctx, ctx.triple(["u1", "u2"], ["t1", "t2"], ["r1"]))
    assert not is_triconcept(ctx, ctx.triple(["u1", "u2"], ["t1"], ["r1"]))
    assert not is_triconcept(ctx, ctx.triple(["u1", "u2"], ["t1", "t2"], ["r1", "r2"]))
