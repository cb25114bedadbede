import pytest

from triclique import fixtures
from triclique.errors import InputError
from triclique.mrd import encode_tripartite
from triclique.setsys import (
    ExplicitFamily,
    ccs_explicit_family,
    is_accessible,
    is_closure_system,
    is_confluent,
    is_independence_system,
    is_strongly_accessible,
    property_table,
    strong_accessibility_counterexample,
    weeded_flat_family,
)


def fam(*sets):
    return ExplicitFamily.of("abc", sets)


def test_family_validation():
    with pytest.raises(InputError):
        ExplicitFamily(("a",), frozenset())
    with pytest.raises(InputError):
        fam("d")
    assert fam("", "ab").sets() == [frozenset(), frozenset("ab")]


def test_accessible():
    assert is_accessible(fam("", "a", "ab"))
    assert not is_accessible(fam("", "ab"))


def test_independence():
    assert is_independence_system(fam("", "a", "b", "ab"))
    assert not is_independence_system(fam("", "a", "ab"))


def test_confluent():
    assert is_confluent(fam("", "a", "ab", "ac", "abc"))
    assert not is_confluent(fam("", "a", "ab", "ac"))
    # Disjoint members only share the empty set.
    disjoint = fam("", "a", "b")
    assert is_confluent(disjoint)
    assert not is_confluent(disjoint, allow_empty_common=True)


def test_strong_accessibility():
    assert is_strongly_accessible(fam("", "a", "ab", "abc"))
    gap = ExplicitFamily.of("abcd", ["", "a", "ab", "ac", "abcd", "abc"])
    assert is_strongly_accessible(gap)
    bad = ExplicitFamily.of("abcd", ["", "a", "b", "ab", "ac", "acd", "abcd", "bd"])
    assert not is_strongly_accessible(bad)
    x, y = strong_accessibility_counterexample(bad)
    assert x & y == x and x != y
    assert not is_strongly_accessible(fam("", "abc"))


def test_closure_system():
    assert is_closure_system(fam("", "a", "b", "abc"))
    assert not is_closure_system(fam("", "ab", "bc", "abc"))
    assert not is_closure_system(fam("", "a"))


def test_weeded_k1_verdicts():
    table = property_table(weeded_flat_family(fixtures.K1()))
    assert table["accessible"] and table["strongly_accessible"]
    assert not table["independence_system"] and not table["closure_system"]
    assert not table["confluent"] and not table["confluent_empty_common"]


def test_weeded_without_empty_set():
    table = property_table(weeded_flat_family(fixtures.K1(), include_empty=False))
    assert not table["accessible"]


def test_weeded_k4_exact_not_strongly_accessible():
    assert not is_strongly_accessible(weeded_flat_family(fixtures.K4()))
    assert is_strongly_accessible(weeded_flat_family(fixtures.K4(), "downward"))


@pytest.mark.parametrize("name", ["K1", "K2", "K3", "K4"])
def test_ccs_families_strongly_accessible(name):
    assert is_strongly_accessible(ccs_explicit_family(encode_tripartite(fixtures.NAMED[name]())))


def test_ccs_folder_graph():
    assert is_strongly_accessible(ccs_explicit_family(fixtures.idempotency_example()))
