"""Algebraic laws checked on random small contexts and MRDs."""

from hypothesis import assume, given
from hypothesis import strategies as st
from helpers import context_and_triple, contexts, mrds

from triclique.context import Triple, all_trisets, derive, derive_pairs, flat, triset_leq, tuple_of
from triclique.enumeration import brute_force_triconcepts, fixpoint_triconcepts, switching_generators
from triclique.mrd import add_isolated_elements, ccs_family
from triclique.operators import ORDERINGS, h_close, is_triconcept, sigma_close


@given(context_and_triple())
def test_flat_tuple_round_trip(case):
    ctx, comps = case
    t = Triple(*comps)
    assert tuple_of(ctx, flat(ctx, t)) == t


@given(contexts(), st.data())
def test_derivation_is_antitone(ctx, data):
    pairs = [(m, b) for m in ctx.attributes for b in ctx.conditions]
    small = data.draw(st.sets(st.sampled_from(pairs)))
    big = small | data.draw(st.sets(st.sampled_from(pairs)))
    assert derive(ctx, 1, big) <= derive(ctx, 1, small)


@given(contexts(), st.data())
def test_galois_connection(ctx, data):
    xs = data.draw(st.sets(st.sampled_from(ctx.objects)))
    pairs = [(m, b) for m in ctx.attributes for b in ctx.conditions]
    ps = data.draw(st.sets(st.sampled_from(pairs)))
    assert (xs <= derive(ctx, 1, ps)) == (ps <= derive_pairs(ctx, 1, xs))


@given(contexts(max_axis=3), st.data())
def test_closures_extensive_and_idempotent(ctx, data):
    s = data.draw(st.sampled_from(list(all_trisets(ctx))))
    order = data.draw(st.sampled_from(ORDERINGS))
    image = sigma_close(ctx, order, s)
    assert s.is_subtriple(image)
    assert sigma_close(ctx, order, image) == image
    assert is_triconcept(ctx, image)


@given(contexts(max_axis=3), st.data())
def test_sigma_123_is_h(ctx, data):
    s = data.draw(st.sampled_from(list(all_trisets(ctx))))
    assert sigma_close(ctx, "123", s) == h_close(ctx, s)


@given(contexts())
def test_triconcept_characterisations_agree(ctx):
    brute = brute_force_triconcepts(ctx)
    assert fixpoint_triconcepts(ctx) == brute
    assert all(is_triconcept(ctx, c) for c in brute)
    fixed = {t for t in all_trisets(ctx) if is_triconcept(ctx, t)}
    assert fixed == set(brute)


@given(contexts(max_axis=3))
def test_generators_are_not_triconcepts(ctx):
    concepts = set(brute_force_triconcepts(ctx))
    for g in switching_generators(ctx, include_degenerate=True):
        assert g.triset not in concepts
        assert ctx.is_triset(g.triset)


@given(contexts(max_axis=3), st.data())
def test_h_monotone_off_the_weeded_trouble_spots(ctx, data):
    # Pairs whose lower end lies under no proper generator never break h.
    gens = [g.triset for g in switching_generators(ctx)]
    trisets = [t for t in all_trisets(ctx) if not t.has_empty_product()]
    assume(trisets)
    x = data.draw(st.sampled_from(trisets))
    y = data.draw(st.sampled_from(trisets))
    assume(triset_leq(x, y) and not any(x.is_subtriple(g) for g in gens))
    assert triset_leq(h_close(ctx, x), h_close(ctx, y))


@given(mrds())
def test_g_extensive_and_monotone(mrd):
    fam = [f for f in ccs_family(mrd) if f]
    g = {f: mrd.g_close(f) for f in fam}
    for a in fam:
        assert a & g[a] == a
        assert mrd.is_ccs(g[a])
        for b in fam:
            if a & b == a:
                assert g[a] & g[b] == g[a]


@given(mrds())
def test_g_idempotent_with_isolated_elements(mrd):
    mrd = add_isolated_elements(mrd)
    for f in ccs_family(mrd):
        if f:
            assert mrd.g_close(mrd.g_close(f)) == mrd.g_close(f)
