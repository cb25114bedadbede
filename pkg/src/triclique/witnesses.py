"""Searches for the negative results: non-monotone pairs, non-commuting
orderings, and concept pairs that rule out a global closure operator.

Trisets with an empty product are all equivalent under product inclusion
but are sent by the closures to different concepts.  The searches leave
this bottom class out unless ``include_bottom`` is set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .context import TriContext, Triple, all_trisets, supermasks, triset_leq
from .enumeration import WEEDING_MODES, WeededSystem, brute_force_triconcepts, switching_generators
from .errors import InputError
from .operators import H_ORDER, ORDERINGS, AxisOrdering, sigma_close


@dataclass(frozen=True)
class MonotonicityWitness:
    lower: Triple
    upper: Triple
    closed_lower: Triple
    closed_upper: Triple


def resolve_domain(ctx: TriContext, domain, cap: int | None = None) -> frozenset[Triple]:
    """Materialise a domain given as ``"full"``, ``"weeded"``,
    ``"weeded-downward"``, a :class:`WeededSystem` or an iterable of trisets."""
    if isinstance(domain, str):
        if domain == "full":
            return frozenset(all_trisets(ctx, cap))
        if domain == "weeded":
            domain = WeededSystem(ctx, "exact", cap)
        elif domain.startswith("weeded-") and domain[7:] in WEEDING_MODES:
            domain = WeededSystem(ctx, domain[7:], cap)
        else:
            raise InputError(f"unknown domain {domain!r}")
    if isinstance(domain, WeededSystem):
        return frozenset(domain.trisets())
    ctx.check_size(cap)
    return frozenset(domain)


def _as_order(order) -> AxisOrdering:
    return order if isinstance(order, AxisOrdering) else AxisOrdering.parse(order)


def find_monotonicity_witness(
    ctx: TriContext,
    order: AxisOrdering | str = H_ORDER,
    domain="full",
    include_bottom: bool = False,
    cap: int | None = None,
) -> MonotonicityWitness | None:
    """First pair ``lower ⊑ upper`` of the domain whose closures are not ⊑-ordered.

    Lower candidates are tried in this order: proper switching generators,
    other trisets with non-empty product (by product size), then, with
    ``include_bottom``, the empty-product trisets.  For each lower the
    triconcepts above it are preferred to other trisets.
    """
    order = _as_order(order)
    members = resolve_domain(ctx, domain, cap)
    concepts = brute_force_triconcepts(ctx, cap)
    concept_set = set(concepts)
    generators = {g.triset for g in switching_generators(ctx, concepts=concepts)}
    closed = {t: sigma_close(ctx, order, t) for t in members}

    def rank(t: Triple) -> tuple:
        return (t.product_size(), ctx.sort_key(t))

    def upper_rank(t: Triple) -> tuple:
        return (t not in concept_set,) + rank(t)

    proper = [t for t in members if not t.has_empty_product()]
    full_flat = (1 << ctx.flat_size()) - 1
    for x in sorted(proper, key=lambda t: (t not in generators,) + rank(t)):
        cx = closed[x]
        bad = []
        for mask in supermasks(ctx.flat_mask(x), full_flat):
            y = ctx.unflat_mask(mask)
            if y in closed and not triset_leq(cx, closed[y]):
                bad.append(y)
        if bad:
            y = min(bad, key=upper_rank)
            return MonotonicityWitness(x, y, cx, closed[y])

    if include_bottom:
        uppers = sorted(members, key=upper_rank)
        for x in sorted((t for t in members if t.has_empty_product()), key=rank):
            for y in uppers:
                if not triset_leq(closed[x], closed[y]):
                    return MonotonicityWitness(x, y, closed[x], closed[y])
    return None


def is_monotone_on(
    ctx: TriContext, order: AxisOrdering | str, domain, include_bottom: bool = False, cap: int | None = None
) -> bool:
    return find_monotonicity_witness(ctx, order, domain, include_bottom, cap) is None


def ferrers_witness(ctx: TriContext, x: int, cap: int | None = None) -> MonotonicityWitness | None:
    """A violation of h-monotonicity between two trisets that both have extent ``x``."""
    same_extent = [t for t in all_trisets(ctx, cap) if t.x == x]
    return find_monotonicity_witness(ctx, H_ORDER, same_extent, cap=cap)


def same_extent_antiordinal_pairs(ctx: TriContext, cap: int | None = None) -> list[tuple[Triple, Triple]]:
    """Concept pairs with one extent, strictly growing intent and strictly shrinking modus.

    Only triconcepts with a non-empty product are paired.
    """
    concepts = [c for c in brute_force_triconcepts(ctx, cap) if not c.has_empty_product()]
    return [
        (c1, c2)
        for c1 in concepts
        for c2 in concepts
        if c1.x == c2.x
        and c1.y != c2.y and c1.y & c2.y == c1.y
        and c1.z != c2.z and c1.z & c2.z == c2.z
    ]


def global_closure_obstructions(
    ctx: TriContext, cap: int | None = None
) -> list[tuple[Triple, Triple, Triple]]:
    """Every pair of distinct triconcepts whose meet has a non-empty product,
    with that meet; ordered by meet size, then canonically."""
    concepts = brute_force_triconcepts(ctx, cap)
    out = [(c1, c2, c1.meet(c2)) for c1, c2 in combinations(concepts, 2)]
    out = [item for item in out if not item[2].has_empty_product()]
    out.sort(key=lambda item: (item[2].product_size(), ctx.sort_key(item[2])))
    return out


def no_global_closure_condition(
    ctx: TriContext, cap: int | None = None
) -> tuple[Triple, Triple, Triple] | None:
    """Two concepts sharing a proper meet, which then has no consistent image."""
    found = global_closure_obstructions(ctx, cap)
    return found[0] if found else None


def check_non_commutativity(
    ctx: TriContext,
    cap: int | None = None,
    include_bottom: bool = False,
    candidates: Iterable[Triple] | None = None,
) -> tuple[AxisOrdering, AxisOrdering, Triple] | None:
    """Orderings ``o1 < o2`` and a triset on which the two compositions differ.

    Switching generators are tried first, then the other trisets, each group
    by product size and canonical order.
    """
    if candidates is None:
        generators = {g.triset for g in switching_generators(ctx, cap=cap)}
        pool = [t for t in all_trisets(ctx, cap) if include_bottom or not t.has_empty_product()]
        candidates = sorted(
            pool,
            key=lambda t: (t.has_empty_product(), t not in generators, t.product_size(), ctx.sort_key(t)),
        )
    for s in candidates:
        images = {o: sigma_close(ctx, o, s) for o in ORDERINGS}
        for o1, o2 in combinations(ORDERINGS, 2):
            if sigma_close(ctx, o1, images[o2]) != sigma_close(ctx, o2, images[o1]):
                return o1, o2, s
    return None
