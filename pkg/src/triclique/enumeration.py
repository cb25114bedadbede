"""Exhaustive ground truth: triconcepts, switching generators, weeded systems.

Everything here is exponential and guarded by the per-axis size cap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator, Protocol

from .context import TriContext, Triple, all_trisets, iter_bits
from .errors import ContractError, InputError
from .operators import h_close


def brute_force_triconcepts(ctx: TriContext, cap: int | None = None) -> list[Triple]:
    """Component-wise maximal triples whose product lies in the incidence.

    Each pair of object and attribute subsets is completed with the largest
    fitting condition set; the maximal candidates are the triconcepts.  This
    route never touches the closure operators it is used to check.
    """
    ctx.check_size(cap)
    candidates = {
        Triple(x, y, ctx.derive_product(3, x, y))
        for x in range(ctx.full(1) + 1)
        for y in range(ctx.full(2) + 1)
    }
    by_size = sorted(candidates, key=lambda t: -(t.x.bit_count() + t.y.bit_count() + t.z.bit_count()))
    maximal: list[Triple] = []
    for t in by_size:
        if not any(t.is_subtriple(m) for m in maximal):
            maximal.append(t)
    return ctx.sorted(maximal)


def fixpoint_triconcepts(ctx: TriContext, cap: int | None = None) -> list[Triple]:
    """Images of every triset (empty components included) under h."""
    return ctx.sorted({h_close(ctx, s) for s in all_trisets(ctx, cap)})


# -- switching generators ------------------------------------------------------


@dataclass(frozen=True)
class SwitchingGenerator:
    """A meet of two distinct triconcepts with non-empty flat set."""

    triset: Triple
    witnesses: tuple[tuple[Triple, Triple], ...] = field(compare=False)

    @property
    def degenerate(self) -> bool:
        """True when the product is empty, i.e. the generator sits in the bottom class."""
        return self.triset.has_empty_product()


def switching_generators(
    ctx: TriContext,
    include_degenerate: bool = False,
    concepts: list[Triple] | None = None,
    cap: int | None = None,
) -> list[SwitchingGenerator]:
    """All switching generators with the concept pairs producing them.

    Generators with an empty product are reported only with
    ``include_degenerate``; they are all equivalent under product inclusion
    and are accounted for as a single class by
    :func:`count_switching_generators`.
    """
    if concepts is None:
        concepts = brute_force_triconcepts(ctx, cap)
    found: dict[Triple, list[tuple[Triple, Triple]]] = {}
    for c1, c2 in combinations(concepts, 2):
        s = c1.meet(c2)
        if not (s.x or s.y or s.z):
            continue
        if s.has_empty_product() and not include_degenerate:
            continue
        found.setdefault(s, []).append((c1, c2))
    return [SwitchingGenerator(s, tuple(found[s])) for s in ctx.sorted(found)]


COUNT_CONVENTIONS = ("product", "componentwise", "shared-extent")


def count_switching_generators(
    ctx: TriContext, convention: str = "product", cap: int | None = None
) -> int:
    """Number of switching generators.

    ``product`` identifies generators with equal triple products, so all
    empty-product generators count once; ``componentwise`` counts distinct
    component triples; ``shared-extent`` counts distinct component triples
    arising from pairs of triconcepts with a common extent.
    """
    if convention not in COUNT_CONVENTIONS:
        raise InputError(f"unknown counting convention {convention!r}")
    gens = switching_generators(ctx, include_degenerate=True, cap=cap)
    if convention == "componentwise":
        return len(gens)
    if convention == "shared-extent":
        return sum(1 for g in gens if any(c1.x == c2.x for c1, c2 in g.witnesses))
    proper = sum(1 for g in gens if not g.degenerate)
    return proper + (1 if proper < len(gens) else 0)


def switching_count_closed_form(n: int) -> int:
    return 4**n - 3**n


def switching_count_triple_sum(n: int) -> int:
    total = 0
    for k1 in range(n):
        for k2 in range(n - k1):
            for k3 in range(n - k1 - k2):
                total += comb(n, k1) * comb(n - k1, k2) * comb(n - k1 - k2, k3)
    return total


# -- set systems ---------------------------------------------------------------


class SetSystem(Protocol):
    """A family of subsets of ``range(ground_size)`` given by membership."""

    ground_size: int

    def contains(self, mask: int) -> bool: ...


def augmentations(system: SetSystem, mask: int) -> int:
    """Elements outside ``mask`` whose addition stays in the family."""
    aug = getattr(system, "augmentations", None)
    if aug is not None:
        return aug(mask)
    out = 0
    for e in range(system.ground_size):
        bit = 1 << e
        if not mask & bit and system.contains(mask | bit):
            out |= bit
    return out


def members(system: SetSystem) -> Iterator[int]:
    """Members reachable from the empty set by single-element augmentations.

    For an accessible family this is the whole family.
    """
    if not system.contains(0):
        raise ContractError("the set system must contain the empty set")
    seen = {0}
    stack = [0]
    while stack:
        current = stack.pop()
        yield current
        for e in iter_bits(augmentations(system, current)):
            nxt = current | (1 << e)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)


def list_closed_sets(system: SetSystem, closure: Callable[[int], int]) -> list[int]:
    """Every member ``F`` with ``closure(F) == F``.

    Depth-first over single-element augmentations from the empty set; each
    member is visited once thanks to the seen-set, so the result does not
    rely on the closure being idempotent.  Sorted by size, then mask.
    """
    fixed = []
    for f in members(system):
        image = closure(f)
        if not system.contains(image):
            raise ContractError(f"closure maps member {f:#b} outside the family")
        if image == f:
            fixed.append(f)
    return sorted(fixed, key=lambda m: (m.bit_count(), m))


@dataclass(frozen=True)
class ExplicitSystem:
    """A materialised family over ``range(ground_size)``."""

    ground_size: int
    family: frozenset[int]

    def contains(self, mask: int) -> bool:
        return mask in self.family


WEEDING_MODES = ("exact", "downward")


class WeededSystem:
    """Trisets of a context with the switching generators removed.

    Only generators with a non-empty product are removed; the empty-product
    ones are left in place like every other member of the bottom class.
    ``exact`` removes precisely those generators.  ``downward`` also removes
    every proper triset lying inside one; on that system every closure onto
    triconcepts is monotone for non-empty products.
    """

    def __init__(self, ctx: TriContext, mode: str = "exact", cap: int | None = None):
        if mode not in WEEDING_MODES:
            raise InputError(f"unknown weeding mode {mode!r}")
        self.ctx = ctx
        self.mode = mode
        self.concepts = brute_force_triconcepts(ctx, cap)
        self.generators = switching_generators(ctx, concepts=self.concepts)
        self._removed = frozenset(g.triset for g in self.generators)
        self.ground_size = ctx.flat_size()

    def _below_generator(self, t: Triple) -> bool:
        return not t.has_empty_product() and any(t.is_subtriple(g) for g in self._removed)

    def __contains__(self, t: Triple) -> bool:
        if not self.ctx.is_triset(t) or t in self._removed:
            return False
        return self.mode == "exact" or not self._below_generator(t)

    def contains(self, mask: int) -> bool:
        """Membership of a flat mask (see :meth:`TriContext.flat_mask`)."""
        return self.unflat(mask) in self

    def unflat(self, mask: int) -> Triple:
        return self.ctx.unflat_mask(mask)

    def trisets(self) -> list[Triple]:
        return [t for t in all_trisets(self.ctx) if t in self]

    def flat_family(self, include_empty: bool = True) -> frozenset[int]:
        fam = {self.ctx.flat_mask(t) for t in self.trisets()}
        if not include_empty:
            fam.discard(0)
        return frozenset(fam)

    def flat_closure(self, closure: Callable[[TriContext, Triple], Triple] = h_close) -> Callable[[int], int]:
        return lambda mask: self.ctx.flat_mask(closure(self.ctx, self.unflat(mask)))


def weeded_system(ctx: TriContext, mode: str = "exact", cap: int | None = None) -> WeededSystem:
    return WeededSystem(ctx, mode, cap)


def triconcepts_by_listing(ctx: TriContext, mode: str = "exact", cap: int | None = None) -> list[Triple]:
    """Fixpoints of h found by the generic lister over the weeded system."""
    system = WeededSystem(ctx, mode, cap)
    return ctx.sorted(system.unflat(m) for m in list_closed_sets(system, system.flat_closure()))


def canonical(ctx: TriContext, triples: Iterable[Triple]) -> list[Triple]:
    return ctx.sorted(set(triples))
