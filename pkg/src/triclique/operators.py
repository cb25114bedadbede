"""The concept-forming operator h and its family of axis-ordered variants."""

from __future__ import annotations

from itertools import permutations
from typing import NamedTuple

from .context import AXES, TriContext, Triple
from .errors import InputError


class AxisOrdering(NamedTuple):
    """A permutation ``(i, j, k)`` of the axes fixing the derivation order."""

    i: int
    j: int
    k: int

    @classmethod
    def parse(cls, value: str | tuple[int, int, int]) -> AxisOrdering:
        if isinstance(value, str):
            value = tuple(int(c) for c in value.strip().lstrip("σs"))
        if sorted(value) != list(AXES):
            raise InputError(f"{value!r} is not a permutation of (1, 2, 3)")
        return cls(*value)

    def __str__(self) -> str:
        return f"{self.i}{self.j}{self.k}"


ORDERINGS: tuple[AxisOrdering, ...] = tuple(AxisOrdering(*p) for p in permutations(AXES))
H_ORDER = AxisOrdering(1, 2, 3)


def _derive(ctx: TriContext, axis: int, comps: dict[int, int]) -> int:
    a, b = (comps[other] for other in AXES if other != axis)
    return ctx.derive_product(axis, a, b)


def sigma_close(ctx: TriContext, order: AxisOrdering | str | tuple, s: Triple) -> Triple:
    """Close ``s`` by cascading derivations along ``order``.

    The first axis is derived from the two input components, the second from
    the new first component and the remaining input component, the third
    from both new components.
    """
    i, j, k = AxisOrdering.parse(order) if not isinstance(order, AxisOrdering) else order
    ctx.require_triset(s)
    comps = {1: s.x, 2: s.y, 3: s.z}
    comps[i] = _derive(ctx, i, comps)
    comps[j] = _derive(ctx, j, comps)
    comps[k] = _derive(ctx, k, comps)
    return Triple(comps[1], comps[2], comps[3])


def h_close(ctx: TriContext, s: Triple) -> Triple:
    """Objects from the attribute and condition parts, then attributes, then conditions."""
    ctx.require_triset(s)
    u = ctx.derive_product(1, s.y, s.z)
    v = ctx.derive_product(2, u, s.z)
    w = ctx.derive_product(3, u, v)
    return Triple(u, v, w)


def is_triconcept(ctx: TriContext, t: Triple) -> bool:
    """All three derivation conditions hold at once."""
    return (
        ctx.derive_product(1, t.y, t.z) == t.x
        and ctx.derive_product(2, t.x, t.z) == t.y
        and ctx.derive_product(3, t.x, t.y) == t.z
    )
