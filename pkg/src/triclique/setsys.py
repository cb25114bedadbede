"""Checkers for accessibility-type properties of explicitly listed set families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

from .context import iter_bits, submasks
from .errors import InputError


@dataclass(frozen=True)
class ExplicitFamily:
    """A non-empty family of subsets of an ordered ground set, stored as masks."""

    ground: tuple[Hashable, ...]
    members: frozenset[int]

    def __post_init__(self) -> None:
        if not self.members:
            raise InputError("a set system must have at least one member")
        limit = 1 << len(self.ground)
        if any(m < 0 or m >= limit for m in self.members):
            raise InputError("member outside the ground set")

    @classmethod
    def of(cls, ground: Iterable[Hashable], sets: Iterable[Iterable[Hashable]]) -> ExplicitFamily:
        ground = tuple(ground)
        index = {g: i for i, g in enumerate(ground)}
        masks = set()
        for s in sets:
            m = 0
            for element in s:
                if element not in index:
                    raise InputError(f"{element!r} is not in the ground set")
                m |= 1 << index[element]
            masks.add(m)
        return cls(ground, frozenset(masks))

    @property
    def full(self) -> int:
        return (1 << len(self.ground)) - 1

    def sets(self) -> list[frozenset]:
        return sorted(
            (frozenset(self.ground[i] for i in iter_bits(m)) for m in self.members),
            key=lambda s: (len(s), sorted(map(str, s))),
        )

    def __len__(self) -> int:
        return len(self.members)


def _one_step(fam: ExplicitFamily, x: int) -> int:
    """Elements outside ``x`` that extend it inside the family."""
    return sum(1 << e for e in range(len(fam.ground)) if not x >> e & 1 and x | 1 << e in fam.members)


def is_accessible(fam: ExplicitFamily) -> bool:
    """Every non-empty member loses some element and stays a member."""
    return all(
        any(x & ~(1 << e) in fam.members for e in iter_bits(x))
        for x in fam.members
        if x
    )


def is_independence_system(fam: ExplicitFamily) -> bool:
    """Closed under taking subsets (single removals suffice by induction)."""
    return all(
        x & ~(1 << e) in fam.members for x in fam.members for e in iter_bits(x)
    )


def is_confluent(fam: ExplicitFamily, allow_empty_common: bool = False) -> bool:
    """Members sharing a common non-empty member below them have their union in the family.

    With ``allow_empty_common`` the common member may be the empty set,
    which makes the test a plain union-closure test whenever the empty set
    is a member.
    """
    memo: dict[int, bool] = {}

    def has_common(meet: int) -> bool:
        if meet not in memo:
            memo[meet] = any(
                sub in fam.members for sub in submasks(meet) if sub or allow_empty_common
            )
        return memo[meet]

    ms = sorted(fam.members)
    for a, x in enumerate(ms):
        for y in ms[a + 1:]:
            if x | y not in fam.members and has_common(x & y):
                return False
    return True


def is_strongly_accessible(fam: ExplicitFamily) -> bool:
    """Accessible, and any member can be grown one element at a time toward any superset member."""
    if not is_accessible(fam):
        return False
    ms = sorted(fam.members, key=int.bit_count)
    for x in ms:
        step = _one_step(fam, x)
        for y in ms:
            if y != x and y & x == x and not step & y:
                return False
    return True


def is_closure_system(fam: ExplicitFamily) -> bool:
    """Contains the ground set and is closed under pairwise intersection."""
    if fam.full not in fam.members:
        return False
    ms = sorted(fam.members)
    return all(x & y in fam.members for a, x in enumerate(ms) for y in ms[a + 1:])


def strong_accessibility_counterexample(fam: ExplicitFamily) -> tuple[int, int] | None:
    """A pair ``x < y`` of members with no one-step extension of ``x`` inside ``y``."""
    ms = sorted(fam.members, key=lambda m: (m.bit_count(), m))
    for x in ms:
        step = _one_step(fam, x)
        for y in ms:
            if y != x and y & x == x and not step & y:
                return x, y
    return None


def property_table(fam: ExplicitFamily) -> dict[str, bool]:
    return {
        "accessible": is_accessible(fam),
        "independence_system": is_independence_system(fam),
        "confluent": is_confluent(fam),
        "confluent_empty_common": is_confluent(fam, allow_empty_common=True),
        "strongly_accessible": is_strongly_accessible(fam),
        "closure_system": is_closure_system(fam),
    }


def weeded_flat_family(ctx, mode: str = "exact", include_empty: bool = True, cap: int | None = None) -> ExplicitFamily:
    """Flat sets of the weeded triset system over the role-tagged ground."""
    from .context import EntityRef, ROLES
    from .enumeration import WeededSystem

    system = WeededSystem(ctx, mode, cap)
    ground = tuple(EntityRef(role, name) for axis, role in enumerate(ROLES, 1) for name in ctx.entities(axis))
    return ExplicitFamily(ground, system.flat_family(include_empty))


def ccs_explicit_family(mrd, cap: int | None = None) -> ExplicitFamily:
    """All complete connected subsets of ``mrd``, the empty set included."""
    from .mrd import ccs_family

    return ExplicitFamily(mrd.entities, ccs_family(mrd, cap))
