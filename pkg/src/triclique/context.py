"""Triadic contexts, trisets and the primitive derivation operators.

Subsets of one axis are plain ``int`` bit masks: bit ``i`` stands for the
``i``-th entity of that axis in declaration order.  Axes are numbered 1
(objects), 2 (attributes) and 3 (conditions).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import InputError, ResourceError

ROLES = ("object", "attribute", "condition")
AXES = (1, 2, 3)
DEFAULT_SIZE_CAP = 5
SIZE_CAP_ENV = "TRICLIQUE_SIZE_CAP"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, from ``mask`` itself down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def supermasks(mask: int, full: int) -> Iterator[int]:
    """Yield every mask ``m`` with ``mask <= m <= full`` bitwise, increasing."""
    sup = mask
    while True:
        yield sup
        if sup == full:
            return
        sup = (sup + 1) | mask


def size_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SIZE_CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True, order=True)
class EntityRef:
    """An element of one of the three ground sets, tagged with its role."""

    role: str
    name: str

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise InputError(f"unknown role {self.role!r}")
        if not isinstance(self.name, str) or not self.name:
            raise InputError("entity labels must be non-empty strings")

    def __str__(self) -> str:
        return self.name


FlatSet = frozenset  # frozenset[EntityRef]


class Triple(NamedTuple):
    """A triple of subsets ``(x, y, z)`` as bit masks.

    Used both for arbitrary triples and for trisets and triconcepts; whether
    the product lies inside the incidence is a property of the owning
    context, see :meth:`TriContext.is_triset`.
    """

    x: int
    y: int
    z: int

    @property
    def extent(self) -> int:
        return self.x

    @property
    def intent(self) -> int:
        return self.y

    @property
    def modus(self) -> int:
        return self.z

    def component(self, axis: int) -> int:
        return self[axis - 1]

    def product_size(self) -> int:
        return self.x.bit_count() * self.y.bit_count() * self.z.bit_count()

    def has_empty_product(self) -> bool:
        return not (self.x and self.y and self.z)

    def meet(self, other: Triple) -> Triple:
        """Component-wise intersection, i.e. ``tuple(flat(a) & flat(b))``."""
        return Triple(self.x & other.x, self.y & other.y, self.z & other.z)

    def is_subtriple(self, other: Triple) -> bool:
        """Component-wise inclusion."""
        return (
            self.x & other.x == self.x
            and self.y & other.y == self.y
            and self.z & other.z == self.z
        )


Triset = Triple
Triconcept = Triple


class TriContext:
    """An immutable triadic context with declared (possibly isolated) entities."""

    def __init__(
        self,
        objects: Iterable[str],
        attributes: Iterable[str],
        conditions: Iterable[str],
        triples: Iterable[tuple[str, str, str]],
    ) -> None:
        self._labels: tuple[tuple[str, ...], ...] = tuple(
            _unique_labels(role, labels)
            for role, labels in zip(ROLES, (objects, attributes, conditions))
        )
        self._index = tuple({name: i for i, name in enumerate(ls)} for ls in self._labels)
        n1, n2, n3 = self.shape
        # fibres[axis-1][p][q]: mask of axis entities related to the pair of the
        # other two axes (in increasing axis order).
        self._fibres = (
            [[0] * n3 for _ in range(n2)],
            [[0] * n3 for _ in range(n1)],
            [[0] * n2 for _ in range(n1)],
        )
        incidence = set()
        for triple in triples:
            if len(triple) != 3:
                raise InputError(f"incidence entries must have 3 labels, got {triple!r}")
            i, j, k = (self._lookup(axis, label) for axis, label in zip(AXES, triple))
            incidence.add((i, j, k))
            self._fibres[0][j][k] |= 1 << i
            self._fibres[1][i][k] |= 1 << j
            self._fibres[2][i][j] |= 1 << k
        self._incidence = frozenset(incidence)

    @classmethod
    def from_triples(
        cls,
        triples: Iterable[tuple[str, str, str]],
        objects: Iterable[str] = (),
        attributes: Iterable[str] = (),
        conditions: Iterable[str] = (),
    ) -> TriContext:
        """Build a context whose ground sets are the explicitly declared labels
        followed by any further labels in order of first appearance."""
        triples = list(triples)
        declared = [list(objects), list(attributes), list(conditions)]
        for triple in triples:
            if len(triple) != 3:
                raise InputError(f"incidence entries must have 3 labels, got {triple!r}")
            for axis_labels, label in zip(declared, triple):
                if label not in axis_labels:
                    axis_labels.append(label)
        return cls(*declared, triples)

    # -- ground sets -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int, int]:
        return tuple(len(ls) for ls in self._labels)

    @property
    def objects(self) -> tuple[str, ...]:
        return self._labels[0]

    @property
    def attributes(self) -> tuple[str, ...]:
        return self._labels[1]

    @property
    def conditions(self) -> tuple[str, ...]:
        return self._labels[2]

    def entities(self, axis: int) -> tuple[str, ...]:
        return self._labels[_axis_index(axis)]

    def full(self, axis: int) -> int:
        return (1 << len(self._labels[_axis_index(axis)])) - 1

    def _lookup(self, axis: int, label: str) -> int:
        try:
            return self._index[axis - 1][label]
        except KeyError:
            raise InputError(f"unknown {ROLES[axis - 1]} {label!r}") from None

    def mask(self, axis: int, labels: Iterable[str]) -> int:
        _axis_index(axis)
        if isinstance(labels, str):
            labels = (labels,)
        m = 0
        for label in labels:
            m |= 1 << self._lookup(axis, label)
        return m

    def labels(self, axis: int, mask: int) -> tuple[str, ...]:
        names = self._labels[_axis_index(axis)]
        if mask >> len(names):
            raise InputError(f"mask {mask:#b} exceeds the {ROLES[axis - 1]} set")
        return tuple(names[i] for i in iter_bits(mask))

    def triple(self, x: Iterable[str] = (), y: Iterable[str] = (), z: Iterable[str] = ()) -> Triple:
        """Label-level constructor; does not require the product to fit."""
        return Triple(self.mask(1, x), self.mask(2, y), self.mask(3, z))

    def triset(self, x: Iterable[str] = (), y: Iterable[str] = (), z: Iterable[str] = ()) -> Triple:
        """Like :meth:`triple` but raises :class:`InputError` unless it is a triset."""
        t = self.triple(x, y, z)
        self.require_triset(t)
        return t

    def describe(self, t: Triple) -> tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]:
        return tuple(self.labels(axis, t[axis - 1]) for axis in AXES)

    def sort_key(self, t: Triple) -> tuple[tuple[int, ...], ...]:
        """Lexicographic key over declaration-ordered index lists."""
        return tuple(tuple(iter_bits(c)) for c in t)

    def sorted(self, triples: Iterable[Triple]) -> list[Triple]:
        return sorted(triples, key=self.sort_key)

    # -- incidence ---------------------------------------------------------

    @property
    def incidence(self) -> frozenset[tuple[str, str, str]]:
        return frozenset(
            (self.objects[i], self.attributes[j], self.conditions[k])
            for i, j, k in self._incidence
        )

    @property
    def index_incidence(self) -> frozenset[tuple[int, int, int]]:
        return self._incidence

    def __len__(self) -> int:
        return len(self._incidence)

    def has(self, i: int, j: int, k: int) -> bool:
        return (i, j, k) in self._incidence

    def derive_product(self, axis: int, a: int, b: int) -> int:
        """Entities of ``axis`` related to every pair of ``a x b``.

        ``a`` and ``b`` are masks over the two remaining axes in increasing
        axis order.  An empty product yields the full axis.
        """
        fibres = self._fibres[_axis_index(axis)]
        result = self.full(axis)
        for p in iter_bits(a):
            row = fibres[p]
            for q in iter_bits(b):
                result &= row[q]
                if not result:
                    return 0
        return result

    def is_triset(self, t: Triple) -> bool:
        self._check_masks(t)
        if t.has_empty_product():
            return True
        return t.z & self.derive_product(3, t.x, t.y) == t.z

    def require_triset(self, t: Triple) -> None:
        if not self.is_triset(t):
            x, y, z = self.describe(t)
            raise InputError(f"({set(x)}, {set(y)}, {set(z)}) is not a triset")

    def _check_masks(self, t: Triple) -> None:
        for axis, comp in zip(AXES, t):
            if comp < 0 or comp >> len(self._labels[axis - 1]):
                raise InputError(f"component {axis} references undeclared entities")

    # -- flat representation ----------------------------------------------

    def flat_mask(self, t: Triple) -> int:
        """Disjoint union of the components as one mask over objects,
        then attributes, then conditions."""
        n1, n2, _ = self.shape
        return t.x | (t.y << n1) | (t.z << (n1 + n2))

    def unflat_mask(self, mask: int) -> Triple:
        n1, n2, n3 = self.shape
        return Triple(
            mask & ((1 << n1) - 1),
            (mask >> n1) & ((1 << n2) - 1),
            (mask >> (n1 + n2)) & ((1 << n3) - 1),
        )

    def flat_size(self) -> int:
        return sum(self.shape)

    def check_size(self, cap: int | None = None) -> None:
        limit = size_cap(cap)
        if max(self.shape, default=0) > limit:
            raise ResourceError(
                f"context of shape {self.shape} exceeds the exhaustive-search cap of {limit} per axis"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriContext):
            return NotImplemented
        return self._labels == other._labels and self._incidence == other._incidence

    def __hash__(self) -> int:
        return hash((self._labels, self._incidence))

    def __repr__(self) -> str:
        return f"TriContext(shape={self.shape}, triples={len(self)})"


def _axis_index(axis: int) -> int:
    if axis not in AXES:
        raise InputError(f"axis must be 1, 2 or 3, got {axis!r}")
    return axis - 1


def _unique_labels(role: str, labels: Iterable[str]) -> tuple[str, ...]:
    labels = tuple(labels)
    seen = set()
    for label in labels:
        EntityRef(role, label)
        if label in seen:
            raise InputError(f"duplicate {role} label {label!r}")
        seen.add(label)
    return labels


def _other_axes(axis: int) -> tuple[int, int]:
    j, k = (a for a in AXES if a != axis)
    return j, k


# -- set-level operators ----------------------------------------------------


def derive(ctx: TriContext, axis: int, pairs: Iterable[tuple[str, str]]) -> frozenset[str]:
    """The (axis)-derivation of a set of pairs from the two other axes.

    Returns every entity of ``axis`` that forms an incidence triple with each
    given pair; the empty pair set yields the whole axis.
    """
    j, k = _other_axes(axis)
    result = ctx.full(axis)
    fibres = ctx._fibres[axis - 1]
    for p, q in pairs:
        result &= fibres[ctx._lookup(j, p)][ctx._lookup(k, q)]
    return frozenset(ctx.labels(axis, result))


def derive_pairs(ctx: TriContext, axis: int, subset: Iterable[str]) -> frozenset[tuple[str, str]]:
    """The (axis)-derivation of a set of ``axis`` entities: all pairs of the
    other two axes related to every member.  The empty set yields the full grid."""
    j, k = _other_axes(axis)
    members = ctx.mask(axis, subset)
    fibres = ctx._fibres[axis - 1]
    return frozenset(
        (ctx.entities(j)[p], ctx.entities(k)[q])
        for p, q in product(range(len(ctx.entities(j))), range(len(ctx.entities(k))))
        if fibres[p][q] & members == members
    )


def is_triset(ctx: TriContext, t: Triple) -> bool:
    return ctx.is_triset(t)


def flat(ctx: TriContext, t: Triple) -> frozenset[EntityRef]:
    """Role-tagged disjoint union of the three components."""
    return frozenset(
        EntityRef(role, name) for role, axis in zip(ROLES, AXES) for name in ctx.labels(axis, t[axis - 1])
    )


def tuple_of(ctx: TriContext, s: Iterable[EntityRef]) -> Triple:
    """Split a role-tagged set back into its three components."""
    masks = [0, 0, 0]
    for ref in s:
        if not isinstance(ref, EntityRef):
            raise InputError(f"{ref!r} is not a role-tagged entity")
        axis = ROLES.index(ref.role) + 1
        masks[axis - 1] |= 1 << ctx._lookup(axis, ref.name)
    return Triple(*masks)


def triset_leq(a: Triple, b: Triple) -> bool:
    """Product inclusion: every incidence triple covered by ``a`` is covered by ``b``."""
    if a.has_empty_product():
        return True
    return a.is_subtriple(b)


def all_trisets(ctx: TriContext, cap: int | None = None) -> Iterator[Triple]:
    """Every triset of ``ctx``, including those with empty components."""
    ctx.check_size(cap)
    for x in range(ctx.full(1) + 1):
        for y in range(ctx.full(2) + 1):
            for z in submasks(ctx.derive_product(3, x, y)):
                yield Triple(x, y, z)


# -- dyadic side -------------------------------------------------------------


class DyadicContext:
    """A formal context ``(G, M, I)`` with ordered ground sets."""

    def __init__(self, objects: Iterable[str], attributes: Iterable[str], pairs: Iterable[tuple[str, str]]):
        self.objects = _unique_labels("object", objects)
        self.attributes = _unique_labels("attribute", attributes)
        g_index = {g: i for i, g in enumerate(self.objects)}
        m_index = {m: i for i, m in enumerate(self.attributes)}
        self.rows = [0] * len(self.objects)
        self.pairs = set()
        for g, m in pairs:
            if g not in g_index or m not in m_index:
                raise InputError(f"pair {(g, m)!r} references undeclared entities")
            self.rows[g_index[g]] |= 1 << m_index[m]
            self.pairs.add((g, m))
        self.pairs = frozenset(self.pairs)

    def up(self, extent: int) -> int:
        """Attributes shared by all objects of ``extent``."""
        result = (1 << len(self.attributes)) - 1
        for g in iter_bits(extent):
            result &= self.rows[g]
        return result

    def down(self, intent: int) -> int:
        """Objects having all attributes of ``intent``."""
        return sum(1 << g for g, row in enumerate(self.rows) if row & intent == intent)

    def concepts(self) -> list[tuple[int, int]]:
        """All formal concepts as ``(extent, intent)`` masks, sorted by extent size."""
        found = {}
        for a in range(1 << len(self.objects)):
            intent = self.up(a)
            found[self.down(intent)] = intent
        return sorted(found.items(), key=lambda c: (c[0].bit_count(), c[0]))

    def __repr__(self) -> str:
        return f"DyadicContext({len(self.objects)}x{len(self.attributes)}, pairs={len(self.pairs)})"


def slice_context(ctx: TriContext, x: int) -> DyadicContext:
    """The attribute-by-condition relation of pairs used by some object of ``x``."""
    if not x:
        raise InputError("slice requires a non-empty set of objects")
    ctx._check_masks(Triple(x, 0, 0))
    pairs = [
        (ctx.attributes[j], ctx.conditions[k])
        for i, j, k in ctx.index_incidence
        if x >> i & 1
    ]
    return DyadicContext(ctx.attributes, ctx.conditions, pairs)


def is_ferrers_of_concepts(dctx: DyadicContext) -> bool:
    """True iff the concept lattice of ``dctx`` is a chain."""
    extents = [e for e, _ in dctx.concepts()]
    return all(a & b == a for a, b in zip(extents, extents[1:]))
