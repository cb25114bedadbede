"""Multi-relational databases (k-partite graphs): complete connected subsets,
the g operator, and the lossy tripartite encoding of triadic contexts."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, NamedTuple

from .context import ROLES, TriContext, Triple, iter_bits, size_cap
from .enumeration import list_closed_sets
from .errors import InputError, ResourceError
from .operators import h_close


class Entity(NamedTuple):
    type: str
    label: str

    def __str__(self) -> str:
        return f"{self.type}:{self.label}"


class PhantomEdge(NamedTuple):
    """A triple missing from the incidence whose three pairs are all encoded."""

    object: str
    attribute: str
    condition: str


class Mrd:
    """Typed entities with typed binary relationships; immutable.

    Entity subsets are bit masks over :attr:`entities`, which lists the
    entities type by type in declaration order.
    """

    def __init__(
        self,
        entity_types: Iterable[str],
        entities: Mapping[str, Iterable[str]],
        relationship_types: Iterable[tuple[str, str]],
        edges: Iterable[tuple[Entity | tuple[str, str], Entity | tuple[str, str]]],
    ):
        self.entity_types = tuple(entity_types)
        if len(set(self.entity_types)) != len(self.entity_types):
            raise InputError("duplicate entity type")
        unknown = set(entities) - set(self.entity_types)
        if unknown:
            raise InputError(f"entities given for undeclared types {sorted(unknown)}")
        ents = []
        for t in self.entity_types:
            labels = list(entities.get(t, ()))
            if len(set(labels)) != len(labels):
                raise InputError(f"duplicate label in type {t!r}")
            ents.extend(Entity(t, label) for label in labels)
        self.entities: tuple[Entity, ...] = tuple(ents)
        self._index = {e: i for i, e in enumerate(self.entities)}
        by_label: dict[str, list[int]] = {}
        for i, e in enumerate(self.entities):
            by_label.setdefault(e.label, []).append(i)
        self._by_label = by_label

        rel = set()
        for pair in relationship_types:
            a, b = pair
            if a not in self.entity_types or b not in self.entity_types:
                raise InputError(f"relationship type {pair!r} uses undeclared types")
            if a == b:
                raise InputError(f"self relationship type {a!r} is not allowed")
            rel.add(frozenset((a, b)))
        self.relationship_types = frozenset(rel)

        n = len(self.entities)
        self._adj = [0] * n
        self._related = [0] * n
        type_masks = {t: 0 for t in self.entity_types}
        for i, e in enumerate(self.entities):
            type_masks[e.type] |= 1 << i
        self._type_masks = type_masks
        for i, e in enumerate(self.entities):
            for other in self.entity_types:
                if frozenset((e.type, other)) in self.relationship_types:
                    self._related[i] |= type_masks[other]
        edge_set = set()
        for a, b in edges:
            i, j = self.index(a), self.index(b)
            if not self._related[i] >> j & 1:
                raise InputError(
                    f"edge {self.entities[i]}-{self.entities[j]} has no declared relationship type"
                )
            self._adj[i] |= 1 << j
            self._adj[j] |= 1 << i
            edge_set.add((min(i, j), max(i, j)))
        self._edges = frozenset(edge_set)

    # -- addressing --------------------------------------------------------

    def index(self, ref: Entity | tuple[str, str] | str) -> int:
        if isinstance(ref, str):
            hits = self._by_label.get(ref, [])
            if len(hits) != 1:
                raise InputError(f"label {ref!r} is unknown or ambiguous; use (type, label)")
            return hits[0]
        try:
            return self._index[Entity(*ref)]
        except (KeyError, TypeError):
            raise InputError(f"unknown entity {ref!r}") from None

    def mask(self, refs: Iterable[Entity | tuple[str, str] | str]) -> int:
        m = 0
        for ref in refs:
            m |= 1 << self.index(ref)
        return m

    def members(self, mask: int) -> tuple[Entity, ...]:
        if mask >> len(self.entities):
            raise InputError("mask references undeclared entities")
        return tuple(self.entities[i] for i in iter_bits(mask))

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(e.label for e in self.members(mask))

    @property
    def size(self) -> int:
        return len(self.entities)

    @property
    def full(self) -> int:
        return (1 << len(self.entities)) - 1

    @property
    def edges(self) -> tuple[tuple[Entity, Entity], ...]:
        return tuple((self.entities[i], self.entities[j]) for i, j in sorted(self._edges))

    def neighbours(self, i: int) -> int:
        return self._adj[i]

    def type_mask(self, type_name: str) -> int:
        return self._type_masks[type_name]

    def isolated(self) -> int:
        return sum(1 << i for i, adj in enumerate(self._adj) if not adj)

    def check_size(self, cap: int | None = None) -> None:
        limit = 3 * size_cap(cap)
        if self.size > limit:
            raise ResourceError(f"{self.size} entities exceed the exhaustive-search cap of {limit}")

    def sort_key(self, mask: int) -> tuple[int, ...]:
        return tuple(iter_bits(mask))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mrd):
            return NotImplemented
        return (
            self.entity_types == other.entity_types
            and self.entities == other.entities
            and self.relationship_types == other.relationship_types
            and self._edges == other._edges
        )

    def __repr__(self) -> str:
        return f"Mrd(types={len(self.entity_types)}, entities={self.size}, edges={len(self._edges)})"

    # -- CCS predicates ----------------------------------------------------

    def _check(self, f: int) -> None:
        if f < 0 or f >> len(self.entities):
            raise InputError("subset references undeclared entities")

    def is_complete(self, f: int) -> bool:
        self._check(f)
        return all(f & self._related[i] & ~self._adj[i] == 0 for i in iter_bits(f))

    def is_connected(self, f: int) -> bool:
        self._check(f)
        if not f:
            return True
        reached = f & -f
        frontier = reached
        while frontier:
            nxt = 0
            for i in iter_bits(frontier):
                nxt |= self._adj[i]
            frontier = nxt & f & ~reached
            reached |= frontier
        return reached == f

    def is_ccs(self, f: int) -> bool:
        return self.is_complete(f) and self.is_connected(f)

    def _require_ccs(self, f: int) -> None:
        if not self.is_ccs(f):
            raise InputError(f"{self.labels(f)} is not a complete connected subset")

    def _compatible(self, f: int) -> int:
        return sum(
            1 << e for e in range(len(self.entities)) if f & self._related[e] & ~self._adj[e] == 0
        )

    def comp(self, f: int) -> int:
        """Entities whose addition keeps ``f`` complete (members of ``f`` included)."""
        self._require_ccs(f)
        return self._compatible(f)

    def aug(self, f: int) -> int:
        """Entities whose addition keeps ``f`` complete and connected."""
        self._require_ccs(f)
        return self._aug(f)

    def _aug(self, f: int) -> int:
        compatible = self._compatible(f)
        if not f:
            return compatible
        touching = f
        for e in iter_bits(compatible & ~f):
            if self._adj[e] & f:
                touching |= 1 << e
        return compatible & touching

    def g_close(self, f: int) -> int:
        """Augmentations that leave the compatible set unchanged."""
        self._require_ccs(f)
        base = self._compatible(f)
        return sum(1 << e for e in iter_bits(self._aug(f)) if self._compatible(f | 1 << e) == base)

    def is_mccs(self, f: int) -> bool:
        return bool(f) and self.is_ccs(f) and self._aug(f) == f


class CcsSystem:
    """The complete connected subsets of an :class:`Mrd`, empty set included."""

    def __init__(self, mrd: Mrd):
        self.mrd = mrd
        self.ground_size = mrd.size

    def contains(self, mask: int) -> bool:
        return self.mrd.is_ccs(mask)

    def augmentations(self, mask: int) -> int:
        return self.mrd._aug(mask) & ~mask

    def family(self) -> frozenset[int]:
        from .enumeration import members

        return frozenset(members(self))


def is_complete(mrd: Mrd, f: int) -> bool:
    return mrd.is_complete(f)


def is_connected(mrd: Mrd, f: int) -> bool:
    return mrd.is_connected(f)


def comp(mrd: Mrd, f: int) -> int:
    return mrd.comp(f)


def aug(mrd: Mrd, f: int) -> int:
    return mrd.aug(f)


def g_close(mrd: Mrd, f: int) -> int:
    return mrd.g_close(f)


def ccs_family(mrd: Mrd, cap: int | None = None) -> frozenset[int]:
    mrd.check_size(cap)
    return CcsSystem(mrd).family()


def enumerate_mccs(mrd: Mrd, cap: int | None = None) -> list[int]:
    """Maximal complete connected subsets, in canonical order.

    The g-fixed sets are listed over the CCS family and the maximal ones
    kept.  The empty set is treated as g-fixed so listing can start there.
    """
    mrd.check_size(cap)
    fixed = list_closed_sets(CcsSystem(mrd), lambda f: mrd.g_close(f) if f else 0)
    return sorted((f for f in fixed if mrd.is_mccs(f)), key=mrd.sort_key)


def closed_non_maximal_witness(mrd: Mrd, cap: int | None = None) -> int | None:
    """A non-empty intersection of several MCCSs that is a g-fixed CCS but not maximal."""
    mccs = enumerate_mccs(mrd, cap)
    meets = {a & b for a, b in combinations(mccs, 2)}
    while True:
        grown = meets | {s & m for s in meets for m in mccs}
        if grown == meets:
            break
        meets = grown
    for x in sorted(meets, key=lambda m: (-m.bit_count(), mrd.sort_key(m))):
        if x and mrd.is_ccs(x) and mrd.g_close(x) == x and not mrd.is_mccs(x):
            return x
    return None


def add_isolated_elements(mrd: Mrd) -> Mrd:
    """Give every related entity type an entity without edges.

    With an isolated entity available in each type that takes part in a
    relationship type, g is idempotent.  Types that already have one are
    left alone; new labels are ``<type>0`` (suffixed further if taken).
    """
    related_types = {t for pair in mrd.relationship_types for t in pair}
    isolated = mrd.isolated()
    entities = {t: [e.label for e in mrd.entities if e.type == t] for t in mrd.entity_types}
    changed = False
    for t in mrd.entity_types:
        if t in related_types and not isolated & mrd.type_mask(t):
            label = f"{t}0"
            while label in entities[t]:
                label += "0"
            entities[t].append(label)
            changed = True
    if not changed:
        return mrd
    return Mrd(mrd.entity_types, entities, [tuple(sorted(p)) for p in mrd.relationship_types], mrd.edges)


# -- tripartite encoding -------------------------------------------------------


def encode_tripartite(ctx: TriContext) -> Mrd:
    """Replace each incidence triple by its three pairwise edges.

    Entities are ordered objects, attributes, conditions, so an entity mask
    of the result equals :meth:`TriContext.flat_mask` of the matching triple.
    """
    entities = {role: ctx.entities(axis) for axis, role in enumerate(ROLES, start=1)}
    edges = set()
    for g, m, b in ctx.incidence:
        edges.add((("object", g), ("attribute", m)))
        edges.add((("object", g), ("condition", b)))
        edges.add((("attribute", m), ("condition", b)))
    rel = [("object", "attribute"), ("object", "condition"), ("attribute", "condition")]
    return Mrd(ROLES, entities, rel, sorted(edges))


def phantom_edges(ctx: TriContext) -> list[PhantomEdge]:
    """Triples outside the incidence that the pairwise encoding cannot tell apart."""
    om, oc, ac = set(), set(), set()
    for i, j, k in ctx.index_incidence:
        om.add((i, j))
        oc.add((i, k))
        ac.add((j, k))
    found = sorted(
        (i, j, k)
        for i, j in om
        for k in range(len(ctx.conditions))
        if (i, k) in oc and (j, k) in ac and not ctx.has(i, j, k)
    )
    return [PhantomEdge(ctx.objects[i], ctx.attributes[j], ctx.conditions[k]) for i, j, k in found]


def mccs_to_triset(ctx: TriContext, mccs: int, mrd: Mrd | None = None) -> Triple | None:
    """Repair an MCCS of the encoding into a triconcept, or ``None``.

    The MCCS is split by role; phantom triples are dropped from the product
    of the parts, and the remaining triples must themselves form a product
    inside the incidence that h leaves fixed.
    """
    if mrd is None:
        mrd = encode_tripartite(ctx)
    if not mrd.is_mccs(mccs):
        raise InputError(f"{mrd.labels(mccs)} is not an MCCS of the encoding")
    x, y, z = ctx.unflat_mask(mccs)
    phantoms = {
        (ctx.mask(1, p.object), ctx.mask(2, p.attribute), ctx.mask(3, p.condition))
        for p in phantom_edges(ctx)
    }
    kept = [
        (1 << i, 1 << j, 1 << k)
        for i in iter_bits(x)
        for j in iter_bits(y)
        for k in iter_bits(z)
        if (1 << i, 1 << j, 1 << k) not in phantoms
    ]
    if not kept:
        return None
    xs = ys = zs = 0
    for a, b, c in kept:
        xs, ys, zs = xs | a, ys | b, zs | c
    t = Triple(xs, ys, zs)
    if len(kept) != t.product_size() or not ctx.is_triset(t):
        return None
    return t if h_close(ctx, t) == t else None
