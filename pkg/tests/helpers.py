"""Seeded random generators and hypothesis strategies shared by the tests."""

from __future__ import annotations

import random
from itertools import product

from hypothesis import strategies as st

from triclique.context import TriContext
from triclique.mrd import Mrd


def random_context(rng: random.Random, n1: int, n2: int, n3: int, density: float = 0.5) -> TriContext:
    objs = [f"g{i}" for i in range(n1)]
    atts = [f"m{i}" for i in range(n2)]
    conds = [f"b{i}" for i in range(n3)]
    triples = [t for t in product(objs, atts, conds) if rng.random() < density]
    return TriContext(objs, atts, conds, triples)


def random_contexts(count: int, max_axis: int = 4, seed: int = 0, shape=None):
    rng = random.Random(seed)
    for _ in range(count):
        n = shape or tuple(rng.randint(1, max_axis) for _ in range(3))
        yield random_context(rng, *n, density=rng.choice((0.3, 0.5, 0.7, 0.9)))


def random_mrd(rng: random.Random, max_entities: int = 8) -> Mrd:
    k = rng.randint(2, 4)
    types = [f"T{i}" for i in range(k)]
    total = rng.randint(k, max_entities)
    sizes = [1] * k
    for _ in range(total - k):
        sizes[rng.randrange(k)] += 1
    entities = {t: [f"{t.lower()}{j}" for j in range(s)] for t, s in zip(types, sizes)}
    pairs = [(a, b) for i, a in enumerate(types) for b in types[i + 1:]]
    rel = [p for p in pairs if rng.random() < 0.6] or [pairs[0]]
    density = rng.choice((0.4, 0.6, 0.8))
    edges = [
        ((a, x), (b, y))
        for a, b in rel
        for x in entities[a]
        for y in entities[b]
        if rng.random() < density
    ]
    return Mrd(types, entities, rel, edges)


def random_mrds(count: int, seed: int = 0, max_entities: int = 8):
    rng = random.Random(seed)
    return [random_mrd(rng, max_entities) for _ in range(count)]


@st.composite
def contexts(draw, max_axis: int = 4) -> TriContext:
    n1, n2, n3 = (draw(st.integers(1, max_axis)) for _ in range(3))
    cells = list(product(range(n1), range(n2), range(n3)))
    bits = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
    triples = [(f"g{i}", f"m{j}", f"b{k}") for (i, j, k), on in zip(cells, bits) if on]
    return TriContext([f"g{i}" for i in range(n1)], [f"m{j}" for j in range(n2)], [f"b{k}" for k in range(n3)], triples)


@st.composite
def context_and_triple(draw, max_axis: int = 4):
    """A context together with an arbitrary (not necessarily triset) component triple."""
    ctx = draw(contexts(max_axis))
    x, y, z = (draw(st.integers(0, ctx.full(a))) for a in (1, 2, 3))
    return ctx, (x, y, z)


@st.composite
def mrds(draw, max_entities: int = 8) -> Mrd:
    return random_mrd(random.Random(draw(st.integers(0, 2**32 - 1))), max_entities)
