"""Small reference contexts and the parameterised power/diagonal families."""

from __future__ import annotations

from itertools import product

from .context import TriContext
from .errors import InputError

_U3 = ("u1", "u2", "u3")
_T3 = ("t1", "t2", "t3")

_SLICE_R1 = [("u1", "t1"), ("u1", "t2"), ("u2", "t1"), ("u2", "t2")]
_SLICE_R2 = [("u1", "t1"), ("u2", "t1")]


def bibsonomy_two_slices() -> TriContext:
    """Users x tags x resources with two resource slices; the h counterexample."""
    triples = [(u, t, "r1") for u, t in _SLICE_R1] + [(u, t, "r2") for u, t in _SLICE_R2]
    return TriContext(_U3, _T3, ("r1", "r2"), triples)


def bibsonomy_three_slices() -> TriContext:
    """The two-slice context plus an empty third resource."""
    triples = [(u, t, "r1") for u, t in _SLICE_R1] + [(u, t, "r2") for u, t in _SLICE_R2]
    return TriContext(_U3, _T3, ("r1", "r2", "r3"), triples)


def phantom_example() -> TriContext:
    """Three hyperedges whose pairwise encoding implies a fourth, ``(u, t, r)``."""
    return TriContext(
        ("u", "u0"),
        ("t0", "t"),
        ("r0", "r"),
        [("u", "t", "r0"), ("u", "t0", "r"), ("u0", "t", "r")],
    )


def noncommutative_example() -> TriContext:
    """4 users x 4 tags x 3 resources on which the six orderings disagree."""
    r1 = {"u1": "t1 t2 t3 t4", "u2": "t2 t3 t4", "u3": "t2 t3 t4", "u4": "t4"}
    r2 = {"u1": "t2 t3 t4", "u2": "t2 t3 t4", "u3": "t3 t4"}
    r3 = {"u1": "t4"}
    triples = [
        (u, t, r)
        for r, rows in (("r1", r1), ("r2", r2), ("r3", r3))
        for u, tags in rows.items()
        for t in tags.split()
    ]
    return TriContext(
        ("u1", "u2", "u3", "u4"), ("t1", "t2", "t3", "t4"), ("r1", "r2", "r3"), triples
    )


K1 = bibsonomy_two_slices
K2 = bibsonomy_three_slices
K3 = phantom_example
K4 = noncommutative_example

NAMED = {"K1": K1, "K2": K2, "K3": K3, "K4": K4}


def power_context(n: int, pairwise_distinct: bool = False) -> TriContext:
    """``n x n x n`` context related by inequality.

    By default a triple is related unless all three coordinates coincide.
    With ``pairwise_distinct`` only triples of three distinct values are kept.
    """
    if n < 1:
        raise InputError("power context needs n >= 1")
    labels = [str(i) for i in range(1, n + 1)]
    if pairwise_distinct:
        keep = lambda a, b, c: a != b and b != c and a != c  # noqa: E731
    else:
        keep = lambda a, b, c: not (a == b == c)  # noqa: E731
    triples = [t for t in product(labels, repeat=3) if keep(*t)]
    return TriContext(labels, labels, labels, triples)


def diagonal_context(m: int) -> TriContext:
    """``m x m x m`` context related by equality."""
    if m < 1:
        raise InputError("diagonal context needs m >= 1")
    labels = [str(i) for i in range(1, m + 1)]
    return TriContext(labels, labels, labels, [(a, a, a) for a in labels])


def generate(spec: str) -> TriContext:
    """Parse ``power:n``, ``power-distinct:n``, ``diag:m`` or a fixture name."""
    if spec in NAMED:
        return NAMED[spec]()
    kind, _, arg = spec.partition(":")
    try:
        size = int(arg)
    except ValueError:
        raise InputError(f"bad generator {spec!r}") from None
    if kind == "power":
        return power_context(size)
    if kind == "power-distinct":
        return power_context(size, pairwise_distinct=True)
    if kind == "diag":
        return diagonal_context(size)
    raise InputError(f"unknown generator {kind!r}")


def idempotency_example(violating: bool = True):
    """Reconstruction of the resource/post/folder/user graph on which g fails
    to be idempotent (``violating``) or is idempotent because ``u3`` is not
    linked to ``f``.

    Only the stated compatible sets are pinned down; the typing
    (r, p, f, u) and the edge choice are one consistent completion.
    """
    from .mrd import Mrd

    users = ("u1", "u2", "u3") if violating else ("u1", "u2")
    edges = [
        (("r", "r1"), ("p", "p1")),
        (("r", "r2"), ("p", "p1")),
        (("r", "r1"), ("f", "f")),
        (("r", "r2"), ("f", "f")),
    ] + [(("f", "f"), ("u", u)) for u in users]
    return Mrd(
        ("r", "p", "f", "u"),
        {"r": ("r1", "r2"), "p": ("p1",), "f": ("f",), "u": ("u1", "u2", "u3")},
        [("r", "p"), ("r", "f"), ("f", "u")],
        edges,
    )
