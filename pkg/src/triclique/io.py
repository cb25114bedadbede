"""Reading and writing contexts and MRDs.

Contexts come either as CSV (one ``object,attribute,condition`` row per
triple, ``#`` comments) or as JSON with ``objects``, ``attributes``,
``conditions`` and ``triples``; only the JSON form can declare isolated
entities.  MRDs are JSON with ``entity_types``, ``entities``,
``relationship_types`` and ``edges``, where each edge endpoint is written
``type:label``.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
from pathlib import Path
from typing import Any

from .context import TriContext
from .errors import InputError
from .mrd import Entity, Mrd

CONTEXT_KEYS = ("objects", "attributes", "conditions", "triples")
MRD_KEYS = ("entity_types", "entities", "relationship_types", "edges")


def parse_context_csv(text: str) -> TriContext:
    triples = []
    rows = csv.reader(io.StringIO(text), skipinitialspace=True)
    for row in rows:
        line = rows.line_num
        if not row or row[0].lstrip().startswith("#"):
            continue
        cells = [c.strip() for c in row]
        if len(cells) == 1 and not cells[0]:
            continue
        if len(cells) != 3 or not all(cells):
            raise InputError(f"line {line}: expected object,attribute,condition, got {row!r}")
        triples.append(tuple(cells))
    return TriContext.from_triples(triples)


def _label_list(doc: dict, key: str) -> list[str]:
    value = doc.get(key, [])
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise InputError(f"{key!r} must be an array of strings")
    return value


def context_from_dict(doc: Any) -> TriContext:
    if not isinstance(doc, dict) or "triples" not in doc:
        raise InputError("a context document needs a 'triples' key")
    triples = doc["triples"]
    if not isinstance(triples, list):
        raise InputError("'triples' must be an array")
    for t in triples:
        if not isinstance(t, list) or len(t) != 3 or not all(isinstance(v, str) for v in t):
            raise InputError(f"bad triple {t!r}")
    return TriContext.from_triples(
        [tuple(t) for t in triples],
        _label_list(doc, "objects"),
        _label_list(doc, "attributes"),
        _label_list(doc, "conditions"),
    )


def context_to_dict(ctx: TriContext) -> dict:
    return {
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "conditions": list(ctx.conditions),
        "triples": [list(t) for t in sorted(ctx.incidence)],
    }


def context_to_csv(ctx: TriContext) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(sorted(ctx.incidence))
    return buf.getvalue()


def _endpoint(value: Any) -> tuple[str, str]:
    if not isinstance(value, str) or ":" not in value:
        raise InputError(f"edge endpoint {value!r} must be written type:label")
    type_name, _, label = value.partition(":")
    return type_name, label


def mrd_from_dict(doc: Any) -> Mrd:
    if not isinstance(doc, dict) or any(k not in doc for k in MRD_KEYS):
        raise InputError(f"an MRD document needs the keys {', '.join(MRD_KEYS)}")
    entities = doc["entities"]
    if not isinstance(entities, dict):
        raise InputError("'entities' must map type names to label arrays")
    edges = []
    for pair in doc["edges"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"bad edge {pair!r}")
        edges.append((_endpoint(pair[0]), _endpoint(pair[1])))
    rel = []
    for pair in doc["relationship_types"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"bad relationship type {pair!r}")
        rel.append(tuple(pair))
    return Mrd(_label_list(doc, "entity_types"), entities, rel, edges)


def mrd_to_dict(mrd: Mrd) -> dict:
    def endpoint(e: Entity) -> str:
        return f"{e.type}:{e.label}"

    order = {t: i for i, t in enumerate(mrd.entity_types)}
    return {
        "entity_types": list(mrd.entity_types),
        "entities": {t: [e.label for e in mrd.entities if e.type == t] for t in mrd.entity_types},
        "relationship_types": sorted(
            sorted(pair, key=order.__getitem__) for pair in mrd.relationship_types
        ),
        "edges": [[endpoint(a), endpoint(b)] for a, b in mrd.edges],
    }


def parse_document(text: str) -> TriContext | Mrd:
    """Parse a context or MRD, telling them apart by shape and keys."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"line {exc.lineno}: {exc.msg}") from None
        if isinstance(doc, dict) and "entity_types" in doc:
            return mrd_from_dict(doc)
        return context_from_dict(doc)
    return parse_context_csv(text)


def read_bytes(path: str | Path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError("input is not valid UTF-8") from None


def load(path: str | Path) -> TriContext | Mrd:
    return parse_document(decode(read_bytes(path)))


def load_context(path: str | Path) -> TriContext:
    doc = load(path)
    if not isinstance(doc, TriContext):
        raise InputError(f"{path} holds an MRD, not a context")
    return doc


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()
