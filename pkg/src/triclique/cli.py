"""Command-line front end producing deterministic JSON (or plain-table) reports.

Exit codes: 0 success, 2 unreadable or malformed input, 3 size cap
exceeded, 4 two independent computations disagree.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .context import TriContext, Triple, all_trisets, triset_leq
from .enumeration import (
    COUNT_CONVENTIONS,
    WEEDING_MODES,
    brute_force_triconcepts,
    count_switching_generators,
    fixpoint_triconcepts,
    switching_count_closed_form,
    switching_count_triple_sum,
    switching_generators,
)
from .errors import ContractError, InputError, ResourceError
from .fixtures import generate
from .io import canonical_json, context_to_dict, decode, digest, parse_document, read_bytes
from .mrd import Mrd, closed_non_maximal_witness, encode_tripartite, enumerate_mccs, mccs_to_triset, phantom_edges
from .operators import H_ORDER, ORDERINGS, h_close
from .setsys import ccs_explicit_family, property_table, weeded_flat_family
from .witnesses import check_non_commutativity, find_monotonicity_witness, no_global_closure_condition

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_DISAGREE = 4


class Disagreement(Exception):
    """Raised with a finished report when cross-checked results differ."""

    def __init__(self, report: dict):
        super().__init__("independent computations disagree")
        self.report = report


# -- rendering helpers ---------------------------------------------------------


def _triple(ctx: TriContext, t: Triple | None):
    return None if t is None else [list(part) for part in ctx.describe(t)]


def _entities(mrd: Mrd, mask: int) -> list[str]:
    return [str(e) for e in mrd.members(mask)]


def _witness(ctx: TriContext, w) -> dict | None:
    if w is None:
        return None
    return {
        "lower": _triple(ctx, w.lower),
        "upper": _triple(ctx, w.upper),
        "closed_lower": _triple(ctx, w.closed_lower),
        "closed_upper": _triple(ctx, w.closed_upper),
    }


# -- input ---------------------------------------------------------------------


def _load(args) -> tuple[TriContext | Mrd, dict]:
    if args.gen is not None:
        if args.input is not None:
            raise InputError("give either an input file or --gen, not both")
        doc = generate(args.gen)
        source = {"generator": args.gen, "sha256": digest(canonical_json(context_to_dict(doc)).encode())}
        return doc, source
    if args.input is None:
        raise InputError("an input file or --gen is required")
    data = read_bytes(args.input)
    return parse_document(decode(data)), {"file": args.input, "sha256": digest(data)}


def _require_context(doc) -> TriContext:
    if not isinstance(doc, TriContext):
        raise InputError("this command needs a context, not an MRD")
    return doc


# -- commands ------------------------------------------------------------------


def cmd_triconcepts(doc, args) -> dict:
    ctx = _require_context(doc)
    methods = ("brute", "fixpoint") if args.method == "both" else (args.method,)
    found = {}
    for m in methods:
        run = brute_force_triconcepts if m == "brute" else fixpoint_triconcepts
        found[m] = run(ctx, args.size_cap)
    first = found[methods[0]]
    result = {
        "count": len(first),
        "triconcepts": [_triple(ctx, t) for t in first],
    }
    if args.method == "both":
        agree = found["brute"] == found["fixpoint"]
        result["methods_agree"] = agree
        if not agree:
            result["fixpoint_only"] = [_triple(ctx, t) for t in found["fixpoint"] if t not in found["brute"]]
            result["brute_only"] = [_triple(ctx, t) for t in found["brute"] if t not in found["fixpoint"]]
            raise Disagreement(result)
    return result


def _power_size(spec: str | None) -> int | None:
    if spec and spec.startswith("power:"):
        return int(spec.split(":", 1)[1])
    return None


def cmd_switching(doc, args) -> dict:
    ctx = _require_context(doc)
    gens = switching_generators(ctx, include_degenerate=args.include_degenerate, cap=args.size_cap)
    result = {
        "convention": args.count_convention,
        "count": count_switching_generators(ctx, args.count_convention, args.size_cap),
        "generators": [
            {
                "triset": _triple(ctx, g.triset),
                "degenerate": g.degenerate,
                "witnesses": [[_triple(ctx, a), _triple(ctx, b)] for a, b in g.witnesses],
            }
            for g in gens
        ],
    }
    n = _power_size(args.gen)
    if n is not None:
        result["closed_form"] = switching_count_closed_form(n)
        result["triple_sum"] = switching_count_triple_sum(n)
    return result


def _mccs_block(mrd: Mrd, cap) -> dict:
    mccs = enumerate_mccs(mrd, cap)
    witness = closed_non_maximal_witness(mrd, cap)
    return {
        "mccs": [_entities(mrd, m) for m in mccs],
        "closed_non_maximal": None if witness is None else _entities(mrd, witness),
    }


def cmd_mccs(doc, args) -> dict:
    if isinstance(doc, Mrd):
        return _mccs_block(doc, args.size_cap)
    ctx = doc
    ctx.check_size(args.size_cap)
    mrd = encode_tripartite(ctx)
    result = _mccs_block(mrd, args.size_cap)
    concepts = set(brute_force_triconcepts(ctx, args.size_cap))
    repairs, recovered, warnings = [], set(), []
    for m in enumerate_mccs(mrd, args.size_cap):
        t = mccs_to_triset(ctx, m, mrd)
        repairs.append({"mccs": _entities(mrd, m), "triconcept": _triple(ctx, t)})
        if t is None:
            warnings.append({"kind": "no-repair", "mccs": _entities(mrd, m)})
        elif t not in concepts:
            warnings.append({"kind": "not-a-triconcept", "mccs": _entities(mrd, m), "triset": _triple(ctx, t)})
        else:
            recovered.add(t)
    for c in ctx.sorted(concepts - recovered):
        if not c.has_empty_product():
            warnings.append({"kind": "unrecovered-triconcept", "triconcept": _triple(ctx, c)})
    result.update(
        phantom_edges=[list(p) for p in phantom_edges(ctx)],
        repairs=repairs,
        warnings=warnings,
    )
    return result


def cmd_check(doc, args) -> dict:
    ctx = _require_context(doc)
    cap = args.size_cap
    ctx.check_size(cap)
    trisets = list(all_trisets(ctx, cap))
    extensive = idempotent = True
    for s in trisets:
        image = h_close(ctx, s)
        extensive &= s.is_subtriple(image)
        idempotent &= h_close(ctx, image) == image
    monotonicity = {}
    for order in ORDERINGS:
        row = {"full": _witness(ctx, find_monotonicity_witness(ctx, order, "full", cap=cap))}
        for mode in WEEDING_MODES:
            row[f"weeded_{mode}"] = _witness(ctx, find_monotonicity_witness(ctx, order, f"weeded-{mode}", cap=cap))
        monotonicity[str(order)] = row
    noncomm = check_non_commutativity(ctx, cap)
    obstruction = no_global_closure_condition(ctx, cap)
    setsys = {}
    for mode in WEEDING_MODES:
        for with_empty in (True, False):
            key = f"weeded_{mode}_{'with' if with_empty else 'without'}_empty"
            setsys[key] = property_table(weeded_flat_family(ctx, mode, with_empty, cap))
    setsys["ccs_of_encoding"] = property_table(ccs_explicit_family(encode_tripartite(ctx), cap))
    if not (extensive and idempotent):
        raise ContractError("h is not extensive and idempotent on this context")
    return {
        "h_extensive": extensive,
        "h_idempotent": idempotent,
        "h_monotonicity": monotonicity[str(H_ORDER)],
        "sigma_monotonicity": monotonicity,
        "non_commutativity": None
        if noncomm is None
        else {"orderings": [str(noncomm[0]), str(noncomm[1])], "triset": _triple(ctx, noncomm[2])},
        "no_global_closure": None
        if obstruction is None
        else {
            "first": _triple(ctx, obstruction[0]),
            "second": _triple(ctx, obstruction[1]),
            "meet": _triple(ctx, obstruction[2]),
        },
        "set_systems": setsys,
    }


COMMANDS = {
    "triconcepts": cmd_triconcepts,
    "switching": cmd_switching,
    "mccs": cmd_mccs,
    "check": cmd_check,
}


# -- output --------------------------------------------------------------------


def _table_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_table_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_cell(item)}")
        return lines
    if isinstance(value, list):
        if all(not isinstance(v, dict) for v in value):
            return [f"{pad}{_cell(v)}" for v in value]
        lines = []
        for v in value:
            lines.append(f"{pad}-")
            lines.extend(_table_lines(v, indent + 1))
        return lines
    return [f"{pad}{_cell(value)}"]


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, list):
        return " ".join(_cell(v) if not isinstance(v, list) else "{" + ",".join(map(str, v)) + "}" for v in value)
    return str(value).lower() if isinstance(value, bool) else str(value)


def render(report: dict, fmt: str) -> str:
    if fmt == "structured":
        return canonical_json(report)
    return "\n".join(_table_lines(report)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triclique", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="context (CSV or JSON) or MRD (JSON) file")
    common.add_argument("--gen", help="built-in context: power:n, power-distinct:n, diag:m, K1..K4")
    common.add_argument("--size-cap", type=int, default=None, help="largest axis size for exhaustive search")
    common.add_argument("--format", choices=("structured", "table"), default="structured")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triconcepts", parents=[common], help="list triconcepts")
    p.add_argument("--method", choices=("brute", "fixpoint", "both"), default="both")
    p = sub.add_parser("switching", parents=[common], help="list and count switching generators")
    p.add_argument("--count-convention", choices=COUNT_CONVENTIONS, default="product")
    p.add_argument("--include-degenerate", action="store_true", help="also list empty-product generators")
    sub.add_parser("mccs", parents=[common], help="MCCSs of a context's encoding or of an MRD")
    sub.add_parser("check", parents=[common], help="closure-property report for a context")
    return parser


def _echo(args) -> dict:
    echo = {k: v for k, v in sorted(vars(args).items()) if k != "input"}
    return echo


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = {"command": _echo(args), "version": __version__}
    code = EXIT_OK
    try:
        doc, source = _load(args)
        report["input"] = source
        report["result"] = COMMANDS[args.command](doc, args)
    except InputError as exc:
        print(f"triclique: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"triclique: error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ContractError as exc:
        print(f"triclique: error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except Disagreement as exc:
        report["result"] = exc.report
        code = EXIT_DISAGREE
    sys.stdout.write(render(report, args.format))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
