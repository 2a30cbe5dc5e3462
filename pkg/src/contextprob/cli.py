"""Batch command-line front end.

Subcommands: ratings, bell, sweep, guppy, semspace, kolmo. Every run emits
one report: a JSON record by default, or tab-separated plot data for the
tabular commands. Reports are deterministic for identical inputs and flags
except for the separate timing field; errors go to stderr and flip the
exit code to 1.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, bell, concepts, entangle, polytope, semspace

SCHEMA_VERSION = 1


def _digest(path: str | Path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _resolve_context(table: concepts.RatingTable, query: str) -> str:
    """Exact context label, or a unique case-insensitive substring of one."""
    if query in table.contexts:
        return query
    hits = [c for c in table.contexts if query.lower() in c.lower()]
    if len(hits) == 1:
        return hits[0]
    if len(hits) > 1:
        raise ValueError(
            f"context {query!r} is ambiguous; matches: "
            + ", ".join(repr(c) for c in hits)
        )
    raise ValueError(
        f"unknown context {query!r}; available contexts: "
        + ", ".join(repr(c) for c in table.contexts)
    )


def _pick_context(table: concepts.RatingTable, given: str | None, flag: str) -> str:
    if given is not None:
        return _resolve_context(table, given)
    if len(table.contexts) == 1:
        return table.contexts[0]
    raise ValueError(
        f"{flag} is required for a multi-context table; available contexts: "
        + ", ".join(repr(c) for c in table.contexts)
    )


def _table_record(table: bell.CorrelationTable) -> dict:
    return {
        "row_contexts": list(table.row_contexts),
        "col_contexts": list(table.col_contexts),
        "joint": [[float(v) for v in row] for row in table.joint],
        "singles_a": list(table.singles_a) if table.has_singles else None,
        "singles_b": list(table.singles_b) if table.has_singles else None,
    }


def _load_table(args) -> tuple[bell.CorrelationTable, list[str]]:
    if (args.scenario is None) == (args.odd_event is None):
        raise ValueError("give exactly one of --scenario and --odd-event")
    if args.scenario is not None:
        return bell.load_scenario(args.scenario), [args.scenario]
    return bell.pet_food_table(bell.PetFoodScenario(args.odd_event)), []


def _cmd_ratings(args):
    table = concepts.load_ratings(args.table)
    context = _resolve_context(table, args.context)
    dist = concepts.context_distribution(table, context)
    ranking = concepts.rank_exemplars(table, context)
    results = {
        "context": context,
        "typicalities": {x: dist.probability(x) for x in table.exemplars},
        "ranking": ranking,
    }
    tsv = ["rank\texemplar\ttypicality"]
    tsv += [
        f"{i + 1}\t{x}\t{dist.probability(x)!r}" for i, x in enumerate(ranking)
    ]
    return results, [args.table], tsv


def _cmd_bell(args):
    table, inputs = _load_table(args)
    value = bell.bell_value(table)
    product = None
    if table.has_singles:
        check = bell.product_equality_check(
            (*table.singles_a, *table.singles_b),
            table.joints_flat(),
            tol=args.tolerance,
        )
        product = {
            "cells": [list(row) for row in check.cells],
            "all_hold": check.all_hold,
            "tolerance": check.tolerance,
        }
    results = {
        "bell_value": value,
        "all_forms_value": bell.bell_value_all_forms(table),
        "violated": bell.is_violated(value),
        "classification": polytope.classify(table),
        "product_equality": product,
        "table": _table_record(table),
    }
    return results, inputs, None


def _parse_grid(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(x) for x in parts)
    except ValueError:
        raise ValueError(f"grid values must be numbers, got {text!r}") from None
    if not (0.0 <= start <= 1.0 and 0.0 <= stop <= 1.0):
        raise ValueError(f"grid range [{start}, {stop}] exceeds [0, 1]")
    if stop < start:
        raise ValueError(f"grid stop {stop} is below start {start}")
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step}")
    values: list[float] = []
    k = 0
    while True:
        v = start + k * step
        if v > stop + 1e-9:
            break
        values.append(min(v, 1.0))
        k += 1
    return values


def _cmd_sweep(args):
    points = bell.sweep_mixing(_parse_grid(args.grid))
    results = {
        "points": [
            {
                "odd_event_probability": pt.odd_event_probability,
                "bell_value": pt.bell_value,
                "violated": pt.violated,
            }
            for pt in points
        ]
    }
    tsv = ["odd_event_probability\tbell_value\tviolated"]
    tsv += [
        f"{pt.odd_event_probability!r}\t{pt.bell_value!r}\t"
        f"{'true' if pt.violated else 'false'}"
        for pt in points
    ]
    return results, [], tsv


def _cmd_guppy(args):
    table_a = concepts.load_ratings(args.concept_a)
    table_b = concepts.load_ratings(args.concept_b)
    ctx_a = _pick_context(table_a, args.context_a, "--context-a")
    ctx_b = _pick_context(table_b, args.context_b, "--context-b")
    dist_a = concepts.context_distribution(table_a, ctx_a)
    dist_b = concepts.context_distribution(table_b, ctx_b)
    relation = entangle.load_relation(args.relation)
    state = entangle.combine(dist_a, dist_b, relation)
    gap = entangle.guppy_gap(state, dist_a, dist_b, args.exemplar)
    results = {
        "exemplar": args.exemplar,
        "context_a": ctx_a,
        "context_b": ctx_b,
        "typicality_a": dist_a.probability(args.exemplar),
        "typicality_b": dist_b.probability(args.exemplar),
        "combined_marginal": entangle.marginal(state, "A").probability(args.exemplar),
        "gap": gap,
        "guppy_effect": gap > 0,
        "support": sorted(list(pair) for pair in state.support),
    }
    return results, [args.concept_a, args.concept_b, args.relation], None


def _cmd_semspace(args):
    lowercase = not args.no_lowercase
    corpus = semspace.load_corpus(args.corpus, lowercase=lowercase)
    matrix = semspace.build_matrix(corpus)
    k = args.rank if args.rank is not None else min(len(matrix.terms), len(matrix.docs))
    space = semspace.svd_truncate(matrix, k)
    results = {
        "rank": space.rank,
        "terms": len(matrix.terms),
        "docs": len(matrix.docs),
        "singular_values": [float(s) for s in space.singular_values],
        "similarity": None,
        "comparison": None,
    }
    if args.pair is not None:
        t1, t2 = args.pair
        results["similarity"] = {
            "terms": [t1, t2],
            "value": semspace.similarity(space, t1, t2),
        }
    if args.compare is not None:
        s1, s2 = args.compare
        tok1 = s1.lower().split() if lowercase else s1.split()
        tok2 = s2.lower().split() if lowercase else s2.split()
        comparison = {"sentence_1": s1, "sentence_2": s2}
        if args.mode in ("bow", "both"):
            same = np.array_equal(
                semspace.bow_vector(tok1, matrix.terms),
                semspace.bow_vector(tok2, matrix.terms),
            )
            comparison["bag_of_words"] = (
                "indistinguishable" if same else "distinguishable"
            )
        if args.mode in ("order", "both"):
            same = np.array_equal(
                semspace.order_representation(tok1, matrix.terms),
                semspace.order_representation(tok2, matrix.terms),
            )
            comparison["order"] = "indistinguishable" if same else "distinguishable"
        results["comparison"] = comparison
    return results, [args.corpus], None


def _cmd_kolmo(args):
    table, inputs = _load_table(args)
    result = polytope.realizable(table, tol=args.tolerance)
    weights = None
    if result.feasible:
        weights = [
            {
                "row_outcomes": list(s.row_outcomes),
                "col_outcomes": list(s.col_outcomes),
                "weight": w,
            }
            for s, w in zip(polytope.enumerate_strategies(), result.weights)
            if w > 1e-15
        ]
    witness = None
    if result.witness is not None:
        witness = {
            "kind": result.witness.kind,
            "value": result.witness.value,
            "bound": result.witness.bound,
            "signs": list(result.witness.signs) if result.witness.signs else None,
            "description": result.witness.description,
        }
    results = {
        "feasible": result.feasible,
        "classification": polytope.classify(table),
        "all_forms_value": bell.bell_value_all_forms(table),
        "max_residual": result.max_residual,
        "weights": weights,
        "witness": witness,
        "table": _table_record(table),
    }
    return results, inputs, None


def _add_scenario_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--scenario", help="scenario JSON file with a joint table or mixing probability")
    sp.add_argument(
        "--odd-event",
        type=float,
        metavar="PROB",
        help="pet-food scenario: probability of the odd crossed-eating event",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contextprob",
        description="Contextual probability toolkit: concept typicalities, "
        "entangled combinations, Bell-functional tests, classical "
        "realizability, and toy semantic spaces.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, handler):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(handler=handler)
        sp.add_argument(
            "--format",
            choices=("record", "tsv"),
            default="record",
            help="output format: JSON record (default) or tab-separated plot data",
        )
        return sp

    sp = add("ratings", "rank exemplars of a rating table under one context", _cmd_ratings)
    sp.add_argument("table", help="rating table file (tab-separated)")
    sp.add_argument(
        "--context",
        required=True,
        help="context label, or a unique substring of one",
    )

    sp = add("bell", "evaluate the Bell functional on a scenario", _cmd_bell)
    _add_scenario_flags(sp)
    sp.add_argument(
        "--tolerance",
        type=float,
        default=1e-9,
        help="tolerance for the product-equality flags (default 1e-9)",
    )

    sp = add("sweep", "sweep the pet-food mixing probability", _cmd_sweep)
    sp.add_argument(
        "--grid",
        required=True,
        metavar="START:STOP:STEP",
        help="inclusive grid of mixing probabilities within [0, 1]",
    )

    sp = add("guppy", "combine two concepts and report an exemplar's boost", _cmd_guppy)
    sp.add_argument("--concept-a", required=True, help="rating table for the first concept")
    sp.add_argument("--concept-b", required=True, help="rating table for the second concept")
    sp.add_argument("--relation", required=True, help="compatibility pair file")
    sp.add_argument("--exemplar", required=True, help="exemplar present in both concepts")
    sp.add_argument("--context-a", help="context of the first table (default: its only one)")
    sp.add_argument("--context-b", help="context of the second table (default: its only one)")

    sp = add("semspace", "build a semantic space and compare representations", _cmd_semspace)
    sp.add_argument("--corpus", required=True, help="corpus file, one document per line")
    sp.add_argument("--rank", type=int, help="truncation rank (default: full rank)")
    sp.add_argument(
        "--pair", nargs=2, metavar=("TERM1", "TERM2"), help="report similarity of two terms"
    )
    sp.add_argument(
        "--compare",
        nargs=2,
        metavar=("SENT1", "SENT2"),
        help="compare two sentences under the chosen representations",
    )
    sp.add_argument(
        "--mode",
        choices=("bow", "order", "both"),
        default="both",
        help="which sentence representations to compare (default both)",
    )
    sp.add_argument(
        "--no-lowercase",
        action="store_true",
        help="keep the corpus and sentence case as-is",
    )

    sp = add("kolmo", "decide classical realizability of a scenario", _cmd_kolmo)
    _add_scenario_flags(sp)
    sp.add_argument(
        "--tolerance",
        type=float,
        default=1e-9,
        help="feasibility tolerance for the mixture solve (default 1e-9)",
    )

    return parser


def main(argv: list[str] | None = None) -> int:
    raw = list(argv) if argv is not None else sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(raw)
    start = time.perf_counter()
    try:
        results, inputs, tsv = args.handler(args)
        digests = {str(p): _digest(p) for p in inputs}
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed = time.perf_counter() - start

    if args.format == "tsv":
        if tsv is None:
            print(
                f"error: tab-separated output is not available for '{args.command}'",
                file=sys.stderr,
            )
            return 1
        print(f"# contextprob schema={SCHEMA_VERSION} version={__version__}")
        print(f"# command: {args.command} " + " ".join(raw[1:]))
        for line in tsv:
            print(line)
        return 0

    report = {
        "schema_version": SCHEMA_VERSION,
        "artifact_version": __version__,
        "command": raw,
        "inputs": digests,
        "results": results,
        "timing_s": round(elapsed, 6),
    }
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
