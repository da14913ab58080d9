"""Command-line entry point.

Exit status: 0 on success, 1 when a coloring fails verification or an engine
returns a failure witness, 2 on unreadable input or bad usage. JSON goes to
stdout (or ``--out``); human-readable summaries go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coloring import (Coloring, FailureWitness, exact_four_color, kempe_kittell_color,
                       replay_witness, spiral_color, verify_coloring)
from .coloring.kempe import MAX_RESTARTS, MAX_SWITCHES
from .genlab.corpus import NAMES, corpus_entry
from .genlab.fuzz import ALGORITHMS, fuzz
from .genlab.generate import GenConfig, generate_triangulation
from .planar import (DocumentError, RotationSyntaxError, TriangulationError, load_rotation_system,
                     serialize, validate_triangulation)
from .render import to_dot, to_svg
from .spiral import decomposition_document, extract_spiral_chains

OK, FAILED, INPUT_ERROR = 0, 1, 2
DEFAULT_SEED = 0


class InputError(Exception):
    pass


def _read_text(spec: str) -> str:
    if spec.startswith("corpus/"):
        name = spec.split("/", 1)[1]
        if name not in NAMES:
            raise InputError(f"unknown corpus entry {name!r}; available: {', '.join(NAMES)}")
        return corpus_entry(name).document
    if spec == "-":
        return sys.stdin.read()
    try:
        return Path(spec).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {spec}: {exc.strerror}") from None


def _load(spec: str):
    return load_rotation_system(_read_text(spec))


def _emit(args, text: str):
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _seed(args) -> int:
    if args.seed is None:
        print(f"seed: {DEFAULT_SEED} (default)", file=sys.stderr)
        return DEFAULT_SEED
    return args.seed


def _save_witness(args, w: FailureWitness):
    if args.witness_dir:
        out = Path(args.witness_dir)
        out.mkdir(parents=True, exist_ok=True)
        path = out / f"{w.algorithm}-{w.content_hash()}.json"
        path.write_text(w.to_json())
        print(f"witness written to {path}", file=sys.stderr)


def cmd_validate(args) -> int:
    try:
        G = _load(args.input)
    except RotationSyntaxError as exc:
        _emit(args, _dump({"ok": False, "violations": [
            {"rule": "syntax", "line": exc.line, "message": exc.message}]}))
        return INPUT_ERROR
    except TriangulationError as exc:
        _emit(args, _dump(exc.report.to_dict()))
        return INPUT_ERROR
    _emit(args, _dump(validate_triangulation(G).to_dict()))
    return OK


def cmd_chains(args) -> int:
    G = _load(args.input)
    d = extract_spiral_chains(G)
    _emit(args, _dump(decomposition_document(G, d)))
    print(f"{len(d.chains)} chains, {sum(len(s) for s in d.segments)} segments", file=sys.stderr)
    return OK


def cmd_color(args) -> int:
    G = _load(args.input)
    if args.algo == "spiral":
        out = spiral_color(G, ctype_switch=not args.no_ctype_switch, kempe_repair=args.kempe_repair)
    elif args.algo == "kempe-kittell":
        out = kempe_kittell_color(G, seed=_seed(args), max_restarts=args.max_restarts,
                                  max_switches=args.max_switches)
    else:
        try:
            out = exact_four_color(G, k=args.k, bound=args.exact_bound)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if not out:
            _emit(args, _dump({"algorithm": "exact", "k": out.k, "colorable": False,
                               "nodes": out.nodes}))
            print(f"no {out.k}-coloring exists", file=sys.stderr)
            return FAILED
    if isinstance(out, FailureWitness):
        _save_witness(args, out)
        _emit(args, out.to_json())
        print(f"{out.algorithm}: stuck at vertex {out.stuck_vertex}, blocked by {list(out.blocking)}",
              file=sys.stderr)
        return FAILED
    report = verify_coloring(G, out)
    _emit(args, _dump(out.to_dict(verified=report.ok)))
    if not report.ok:
        print(f"coloring failed verification: {list(report.violations)}", file=sys.stderr)
        return FAILED
    print(f"{out.algorithm}: verified, {len(out.used_colors())} colors", file=sys.stderr)
    return OK


def cmd_verify(args) -> int:
    G = _load(args.input)
    try:
        doc = json.loads(_read_text(args.coloring))
        colors = doc["colors"] if isinstance(doc, dict) else doc
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"unreadable coloring document: {exc}") from None
    report = verify_coloring(G, colors)
    _emit(args, _dump({"ok": report.ok, "violations": [list(v) for v in report.violations]}))
    return OK if report.ok else FAILED


def cmd_gen(args) -> int:
    try:
        cfg = GenConfig(args.n, _seed(args), args.flips)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(args, serialize(generate_triangulation(cfg)))
    return OK


def cmd_fuzz(args) -> int:
    algos = tuple(args.algos.split(",")) if args.algos else ALGORITHMS
    try:
        report = fuzz(args.count, args.nmin, args.nmax, _seed(args), algos, args.witness_dir,
                      args.exact_bound, args.workers, max_restarts=args.max_restarts,
                      max_switches=args.max_switches)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(args, report.to_json())
    print(f"{report.instances} instances in {report.seconds:.1f} s; "
          + "; ".join(f"{a}: {t['success']} ok, {t['failure']} witnesses, {t['improper']} improper"
                      for a, t in sorted(report.tallies.items())), file=sys.stderr)
    return FAILED if report.violations else OK


def cmd_replay(args) -> int:
    try:
        w = FailureWitness.from_json(_read_text(args.witness))
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise InputError(f"unreadable witness: {exc}") from None
    result = replay_witness(w)
    outcome = result.outcome
    doc = {"reproduced": result.reproduced, "stuck_vertex": w.stuck_vertex,
           "blocking_colors": list(w.blocking)}
    if isinstance(outcome, FailureWitness):
        doc["replayed_stuck_vertex"] = outcome.stuck_vertex
        doc["replayed_blocking_colors"] = list(outcome.blocking)
    _emit(args, _dump(doc))
    if result.reproduced:
        print(f"impasse reproduced at vertex {w.stuck_vertex}", file=sys.stderr)
        return FAILED
    print("witness did not reproduce", file=sys.stderr)
    return INPUT_ERROR


def cmd_export(args) -> int:
    G = _load(args.input)
    d = extract_spiral_chains(G)
    colors = None
    if args.coloring:
        doc = json.loads(_read_text(args.coloring))
        colors = doc["colors"] if isinstance(doc, dict) else doc
    elif args.color:
        out = spiral_color(G, kempe_repair=True, decomposition=d)
        if isinstance(out, Coloring):
            colors = out.colors
        else:
            colors = out.partial
    render = to_svg if args.format == "svg" else to_dot
    _emit(args, render(G, d, colors))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spiralchains", description="Spiral-chain four-coloring of planar triangulations.")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, func, help_, graph=True):
        sp = sub.add_parser(name, help=help_)
        if graph:
            sp.add_argument("input", help="rotation-system file, '-' for stdin, or corpus/<name>")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a rotation-system document")
    add("chains", cmd_chains, "spiral chains, segments and theta separators")

    sp = add("color", cmd_color, "color a triangulation")
    sp.add_argument("--algo", choices=("spiral", "kempe-kittell", "exact"), default="spiral")
    sp.add_argument("--kempe-repair", action="store_true", help="enable stage-3 Kempe repair")
    sp.add_argument("--no-ctype-switch", action="store_true", help="disable c-type palette switches")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--k", type=int, default=4, help="colors for --algo exact")
    sp.add_argument("--exact-bound", type=int, default=60)
    sp.add_argument("--max-restarts", type=int, default=MAX_RESTARTS)
    sp.add_argument("--max-switches", type=int, default=MAX_SWITCHES)
    sp.add_argument("--witness-dir")

    sp = add("verify", cmd_verify, "verify a coloring JSON against a graph")
    sp.add_argument("coloring", help="coloring document (JSON with 'colors', or a list)")

    sp = add("gen", cmd_gen, "generate a random triangulation", graph=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--flips", type=int, default=0)
    sp.add_argument("--seed", type=int)

    sp = add("fuzz", cmd_fuzz, "randomized campaign over generated triangulations", graph=False)
    sp.add_argument("--count", type=int, default=10_000)
    sp.add_argument("--nmin", type=int, default=4)
    sp.add_argument("--nmax", type=int, default=64)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--algos", help=f"comma-separated subset of {','.join(ALGORITHMS)}")
    sp.add_argument("--witness-dir")
    sp.add_argument("--exact-bound", type=int, default=12)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--max-restarts", type=int, default=MAX_RESTARTS)
    sp.add_argument("--max-switches", type=int, default=MAX_SWITCHES)

    sp = add("replay", cmd_replay, "rerun a failure witness", graph=False)
    sp.add_argument("witness")

    sp = add("export", cmd_export, "draw chains (and colors) as DOT or SVG")
    sp.add_argument("--format", choices=("dot", "svg"), default="svg")
    sp.add_argument("--coloring", help="coloring document to paint the vertices with")
    sp.add_argument("--color", action="store_true", help="paint with a spiral coloring")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
