"""Command line front end.

    ajsdual build  --type A2 --word "s0 s1 sA" --base Q0 [--shift N]
    ajsdual verify SUITE --type A2 [--window W] [--max-word L] [--tilt-by "s0 s1"]
    ajsdual dump   --type A2 --word "s0 s1" --output obj.json
    ajsdual load   obj.json

Exit codes: 0 all checks passed, 1 some check failed, 2 usage or data error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .ajscat import KObject, bott_samelson, object_from_json, object_to_json, objects_equal, rank_table
from .fracring import format_fraction, get_ring
from .rootsys import build_root_datum
from .suites import SUITES, Config, run_suite, word_text

EXIT_OK, EXIT_FAILED, EXIT_ERROR = 0, 1, 2


class UsageError(ValueError):
    pass


def parse_word(text: str, rank: int, affine: bool = True) -> tuple[int, ...]:
    """``"s0 s1 sA"`` -> ``(0, 1, rank)``; ``e`` or an empty string is the empty word."""
    out = []
    for token in text.replace(",", " ").split():
        if token == "e":
            continue
        if token == "sA" and affine:
            out.append(rank)
            continue
        if token.startswith("s") and token[1:].isdigit() and int(token[1:]) < rank:
            out.append(int(token[1:]))
            continue
        raise UsageError(f"invalid word token {token!r}")
    return tuple(out)


def parse_field(text: str) -> int:
    if text in ("Q", "QQ", "0"):
        return 0
    digits = text[1:] if text[:1] in "Ff" else text
    if not digits.isdigit():
        raise UsageError(f"invalid field {text!r}; use Q or F<p>")
    return int(digits)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", default="A2", help="root system type: A1, A2, B2 (G2 with --experimental)")
    p.add_argument("--field", default="Q", help="Q or F<p> for a prime p")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--experimental", action="store_true", help="allow G2")


def _add_object(p: argparse.ArgumentParser) -> None:
    p.add_argument("--word", default="", help='simple affine reflections, e.g. "s0 s1 sA"')
    p.add_argument("--base", choices=("P0", "Q0"), default="P0")
    p.add_argument("--shift", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ajsdual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a translated object and print it")
    _add_common(p)
    _add_object(p)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p)
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--window", type=int, help="alcove length bound")
    p.add_argument("--max-word", type=int, help="word length bound")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tilt-by", help='finite Weyl element for kipptrans, e.g. "e" or "s0 s1"')
    p.add_argument("--base", choices=("P0", "Q0", "both"), default="both")

    p = sub.add_parser("dump", help="write an object as JSON")
    _add_common(p)
    _add_object(p)
    p.add_argument("--output", "-o", help="file to write (default stdout)")

    p = sub.add_parser("load", help="read an object from JSON and check it")
    p.add_argument("path", help="JSON file, or - for stdin")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--experimental", action="store_true")
    return parser


def _ring(args):
    datum = build_root_datum(args.type, args.experimental)
    return get_ring(datum, parse_field(args.field))


def _build_object(args) -> KObject:
    ring = _ring(args)
    word = parse_word(args.word, ring.datum.rank)
    return bott_samelson(ring, word, args.base, args.shift)


def format_table(M: KObject) -> str:
    lines = [f"object {' '.join(map(str, M.provenance))}",
             f"support: {len(M.components)} alcoves"]
    for a, (rank, degs) in sorted(rank_table(M).items(), key=lambda t: (t[0].length, t[0].point)):
        lines.append(f"  {a!r}  rank {rank}  degrees {list(degs)}")
    lines.append(f"edges: {len(M.edges)}")
    for (a, beta), e in sorted(M.edges.items(), key=lambda t: (t[0][1], t[0][0].length, t[0][0].point)):
        root = M.ring.datum.positive_roots[beta]
        cols = ["[" + ", ".join(format_fraction(x) for x in v) + "]" for v in e.vectors]
        lines.append(f"  {a!r} beta={root} split={e.split}: {' '.join(cols)}")
    return "\n".join(lines)


def _emit(data, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def cmd_build(args) -> int:
    M = _build_object(args)
    _emit(object_to_json(M), format_table(M), args.format)
    return EXIT_OK


def cmd_dump(args) -> int:
    M = _build_object(args)
    text = json.dumps(object_to_json(M), indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _rebuild_from_provenance(M: KObject) -> Optional[KObject]:
    prov = M.provenance
    if not prov or prov[0] not in ("P0", "Q0"):
        return None
    word, n = [], 0
    for step in prov[1:]:
        if step[0] == "T" and not n:
            word.append(step[1])
        elif step[0] == "shift":
            n += step[1]
        else:
            return None
    return bott_samelson(M.ring, word, prov[0], n)


def cmd_load(args) -> int:
    text = sys.stdin.read() if args.path == "-" else open(args.path).read()
    data = json.loads(text)
    if not isinstance(data, dict) or "type" not in data:
        raise UsageError("not an object dump")
    datum = build_root_datum(data["type"], args.experimental)
    ring = get_ring(datum, int(data.get("field", 0)))
    M = object_from_json(ring, data)
    rebuilt = _rebuild_from_provenance(M)
    matches = None if rebuilt is None else objects_equal(M, rebuilt)
    report = {"type": data["type"], "alcoves": len(M.components), "edges": len(M.edges),
              "matches_provenance": matches}
    _emit(report, format_table(M) + f"\nmatches provenance: {matches}", args.format)
    return EXIT_OK if matches is not False else EXIT_FAILED


def cmd_verify(args) -> int:
    datum = build_root_datum(args.type, args.experimental)
    tilt_by = None
    if args.tilt_by is not None:
        tilt_by = parse_word(args.tilt_by, datum.rank, affine=False)
    cfg = Config(root_type=args.type, characteristic=parse_field(args.field), window=args.window,
                 max_word=args.max_word, seed=args.seed, tilt_by=tilt_by,
                 bases=("P0", "Q0") if args.base == "both" else (args.base,),
                 experimental=args.experimental)
    cfg.ring()
    results = run_suite(args.suite, cfg)
    ok = all(r.ok for r in results)
    if args.format == "json":
        print(json.dumps({"type": args.type, "ok": ok, "suites": [r.to_json() for r in results]}, indent=2))
    else:
        for r in results:
            verdict = "PASS" if r.ok else "FAIL"
            print(f"{verdict} {r.name}: {r.checked} checks, {r.failed} failed, {r.seconds:.1f}s")
            for clause, entry in sorted(r.clauses.items()):
                print(f"    {clause}: {entry['checked']} checked, {entry['failed']} failed")
            for note, value in r.notes.items():
                print(f"    {note}: {value}")
            for line in r.failures[:5]:
                print(f"    failure {line}")
    return EXIT_OK if ok else EXIT_FAILED


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "dump": cmd_dump, "load": cmd_load}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
