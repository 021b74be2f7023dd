"""Command line interface: ``nca enumerate | biject | decompose | straighten | verify``.

Every command prints one JSON document::

    {"schema": "nca/1", "command": ..., "status": "ok" | "error",
     "payload": ..., "error": {"code": ..., "message": ...} | null,
     "timing_ms": ..., "provenance": ...}

and exits with status 0 exactly when ``status`` is ``ok``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import bidet, combinat, grass, specht, tlalg
from .combinat import Partition, Tableau
from .errors import NCAError, OutOfRangeError, ShapeError, UnsupportedShapeError

SCHEMA = "nca/1"
DEFAULT_MAX_N = 6
SIZE_LIMIT = 12


def default_max_n() -> int:
    value = os.environ.get("NCA_MAX_N")
    if value is None:
        return DEFAULT_MAX_N
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"NCA_MAX_N must be an integer, got {value!r}")


class UsageError(NCAError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would print text and exit 2
        raise UsageError(message)


# -- input helpers -------------------------------------------------------------


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


class BadShapeError(UsageError):
    code = "bad_shape"


def parse_shape(text: str) -> Partition:
    if not re.fullmatch(r"\s*\d+(\s*,\s*\d+)*\s*", text or ""):
        raise BadShapeError(f"bad shape {text!r}: expected comma-separated parts like 3,2,1")
    try:
        return Partition.parse(text)
    except ShapeError as exc:
        raise BadShapeError(f"bad shape {text!r}: {exc}")


def parse_monomial(text: str) -> List[Tuple[int, ...]]:
    """``13,24`` (single-digit indices) or ``1:3,2:4``."""
    factors = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if ":" in part or "." in part:
            factors.append(tuple(int(x) for x in part.replace(".", ":").split(":")))
        elif part.isdigit():
            factors.append(tuple(int(c) for c in part))
        else:
            raise UsageError(f"bad monomial factor {part!r}")
    if not factors:
        raise UsageError("empty monomial")
    return factors


def load_json(inline: Optional[str], path: Optional[str]):
    if inline is not None:
        text = inline
    elif path == "-":
        text = sys.stdin.read()
    elif path:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    else:
        raise UsageError("no input given (use --json or --input)")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not valid JSON: {exc}")


def tableau_from_json(data) -> Tableau:
    if isinstance(data, dict) and "arcs" in data:
        return Tableau(tuple(tuple(sorted(a)) for a in data["arcs"]))
    cols = data["columns"] if isinstance(data, dict) else data
    try:
        return Tableau(tuple(tuple(int(x) for x in c) for c in cols))
    except (TypeError, KeyError) as exc:
        raise UsageError(f"bad tableau JSON: {exc}")


def _check_size(n: int) -> None:
    if n > SIZE_LIMIT:
        raise OutOfRangeError(f"size {n} exceeds the limit {SIZE_LIMIT}")


# -- commands -------------------------------------------------------------------


def cmd_enumerate(args) -> Tuple[object, str]:
    shape = parse_shape(args.shape)
    _check_size(shape.size)
    if args.kind == "snct":
        if args.weight is None:
            raise UsageError("--weight is required for snct")
        weight = parse_int_list(args.weight)
        items = combinat.snct_classes(shape, weight)
        provenance = "semi-non-crossing tableaux as Young-subgroup classes of NCT"
    elif args.kind == "ssyt":
        if args.weight is None:
            raise UsageError("--weight is required for ssyt")
        items = combinat.enumerate_ssyt(shape, parse_int_list(args.weight))
        provenance = "semistandard Young tableaux"
    elif args.kind == "nct":
        items = combinat.enumerate_nct(shape, complete=args.complete)
        provenance = "NCT from Yamanouchi readings (bracket matching)"
    else:
        items = combinat.enumerate_syt(shape, complete=args.complete)
        provenance = "SYT from Yamanouchi readings (first-with-first matching)"
    payload = {
        "shape": list(shape.parts),
        "kind": args.kind,
        "count": len(items),
        "tableaux": [specht.tableau_json(t) for t in items],
    }
    return payload, provenance


def cmd_biject(args) -> Tuple[object, str]:
    t = tableau_from_json(load_json(args.json, args.input))
    _check_size(t.size)
    if args.direction == "syt-to-nct":
        image, back = combinat.syt_to_nct(t), combinat.nct_to_syt
    else:
        image, back = combinat.nct_to_syt(t), combinat.syt_to_nct
    payload = {
        "direction": args.direction,
        "input": specht.tableau_json(t.canonical()),
        "image": specht.tableau_json(image),
        "reading": list(combinat.reading_of(image).labels),
    }
    if args.round_trip:
        payload["round_trip"] = back(image) == t.canonical()
    return payload, "SYT and NCT sharing a Yamanouchi reading"


def _specht_payload(target: str, t: Tableau, result: specht.SpechtElement) -> dict:
    return {
        "target": target,
        "input": specht.tableau_json(t),
        "terms": result.to_json(),
        "verified": True,
    }


def cmd_decompose(args) -> Tuple[object, str]:
    data = load_json(args.json, args.input)
    shape = parse_shape(args.shape) if args.shape else None
    if args.target == "bitableau":
        b = bidet.Bitableau.from_json(data)
        _check_size(b.shape.size)
        result = bidet.decompose_bideterminant(b)
        x = bidet.matrix_for(*b.content)
        if result.realize(x) != bidet.bideterminant(b, x):
            raise NCAError("decomposition failed to reproduce the bideterminant")
        payload = {"target": args.target, "input": b.to_json(), "terms": result.to_json(), "verified": True}
        return payload, "non-crossing bitableaux span V(alpha, beta)"
    t = tableau_from_json(data)
    _check_size(t.size)
    if args.target == "tl":
        if any(len(c) != 2 for c in t.columns):
            raise UnsupportedShapeError("tl decomposition needs every part of size 2 (a perfect matching)")
        resolved = tlalg.resolve_crossings(t)
        terms = [
            {"coeff": str(c), "tableau": specht.tableau_json(tlalg.tableau_of(d)), "arcs": [list(a) for a in d]}
            for d, c in sorted(resolved.items(), key=lambda kv: combinat.reading_of(tlalg.tableau_of(kv[0])).labels)
        ]
        check = specht.SpechtElement.from_pairs((tlalg.tableau_of(d), c) for d, c in resolved.items())
        if check.realize() != specht.specht_poly(t):
            raise NCAError("crossing resolution failed to reproduce P_T")
        payload = {"target": args.target, "input": specht.tableau_json(t.canonical()), "terms": terms, "verified": True}
        return payload, "simultaneous crossing resolution with weights (-2)^cycles"
    if args.target == "specht-syt":
        result = specht.garnir_expand(t, shape=shape)
        provenance = "Garnir straightening onto SYT"
    else:
        result = specht.decompose_into_nct(t, shape=shape)
        provenance = "NCT basis of the Specht module (exact solve)"
    return _specht_payload(args.target, t.canonical(), result), provenance


def cmd_straighten(args) -> Tuple[object, str]:
    factors = parse_monomial(args.monomial)
    if args.m != 2:
        if not args.explore:
            raise UnsupportedShapeError("straightening is implemented for m = 2; use --explore for pair rewriting")
        log = grass.rewrite_pairs(factors, args.m, args.n, max_steps=args.max_steps)
        payload = {
            "m": args.m,
            "n": args.n,
            "monomial": {"m": args.m, "factors": [list(f) for f in grass.monomial(factors, args.m, args.n)]},
            "finished": log.finished,
            "steps": log.steps,
            "result": log.element.to_json(args.m),
            "text": str(log.element),
        }
        return payload, "exploratory rewriting of crossing factor pairs (no termination guarantee)"
    mono = grass.monomial(factors, 2, args.n)
    result = grass.straighten_g2n(mono, args.n)
    if grass.realize(result.element, 2, args.n) != grass.realize_monomial(mono, 2, args.n):
        raise NCAError("straightening failed to reproduce the monomial")
    payload = {
        "m": 2,
        "n": args.n,
        "monomial": {"m": 2, "factors": [list(f) for f in mono]},
        "steps": result.steps,
        "result": result.element.to_json(2),
        "text": str(result.element),
        "verified": True,
    }
    return payload, "three-term rewriting in the weight order; NCM are the non-initial monomials"


def cmd_verify(args) -> Tuple[object, str]:
    from .verify import run_suite

    max_n = args.max_n if args.max_n is not None else default_max_n()
    try:
        reports = run_suite(args.suite, max_n)
    except KeyError as exc:
        raise UsageError(f"unknown suite {exc}")
    payload = {
        "suite": args.suite,
        "max_n": max_n,
        "all_ok": all(r.ok for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    return payload, "exhaustive checks of the basis and counting theorems at desk scale"


# -- pretty rendering -----------------------------------------------------------


def _render_tableau(data: dict) -> str:
    return Tableau(tuple(tuple(c) for c in data["columns"])).render()


def render_pretty(command: str, envelope: dict) -> str:
    if envelope["status"] != "ok":
        err = envelope["error"]
        return f"error [{err['code']}]: {err['message']}"
    p = envelope["payload"]
    blocks: List[str] = []
    if command == "enumerate":
        blocks.append(f"{p['count']} {p['kind']} of shape {p['shape']}")
        blocks.extend(_render_tableau(t) for t in p["tableaux"])
    elif command == "biject":
        blocks.append(_render_tableau(p["input"]) + "\n  ->\n" + _render_tableau(p["image"]))
        blocks.append("reading: " + " ".join(map(str, p["reading"])))
    elif command == "decompose":
        for term in p["terms"]:
            if "bitableau" in term:
                b = term["bitableau"]
                blocks.append(f"{term['coeff']} * T={b['T']} T'={b['Tprime']}")
            else:
                blocks.append(f"{term['coeff']} *\n" + _render_tableau(term["tableau"]))
    elif command == "straighten":
        blocks.append(p["text"])
    else:
        for r in p["reports"]:
            blocks.append(f"{'PASS' if r['ok'] else 'FAIL'} {r['suite']} ({r['checked']} checks)")
    return "\n\n".join(blocks)


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nca", description="Non-crossing tableaux, bases and straightening")
    parser.add_argument("--pretty", action="store_true", help="render as text instead of JSON (accepted anywhere)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list SYT, NCT, SSYT or SNCT of a shape")
    p.add_argument("--shape", required=True, help="comma-separated parts, e.g. 2,1,1")
    p.add_argument("--kind", choices=["syt", "nct", "ssyt", "snct"], required=True)
    p.add_argument("--weight", help="composition for ssyt/snct, e.g. 2,1")
    p.add_argument("--complete", action="store_true", help="complete by the canonical filling")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("biject", help="map a SYT to its NCT or back")
    p.add_argument("--input", help="tableau JSON file, or - for stdin")
    p.add_argument("--json", help="tableau JSON given inline")
    p.add_argument("--direction", choices=["syt-to-nct", "nct-to-syt"], default="syt-to-nct")
    p.add_argument("--round-trip", action="store_true", help="also check that mapping back gives the input")
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("decompose", help="expand in a basis")
    p.add_argument("--target", choices=["specht-nct", "specht-syt", "bitableau", "tl"], required=True)
    p.add_argument("--input", help="JSON file, or - for stdin")
    p.add_argument("--json", help="JSON given inline")
    p.add_argument("--shape", help="shape lambda when the tableau is completed by a filling")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("straighten", help="write a Plücker monomial over non-crossing monomials")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--monomial", required=True, help="factors like 13,24 or 1:3,2:4")
    p.add_argument("--explore", action="store_true", help="allow m != 2 (pair rewriting with a step log)")
    p.add_argument("--max-steps", type=int, default=200)
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=int, default=None, help="bound (default: $NCA_MAX_N or 6)")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, dict, str]:
    """Run a command; returns (exit code, JSON envelope, command name)."""
    start = time.perf_counter()
    command = "?"
    envelope = {"schema": SCHEMA, "command": command, "status": "ok", "payload": None,
                "error": None, "timing_ms": None, "provenance": None}
    try:
        args = build_parser().parse_args(argv)
        command = envelope["command"] = args.command
        payload, provenance = args.func(args)
        envelope["payload"] = payload
        envelope["provenance"] = provenance
        if command == "verify" and not payload["all_ok"]:
            envelope["status"] = "error"
            envelope["error"] = {"code": "verification_failed", "message": "at least one suite failed"}
    except NCAError as exc:
        envelope["status"] = "error"
        envelope["error"] = {"code": exc.code, "message": str(exc)}
    except (OSError, KeyError, TypeError, ValueError) as exc:
        envelope["status"] = "error"
        envelope["error"] = {"code": "bad_input", "message": f"{type(exc).__name__}: {exc}"}
    envelope["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return (0 if envelope["status"] == "ok" else 1), envelope, command


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    pretty = "--pretty" in argv
    code, envelope, command = run([a for a in argv if a != "--pretty"])
    print(render_pretty(command, envelope) if pretty else json.dumps(envelope, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
