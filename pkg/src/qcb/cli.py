"""Command-line interface.

Subcommands: ``columns`` (list columns or spin columns), ``crystal`` (edge
list of a module's crystal graph), ``marsh`` (global basis vector of one
admissible column), ``apath`` (raising walk and monomial vector of one
tableau), ``canonical`` (canonical basis matrix, optionally one weight
space), ``check`` (invariant suite).  Output is JSON, CSV or LaTeX and is
byte-deterministic for a fixed invocation.

Exit codes: 0 success, 1 domain error (bad input data), 2 internal
assertion failure, 64 flag errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canonical import a_path, a_vector, canonical_matrix, global_column, marsh_path
from .checks import run_all
from .crystal import component_bfs, enumerate_spin_columns, word_apply
from .laurent import LaurentPoly
from .rootdata import AlgebraKind, parse_weight
from .shapes import (
    enumerate_columns,
    highest_tabloid,
    is_admissible,
    parse_column,
    parse_tabloid,
    shape_for_lambda,
    tabloid_reading,
)

USAGE_EXIT = 64
DOMAIN_EXIT = 1
INTERNAL_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(USAGE_EXIT)


def _build_parser() -> _Parser:
    p = _Parser(prog="qcb", description="Canonical bases of quantum orthogonal modules, exactly.")
    p.add_argument("--type", choices=("B", "D"), required=True, help="algebra family")
    p.add_argument("--rank", type=int, required=True, help="rank n")
    p.add_argument("--experimental-d2", action="store_true", help="allow type D at rank 2 (no correctness promise)")
    tail = argparse.ArgumentParser(add_help=False)
    tail.add_argument("--format", choices=("json", "csv", "tex"), default="json")
    tail.add_argument("--output", help="write to this path instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=argparse.ArgumentParser)

    def add(name, help):
        c = sub.add_parser(name, help=help, parents=[tail])
        c.error = p.error
        return c

    c = add("columns", "list height-p columns (or spin columns)")
    c.add_argument("--height", type=int, help="column height p")
    c.add_argument("--admissible-only", action="store_true")
    c.add_argument("--spin", action="store_true", help="list spin columns instead")
    c.add_argument("--spin-class", choices=("+", "-"), help="restrict type-D spin columns to one class")

    c = add("crystal", "crystal graph of V(lambda) as an edge list")
    c.add_argument("--lambda", dest="lam", required=True, help="fundamental-weight coefficients, e.g. 1,1,2")

    c = add("marsh", "global basis vector of one admissible column")
    c.add_argument("--column", required=True, help="letters top to bottom, e.g. 0,0,0,0")

    c = add("apath", "raising walk and monomial vector of one tableau")
    c.add_argument("--tabloid", required=True, help="columns left to right, e.g. 2,0,0/2,-3/3")
    c.add_argument("--dsign", choices=("+", "-"), help="height-n marker for ambiguous type-D fillings")

    c = add("canonical", "canonical basis matrix")
    c.add_argument("--lambda", dest="lam", required=True)
    c.add_argument("--weight", help="restrict to one weight (epsilon coordinates, a/2 allowed)")
    c.add_argument("--jobs", type=int, default=1, help="parallel weight spaces")

    c = add("check", "run the invariant suite")
    c.add_argument("--max-rank-b", type=int, default=3)
    c.add_argument("--max-rank-d", type=int, default=3)
    c.add_argument("--seed", type=int, default=20240801)
    return p


def _parse_lambda(text: str, n: int) -> tuple[int, ...]:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != n:
        raise ValueError(f"expected {n} coefficients, got {len(parts)}")
    return tuple(int(t) for t in parts)


def _emit(doc: dict, args) -> str:
    if args.format == "json":
        return json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        return _to_csv(doc)
    return _to_tex(doc)


def _to_csv(doc: dict) -> str:
    lines = []
    kind = doc["command"]
    if kind == "columns":
        lines.append("column,admissible")
        for row in doc["columns"]:
            lines.append(f"\"{row['column']}\",{str(row['admissible']).lower()}")
    elif kind == "spin-columns":
        lines.append("spin,class")
        for row in doc["columns"]:
            lines.append(f"\"{row['spin']}\",{row['class']}")
    elif kind == "crystal":
        lines.append("source,label,target")
        for e in doc["edges"]:
            lines.append(f"\"{e['source']}\",{e['label']},\"{e['target']}\"")
    elif kind in ("marsh", "apath"):
        lines.append("path," + " ".join(f"f{i}^{r}" for i, r in doc["path"]))
        lines.append("key,coeff")
        for t in doc["terms"]:
            key = t.get("column", t.get("tabloid"))
            lines.append(f"\"{key}\",\"{_poly_text(t['coeff'])}\"")
    elif kind == "canonical":
        header = [""] + [f'"{c}"' for c in doc["cols"]]
        lines.append(",".join(header))
        entries = {(r, c): _poly_text(v) for r, c, v in doc["entries"]}
        for r, row in enumerate(doc["rows"]):
            cells = [f'"{row}"'] + [f'"{entries.get((r, c), ".")}"' for c in range(len(doc["cols"]))]
            lines.append(",".join(cells))
    elif kind == "check":
        lines.append("check,result")
        for r in doc["results"]:
            lines.append(f"{r['name']},{'pass' if r['ok'] else 'FAIL'}")
    else:
        lines.append(json.dumps(doc))
    return "\n".join(lines) + "\n"


def _poly_text(json_terms: list) -> str:
    return str(LaurentPoly([(e, c) for e, c in json_terms]))


def _poly_tex(json_terms: list) -> str:
    return LaurentPoly([(e, c) for e, c in json_terms]).latex()


def _to_tex(doc: dict) -> str:
    kind = doc["command"]
    lines = []
    if kind == "canonical":
        ncols = len(doc["cols"])
        lines.append(r"\begin{array}{l|" + "c" * ncols + "}")
        lines.append(" & " + " & ".join(rf"\text{{{c}}}" for c in doc["cols"]) + r" \\ \hline")
        entries = {(r, c): _poly_tex(v) for r, c, v in doc["entries"]}
        for r, row in enumerate(doc["rows"]):
            cells = [entries.get((r, c), ".") for c in range(ncols)]
            lines.append(rf"\text{{{row}}} & " + " & ".join(cells) + r" \\")
        lines.append(r"\end{array}")
    elif kind in ("marsh", "apath"):
        mono = "".join(
            rf"f_{{{i}}}" + (rf"^{{({r})}}" if r > 1 else "") for i, r in doc["path"]
        )
        key = "column" if kind == "marsh" else "tabloid"
        terms = " + ".join(
            rf"({_poly_tex(t['coeff'])})\,v_{{{t.get(key)}}}" for t in doc["terms"]
        )
        lines.append(rf"{mono}\,v_{{\mathrm{{hw}}}} = {terms}")
    else:
        lines.append(r"\begin{verbatim}")
        lines.append(json.dumps(doc, indent=2))
        lines.append(r"\end{verbatim}")
    return "\n".join(lines) + "\n"


def _cmd_columns(kind: AlgebraKind, args) -> dict:
    if args.spin:
        sign = args.spin_class if kind.family == "D" else None
        cols = enumerate_spin_columns(kind, sign)
        return {
            "command": "spin-columns",
            "columns": [{"spin": str(s), "class": s.sign_class()} for s in cols],
        }
    if args.height is None:
        raise ValueError("columns needs --height (or --spin)")
    cols = enumerate_columns(kind, args.height, admissible_only=args.admissible_only)
    return {
        "command": "columns",
        "height": args.height,
        "columns": [{"column": str(c), "admissible": is_admissible(c)} for c in cols],
    }


def _cmd_crystal(kind: AlgebraKind, args) -> dict:
    lam = _parse_lambda(args.lam, kind.rank)
    shape = shape_for_lambda(lam, kind)
    start = tabloid_reading(highest_tabloid(shape))
    vertices = sorted(component_bfs(start), key=lambda w: (str(w)))
    edges = []
    for w in vertices:
        for i in range(1, kind.rank + 1):
            v = word_apply(w, i, "f")
            if v is not None:
                edges.append({"source": str(w), "label": i, "target": str(v)})
    edges.sort(key=lambda e: (e["source"], e["label"]))
    return {
        "command": "crystal",
        "lambda": list(lam),
        "vertices": [str(w) for w in vertices],
        "edges": edges,
    }


def _cmd_marsh(kind: AlgebraKind, args) -> dict:
    col = parse_column(args.column, kind)
    path = marsh_path(col)
    vec = global_column(col)
    return {
        "command": "marsh",
        "column": str(col),
        "path": [list(s) for s in path],
        "terms": vec.json()["terms"],
    }


def _cmd_apath(kind: AlgebraKind, args) -> dict:
    tab = parse_tabloid(args.tabloid, kind, d_sign=args.dsign)
    ap = a_path(tab)
    vec = a_vector(tab)
    return {
        "command": "apath",
        "tabloid": str(tab),
        "path": [list(s) for s in ap.steps],
        "direct": ap.direct,
        "base": str(ap.base),
        "intermediates": [str(t) for t in ap.intermediates],
        "terms": vec.json()["terms"],
    }


def _cmd_canonical(kind: AlgebraKind, args) -> dict:
    lam = _parse_lambda(args.lam, kind.rank)
    weight2 = parse_weight(args.weight, kind.rank) if args.weight else None
    M = canonical_matrix(lam, kind, weight2=weight2, jobs=max(1, args.jobs))
    doc = M.json()
    doc["command"] = "canonical"
    return doc


def _cmd_check(kind: AlgebraKind, args) -> tuple[dict, bool]:
    results = run_all(max_rank_b=args.max_rank_b, max_rank_d=args.max_rank_d, seed=args.seed)
    doc = {
        "command": "check",
        "results": [{"name": r.name, "ok": r.ok} for r in results],
        "ok": all(r.ok for r in results),
    }
    return doc, doc["ok"]


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        kind = AlgebraKind(args.type, args.rank, experimental=args.experimental_d2)
    except ValueError as exc:
        print(f"qcb: {exc}", file=sys.stderr)
        return DOMAIN_EXIT
    check_failed = False
    try:
        if args.command == "columns":
            doc = _cmd_columns(kind, args)
        elif args.command == "crystal":
            doc = _cmd_crystal(kind, args)
        elif args.command == "marsh":
            doc = _cmd_marsh(kind, args)
        elif args.command == "apath":
            doc = _cmd_apath(kind, args)
        elif args.command == "canonical":
            doc = _cmd_canonical(kind, args)
        elif args.command == "check":
            doc, ok = _cmd_check(kind, args)
            check_failed = not ok
        else:  # pragma: no cover
            raise AssertionError(args.command)
    except ValueError as exc:
        print(f"qcb: {exc}", file=sys.stderr)
        return DOMAIN_EXIT
    except (AssertionError, RuntimeError) as exc:
        print(f"qcb: internal check failed: {exc}", file=sys.stderr)
        return INTERNAL_EXIT
    text = _emit(doc, args)
    if args.command == "check" and args.format == "json":
        # also a human-readable pass/fail line per property on stderr
        for r in doc["results"]:
            print(("PASS " if r["ok"] else "FAIL ") + r["name"], file=sys.stderr)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return INTERNAL_EXIT if check_failed else 0


if __name__ == "__main__":
    sys.exit(main())
