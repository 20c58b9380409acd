"""Command-line front end: ``lieulrich <command> ...``.

Exit status is 0 on success, 1 for usage or parse errors and 2 when an
internal invariant check fails.  The default output format can be set with
the ``LIEULRICH_FORMAT`` environment variable.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from . import bwb, rootsys, sing, ulrich
from .parsing import ParseError, VarietySpec, format_weight, parse_variety, parse_weight, parse_weight_vec
from .rootsys import InvariantError

SCHEMA_ID = "lieulrich/v1"
FORMATS = ("text", "json", "csv", "md")
ENV_FORMAT = "LIEULRICH_FORMAT"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _factor_text(fs) -> str:
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fs) or "1"


# --- payload builders -------------------------------------------------------


def _variety(args) -> VarietySpec:
    return parse_variety(args.variety)


def _weight(args, rank: int):
    if getattr(args, "weight_vec", None) is not None:
        return parse_weight_vec(args.weight_vec, rank)
    if getattr(args, "weight", None) is not None:
        return parse_weight(args.weight, rank)
    return None


def cmd_roots(args) -> dict:
    v = _variety(args)
    rs = rootsys.build(v.type)
    return {
        "variety": str(v),
        **rs.to_json(),
        "rho": list(rs.rho),
        "highest_coroot": list(rs.highest_coroot),
        "dim": rootsys.dimension(rs, v.k),
        "index": rootsys.fano_index(rs, v.k),
    }


def cmd_sing(args) -> dict:
    v = _variety(args)
    rs = rootsys.build(v.type)
    w = _weight(args, rs.rank)
    if args.symbolic:
        if w is not None:
            raise UsageError("--symbolic does not take a weight")
        return {
            "variety": str(v),
            "variables": sing.variable_names(rs.rank),
            "forms": [f.to_json() for f in sing.sing_forms(rs, v.k)],
        }
    if w is None:
        raise UsageError("sing needs --weight, --weight-vec or --symbolic")
    s = sing.sing_set(rs, v.k, w)
    d = rootsys.dimension(rs, v.k)
    return {
        "variety": str(v),
        "weight": list(w),
        "weight_expr": format_weight(w),
        "dim": d,
        "sing": list(s),
        "ulrich": s == tuple(range(1, d + 1)),
    }


def cmd_bwb(args) -> dict:
    v = _variety(args)
    rs = rootsys.build(v.type)
    w = _weight(args, rs.rank)
    if w is None:
        raise UsageError("bwb needs --weight or --weight-vec")
    res = bwb.cohomology(bwb.BundleSpec(rs, v.k, w), args.twist)
    return {
        "variety": str(v),
        "weight": list(w),
        "weight_expr": format_weight(w),
        "twist": args.twist,
        "vanishes": res.vanishes,
        "degree": res.degree,
        "dual_highest_weight": None if res.vanishes else list(res.dual_highest_weight),
    }


def _classification(t, k, jobs) -> dict:
    rs = rootsys.build(t)
    certs = ulrich.classify(rs, k, jobs=jobs)
    return {
        "variety": f"{t}/P{k}",
        "dim": rootsys.dimension(rs, k),
        "index": rootsys.fano_index(rs, k),
        "certificates": [{**c.to_json(), "weight_expr": format_weight(c.weight)} for c in certs],
    }


def cmd_classify(args) -> dict:
    if args.all_exceptional == (args.variety is not None):
        raise UsageError("classify needs exactly one of <variety> or --all-exceptional")
    if args.jobs is not None and args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.all_exceptional:
        cases = rootsys.exceptional_cases()
    else:
        v = _variety(args)
        cases = [(v.type, v.k)]
    return {"results": [_classification(t, k, args.jobs) for t, k in cases]}


def cmd_rank(args) -> dict:
    v = _variety(args)
    rs = rootsys.build(v.type)
    w = _weight(args, rs.rank)
    if w is None:
        raise UsageError("rank needs --weight or --weight-vec")
    r = ulrich.rank(rs, v.k, w)
    return {
        "variety": str(v),
        "weight": list(w),
        "weight_expr": format_weight(w),
        "rank": r,
        "factorization": [list(pe) for pe in factorize(r)],
    }


def cmd_check(args) -> dict:
    v = _variety(args)
    rs = rootsys.build(v.type)
    w = _weight(args, rs.rank)
    if w is None:
        raise UsageError("check needs --weight or --weight-vec")
    d = rootsys.dimension(rs, v.k)
    s = sing.sing_set(rs, v.k, w)
    by_sing = s == tuple(range(1, d + 1))
    by_coh = bwb.is_ulrich_by_cohomology(bwb.BundleSpec(rs, v.k, w))
    if by_sing != by_coh:
        raise InvariantError(f"Sing criterion and cohomology disagree for {w}")
    return {
        "variety": str(v),
        "weight": list(w),
        "weight_expr": format_weight(w),
        "dim": d,
        "sing": list(s),
        "ulrich": by_sing,
        "ulrich_by_cohomology": by_coh,
        "rank": ulrich.rank(rs, v.k, w),
    }


def cmd_table(args) -> dict:
    rows = []
    for t, k in rootsys.exceptional_cases():
        res = _classification(t, k, args.jobs)
        rows.append({
            "variety": res["variety"],
            "dim": res["dim"],
            "index": res["index"],
            "bundles": [c["weight_expr"] for c in res["certificates"]],
            "ranks": [c["rank"] for c in res["certificates"]],
        })
    return {"rows": rows}


# --- rendering --------------------------------------------------------------


def _rows(command: str, p: dict) -> tuple[list[str], list[list]]:
    """Flatten a payload into a header and rows for csv / md output."""
    if command == "roots":
        return ["root", "coroot", "height"], [
            [" ".join(map(str, r)), " ".join(map(str, c)), sum(r)] for r, c in zip(p["roots"], p["coroots"])
        ]
    if command == "sing" and "forms" in p:
        return ["form", "latex", "coroot"], [
            [f["text"], f["latex"], " ".join(map(str, f["coroot"]))] for f in p["forms"]
        ]
    if command == "sing":
        return ["variety", "weight", "dim", "sing", "ulrich"], [
            [p["variety"], p["weight_expr"], p["dim"], " ".join(map(str, p["sing"])), p["ulrich"]]
        ]
    if command == "bwb":
        hw = p["dual_highest_weight"]
        return ["variety", "weight", "twist", "vanishes", "degree", "dual_highest_weight"], [
            [p["variety"], p["weight_expr"], p["twist"], p["vanishes"],
             "" if p["degree"] is None else p["degree"], "" if hw is None else " ".join(map(str, hw))]
        ]
    if command == "classify":
        rows = []
        for r in p["results"]:
            if not r["certificates"]:
                rows.append([r["variety"], r["dim"], r["index"], "none", ""])
            for c in r["certificates"]:
                rows.append([r["variety"], r["dim"], r["index"], c["weight_expr"], c["rank"]])
        return ["variety", "dim", "index", "weight", "rank"], rows
    if command == "rank":
        return ["variety", "weight", "rank", "factorization"], [
            [p["variety"], p["weight_expr"], p["rank"], _factor_text(p["factorization"])]
        ]
    if command == "check":
        return ["variety", "weight", "dim", "ulrich", "ulrich_by_cohomology", "rank"], [
            [p["variety"], p["weight_expr"], p["dim"], p["ulrich"], p["ulrich_by_cohomology"], p["rank"]]
        ]
    if command == "table":
        return ["variety", "dim", "index", "bundles", "rank"], [
            [r["variety"], r["dim"], r["index"], " ".join(r["bundles"]) or "none",
             " ".join(map(str, r["ranks"]))] for r in p["rows"]
        ]
    raise KeyError(command)


def _text(command: str, p: dict) -> str:
    lines = []
    if command == "roots":
        lines.append(f"{p['variety']}: {len(p['roots'])} positive roots, dim {p['dim']}, index {p['index']}")
        lines.append("cartan: " + "; ".join(" ".join(f"{x:2d}" for x in row) for row in p["cartan"]))
        lines.append("symmetrizer: " + " ".join(map(str, p["symmetrizer"])))
        lines.append("highest coroot: " + " ".join(map(str, p["highest_coroot"])))
        for r, c in zip(p["roots"], p["coroots"]):
            lines.append(f"  root {' '.join(map(str, r))}   coroot {' '.join(map(str, c))}")
    elif command == "sing" and "forms" in p:
        lines.append(f"{p['variety']}: {len(p['forms'])} forms in {', '.join(p['variables'])}")
        lines.extend(f"  t = {f['text']}" for f in p["forms"])
    elif command == "sing":
        lines.append(f"Sing({p['weight_expr']}) on {p['variety']} = {{{', '.join(map(str, p['sing']))}}}")
        lines.append(f"Ulrich: {'yes' if p['ulrich'] else 'no'} (dim {p['dim']})")
    elif command == "bwb":
        head = f"H^*({p['variety']}, E_{p['weight_expr']}(-{p['twist']}))"
        if p["vanishes"]:
            lines.append(f"{head}: all cohomology vanishes")
        else:
            hw = format_weight(p["dual_highest_weight"])
            lines.append(f"{head}: nonzero only in degree {p['degree']}, dual of V({hw})")
    elif command == "classify":
        for r in p["results"]:
            found = ", ".join(f"{c['weight_expr']} (rank {c['rank']})" for c in r["certificates"]) or "none"
            lines.append(f"{r['variety']}  dim {r['dim']}  index {r['index']}: {found}")
    elif command == "rank":
        lines.append(f"rank E_{p['weight_expr']} on {p['variety']} = {p['rank']} = {_factor_text(p['factorization'])}")
    elif command == "check":
        verdict = "Ulrich" if p["ulrich"] else "not Ulrich"
        lines.append(f"E_{p['weight_expr']} on {p['variety']}: {verdict} (rank {p['rank']})")
        lines.append(f"Sing = {{{', '.join(map(str, p['sing']))}}}, dim {p['dim']}")
    elif command == "table":
        lines.append(f"{'variety':<8} {'dim':>4} {'index':>5}  Ulrich bundles")
        for r in p["rows"]:
            found = ", ".join(f"{b} (rank {n})" for b, n in zip(r["bundles"], r["ranks"])) or "none"
            lines.append(f"{r['variety']:<8} {r['dim']:>4} {r['index']:>5}  {found}")
    return "\n".join(lines) + "\n"


_FLAT_ARRAY = re.compile(r"\[[^\[\]{}]*\]")


def dumps(doc) -> str:
    """Indented JSON with arrays of scalars kept on one line."""
    text = json.dumps(doc, indent=2)
    return _FLAT_ARRAY.sub(lambda m: json.dumps(json.loads(m.group(0))), text) + "\n"


def render(command: str, payload: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps({"schema": SCHEMA_ID, "command": command, **payload})
    if fmt == "text":
        return _text(command, payload)
    header, rows = _rows(command, payload)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out.extend("| " + " | ".join(str(c).replace("|", r"\|") for c in row) + " |" for row in rows)
    return "\n".join(out) + "\n"


COMMANDS = {
    "roots": cmd_roots,
    "sing": cmd_sing,
    "bwb": cmd_bwb,
    "classify": cmd_classify,
    "rank": cmd_rank,
    "check": cmd_check,
    "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS, help="output format")

    weight = _Parser(add_help=False)
    g = weight.add_mutually_exclusive_group()
    g.add_argument("--weight", help="weight expression, e.g. w5+3w6")
    g.add_argument("--weight-vec", help="comma-separated coefficients, e.g. 0,0,0,0,1,3")

    jobs = _Parser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=None, help="worker processes (default: logical cores)")

    p = _Parser(prog="lieulrich", description="Equivariant Ulrich bundles on G/P via Borel-Weil-Bott.")
    p.add_argument("--format", choices=FORMATS, default=None, help="output format")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("roots", parents=[fmt], help="root data of a variety's group")
    s.add_argument("variety")

    s = sub.add_parser("sing", parents=[fmt, weight], help="Sing(omega), numeric or symbolic")
    s.add_argument("variety")
    s.add_argument("--symbolic", action="store_true", help="print the affine forms")

    s = sub.add_parser("bwb", parents=[fmt, weight], help="cohomology of E_omega(-twist)")
    s.add_argument("variety")
    s.add_argument("--twist", type=int, required=True)

    s = sub.add_parser("classify", parents=[fmt, jobs], help="all irreducible equivariant Ulrich bundles")
    s.add_argument("variety", nargs="?")
    s.add_argument("--all-exceptional", action="store_true", help="run the 27 exceptional cases")

    s = sub.add_parser("rank", parents=[fmt, weight], help="rank of E_omega")
    s.add_argument("variety")

    s = sub.add_parser("check", parents=[fmt, weight], help="Ulrich test by Sing and by cohomology")
    s.add_argument("variety")

    sub.add_parser("table", parents=[fmt, jobs], help="summary over all exceptional G/P_k")
    return p


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "format", None) or os.environ.get(ENV_FORMAT) or "text"
        if fmt not in FORMATS:
            raise UsageError(f"unknown format {fmt!r} (from ${ENV_FORMAT})")
        payload = COMMANDS[args.command](args)
        stdout.write(render(args.command, payload, fmt))
    except InvariantError as exc:
        stderr.write(f"internal error: {exc}\n")
        return 2
    except (UsageError, ParseError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
