"""Command-line front end: ``codegree <command> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Any

from . import analysis
from .constructors import build, parse_group_spec
from .dixon import DEFAULT_CLASS_LIMIT, character_table
from .errors import CapExceeded, CodegreeError, FileError, ParseError, RangeError
from .invariants import report_from_table
from .perm import DEFAULT_CAP

SCHEMA_VERSION = 1

EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_FILE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 as well; keep our message style
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _limit(text: str) -> int | None:
    if text.lower() == "none":
        return None
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive or 'none'")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker processes (default: available CPUs)")
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="element enumeration cap")
    common.add_argument("--class-limit", type=_limit, default=DEFAULT_CLASS_LIMIT,
                        help="refuse tables with more classes ('none' disables)")
    common.add_argument("--approx", action="store_true", help="add decimal renderings of fractions")
    common.add_argument("--timing", action="store_true", help="report elapsed milliseconds")
    common.add_argument("--seedless", action="store_true", help=argparse.SUPPRESS)

    p = _Parser(prog="codegree", description="Character codegrees of finite groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    t = sub.add_parser("table", parents=[common], help="character table with codegrees")
    t.add_argument("spec")
    c = sub.add_parser("cod", parents=[common], help="codegree report")
    c.add_argument("spec")
    s = sub.add_parser("scan", parents=[common], help="nonsolvable catalog scan")
    s.add_argument("--max-order", type=_positive, default=720)
    v = sub.add_parser("verify", parents=[common], help="run the claim registry")
    v.add_argument("--level", choices=("core", "extended"), default="core")
    se = sub.add_parser("search", help="fcod = 1 and prime-pair searches")
    ss = se.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    f1 = ss.add_parser("fcod1", parents=[common])
    f1.add_argument("--bound", type=_positive, default=100)
    pp = ss.add_parser("primepairs", parents=[common])
    pp.add_argument("--limit", type=int, default=200)
    i = sub.add_parser("identify", parents=[common], help="order-32 / order-48 examples")
    i.add_argument("example", choices=("order32", "order48"))
    return p


# -- rendering ---------------------------------------------------------------

def _approx(x: Fraction) -> str:
    return f"{float(x):.6f}"


def _frac(d: dict) -> str:
    return f"{d['num']}/{d['den']}" if d["den"] != 1 else str(d["num"])


def _aligned(header: list[str], rows: list[list[Any]]) -> str:
    """Numbers right-aligned, everything else left-aligned."""
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    numeric = [bool(rows) and all(isinstance(r[i], int) and not isinstance(r[i], bool) for r in rows)
               for i in range(len(header))]
    return "\n".join("  ".join(v.rjust(w) if num else v.ljust(w)
                                for v, w, num in zip(r, widths, numeric)).rstrip() for r in cells)


def _csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _envelope(command: str, inputs: dict, result: Any, elapsed: float | None) -> str:
    env = {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs,
           "result": result, "timing": None if elapsed is None else {"elapsed_ms": round(elapsed * 1000)}}
    return json.dumps(env, sort_keys=True, indent=2)


# -- commands ----------------------------------------------------------------

def _report_payload(args, with_table: bool) -> tuple[dict, Any]:
    spec = parse_group_spec(args.spec)
    G = build(spec, args.cap)
    table = character_table(G, class_limit=args.class_limit)
    report = report_from_table(table, str(spec))
    payload = report.to_dict()
    if with_table:
        cls = table.classes
        payload["num_classes"] = cls.count
        payload["classes"] = [{"rep_order": int(o), "size": int(s)}
                              for o, s in zip(cls.element_orders, cls.sizes)]
    if args.approx:
        payload["fcod_approx"] = _approx(report.fcod)
        payload["acod_approx"] = _approx(report.acod)
    return payload, table


def cmd_table(args) -> tuple[dict, str, str, int]:
    payload, table = _report_payload(args, True)
    chars = payload["characters"]
    header = ["row", "degree", "kernel_order", "cod"]
    rows = [[i, c["degree"], c["kernel_order"], c["cod"]] for i, c in enumerate(chars)]
    csv_out = _csv(header, rows)
    lines = [f"group {payload['group']}  order {payload['order']}  classes {payload['num_classes']}"]
    lines.append(_aligned(["class", "rep_order", "size"],
                          [[k, c["rep_order"], c["size"]] for k, c in enumerate(payload["classes"])]))
    lines.append("")
    lines.append(_aligned(header, rows))
    lines.append("")
    lines.append(f"values (root-of-unity multiplicities, zK = exp(2 pi i K/{table.ctx.e})):")
    vals = [[i] + [str(v) for v in table.values(i)] for i in range(len(table))]
    lines.append(_aligned(["row"] + [str(k) for k in range(table.classes.count)], vals))
    lines.append("")
    lines.append(_summary_line(payload))
    return payload, "\n".join(lines), csv_out, 0


def _summary_line(payload: dict) -> str:
    line = f"S_c = {payload['sc']}  fcod = {_frac(payload['fcod'])}  acod = {_frac(payload['acod'])}"
    if "fcod_approx" in payload:
        line += f"  (fcod ~ {payload['fcod_approx']}, acod ~ {payload['acod_approx']})"
    return line


def cmd_cod(args) -> tuple[dict, str, str, int]:
    payload, _ = _report_payload(args, False)
    header = ["row", "degree", "kernel_order", "cod"]
    rows = [[i, c["degree"], c["kernel_order"], c["cod"]] for i, c in enumerate(payload["characters"])]
    text = "\n".join([f"group {payload['group']}  order {payload['order']}",
                      _aligned(header, rows), _summary_line(payload)])
    return payload, text, _csv(header, rows), 0


def cmd_scan(args) -> tuple[dict, str, str, int]:
    rows, summary = analysis.scan_nonsolvable(args.max_order, args.threads)
    payload = {"rows": [r.to_dict() for r in rows], "summary": summary}
    header = ["group", "order", "sc", "fcod", "solvable"]
    table = [[r.group, r.order, r.sc, f"{r.fcod.numerator}/{r.fcod.denominator}", r.solvable] for r in rows]
    if args.approx:
        header.append("fcod_approx")
        for row, r in zip(table, rows):
            row.append(_approx(r.fcod))
        for d, r in zip(payload["rows"], rows):
            d["fcod_approx"] = _approx(r.fcod)
    text = _aligned(header, table)
    if rows:
        text += (f"\nmin S_c = {summary['min_sc']} at {', '.join(summary['argmin'])}"
                 f"\nnote: {summary['caveat']}")
    return payload, text, _csv(header, table), 0


def cmd_verify(args) -> tuple[dict, str, str, int]:
    results = analysis.verify_paper_claims(args.level, args.threads)
    summary = analysis.summarize(results)
    payload = {"level": args.level, "claims": [r.to_dict(args.timing) for r in results], "summary": summary}
    header = ["id", "status", "description"]
    rows = [[r.id, r.status if r.status != "skipped" else f"skipped ({r.reason})", r.description]
            for r in results]
    text = _aligned(header, rows) + (f"\n{summary['pass']} passed, {summary['fail']} failed, "
                                     f"{summary['skipped']} skipped")
    code = EXIT_CLAIM_FAILED if summary["fail"] else 0
    return payload, text, _csv(header, rows), code


def cmd_search(args) -> tuple[dict, str, str, int]:
    if args.kind == "primepairs":
        pairs = analysis.search_prime_pairs(args.limit)
        payload = {"limit": args.limit, "pairs": [{"p": p, "q": q} for p, q in pairs]}
        rows = [[p, q] for p, q in pairs]
        return payload, _aligned(["p", "q"], rows), _csv(["p", "q"], rows), 0
    res = analysis.search_fcod_one(args.bound, args.threads)
    rows = [[h["group"], h["order"], ";".join(h["aliases"])] for h in res["hits"]]
    text = _aligned(["group", "order", "aliases"], rows) + f"\nexamined {res['examined']} groups up to order {res['bound']}"
    return res, text, _csv(["group", "order", "aliases"], rows), 0


def cmd_identify(args) -> tuple[dict, str, str, int]:
    res = analysis.identify_example(args.example)
    rows = [[c["group"], c["sc"], c["group"] in res["identified"]] for c in res["candidates"]]
    text = (_aligned(["group", "sc", "match"], rows)
            + f"\ntarget S_c = {res['target_sc']}; identified: {', '.join(res['identified']) or 'none'}")
    return res, text, _csv(["group", "sc", "match"], rows), 0


COMMANDS = {"table": cmd_table, "cod": cmd_cod, "scan": cmd_scan, "verify": cmd_verify,
            "search": cmd_search, "identify": cmd_identify}

_NOT_INPUTS = {"threads", "format", "timing", "command", "seedless"}


def _inputs(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in _NOT_INPUTS}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.seedless:
        print("error: --seedless is reserved; nothing in this tool is random", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        payload, text, csv_out, code = COMMANDS[args.command](args)
    except (ParseError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except CodegreeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    elapsed = time.perf_counter() - start if args.timing else None
    name = args.command if args.command != "search" else f"search {args.kind}"
    if args.format == "json":
        print(_envelope(name, _inputs(args), payload, elapsed))
    elif args.format == "csv":
        print(csv_out)
    else:
        print(text)
        if elapsed is not None:
            print(f"elapsed {round(elapsed * 1000)} ms")
    return code


if __name__ == "__main__":
    sys.exit(main())
