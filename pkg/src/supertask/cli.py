"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 unreadable or malformed input,
3 domain error (for example NoFinitePeriod).  Results go to stdout, warnings
and errors to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from supertask import __version__, analysis, digits
from supertask.errors import DomainError, InputError
from supertask.evaluation import state_at
from supertask.ordinal import compare, decompose, format_ordinal, is_even, parse_ordinal
from supertask.sts import parse_sts, rho_analyze, thomson_lamp, validate

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_sts(text)


def _evaluate(sts, start, runtime_text):
    if runtime_text is None:
        if sts.runtime is None:
            raise UsageError("no --runtime given and the file declares none")
        runtime = sts.runtime
    else:
        runtime = parse_ordinal(runtime_text)
    start = sts.default_start if start is None else start
    if start not in sts.transition:
        raise UsageError(f"unknown start state {start!r}")
    result = state_at(sts, start, runtime)
    rho = result.rho
    payload = {
        "final": result.final_state,
        "rule": str(result.rule_applied),
        "start": start,
        "runtime": format_ordinal(runtime),
        "mu": rho.tail_length,
        "k": rho.period,
        "entry": rho.entry_node,
    }
    lines = [
        f"final: {result.final_state}",
        f"rule: {result.rule_applied}",
        f"start: {start}",
        f"runtime: {format_ordinal(runtime)}",
        f"rho: mu={rho.tail_length} k={rho.period} entry={rho.entry_node}",
    ]
    return payload, lines


def cmd_eval(args):
    return _evaluate(_load(args.file), args.start, args.runtime)


def cmd_lamp(args):
    return _evaluate(thomson_lamp(), args.initial, args.runtime)


def cmd_analyze(args):
    sts = _load(args.file)
    for warning in validate(sts).warnings:
        print(f"warning: {warning.code}: {warning.message}", file=sys.stderr)
    rows = []
    lines = []
    for start in sts.start_states:
        rho = rho_analyze(sts, start)
        rows.append({"start": start, "mu": rho.tail_length, "k": rho.period, "entry": rho.entry_node})
        lines.append(f"{start}: mu={rho.tail_length} k={rho.period} entry={rho.entry_node}")
    return {"starts": rows}, lines


def cmd_ordinal(args):
    values = [parse_ordinal(e) for e in args.exprs]
    if args.op == "cmp":
        if len(values) != 2:
            raise UsageError("cmp takes exactly two expressions")
        symbol = "<=>"[compare(*values) + 1]
        return {"cmp": symbol}, [symbol]
    if args.op == "eval":
        out = [format_ordinal(v) for v in values]
        return {"values": out}, out
    if args.op == "even":
        out = ["even" if is_even(v) else "odd" for v in values]
        return {"parity": out}, out
    parts = [decompose(v) for v in values]
    rows = [{"limit": format_ordinal(p.limit_part), "tail": p.finite_tail} for p in parts]
    return {"decompositions": rows}, [f"limit={r['limit']} tail={r['tail']}" for r in rows]


def cmd_schedule(args):
    if args.step is not None:
        jab = analysis.jab_time(args.step)
        elapsed = analysis.elapsed_after(args.step)
        payload = {"jab": str(jab), "elapsed": str(elapsed)}
        return payload, [f"jab={jab} elapsed={elapsed}"]
    if args.time is not None:
        position = analysis.position_at_time(analysis.parse_rational(args.time))
        return {"position": str(position)}, [f"position: {position}"]
    n = analysis.epsilon_witness(analysis.parse_rational(args.epsilon))
    return {"N": n}, [f"N={n}"]


def cmd_grandi(args):
    if args.cesaro:
        sums = analysis.grandi_partial_sums(args.terms)
        mean = analysis.cesaro_mean(args.terms)
        payload = {"partial_sums": sums, "mean": str(mean)}
        return payload, ["partial_sums=" + ",".join(map(str, sums)), f"mean={mean}"]
    value = analysis.grouped_sum(args.terms, analysis.Grouping(args.grouping))
    return {"grouping": args.grouping, "sum": value}, [str(value)]


def cmd_pi_parity(args):
    if args.max_index == digits.DEFAULT_MAX_INDEX:
        stream = digits.default_stream()
    else:
        stream = digits.DigitStream(args.max_index)
    if args.digit is not None:
        d = stream.digit_at(args.digit)
        bit = stream.parity_bit(args.digit)
        return {"digit": d, "parity": bit}, [f"digit={d} parity={bit}"]
    if args.prefix is not None:
        bits = "".join(map(str, stream.parities(args.prefix)))
        return {"parities": bits}, [bits]
    if args.digits is not None:
        text = "".join(map(str, stream.digits(args.digits)))
        return {"digits": text}, [text]
    runtime = parse_ordinal(args.runtime)
    bit = digits.pi_parity_state_at(runtime, stream)
    return {"runtime": format_ordinal(runtime), "state": bit}, [f"state={bit}"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON object instead of text lines")

    parser = _Parser(prog="supertask", parents=[common],
                     description="Evaluate state-transition systems at ordinal runtimes.")
    parser.add_argument("--version", action="version", version=f"supertask {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="tail length, period and entry node per start state")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("eval", parents=[common], help="state of a system after an ordinal runtime")
    p.add_argument("file")
    p.add_argument("--runtime", help="ordinal expression, e.g. w, w+1, w*2 (default: the file's runtime)")
    p.add_argument("--start", help="start state (default: selected, else first start state)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser(
        "lamp", parents=[common], help="Thomson's lamp",
        description="Thomson's lamp. Read as a bracketing of Grandi's series, starting "
                    "off corresponds to fully-paired grouping and starting on to "
                    "leading-unpaired grouping.",
    )
    p.add_argument("--initial", choices=["off", "on"], default="off")
    p.add_argument("--runtime", default="w")
    p.set_defaults(func=cmd_lamp)

    p = sub.add_parser("ordinal", parents=[common], help="ordinal arithmetic (w stands for omega)")
    p.add_argument("op", choices=["eval", "cmp", "even", "decompose"])
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_ordinal)

    p = sub.add_parser("schedule", parents=[common], help="geometric jab schedule over two minutes")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--step", type=int, help="jab duration and elapsed time after step n")
    g.add_argument("--time", help="step position at time t (rational, 0 <= t <= 2)")
    g.add_argument("--epsilon", help="least N with all later elapsed times within epsilon of 2")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("grandi", parents=[common], help="Grandi series: Cesaro mean or grouped sum")
    p.add_argument("--terms", type=int, required=True,
                   help="number of partial sums (--cesaro) or of bracketed pairs (--grouping)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cesaro", action="store_true")
    g.add_argument("--grouping", choices=[m.value for m in analysis.Grouping])
    p.set_defaults(func=cmd_grandi)

    p = sub.add_parser(
        "pi-parity", parents=[common], help="parity machine over the decimal digits of pi",
        description="Digit index 0 is the leading 3. Parity bit: 1 = even digit, 0 = odd digit.",
    )
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--digit", type=int, help="digit and parity bit at index n")
    g.add_argument("--prefix", type=int, help="parity bits of the first N digits")
    g.add_argument("--digits", type=int, help="the first N digits as one string")
    g.add_argument("--runtime", help="machine output after an ordinal runtime")
    p.add_argument("--max-index", type=int, default=digits.DEFAULT_MAX_INDEX)
    p.set_defaults(func=cmd_pi_parity)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, lines = args.func(args)
    except UsageError as exc:
        print(f"supertask: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"supertask: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as exc:
        message = str(exc)
        if isinstance(exc, digits.NoFinitePeriod):
            print(message, file=sys.stderr)
        else:
            print(f"supertask: error: {message}", file=sys.stderr)
        return EXIT_DOMAIN
    if getattr(args, "json", False):
        print(json.dumps({"command": args.command, **payload}))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
