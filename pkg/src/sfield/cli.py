"""``sfield`` command: one-shot evaluation, the axiom suite, or a REPL."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, TextIO

from .errors import ConstructionError, SFieldError
from .expr import EvalError, ExprError, LexError, ParseError, longest_product_chain, parse, render, to_source
from .expr import evaluate as evaluate_expr
from .lab import AxiomReport, run_full_suite
from .scalar import PrimeField, Ring, RATIONAL, parse_ring

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_EVAL = 2
EXIT_PARSE = 3

# suites run by --check when the active field is not a prime field
DEFAULT_CHECK_MODULI = (2, 3, 5)

FORMATS = ("coords", "canonical")


@dataclass
class Config:
    ring: Ring = RATIONAL
    fmt: str = "coords"
    json: bool = False


def field_name(ring: Ring) -> str:
    return f"gf:{ring.modulus}" if isinstance(ring, PrimeField) else ring.name


def format_error(text: str, err: ExprError) -> str:
    kind = err.reason if isinstance(err, EvalError) else type(err).__name__
    msg = err.message
    if isinstance(err, EvalError) and msg.startswith(kind + ": "):
        msg = msg[len(kind) + 2:]
    start = min(max(err.start, 0), len(text))
    end = min(max(err.end, start + 1), len(text) + 1)
    return f"error: {kind}: {msg}\n  {text}\n  {' ' * start}{'^' * (end - start)}"


def _error_record(text: str, err: ExprError) -> dict:
    kind = err.reason if isinstance(err, EvalError) else type(err).__name__
    return {"input": text, "error": {"kind": kind, "message": err.message,
                                     "start": err.start, "end": err.end}}


def evaluate_line(text: str, cfg: Config):
    """Parse and evaluate; returns (tree, value) or raises ExprError."""
    tree = parse(text)
    try:
        return tree, evaluate_expr(tree, cfg.ring)
    except EvalError:
        raise
    except SFieldError as exc:
        raise EvalError(str(exc), tree.start, tree.end, exc) from exc


def run_eval(text: str, cfg: Config, out: TextIO, err: TextIO) -> int:
    try:
        _, value = evaluate_line(text, cfg)
    except (LexError, ParseError, EvalError) as exc:
        code = EXIT_EVAL if isinstance(exc, EvalError) else EXIT_PARSE
        if cfg.json:
            out.write(json.dumps(_error_record(text, exc)) + "\n")
        else:
            err.write(format_error(text, exc) + "\n")
        return code
    if cfg.json:
        out.write(json.dumps({
            "input": text,
            "field": field_name(cfg.ring),
            "result": {"x": str(value.x), "y": str(value.y)},
            "coords": render(value, "coords"),
            "canonical": render(value, "canonical"),
        }) + "\n")
    else:
        out.write(render(value, cfg.fmt) + "\n")
    return EXIT_OK


def suite_moduli(cfg: Config) -> tuple:
    if isinstance(cfg.ring, PrimeField):
        return (cfg.ring.modulus,)
    return DEFAULT_CHECK_MODULI


def run_check(cfg: Config, out: TextIO, err: TextIO) -> int:
    reports: list[AxiomReport] = []
    try:
        for p in suite_moduli(cfg):
            reports.append(run_full_suite(p))
    except ConstructionError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_EVAL
    passed = all(r.passed for r in reports)
    if cfg.json:
        doc = {"passed": passed, "suites": [r.to_document() for r in reports]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write("\n\n".join(r.render_table() for r in reports) + "\n")
    return EXIT_OK if passed else EXIT_FAILED


HELP = """\
expressions: integers, A, ( , ), pairs (x, y), + - * / and unary -
  products group to the left: a*b*c is (a*b)*c
meta commands:
  :field rational | :field integer | :field gf <p>
  :format coords | :format canonical
  :check      run the axiom suite for the current field
  :help       this text
  :quit       leave"""


class Session:
    """State of an interactive session; ``handle`` maps one input line to output text."""

    def __init__(self, cfg: Optional[Config] = None):
        self.cfg = cfg or Config()
        self.done = False

    def handle(self, line: str) -> str:
        text = line.strip()
        if not text:
            return ""
        if text.startswith(":"):
            return self._meta(text)
        try:
            tree, value = evaluate_line(text, self.cfg)
        except ExprError as exc:
            return format_error(text, exc)
        result = render(value, self.cfg.fmt)
        if longest_product_chain(tree) >= 3:
            return f"grouped as {to_source(tree)}\n{result}"
        return result

    def _meta(self, text: str) -> str:
        cmd, _, arg = text[1:].partition(" ")
        arg = arg.strip()
        if cmd in ("quit", "q", "exit"):
            self.done = True
            return ""
        if cmd == "help":
            return HELP
        if cmd == "field":
            try:
                self.cfg.ring = parse_ring(arg)
            except ConstructionError as exc:
                return f"error: {exc}"
            return f"field: {field_name(self.cfg.ring)}"
        if cmd == "format":
            if arg not in FORMATS:
                return "error: format must be coords or canonical"
            self.cfg.fmt = arg
            return f"format: {arg}"
        if cmd == "check":
            if not isinstance(self.cfg.ring, PrimeField):
                return "error: :check needs a prime field; try :field gf 3"
            try:
                report = run_full_suite(self.cfg.ring.modulus)
            except ConstructionError as exc:
                return f"error: {exc}"
            return report.render_table()
        return f"error: unknown command :{cmd} (try :help)"


def repl_session(cfg: Optional[Config] = None, stdin: TextIO = None, stdout: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    session = Session(cfg)
    interactive = stdin.isatty()
    try:
        while not session.done:
            if interactive:
                stdout.write("sfield> ")
                stdout.flush()
            line = stdin.readline()
            if not line:
                break
            reply = session.handle(line)
            if reply:
                stdout.write(reply + "\n")
                stdout.flush()
    except OSError:
        return EXIT_FAILED
    return EXIT_OK


def _field_arg(text: str) -> Ring:
    try:
        return parse_ring(text)
    except ConstructionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sfield", description="Exact S-field calculator with division by zero.")
    ap.add_argument("--field", type=_field_arg, default=RATIONAL,
                    help="scalar ring: rational (default), integer, or gf:<p>")
    ap.add_argument("--format", choices=FORMATS, default="coords", dest="fmt")
    ap.add_argument("--eval", metavar="EXPR", help="evaluate one expression and exit")
    ap.add_argument("--check", action="store_true", help="run the exhaustive axiom suite and exit")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    return ap


def main(argv: Optional[list] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    args = build_parser().parse_args(argv)
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    cfg = Config(args.field, args.fmt, args.json)
    if args.eval is not None:
        return run_eval(args.eval, cfg, out, err)
    if args.check:
        return run_check(cfg, out, err)
    return repl_session(cfg, stdout=out)


if __name__ == "__main__":
    sys.exit(main())
