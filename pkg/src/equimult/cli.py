"""Command-line interface: expression parsing, subcommands, deterministic reports.

Polynomial arguments use a small star-explicit grammar:

    poly   := ['-'] term (('+' | '-') term)*
    term   := coef '*' factor ('*' factor)*  |  factor ('*' factor)*  |  coef
    factor := ('x' | 'y') ['^' nat]
    coef   := nat ['/' nat]

so "y^2 - x^3" and "3/2*x^2*y - y" parse, while parentheses and implicit
multiplication are rejected.  Reports render as aligned text or, with
--json, as a single JSON object; both carry identical numbers and the
output of a given invocation is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .defo import SectionSolution, is_equimultiple_along, solve_sections
from .plane import DegreeBoundError, PlaneCurve, verify_smooth_expected
from .poly import BiPoly, SectionGerm, ZeroPolynomialError
from .singular import InvalidGermError, analyze


class PolyParseError(ValueError):
    """Syntax or lexical error in a polynomial expression, with 1-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


# ---------------------------------------------------------------------------
# polynomial expression parser
# ---------------------------------------------------------------------------

Token = Tuple[str, str, int]  # kind, text, 1-based position


def _tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    k = 0
    n = len(source)
    while k < n:
        ch = source[k]
        if ch.isspace():
            k += 1
            continue
        pos = k + 1
        if ch.isdigit():
            start = k
            while k < n and source[k].isdigit():
                k += 1
            tokens.append(("int", source[start:k], pos))
            continue
        if ch in ("x", "y"):
            tokens.append(("var", ch, pos))
            k += 1
            continue
        if ch in "+-*/^":
            tokens.append((ch, ch, pos))
            k += 1
            continue
        if ch.isalpha():
            raise PolyParseError(f"unknown variable {ch!r}; only x and y are allowed", pos)
        raise PolyParseError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", "", n + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.k = 0

    def peek(self) -> Token:
        return self.tokens[self.k]

    def advance(self) -> Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def parse(self) -> BiPoly:
        total = BiPoly.zero()
        negate = False
        if self.peek()[0] == "-":  # unary minus, first term only
            self.advance()
            negate = True
        first = self.term()
        total = total - first if negate else total + first
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            t = self.term()
            total = total + t if op == "+" else total - t
        kind, text, pos = self.peek()
        if kind != "end":
            raise PolyParseError(f"unexpected {text!r}", pos)
        return total

    def term(self) -> BiPoly:
        kind, _, pos = self.peek()
        ix = iy = 0
        if kind == "int":
            coeff = self.coefficient()
            if self.peek()[0] != "*":
                return BiPoly.constant(coeff)
            self.advance()
            i, j = self.factor()
            ix, iy = ix + i, iy + j
        elif kind == "var":
            coeff = Fraction(1)
            i, j = self.factor()
            ix, iy = ix + i, iy + j
        else:
            raise PolyParseError("expected a number or a variable", pos)
        while self.peek()[0] == "*":
            self.advance()
            i, j = self.factor()
            ix, iy = ix + i, iy + j
        return BiPoly.monomial(ix, iy, coeff)

    def coefficient(self) -> Fraction:
        _, text, _ = self.advance()
        num = int(text)
        if self.peek()[0] != "/":
            return Fraction(num)
        self.advance()
        kind, dtext, dpos = self.peek()
        if kind != "int":
            raise PolyParseError("expected a denominator", dpos)
        self.advance()
        if int(dtext) == 0:
            raise PolyParseError("zero denominator", dpos)
        return Fraction(num, int(dtext))

    def factor(self) -> Tuple[int, int]:
        kind, text, pos = self.peek()
        if kind != "var":
            raise PolyParseError("expected a variable", pos)
        self.advance()
        exponent = 1
        if self.peek()[0] == "^":
            self.advance()
            ekind, etext, epos = self.peek()
            if ekind == "-":
                raise PolyParseError("negative exponents are not allowed", epos)
            if ekind != "int":
                raise PolyParseError("expected a nonnegative integer exponent", epos)
            self.advance()
            exponent = int(etext)
        return (exponent, 0) if text == "x" else (0, exponent)


def parse_poly(source: str) -> BiPoly:
    """Parse a polynomial expression in x and y; round-trips with str(BiPoly)."""
    return _Parser(source).parse()


# ---------------------------------------------------------------------------
# report construction
# ---------------------------------------------------------------------------

_DOMAIN_ERRORS = (PolyParseError, InvalidGermError, DegreeBoundError, ZeroPolynomialError, ValueError)


def _parse_arg(name: str, source: str, inputs: dict) -> BiPoly:
    inputs[name] = source
    try:
        p = parse_poly(source)
    except PolyParseError as exc:
        raise PolyParseError(f"argument {name}: {exc.message}", exc.position) from None
    inputs[name] = str(p)
    return p


def _solution_payload(sol: SectionSolution) -> dict:
    if not sol.admits:
        return {"empty": True}
    s = sol.solutions
    return {
        "empty": False,
        "dimension": s.dimension,
        "particular": [str(c) for c in s.particular],
        "directions": [[str(c) for c in d] for d in s.directions],
    }


def _run_analyze(args: argparse.Namespace, inputs: dict) -> dict:
    f = _parse_arg("f", args.f, inputs)
    rep = analyze(f)
    return {
        "multiplicity": rep.m,
        "tangent_cone": str(rep.tangent_cone),
        "unitangential": rep.unitangential,
        "deg_Z": rep.degZ,
        "ambiguity": rep.ambiguity,
    }


def _run_deform(args: argparse.Namespace, inputs: dict) -> dict:
    inputs["f"] = args.f
    inputs["g"] = args.g
    if args.section:
        inputs["a"], inputs["b"] = args.section
    f = _parse_arg("f", args.f, inputs)
    g = _parse_arg("g", args.g, inputs)
    if args.section:
        a = _parse_arg("a", args.section[0], inputs)
        b = _parse_arg("b", args.section[1], inputs)
        return {"equimultiple": is_equimultiple_along(f, g, SectionGerm(a, b))}
    sol = solve_sections(f, g)
    return {"admits_section": sol.admits, "solutions": _solution_payload(sol)}


def _run_sections(args: argparse.Namespace, inputs: dict) -> dict:
    inputs["f"] = args.f
    inputs["g"] = args.g
    f = _parse_arg("f", args.f, inputs)
    g = _parse_arg("g", args.g, inputs)
    sol = solve_sections(f, g)
    return {"admits_section": sol.admits, "solutions": _solution_payload(sol)}


def _run_p2(args: argparse.Namespace, inputs: dict) -> dict:
    inputs["f"] = args.f
    inputs["degree"] = args.degree
    f = _parse_arg("f", args.f, inputs)
    rep = verify_smooth_expected(PlaneCurve(f, args.degree))
    results = {
        "multiplicity": rep.m,
        "unitangential": rep.unitangential,
        "dim_linear_system": rep.dim_L,
        "h0_JZ": rep.h0_JZ,
        "tangent_dim": rep.tangent_dim,
        "expected_dim": rep.expected_dim,
        "smooth_of_expected": rep.smooth_of_expected,
    }
    if rep.unitangential and not rep.smooth_of_expected:
        results["note"] = (
            "all tangents coincide: the tangent space sits below the expected dimension"
        )
    return results


_HANDLERS = {
    "analyze": _run_analyze,
    "deform": _run_deform,
    "sections": _run_sections,
    "p2": _run_p2,
}


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _text_scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _solution_text(payload: dict) -> str:
    if payload["empty"]:
        return "none"
    point = "(" + ", ".join(payload["particular"]) + ")"
    if not payload["directions"]:
        return f"point {point}"
    spans = ", ".join("(" + ", ".join(d) + ")" for d in payload["directions"])
    return f"{point} + span{{{spans}}}"


def _result_lines(results: dict) -> list[Tuple[str, str]]:
    lines: list[Tuple[str, str]] = []
    for key, value in results.items():
        if key == "solutions":
            lines.append((key, _solution_text(value)))
        elif key == "particular":
            lines.append((key, "(" + ", ".join(value) + ")"))
        elif key == "directions":
            rendered = ", ".join("(" + ", ".join(d) + ")" for d in value) or "none"
            lines.append((key, rendered))
        else:
            lines.append((key, _text_scalar(value)))
    return lines


def _colorize(status: str) -> str:
    if sys.stdout.isatty() and not os.environ.get("NO_COLOR"):
        code = "32" if status == "ok" else "31"
        return f"\x1b[{code}m{status}\x1b[0m"
    return status


def render_text(report: dict) -> str:
    lines: list[Tuple[str, str]] = [("command", report["command"])]
    lines.extend((k, _text_scalar(v)) for k, v in report["inputs"].items())
    lines.extend(_result_lines(report["results"]))
    lines.append(("status", _colorize(report["status"])))
    if "error" in report:
        lines.append(("error", report["error"]))
    width = max(len(k) for k, _ in lines) + 1
    return "".join(f"{(k + ':').ljust(width)} {v}\n" for k, v in lines)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object")

    parser = argparse.ArgumentParser(
        prog="equimult",
        description="Exact invariants of plane curve germs and their first-order equimultiple deformations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="local invariants of a curve germ")
    p.add_argument("f", help="curve equation, e.g. \"y^2 - x^3\"")

    p = sub.add_parser("deform", parents=[common], help="check or solve an equimultiple deformation")
    p.add_argument("f", help="curve equation")
    p.add_argument("g", help="deformation direction")
    p.add_argument("--section", nargs=2, metavar=("A", "B"), help="section components a and b")

    p = sub.add_parser("sections", parents=[common], help="all admissible section constants")
    p.add_argument("f", help="curve equation")
    p.add_argument("g", help="deformation direction")

    p = sub.add_parser("p2", parents=[common], help="tangent vs expected dimension for a plane curve")
    p.add_argument("f", help="affine equation in a chart with the marked point at the origin")
    p.add_argument("--degree", type=int, required=True, help="degree bound d of the curves")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    inputs: dict = {}
    try:
        try:
            results = _HANDLERS[args.command](args, inputs)
            status, error, code = "ok", None, 0
        except _DOMAIN_ERRORS as exc:
            results, status, error, code = {}, "error", str(exc), 1
        report = {"command": args.command, "inputs": inputs, "results": results, "status": status}
        if error is not None:
            report["error"] = error
        sys.stdout.write(render_json(report) if args.json else render_text(report))
        return code
    except Exception as exc:  # pragma: no cover - internal failures
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
