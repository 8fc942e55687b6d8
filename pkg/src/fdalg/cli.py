"""Command-line front end (``alg``).

Algebra definition files are line oriented::

    # complex numbers
    algebra complex
    field rational
    dim 2
    basis one i
    sc 0 0 0 1
    sc 0 1 1 1
    sc 1 0 1 1
    sc 1 1 0 -1
    unit [1, 0]
    end

A file may instead hold a single ``builtin <name>`` line (optionally with a
``field`` line), and ``--algebra builtin:<name>`` skips the file entirely.

Output is one ``KEY: value`` per line after an outcome label. Exit codes:
0 answered, 1 negative result, 2 singular / not representable, 64 usage,
65 malformed input.
"""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .algebra import Algebra, AlgebraElement
from .catalog import builtin
from .errors import (
    AlgebraError,
    BadField,
    DimensionMismatch,
    DivisionByZero,
    DuplicateTriple,
    IndexOutOfRange,
    NonassociativeUnsupported,
    NoRightInverse,
    NoUnit,
    NotRepresentable,
    ParseError,
    Singular,
    UnknownBuiltin,
)
from .field import QQ, Field, field_from_descriptor
from .linalg import Affine, Inconsistent, Unique, det
from .operator import (
    Grouping,
    OperatorExpression,
    SandwichTerm,
    TensorOperator,
    apply_tensor,
    commutator_unit_solve,
    inverse_tensor,
    right_inverse,
    solve_linear,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_SINGULAR = 2
EXIT_USAGE = 64
EXIT_PARSE = 65


# -- algebra files -------------------------------------------------------------


@dataclass
class AlgebraFile:
    name: str = ""
    field: Field = QQ
    dim: int | None = None
    basis: list[str] | None = None
    triples: list[tuple[int, int, int, object, int]] = dc_field(default_factory=list)
    unit: str | None = None
    unit_line: int | None = None
    builtin: str | None = None

    def build(self) -> Algebra:
        if self.builtin is not None:
            try:
                alg = builtin(self.builtin, self.field)
            except UnknownBuiltin as exc:
                raise ParseError(str(exc)) from None
        else:
            constants = {(i, j, k): v for i, j, k, v, _ in self.triples}
            alg = Algebra(self.field, self.dim, constants, names=self.basis, name=self.name)
        if self.unit is not None:
            try:
                declared = parse_element(self.unit, alg)
            except (ParseError, DimensionMismatch, DivisionByZero) as exc:
                raise ParseError(f"bad unit: {exc}", self.unit_line) from None
            if alg.unit != declared:
                raise ParseError(f"declared unit {declared} is not the unit of the algebra", self.unit_line)
        return alg


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_algebra_file(text: str) -> AlgebraFile:
    af = AlgebraFile()
    seen_field = ended = False
    seen_keys = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if ended:
            raise ParseError("content after 'end'", lineno)
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "algebra":
            if not rest:
                raise ParseError("'algebra' needs a name", lineno)
            af.name = rest
        elif keyword == "field":
            if seen_field:
                raise ParseError("field given twice", lineno)
            try:
                af.field = field_from_descriptor(rest)
            except BadField as exc:
                raise ParseError(str(exc), lineno) from None
            seen_field = True
        elif keyword == "dim":
            if af.dim is not None:
                raise ParseError("dim given twice", lineno)
            if not rest.isdigit() or int(rest) < 1:
                raise ParseError(f"dim must be a positive integer, got {rest!r}", lineno)
            af.dim = int(rest)
        elif keyword == "basis":
            names = rest.split()
            if af.dim is None:
                raise ParseError("'basis' before 'dim'", lineno)
            if len(names) != af.dim:
                raise ParseError(f"expected {af.dim} basis names, got {len(names)}", lineno)
            if len(set(names)) != len(names) or not all(re.fullmatch(r"[A-Za-z_]\w*", n) for n in names):
                raise ParseError("basis names must be distinct identifiers", lineno)
            af.basis = names
        elif keyword == "sc":
            if af.dim is None:
                raise ParseError("'sc' before 'dim'", lineno)
            parts = rest.split()
            if len(parts) != 4:
                raise ParseError("expected 'sc <i> <j> <k> <value>'", lineno)
            try:
                i, j, k = (int(p) for p in parts[:3])
            except ValueError:
                raise ParseError("structure-constant indices must be integers", lineno) from None
            for idx in (i, j, k):
                if not 0 <= idx < af.dim:
                    raise ParseError(f"index {idx} out of range for dim {af.dim}", lineno)
            if (i, j, k) in seen_keys:
                raise ParseError(f"triple ({i}, {j}, {k}) already given on line {seen_keys[i, j, k]}", lineno)
            try:
                value = af.field.parse(parts[3])
            except (ParseError, DivisionByZero) as exc:
                raise ParseError(str(exc), lineno) from None
            seen_keys[i, j, k] = lineno
            af.triples.append((i, j, k, value, lineno))
        elif keyword == "unit":
            af.unit, af.unit_line = rest, lineno
        elif keyword == "builtin":
            af.builtin = rest
        elif keyword == "end":
            ended = True
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    if af.builtin is not None:
        if af.dim is not None or af.triples or af.basis:
            raise ParseError("a builtin reference cannot be combined with dim/basis/sc")
    elif af.dim is None:
        raise ParseError("missing 'dim'")
    return af


def load_algebra(ref: str, field: Field | None = None) -> Algebra:
    """Resolve ``builtin:<name>`` or read an algebra file."""
    if ref.startswith("builtin:"):
        try:
            return builtin(ref[len("builtin:"):], field or QQ)
        except UnknownBuiltin as exc:
            raise ParseError(str(exc)) from None
    af = parse_algebra_file(Path(ref).read_text(encoding="utf-8"))
    if field is not None and field != af.field:
        raise ParseError(f"--field {field} conflicts with field {af.field} in {ref}")
    return af.build()


# -- elements ------------------------------------------------------------------

_SCALAR = r"\d+(?:\s*/\s*\d+)?"
_TERM = re.compile(rf"\s*(?P<sign>[-−]?)\s*(?:(?P<coef>{_SCALAR})\s*\*\s*)?(?P<name>[A-Za-z_]\w*)\s*")
_SEP = re.compile(r"\s*([-+−])\s*")


def parse_element(text: str, alg: Algebra) -> AlgebraElement:
    """Parse ``[c0, c1, ...]`` or a named sum such as ``3/2*e0 + -1*e3``."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError(f"unterminated coordinate vector {text!r}")
        body = s[1:-1].strip()
        items = [c.strip() for c in body.split(",")] if body else []
        if len(items) != alg.dim:
            raise DimensionMismatch(f"{len(items)} coordinates given, algebra has dimension {alg.dim}")
        return alg.element([alg.field.parse(c) for c in items])
    if s == "0":
        return alg.zero()
    index = {n: i for i, n in enumerate(alg.names)}
    coords = [alg.field.zero] * alg.dim
    pos, negate = 0, False
    while True:
        m = _TERM.match(s, pos)
        if m is None:
            raise ParseError(f"cannot parse element {text!r} at offset {pos}")
        name = m.group("name")
        if name not in index:
            raise ParseError(f"unknown basis name {name!r}")
        c = alg.field.parse(m.group("coef")) if m.group("coef") else alg.field.one
        if m.group("sign"):
            c = -c
        if negate:
            c = -c
        coords[index[name]] = coords[index[name]] + c
        pos = m.end()
        if pos == len(s):
            break
        sep = _SEP.match(s, pos)
        if sep is None:
            raise ParseError(f"expected '+' or '-' in {text!r} at offset {pos}")
        negate = sep.group(1) != "+"
        pos = sep.end()
    return alg.element(coords)


def format_element(x: AlgebraElement) -> str:
    return str(x)


# -- terms and tensors -----------------------------------------------------------


class _TermAction(argparse.Action):
    """Collect ``--term`` and ``--minus-term`` in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        items = getattr(namespace, self.dest) or []
        items.append((option_string == "--minus-term", values))
        setattr(namespace, self.dest, items)


def parse_term(spec: str, alg: Algebra, negate: bool = False) -> SandwichTerm:
    parts = spec.split(":")
    if len(parts) not in (2, 3):
        raise ParseError(f"term must be LEFT:RIGHT[:L|R], got {spec!r}")
    grouping = Grouping.LEFT_FIRST
    if len(parts) == 3:
        flag = parts[2].strip().upper()
        if flag not in ("L", "R"):
            raise ParseError(f"grouping flag must be L or R, got {parts[2]!r}")
        grouping = Grouping(flag)
    left = parse_element(parts[0], alg)
    right = parse_element(parts[1], alg)
    if negate:
        left = -left
    return SandwichTerm(left, right, grouping)


def parse_tensor(text: str, alg: Algebra) -> TensorOperator:
    """Read ``c <p> <q> <value>`` lines; other lines must be blank, comments or labels."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line or line == "TENSOR":
            continue
        parts = line.split()
        if parts[0] != "c" or len(parts) != 4:
            raise ParseError("expected 'c <p> <q> <value>'", lineno)
        try:
            p, q = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("tensor indices must be integers", lineno) from None
        if not (0 <= p < alg.dim and 0 <= q < alg.dim):
            raise ParseError(f"tensor index ({p}, {q}) out of range", lineno)
        entries.append((p, q, alg.field.parse(parts[3])))
    return TensorOperator.from_entries(alg, entries)


def format_tensor(t: TensorOperator) -> list[str]:
    return [f"c {p} {q} {c}" for p, q, c in t.nonzero()]


# -- reports -------------------------------------------------------------------


def format_outcome(outcome) -> list[str]:
    if isinstance(outcome, Unique):
        return ["UNIQUE", f"solution: {outcome.solution}"]
    if isinstance(outcome, Affine):
        lines = ["AFFINE", f"particular: {outcome.particular}", f"kernel-dim: {len(outcome.kernel)}"]
        return lines + [f"kernel: {v}" for v in outcome.kernel]
    return ["INCONSISTENT", f"rank: {outcome.rank}", f"augmented-rank: {outcome.augmented_rank}"]


def _outcome_code(outcome) -> int:
    return EXIT_NEGATIVE if isinstance(outcome, Inconsistent) else EXIT_OK


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_info(alg, args, emit):
    unit = alg.unit
    emit(f"dim {alg.dim}")
    emit(f"associative: {_yes(alg.is_associative)}")
    emit(f"commutative: {_yes(alg.is_commutative)}")
    emit(f"unit: {unit if unit is not None else 'none'}")
    return EXIT_OK


def cmd_mul(alg, args, emit):
    emit(f"product: {parse_element(args.left, alg) * parse_element(args.right, alg)}")
    return EXIT_OK


def _expression(alg, args) -> OperatorExpression:
    if not args.terms:
        raise _UsageError("at least one --term or --minus-term is required")
    return OperatorExpression([parse_term(spec, alg, neg) for neg, spec in args.terms])


def cmd_solve(alg, args, emit):
    expr = _expression(alg, args)
    outcome = solve_linear(expr, parse_element(args.rhs, alg))
    for line in format_outcome(outcome):
        emit(line)
    return _outcome_code(outcome)


def cmd_invert_op(alg, args, emit):
    expr = _expression(alg, args)
    try:
        t = inverse_tensor(expr)
    except Singular:
        emit("SINGULAR")
        return EXIT_SINGULAR
    except NotRepresentable:
        emit("NOT-REPRESENTABLE")
        return EXIT_SINGULAR
    except NonassociativeUnsupported:
        emit("NONASSOCIATIVE-UNSUPPORTED")
        return EXIT_SINGULAR
    emit("TENSOR")
    for line in format_tensor(t):
        emit(line)
    return EXIT_OK


def cmd_apply_tensor(alg, args, emit):
    text = ""
    if args.tensor is not None:
        text = sys.stdin.read() if args.tensor == "-" else Path(args.tensor).read_text(encoding="utf-8")
    text += "".join(f"\nc {spec}" for spec in args.coef or [])
    t = parse_tensor(text, alg)
    emit(f"result: {apply_tensor(t, parse_element(args.element, alg))}")
    return EXIT_OK


def cmd_right_inverse(alg, args, emit):
    a = parse_element(args.element, alg)
    try:
        x = right_inverse(a)
    except NoUnit:
        emit("NO-UNIT")
        return EXIT_NEGATIVE
    except NoRightInverse:
        emit("NO-RIGHT-INVERSE")
        return EXIT_NEGATIVE
    emit("RIGHT-INVERSE")
    emit(f"solution: {x}")
    return EXIT_OK


def cmd_det_left(alg, args, emit):
    a = parse_element(args.element, alg)
    d = det(alg.left_mul_matrix(a))
    emit(f"det-left: {d}")
    emit(f"right-invertible: {_yes(bool(d))}")
    return EXIT_OK


def cmd_commutator_unit(alg, args, emit):
    a = parse_element(args.element, alg)
    try:
        outcome = commutator_unit_solve(a)
    except NoUnit:
        emit("NO-UNIT")
        return EXIT_NEGATIVE
    for line in format_outcome(outcome):
        emit(line)
    return _outcome_code(outcome)


# -- argument parsing ------------------------------------------------------------


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alg", description="Solve sandwich equations in finite-dimensional algebras.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--algebra", required=True, help="algebra file or builtin:<name>")
        p.add_argument("--field", help="scalar field for builtins: 'rational' or 'gf <p>'")
        p.set_defaults(func=func)
        return p

    def with_terms(p):
        p.add_argument("--term", dest="terms", action=_TermAction, metavar="LEFT:RIGHT[:L|R]")
        p.add_argument("--minus-term", dest="terms", action=_TermAction, metavar="LEFT:RIGHT[:L|R]")

    command("info", cmd_info, "dimension and structural properties")
    p = command("mul", cmd_mul, "product of two elements")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = command("solve", cmd_solve, "solve sum of sandwich terms = rhs")
    with_terms(p)
    p.add_argument("--rhs", required=True)
    p = command("invert-op", cmd_invert_op, "inverse operator in tensor form")
    with_terms(p)
    p = command("apply-tensor", cmd_apply_tensor, "apply b -> sum c[p,q] (e_p b) e_q")
    p.add_argument("--tensor", help="file of 'c <p> <q> <value>' lines, '-' for stdin")
    p.add_argument("--coef", action="append", metavar="'P Q VALUE'")
    p.add_argument("--element", required=True)
    p = command("right-inverse", cmd_right_inverse, "solve a x = 1")
    p.add_argument("--element", required=True)
    p = command("det-left", cmd_det_left, "determinant of left multiplication")
    p.add_argument("--element", required=True)
    p = command("commutator-unit", cmd_commutator_unit, "solve a x - x a = 1")
    p.add_argument("--element", required=True)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def emit(line):
        print(line, file=stdout)

    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"alg: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or 0
    try:
        field = field_from_descriptor(args.field) if args.field else None
        alg = load_algebra(args.algebra, field)
        return args.func(alg, args, emit)
    except _UsageError as exc:
        print(f"alg: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"alg: {exc}", file=stderr)
        return EXIT_USAGE
    except (ParseError, DimensionMismatch, DivisionByZero, BadField, IndexOutOfRange, DuplicateTriple) as exc:
        print(f"alg: parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except AlgebraError as exc:
        print(f"alg: {exc}", file=stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
