"""Command-line front end.

Subcommands
    umbra SPEC            moment table and generating-function coefficients
    riordan G A [ACTION]  arrays of a pair: show, inverse, multiply, apply
    sheffer G A           Sheffer polynomial coefficient rows
    family KIND           coefficient tables of the classical families
    verify SUITE          run the exact identity suites

Umbrae are written in a small prefix grammar:

    eps | chi | bell | ubar | scalar(a) | egf(c0,c1,...)
    add(u,v) | dot(g,u) | dotscalar(a,u) | deriv(u) | inv(u) | k(g,u)

with rationals as ``p`` or ``p/q``.  Exit codes: 0 success, 2 parse or
usage errors, 3 precondition violations, 4 failed verification.  Output is
exact in every format; identical command lines (and seeds) produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import families as fam
from .rationals import format_rational
from .sheffer import (
    UmbraPair,
    ftra_apply,
    riordan_array,
    riordan_inverse,
    riordan_multiply,
    sheffer_sequence,
)
from .umbra import (
    Umbra,
    add,
    augmentation,
    bell,
    derivative_umbra,
    dot,
    dot_scalar,
    from_series,
    gf,
    inverse_umbra,
    k_umbra,
    scalar_umbra,
    singleton,
    ubar,
)
from .series import TruncatedSeries
from .verify import SUITE_NAMES, run_suites

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4

DEFAULT_ORDER = 12
VERIFY_ORDER_CEILING = 12


class SpecParseError(ValueError):
    """A syntax error in an umbra expression, with its character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at position {position}: {message}")
        self.position = position


# ---------------------------------------------------------------------------
# umbra expression grammar


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "(),":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch.isdigit() or ch == "-":
            j = i + 1
            while j < len(text) and (text[j].isdigit() or text[j] == "/"):
                j += 1
            literal = text[i:j]
            try:
                value = Fraction(literal)
            except (ValueError, ZeroDivisionError):
                raise SpecParseError(f"bad rational literal {literal!r}", i + 1)
            tokens.append(("rational", value, i))
            i = j
            continue
        raise SpecParseError(f"unexpected character {ch!r}", i + 1)
    tokens.append(("end", "", len(text)))
    return tokens


_ATOMS = ("eps", "chi", "bell", "ubar")
_FORMS = {
    "scalar": ("rational",),
    "egf": None,  # variadic rationals
    "add": ("expr", "expr"),
    "dot": ("expr", "expr"),
    "dotscalar": ("rational", "expr"),
    "deriv": ("expr",),
    "inv": ("expr",),
    "k": ("expr", "expr"),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        token = self.tokens[self.pos]
        if kind is not None and token[0] != kind:
            raise SpecParseError(f"expected {kind}, found {token[1]!r}", token[2] + 1)
        self.pos += 1
        return token

    def parse(self):
        expr = self.expr()
        end = self.peek()
        if end[0] != "end":
            raise SpecParseError(f"unexpected trailing input {end[1]!r}", end[2] + 1)
        return expr

    def expr(self):
        kind, value, at = self.take()
        if kind != "name":
            raise SpecParseError(f"expected an umbra expression, found {value!r}", at + 1)
        if value in _ATOMS:
            return (value,)
        if value not in _FORMS:
            raise SpecParseError(f"unknown umbra constructor {value!r}", at + 1)
        self.take("(")
        if value == "egf":
            args = [self.take("rational")[1]]
            while self.peek()[0] == ",":
                self.take(",")
                args.append(self.take("rational")[1])
            self.take(")")
            return ("egf", tuple(args))
        args = []
        for i, slot in enumerate(_FORMS[value]):
            if i:
                self.take(",")
            if slot == "rational":
                args.append(self.take("rational")[1])
            else:
                args.append(self.expr())
        self.take(")")
        return (value, *args)


def parse_umbra_spec(text: str):
    """Parse an umbra expression into its syntax tree."""
    return _Parser(text).parse()


def spec_to_text(ast) -> str:
    """Canonical text of a parsed expression; parses back to the same tree."""
    head = ast[0]
    if head in _ATOMS:
        return head
    if head == "scalar":
        return f"scalar({format_rational(ast[1])})"
    if head == "egf":
        return "egf(" + ",".join(format_rational(c) for c in ast[1]) + ")"
    if head == "dotscalar":
        return f"dotscalar({format_rational(ast[1])},{spec_to_text(ast[2])})"
    return head + "(" + ",".join(spec_to_text(a) for a in ast[1:]) + ")"


def build_umbra(ast, order: int) -> Umbra:
    """Evaluate a parsed expression at the requested truncation order."""
    head = ast[0]
    try:
        if head == "eps":
            return augmentation(order)
        if head == "chi":
            return singleton(order)
        if head == "bell":
            return bell(order)
        if head == "ubar":
            return ubar(order)
        if head == "scalar":
            return scalar_umbra(ast[1], order)
        if head == "egf":
            coeffs = list(ast[1])
            if len(coeffs) > order + 1:
                raise ValueError(
                    f"{len(coeffs)} coefficients exceed order {order}"
                )
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
            return from_series(TruncatedSeries(coeffs))
        if head == "add":
            return add(build_umbra(ast[1], order), build_umbra(ast[2], order))
        if head == "dot":
            return dot(build_umbra(ast[1], order), build_umbra(ast[2], order))
        if head == "dotscalar":
            return dot_scalar(ast[1], build_umbra(ast[2], order))
        if head == "deriv":
            return derivative_umbra(build_umbra(ast[1], order))
        if head == "inv":
            return inverse_umbra(build_umbra(ast[1], order))
        if head == "k":
            return k_umbra(build_umbra(ast[1], order), build_umbra(ast[2], order))
        raise ValueError(f"unknown constructor {head!r}")
    except ValueError as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise PreconditionError(f"in sub-expression {spec_to_text(ast)!r}: {exc}") from exc


class PreconditionError(ValueError):
    """A valid expression hit a domain precondition while being built."""


# ---------------------------------------------------------------------------
# rendering


def _rows_to_strings(rows):
    return [[format_rational(v) for v in row] for row in rows]


def _emit_pretty_table(rows, header=None):
    rows = _rows_to_strings(rows)
    if header:
        rows = [list(header)] + rows
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    for r in rows:
        print("  ".join(v.ljust(widths[i]) for i, v in enumerate(r)).rstrip())


def _emit_csv(rows):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    for row in rows:
        writer.writerow(row)


def _print_json(payload):
    print(json.dumps(payload, indent=2))


def render_umbra(u: Umbra, fmt: str, label: str):
    series = gf(u)
    if fmt == "json":
        _print_json(
            {
                "order": u.order,
                "moments": [format_rational(m) for m in u.moments],
                "series": [format_rational(c) for c in series.coeffs],
            }
        )
    elif fmt == "csv":
        _emit_csv(
            [
                ["moments"] + [format_rational(m) for m in u.moments],
                ["series"] + [format_rational(c) for c in series.coeffs],
            ]
        )
    else:
        print(f"umbra {label}   order {u.order}")
        table = [
            (n, u.moments[n], series.coeffs[n]) for n in range(u.order + 1)
        ]
        _emit_pretty_table(
            [[str(n), format_rational(m), format_rational(c)] for n, m, c in table],
            header=("n", "moment", "egf-coeff"),
        )


def render_matrix(array, fmt: str, note: str = ""):
    if fmt == "json":
        _print_json(
            {
                "order": array.order,
                "flavor": array.flavor,
                "entries": _rows_to_strings(array.entries),
            }
        )
    elif fmt == "csv":
        _emit_csv(_rows_to_strings(array.entries))
    else:
        print(f"riordan array   order {array.order}   flavor {array.flavor}")
        _emit_pretty_table(array.entries)
        if note:
            print(note)


def render_polys(polys, fmt: str, label: str, extra_rows=None, extra_label: str = ""):
    rows = [[format_rational(c) for c in p.coeffs] if not p.is_zero() else ["0"] for p in polys]
    if fmt == "json":
        payload = {"label": label, "polys": rows}
        if extra_rows is not None:
            payload[extra_label] = [[format_rational(c) for c in row] for row in extra_rows]
        _print_json(payload)
    elif fmt == "csv":
        if extra_rows is None:
            _emit_csv(rows)
        else:
            _emit_csv([["monomial"] + row for row in rows])
            _emit_csv(
                [["binomial-basis"] + [format_rational(c) for c in row] for row in extra_rows]
            )
    else:
        print(label)
        for n, p in enumerate(polys):
            print(f"  n={n}:  {p.pretty()}")
        if extra_rows is not None:
            print(f"{extra_label} rows (coefficient of binomial(x,k), k = 0..n)")
            for n, row in enumerate(extra_rows):
                print(f"  n={n}:  " + ", ".join(format_rational(c) for c in row))


# ---------------------------------------------------------------------------
# subcommands


def cmd_umbra(args) -> int:
    ast = parse_umbra_spec(args.spec)
    u = build_umbra(ast, args.order)
    render_umbra(u, args.format, spec_to_text(ast))
    return EXIT_OK


def _pair_from_specs(gamma_text: str, alpha_text: str, order: int) -> UmbraPair:
    gamma = build_umbra(parse_umbra_spec(gamma_text), order)
    alpha = build_umbra(parse_umbra_spec(alpha_text), order)
    return UmbraPair(gamma, alpha)


def cmd_riordan(args) -> int:
    pair = _pair_from_specs(args.gamma, args.alpha, args.order)
    array = riordan_array(pair, args.flavor)
    action = args.action or ["show"]
    verb = action[0]
    if verb == "show":
        if len(action) != 1:
            raise SpecParseError("show takes no arguments", 1)
        render_matrix(array, args.format)
    elif verb == "inverse":
        if len(action) != 1:
            raise SpecParseError("inverse takes no arguments", 1)
        if args.flavor != "exponential":
            raise PreconditionError("inverse is computed for the exponential flavor")
        inverse = riordan_inverse(array)
        product = riordan_multiply(array, inverse)
        is_identity = all(
            product.entry(n, k) == (1 if n == k else 0)
            for n in range(array.order + 1)
            for k in range(array.order + 1)
        )
        note = f"product-check: {'identity' if is_identity else 'NOT identity'}"
        render_matrix(inverse, args.format, note=note)
    elif verb == "multiply":
        if len(action) != 3:
            raise SpecParseError("multiply needs two umbra specs (second pair)", 1)
        other = riordan_array(_pair_from_specs(action[1], action[2], args.order), args.flavor)
        render_matrix(riordan_multiply(array, other), args.format)
    elif verb == "apply":
        if len(action) != 2:
            raise SpecParseError("apply needs one umbra spec (the sequence)", 1)
        if args.flavor != "exponential":
            raise PreconditionError("the moment transform applies exponential arrays")
        seq = build_umbra(parse_umbra_spec(action[1]), args.order)
        result = ftra_apply(array, seq)
        render_umbra(result, args.format, f"transform of {action[1]}")
    else:
        raise SpecParseError(f"unknown riordan action {verb!r}", 1)
    return EXIT_OK


def cmd_sheffer(args) -> int:
    pair = _pair_from_specs(args.gamma, args.alpha, args.order)
    seq = sheffer_sequence(pair)
    render_polys(seq.polys, args.format, "sheffer polynomials")
    return EXIT_OK


def cmd_family(args) -> int:
    kind = args.kind
    nmax = args.nmax if args.nmax is not None else args.order
    binomial_rows = None
    if kind == "chebyshev-u":
        polys = [fam.chebyshev_u(n) for n in range(nmax + 1)]
    elif kind == "gegenbauer":
        polys = [fam.gegenbauer(n, args.lam) for n in range(nmax + 1)]
    elif kind == "meixner1":
        polys = [fam.meixner1(n, args.b, args.c) for n in range(nmax + 1)]
        params = fam.meixner_params(Fraction(args.b), Fraction(args.c))
        binomial_rows = [fam.binomial_basis_row(n, params) for n in range(nmax + 1)]
    elif kind == "mittag-leffler":
        polys = [fam.mittag_leffler(n) for n in range(nmax + 1)]
        binomial_rows = [
            fam.binomial_basis_row(n, fam.mittag_leffler_params()) for n in range(nmax + 1)
        ]
    elif kind == "pidduck":
        polys = [fam.pidduck(n) for n in range(nmax + 1)]
        binomial_rows = [
            fam.binomial_basis_row(n, fam.pidduck_params()) for n in range(nmax + 1)
        ]
    else:
        raise SpecParseError(f"unknown family {kind!r}", 1)
    render_polys(
        polys,
        args.format,
        f"{kind} polynomials",
        extra_rows=binomial_rows,
        extra_label="binomial-basis",
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.order > VERIFY_ORDER_CEILING:
        raise PreconditionError(
            f"verification order {args.order} above the ceiling {VERIFY_ORDER_CEILING}"
        )
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    results = run_suites(names, order=args.order, seed=args.seed)
    if args.format == "json":
        _print_json(
            [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ]
        )
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
            if not r.passed:
                print(f"  counterexample: {r.detail}")
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} identities hold (order={args.order}, seed={args.seed})")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order N")
    common.add_argument(
        "--format",
        choices=("pretty", "json", "csv"),
        default="pretty",
        help="output format (always exact)",
    )
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    parser = argparse.ArgumentParser(
        prog="umbral",
        description="Exact umbral calculus: moment sequences, Riordan arrays, polynomial families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_umbra = sub.add_parser("umbra", parents=[common], help="print moments of an umbra expression")
    p_umbra.add_argument("spec", help="umbra expression, e.g. 'dot(chi,bell)'")
    p_umbra.set_defaults(func=cmd_umbra)

    p_riordan = sub.add_parser("riordan", parents=[common], help="arrays of an umbra pair")
    p_riordan.add_argument("gamma")
    p_riordan.add_argument("alpha")
    p_riordan.add_argument(
        "action",
        nargs="*",
        help="show | inverse | multiply GAMMA2 ALPHA2 | apply SEQ (default: show)",
    )
    p_riordan.add_argument(
        "--flavor", choices=("exponential", "ordinary"), default="exponential"
    )
    p_riordan.set_defaults(func=cmd_riordan)

    p_sheffer = sub.add_parser("sheffer", parents=[common], help="Sheffer polynomials of a pair")
    p_sheffer.add_argument("gamma")
    p_sheffer.add_argument("alpha")
    p_sheffer.set_defaults(func=cmd_sheffer)

    p_family = sub.add_parser("family", parents=[common], help="classical polynomial families")
    p_family.add_argument("kind", choices=fam.FAMILY_NAMES)
    p_family.add_argument("--nmax", type=int, default=None, help="highest degree (default: order)")
    p_family.add_argument("--lam", default="1", help="Gegenbauer parameter (rational)")
    p_family.add_argument("--b", default="1", help="Meixner parameter b (rational)")
    p_family.add_argument("--c", default="2", help="Meixner parameter c (rational)")
    p_family.set_defaults(func=cmd_family)

    p_verify = sub.add_parser("verify", parents=[common], help="run the exact identity suites")
    p_verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order < 0:
        print("error: --order must be nonnegative", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        return args.func(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
