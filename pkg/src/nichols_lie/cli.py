"""Command-line front end.

    python3 -m nichols_lie analyze --row 1 --order 5
    python3 -m nichols_lie roots --matrix "z3,z3^2;1,z3" --json
    python3 -m nichols_lie hilbert --row 1 --truncate 10 --check-factorization
    python3 -m nichols_lie coproduct --row 1 --word 12 --power 3 --left-degree 3,0
    python3 -m nichols_lie table

Exit codes: 0 ok, 2 parse error or undefined Cartan entry, 3 root system
not finite at the cap, 4 budget exceeded, 5 preset constraint violated.
"""

import argparse
import json
import sys

from .braiding import braiding_from_json, diagram, parse_matrix_text
from .errors import (
    BudgetExceededError,
    CartanUndefinedError,
    ConstraintError,
    LiteralParseError,
    NicholsError,
    RootSystemNotFiniteError,
)
from .lieinfer import WITNESS_BUDGET, build_report
from .lyndon import word, word_str
from .presets import ROWS, RowPreset
from .rootsys import (
    check_condition_11,
    hilbert_series_A,
    hilbert_series_B,
    hilbert_series_L,
    positive_roots,
    weyl_orbit,
)
from .tensoralg import DEFAULT_BUDGET, coproduct, coproduct_component, hyperletter, power

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_FINITE = 3
EXIT_BUDGET = 4
EXIT_CONSTRAINT = 5

TYPE_DISPLAY = {"A1+A1": "A1xA1"}


def _vec(v):
    return "(" + ",".join(str(x) for x in v) + ")"


def _root_name(v):
    parts = []
    for k, c in enumerate(v, start=1):
        if c == 1:
            parts.append(f"a{k}")
        elif c:
            parts.append(f"{c}a{k}")
    return "+".join(parts) or "0"


def _lit(x, approx=False):
    s = x.literal()
    if approx:
        s += f"  (~{x.approx()})"
    return s


class _Input:
    """A braiding matrix together with the preset it came from, if any."""

    def __init__(self, q, preset=None):
        self.q = q
        self.preset = preset

    @property
    def label(self):
        if self.preset is not None:
            return self.preset.describe()
        return "matrix " + ";".join(",".join(r) for r in self.q.literals())


def _load_input(args):
    if args.matrix is not None:
        text = args.matrix.strip()
        if text.startswith("{"):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise LiteralParseError(exc.msg, text, exc.pos) from None
            return _Input(braiding_from_json(data))
        return _Input(parse_matrix_text(text))
    if args.row is None:
        raise ConstraintError("either --row or --matrix is required")
    preset = RowPreset(args.row, args.diagram, args.order, args.exp)
    return _Input(preset.matrix(), preset)


def _add_input_flags(p):
    p.add_argument("--row", type=int, help="Table row 1..16")
    p.add_argument("--diagram", type=int, default=1, help="diagram within the row cell")
    p.add_argument("--order", type=int, help="order of q (or zeta) for the preset")
    p.add_argument("--exp", type=int, default=1, help="exponent k in z{order}^k")
    p.add_argument("--matrix", help='"z3,z3^2;1,z3" or a JSON object with "matrix"/"diagram"; write --matrix=TEXT when TEXT starts with "-"')
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--approx", action="store_true", help="append decimal approximations")


# -- analyze -----------------------------------------------------------------------

def _report_dict(inp, report):
    data = report.to_json()
    data["input"] = inp.label
    if inp.preset is not None:
        data["expected"] = inp.preset.lie_type
    return data


def _cartan_discrepancy(inp, report):
    if inp.preset is None:
        return None
    quoted = inp.preset.quoted_cartan_roots()
    if quoted is None:
        return None
    computed = {b for b, _, _ in report.cartan_degrees}
    if computed == set(quoted):
        return None
    missing = sorted(set(quoted) - computed)
    extra = sorted(computed - set(quoted))
    return (
        "computed Cartan roots differ from the quoted set: "
        f"quoted-only {[_root_name(b) for b in missing]}, "
        f"computed-only {[_root_name(b) for b in extra]}"
    )


def cmd_analyze(args, out):
    inp = _load_input(args)
    report = build_report(inp.q, budget=args.budget)
    note = _cartan_discrepancy(inp, report)
    if note:
        report.warnings.append(note)
    if args.json:
        out.write(json.dumps(_report_dict(inp, report), indent=2) + "\n")
        return EXIT_OK
    out.write(f"input: {inp.label}\n")
    out.write(f"diagram: {diagram(inp.q)}\n")
    out.write(f"type: {TYPE_DISPLAY.get(report.lie_type, report.lie_type)}\n")
    if report.cartan_matrix and len(report.cartan_matrix) == 2:
        out.write(f"cartan matrix: {report.cartan_matrix}\n")
    out.write("Lie degrees:\n")
    for b, n, d in report.cartan_degrees:
        gen = "  generator" if b in report.generators else ""
        out.write(f"  {_root_name(b):<10} N={n:<3} degree {_vec(d)}{gen}\n")
    if not report.cartan_degrees:
        out.write("  (none)\n")
    out.write("witnesses:\n")
    for w in report.witnesses:
        coeff = "" if w.coefficient is None else " coeff " + _lit(w.coefficient, args.approx)
        out.write(
            f"  {_root_name(w.root):<10} {_vec(w.left_degree)} x {_vec(w.right_degree)}: "
            f"{w.status}{coeff}\n"
        )
    out.write("degree checks:\n")
    for s in report.serre_checks:
        out.write(f"  {s}\n")
    out.write(f"compatibility q(a,b)^N_b = 1: {'holds' if report.condition11 else 'fails'}\n")
    out.write(f"generation: {report.generation}\n")
    for w in report.warnings:
        out.write(f"warning: {w}\n")
    return EXIT_OK


# -- roots ------------------------------------------------------------------------

def cmd_roots(args, out):
    inp = _load_input(args)
    rs = positive_roots(inp.q)
    ok, _ = check_condition_11(inp.q, rs)
    orbit = weyl_orbit(inp.q)
    if args.json:
        data = {
            "roots": rs.to_json(),
            "condition11": ok,
            "orbit": [list(d.literals()) for d in orbit],
        }
        out.write(json.dumps(data, indent=2) + "\n")
        return EXIT_OK
    out.write(f"input: {inp.label}\n")
    out.write(f"{len(rs)} positive roots (reduced word {''.join(map(str, rs.reduced_word))}):\n")
    for r, c, n in zip(rs.roots, rs.cartan_flags, rs.orders):
        flag = "cartan" if c else "-"
        out.write(
            f"  {_root_name(r):<10} N={n:<3} {flag:<7} word {word_str(rs.root_words[r])}\n"
        )
    out.write(f"compatibility q(a,b)^N_b = 1: {'holds' if ok else 'fails'}\n")
    out.write(f"orbit ({len(orbit)} diagrams):\n")
    for d in orbit:
        out.write(f"  {d}\n")
    return EXIT_OK


# -- hilbert ----------------------------------------------------------------------

def cmd_hilbert(args, out):
    inp = _load_input(args)
    rs = positive_roots(inp.q)
    D = args.truncate
    hb = hilbert_series_B(rs, D)
    if args.json:
        data = {
            "truncation": D,
            "H_B": [[a, b, c] for (a, b), c in sorted(hb.coefficients.items())],
        }
        if args.check_factorization:
            data["factorization"] = hilbert_series_L(rs, D) == hb * hilbert_series_A(rs, D)
        out.write(json.dumps(data, indent=2) + "\n")
        return EXIT_OK
    out.write(f"input: {inp.label}\n")
    out.write(f"H_B up to total degree {D} (degree: coefficient):\n")
    for total in range(D + 1):
        row = [
            f"{_vec(k)}:{c}"
            for k, c in sorted(hb.coefficients.items())
            if sum(k) == total
        ]
        if row:
            out.write(f"  {total}: " + " ".join(row) + "\n")
    if args.check_factorization:
        ok = hilbert_series_L(rs, D) == hb * hilbert_series_A(rs, D)
        out.write("H_L = H_B·H_A: " + ("OK" if ok else "MISMATCH") + "\n")
        if not ok:
            return 1
    return EXIT_OK


# -- coproduct --------------------------------------------------------------------

def _parse_degree(text):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise LiteralParseError("expected a,b", text, 0) from None
    if len(parts) != 2 or min(parts) < 0:
        raise LiteralParseError("expected two non-negative integers a,b", text, 0)
    return parts


def cmd_coproduct(args, out):
    inp = _load_input(args)
    q = inp.q
    try:
        w = word(args.word)
    except (ValueError, NicholsError):
        raise LiteralParseError("word must be a digit string such as 112", args.word, 0) from None
    el = power(hyperletter(w, q), args.power, budget=args.budget)
    if args.left_degree is not None:
        comp = coproduct_component(el, _parse_degree(args.left_degree), q)
    else:
        comp = coproduct(el, q)
    terms = sorted(comp.terms.items())
    if args.json:
        out.write(json.dumps(comp.to_json(), indent=2) + "\n")
        return EXIT_OK
    out.write(f"input: {inp.label}\n")
    out.write(f"element: [{word_str(w)}]^{args.power}, {len(el)} words\n")
    if not terms:
        out.write("component is zero\n")
    for (l, r), c in terms:
        out.write(f"  {word_str(l) or '1'} (x) {word_str(r) or '1'} : {_lit(c, args.approx)}\n")
    return EXIT_OK


# -- table ------------------------------------------------------------------------

def table_lines(budget=WITNESS_BUDGET):
    """Computed analogue of the classification table, one line per row."""
    lines = ["row | diagram | parameter | #roots | Cartan roots (N) | type | expected"]
    for row in sorted(ROWS):
        preset = RowPreset(row)
        q = preset.matrix()
        report = build_report(q, budget=budget)
        d = diagram(q)
        name = "q" if ROWS[row]["kind"] == "q" else "zeta"
        cartan = ", ".join(f"{_root_name(b)}({n})" for b, n, _ in report.cartan_degrees) or "-"
        t = TYPE_DISPLAY.get(report.lie_type, report.lie_type)
        e = TYPE_DISPLAY.get(preset.lie_type, preset.lie_type)
        lines.append(
            f"{row} | {' '.join(d.literals())} | {name}=z{preset.order} | "
            f"{len(report.roots)} | {cartan} | {t} | {e}"
        )
    return lines


def cmd_table(args, out):
    lines = table_lines(args.budget)
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


# -- entry point -------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="nichols-lie",
        description="Root systems, coproducts and Lie algebras of rank-2 diagonal braidings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full Lie-algebra report")
    _add_input_flags(p)
    p.add_argument("--budget", type=int, default=WITNESS_BUDGET,
                   help="max words in a root-vector power when searching witnesses")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("roots", help="positive roots, Cartan roots and orbit")
    _add_input_flags(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("hilbert", help="Hilbert series of the Nichols algebra")
    _add_input_flags(p)
    p.add_argument("--truncate", type=int, default=10, help="maximal total degree")
    p.add_argument("--check-factorization", action="store_true",
                   help="verify H_L = H_B * H_A to the truncation degree")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("coproduct", help="coproduct of a power of a hyperletter")
    _add_input_flags(p)
    p.add_argument("--word", required=True, help="Lyndon word such as 112")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--left-degree", help="only the component with this left degree, a,b")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max number of words in the expanded power")
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("table", help="computed analogue of the 16-row table")
    p.add_argument("--budget", type=int, default=WITNESS_BUDGET)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (LiteralParseError, CartanUndefinedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RootSystemNotFiniteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FINITE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ConstraintError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except NicholsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
