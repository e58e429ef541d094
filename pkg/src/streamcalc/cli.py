"""Command-line front end.

Exit codes: 0 success or YES, 1 NO (or a failed admissibility check), 2 parse
or usage error, 3 iteration cap exceeded or unmet precondition.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import to_text
from .decide import DEFAULT_CAP, Answer, PreconditionError, are_equal, find_identities, is_zero
from .genfun import NotLinearError, linear_gf, linear_ode_solution_prefix, render_rational_function
from .parsing import ParseError, parse_document
from .products import f_in_ideal_y3y4
from .streams import prefix, render
from .transition import Context, check_well_behaved

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


def _load(path):
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from None
    return parse_document(text)


def _print_verdict(verdict, names, verbose, out):
    if verbose:
        for step in verdict.trace:
            line = f"k={step.k}: p^({step.k}) = {to_text(step.derivative, names)}; output = {step.output}"
            if step.member is not None:
                ideal = "<{}>".format(", ".join(f"p^({i})" for i in range(step.k))) if step.k else "<>"
                line += f"; {'in' if step.member else 'not in'} {ideal}"
            print(line, file=out)
        if verdict.answer is Answer.YES and verdict.steps:
            combo = " + ".join(
                f"({to_text(q, names)})*p^({i})" for i, q in enumerate(verdict.quotients) if q
            ) or "0"
            print(f"certificate: p^({verdict.steps}) = {combo}", file=out)
    if verdict.answer is Answer.YES:
        print(f"YES at k={verdict.steps}", file=out)
        return EXIT_OK
    if verdict.answer is Answer.NO:
        k, value = verdict.witness
        print(f"NO at k={k}: output of p^({k}) is {value}", file=out)
        return EXIT_NO
    print(f"CAP_EXCEEDED after {verdict.steps} iterations", file=out)
    return EXIT_PRECONDITION


def cmd_terms(args, out):
    doc = _load(args.file)
    ctx = Context(doc.product, doc.sde)
    print(render(prefix(doc.parse(args.expr), args.n, ctx)), file=out)
    return EXIT_OK


def cmd_zero(args, out):
    doc = _load(args.file)
    ctx = Context(doc.product, doc.sde)
    verdict = is_zero(doc.parse(args.expr), ctx, args.cap)
    return _print_verdict(verdict, doc.ring_names, args.verbose, out)


def cmd_equal(args, out):
    doc = _load(args.file)
    ctx = Context(doc.product, doc.sde)
    verdict = are_equal(doc.parse(args.lhs), doc.parse(args.rhs), ctx, args.cap)
    return _print_verdict(verdict, doc.ring_names, args.verbose, out)


def cmd_identities(args, out):
    doc = _load(args.file)
    ctx = Context(doc.product, doc.sde)
    result = find_identities(ctx, args.degree, args.window, args.cap)
    for p in result.identities:
        print(to_text(p, doc.ring_names), file=out)
    for p in result.rejected:
        print(f"# unconfirmed: {to_text(p, doc.ring_names)}", file=out)
    if result.partial:
        print("# partial: iteration cap reached while confirming", file=out)
        return EXIT_PRECONDITION
    return EXIT_OK


def cmd_gf(args, out):
    doc = _load(args.file)
    for name, h in zip(doc.names, linear_gf(doc.sde)):
        print(f"{name}: {render_rational_function(h)}", file=out)
    return EXIT_OK


def cmd_ode(args, out):
    doc = _load(args.file)
    for name, series in zip(doc.names, linear_ode_solution_prefix(doc.sde, args.n)):
        print(f"{name}: {render(series)}", file=out)
    return EXIT_OK


def cmd_check(args, out):
    doc = _load(args.file)
    ctx = Context(doc.product, doc.sde)
    report = check_well_behaved(ctx, args.trials, args.degree, args.seed)
    in_ideal = f_in_ideal_y3y4(doc.product)
    print(f"product: {doc.product.name}", file=out)
    print(f"well-behaved: {'yes' if report.ok else 'no'} "
          f"({report.trials} trials, degree <= {report.max_degree}, seed {report.seed})", file=out)
    seen = set()
    for c in report.counterexamples:
        if c.condition in seen:
            continue
        seen.add(c.condition)
        ops = ", ".join(to_text(p, doc.ring_names) for p in c.operands)
        print(f"  counterexample ({c.condition}) on [{ops}]: "
              f"{to_text(c.lhs, doc.ring_names)} != {to_text(c.rhs, doc.ring_names)}", file=out)
    print(f"F in <y3, y4>: {'yes' if in_ideal else 'no'}", file=out)
    return EXIT_OK if report.ok and in_ideal else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="streamcalc", description="Exact stream calculus on polynomial SDE systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("terms", help="print a prefix of the stream of EXPR")
    p.add_argument("file")
    p.add_argument("n", type=int)
    p.add_argument("expr")
    p.set_defaults(func=cmd_terms)

    for name, func, nexpr in (("zero", cmd_zero, 1), ("equal", cmd_equal, 2)):
        p = sub.add_parser(name, help="decide stream equality to zero" if nexpr == 1 else "decide equality of two streams")
        p.add_argument("file")
        if nexpr == 1:
            p.add_argument("expr")
        else:
            p.add_argument("lhs")
            p.add_argument("rhs")
        p.add_argument("-v", "--verbose", action="store_true", help="print the derivative chain")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.set_defaults(func=func)

    p = sub.add_parser("identities", help="find polynomials denoting the zero stream")
    p.add_argument("file")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("-w", "--window", type=int, default=2)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("gf", help="generating functions of a linear system")
    p.add_argument("file")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("ode", help="Taylor coefficients of the solution of a linear system")
    p.add_argument("file")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_ode)

    p = sub.add_parser("check", help="admissibility report for the product")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, NotLinearError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
