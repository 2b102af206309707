"""Command-line interface.

Data goes to stdout (or ``--out``), diagnostics to stderr.  Exit codes:
0 on success, 1 when ``classify`` finds no preservation or ``verify``
has a failing suite, 2 on any input or argument error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import classify_preservation, cnot_report, werner
from .channels import cnot_channel, probability
from .errors import InvalidArgument
from .fuzzy import cnot_polynomial
from .jsonio import dumps_matrix, load_matrix
from .linalg import DEFAULT_TOL
from .states import is_factorizable, require_density
from .verify import RunConfig, format_report, run_verification


def surface_rows(steps: int) -> list[tuple[float, float, float]]:
    """x-major (x, y, p) samples of the connective polynomial on [0,1]^2."""
    if steps < 2:
        raise InvalidArgument(f"steps must be >= 2, got {steps}")
    pts = [i / steps for i in range(steps + 1)]
    return [(x, y, cnot_polynomial(x, y)) for x in pts for y in pts]


def werner_sweep_rows(steps: int) -> list[tuple[float, float, float, float]]:
    """(alpha, p_total, p_fuzzy, incidence) along the uniform grid of [0,1]."""
    if steps < 1:
        raise InvalidArgument(f"steps must be >= 1, got {steps}")
    rows = []
    for i in range(steps + 1):
        alpha = i / steps
        rep = cnot_report(werner(alpha))
        rows.append((alpha, rep.p_total, rep.p_fuzzy, rep.incidence))
    return rows


def _csv(header: str, rows) -> str:
    lines = [header]
    for row in rows:
        lines.append(",".join(format(v, ".12g") for v in row))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_prob(args) -> int:
    rho = require_density(load_matrix(args.state), name="state")
    print(f"{probability(rho):.12f}")
    return 0


def _cmd_decompose(args) -> int:
    rho = require_density(load_matrix(args.state), tol=args.tol, name="state")
    report = is_factorizable(rho, args.m, args.k, tol=args.tol)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.out)
    return 0


def _cmd_apply_cnot(args) -> int:
    rho = require_density(load_matrix(args.state), name="state")
    _emit(dumps_matrix(cnot_channel().apply(rho)) + "\n", args.out)
    return 0


def _cmd_surface(args) -> int:
    rows = surface_rows(args.steps)
    _emit(_csv("x,y,p", rows), args.out)
    if args.plot:
        from .plotting import save_surface_figure

        save_surface_figure(rows, args.plot)
    return 0


def _cmd_werner_sweep(args) -> int:
    rows = werner_sweep_rows(args.steps)
    _emit(_csv("alpha,p_total,p_fuzzy,incidence", rows), args.out)
    if args.plot:
        from .plotting import save_werner_sweep_figure

        save_werner_sweep_figure(rows, args.plot)
    return 0


def _cmd_classify(args) -> int:
    rho = require_density(load_matrix(args.control), tol=args.tol, name="control")
    sigma = require_density(load_matrix(args.target), tol=args.tol, name="target")
    verdict = classify_preservation(rho, sigma, tol=args.tol)
    print(json.dumps(verdict.to_dict(), indent=2))
    return 0 if verdict.preserved else 1


def _cmd_verify(args) -> int:
    config = RunConfig(
        seed=args.seed, samples=args.samples, tolerance=args.tol, output_path=args.out
    )
    results = run_verification(config)
    _emit(format_report(results), args.out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cnotlab",
        description="Mixed-state analysis of the controlled-NOT gate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prob", help="truth probability tr(P1 rho) of a state file")
    p.add_argument("state", help="matrix JSON file holding a density operator")
    p.set_defaults(func=_cmd_prob)

    p = sub.add_parser("decompose", help="split a state into marginals plus holistic term")
    p.add_argument("state", help="matrix JSON file, side m*k")
    p.add_argument("--m", type=int, default=2, help="dimension of the first factor")
    p.add_argument("--k", type=int, default=2, help="dimension of the second factor")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", help="write the report JSON here instead of stdout")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("apply-cnot", help="apply the gate channel to a 4x4 state")
    p.add_argument("state", help="matrix JSON file holding a 4x4 density operator")
    p.add_argument("--out", help="write the output matrix JSON here instead of stdout")
    p.set_defaults(func=_cmd_apply_cnot)

    p = sub.add_parser("surface", help="CSV of the probability surface on [0,1]^2")
    p.add_argument("--steps", type=int, default=100, help="grid subdivisions per axis")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.add_argument("--plot", help="also render a heatmap to this image file")
    p.set_defaults(func=_cmd_surface)

    p = sub.add_parser("werner-sweep", help="CSV of gate quantities along the Werner family")
    p.add_argument("--steps", type=int, default=100, help="grid subdivisions of [0,1]")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.add_argument("--plot", help="also render a line plot to this image file")
    p.set_defaults(func=_cmd_werner_sweep)

    p = sub.add_parser("classify", help="does the gate keep a product input factorizable?")
    p.add_argument("control", help="matrix JSON file, 2x2 control state")
    p.add_argument("target", help="matrix JSON file, 2x2 target state")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run the seeded identity-verification campaigns")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
