"""Command-line entry point.

Every subcommand writes CSV to stdout (or ``--out FILE``). Exit status is
0 on success, 2 for bad input, 3 for a domain error and 4 when an internal
invariant fails.
"""

from __future__ import annotations

import argparse
import sys

from .bohr import critical_charge, critical_charge_numeric
from .closed_forms import P_DEFAULT, MethodId
from .core import DEFAULT_CONSTANTS, HeLikeError, InvalidInputError, NoSolutionError
from .corrections import corrected_energy
from .fit import fit_global_p, solve_p_for_ion
from .reference import bundled_reference, load_reference
from .report import figure_rows, rows_to_csv, scan_rows, table_rows


def _z_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=None, help="fine-structure constant override")
    common.add_argument("--hartree-ev", type=float, default=None, help="eV per Hartree override")
    common.add_argument("--out", default=None, help="write CSV here instead of stdout")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("--data", default=None, help="reference CSV (default: bundled NIST-derived set)")

    parser = argparse.ArgumentParser(prog="helike", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", parents=[common], help="energy breakdown for one ion")
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--method", required=True, choices=[m.value for m in MethodId])
    p.add_argument("--p", type=float, default=P_DEFAULT)
    p.add_argument("--no-corrections", action="store_true")

    p = sub.add_parser("table", parents=[common, data], help="experiment vs corrected formulas")
    p.add_argument("--p", type=float, default=P_DEFAULT)

    p = sub.add_parser("figure", parents=[common, data], help="relative differences (E_e - E_t)/E_e")
    p.add_argument("--p", type=float, default=P_DEFAULT)

    p = sub.add_parser("fit", parents=[common, data], help="least-squares interpolation exponent")
    p.add_argument("--no-corrections", action="store_true")
    p.add_argument("--exclude-z", type=_z_list, default=[], metavar="LIST")
    p.add_argument("--weighting", choices=["relative", "absolute"], default="relative")

    p = sub.add_parser("scan", parents=[common], help="sample the Bohr energy over a")
    p.add_argument("--z", type=float, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--a-min", type=float, required=True)
    p.add_argument("--a-max", type=float, required=True)
    p.add_argument("--count", type=int, required=True)

    sub.add_parser("threshold", parents=[common], help="critical nuclear charge, closed form and numeric")
    return parser


def _references(args, constants):
    if args.data:
        return load_reference(args.data, constants)
    return bundled_reference(constants)


def _energy(args, constants) -> str:
    b = corrected_energy(args.method, args.z, args.p, constants, corrections=not args.no_corrections)
    return rows_to_csv([b], ["method", "z", "base", "relativistic", "qed", "total"])


def _fit(args, constants) -> str:
    corrections = not args.no_corrections
    refs = _references(args, constants).without(args.exclude_z)
    result = fit_global_p(refs, corrections, args.weighting, constants)
    lines = [
        f"# p={result.p:.12g}",
        f"# objective={result.objective:.12g}",
        f"# evaluations={result.evaluations}",
    ]
    lines += [f"# excluded z={z}: {why}" for z, why in result.excluded]
    lines += ["z,residual,p_ion"]
    for z, resid in result.residuals:
        try:
            p_ion = f"{solve_p_for_ion(refs.by_z(z), corrections, constants):.12g}"
        except NoSolutionError:
            p_ion = ""
        lines.append(f"{z},{resid:.12g},{p_ion}")
    return "\n".join(lines) + "\n"


def _threshold(args, constants) -> str:
    return f"method,z0\nclosed_form,{critical_charge():.12g}\nnumeric,{critical_charge_numeric():.12g}\n"


def run(args) -> str:
    constants = DEFAULT_CONSTANTS.with_overrides(args.alpha, args.hartree_ev)
    if args.command == "energy":
        return _energy(args, constants)
    if args.command == "table":
        return rows_to_csv(table_rows(_references(args, constants), args.p, constants))
    if args.command == "figure":
        return rows_to_csv(figure_rows(_references(args, constants), args.p, constants))
    if args.command == "fit":
        return _fit(args, constants)
    if args.command == "scan":
        return rows_to_csv(scan_rows(args.z, args.n, args.a_min, args.a_max, args.count))
    return _threshold(args, constants)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = run(args)
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8", newline="") as fh:
                    fh.write(text)
            except OSError as exc:
                raise InvalidInputError(f"cannot write {args.out!r}: {exc.strerror}") from None
        else:
            sys.stdout.write(text)
    except HeLikeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
