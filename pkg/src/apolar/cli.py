"""Command-line surface.

Every subcommand prints a single JSON document with a top-level
``schema_version`` field, serialized with sorted keys so output is
byte-identical for identical inputs (and, for the sampling commands,
identical seeds).  Rationals print as ``p/q`` strings; there is no decimal
output anywhere.

Exit codes: 0 success, 1 usage or input error, 2 resource guard violation,
3 internal invariant breach (always a bug).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .complexes import (
    cell_count_vector,
    complex_of,
    divides,
    minimal_nonfaces,
    skeleton_count,
)
from .errors import GuardExceeded, InternalInvariantError
from .generators import extract_generators, verify_generators
from .locus import (
    DEFAULT_ENUMERATION_GUARD,
    DEFAULT_MATRIX_GUARD,
    enumerate_admissible_supports,
    projection_map_report,
    support_conditions,
)
from .parsing import (
    PolynomialSyntaxError,
    format_monomial,
    format_polynomial,
    parse_polynomial,
)
from .perazzo import (
    Degree2Census,
    build_full_perazzo,
    conjecture_sample_check,
    degree2_census,
    full_perazzo_hilbert,
    hilbert_h2,
    is_bihomogeneous,
)
from .polynomials import (
    DIFFERENTIATION,
    DUAL_BASIS,
    annihilator_basis,
    coefficient_one_poly,
    hilbert_vector,
    is_standard,
)
from .monomials import monomial_count


def _emit(payload: dict) -> None:
    print(json.dumps({"schema_version": 1, **payload}, indent=2, sort_keys=True))


def _convention(args):
    return DIFFERENTIATION if args.convention == "diff" else DUAL_BASIS


def _parse_poly_args(args):
    return parse_polynomial(args.poly, args.nvars, args.uvars)


def _cmd_hilbert(args) -> None:
    f = _parse_poly_args(args)
    conv = _convention(args)
    _emit(
        {
            "hilbert": list(hilbert_vector(f, conv)),
            "standard": is_standard(f, conv),
            "socle_degree": f.degree,
        }
    )


def _cmd_ann(args) -> None:
    f = _parse_poly_args(args)
    if not 1 <= args.degree <= f.degree:
        raise ValueError(f"--degree must be in 1..{f.degree}")
    conv = _convention(args)
    basis = annihilator_basis(f, args.degree, conv)
    _emit(
        {
            "degree": args.degree,
            "dimension": len(basis),
            "basis": [
                format_polynomial(op, args.uvars, operator=True) for op in basis
            ],
        }
    )


def _cmd_generators(args) -> None:
    f = _parse_poly_args(args)
    gens = extract_generators(f)
    _emit(
        {
            "powers": [
                format_monomial(
                    tuple(e if t == k - 1 else 0 for t in range(f.num_vars)),
                    args.uvars,
                    operator=True,
                )
                for k, e in sorted(gens.powers)
            ],
            "nonface_monomials": {
                str(j): [
                    format_monomial(m, args.uvars, operator=True)
                    for m in sorted(monomials)
                ]
                for j, monomials in sorted(gens.nonface_monomials.items())
            },
            "differences": {
                str(j): [
                    [
                        format_polynomial(p1, args.uvars, operator=True),
                        format_polynomial(p2, args.uvars, operator=True),
                    ]
                    for p1, p2 in pairs
                ]
                for j, pairs in sorted(gens.differences.items())
            },
            "verified": verify_generators(f, gens),
        }
    )


def _complex_poset(zeta, num_u_vars: int):
    cells = sorted(zeta.cells, key=lambda m: (sum(m), m))
    by_dimension: dict[str, list[str]] = {}
    for m in cells:
        by_dimension.setdefault(str(sum(m) - 1), []).append(
            format_monomial(m, num_u_vars)
        )
    edges = [
        [format_monomial(a, num_u_vars), format_monomial(b, num_u_vars)]
        for a in cells
        for b in cells
        if sum(b) == sum(a) + 1 and divides(a, b)
    ]
    return by_dimension, edges


def _cmd_cw(args) -> None:
    f = _parse_poly_args(args)
    zeta = complex_of(f)
    d = f.degree
    if args.export == "dot":
        by_dimension, edges = _complex_poset(zeta, args.uvars)
        lines = ["digraph cellcomplex {"]
        for dim in sorted(by_dimension, key=int):
            for label in by_dimension[dim]:
                lines.append(f'  "{label}" [dimension={dim}];')
        for child, parent in edges:
            lines.append(f'  "{child}" -> "{parent}";')
        lines.append("}")
        print("\n".join(lines))
        return
    payload = {
        "cell_counts": list(cell_count_vector(zeta, d)),
        "skeleton_counts": [skeleton_count(zeta, k) for k in range(d)],
        "minimal_nonfaces": {
            str(j): [
                format_monomial(m, args.uvars) for m in minimal_nonfaces(zeta, j)
            ]
            for j in range(1, d + 1)
        },
    }
    if args.export == "json":
        by_dimension, edges = _complex_poset(zeta, args.uvars)
        payload["cells_by_dimension"] = by_dimension
        payload["divisibility_edges"] = edges
    _emit(payload)


def _component_rows(components):
    for index, comp in enumerate(components):
        yield {
            "index": index,
            "support": [format_monomial(m) for m in comp.support],
            "derived_set": [format_monomial(m) for m in comp.derived_set],
            "dim_support": comp.dim_support,
            "dim_derived": comp.dim_derived,
        }


def _cmd_locus_enumerate(args) -> None:
    components = enumerate_admissible_supports(
        args.nvars, args.degree, max_basis=args.guard
    )
    rows = list(_component_rows(components))
    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(
            ["index", "support", "derived_set", "dim_support", "dim_derived"]
        )
        for row in rows:
            writer.writerow(
                [
                    row["index"],
                    " ".join(row["support"]),
                    " ".join(row["derived_set"]),
                    row["dim_support"],
                    row["dim_derived"],
                ]
            )
        sys.stdout.write(buffer.getvalue())
        return
    _emit({"nvars": args.nvars, "degree": args.degree, "components": rows})


def _cmd_locus_stcheck(args) -> None:
    f = _parse_poly_args(args)
    conditions = support_conditions(f.support(), f.num_vars)
    ones = coefficient_one_poly(f.num_vars, f.support())
    _emit(
        {
            "support": [format_monomial(m, args.uvars) for m in f.support()],
            "covers_all_variables": conditions.covers_all_variables,
            "unique_derivative_source": conditions.unique_derivative_source,
            "no_cross_collision": conditions.no_cross_collision,
            "all_conditions_hold": conditions.all_hold,
            "standard_linear_algebra": is_standard(f),
            "standard_linear_algebra_coefficient_one": is_standard(ones),
        }
    )


def _cmd_locus_maps(args) -> None:
    _emit(
        {
            "n": args.n,
            "d": args.d,
            "maps": projection_map_report(args.n, args.d, max_dim=args.max_dim),
        }
    )


def _cmd_perazzo_build(args) -> None:
    f = build_full_perazzo(args.n, args.d)
    p = monomial_count(args.n, args.d - 1)
    _emit(
        {
            "poly": format_polynomial(f, num_u_vars=args.n),
            "num_vars": f.num_vars,
            "x_vars": p,
            "u_vars": args.n,
            "bidegree": list(is_bihomogeneous(f, p)),
        }
    )


def _cmd_perazzo_hilbert(args) -> None:
    h = full_perazzo_hilbert(args.n, args.d, max_dim=args.max_dim)
    _emit(
        {
            "hilbert": list(h),
            "codimension": h[1],
            "socle_degree": args.d,
        }
    )


def _cmd_perazzo_census(args) -> None:
    f = build_full_perazzo(args.n, args.d)
    census: Degree2Census = degree2_census(f)
    _emit({**census.as_dict(), "h2": hilbert_h2(f)})


def _cmd_conjecture(args) -> None:
    start = time.monotonic()
    report = conjecture_sample_check(
        args.n, args.d, args.trials, args.seed, jobs=args.jobs
    )
    elapsed_ms = int((time.monotonic() - start) * 1000)
    if args.timing:
        # timing goes to stderr so the JSON report stays byte-stable
        print(f"runtime_ms: {elapsed_ms}", file=sys.stderr)
    _emit(report)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_poly_options(parser) -> None:
    parser.add_argument("--poly", required=True, help="polynomial text")
    parser.add_argument("--nvars", type=int, required=True, help="total variable count")
    parser.add_argument(
        "--uvars",
        type=int,
        default=0,
        help="size of the trailing u-variable block (default 0)",
    )


def _add_convention(parser) -> None:
    parser.add_argument(
        "--convention",
        choices=("dual", "diff"),
        default="dual",
        help="monomial pairing rule (default: dual basis)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="apolar",
        description="Exact apolarity computations for graded Artinian Gorenstein algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert vector and standardness")
    _add_poly_options(p)
    _add_convention(p)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("ann", help="canonical basis of one annihilator degree")
    _add_poly_options(p)
    _add_convention(p)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_ann)

    p = sub.add_parser(
        "generators", help="structured generators (coefficient-one input only)"
    )
    _add_poly_options(p)
    p.set_defaults(func=_cmd_generators)

    p = sub.add_parser("cw", help="cell complex counts and minimal non-faces")
    _add_poly_options(p)
    p.add_argument("--export", choices=("json", "dot"), default=None)
    p.set_defaults(func=_cmd_cw)

    locus = sub.add_parser("locus", help="standard locus analysis")
    locus_sub = locus.add_subparsers(dest="locus_command", required=True)

    p = locus_sub.add_parser("enumerate", help="admissible support catalog")
    p.add_argument("--nvars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument(
        "--guard",
        type=int,
        default=DEFAULT_ENUMERATION_GUARD,
        help=f"basis-size guard (default {DEFAULT_ENUMERATION_GUARD})",
    )
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_locus_enumerate)

    p = locus_sub.add_parser("stcheck", help="support admissibility verdicts")
    _add_poly_options(p)
    p.set_defaults(func=_cmd_locus_stcheck)

    p = locus_sub.add_parser(
        "maps", help="projection map kernel dimensions vs published formulas"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-dim", type=int, default=DEFAULT_MATRIX_GUARD)
    p.set_defaults(func=_cmd_locus_maps)

    perazzo = sub.add_parser("perazzo", help="full Perazzo polynomials")
    perazzo_sub = perazzo.add_subparsers(dest="perazzo_command", required=True)

    p = perazzo_sub.add_parser("build", help="print the full Perazzo polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_perazzo_build)

    p = perazzo_sub.add_parser("hilbert", help="full Perazzo Hilbert vector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-dim", type=int, default=DEFAULT_MATRIX_GUARD)
    p.set_defaults(func=_cmd_perazzo_hilbert)

    p = perazzo_sub.add_parser("census", help="degree-2 annihilator census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_perazzo_census)

    p = sub.add_parser(
        "conjecture", help="randomized Hilbert-vector minimality stress test"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="print runtime to stderr")
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except GuardExceeded as exc:
        print(f"guard violation: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 3
    except (PolynomialSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
