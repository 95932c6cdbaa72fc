"""Command-line front end.

Subcommands: verify, kappa, t-range, bound, sweep, threshold, gen-state,
verify-state.  Exit codes: 0 success (including an undetected verdict
from a valid run), 1 usage error, 2 numerical failure or invalid data.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .basis import standard_basis
from .config import TOL
from .criteria import build_correlation_matrix, concurrence_lower_bound
from .mums import (
    MumFamily,
    build_f_blocks,
    build_mums,
    kappa_of_t,
    optimal_kappa,
    t_interval,
    two_design_residual,
    verify_mum_relations,
)
from .states import (
    StateFileError,
    horodecki_noisy,
    load_state,
    max_entangled,
    mix_with_white_noise,
    random_density,
    save_state,
    tiles_noisy,
)
from .threshold import find_threshold

CSV_HEADER = "var,traceNormP,traceNormF,kappa,threshold,bound_literal,bound_derived,verdict"

_SWEEP_VARS = {
    "tiles": ("t", "p"),
    "horodecki": ("t", "q", "upsilon"),
    "file": ("t", "p", "q"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise UsageError(message)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _infer_d(dim: int) -> int:
    d = math.isqrt(dim)
    if d * d != dim or d < 2:
        raise UsageError(
            f"state dimension {dim} is not d*d for a bipartite d x d system"
        )
    return d


def _family_for(d: int, t: float) -> MumFamily:
    try:
        return build_mums(standard_basis(d), t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _make_state(
    family: str,
    file: str | None = None,
    p: float | None = None,
    q: float | None = None,
    upsilon: float | None = None,
) -> np.ndarray:
    if family == "tiles":
        return tiles_noisy(1.0 if p is None else p)
    if family == "horodecki":
        if upsilon is None:
            raise UsageError("--upsilon is required for the horodecki family")
        return horodecki_noisy(upsilon, 1.0 if q is None else q)
    if family == "file":
        if file is None:
            raise UsageError("--file is required when --state file is selected")
        rho = load_state(file)
        if p is not None and q is not None:
            raise UsageError("give at most one of --p/--q as the mixing weight")
        weight = p if p is not None else q
        if weight is not None:
            rho = mix_with_white_noise(rho, weight)
        return rho
    raise UsageError(f"unknown state family {family!r}")


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional parameter sweep over a state family."""

    variable: str                   # t | p | q | upsilon
    start: float
    stop: float
    steps: int
    state_family: str               # tiles | horodecki | file
    fixed: dict = field(default_factory=dict)
    variant: str = "derived"
    file: str | None = None

    def validate(self) -> None:
        if self.state_family not in _SWEEP_VARS:
            raise UsageError(f"unknown state family {self.state_family!r}")
        if self.variable not in _SWEEP_VARS[self.state_family]:
            raise UsageError(
                f"variable {self.variable!r} is not sweepable for the "
                f"{self.state_family} family (allowed: "
                f"{', '.join(_SWEEP_VARS[self.state_family])})"
            )
        if not self.start < self.stop:
            raise UsageError("sweep requires start < stop")
        if self.steps < 2:
            raise UsageError("sweep requires at least 2 steps")
        if self.variable != "t" and self.fixed.get("t") is None:
            raise UsageError("--t is required when sweeping a mixing parameter")
        if self.variant not in ("literal", "derived"):
            raise UsageError("variant must be 'literal' or 'derived'")


@dataclass(frozen=True)
class ThresholdQuery:
    """Bisection query for the detection boundary of a mixing parameter."""

    state_family: str
    t: float
    search_variable: str            # p | q
    criterion: str = "separability"  # separability | bound-positive
    tolerance: float = 1e-6
    fixed: dict = field(default_factory=dict)
    variant: str = "derived"
    file: str | None = None

    def validate(self) -> None:
        if self.tolerance <= 0:
            raise UsageError("threshold tolerance must be positive")
        if self.search_variable not in ("p", "q"):
            raise UsageError("search variable must be 'p' or 'q'")
        if self.criterion not in ("separability", "bound-positive"):
            raise UsageError("criterion must be 'separability' or 'bound-positive'")


def run_sweep(spec: SweepSpec) -> list[dict]:
    """Evaluate the sweep grid; one result dict per grid point, ascending."""
    spec.validate()
    grid = np.linspace(spec.start, spec.stop, spec.steps)
    fixed = dict(spec.fixed)

    def state_at(params: dict) -> np.ndarray:
        return _make_state(
            spec.state_family,
            file=spec.file,
            p=params.get("p"),
            q=params.get("q"),
            upsilon=params.get("upsilon"),
        )

    if spec.variable == "t":
        rho = state_at(fixed)
        d = _infer_d(rho.shape[0])
        rng = t_interval(build_f_blocks(standard_basis(d)), d)
        bad = [
            t
            for t in grid
            if kappa_of_t(d, float(t)) * d <= 1.0 or not rng.contains(float(t))
        ]
        if bad:
            raise UsageError(
                f"sweep contains inadmissible t values (first: {bad[0]:.6g}); "
                f"the valid interval is [{rng.lower:.6f}, {rng.upper:.6f}], t nonzero"
            )
        points = [(float(t), _family_for(d, float(t)), rho) for t in grid]
    else:
        probe = state_at({**fixed, spec.variable: float(grid[0])})
        fam = _family_for(_infer_d(probe.shape[0]), fixed["t"])
        points = [
            (float(v), fam, state_at({**fixed, spec.variable: float(v)}))
            for v in grid
        ]

    rows = []
    for value, fam, rho in points:
        report = concurrence_lower_bound(rho, fam, variant=spec.variant)
        rows.append(
            {
                "var": value,
                "traceNormP": report.trace_norm_p,
                "traceNormF": report.trace_norm_f,
                "kappa": report.kappa,
                "threshold": report.separability_threshold,
                "bound_literal": report.bound_literal,
                "bound_derived": report.bound_derived,
                "verdict": report.verdict,
            }
        )
    return rows


def render_csv(rows: list[dict]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(",".join(_fmt(row[key]) for key in CSV_HEADER.split(",")))
    return "\n".join(lines) + "\n"


def run_threshold(query: ThresholdQuery):
    """Locate the detection boundary; returns (result, family)."""
    query.validate()
    if query.t == 0.0:
        raise UsageError("t must be admissible and nonzero")
    fixed = dict(query.fixed)
    probe = _make_state(
        query.state_family,
        file=query.file,
        p=fixed.get("p"),
        q=fixed.get("q"),
        upsilon=fixed.get("upsilon"),
    )
    d = _infer_d(probe.shape[0])
    fam = _family_for(d, query.t)
    threshold = 1.0 + fam.kappa

    def margin(w: float) -> float:
        rho = _make_state(
            query.state_family,
            file=query.file,
            p=w if query.search_variable == "p" else fixed.get("p"),
            q=w if query.search_variable == "q" else fixed.get("q"),
            upsilon=fixed.get("upsilon"),
        )
        excess = (
            build_correlation_matrix(rho, fam, convention="P").trace_norm - threshold
        )
        if query.criterion == "separability":
            return excess
        if query.variant == "literal":
            coeff = np.sqrt(2.0 * (d - 1.0) / (d * (fam.kappa * d - 1.0)))
        else:
            coeff = np.sqrt(2.0 * (d - 1.0) / d) / (fam.kappa * d - 1.0)
        return float(coeff * excess)

    return find_threshold(margin, tol=query.tolerance), fam


def cmd_verify(args) -> int:
    basis = standard_basis(args.d)
    rng = t_interval(build_f_blocks(basis), args.d)
    if args.t == 0.0 or not rng.contains(args.t):
        print(
            f"t = {_fmt(args.t)} is not admissible; the valid interval is "
            f"[{rng.lower:.6f}, {rng.upper:.6f}] with t nonzero",
            file=sys.stderr,
        )
        return 1
    fam = build_mums(basis, args.t)
    report = verify_mum_relations(fam)
    residual = two_design_residual(fam)
    print(f"d={fam.d}")
    print(f"t={_fmt(fam.t)}")
    print(f"kappa={_fmt(fam.kappa)}")
    print(f"trace_one_dev={report.trace_one:.3e}")
    print(f"cross_basis_dev={report.cross_basis:.3e}")
    print(f"within_basis_dev={report.within_basis:.3e}")
    print(f"completeness_dev={report.completeness:.3e}")
    print(f"two_design_residual={residual:.3e}")
    ok = report.passed and residual < TOL.mum_relations
    print(f"status={'pass' if ok else 'fail'}")
    return 0 if ok else 2


def cmd_kappa(args) -> int:
    rng = t_interval(build_f_blocks(standard_basis(args.d)), args.d)
    print(f"d={args.d}")
    print(f"t={_fmt(args.t)}")
    print(f"kappa={_fmt(kappa_of_t(args.d, args.t))}")
    print(f"kappa_optimal={_fmt(optimal_kappa(args.d))}")
    admissible = args.t != 0.0 and rng.contains(args.t)
    print(f"t_admissible={'yes' if admissible else 'no'}")
    print(f"t_interval=[{_fmt(rng.lower)}, {_fmt(rng.upper)}]")
    return 0


def cmd_t_range(args) -> int:
    rng = t_interval(build_f_blocks(standard_basis(args.d)), args.d)
    print(f"d={args.d}")
    print(f"t_lower={_fmt(rng.lower)}")
    print(f"t_upper={_fmt(rng.upper)}")
    print(f"kappa_at_lower={_fmt(kappa_of_t(args.d, rng.lower))}")
    print(f"kappa_at_upper={_fmt(kappa_of_t(args.d, rng.upper))}")
    return 0


def cmd_bound(args) -> int:
    rho = _make_state(
        args.state, file=args.file, p=args.p, q=args.q, upsilon=args.upsilon
    )
    d = _infer_d(rho.shape[0])
    fam = _family_for(d, args.t)
    report = concurrence_lower_bound(rho, fam, variant=args.variant, tol=args.tol)
    print(f"state={args.state}")
    for name, value in (("p", args.p), ("q", args.q), ("upsilon", args.upsilon)):
        if value is not None:
            print(f"{name}={_fmt(value)}")
    print(f"d={report.d}")
    print(f"t={_fmt(report.t)}")
    print(f"kappa={_fmt(report.kappa)}")
    print(f"threshold={_fmt(report.separability_threshold)}")
    print(f"traceNormP={_fmt(report.trace_norm_p)}")
    print(f"traceNormF={_fmt(report.trace_norm_f)}")
    print(f"bound_literal={_fmt(report.bound_literal)}")
    print(f"bound_derived={_fmt(report.bound_derived)}")
    print(f"bound={_fmt(report.bound)}")
    print(f"schmidt_number_lb={_fmt(report.schmidt_number_lb)}")
    print(f"verdict={report.verdict}")
    if args.out:
        Path(args.out).write_text(json.dumps(report.as_dict(), indent=1) + "\n")
    return 0


def cmd_sweep(args) -> int:
    fixed = {
        key: value
        for key, value in (("t", args.t), ("p", args.p), ("q", args.q), ("upsilon", args.upsilon))
        if value is not None and key != args.var
    }
    spec = SweepSpec(
        variable=args.var,
        start=args.start,
        stop=args.stop,
        steps=args.steps,
        state_family=args.state,
        fixed=fixed,
        variant=args.variant,
        file=args.file,
    )
    rows = run_sweep(spec)
    Path(args.out).write_text(render_csv(rows))
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_threshold(args) -> int:
    search = args.search_var or ("q" if args.state == "horodecki" else "p")
    fixed = {
        key: value
        for key, value in (("p", args.p), ("q", args.q), ("upsilon", args.upsilon))
        if value is not None and key != search
    }
    query = ThresholdQuery(
        state_family=args.state,
        t=args.t,
        search_variable=search,
        criterion=args.criterion,
        tolerance=args.tol,
        fixed=fixed,
        variant=args.variant,
        file=args.file,
    )
    result, fam = run_threshold(query)
    print(f"criterion={query.criterion}")
    print(f"search_variable={search}")
    print(f"kappa={_fmt(fam.kappa)}")
    if not result.found:
        if result.all_positive:
            print("detected on all of [0, 1]")
        else:
            print("undetected on [0, 1]")
        return 0
    lo, hi = result.bracket
    mlo, mhi = result.margins
    print(f"threshold={_fmt(result.threshold)}")
    print(f"bracket_lower={_fmt(lo)}")
    print(f"margin_at_lower={mlo:.6e}")
    print(f"bracket_upper={_fmt(hi)}")
    print(f"margin_at_upper={mhi:.6e}")
    return 0


def cmd_gen_state(args) -> int:
    if args.state == "tiles":
        rho = tiles_noisy(1.0 if args.p is None else args.p)
    elif args.state == "horodecki":
        if args.upsilon is None:
            raise UsageError("--upsilon is required for the horodecki family")
        rho = horodecki_noisy(args.upsilon, 1.0 if args.q is None else args.q)
    elif args.state == "max-entangled":
        if args.d is None:
            raise UsageError("--d is required for the max-entangled family")
        psi = max_entangled(args.d)
        rho = np.outer(psi, psi.conj())
    elif args.state == "random":
        if args.d is None:
            raise UsageError("--d is required for the random family")
        rho = random_density(args.d * args.d, seed=args.seed)
    else:
        raise UsageError(f"unknown state family {args.state!r}")
    save_state(rho, args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_verify_state(args) -> int:
    try:
        rho = load_state(args.file)
    except StateFileError as exc:
        print(f"file={args.file}")
        print(f"violation: {exc}")
        print("status=invalid")
        return 2
    print(f"file={args.file}")
    print(f"dim={rho.shape[0]}")
    for name in ("hermitian", "unit trace", "positive semidefinite"):
        print(f"invariant {name}: ok")
    print("status=valid")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(
        prog="mumbounds",
        description=(
            "Build mutually unbiased measurement families and evaluate "
            "trace-norm entanglement criteria on bipartite states."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state_flags(p, families=("tiles", "horodecki", "file")):
        p.add_argument("--state", choices=families, required=True)
        p.add_argument("--file", help="density-matrix file for --state file")
        p.add_argument("--p", type=float, help="white-noise mixing weight (tiles)")
        p.add_argument("--q", type=float, help="white-noise mixing weight (horodecki)")
        p.add_argument("--upsilon", type=float, help="Horodecki state parameter")

    p = sub.add_parser("verify", help="check the MUM defining relations at (d, t)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kappa", help="sharpness parameter at (d, t)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("t-range", help="admissible t interval for dimension d")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_t_range)

    p = sub.add_parser("bound", help="concurrence bounds and verdict for one state")
    add_state_flags(p)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--variant", choices=("literal", "derived"), default="derived")
    p.add_argument("--tol", type=float, default=TOL.verdict)
    p.add_argument("--out", help="optional JSON report path")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="sweep one parameter and write CSV")
    add_state_flags(p)
    p.add_argument("--var", choices=("t", "p", "q", "upsilon"), required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--t", type=float, help="fixed t when sweeping a mixing parameter")
    p.add_argument("--variant", choices=("literal", "derived"), default="derived")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("threshold", help="bisect the detection boundary in p or q")
    add_state_flags(p)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--search-var", choices=("p", "q"), dest="search_var")
    p.add_argument(
        "--criterion", choices=("separability", "bound-positive"), default="separability"
    )
    p.add_argument("--variant", choices=("literal", "derived"), default="derived")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("gen-state", help="write a built-in state to a file")
    p.add_argument(
        "--state",
        choices=("tiles", "horodecki", "max-entangled", "random"),
        required=True,
    )
    p.add_argument("--p", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--upsilon", type=float)
    p.add_argument("--d", type=int, help="subsystem dimension for max-entangled/random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_state)

    p = sub.add_parser("verify-state", help="validate a density-matrix file")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_verify_state)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except StateFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except np.linalg.LinAlgError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
