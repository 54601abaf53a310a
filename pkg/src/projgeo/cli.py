"""Command line front-end.

One executable with subcommands; structured data travels as JSON files
(shapes documented in :mod:`projgeo.jsonio`), point streams leave as
CSV on stdout.  All numeric output is printed with 17 significant
digits, and every command is deterministic for fixed inputs and seed.

Exit codes: 0 success, 1 property-suite failure, 2 unparsable input or
bad arguments, 3 dimension/field/kind mismatch, 4 ill-conditioned input.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from projgeo import grassmann, hopf_fibration, hopf_manifold, jsonio, projective, suites
from projgeo.errors import (
    DegenerateProjection,
    DimensionMismatch,
    FieldMismatch,
    IllConditioned,
    InvalidRange,
    NotSquare,
    ProjGeoError,
    SamePoint,
    ShapeMismatch,
    SingularCoefficients,
    ZeroVector,
)
from projgeo.hopf_fibration import ExtendedComplex
from projgeo.hopf_manifold import HopfPoint, ScaleGroup
from projgeo.numerics import COMPLEX, REAL, DEFAULT_TOLERANCE, Tolerance, as_vector
from projgeo.projective import ProjMap, ProjPoint

ENV_EPS = "PROJGEO_EPS"


@dataclass(frozen=True)
class RunConfig:
    """Resolved numeric configuration of one invocation."""

    seed: int = 0
    eps_abs: float = DEFAULT_TOLERANCE.eps_abs
    cond_max: float = DEFAULT_TOLERANCE.cond_max
    lam: complex | float = 2.0
    trials: int = 1

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        Tolerance(self.eps_abs, self.cond_max)
        ScaleGroup(self.lam)

    @property
    def tolerance(self) -> Tolerance:
        return Tolerance(self.eps_abs, self.cond_max)


def _parse_scalar(text: str):
    """Parse a real or complex scalar; accepts both 2i and 2j spellings."""
    try:
        return float(text)
    except ValueError:
        return complex(text.replace("i", "j").replace(" ", ""))


def _tolerance(args) -> Tolerance:
    eps = args.eps
    if eps is None:
        env = os.environ.get(ENV_EPS)
        eps = float(env) if env else DEFAULT_TOLERANCE.eps_abs
    cond = args.cond_max if args.cond_max is not None else DEFAULT_TOLERANCE.cond_max
    return Tolerance(eps, cond)


def _load(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError("top-level JSON value must be an object")
    return doc


def _emit(obj) -> None:
    sys.stdout.write(jsonio.dumps(jsonio.encode(obj)) + "\n")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


# --- subcommands ----------------------------------------------------------


def _cmd_apply(args) -> int:
    tol = _tolerance(args)
    mapping = jsonio.decode(_load(args.map_file), tol)
    operand = jsonio.decode(_load(args.point_file), tol)

    if isinstance(mapping, ProjMap) and isinstance(operand, ProjPoint):
        result = projective.apply_map(mapping, operand, tol)
        if args.cp1:
            result = hopf_fibration.cp1_affine(result, tol)
        _emit(result)
        return 0
    if isinstance(mapping, ProjMap) and isinstance(operand, ExtendedComplex):
        moved = projective.apply_map(
            mapping, hopf_fibration.cp1_from_affine(operand, tol), tol
        )
        _emit(hopf_fibration.cp1_affine(moved, tol))
        return 0
    if isinstance(mapping, np.ndarray) and isinstance(operand, grassmann.Subspace):
        _emit(grassmann.apply_gl(mapping, operand, tol))
        return 0
    if isinstance(mapping, np.ndarray) and isinstance(operand, HopfPoint):
        _emit(hopf_manifold.induced_linear(mapping, operand, tol))
        return 0
    raise DimensionMismatch(
        f"cannot apply a {type(mapping).__name__} to a {type(operand).__name__}; "
        "use a proj_map on proj_point/extended_complex, or a matrix on "
        "subspace/hopf_point"
    )


def _cmd_fiber(args) -> int:
    tol = _tolerance(args)
    p = jsonio.decode(_load(args.point_file), tol)
    if not isinstance(p, ProjPoint):
        raise DimensionMismatch("fiber expects a proj_point document")
    out = sys.stdout

    if p.field == REAL:
        if args.stereo:
            raise FieldMismatch("--stereo needs a complex point of CP^1")
        out.write("t," + ",".join(f"x{i + 1}" for i in range(p.n + 1)) + "\n")
        for t, point in enumerate(hopf_fibration.real_fiber(p)):
            out.write(",".join([str(t)] + [_fmt(c) for c in point.x]) + "\n")
        return 0

    if args.stereo and p.n != 1:
        raise DimensionMismatch("--stereo is defined for CP^1 points only")
    samples = hopf_fibration.complex_fiber_sample(p, args.samples)
    stereo = (
        hopf_fibration.fiber_stereo_samples(p, args.samples) if args.stereo else None
    )
    header = ["t"]
    for i in range(p.n + 1):
        header += [f"x{2 * i + 1}", f"x{2 * i + 2}"]
    if stereo is not None:
        header += ["X", "Y", "Z"]
    out.write(",".join(header) + "\n")
    for t, point in enumerate(samples):
        row = [str(t)]
        for z in point.x:
            row += [_fmt(z.real), _fmt(z.imag)]
        if stereo is not None:
            row += [_fmt(c) for c in stereo[t]]
        out.write(",".join(row) + "\n")
    return 0


def _cmd_chart(args) -> int:
    tol = _tolerance(args)
    if args.action == "embed":
        w = jsonio.decode(_load(args.input), tol)
        if not isinstance(w, np.ndarray) or w.ndim != 1:
            raise DimensionMismatch("embed expects a vector document")
        if args.field:
            w = as_vector(w, args.field)
        chart = projective.AffineChart(w.shape[0], args.j)
        _emit(projective.chart_embed(chart, w, tol))
        return 0
    if args.action == "extract":
        p = jsonio.decode(_load(args.input), tol)
        if not isinstance(p, ProjPoint):
            raise DimensionMismatch("extract expects a proj_point document")
        chart = projective.AffineChart(p.n, args.j)
        coords = projective.chart_extract(chart, p, tol)
        if coords is None:
            sys.stdout.write("null\n")
        else:
            _emit(coords)
        return 0
    # transition
    w = jsonio.decode(_load(args.input), tol)
    if not isinstance(w, np.ndarray) or w.ndim != 1:
        raise DimensionMismatch("transition expects a vector document")
    if args.field:
        w = as_vector(w, args.field)
    c1 = projective.AffineChart(w.shape[0], args.j1)
    c2 = projective.AffineChart(w.shape[0], args.j2)
    coords = projective.chart_transition(c1, c2, w, tol)
    if coords is None:
        sys.stdout.write("null\n")
    else:
        _emit(coords)
    return 0


def _cmd_grassmann(args) -> int:
    tol = _tolerance(args)
    if args.action in ("complement", "annihilator"):
        s = jsonio.decode(_load(args.subspace), tol)
        if not isinstance(s, grassmann.Subspace):
            raise DimensionMismatch(f"{args.action} expects a subspace document")
        fn = (
            grassmann.orthogonal_complement
            if args.action == "complement"
            else grassmann.annihilator
        )
        _emit(fn(s, tol))
        return 0

    base = jsonio.decode(_load(args.base), tol)
    if not isinstance(base, grassmann.Subspace):
        raise DimensionMismatch("--base must be a subspace document")
    complement = None
    if args.complement:
        complement = jsonio.decode(_load(args.complement), tol)
        if not isinstance(complement, grassmann.Subspace):
            raise DimensionMismatch("--complement must be a subspace document")
    chart = grassmann.graph_chart(base, complement, tol)

    if args.action == "graph":
        coeffs = jsonio.decode(_load(args.matrix), tol)
        if not isinstance(coeffs, np.ndarray) or coeffs.ndim != 2:
            raise DimensionMismatch("--matrix must be a matrix document")
        _emit(grassmann.graph_subspace(chart, coeffs, tol))
        return 0
    # coords
    x = jsonio.decode(_load(args.subspace), tol)
    if not isinstance(x, grassmann.Subspace):
        raise DimensionMismatch("coords expects a subspace document")
    coords = grassmann.chart_coords(chart, x, tol)
    if coords is None:
        sys.stdout.write("null\n")
    else:
        _emit(coords)
    return 0


def _cmd_hopf(args) -> int:
    tol = _tolerance(args)
    group = ScaleGroup(_parse_scalar(args.lam))
    if args.action == "project":
        v = jsonio.decode(_load(args.vector), tol)
        if not isinstance(v, np.ndarray) or v.ndim != 1:
            raise DimensionMismatch("project expects a vector document")
        if args.field:
            v = as_vector(v, args.field)
        _emit(hopf_manifold.quotient_project(v, group, tol))
        return 0
    if args.action == "equal":
        v = jsonio.decode(_load(args.vector), tol)
        w = jsonio.decode(_load(args.other), tol)
        for arr in (v, w):
            if not isinstance(arr, np.ndarray) or arr.ndim != 1:
                raise DimensionMismatch("equal expects two vector documents")
        verdict = hopf_manifold.hopf_points_equal(v, w, group, tol)
        sys.stdout.write(("true" if verdict else "false") + "\n")
        return 0
    # to-projective
    h = jsonio.decode(_load(args.vector), tol)
    if not isinstance(h, HopfPoint):
        raise DimensionMismatch("to-projective expects a hopf_point document")
    _emit(hopf_manifold.to_projective(h, tol))
    return 0


def _cmd_link(args) -> int:
    tol = _tolerance(args)
    p = jsonio.decode(_load(args.point_file), tol)
    q = jsonio.decode(_load(args.other_file), tol)
    if not (isinstance(p, ProjPoint) and isinstance(q, ProjPoint)):
        raise DimensionMismatch("link expects two proj_point documents")
    raw = hopf_fibration.linking_integral(p, q, args.samples, tol)
    result = {
        "kind": "linking",
        "samples": args.samples,
        "integral": raw,
        "linking_number": int(round(raw)),
    }
    sys.stdout.write(jsonio.dumps(result) + "\n")
    return 0


def _cmd_check(args) -> int:
    config = RunConfig(
        seed=args.seed,
        eps_abs=_tolerance(args).eps_abs,
        cond_max=_tolerance(args).cond_max,
        lam=_parse_scalar(args.lam),
        trials=args.trials,
    )
    results = suites.run_suite(
        args.suite, config.trials, config.seed, config.tolerance, config.lam
    )
    failed = 0
    for r in results:
        status = "PASS" if r.passed == r.total else "FAIL"
        failed += r.passed != r.total
        sys.stdout.write(f"{r.name}: {r.passed}/{r.total} {status}\n")
    sys.stdout.write("overall: " + ("PASS" if failed == 0 else "FAIL") + "\n")
    return 0 if failed == 0 else 1


# --- parser ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, default=None,
                        help=f"absolute tolerance (default 1e-9, or ${ENV_EPS})")
    common.add_argument("--cond-max", type=float, default=None, dest="cond_max",
                        help="condition-estimate cap (default 1e12)")

    parser = argparse.ArgumentParser(
        prog="projgeo",
        description="Projective spaces, Grassmannians, and Hopf fibrations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_apply = sub.add_parser("apply", parents=[common],
                             help="apply a map document to a point-like document")
    p_apply.add_argument("map_file")
    p_apply.add_argument("point_file")
    p_apply.add_argument("--cp1", action="store_true",
                         help="print a CP^1 result as an extended complex value")
    p_apply.set_defaults(func=_cmd_apply)

    p_fiber = sub.add_parser("fiber", parents=[common],
                             help="sample the sphere fiber over a projective point")
    p_fiber.add_argument("point_file")
    p_fiber.add_argument("--samples", type=int, default=64)
    p_fiber.add_argument("--stereo", action="store_true",
                         help="append stereographic R^3 columns (CP^1 only)")
    p_fiber.set_defaults(func=_cmd_fiber)

    p_chart = sub.add_parser("chart", parents=[common],
                             help="affine chart embed/extract/transition")
    chart_sub = p_chart.add_subparsers(dest="action", required=True)
    c_embed = chart_sub.add_parser("embed", parents=[common])
    c_embed.add_argument("input", help="vector document of affine coordinates")
    c_embed.add_argument("--j", type=int, required=True)
    c_embed.add_argument("--field", choices=(REAL, COMPLEX), default=None)
    c_embed.set_defaults(func=_cmd_chart, action="embed")
    c_extract = chart_sub.add_parser("extract", parents=[common])
    c_extract.add_argument("input", help="proj_point document")
    c_extract.add_argument("--j", type=int, required=True)
    c_extract.set_defaults(func=_cmd_chart, action="extract")
    c_trans = chart_sub.add_parser("transition", parents=[common])
    c_trans.add_argument("input", help="vector document of chart-1 coordinates")
    c_trans.add_argument("--j1", type=int, required=True)
    c_trans.add_argument("--j2", type=int, required=True)
    c_trans.add_argument("--field", choices=(REAL, COMPLEX), default=None)
    c_trans.set_defaults(func=_cmd_chart, action="transition")

    p_gr = sub.add_parser("grassmann", parents=[common],
                          help="graph charts and dualities on G(k, n)")
    gr_sub = p_gr.add_subparsers(dest="action", required=True)
    g_graph = gr_sub.add_parser("graph", parents=[common])
    g_graph.add_argument("--base", required=True)
    g_graph.add_argument("--complement", default=None)
    g_graph.add_argument("--matrix", required=True)
    g_graph.set_defaults(func=_cmd_grassmann, action="graph")
    g_coords = gr_sub.add_parser("coords", parents=[common])
    g_coords.add_argument("subspace")
    g_coords.add_argument("--base", required=True)
    g_coords.add_argument("--complement", default=None)
    g_coords.set_defaults(func=_cmd_grassmann, action="coords")
    for name in ("complement", "annihilator"):
        g_dual = gr_sub.add_parser(name, parents=[common])
        g_dual.add_argument("subspace")
        g_dual.set_defaults(func=_cmd_grassmann, action=name)

    p_hopf = sub.add_parser("hopf", parents=[common],
                            help="scalar-power quotient operations")
    hopf_sub = p_hopf.add_subparsers(dest="action", required=True)
    h_proj = hopf_sub.add_parser("project", parents=[common])
    h_proj.add_argument("vector")
    h_proj.add_argument("--lambda", dest="lam", default="2")
    h_proj.add_argument("--field", choices=(REAL, COMPLEX), default=None)
    h_proj.set_defaults(func=_cmd_hopf, action="project")
    h_eq = hopf_sub.add_parser("equal", parents=[common])
    h_eq.add_argument("vector")
    h_eq.add_argument("other")
    h_eq.add_argument("--lambda", dest="lam", default="2")
    h_eq.set_defaults(func=_cmd_hopf, action="equal")
    h_top = hopf_sub.add_parser("to-projective", parents=[common])
    h_top.add_argument("vector", help="hopf_point document")
    h_top.add_argument("--lambda", dest="lam", default="2")
    h_top.set_defaults(func=_cmd_hopf, action="to-projective")

    p_link = sub.add_parser("link", parents=[common],
                            help="Gauss linking number of two CP^1 fibers")
    p_link.add_argument("point_file")
    p_link.add_argument("other_file")
    p_link.add_argument("--samples", type=int, default=2048)
    p_link.set_defaults(func=_cmd_link)

    p_check = sub.add_parser("check", parents=[common],
                             help="run the seeded property suites")
    p_check.add_argument("--suite", choices=suites.SUITE_NAMES, required=True)
    p_check.add_argument("--trials", type=int, default=100)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--lambda", dest="lam", default="2")
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DimensionMismatch, FieldMismatch, ShapeMismatch, NotSquare, SamePoint) as exc:
        print(f"projgeo: {exc}", file=sys.stderr)
        return 3
    except IllConditioned as exc:
        print(f"projgeo: {exc}", file=sys.stderr)
        return 4
    except (
        json.JSONDecodeError,
        OSError,
        KeyError,
        TypeError,
        ValueError,
        ZeroVector,
        InvalidRange,
        SingularCoefficients,
        DegenerateProjection,
        ProjGeoError,
    ) as exc:
        print(f"projgeo: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
