"""Command-line surface: solve, certify, eval-cd, ellipsoid.

Configuration is a single JSON document (all keys lower_snake_case; unknown
keys are a hard error so misspelled tolerances cannot silently weaken a
certificate).  Reports are JSON with floats serialized to 17 significant
digits, which round-trips binary64 losslessly and makes reruns of the same
configuration byte-identical.  Tables are RFC-4180 CSV with a header row.

Exit codes: 0 success, 1 quality gate failed (non-convergence or dual
violation; the report is still written), 2 configuration or input error,
3 degenerate design.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__
from .basis import enumerate_basis, vandermonde
from .certificate import adjoint_expand, build_certificate, validate_dual_feasibility
from .design import DesignMeasure, assemble_information, moment_vector
from .errors import (
    ConfigError,
    DegenerateDesignError,
    EmptyCandidateSetError,
    InvalidDimensionError,
    NotAnEllipsoidError,
    TooFewCandidatesError,
)
from .geometry import ellipsoid_from_quadratic
from .semialg import (
    CandidateSet,
    SemiAlgebraicSet,
    SparsePolynomial,
    explicit_candidates,
    grid_candidates,
)
from .solver import ALGORITHMS, SolverConfig, solve
from .spd import quad_form_inv_many

EXIT_OK = 0
EXIT_GATE_FAILED = 1
EXIT_CONFIG = 2
EXIT_DEGENERATE = 3

_SOLVER_DEFAULTS = {
    "algorithm": "hybrid",
    "epsilon": 1e-6,
    "max_iters": 100_000,
    "prune_threshold": 1e-7,
}
_DEFAULT_VALIDATION_RESOLUTION = 101
_DEFAULT_OUTPUT = {"report_json": "report.json", "support_csv": "support.csv"}


# ---------------------------------------------------------------------------
# deterministic JSON
# ---------------------------------------------------------------------------


def format_float(x: float) -> str:
    if not np.isfinite(x):
        raise ValueError(f"non-finite value {x} in report")
    return format(float(x), ".17g")


def dump_json(obj: Any) -> str:
    """Serialize with 17-significant-digit floats and stable key order."""
    out = io.StringIO()
    _write_json(obj, out)
    out.write("\n")
    return out.getvalue()


def _write_json(obj: Any, out: io.StringIO) -> None:
    if obj is None:
        out.write("null")
    elif isinstance(obj, bool):
        out.write("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.write(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.write(format_float(float(obj)))
    elif isinstance(obj, str):
        out.write(json.dumps(obj))
    elif isinstance(obj, dict):
        out.write("{")
        for i, (key, val) in enumerate(obj.items()):
            if i:
                out.write(",")
            out.write(json.dumps(str(key)))
            out.write(":")
            _write_json(val, out)
        out.write("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        seq = obj.tolist() if isinstance(obj, np.ndarray) else obj
        out.write("[")
        for i, val in enumerate(seq):
            if i:
                out.write(",")
            _write_json(val, out)
        out.write("]")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------


def _require_keys(section: dict, allowed: set[str], required: set[str], where: str):
    unknown = set(section) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) {sorted(unknown)} in {where}")
    missing = required - set(section)
    if missing:
        raise ConfigError(f"missing key(s) {sorted(missing)} in {where}")


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where} must be an integer, got {value!r}")
    return value


def _as_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where} must be a number, got {value!r}")
    return float(value)


def parse_config(raw: dict) -> dict:
    """Validate a raw config dict and fill in defaults.

    Returns a normalized copy; raises ConfigError on any unknown key,
    missing key, type error or cross-section inconsistency.
    """
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a JSON object")
    _require_keys(
        raw,
        allowed={
            "dimension",
            "degree",
            "set",
            "candidates",
            "solver",
            "validation_resolution",
            "seed",
            "output",
        },
        required={"dimension", "degree", "set", "candidates"},
        where="config",
    )
    n = _as_int(raw["dimension"], "dimension")
    d = _as_int(raw["degree"], "degree")
    if n < 1:
        raise ConfigError(f"dimension must be >= 1, got {n}")
    if d < 1:
        raise ConfigError(f"degree must be >= 1, got {d}")

    set_raw = raw["set"]
    if not isinstance(set_raw, dict):
        raise ConfigError("'set' must be an object")
    _require_keys(
        set_raw,
        allowed={"bounding_box", "inequalities"},
        required={"bounding_box"},
        where="set",
    )
    box = set_raw["bounding_box"]
    if not isinstance(box, list) or len(box) != n:
        raise ConfigError(f"bounding_box must list {n} [lo, hi] intervals")
    box_norm = []
    for i, interval in enumerate(box):
        if not isinstance(interval, list) or len(interval) != 2:
            raise ConfigError(f"bounding_box[{i}] must be [lo, hi]")
        lo = _as_number(interval[0], f"bounding_box[{i}][0]")
        hi = _as_number(interval[1], f"bounding_box[{i}][1]")
        if not lo < hi:
            raise ConfigError(f"bounding_box[{i}] is empty: [{lo}, {hi}]")
        box_norm.append([lo, hi])
    ineqs_norm = []
    for gi, terms in enumerate(set_raw.get("inequalities", [])):
        if not isinstance(terms, list) or not terms:
            raise ConfigError(f"inequalities[{gi}] must be a non-empty term list")
        terms_norm = []
        for ti, term in enumerate(terms):
            where = f"inequalities[{gi}][{ti}]"
            if not isinstance(term, dict):
                raise ConfigError(f"{where} must be an object")
            _require_keys(
                term, allowed={"exponents", "coeff"},
                required={"exponents", "coeff"}, where=where,
            )
            expo = term["exponents"]
            if not isinstance(expo, list) or len(expo) != n:
                raise ConfigError(f"{where}.exponents must list {n} integers")
            expo = [_as_int(e, f"{where}.exponents") for e in expo]
            if any(e < 0 for e in expo):
                raise ConfigError(f"{where}.exponents must be nonnegative")
            terms_norm.append(
                {"exponents": expo, "coeff": _as_number(term["coeff"], f"{where}.coeff")}
            )
        ineqs_norm.append(terms_norm)

    cand_raw = raw["candidates"]
    if not isinstance(cand_raw, dict):
        raise ConfigError("'candidates' must be an object")
    source = cand_raw.get("source")
    if source == "grid":
        _require_keys(
            cand_raw, allowed={"source", "resolution"},
            required={"source", "resolution"}, where="candidates",
        )
        resolution = _as_int(cand_raw["resolution"], "candidates.resolution")
        if resolution < 2:
            raise ConfigError(f"grid resolution must be >= 2, got {resolution}")
        cand_norm: dict[str, Any] = {"source": "grid", "resolution": resolution}
    elif source == "points":
        _require_keys(
            cand_raw, allowed={"source", "points"},
            required={"source", "points"}, where="candidates",
        )
        pts = cand_raw["points"]
        if not isinstance(pts, list) or not pts:
            raise ConfigError("candidates.points must be a non-empty list")
        pts_norm = []
        for pi, pt in enumerate(pts):
            if not isinstance(pt, list) or len(pt) != n:
                raise ConfigError(f"candidates.points[{pi}] must list {n} numbers")
            pts_norm.append([_as_number(c, f"candidates.points[{pi}]") for c in pt])
        cand_norm = {"source": "points", "points": pts_norm}
    elif source == "point_cloud_file":
        _require_keys(
            cand_raw, allowed={"source", "path"},
            required={"source", "path"}, where="candidates",
        )
        path = cand_raw["path"]
        if not isinstance(path, str) or not Path(path).is_file():
            raise ConfigError(f"candidates.path does not exist: {path!r}")
        cand_norm = {"source": "point_cloud_file", "path": path}
    else:
        raise ConfigError(
            "candidates.source must be 'grid', 'points' or 'point_cloud_file'"
        )

    solver_raw = raw.get("solver", {})
    if not isinstance(solver_raw, dict):
        raise ConfigError("'solver' must be an object")
    _require_keys(
        solver_raw, allowed=set(_SOLVER_DEFAULTS), required=set(), where="solver"
    )
    solver_norm = dict(_SOLVER_DEFAULTS)
    solver_norm.update(solver_raw)
    if solver_norm["algorithm"] not in ALGORITHMS:
        raise ConfigError(
            f"solver.algorithm must be one of {ALGORITHMS}, "
            f"got {solver_norm['algorithm']!r}"
        )
    solver_norm["epsilon"] = _as_number(solver_norm["epsilon"], "solver.epsilon")
    solver_norm["max_iters"] = _as_int(solver_norm["max_iters"], "solver.max_iters")
    solver_norm["prune_threshold"] = _as_number(
        solver_norm["prune_threshold"], "solver.prune_threshold"
    )
    if not solver_norm["epsilon"] > 0:
        raise ConfigError("solver.epsilon must be positive")
    if solver_norm["max_iters"] < 1:
        raise ConfigError("solver.max_iters must be >= 1")

    validation_resolution = raw.get(
        "validation_resolution", _DEFAULT_VALIDATION_RESOLUTION
    )
    validation_resolution = _as_int(validation_resolution, "validation_resolution")
    if validation_resolution < 2:
        raise ConfigError(
            f"validation_resolution must be >= 2, got {validation_resolution}"
        )

    output_raw = raw.get("output", {})
    if not isinstance(output_raw, dict):
        raise ConfigError("'output' must be an object")
    _require_keys(
        output_raw, allowed=set(_DEFAULT_OUTPUT), required=set(), where="output"
    )
    output_norm = dict(_DEFAULT_OUTPUT)
    for key, val in output_raw.items():
        if not isinstance(val, str) or not val:
            raise ConfigError(f"output.{key} must be a non-empty string")
        output_norm[key] = val

    norm: dict[str, Any] = {
        "dimension": n,
        "degree": d,
        "set": {"bounding_box": box_norm, "inequalities": ineqs_norm},
        "candidates": cand_norm,
        "solver": solver_norm,
        "validation_resolution": validation_resolution,
        "output": output_norm,
    }
    if "seed" in raw:
        norm["seed"] = _as_int(raw["seed"], "seed")
    return norm


def load_config(path: str | Path) -> dict:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as err:
        raise ConfigError(f"config is not valid JSON: {err}") from err
    return parse_config(raw)


def build_problem(cfg: dict) -> tuple[SemiAlgebraicSet, CandidateSet]:
    """Instantiate the design space and candidate set described by a config."""
    n = cfg["dimension"]
    ineqs = tuple(
        SparsePolynomial(
            n=n,
            terms={tuple(t["exponents"]): t["coeff"] for t in terms},
        )
        for terms in cfg["set"]["inequalities"]
    )
    space = SemiAlgebraicSet(
        n=n,
        inequalities=ineqs,
        bounding_box=tuple((lo, hi) for lo, hi in cfg["set"]["bounding_box"]),
    )
    cand_cfg = cfg["candidates"]
    if cand_cfg["source"] == "grid":
        cands = grid_candidates(space, cand_cfg["resolution"])
    elif cand_cfg["source"] == "points":
        cands = explicit_candidates(space, np.array(cand_cfg["points"], dtype=float))
    else:
        pts = np.loadtxt(cand_cfg["path"], ndmin=2)
        if pts.shape[1] != n:
            raise ConfigError(
                f"point cloud has {pts.shape[1]} columns, expected {n}"
            )
        cands = explicit_candidates(space, pts)
    return space, cands


# ---------------------------------------------------------------------------
# report assembly
# ---------------------------------------------------------------------------


def _assemble_report(cfg, result, cert, validation, ellipsoid) -> dict:
    d = cfg["degree"]
    mv = moment_vector(result.design, d)
    # Expansion of the design's own polynomial (unscaled inverse information
    # matrix); the certificate block carries the scaled dual matrix.
    coeffs = adjoint_expand(cert.x_hat * (cert.p_max / cert.n_d), cert.basis)
    report: dict[str, Any] = {
        "artifact_version": __version__,
        "config": cfg,
        "n_d": cert.n_d,
        "objective": result.objective,
        "p_max": result.p_max,
        "iterations": result.iterations,
        "converged": result.converged,
        "prune_rolled_back": result.prune_rolled_back,
        "design": {
            "points": result.design.candidates.points,
            "weights": result.design.weights,
        },
        "p_values": result.p_values,
        "trace": {
            "objective": result.trace_objective,
            "p_max": result.trace_p_max,
        },
        "certificate": {
            "x_hat": cert.x_hat,
            "z_hat": cert.z_hat,
            "primal_value": cert.primal_value,
            "dual_value": cert.dual_value,
            "dual_value_mass_form": cert.dual_value_mass_form,
            "gap": cert.gap,
            "p_max": cert.p_max,
            "complementarity_residual": cert.complementarity_residual,
            "support": [
                {"point": list(pt), "weight": w, "p": p}
                for (pt, w, p) in cert.support
            ],
        },
        "moment_vector": {"degree": 2 * d, "values": mv.y},
        "cd_coefficients": {"degree": 2 * d, "values": coeffs.coeffs},
        "ellipsoid": None,
        "validation": validation,
    }
    if ellipsoid is not None:
        report["ellipsoid"] = {
            "center": ellipsoid.center,
            "shape": ellipsoid.shape,
            "radius_sq": ellipsoid.radius_sq,
            "log_volume_proxy": ellipsoid.log_volume_proxy,
        }
    return report


def _write_support_csv(path: Path, cert, n: int) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"x{j + 1}" for j in range(n)] + ["weight", "p"])
        for pt, w, p in cert.support:
            writer.writerow(
                [format_float(c) for c in pt] + [format_float(w), format_float(p)]
            )


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_solve(config_path: str, out_dir: str, quiet: bool = False) -> int:
    try:
        cfg = load_config(config_path)
        space, cands = build_problem(cfg)
    except (ConfigError, EmptyCandidateSetError, InvalidDimensionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG

    solver_cfg = SolverConfig(**cfg["solver"])
    d = cfg["degree"]
    timings: dict[str, float] = {}
    try:
        t0 = time.perf_counter()
        result = solve(cands, d, solver_cfg)
        timings["solve"] = time.perf_counter() - t0

        t0 = time.perf_counter()
        cert = build_certificate(result, d)
        timings["certificate"] = time.perf_counter() - t0
    except (TooFewCandidatesError, DegenerateDesignError) as err:
        print(f"error: degenerate problem: {err}", file=sys.stderr)
        return EXIT_DEGENERATE

    t0 = time.perf_counter()
    try:
        vgrid = grid_candidates(space, cfg["validation_resolution"])
    except EmptyCandidateSetError as err:
        print(f"error: validation grid: {err}", file=sys.stderr)
        return EXIT_CONFIG
    max_violation, argmax_point = validate_dual_feasibility(cert, vgrid)
    timings["validation"] = time.perf_counter() - t0
    validation = {
        "resolution": cfg["validation_resolution"],
        "max_violation": max_violation,
        "argmax_point": argmax_point,
    }

    ellipsoid = None
    if d == 1:
        try:
            ellipsoid = ellipsoid_from_quadratic(cert.x_hat, cert.n_d)
        except NotAnEllipsoidError:
            ellipsoid = None

    t0 = time.perf_counter()
    report = _assemble_report(cfg, result, cert, validation, ellipsoid)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report_path = out / cfg["output"]["report_json"]
    report_path.write_text(dump_json(report))
    _write_support_csv(out / cfg["output"]["support_csv"], cert, cfg["dimension"])
    timings["report"] = time.perf_counter() - t0
    (out / "timings.json").write_text(
        json.dumps({k: round(v, 6) for k, v in timings.items()}, indent=1) + "\n"
    )

    gate_ok = result.converged and max_violation <= cert.n_d * solver_cfg.epsilon
    if not quiet:
        print(f"report: {report_path}")
        print(
            f"n_d={cert.n_d} objective={result.objective:.12g} "
            f"gap={cert.gap:.3e} p_max={result.p_max:.12g}"
        )
        print(
            f"converged={result.converged} iterations={result.iterations} "
            f"support={len(cert.support_weights)} max_violation={max_violation:.3e}"
        )
        print("timings: " + " ".join(f"{k}={v:.3f}s" for k, v in timings.items()))
    return EXIT_OK if gate_ok else EXIT_GATE_FAILED


def _load_report(path: str) -> dict:
    p = Path(path)
    if not p.is_file():
        raise ConfigError(f"report file not found: {p}")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as err:
        raise ConfigError(f"report is not valid JSON: {err}") from err


def cmd_certify(report_path: str, validation_resolution: int | None, quiet=False) -> int:
    try:
        report = _load_report(report_path)
        cfg = parse_config(report["config"])
        space, _ = build_problem(cfg)
    except (ConfigError, KeyError, EmptyCandidateSetError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG

    n_d = report["n_d"]
    epsilon = cfg["solver"]["epsilon"]
    resolution = validation_resolution or cfg["validation_resolution"]
    basis = enumerate_basis(cfg["dimension"], cfg["degree"])
    x_hat = np.array(report["certificate"]["x_hat"], dtype=float)
    vgrid = grid_candidates(space, resolution)
    v = vandermonde(basis, vgrid.points)
    vals = np.einsum("ij,ij->i", v @ x_hat, v)
    max_violation = float(vals.max() - n_d)

    gap = report["certificate"]["gap"]
    gap_ok = gap <= n_d * np.log1p(epsilon)
    violation_ok = max_violation <= n_d * epsilon
    if not quiet:
        print(f"primal_value={report['certificate']['primal_value']:.12g}")
        print(f"dual_value={report['certificate']['dual_value']:.12g}")
        print(f"gap={gap:.6e} (bound {n_d * np.log1p(epsilon):.6e})")
        print(
            "complementarity_residual="
            f"{report['certificate']['complementarity_residual']:.6e}"
        )
        print(
            f"max_violation={max_violation:.6e} on {resolution}-per-axis grid "
            f"(bound {n_d * epsilon:.6e})"
        )
    return EXIT_OK if (gap_ok and violation_ok) else EXIT_GATE_FAILED


def cmd_eval_cd(
    config_path: str,
    report_path: str,
    grid_resolution: int,
    out_dir: str,
    quiet=False,
) -> int:
    try:
        cfg = load_config(config_path)
        report = _load_report(report_path)
        report_cfg = report["config"]
        if (
            report_cfg["dimension"] != cfg["dimension"]
            or report_cfg["degree"] != cfg["degree"]
        ):
            raise ConfigError(
                "report dimensions do not match config "
                f"(report n={report_cfg['dimension']} d={report_cfg['degree']}, "
                f"config n={cfg['dimension']} d={cfg['degree']})"
            )
        if grid_resolution < 2:
            raise ConfigError(f"grid resolution must be >= 2, got {grid_resolution}")
        space, _ = build_problem(cfg)
    except (ConfigError, KeyError, EmptyCandidateSetError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG

    d = cfg["degree"]
    n_d = report["n_d"]
    p_max = report["p_max"]
    design = DesignMeasure(
        candidates=CandidateSet(
            points=np.array(report["design"]["points"], dtype=float),
            source="report",
        ),
        weights=np.array(report["design"]["weights"], dtype=float),
    )
    try:
        factor = assemble_information(design, d)
    except DegenerateDesignError as err:
        print(f"error: degenerate design in report: {err}", file=sys.stderr)
        return EXIT_DEGENERATE
    basis = enumerate_basis(cfg["dimension"], d)
    grid = grid_candidates(space, grid_resolution)
    p_raw = quad_form_inv_many(factor, vandermonde(basis, grid.points))
    p_scaled = (n_d / p_max) * p_raw
    inside = p_scaled <= n_d * (1.0 + 1e-10)

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "cd_profile.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [f"x{j + 1}" for j in range(cfg["dimension"])]
            + ["p", "p_scaled", "inside_levelset"]
        )
        for pt, pr, ps, ok in zip(grid.points, p_raw, p_scaled, inside):
            writer.writerow(
                [format_float(c) for c in pt]
                + [format_float(pr), format_float(ps), "true" if ok else "false"]
            )
    if not quiet:
        print(f"cd profile: {csv_path} ({grid.size} points)")
    return EXIT_OK


def cmd_ellipsoid(report_path: str, out_dir: str, quiet=False) -> int:
    try:
        report = _load_report(report_path)
        degree = report["config"]["degree"]
    except (ConfigError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    if degree != 1:
        print(
            f"error: ellipsoid extraction needs a degree-1 report, got degree {degree}",
            file=sys.stderr,
        )
        return EXIT_CONFIG
    x_hat = np.array(report["certificate"]["x_hat"], dtype=float)
    try:
        ell = ellipsoid_from_quadratic(x_hat, report["n_d"])
    except NotAnEllipsoidError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DEGENERATE
    payload = {
        "center": ell.center,
        "shape": ell.shape,
        "radius_sq": ell.radius_sq,
        "log_volume_proxy": ell.log_volume_proxy,
    }
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / "ellipsoid.json"
    path.write_text(dump_json(payload))
    if not quiet:
        print(f"ellipsoid: {path}")
        print(dump_json(payload), end="")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doptdesign",
        description="D-optimal design on semi-algebraic candidate sets "
        "with dual optimality certificates",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a design problem from a config")
    p_solve.add_argument("--config", required=True)
    p_solve.add_argument("--out", default=".")
    p_solve.add_argument("--quiet", action="store_true")

    p_cert = sub.add_parser("certify", help="audit the duality gap of a report")
    p_cert.add_argument("--report", required=True)
    p_cert.add_argument("--validation-resolution", type=int, default=None)
    p_cert.add_argument("--quiet", action="store_true")

    p_eval = sub.add_parser("eval-cd", help="tabulate the certified polynomial")
    p_eval.add_argument("--config", required=True)
    p_eval.add_argument("--report", required=True)
    p_eval.add_argument("--validation-resolution", type=int, default=101)
    p_eval.add_argument("--out", default=".")
    p_eval.add_argument("--quiet", action="store_true")

    p_ell = sub.add_parser("ellipsoid", help="extract the enclosing ellipsoid (d=1)")
    p_ell.add_argument("--report", required=True)
    p_ell.add_argument("--out", default=".")
    p_ell.add_argument("--quiet", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "solve":
        code = cmd_solve(args.config, args.out, args.quiet)
    elif args.command == "certify":
        code = cmd_certify(args.report, args.validation_resolution, args.quiet)
    elif args.command == "eval-cd":
        code = cmd_eval_cd(
            args.config, args.report, args.validation_resolution, args.out, args.quiet
        )
    else:
        code = cmd_ellipsoid(args.report, args.out, args.quiet)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
