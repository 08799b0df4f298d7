import json

import numpy as np
import pytest

from doptdesign import ConfigError
from doptdesign.cli import (
    EXIT_CONFIG,
    EXIT_DEGENERATE,
    EXIT_GATE_FAILED,
    EXIT_OK,
    cmd_certify,
    cmd_ellipsoid,
    cmd_eval_cd,
    cmd_solve,
    dump_json,
    main,
    parse_config,
)

INTERVAL_CONFIG = {
    "dimension": 1,
    "degree": 2,
    "set": {"bounding_box": [[-1.0, 1.0]]},
    "candidates": {"source": "grid", "resolution": 201},
    "solver": {
        "algorithm": "multiplicative",
        "epsilon": 1e-6,
        "max_iters": 200000,
        "prune_threshold": 0.02,
    },
    "validation_resolution": 401,
}

PAIR_CONFIG = {
    "dimension": 1,
    "degree": 1,
    "set": {"bounding_box": [[-1.0, 1.0]]},
    "candidates": {"source": "points", "points": [[-1.0], [1.0]]},
    "solver": {"algorithm": "multiplicative", "epsilon": 1e-6},
    "validation_resolution": 11,
}

SQUARE_CONFIG = {
    "dimension": 2,
    "degree": 1,
    "set": {"bounding_box": [[-1.0, 1.0], [-1.0, 1.0]]},
    "candidates": {
        "source": "points",
        "points": [[-1.0, -1.0], [-1.0, 1.0], [1.0, -1.0], [1.0, 1.0]],
    },
    "validation_resolution": 21,
}


def write_config(tmp_path, cfg, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return str(path)


@pytest.fixture(scope="module")
def interval_run(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("interval")
    config_path = write_config(tmp, INTERVAL_CONFIG)
    out = tmp / "out"
    code = cmd_solve(config_path, str(out), quiet=True)
    return {
        "config": config_path,
        "out": out,
        "code": code,
        "report": json.loads((out / "report.json").read_text()),
    }


@pytest.fixture(scope="module")
def square_run(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("square")
    config_path = write_config(tmp, SQUARE_CONFIG)
    out = tmp / "out"
    code = cmd_solve(config_path, str(out), quiet=True)
    return {"config": config_path, "out": out, "code": code}


# -- config parsing ---------------------------------------------------------


def test_parse_config_fills_defaults():
    cfg = parse_config(
        {
            "dimension": 1,
            "degree": 1,
            "set": {"bounding_box": [[-1.0, 1.0]]},
            "candidates": {"source": "grid", "resolution": 5},
        }
    )
    assert cfg["solver"]["algorithm"] == "hybrid"
    assert cfg["solver"]["prune_threshold"] == 1e-7
    assert cfg["validation_resolution"] == 101


def test_parse_config_rejects_unknown_root_key():
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config(
            {
                "dimension": 1,
                "degree": 1,
                "set": {"bounding_box": [[-1, 1]]},
                "candidates": {"source": "grid", "resolution": 5},
                "epsilonn": 1e-6,
            }
        )


def test_parse_config_rejects_unknown_solver_key():
    cfg = dict(INTERVAL_CONFIG)
    cfg["solver"] = {"tolerance": 1e-6}
    with pytest.raises(ConfigError, match="unknown key"):
        parse_config(cfg)


def test_parse_config_rejects_degree_zero():
    cfg = dict(PAIR_CONFIG)
    cfg["degree"] = 0
    with pytest.raises(ConfigError, match="degree"):
        parse_config(cfg)


def test_parse_config_rejects_wrong_exponent_length():
    cfg = json.loads(json.dumps(INTERVAL_CONFIG))
    cfg["set"]["inequalities"] = [[{"exponents": [1, 2], "coeff": 1.0}]]
    with pytest.raises(ConfigError, match="exponents"):
        parse_config(cfg)


# -- solve ------------------------------------------------------------------


def test_solve_interval_exit_and_support(interval_run):
    assert interval_run["code"] == EXIT_OK
    report = interval_run["report"]
    support = report["certificate"]["support"]
    points = sorted(entry["point"][0] for entry in support)
    assert points == [-1.0, 0.0, 1.0]
    for entry in support:
        assert abs(entry["weight"] - 1 / 3) < 1e-6
    assert report["converged"] is True
    assert report["n_d"] == 3


def test_solve_report_round_trips(interval_run):
    raw = (interval_run["out"] / "report.json").read_text()
    assert dump_json(json.loads(raw)) == raw


def test_solve_report_has_required_sections(interval_run):
    report = interval_run["report"]
    for key in (
        "artifact_version",
        "config",
        "n_d",
        "objective",
        "p_max",
        "iterations",
        "converged",
        "design",
        "p_values",
        "trace",
        "certificate",
        "moment_vector",
        "cd_coefficients",
        "ellipsoid",
        "validation",
    ):
        assert key in report
    assert report["ellipsoid"] is None  # degree 2 run
    assert len(report["moment_vector"]["values"]) == 5
    assert len(report["cd_coefficients"]["values"]) == 5
    # quartic ceiling polynomial: 3 - 4.5 x^2 + 4.5 x^4, scaled by n_d/p_max
    coeffs = report["cd_coefficients"]["values"]
    assert abs(coeffs[0] - 3.0) < 1e-4
    assert abs(coeffs[2] + 4.5) < 1e-3
    assert abs(coeffs[4] - 4.5) < 1e-3


def test_solve_support_csv(interval_run):
    raw = (interval_run["out"] / "support.csv").read_bytes().decode()
    lines = raw.split("\r\n")
    assert lines[0] == "x1,weight,p"
    assert len([ln for ln in lines if ln]) == 4  # header + 3 atoms


def test_solve_timings_sidecar_not_in_report(interval_run):
    assert "timings" not in interval_run["report"]
    sidecar = json.loads((interval_run["out"] / "timings.json").read_text())
    assert set(sidecar) == {"solve", "certificate", "validation", "report"}


def test_solve_determinism_byte_identical(tmp_path):
    cfg = json.loads(json.dumps(INTERVAL_CONFIG))
    cfg["candidates"]["resolution"] = 41
    config_path = write_config(tmp_path, cfg)
    assert cmd_solve(config_path, str(tmp_path / "a"), quiet=True) == EXIT_OK
    assert cmd_solve(config_path, str(tmp_path / "b"), quiet=True) == EXIT_OK
    a = (tmp_path / "a" / "report.json").read_bytes()
    b = (tmp_path / "b" / "report.json").read_bytes()
    assert a == b


def test_solve_degree_zero_exits_config(tmp_path):
    cfg = dict(PAIR_CONFIG)
    cfg["degree"] = 0
    assert cmd_solve(write_config(tmp_path, cfg), str(tmp_path), True) == EXIT_CONFIG


def test_solve_too_few_candidates_exits_degenerate(tmp_path):
    cfg = json.loads(json.dumps(PAIR_CONFIG))
    cfg["degree"] = 2  # n_d = 3 > 2 candidates
    assert cmd_solve(write_config(tmp_path, cfg), str(tmp_path), True) == EXIT_DEGENERATE


def test_solve_missing_config(tmp_path):
    assert cmd_solve(str(tmp_path / "nope.json"), str(tmp_path), True) == EXIT_CONFIG


def test_solve_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert cmd_solve(str(path), str(tmp_path), True) == EXIT_CONFIG


def test_solve_point_cloud_file(tmp_path):
    cloud = tmp_path / "cloud.txt"
    cloud.write_text("-1.0\n-0.5\n0.0\n0.5\n1.0\n")
    cfg = json.loads(json.dumps(PAIR_CONFIG))
    cfg["candidates"] = {"source": "point_cloud_file", "path": str(cloud)}
    out = tmp_path / "out"
    assert cmd_solve(write_config(tmp_path, cfg), str(out), True) == EXIT_OK
    report = json.loads((out / "report.json").read_text())
    assert report["converged"] is True


# -- certify ----------------------------------------------------------------


def test_certify_converged_run(interval_run, capsys):
    code = cmd_certify(str(interval_run["out"] / "report.json"), None)
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert "gap=" in out and "max_violation=" in out
    # exit code is a pure function of the report and grid
    rerun = cmd_certify(str(interval_run["out"] / "report.json"), None, quiet=True)
    assert rerun == code


def test_certify_truncated_run(tmp_path, capsys):
    cfg = {
        "dimension": 1,
        "degree": 1,
        "set": {"bounding_box": [[-1.0, 1.0]]},
        "candidates": {"source": "points", "points": [[-1.0], [-0.2], [0.5], [1.0]]},
        "solver": {"algorithm": "multiplicative", "max_iters": 1},
        "validation_resolution": 11,
    }
    out = tmp_path / "out"
    assert cmd_solve(write_config(tmp_path, cfg), str(out), True) == EXIT_GATE_FAILED
    report = json.loads((out / "report.json").read_text())
    assert report["converged"] is False
    assert report["certificate"]["gap"] > 0
    assert cmd_certify(str(out / "report.json"), None, quiet=True) == EXIT_GATE_FAILED


def test_certify_corrupted_report(tmp_path):
    path = tmp_path / "r.json"
    path.write_text('{"certificate": ')
    assert cmd_certify(str(path), None, quiet=True) == EXIT_CONFIG


# -- eval-cd ----------------------------------------------------------------


def test_eval_cd_linear_profile(tmp_path):
    out = tmp_path / "out"
    config_path = write_config(tmp_path, PAIR_CONFIG)
    assert cmd_solve(config_path, str(out), True) == EXIT_OK
    code = cmd_eval_cd(config_path, str(out / "report.json"), 3, str(out), True)
    assert code == EXIT_OK
    rows = (out / "cd_profile.csv").read_bytes().decode().strip().split("\r\n")
    assert rows[0] == "x1,p,p_scaled,inside_levelset"
    table = {float(r.split(",")[0]): float(r.split(",")[1]) for r in rows[1:]}
    assert abs(table[-1.0] - 2.0) < 1e-9
    assert abs(table[0.0] - 1.0) < 1e-9
    assert abs(table[1.0] - 2.0) < 1e-9


def test_eval_cd_scaled_value_at_support(interval_run):
    out = interval_run["out"]
    code = cmd_eval_cd(
        interval_run["config"], str(out / "report.json"), 5, str(out), True
    )
    assert code == EXIT_OK
    rows = (out / "cd_profile.csv").read_bytes().decode().strip().split("\r\n")[1:]
    for row in rows:
        x, _, p_scaled, _ = row.split(",")
        if float(x) in (-1.0, 0.0, 1.0):
            assert abs(float(p_scaled) - 3.0) <= 3.0 * 1e-4


def test_eval_cd_resolution_one_rejected(interval_run):
    code = cmd_eval_cd(
        interval_run["config"],
        str(interval_run["out"] / "report.json"),
        1,
        str(interval_run["out"]),
        True,
    )
    assert code == EXIT_CONFIG


def test_eval_cd_mismatched_report(tmp_path, interval_run):
    config_path = write_config(tmp_path, PAIR_CONFIG)  # degree 1 vs report's 2
    code = cmd_eval_cd(
        config_path, str(interval_run["out"] / "report.json"), 5, str(tmp_path), True
    )
    assert code == EXIT_CONFIG


# -- ellipsoid --------------------------------------------------------------


def test_ellipsoid_square(square_run):
    assert square_run["code"] == EXIT_OK
    out = square_run["out"]
    assert cmd_ellipsoid(str(out / "report.json"), str(out), True) == EXIT_OK
    ell = json.loads((out / "ellipsoid.json").read_text())
    assert np.allclose(ell["center"], [0.0, 0.0], atol=1e-8)
    assert np.allclose(ell["shape"], np.eye(2), atol=1e-8)
    assert abs(ell["radius_sq"] - 2.0) < 1e-8


def test_ellipsoid_rejects_degree_two(interval_run):
    code = cmd_ellipsoid(
        str(interval_run["out"] / "report.json"), str(interval_run["out"]), True
    )
    assert code == EXIT_CONFIG


def test_ellipsoid_missing_report(tmp_path):
    assert cmd_ellipsoid(str(tmp_path / "nope.json"), str(tmp_path), True) == EXIT_CONFIG


# -- entry point ------------------------------------------------------------


def test_main_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == "0.1.0"


def test_main_dispatches_solve(tmp_path, capsys):
    config_path = write_config(tmp_path, PAIR_CONFIG)
    code = main(["solve", "--config", config_path, "--out", str(tmp_path / "o")])
    assert code == EXIT_OK
    assert "report" in capsys.readouterr().out


def test_float_serialization_round_trips():
    values = [0.1, 1 / 3, np.pi, 2.0 / 3.0, 1e-300, -0.0]
    for v in values:
        assert float(format(v, ".17g")) == v
