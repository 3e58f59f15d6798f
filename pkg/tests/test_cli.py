import json
import math

import pandas as pd
import pytest

from drgibbs import cli
from drgibbs.cli import EXIT_BAD_PARAM, EXIT_NUMERICAL, EXIT_OK, main
from drgibbs.exceptions import NumericalFailure


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_describe(capsys):
    code, out, _ = _run(capsys, "describe", "qjohnson:q=2,v=4,D=2")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["diameter"] == 2
    assert data["haar"] == ["1", "18", "16"]
    assert data["coefficients"][0] == ["1", "0", "0"]
    assert data["dual"]["points"][0] == pytest.approx(1.0)
    assert data["predicted_region"]["claim"] == "inner"


def test_describe_gamma_prefix(capsys):
    code, out, _ = _run(capsys, "describe", "gamma:a=3,b=3")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["haar"][:4] == ["1", "6", "24", "96"]
    assert len(data["coefficients"]) == cli.DESCRIBE_PREFIX + 1
    assert data["tree_constants"]["s_0"] == "-1/2"


def test_describe_as_text(capsys):
    code, out, _ = _run(capsys, "describe", "octahedron", "--format", "text")
    assert code == EXIT_OK
    assert "diameter: 2" in out
    assert "family:" in out


def test_check_bochner(capsys):
    code, out, _ = _run(capsys, "check", "qjohnson:q=2,v=4,D=2", "--x", "1/4")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["verdict"] == "PSD"
    assert data["method"] == "bochner"

    _, out, _ = _run(capsys, "check", "qjohnson:q=2,v=4,D=2", "--x", "0.75")
    assert json.loads(out)["verdict"] == "NotPSD"


@pytest.mark.parametrize("method", ["gram", "oracle"])
def test_check_other_methods(capsys, method):
    code, out, _ = _run(capsys, "check", "hamming:D=2,N=3", "--x", "-0.6", "--method", method)
    assert code == EXIT_OK
    assert json.loads(out)["verdict"] == "NotPSD"


@pytest.mark.parametrize("method", ["bochner", "gram", "oracle"])
def test_check_reports_x_as_a_number(capsys, method):
    code, out, _ = _run(capsys, "check", "hamming:D=2,N=3", "--x=-3/5", "--method", method)
    assert code == EXIT_OK
    assert json.loads(out)["x"] == pytest.approx(-0.6)


def test_check_gamma_defaults_to_gram(capsys):
    code, out, _ = _run(capsys, "check", "gamma:a=3,b=3", "--x", "-0.45", "--trunc", "6")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["method"] == "gram"
    assert data["verdict"] == "PSD"


def test_bad_parameters_exit_with_two(capsys):
    code, _, err = _run(capsys, "check", "gamma:a=3,b=3", "--x", "0.5", "--method", "bochner")
    assert code == EXIT_BAD_PARAM
    assert err.startswith("drgibbs:")
    assert _run(capsys, "describe", "hamming:D=3")[0] == EXIT_BAD_PARAM
    assert _run(capsys, "check", "octahedron", "--x", "half")[0] == EXIT_BAD_PARAM
    assert _run(capsys, "check", "octahedron", "--x", "2")[0] == EXIT_BAD_PARAM
    assert _run(capsys, "check", "gamma:a=3,b=3", "--x", "3/2")[0] == EXIT_BAD_PARAM
    assert _run(capsys, "describe", "octahedron", "--format", "csv")[0] == EXIT_BAD_PARAM


def test_usage_errors_exit_through_argparse(capsys):
    with pytest.raises(SystemExit) as err:
        main(["check", "octahedron"])
    assert err.value.code == 2
    capsys.readouterr()


def test_numerical_failure_exits_with_three(capsys, monkeypatch):
    def failing(*args, **kwargs):
        raise NumericalFailure("eigensolver failed")

    monkeypatch.setattr(cli, "positivity_region", failing)
    code, out, err = _run(capsys, "region", "octahedron")
    assert code == EXIT_NUMERICAL
    assert out == ""
    assert "eigensolver failed" in err


def test_region(capsys, tmp_path):
    plot = tmp_path / "region.png"
    code, out, _ = _run(capsys, "region", "octahedron", "--plot", str(plot))
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["intervals"][0][0] == pytest.approx(math.sqrt(3) - 2, abs=1e-8)
    assert data["points"] == []
    assert plot.exists()


def test_truncated_region(capsys):
    code, out, _ = _run(capsys, "region", "gamma:a=3,b=3", "--trunc", "4")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["claim"] == "outer"
    assert data["intervals"][0][0] <= -0.5 + 1e-6


def test_oracle_with_export(capsys, tmp_path):
    export = tmp_path / "distances.csv"
    code, out, _ = _run(capsys, "oracle", "hamming:D=2,N=3", "--x", "-0.6", "--export", str(export))
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["certificate"]["verdict"] == "NotPSD"
    assert data["graph"]["vertex_count"] == 9
    assert pd.read_csv(export).shape == (9, 10)


def test_embed_csv(capsys):
    code, out, _ = _run(capsys, "embed", "hamming:D=2,N=3", "--nmax", "20", "--format", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "n,j,dual_point"
    assert len(lines) == 1 + sum(3 + n for n in range(21))


def test_embed_verdict_and_gamma(capsys):
    _, out, _ = _run(capsys, "embed", "hamming:D=2,N=3", "--nmax", "200")
    assert json.loads(out)["verdict"] == "match"
    code, out, _ = _run(capsys, "embed", "gamma:a=3,b=3", "--nmax", "50")
    assert code == EXIT_OK
    assert json.loads(out)["monotone"] is True


def test_measure(capsys, tmp_path):
    code, out, _ = _run(capsys, "measure", "gamma:a=2,b=4")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["atom_mass"] == "1/2"
    assert data["mass"] == pytest.approx(1.0, abs=1e-8)

    export = tmp_path / "density.csv"
    code, out, _ = _run(capsys, "measure", "gamma:a=3,b=2", "--letac", "0.3",
                        "--samples", "10", "--format", "csv", "--export", str(export))
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "z,density"
    assert len(lines) == 11
    assert len(pd.read_csv(export)) == 10


def test_measure_rejections(capsys):
    assert _run(capsys, "measure", "hamming:D=2,N=3")[0] == EXIT_BAD_PARAM
    assert _run(capsys, "measure", "gamma:a=3,b=3", "--letac", "0.3")[0] == EXIT_BAD_PARAM
    assert _run(capsys, "measure", "gamma:a=3,b=2", "--letac", "0.9")[0] == EXIT_BAD_PARAM


def test_batch(capsys, tmp_path):
    jobs = tmp_path / "jobs.jsonl"
    jobs.write_text(
        "\n".join([
            json.dumps({"command": "check", "family": "octahedron", "x": "0.5"}),
            "",
            json.dumps({"command": "region", "family": "triangle:N=3"}),
            "{not json",
            json.dumps({"command": "describe", "family": "complete:N=3", "colour": "red"}),
        ]),
        encoding="utf-8",
    )
    code, out, _ = _run(capsys, "batch", str(jobs))
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert code == EXIT_BAD_PARAM
    assert [r["job"] for r in records] == [1, 2, 3, 4]
    assert records[0]["result"]["verdict"] == "PSD"
    assert all("error" in r for r in records[1:])


def test_exit_codes():
    assert cli.exit_code(NumericalFailure("x")) == EXIT_NUMERICAL
    assert cli.exit_code(cli.DrgibbsError("x")) == cli.EXIT_ERROR
