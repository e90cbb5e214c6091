import json

import pytest

from ratcensus import cli


def run(capsys, *args):
    code = cli.run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_census_count(capsys):
    code, out, _ = run(capsys, "census", "count", "--n", "8", "--s", "5", "--which", "r")
    assert code == 0
    assert out == "13\n"


def test_census_count_lambda_and_rs(capsys):
    code, out, _ = run(capsys, "census", "count", "--n", "12", "--s", "6", "--which", "rs")
    assert (code, out) == (0, "10\n")
    code, out, _ = run(capsys, "census", "count", "--n", "15", "--s", "8", "--which", "lambda")
    assert (code, out) == (0, "1176\n")


def test_census_genus(capsys):
    code, out, _ = run(capsys, "census", "genus", "--n", "7", "--g", "2", "--kind", "knot")
    assert (code, out) == (0, "8\n")
    code, out, _ = run(capsys, "census", "genus", "--n", "6", "--g", "1", "--kind", "link")
    assert (code, out) == (0, "6\n")


def test_cf_round_trip(capsys):
    code, out, _ = run(capsys, "cf", "expand", "56/191")
    assert (code, out) == (0, "3,2,2,3,3\n")
    code, out, _ = run(capsys, "cf", "eval", "3,2,2,3,3")
    assert (code, out) == (0, "56/191\n")


def test_diagram_info(capsys):
    code, out, _ = run(capsys, "diagram", "info", "--vector", "3,2,2,3,3",
                       "--format", "json")
    assert code == 0
    record = json.loads(out)[0]
    assert record["c"] == 13
    assert record["mu"] == 1
    assert record["signed"] == "-3 -2 -2 -3 -3"


def test_table_t3_row_total(capsys):
    code, out, _ = run(capsys, "census", "table", "--name", "t3", "--max-n", "15")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,s,count,kind"
    row15 = [line.split(",") for line in lines[1:] if line.startswith("15,")]
    assert sum(int(cells[2]) for cells in row15) == 5504


def test_verify_oracle(capsys):
    code, out, _ = run(capsys, "verify", "oracle", "--max-n", "8")
    assert code == 0
    assert out.strip().endswith("MISMATCHES: 0")


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--max-n", "12")
    assert code == 0
    assert out.strip().endswith("MISMATCHES: 0")


def test_usage_errors_exit_one(capsys):
    for argv in (
        ["census", "count", "--n", "oops", "--s", "2"],
        ["unknown-command"],
        ["census", "avg", "--kind", "knot", "--n-range", "9:3"],
        ["cf", "expand", "5/3"],
        ["emit-plot-data", "--kind", "knot", "--n-range", "banana"],
    ):
        code = cli.run(argv)
        captured = capsys.readouterr()
        assert code == 1, argv
        assert captured.err


def test_avg_csv_schema(capsys):
    code, out, _ = run(capsys, "census", "avg", "--kind", "knot", "--n-range", "3:7")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,count_total,avg_exact_num,avg_exact_den,avg_decimal"
    assert lines[-1] == "7,14,13,7,1.857142857143"


def test_emit_plot_data(tmp_path, capsys):
    out_file = tmp_path / "knots.dat"
    code = cli.run(["emit-plot-data", "--kind", "knot", "--n-range", "3:50",
                    "--out", str(out_file)])
    capsys.readouterr()
    assert code == 0
    rows = out_file.read_text().strip().splitlines()
    assert len(rows) == 48
    assert rows[0] == "3,1.000000000000"
    sidecar = json.loads((tmp_path / "knots.dat.fit.json").read_text())
    assert abs(float(sidecar["slope"]) - 0.2495) <= 0.005


def test_determinism_and_cache_soundness(tmp_path, capsys):
    base = ["census", "table", "--name", "t1", "--max-n", "12"]
    paths = [tmp_path / name for name in ("plain1.csv", "plain2.csv", "warm.csv", "hot.csv")]
    assert cli.run(base + ["--out", str(paths[0])]) == 0
    assert cli.run(base + ["--out", str(paths[1])]) == 0
    cache = tmp_path / "cache"
    assert cli.run(base + ["--cache", str(cache), "--out", str(paths[2])]) == 0
    assert (cache / "t1.json").is_file()
    assert cli.run(base + ["--cache", str(cache), "--out", str(paths[3])]) == 0
    capsys.readouterr()
    contents = {p.read_bytes() for p in paths}
    assert len(contents) == 1


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    code, out, _ = run(capsys, "census", "table", "--name", "t2", "--max-n", "8")
    assert code == 0
    assert (tmp_path / "t2.json").is_file()
    data = json.loads((tmp_path / "t2.json").read_text())
    assert data["schema"] == cli.CACHE_SCHEMA
    assert data["entries"]["8,6"] == "3"


def test_decimal12_rendering():
    from fractions import Fraction

    assert cli.decimal12(Fraction(13, 7)) == "1.857142857143"
    assert cli.decimal12(Fraction(0)) == "0.000000000000"
    assert cli.decimal12(Fraction(-1, 20)) == "-0.050000000000"
