"""End-to-end checks of the command-line front end.

Everything goes through ``main(argv)`` directly rather than a subprocess, so
the tests see the real exit codes and the exact bytes on stdout/stderr.
"""

import json

import pytest

from casimir_harmonic import __version__
from casimir_harmonic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    lines = text.strip().split("\n")
    assert lines[0].startswith("# casimir-harmonic v")
    body = [ln for ln in lines[1:] if not ln.startswith("#")]
    notes = [ln[len("# note: "):] for ln in lines[1:] if ln.startswith("# note: ")]
    columns = body[0].split(",")
    rows = [ln.split(",") for ln in body[1:]]
    return columns, rows, notes


def test_energy_d3_values(capsys):
    code, out, _ = run(capsys, "energy", "--d", "3")
    assert code == 0
    columns, rows, _ = parse_csv(out)
    assert columns == ["d", "quadrature", "quadrature_err", "zeta", "abs_diff"]
    (row,) = rows
    assert int(row[0]) == 3
    assert float(row[1]) == pytest.approx(-0.0078607119, abs=1e-9)
    assert float(row[3]) == pytest.approx(-0.0078607119, abs=1e-9)
    assert float(row[4]) < 1e-9


def test_energy_header_echoes_config(capsys):
    _, out, _ = run(capsys, "energy", "--d", "2", "--kappa-over-k", "2.0")
    header = out.split("\n")[0]
    assert header == (
        "# casimir-harmonic v%s d=2 xi=conformal kappa_over_k=2 tol=1e-10"
        % __version__
    )


def test_energy_above_d3_has_no_zeta_column_value(capsys):
    # No closed form past d=3: the zeta cell is empty and a note says why.
    code, out, _ = run(capsys, "energy", "--d", "4")
    assert code == 0
    columns, rows, notes = parse_csv(out)
    (row,) = rows
    assert row[columns.index("zeta")] == ""
    assert row[columns.index("abs_diff")] == ""
    assert any("quadrature only" in n for n in notes)


def test_reruns_are_byte_identical(capsys):
    _, first, _ = run(capsys, "stress", "--d", "3", "--r", "0", "2", "9")
    _, second, _ = run(capsys, "stress", "--d", "3", "--r", "0", "2", "9")
    assert first == second


def test_json_and_csv_agree_after_quantization(capsys):
    _, csv_out, _ = run(capsys, "stress", "--d", "1", "--r", "0", "1", "5")
    _, json_out, _ = run(capsys, "stress", "--d", "1", "--r", "0", "1", "5",
                         "--format", "json")
    columns, rows, _ = parse_csv(csv_out)
    payload = json.loads(json_out)
    assert payload["columns"] == columns
    assert len(payload["rows"]) == len(rows)
    for csv_row, json_row in zip(rows, payload["rows"]):
        for text, value in zip(csv_row, json_row):
            if text == "":
                assert value is None
            elif isinstance(value, str):
                assert text == value
            else:
                assert float(text) == pytest.approx(float(value), abs=0.0)


def test_stress_d2_conformal_origin_row(capsys):
    code, out, _ = run(capsys, "stress", "--d", "2", "--component", "tt",
                       "--xi", "conformal", "--r", "0", "0", "1")
    assert code == 0
    columns, rows, _ = parse_csv(out)
    (row,) = rows
    t0 = float(row[columns.index("t0")])
    t1 = float(row[columns.index("t1")])
    assert t1 == 0.0  # even dimension: no scale-dependent piece
    assert t0 == pytest.approx(-0.00200700974128, abs=1e-11)


def test_stress_k_column_appears_on_request(capsys):
    _, out, _ = run(capsys, "stress", "--d", "1", "--k", "2.0",
                    "--r", "0", "1", "3")
    columns, rows, _ = parse_csv(out)
    assert "x" in columns
    # x = r/k: the grid is in dimensionless r
    assert float(rows[2][columns.index("x")]) == pytest.approx(0.5, abs=1e-12)


def test_asympt_table_shape(capsys):
    code, out, _ = run(capsys, "asympt", "--d", "1", "--part", "diamond",
                       "--r", "5", "9", "3")
    assert code == 0
    columns, rows, notes = parse_csv(out)
    kinds = {row[0] for row in rows}
    assert kinds == {"small_r", "large_r_limit", "match"}
    match_rows = [row for row in rows if row[0] == "match"]
    assert len(match_rows) == 3
    for row in match_rows:
        assert row[columns.index("within_bound")] == "1"
    assert any(n.startswith("small_r validity:") for n in notes)
    assert any(n.startswith("match slopes") for n in notes)


def test_output_file_writing(tmp_path, capsys):
    target = tmp_path / "energy.json"
    code = main(["energy", "--d", "1", "--format", "json",
                 "--output", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(target.read_text())
    assert payload["config"]["command"] == "energy"
    assert payload["rows"][0][1] == pytest.approx(0.0430546469, abs=1e-9)


def test_empty_radius_grid_exits_2(capsys):
    code, out, err = run(capsys, "stress", "--d", "1", "--r-steps", "0")
    assert code == 2
    assert out == ""
    message = json.loads(err)
    assert message["exit_code"] == 2
    assert "r_steps" in message["error"]


def test_bad_xi_exits_2(capsys):
    code, _, err = run(capsys, "stress", "--d", "1", "--xi", "banana")
    assert code == 2
    assert "xi" in json.loads(err)["error"]


def test_unknown_criterion_exits_2(capsys):
    code, _, err = run(capsys, "selftest", "--criteria", "1,99")
    assert code == 2
    assert "99" in json.loads(err)["error"]


def test_selftest_passing_subset_exits_0(capsys):
    code, out, _ = run(capsys, "selftest", "--criteria", "2,3")
    assert code == 0
    _, rows, _ = parse_csv(out)
    assert [row[1] for row in rows] == ["PASS", "PASS"]


def test_selftest_failing_criterion_exits_3(capsys):
    # criterion 7 documents a known miss (large-r decay slopes); the CLI must
    # report it as FAIL and exit 3 rather than hiding it.
    code, out, _ = run(capsys, "selftest", "--criteria", "7")
    assert code == 3
    _, rows, _ = parse_csv(out)
    assert rows[0][0] == "criterion_07"
    assert rows[0][1] == "FAIL"


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out
