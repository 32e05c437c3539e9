"""Command-line entry points: text and JSON output, exit codes."""

import csv
import io
import json

import pytest

from totpos.cli import main


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_cf_command(capsys):
    code, data = run_json(capsys, ["cf", "13"])
    assert code == 0
    assert data["u0"] == 1
    assert data["period"] == [3]
    assert data["fundamental_unit"] == "(3+sqrt(13))/2"
    assert data["unit_norm"] == -1
    assert data["totally_positive_unit"] == "(11+3*sqrt(13))/2"


def test_cf_rejects_square(capsys):
    assert main(["cf", "8"]) == 2
    assert "error" in capsys.readouterr().err


def test_quad_command(capsys):
    code, data = run_json(capsys, ["quad", "6"])
    assert code == 0
    assert data["iota"] == 2
    assert data["elements"] == ["1", "3+sqrt(6)"]


def test_biquad_command(capsys):
    code, data = run_json(capsys, ["biquad", "2", "3"])
    assert code == 0
    assert (data["p"], data["q"], data["r"]) == (2, 3, 6)
    assert data["disc"] == 2304
    assert data["iota"] == 5
    assert data["subfield_iotas"] == {"2": 2, "3": 1, "6": 2}
    assert data["index_totally_positive"] == 8
    assert data["index_unit_squares"] == 2
    assert data["extra_units"] is True
    assert len(data["classes"]) == 5
    assert data["classes"][0]["str"] == "1"


def test_biquad_text_output(capsys):
    assert main(["biquad", "2", "3"]) == 0
    out = capsys.readouterr().out
    assert "5 indecomposable classes" in out
    assert "iota(6) = 2" in out


def test_biquad_oracle_check(capsys):
    code, data = run_json(capsys, ["biquad", "3", "5", "--check"])
    assert code == 0
    assert data["oracle"]["matched"] is True
    assert data["oracle"]["certified"] is True
    assert data["oracle"]["oracle_classes"] == 3


def test_biquad_rejects_bad_radicands(capsys):
    assert main(["biquad", "2", "2"]) == 2
    assert main(["biquad", "4", "3"]) == 2
    capsys.readouterr()


def test_biquad_budget_exit_code(capsys):
    assert main(["biquad", "2", "11", "--budget", "50"]) == 3
    assert "budget" in capsys.readouterr().err


def test_table_single_row(capsys):
    code, data = run_json(capsys, ["table", "2", "3"])
    assert code == 0
    (row,) = data["rows"]
    assert (row["p"], row["q"], row["r"]) == (2, 3, 6)
    assert (row["iota_p"], row["iota_q"], row["iota_r"]) == (2, 1, 2)
    assert row["iota"] == 5
    assert row["ratio"] == "0.2532"
    assert row["extra_units"] is True


def test_table_csv(capsys):
    assert main(["table", "--csv", "--max-disc", "4000"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0][:4] == ["p", "q", "r", "disc"]
    body = {(r[0], r[1], r[2]): r for r in rows[1:]}
    assert len(body) == 3
    assert body[("2", "5", "10")][7] == "14"
    assert body[("2", "3", "6")][8] == "0.2532"
    assert body[("3", "5", "15")][7] == "3"


def test_family_command(capsys):
    code, data = run_json(capsys, ["family", "1", "6"])
    assert code == 0
    assert data["iota"] == 45
    assert data["kubota_deltas"] == [26, 15, 30]
    assert data["kubota_accepted"] == [[0, 0, 0], [1, 0, 1]]
    assert data["cone_contents"] == [13, 28, 24, 28, 24, 13]
    assert len(data["elements"]) == 45


def test_family_verify(capsys):
    code, data = run_json(capsys, ["family", "3", "2", "--verify"])
    assert code == 0
    assert data["verified"] is True
    assert data["iota"] == 8


def test_family_rejects_bad_n(capsys):
    assert main(["family", "1", "5"]) == 2
    capsys.readouterr()


def test_family_rejects_bad_label(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["family", "9", "6"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_preserve_both_designated_subfields(capsys):
    code, data = run_json(capsys, ["preserve", "2", "3"])
    assert code == 0
    assert set(data["subfields"]) == {"2", "3"}
    for sub in data["subfields"].values():
        assert sub["failures"] == []
        assert sub["preserved"] >= 1


def test_preserve_shows_counterexample(capsys):
    code, data = run_json(capsys, ["preserve", "5", "13", "--subfield", "65"])
    assert code == 0
    failures = data["subfields"]["65"]["failures"]
    assert len(failures) >= 1
    split = {f["element"] for f in failures}
    assert "(25+3*sqrt(65))/2" in split


def test_census_default(capsys):
    code, data = run_json(capsys, ["census"])
    assert code == 0
    assert data["count"] == 6
    assert [f["disc"] for f in data["fields"]] == [
        1600, 2304, 3600, 4225, 7056, 7225]


def test_census_brute_check(capsys):
    code, data = run_json(capsys, ["census", "--brute-check"])
    assert code == 0
    assert data["brute_check"] is True


def test_census_rank_one(capsys):
    code, data = run_json(capsys, ["census", "--rank", "1",
                                   "--max-disc", "10000"])
    assert code == 0
    assert data["count"] == 3043


def test_census_rank_three(capsys):
    code, data = run_json(capsys, ["census", "--rank", "3",
                                   "--max-disc", "10000000000"])
    assert code == 0
    assert data["count"] == 1
    assert data["fields"] == [[2, 3, 5, 6, 10, 15, 30]]


def test_census_growth(capsys):
    code, data = run_json(capsys, ["census", "--growth"])
    assert code == 0
    assert data["counts"] == [6, 42, 196]
    assert data["within_factor_3"] is True


def test_crm_command(capsys):
    code, data = run_json(capsys, ["crm", "16", "2"])
    assert code == 0
    assert data["constant"] == 480
    code, data = run_json(capsys, ["crm", "10", "1"])
    assert code == 0
    assert data["constant"] == 20
    assert main(["crm", "0", "2"]) == 2
    capsys.readouterr()


def test_rankbound_field(capsys):
    code, data = run_json(capsys, ["rankbound", "2", "3"])
    assert code == 0
    assert data["iota"] == 5
    assert data["index_unit_squares"] == 2
    assert data["rank_upper_bound"] == 70


def test_rankbound_family(capsys):
    code, data = run_json(capsys, ["rankbound", "--family", "3", "--n", "2"])
    assert code == 0
    assert data["iota"] == 8
    assert data["rank_upper_bound"] == 224


def test_rankbound_requires_target(capsys):
    assert main(["rankbound"]) == 2
    assert "error" in capsys.readouterr().err
