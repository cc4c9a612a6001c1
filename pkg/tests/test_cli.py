import csv
import io
import json

from klmatroids.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCoeff:
    def test_all_methods_agree(self, capsys):
        code, out, _ = run_cli(
            capsys, "coeff", "--m", "2", "--d", "3", "--i", "1", "--rho", "1",
            "--method", "all",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "OK"
        assert all(line.endswith(": 3") for line in lines[:-1])

    def test_default_method(self, capsys):
        code, out, _ = run_cli(capsys, "coeff", "--m", "1", "--d", "3", "--i", "0")
        assert code == 0 and out.strip() == "1"

    def test_rejects_m_zero(self, capsys):
        code, _, err = run_cli(capsys, "coeff", "--m", "0", "--d", "3", "--i", "1")
        assert code == 2 and "m must be" in err

    def test_closed_form_needs_uniform(self, capsys):
        code, _, err = run_cli(
            capsys, "coeff", "--m", "2", "--d", "3", "--i", "1", "--rho", "1",
            "--method", "closed-form",
        )
        assert code == 2 and "rho = 0" in err

    def test_json_envelope(self, capsys):
        code, out, _ = run_cli(
            capsys, "coeff", "--m", "3", "--d", "4", "--i", "1", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["result"] == "28"
        assert payload["method"] == "tableau"
        assert payload["query"]["m"] == "3"
        assert isinstance(payload["elapsed_ms"], float)

    def test_big_integers_stay_decimal(self, capsys):
        # 20 digits; cross-checked against the older closed form, never
        # rendered in scientific notation
        code, out, _ = run_cli(
            capsys, "coeff", "--m", "30", "--d", "21", "--i", "9", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["result"] == "29399769954675289400"

    def test_exponential_methods_capped(self, capsys, monkeypatch):
        monkeypatch.setenv("KLM_MAX_N", "6")
        code, _, err = run_cli(
            capsys, "coeff", "--m", "4", "--d", "4", "--i", "1", "--method", "direct"
        )
        assert code == 2 and "KLM_MAX_N" in err
        code, out, _ = run_cli(
            capsys, "coeff", "--m", "4", "--d", "4", "--i", "1", "--method", "all"
        )
        assert code == 0
        assert "oracle" not in out and "tableau: 48" in out


class TestKlpoly:
    def test_text_output(self, capsys):
        assert run_cli(capsys, "klpoly", "--m", "1", "--d", "3")[1].strip() == "1 + 2t"
        assert run_cli(capsys, "klpoly", "--m", "1", "--d", "2")[1].strip() == "1"
        assert (
            run_cli(capsys, "klpoly", "--m", "2", "--d", "3", "--rho", "1")[1].strip()
            == "1 + 3t"
        )

    def test_methods_cross_checked(self, capsys):
        code, out, _ = run_cli(
            capsys, "klpoly", "--m", "2", "--d", "4", "--method", "all"
        )
        assert code == 0
        assert out.strip().splitlines()[-1] == "OK"

    def test_json_round_trip(self, capsys):
        # 1 + 28t + 21t^2, frozen from the recurrence oracle and confirmed
        # by direct enumeration of the two shapes
        code, out, _ = run_cli(
            capsys, "klpoly", "--m", "2", "--d", "5", "--format", "json"
        )
        payload = json.loads(out)
        assert payload["result"] == ["1", "28", "21"]


class TestEnumerate:
    def test_streams_and_counts(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--a", "2", "--i", "1", "--b", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3 and lines[-1] == "count: 2"

    def test_empty_convention(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--a", "2", "--i", "1", "--b", "1")
        assert code == 0 and out.strip() == "count: 0"

    def test_i_zero_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "enumerate", "--a", "2", "--i", "0", "--b", "4")
        assert code == 2

    def test_json_stream_contains_known_filling(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--a", "4", "--i", "3", "--b", "3", "--format", "json"
        )
        assert code == 0
        lines = out.strip().splitlines()
        count = json.loads(lines[-1])["count"]
        fillings = [json.loads(line) for line in lines[:-1]]
        assert count == len(fillings) == 2145
        assert {
            "a": 4, "i": 3, "b": 3,
            "columns": [[2, 3, 10, 11], [4, 6], [5, 8], [1, 7, 9]],
        } in fillings

    def test_rho_family_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--a", "3", "--i", "1", "--b", "2",
            "--family", "rho", "--rho", "1",
        )
        assert code == 0
        assert out.strip().splitlines()[-1] == "count: 3"

    def test_rho_family_rank_consistency(self, capsys):
        code, _, err = run_cli(
            capsys, "enumerate", "--a", "3", "--i", "1", "--b", "2",
            "--family", "rho", "--rho", "1", "--d", "7",
        )
        assert code == 2 and "carries d=3" in err

    def test_overline_family(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--a", "2", "--i", "1", "--b", "3",
            "--family", "overline",
        )
        assert code == 0
        assert out.strip().splitlines()[-1] == "count: 3"

    def test_deterministic_order(self, capsys):
        _, first, _ = run_cli(capsys, "enumerate", "--a", "3", "--i", "2", "--b", "2")
        _, second, _ = run_cli(capsys, "enumerate", "--a", "3", "--i", "2", "--b", "2")
        assert first == second


class TestVerify:
    def test_identities_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "identities", "--jobs", "1")
        assert code == 0
        assert all("PASS" in line for line in out.strip().splitlines())

    def test_theorem1_small(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "theorem1", "--max-n", "6", "--jobs", "1"
        )
        assert code == 0 and "theorem1" in out

    def test_gf_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "gf", "--format", "json", "--jobs", "1"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["identity"] == "gf-truncation"
        assert payload[0]["passed"] is True
        assert payload[0]["counterexample"] is None

    def test_max_n_capped(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "theorem1", "--max-n", "99")
        assert code == 2 and "KLM_MAX_N" in err


class TestTable:
    def test_csv_contract(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--m-max", "3", "--d-max", "5", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["m", "d", "rho", "i", "coefficient"]
        table = {tuple(r[:4]): r[4] for r in rows[1:]}
        assert table[("1", "3", "0", "1")] == "2"
        assert table[("2", "3", "0", "1")] == "5"

    def test_rho_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--m-max", "3", "--d-max", "3", "--rho", "1",
            "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        table = {tuple(r[:4]): r[4] for r in rows[1:]}
        assert table[("2", "3", "1", "1")] == "3"
        # d = 1 rows are skipped entirely: removal is undefined there
        assert not any(key[1] == "1" for key in table)

    def test_json_big_integers_as_strings(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "--m-max", "2", "--d-max", "4", "--format", "json"
        )
        payload = json.loads(out)
        assert all(isinstance(row["coefficient"], str) for row in payload)

    def test_bad_flags(self, capsys):
        code, _, _ = run_cli(capsys, "table", "--m-max", "0", "--d-max", "3")
        assert code == 2
