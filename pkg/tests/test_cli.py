import json

import pytest

from riordankit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGf:
    def test_pretty_egf(self, capsys):
        code, out, _ = run(capsys, "gf", "--expr", "1/sqrt(1-2*x)",
                           "--order", "7", "--kind", "egf")
        assert code == 0
        assert "1, 1, 3, 15, 105, 945, 10395" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "gf", "--expr", "x/(1-x)^2",
                           "--order", "5")
        assert code == 0
        body = json.loads(out)
        assert body["coefficients"] == ["0", "1", "2", "3", "4"]

    def test_csv_format_after_subcommand(self, capsys):
        code, out, _ = run(capsys, "gf", "--expr", "1/(1-x)", "--order", "4",
                           "--format", "csv")
        assert code == 0
        assert out.strip() == "1,1,1,1"

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "gf", "--expr", "x/(1-x", "--order", "5")
        assert code == 2
        assert "offset" in err

    def test_precondition_exit_3(self, capsys):
        code, _, err = run(capsys, "gf", "--expr", "log(2+x)", "--order", "5")
        assert code == 3
        assert "log" in err

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, "gf", "--expr", "exp(x)", "--order", "6")
        _, second, _ = run(capsys, "gf", "--expr", "exp(x)", "--order", "6")
        assert first == second


class TestRiordan:
    def test_production_table(self, capsys):
        code, out, _ = run(capsys, "riordan", "--g", "1/sqrt(1-2*x)",
                           "--f", "1/sqrt(1-2*x)-1", "--kind", "egf",
                           "--rows", "7", "--production")
        assert code == 0
        assert "10395  35685  26685  7500  930  51  1" in out
        assert "150" in out and "102" in out

    def test_from_za_triangle(self, capsys):
        code, out, _ = run(capsys, "riordan", "--from-za", "--Z", "(1+x)^2",
                           "--A", "(1+x)^3", "--kind", "egf", "--rows", "7")
        assert code == 0
        assert "15     33     12     1" in out.replace("   ", "   ")

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "riordan", "--g", "1", "--f", "x", "--rows", "3")
        assert code == 0
        assert out.splitlines()[-1].split() == ["0", "0", "1"]

    def test_invalid_array_exit_3(self, capsys):
        code, _, err = run(capsys, "riordan", "--g", "2", "--f", "x", "--rows", "3")
        assert code == 3
        assert "constant term" in err

    def test_missing_source_exit_2(self, capsys):
        code, _, err = run(capsys, "riordan", "--g", "1", "--rows", "3")
        assert code == 2


class TestChaining:
    def test_family_file_flow(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--format", "json", "riordan", "--from-za",
                           "--Z", "(1+x)^2", "--A", "(1+x)^3", "--kind", "egf",
                           "--rows", "13", "--column-sums", "2")
        assert code == 0
        family_file = tmp_path / "family.json"
        family_file.write_text(out)

        code, out, _ = run(capsys, "dhankel", "--family", str(family_file),
                           "--n", "7",
                           "--gamma", "2,12,36,80,150,252,392,576")
        assert code == 0
        assert "4334215495680000" in out
        assert "gamma-check: PASS" in out

        code, out, _ = run(capsys, "dorth", "--family", str(family_file),
                           "--count", "5", "--recurrence")
        assert code == 0
        assert "P_4 = x^4 - 22*x^3 + 123*x^2 - 168*x + 24" in out
        assert "alpha: 1, 4, 7, 10" in out

    def test_cfrac_bands_file_flow(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--format", "json", "cfrac", "--from-za",
                           "--Z", "(1+x)^2", "--A", "(1+x)^3", "--kind", "egf",
                           "--d", "2", "--order", "10")
        assert code == 0
        bands_file = tmp_path / "bands.json"
        bands_file.write_text(out)

        code, out, _ = run(capsys, "cfrac", "--bands", str(bands_file),
                           "--order", "10", "--format", "csv")
        assert code == 0
        assert out.strip() == "1,1,3,15,105,945,10395,135135,2027025,34459425"

    def test_short_family_exit_4(self, capsys, tmp_path):
        family_file = tmp_path / "short.json"
        family_file.write_text(json.dumps(
            {"d": 2, "sequences": [[1, 1, 3], [1, 2, 8]]}))
        code, _, err = run(capsys, "dhankel", "--family", str(family_file),
                           "--n", "6")
        assert code == 4
        assert "10" in err  # names the required length

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, _ = run(capsys, "dhankel", "--family",
                         str(tmp_path / "nope.json"), "--n", "3")
        assert code == 2


class TestDhankelFromSource:
    def test_gamma_check_from_production(self, capsys):
        code, out, _ = run(capsys, "dhankel", "--from-za", "--Z", "4*(1+x)^3",
                           "--A", "(1+x)^4", "--kind", "ogf", "--d", "3",
                           "--n", "8", "--gamma-check")
        assert code == 0
        assert "h: 1, 1, 1, 4, 4, 4, 16, 16, 16" in out
        assert "gamma-check: PASS" in out


class TestVerify:
    @pytest.mark.parametrize("example_id", ["e1", "e2", "e3", "e4", "e5"])
    def test_examples_pass(self, capsys, example_id):
        code, out, _ = run(capsys, "verify", example_id)
        assert code == 0
        assert f"{example_id}: PASS" in out
        assert "[FAIL]" not in out

    def test_all(self, capsys):
        code, out, _ = run(capsys, "verify", "all")
        assert code == 0
        assert out.count(": PASS") >= 5

    def test_unknown_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "nonexistent")
        assert code == 2
        assert "e1, e2, e3, e4, e5" in err

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "verify", "e4", "--format", "csv")
        assert code == 0
        assert all(line.endswith(",pass") for line in out.strip().splitlines())


class TestRemote:
    def test_requests_route_through_http(self, capsys, monkeypatch):
        from fastapi.testclient import TestClient
        import httpx

        from riordankit.service.app import app

        client = TestClient(app)
        monkeypatch.setattr(
            httpx, "post",
            lambda url, json=None, timeout=None: client.post(url, json=json))
        monkeypatch.setattr(
            httpx, "get", lambda url, timeout=None: client.get(url))

        code, out, _ = run(capsys, "--server", "http://testserver", "gf",
                           "--expr", "1/sqrt(1-2*x)", "--order", "6",
                           "--kind", "egf")
        assert code == 0
        assert "1, 1, 3, 15, 105, 945" in out

        code, _, err = run(capsys, "--server", "http://testserver", "gf",
                           "--expr", "x/(1-x", "--order", "5")
        assert code == 2
        assert "offset" in err

        code, out, _ = run(capsys, "--server", "http://testserver",
                           "verify", "e4")
        assert code == 0
        assert "e4: PASS" in out
