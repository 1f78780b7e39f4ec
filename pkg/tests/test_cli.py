import json

import pytest

from btquotient.cli import EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from btquotient.quotient import build_quotient
from btquotient.serialize import from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quotient_json_round_trip(capsys):
    code, out, _ = run(capsys, "quotient", "--q", "2", "--d", "4", "--window", "10")
    assert code == EXIT_OK
    assert from_json(out) == build_quotient(2, 4, 10)


def test_quotient_default_window_and_file_output(tmp_path, capsys):
    path = tmp_path / "g.json"
    code, out, _ = run(capsys, "quotient", "--q", "3", "--d", "3", "--out", str(path))
    assert code == EXIT_OK and out == ""
    assert from_json(path.read_text()).window == 8


def test_quotient_dot(capsys):
    code, out, _ = run(capsys, "quotient", "--q", "2", "--d", "6", "--window", "12", "--format", "dot")
    assert code == EXIT_OK
    g = build_quotient(2, 6, 12)
    labels = [int(ln.split('label="')[1].split('"')[0]) for ln in out.splitlines() if " -- " in ln]
    assert sum(labels) == g.total_edges()


def test_quotient_ascii_gamma_tilde(capsys):
    code, out, _ = run(capsys, "quotient", "--q", "2", "--d", "4", "--variant", "gamma-tilde",
                       "--format", "ascii")
    assert code == EXIT_OK
    assert "X0 -- X0  x2" in out


def test_verify_pass(capsys):
    code, out, err = run(capsys, "verify", "--q", "2", "--d", "3")
    assert code == EXIT_OK
    assert json.loads(out)["pass"] is True
    assert err.startswith("PASS")


def test_verify_budget(capsys):
    code, _, _ = run(capsys, "verify", "--q", "2", "--d", "3", "--budget", "100")
    assert code == EXIT_BUDGET


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("BTQ_BUDGET", "100")
    code, _, err = run(capsys, "cosets", "--q", "2", "--d", "3", "--n", "0", "--m", "1")
    assert code == EXIT_BUDGET and "budget" in err


def test_cosets(capsys):
    code, out, _ = run(capsys, "cosets", "--q", "2", "--d", "5", "--n", "1", "--m", "2",
                       "--format", "json")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["double_cosets"] == rec["closed_form"] == 3
    assert rec["upsilon_size"] == rec["upsilon_size_formula"] == 96


def test_cosets_mismatch_exit(capsys, monkeypatch):
    monkeypatch.setattr("btquotient.cli.closed_form_multiplicity", lambda *a: -1)
    code, _, _ = run(capsys, "cosets", "--q", "2", "--d", "3", "--n", "0", "--m", "1")
    assert code == EXIT_MISMATCH


def test_orbits_and_irreducibles(capsys):
    code, out, _ = run(capsys, "orbits", "--q", "2", "--d", "4")
    assert code == EXIT_OK and out.split() == ["6", "6", "3", "2"]
    code, out, _ = run(capsys, "irreducibles", "--q", "2", "--d", "3")
    assert out.split() == ["t^3+t+1", "t^3+t^2+1"]


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "--q", "2", "--d", "2", "--matrix", "[[1,0],[0,t^4+t^2+1]]")
    assert code == EXIT_OK and out.strip() == "2"


@pytest.mark.parametrize("argv", [
    ["quotient", "--q", "6", "--d", "2"],
    ["quotient", "--q", "2", "--d", "0"],
    ["quotient", "--q", "2", "--d", "5", "--window", "3"],
    ["verify", "--q", "2", "--d", "2", "--f", "t^2+1"],
    ["verify", "--q", "2", "--d", "3", "--f", "t^2+t+1"],
    ["distance", "--q", "2", "--d", "2", "--matrix", "[[1,0]]"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err.startswith("error:")


def test_missing_argument_exits_with_usage():
    with pytest.raises(SystemExit) as exc:
        main(["cosets", "--q", "2", "--d", "3"])
    assert exc.value.code == EXIT_USAGE
