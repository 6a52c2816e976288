import json

import pytest

from lrmosaic import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coeff_methods_agree(capsys):
    args = ["coeff", "--d", "3", "--n", "6", "--nu", "2,1", "--mu", "2,1", "--lambda", "3,2,1"]
    for method in ("puzzle", "tableau", "algebra", "migration"):
        code, out, _ = run(capsys, *args, "--method", method)
        assert code == 0 and out == "2\n"


def test_coeff_from_strings(capsys):
    code, out, _ = run(capsys, "coeff", "--pi", "001101", "--rho", "010101", "--sigma", "011001", "--method", "puzzle")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(
        capsys, "coeff", "--pi", "0101", "--rho", "0101", "--sigma", "0011", "--tau", "1001", "--method", "puzzle"
    )
    assert (code, out) == (0, "1\n")


def test_enumerate_counts(capsys):
    expected = {"puzzle": 21, "mosaic": 21, "tableau": 21, "bimosaic": 54, "bitableau": 54}
    for obj, value in expected.items():
        code, out, _ = run(capsys, "enumerate", "--object", obj, "--d", "2", "--n", "4", "--count")
        assert code == 0 and int(out) == value, obj


def test_enumerate_sample_is_seeded(capsys):
    args = ["enumerate", "--object", "mosaic", "--d", "2", "--n", "4", "--sample", "3", "--seed", "7"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b and len(a.splitlines()) == 3


def test_migrate_emits_traces(capsys):
    code, out, _ = run(
        capsys, "migrate", "--d", "2", "--n", "4", "--nu", "1", "--mu", "1", "--lambda", "2",
        "--source", "A", "--target", "B", "--trace",
    )
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert "mosaic" in lines[-1] and len(lines) >= 2


def test_biject_round_trip(tmp_path, capsys):
    src = tmp_path / "m.json"
    code = cli.main(["enumerate", "--object", "mosaic", "--d", "2", "--n", "4", "--sample", "1", "--output", str(src)])
    assert code == 0
    mid = tmp_path / "t.json"
    assert cli.main(["biject", "--map", "mosaic-to-tableau", "--input", str(src), "--output", str(mid)]) == 0
    back = tmp_path / "back.json"
    assert cli.main(["biject", "--map", "tableau-to-mosaic", "--d", "2", "--n", "4",
                     "--input", str(mid), "--output", str(back)]) == 0
    assert json.loads(back.read_text()) == json.loads(src.read_text())
    capsys.readouterr()


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "three-way", "--max-n", "3")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_failure_exits_one(monkeypatch, capsys):
    monkeypatch.setattr(cli, "_suites", lambda: {"jdt": lambda box: {"ok": False}})
    code, out, _ = run(capsys, "verify", "--suite", "jdt", "--d", "1", "--n", "2")
    assert code == 1 and json.loads(out)["ok"] is False


def test_render_is_deterministic(capsys):
    args = ["render", "--d", "2", "--n", "4", "--mu", "2,1"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b and "<svg" in a


@pytest.mark.parametrize(
    "argv",
    [
        ["coeff", "--d", "2", "--n", "4", "--nu", "3", "--mu", "1", "--lambda", "2"],
        ["verify", "--suite", "jdt", "--max-n", "3", "--d", "1"],
        ["render", "--d", "2", "--n", "4", "--format", "ascii"],
        ["migrate", "--d", "2", "--n", "4", "--nu", "1", "--mu", "1", "--lambda", "2", "--target", "Z"],
        ["biject"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    code, _, _ = run(capsys, *argv)
    assert code == 2
