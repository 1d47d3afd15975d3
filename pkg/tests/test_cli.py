import json

import pytest

from thompson_f.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_len_genword(capsys):
    code, payload = run_json(capsys, "len", "x0 x1")
    assert code == 0
    assert payload["length"] == 2


def test_len_pair_text(capsys):
    code, payload = run_json(capsys, "len", "10100:11000")
    assert code == 0
    assert payload == {"element": "10100:11000", "length": 1}


def test_len_normal_form_input(capsys):
    code, payload = run_json(capsys, "len", "x1 x5 x4^-1 x2^-1 x0^-1")
    assert code == 0
    assert payload["length"] == 9


def test_identity_token(capsys):
    code, payload = run_json(capsys, "len", "<id>")
    assert code == 0
    assert payload["length"] == 0


def test_mul_inverse_pair(capsys):
    code, payload = run_json(capsys, "mul", "x0", "x0^-1")
    assert code == 0
    assert payload["pair"] == "0:0"
    assert payload["normal_form"] == "<id>"


def test_inv(capsys):
    code, payload = run_json(capsys, "inv", "x0")
    assert code == 0
    assert payload["pair"] == "11000:10100"


def test_nf(capsys):
    code, payload = run_json(capsys, "nf", "x0^-1 x1 x0")
    assert code == 0
    assert payload["normal_form"] == "x2"
    assert payload["positive"] == [[2, 1]]
    assert payload["negative"] == []


def test_word_and_geodesic(capsys):
    code, payload = run_json(capsys, "word", "x2")
    assert code == 0
    assert payload["word"] == "x0^-1 x1 x0"
    code, payload = run_json(capsys, "geodesic", "x2")
    assert code == 0
    assert payload["length"] == 3

    code, payload = run_json(capsys, "geodesic", "x2", "--prefer", "x1")
    assert code == 0
    assert payload["length"] == 3


def test_reducers(capsys):
    code, payload = run_json(capsys, "reducers", "x0^3")
    assert code == 0
    assert payload["reducers"] == ["x0^-1"]


def test_seesaw_gen(capsys):
    code, payload = run_json(capsys, "seesaw", "gen", "--l", "2", "--m", "2")
    assert code == 0
    assert payload["normal_form"] == "x0 x1 x8 x7^-1 x5^-1 x3^-1 x0^-2"
    assert payload["reducers"] == ["x0", "x0^-1"]


def test_seesaw_verify_pass(capsys):
    code, payload = run_json(capsys, "seesaw", "verify", "--k", "2")
    assert code == 0
    assert payload["swing"] == 2


def test_seesaw_verify_failure_exit_code(capsys):
    code, payload = run_json(capsys, "seesaw", "verify", "--k", "1")
    assert code == 2
    assert payload["swing"] == 0


def test_ball_and_dump(capsys, tmp_path):
    dump = tmp_path / "ball.txt"
    code, payload = run_json(capsys, "ball", "--radius", "3", "--dump", str(dump))
    assert code == 0
    assert payload["sphere_sizes"] == [1, 4, 12, 36]
    assert payload["ball_sizes"] == [1, 5, 17, 53]
    lines = dump.read_text().splitlines()
    assert len(lines) == 53
    assert lines[0] == "0 0:0"
    dist, _, pair = lines[-1].partition(" ")
    assert dist == "3" and ":" in pair


def test_oracle_check(capsys):
    code, payload = run_json(capsys, "oracle-check", "--radius", "4")
    assert code == 0
    assert payload["checked"] == 161
    assert payload["mismatches"] == []


def test_demo_fellow_traveller(capsys):
    code, payload = run_json(capsys, "demo", "fellow-traveller", "--s", "4")
    assert code == 0
    gaps = [r["gap"] for r in payload["records"]]
    assert gaps == sorted(gaps)


def test_render_ascii(capsys):
    code, out, _ = run(capsys, "render", "x0", "--format", "ascii")
    assert code == 0
    assert "T-" in out and "T+" in out


def test_render_dot(capsys):
    code, out, _ = run(capsys, "render", "x1", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and "->" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("len", "y0"),
        ("len", "10100:10100x"),
        ("len", "100:0"),
        ("seesaw", "gen", "--l", "0", "--m", "1"),
    ],
)
def test_domain_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert "error:" in err
