import json
from pathlib import Path

import pytest

from qsl2.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("alg,expr,want", [
    ("uq", "E*K", "q^-2*K*E"),
    ("uq", "E*F - F*E", "(q/(-q^2 + 1))*K^-1 + (-q/(-q^2 + 1))*K"),
    ("uq", "K*K^-1", "1"),
    ("oq", "X11*X22 - q*X12*X21", "1"),
    ("oq", "X21*X12", "X12*X21"),
])
def test_normalize(capsys, alg, expr, want):
    code, out, _ = run(capsys, "normalize", alg, expr)
    assert code == 0
    assert out.strip() == want


@pytest.mark.parametrize("alg,expr", [("uq", "F*E*K + E^2*F"), ("oq", "X22*X11*X12")])
def test_normalize_idempotent(capsys, alg, expr):
    _, once, _ = run(capsys, "normalize", alg, expr)
    _, twice, _ = run(capsys, "normalize", alg, once.strip())
    assert once == twice


def test_normalize_json(capsys):
    code, out, _ = run(capsys, "normalize", "oq", "X11*X12", "--format", "json")
    assert code == 0 and json.loads(out) == {"algebra": "oq", "normal_form": "q*X12*X11"}


def test_parse_error_exit_two(capsys):
    code, _, err = run(capsys, "normalize", "uq", "E**")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "pair", "E", "X33")
    assert code == 2


def test_hopf_check(capsys):
    code, out, _ = run(capsys, "hopf-check", "--samples", "5", "--degree", "2")
    assert code == 0 and "FAIL" not in out


@pytest.mark.parametrize("alg", ["uq", "oq"])
def test_hopf_check_detects_fault(capsys, alg):
    code, out, _ = run(capsys, "hopf-check", "--algebra", alg, "--samples", "5", "--degree", "2",
                       "--inject-fault", "--format", "json")
    assert code == 1
    doc = json.loads(out)
    assert doc["passed"] is False


@pytest.mark.parametrize("u,a,want", [("K", "X11", "q"), ("E", "X12", "1"), ("E*F", "X11*X22", "q"),
                                      ("F", "X11", "0")])
def test_pair(capsys, u, a, want):
    code, out, _ = run(capsys, "pair", u, a)
    assert code == 0 and out.strip() == want


def test_act(capsys):
    assert run(capsys, "act", "E*K^-1", "X11")[1].strip() == "q*X21"
    assert run(capsys, "act", "K", "X11", "--side", "left")[1].strip() == "q*X11"
    assert run(capsys, "act", "F", "1,0,0", "--module", "2")[1].strip() == "0, 1, 0"
    code, _, _ = run(capsys, "act", "F", "1,0", "--module", "2")
    assert code == 2


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "E*K^-1", "--degree", "1", "--homogeneous", "--format", "json")
    assert code == 0
    assert sorted(json.loads(out)["elements"]) == ["X21", "X22"]


def test_coideal_check(capsys):
    assert run(capsys, "coideal-check", "E*K^-1")[0] == 0
    code, out, _ = run(capsys, "coideal-check", "E", "--degree", "2")
    assert code == 1 and "K" in out
    with pytest.raises(SystemExit) as exc:
        main(["coideal-check", "E", "--degree", "0"])
    assert exc.value.code == 2


def test_takeuchi(capsys):
    code, out, _ = run(capsys, "takeuchi", "X21", "X22", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["elements"]) == 2


def test_crystal_golden(capsys):
    code, out, _ = run(capsys, "crystal", "B(2)(x)B(2)", "--format", "dot")
    assert code == 0
    assert out == (GOLDEN / "b2_tensor_b2.dot").read_text(encoding="utf-8")


def test_crystal_decompose(capsys):
    assert run(capsys, "crystal", "B(3)(x)B(1)", "--decompose")[1].strip() == "4 2"
    code, out, _ = run(capsys, "crystal", "B(1)(x)B(1)", "--format", "json")
    assert code == 0 and len(json.loads(out)["vertices"]) == 4
    assert run(capsys, "crystal", "B(2")[0] == 2


def test_serre(capsys, tmp_path):
    code, out, _ = run(capsys, "serre", "2")
    assert code == 0 and "no Serre relations" in out
    code, out, _ = run(capsys, "serre", "2,-1;-1,2")
    assert code == 0 and len(out.strip().splitlines()) == 4
    f = tmp_path / "b2.txt"
    f.write_text("2 -2\n-1 2\n")
    code, out, _ = run(capsys, "serre", str(f), "--symmetrizers", "1,2")
    assert code == 0 and "E1^3" in out
    assert run(capsys, "serre", "2,x;-1,2")[0] == 2
    assert run(capsys, "serre", "2,-1;-1")[0] == 2


def test_vocke(capsys):
    code, out, _ = run(capsys, "vocke", "--degree", "2")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "vocke", "--pair-lam", "1", "--pair-lam-prime", "1", "--degree", "2")
    assert code == 1
    assert run(capsys, "vocke", "--pair-lam", "1")[0] == 2


def test_argparse_errors():
    for argv in (["normalize", "uq", "E", "--bogus"], ["frobnicate"], ["pair", "E"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "nf.txt"
    code, out, _ = run(capsys, "normalize", "uq", "F*E", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().strip() == "F*E"
