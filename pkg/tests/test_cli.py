import io
import json
import subprocess
import sys

import numpy as np
import pytest

from dirac4 import cli, params, unitary

ID = {"k": [1, 0, 0, 0], "m": [1, 0, 0, 0], "n": [0, 0, 0, 0], "l": [0, 0, 0, 0]}


def call(argv, doc=None):
    out = io.StringIO()
    stdin = io.StringIO("" if doc is None else (doc if isinstance(doc, str) else json.dumps(doc)))
    code = cli.run(argv, stdin=stdin, stdout=out)
    text = out.getvalue()
    assert text.endswith("\n") and text.count("\n") == 1
    return code, json.loads(text), text


def cplx(pair):
    return complex(*pair)


def test_det_of_identity_is_exact():
    code, _, text = call(["det"], ID)
    assert code == 0 and text == '{"det":[1.0,0.0]}\n'


def test_compose_matches_library(rng):
    p1, p2 = (params.from_matrix(U) for U in unitary.haar_su4(rng, 2))
    code, out, _ = call(["compose"], {"left": p1.to_json(), "right": p2.to_json()})
    assert code == 0
    got = params.ParamsKMNL.from_json(out["params"])
    assert got.allclose(params.compose(p1, p2), 0)
    code2, out2, _ = call(["compose"], [p1.to_json(), p2.to_json()])
    assert out2 == out


def test_invert_roundtrip(rng):
    p = params.from_matrix(unitary.haar_su4(rng))
    code, out, _ = call(["invert"], p.to_json())
    inv = params.ParamsKMNL.from_json(out["params"])
    assert code == 0
    assert np.allclose(params.to_matrix(inv) @ params.to_matrix(p), np.eye(4), atol=1e-13)


def test_singular_inverse_is_input_error():
    z = {c: [0, 0, 0, 0] for c in "kmnl"}
    code, out, _ = call(["invert"], z)
    assert code == 2 and out["code"] == "SINGULAR"
    assert set(out) == {"code", "message", "context"}


@pytest.mark.parametrize("doc,code_name", [
    ("not json", "INPUT"),
    ({"k": [1, 0, 0]}, "SHAPE"),
    ({"k": [1, 0, 0, 0], "m": [1, 0, 0, 0], "n": [0, 0, 0, 0], "l": ["x", 0, 0, 0]}, "SHAPE"),
])
def test_malformed_input_exit_2(doc, code_name):
    code, out, _ = call(["det"], doc)
    assert code == 2 and out["code"] == code_name


@pytest.mark.parametrize("argv", [["nope"], ["det", "--seed", "-1"], ["sample", "--seed", str(2 ** 64)],
                                  ["sample", "--count", "0"], ["det", "--tol", "0"], []])
def test_usage_errors_exit_2(argv):
    code, out, _ = call(argv, ID)
    assert code == 2 and out["code"] == "USAGE"


def test_missing_file_is_input_error(tmp_path):
    code, out, _ = call(["det", "--input", str(tmp_path / "absent.json")])
    assert code == 2 and out["code"] == "INPUT"


def test_input_file_is_not_mutated(tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps(ID))
    before = f.read_bytes()
    code, _, _ = call(["check-unitary", "--input", str(f)])
    assert code == 0 and f.read_bytes() == before


def test_decompose_bases():
    code, out, _ = call(["decompose"], ID)
    assert code == 0 and out["basis"] == "gellmann" and cplx(out["coords"]["c0"]) == 1
    code, out, _ = call(["decompose", "--basis", "dirac"], ID)
    assert code == 0 and cplx(out["coords"]["gamma"]) == 1 and len(out["coords"]) == 16


def _g3(rho, alpha):
    return unitary.build_two_param(3, rho, alpha).to_json()


def test_check_unitary_passes_on_two_parameter_element():
    code, out, _ = call(["check-unitary"], _g3(0.4, 1.1))
    assert code == 0 and out["verdict"] == "PASS"
    assert len(out["residuals"]) == 16 and out["max"] <= 1e-10


def test_check_unitary_fails_on_det1_control(rng):
    p = params.from_matrix(unitary.random_det1(rng))
    code, out, _ = call(["check-unitary"], p.to_json())
    assert code == 1 and out["verdict"] == "FAIL"


def test_tolerance_flag_and_environment(monkeypatch, rng):
    p = params.from_matrix(unitary.haar_su4(rng)).to_json()
    code, out, _ = call(["check-unitary"], p)
    assert out["tol"] == 1e-10 and code == 0
    monkeypatch.setenv("DIRAC4_TOL", "1e-20")
    code, out, _ = call(["check-unitary"], p)
    assert out["tol"] == 1e-20 and code == 1
    code, out, _ = call(["check-unitary", "--tol", "1e-3"], p)
    assert out["tol"] == 1e-3 and code == 0
    monkeypatch.setenv("DIRAC4_TOL", "abc")
    code, out, _ = call(["check-unitary"], p)
    assert code == 2 and out["code"] == "INPUT"


def test_check_unitary_pseudo_signatures():
    from dirac4 import pseudo
    G = pseudo.pseudo_elementary_exp("su22", 2, 0.7)
    p = params.from_matrix(G).to_json()
    code, out, _ = call(["check-unitary", "--signature", "su22"], p)
    assert code == 0 and out["signature"] == "su22"
    code, _, _ = call(["check-unitary"], p)
    assert code == 1
    G31 = pseudo.pseudo_elementary_exp("su31", 9, 0.7)
    code, out, _ = call(["check-unitary", "--signature", "su31"], params.from_matrix(G31).to_json())
    assert code == 0 and len(out["residuals"]) == 16


def test_case_embedding():
    code, out, _ = call(["det", "--case", "B"], {"k": [1, 0, 0, 0]})
    assert code == 0 and cplx(out["det"]) == 1
    code, out, _ = call(["det", "--case", "B"], {"k": [1, 0, 0, 0], "m": [2, 0, 0, 0]})
    assert code == 2 and out["code"] == "SHAPE"


def test_factorize_reconstructs(rng):
    from dirac4 import factor
    U = unitary.haar_su4(rng)
    doc = {"matrix": [[[z.real, z.imag] for z in row] for row in U]}
    code, out, _ = call(["factorize", "--seed", "3"], doc)
    assert code == 0 and out["residual"] <= 1e-8
    f = factor.FactorAngles(**{k: np.array(v) for k, v in out["angles"].items()})
    assert np.max(np.abs(factor.factor_product(f) - U)) <= 1e-8


def test_factorize_rejects_non_unitary(rng):
    G = unitary.random_det1(rng)
    code, out, _ = call(["factorize"], [[[z.real, z.imag] for z in row] for row in G])
    assert code == 2 and out["code"] == "NOT_UNITARY"


def test_emit_tables_default():
    code, out, _ = call(["emit-tables"])
    assert code == 0 and len(out["mult_table"]) == 225 and len(out["reconciliation"]) == 20


@pytest.mark.parametrize("sig", ["su4", "su22", "su31"])
def test_emit_tables_per_signature(sig):
    code, out, _ = call(["emit-tables", "--signature", sig])
    assert code == 0 and out["signature"] == sig
    assert len(out["generators"]) == 15 and out["not_eta_compatible"] == []
    if sig == "su31":
        assert out["mult_table"] is None
    else:
        assert len(out["mult_table"]) == 225
    assert ("commuting_triples" in out) == (sig == "su22")


def test_sample_is_deterministic():
    a = call(["sample", "--seed", "9", "--count", "3"])[2]
    b = call(["sample", "--seed", "9", "--count", "3"])[2]
    c = call(["sample", "--seed", "10", "--count", "3"])[2]
    assert a == b and a != c
    for s in json.loads(a)["samples"]:
        assert unitary.is_special_unitary(params.ParamsKMNL.from_json(s))


def test_no_negative_zero_in_output():
    _, _, text = call(["compose"], {"left": ID, "right": ID})
    assert "-0.0" not in text


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "dirac4.cli", "det"], input=json.dumps(ID),
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == '{"det":[1.0,0.0]}\n'
