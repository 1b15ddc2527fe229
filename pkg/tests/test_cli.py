import json
import pathlib
import subprocess
import sys

from btpgeo.cli import main

DATA = pathlib.Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_n3(capsys):
    code, out, _ = run_cli(capsys, "classify", "--input", str(DATA / "n3.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["type_label"] == "middle"
    assert rep["balanced"] and rep["btp"] and rep["b_rank"] == 2
    assert rep["nilpotent_steps"] == 2
    assert rep["refs"]


def test_classify_abelian(capsys):
    code, out, _ = run_cli(capsys, "classify", "--input", str(DATA / "abelian.json"))
    assert code == 0
    rep = json.loads(out)
    assert rep["type_label"] == "chern_flat" and rep["balanced"]


def test_classify_broken_jacobi_names_form(capsys):
    code, _, err = run_cli(capsys, "classify", "--input", str(DATA / "broken_jacobi.json"))
    assert code == 2
    assert "d^2 phi" in err


def test_classify_schema_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 3, "C": [{"j": 1, "i": 2, "k": 1, "coef": "1"}],
                               "D": []}))
    code, _, err = run_cli(capsys, "classify", "--input", str(bad))
    assert code == 3
    assert "i < k" in err


def test_classify_missing_file(capsys):
    code, _, err = run_cli(capsys, "classify", "--input", "/nonexistent.json")
    assert code == 3


def test_verify_sl2c_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--example", "sl2c")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] and all(c["passed"] for c in rep["checks"])
    assert rep["refs"]


def test_verify_unknown_example(capsys):
    code, _, err = run_cli(capsys, "verify", "--example", "bogus")
    assert code == 3


def test_verify_wallach_reports_known_red_check(capsys):
    # thirteen green checks and the deliberately red Einstein-constant entry
    code, out, _ = run_cli(capsys, "verify", "--example", "wallach")
    assert code == 1
    rep = json.loads(out)
    failed = [c for c in rep["checks"] if not c["passed"]]
    assert [c["name"] for c in failed] == ["ricci.einstein_constant"]


def test_verify_n3_with_torsion_flag(capsys):
    code, out, _ = run_cli(capsys, "verify", "--example", "n3", "--torsion-a", "1/2")
    assert code == 0


def test_companion_n3(capsys):
    code, out, _ = run_cli(capsys, "companion", "--example", "n3", "--swap", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["bismut_equal"] is True
    assert rep["swapped"]["type_label"] == "non_balanced"
    assert rep["swapped"]["vaisman_pattern"] is True
    assert rep["swapped"]["eta"] == [{"coef": {"im": "0", "re": "2"},
                                     "phi": [3], "phibar": []}]


def test_companion_identity(capsys):
    code, out, _ = run_cli(capsys, "companion", "--example", "n3", "--swap", "")
    assert code == 0
    rep = json.loads(out)
    orig = {k: v for k, v in rep["original"].items() if k != "label"}
    swap = {k: v for k, v in rep["swapped"].items() if k != "label"}
    assert orig == swap
    assert rep["bismut_equal"] is True


def test_companion_rejects_distinguished_index(capsys):
    code, _, err = run_cli(capsys, "companion", "--example", "n3", "--swap", "3")
    assert code == 2


def test_companion_parameterized_family(capsys):
    code, out, _ = run_cli(capsys, "companion", "--example", "a_st(1,-1)", "--swap", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["swapped"]["vaisman_pattern"] is True


def test_companion_complex_parameter(capsys):
    code, out, _ = run_cli(capsys, "companion", "--example", "b_zt(1+1/2i,1/3)",
                           "--swap", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["original"]["solvable_steps"] == 3
    assert rep["bismut_equal"] is True


def test_sweep_small_grid(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--grid=-1,0,1")
    assert code == 0
    rep = json.loads(out)
    assert len(rep["rows"]) == 18
    assert rep["claims"]["cyt_everywhere_and_family_claims"]
    a_row = next(r for r in rep["rows"] if r["family"] == "a_st"
                 and r["params"] == ["1", "-1"])
    assert a_row["calabi_yau_type"] is True
    origin = next(r for r in rep["rows"] if r["family"] == "a_st"
                  and r["params"] == ["0", "0"])
    assert origin["nilpotent_steps"] == 2


def test_sweep_bad_grid(capsys):
    code, _, err = run_cli(capsys, "sweep", "--grid=1,q")
    assert code == 3


def test_reports_byte_stable(tmp_path, capsys):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["classify", "--input", str(DATA / "n3.json"), "--out", str(out1)]) == 0
    assert main(["classify", "--input", str(DATA / "n3.json"), "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_wallach_report(capsys):
    code, out, _ = run_cli(capsys, "wallach")
    assert code == 0
    rep = json.loads(out)
    assert rep["scalar_kind"] == "exact"
    # torsion: T^2_{13} = 1 serialized with exact string rationals
    assert rep["torsion"][1][0][2] == {"re": "1", "im": "0"}
    assert rep["riemannian_11"][0][0][1][1] == {"re": "3/4", "im": "0"}


def test_wallach_float_with_sampling(capsys):
    code, out, _ = run_cli(capsys, "wallach", "--float", "--seed", "7",
                           "--samples", "200")
    assert code == 0
    rep = json.loads(out)
    assert rep["scalar_kind"] == "float"
    samp = rep["sampling"]
    assert samp["min_sectional_numerator"] >= -1e-12
    lo, hi = samp["ricci_range"]
    assert abs(hi - lo) < 1e-9


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "btpgeo.cli", "classify"],
                          capture_output=True)
    assert proc.returncode == 3


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "btpgeo.cli", "verify",
                           "--example", "n3"], capture_output=True)
    assert proc.returncode == 0
