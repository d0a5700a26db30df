from homhopf.cli import main
from homhopf.textfmt import catalog_document, parse_document, realize
from homhopf import QQ


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_on_exported_catalog_file(tmp_path, capsys):
    path = tmp_path / "taft.hh"
    path.write_text(catalog_document("taft-twisted", QQ, QQ.coerce(2)), encoding="utf-8")
    code, out, err = run(capsys, "check", str(path))
    assert code == 0
    assert "OVERALL PASS" in out
    assert err == ""


def test_check_reports_are_byte_identical(tmp_path, capsys):
    path = tmp_path / "bundle.hh"
    path.write_text(catalog_document("dual-number-bundle", QQ, QQ.coerce(2)), encoding="utf-8")
    code1, out1, _ = run(capsys, "check", str(path))
    code2, out2, _ = run(capsys, "check", str(path))
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_check_failure_exits_2(tmp_path, capsys):
    text = catalog_document("taft-twisted", QQ, QQ.coerce(2))
    broken = text.replace("ANTIPODE 2 : 0 0 0 1", "ANTIPODE 2 : 0 0 1 0")
    path = tmp_path / "broken.hh"
    path.write_text(broken, encoding="utf-8")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 2
    assert "OVERALL FAIL" in out


def test_witness_flag_prints_counterexamples(tmp_path, capsys):
    text = catalog_document("taft-twisted", QQ, QQ.coerce(2))
    broken = text.replace("ANTIPODE 2 : 0 0 0 1", "ANTIPODE 2 : 0 0 1 0")
    path = tmp_path / "broken.hh"
    path.write_text(broken, encoding="utf-8")
    _, plain, _ = run(capsys, "check", str(path))
    _, witnessed, _ = run(capsys, "check", str(path), "--witness")
    assert "[at " not in plain
    assert "[at " in witnessed


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "check", "/nonexistent/nope.hh")
    assert code == 1
    assert "error:" in err


def test_parse_error_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.hh"
    path.write_text("FORMAT 1\nFIELD GF 4\n", encoding="utf-8")
    code, _, err = run(capsys, "check", str(path))
    assert code == 1
    assert "not prime" in err


def test_unknown_subcommand_exits_1(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1


def test_construct_biproduct_and_antipode(tmp_path, capsys):
    src = tmp_path / "bundle.hh"
    src.write_text(catalog_document("dual-number-bundle", QQ, QQ.coerce(2)), encoding="utf-8")
    out_path = tmp_path / "biproduct.hh"
    code, out, _ = run(capsys, "construct", "biproduct", str(src), "--emit", str(out_path))
    assert code == 0
    assert "constructed BIALGEBRA" in out
    emitted = out_path.read_text(encoding="utf-8")
    real = realize(parse_document(emitted))
    assert ("BIALGEBRA", "constructed") in real.structures

    hopf_path = tmp_path / "biproduct_hopf.hh"
    code, out, _ = run(capsys, "antipode", str(src), "--emit", str(hopf_path))
    assert code == 0
    assert "S(z⊗1) = z⊗a" in out
    assert "S(z⊗a) = -z⊗1" in out
    code, out, _ = run(capsys, "check", str(hopf_path))
    assert code == 0


def test_construct_gate_refusal_exits_2(tmp_path, capsys):
    text = catalog_document("dual-number-bundle", QQ, QQ.coerce(2))
    # break the coaction grading so the R4 gate refuses the biproduct
    broken = text.replace("MAP 1 : 0 0 0 2", "MAP 1 : 0 2 0 0")
    src = tmp_path / "bundle.hh"
    src.write_text(broken, encoding="utf-8")
    code, _, err = run(capsys, "construct", "biproduct", str(src))
    assert code == 2
    assert "refused" in err


def test_construct_smash_and_tsmash(tmp_path, capsys):
    src = tmp_path / "bundle.hh"
    src.write_text(catalog_document("taft-bundle", QQ, QQ.coerce(2)), encoding="utf-8")
    code, out, _ = run(capsys, "construct", "smash", str(src), "--name", "sm")
    assert code == 0 and "constructed ALGEBRA sm (dim 8)" in out
    code, out, _ = run(capsys, "construct", "cosmash", str(src))
    assert code == 0
    code, out, _ = run(capsys, "construct", "tsmash", str(src), "--t", "coaction")
    assert code == 0


def test_braiding_and_ybe(tmp_path, capsys):
    src = tmp_path / "bundle.hh"
    src.write_text(catalog_document("dual-number-bundle", QQ, QQ.coerce(2)), encoding="utf-8")
    mat_path = tmp_path / "c.mat"
    code, out, _ = run(capsys, "braiding-test", str(src), "--modules", "yd", "yd",
                       "--emit-matrix", str(mat_path))
    assert code == 0
    assert "inverse.left" in out
    rows = mat_path.read_text(encoding="utf-8").strip().split("\n")
    assert len(rows) == 4
    code, out, _ = run(capsys, "ybe-test", str(src), "--modules", "yd", "yd", "yd")
    assert code == 0
    assert "HYBE" in out


def test_quasitriangular_check(tmp_path, capsys):
    src = tmp_path / "r.hh"
    src.write_text(catalog_document("kz2-rmatrix", QQ), encoding="utf-8")
    code, out, _ = run(capsys, "quasitriangular-check", str(src))
    assert code == 0
    assert "agreement" in out


def test_catalog_commands(tmp_path, capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert "kz2-rmatrix" in out
    code, out1, _ = run(capsys, "catalog", "show", "taft-biproduct", "--param", "2")
    assert code == 0
    code, out2, _ = run(capsys, "catalog", "show", "taft-biproduct", "--param", "2")
    assert out1 == out2
    code, out, _ = run(capsys, "catalog", "check", "dual-number-biproduct",
                       "--field", "GF7", "--param", "3")
    assert code == 0
    assert "OVERALL PASS" in out
    code, _, err = run(capsys, "catalog", "check", "nope")
    assert code == 1
    code, _, err = run(capsys, "catalog", "check")
    assert code == 1


def test_catalog_rmatrix_refused_over_gf2(capsys):
    code, _, err = run(capsys, "catalog", "check", "kz2-rmatrix", "--field", "GF2")
    assert code == 2
    assert "refused" in err
