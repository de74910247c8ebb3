import json
import shutil
import subprocess

import pytest

from hyperzagreb.cli import run
from hyperzagreb.families import parse_family
from hyperzagreb.io import format_hg, parse_hg

from .test_families import GRID


def hz(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_then_compute(tmp_path, capsys):
    path = tmp_path / "s.hg"
    code, _, _ = hz(capsys, "generate", "sunflower:m=3,p=2,k=3", "-o", str(path))
    assert code == 0
    assert path.read_text() == "5 3\n0 1 2\n0 1 3\n0 1 4\n"
    code, out, _ = hz(capsys, "compute", str(path))
    assert code == 0
    assert out.splitlines()[:2] == ["HM1=147", "HM2=243"]
    assert "edge=0 1 2 sum=7 product=9" in out


def test_compute_json_and_threads(tmp_path, capsys):
    path = tmp_path / "k.json"
    hz(capsys, "generate", "complete:n=4", "--format", "json", "-o", str(path))
    outs = {hz(capsys, "compute", str(path), "--json", "--threads", str(t))[1] for t in (1, 2, 8)}
    assert len(outs) == 1
    d = json.loads(outs.pop())
    assert d["hm1"] == "3724" and d["hm2"] == "6249803"


def test_compute_missing_file(capsys):
    code, _, err = hz(capsys, "compute", "missing.hg")
    assert code == 1 and "missing.hg" in err


def test_compute_invalid_file(tmp_path, capsys):
    path = tmp_path / "bad.hg"
    path.write_text("3 2\n0 1\n0 1\n")
    code, _, err = hz(capsys, "compute", str(path))
    assert code == 1 and "DuplicateEdge" in err


def test_usage_errors_exit_1(capsys):
    assert hz(capsys, "compute")[0] == 1
    assert hz(capsys, "frobnicate")[0] == 1
    assert hz(capsys, "scan", "connected:n=3", "--bogus")[0] == 1
    assert hz(capsys, "generate", "complete:n=1")[0] == 1
    assert hz(capsys, "verify", "nope")[0] == 1


@pytest.mark.parametrize("spec", GRID[:200:7] + GRID[-40::9], ids=lambda s: s.text())
def test_generate_round_trip_byte_identical(spec, capsys):
    code, out, _ = hz(capsys, "generate", spec.text())
    assert code == 0
    assert format_hg(parse_hg(out)) == out
    assert parse_hg(out) == parse_family(spec.text()).generate()


def test_closed_form_and_cross_check(capsys):
    code, out, _ = hz(capsys, "closed-form", "path:m=3,k=3")
    assert code == 0
    assert "HM1[corollary]=57" in out and "HM1[lemma]=86" in out and "HM2[lemma]=96" in out
    code, out, _ = hz(capsys, "cross-check", "path:m=3,k=3")
    assert "HM1[corollary]=57 match" in out and "HM1[lemma]=86 mismatch" in out
    code, out, _ = hz(capsys, "cross-check", "path:m=3,k=3", "--json")
    d = json.loads(out)
    assert d["structural_hm1"] == "57"


def test_verify_exit_codes(capsys):
    code, out, _ = hz(capsys, "verify", "general-upper-hm1", "--n", "4")
    assert code == 0 and "status=holds-tight" in out
    code, out, _ = hz(capsys, "verify", "ktree-lower-hm1-lemma-variant", "--k", "3", "--m", "3")
    assert code == 2 and "status=violated" in out
    code, out, _ = hz(capsys, "verify", "uniform-hypertree-upper-hm1", "--k", "3", "--m", "3", "--json")
    assert code == 0 and json.loads(out)["status"] == "holds-slack"
    assert hz(capsys, "verify", "general-upper-hm1")[0] == 1


def test_verify_cap(capsys):
    code, _, err = hz(capsys, "verify", "general-upper-hm1", "--n", "4", "--cap", "100")
    assert code == 1 and "SpaceTooLarge" in err
    assert hz(capsys, "verify", "general-upper-hm1", "--n", "4", "--cap", "100", "--cap-override")[0] == 0


def test_scan_output(capsys):
    code, out, _ = hz(capsys, "scan", "connected:n=4", "--index", "hm1")
    assert code == 0
    assert out.splitlines() == [
        "space=connected:n=4",
        "index=hm1",
        "population=1990",
        "min=16",
        "min_count=1",
        "min_witness=4:0 1 2 3",
        "max=3724",
        "max_count=1",
        "max_witness=4:0 1;0 2;0 3;1 2;1 3;2 3;0 1 2;0 1 3;0 2 3;1 2 3;0 1 2 3",
    ]


def test_claims_listing(capsys):
    code, out, _ = hz(capsys, "claims")
    assert code == 0 and "general-upper-hm1" in out


def test_qsar_commands(tmp_path, capsys):
    files = []
    for name, spec in (("a", "complete:n=3"), ("b", "star:m=3,k=3")):
        p = tmp_path / f"{name}.hg"
        hz(capsys, "generate", spec, "-o", str(p))
        files.append(str(p))
    code, out, _ = hz(capsys, "qsar-table", *files)
    assert code == 0
    assert out.splitlines() == [
        "name,hm1,hm2,interaction,activity,prediction",
        "a,189,972,183708,,",
        "b,75,27,2025,,",
    ]
    csv_in = tmp_path / "t.csv"
    csv_in.write_text("name,hm1,hm2,activity\nAspirin,4528,12345,0.85\nIbuprofen,5237,15678,0.79\n"
                      "Paracetamol,3985,10234,0.82\nCaffeine,6789,23456,0.68\n")
    out_json, preds = tmp_path / "f.json", tmp_path / "p.csv"
    code, _, _ = hz(capsys, "qsar-fit", str(csv_in), "-o", str(out_json), "--predictions", str(preds))
    assert code == 0
    assert float(json.loads(out_json.read_text())["r_squared"]) == pytest.approx(1.0)
    assert preds.read_text().splitlines()[0].endswith("activity,prediction")
    code, _, _ = hz(capsys, "qsar-fit", str(csv_in.with_name("nope.csv")))
    assert code == 1


def test_qsar_figure(capsys):
    code, out, _ = hz(capsys, "qsar-figure")
    assert code == 0
    assert "reference_line=0.98x + 0.02" in out and "reference_r_squared=0.89" in out
    code, out, _ = hz(capsys, "qsar-figure", "--csv")
    assert len(out.splitlines()) == 11


def test_console_script():
    exe = shutil.which("hz")
    if exe is None:
        pytest.skip("hz script not installed")
    proc = subprocess.run([exe, "verify", "general-upper-hm1", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "status=holds-tight" in proc.stdout
    proc = subprocess.run([exe, "compute", "missing.hg"], capture_output=True, text=True)
    assert proc.returncode == 1 and "missing.hg" in proc.stderr
