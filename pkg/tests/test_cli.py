import json

import pytest

from l1homology import corpus
from l1homology.cli import main


def data(name):
    return str(corpus.path(name))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_homology(capsys):
    code, out, _ = run(capsys, "homology", "--input", data("torus7"))
    assert code == 0 and out.split("\n")[:3] == ["b0 = 1", "b1 = 2", "b2 = 1"]


def test_l1norm_tetrahedron(capsys, tmp_path):
    dump = tmp_path / "lp.txt"
    out_file = tmp_path / "chain.json"
    code, out, _ = run(capsys, "l1norm", "--input", data("boundary_tetrahedron"),
                       "--out", str(out_file), "--dump-lp", str(dump))
    assert code == 0 and out.strip() == "4/1"
    assert json.loads(out_file.read_text())["value"] == "4/1"
    assert dump.read_text().startswith("min\nc: ")


def test_l1norm_basis_class(capsys):
    code, out, _ = run(capsys, "l1norm", "--input", data("torus7"), "--degree", "1", "--class-index", "1")
    assert code == 0 and out.strip() == "3/1"
    code, _, err = run(capsys, "l1norm", "--input", data("torus7"), "--degree", "1", "--class-index", "5")
    assert code == 1 and err.startswith("NoSuchClass")


def test_l1norm_explicit_cycle(capsys, tmp_path):
    inst = {"facets": [[0, 1, 2], [0, 2, 3]],
            "cycle": {"degree": 1, "terms": [{"simplex": [0, 1], "coeff": "1"}, {"simplex": [1, 2], "coeff": "1"},
                                              {"simplex": [2, 3], "coeff": "1"}, {"simplex": [0, 3], "coeff": "-1"}]}}
    path = tmp_path / "in.json"
    path.write_text(json.dumps(inst))
    code, out, _ = run(capsys, "l1norm", "--input", str(path))
    assert code == 0 and out.strip() == "0/1"


def test_certificate_then_verify(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    code, _, _ = run(capsys, "certificate", "--input", data("genus2"), "--out", str(cert))
    assert code == 0
    code, out, _ = run(capsys, "verify", "--input", data("genus2"), "--certificate", str(cert))
    assert code == 0
    _, norm, _ = run(capsys, "l1norm", "--input", data("genus2"))
    assert out == norm


@pytest.mark.parametrize("tamper, error", [("value", "NotACocycle"), ("scale", "PairingNotOne")])
def test_verify_tampered(capsys, tmp_path, tamper, error):
    cert = tmp_path / "cert.json"
    run(capsys, "certificate", "--input", data("torus7"), "--degree", "1", "--out", str(cert))
    payload = json.loads(cert.read_text())
    if tamper == "value":
        payload["values"][0]["value"] = "7/1"
    else:
        for v in payload["values"]:
            num, den = v["value"].split("/")
            v["value"] = f"{2 * int(num)}/{den}"
    cert.write_text(json.dumps(payload))
    code, _, err = run(capsys, "verify", "--input", data("torus7"), "--degree", "1", "--certificate", str(cert))
    assert code == 1 and err.startswith(error)


def test_volume(capsys, tmp_path):
    code, out, _ = run(capsys, "volume", "--input", data("genus2"), "--subdivide", "0")
    value = out.strip().split()[-1]
    num, den = map(int, value.split("/"))
    assert code == 0 and num / den >= 4 and num >= 4 * den
    code, _, err = run(capsys, "volume", "--input", data("rp2_6"))
    assert code == 1 and err.startswith("NotOrientable")


def test_measure_selftest(capsys):
    code, out, _ = run(capsys, "measure-selftest", "--input", data("boundary_tetrahedron"), "--samples", "10")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 7


def test_cover_section(capsys, tmp_path):
    out_file = tmp_path / "section.json"
    code, out, _ = run(capsys, "cover-section", "--input", data("circle_double_cover"), "--out", str(out_file))
    assert code == 0 and "section verified" in out
    assert {"base": [0, 2], "lift": [0, 5]} in json.loads(out_file.read_text())["assignment"]


def test_bad_cover_is_domain_error(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"total": {"facets": [[0, 1], [1, 2], [2, 3], [0, 3]]},
                                "base": {"facets": [[0, 1], [1, 2], [0, 2]]},
                                "projection": [[0, 0], [1, 1], [2, 2], [3, 1]]}))
    code, _, err = run(capsys, "cover-section", "--input", str(path))
    assert code == 1 and err.startswith("NotACovering")


def test_malformed_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"facets": [[0, 1,\n')
    code, _, err = run(capsys, "homology", "--input", str(path))
    assert code == 2 and "line 2 column 1" in err


def test_schema_error_and_degenerate_facet(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"faces": []}')
    assert run(capsys, "homology", "--input", str(path))[0] == 2
    path.write_text('{"facets": [[0, 0, 1]]}')
    code, _, err = run(capsys, "homology", "--input", str(path))
    assert code == 1 and err.startswith("InvalidFacet")


def test_report_file(capsys, tmp_path):
    report = tmp_path / "report.json"
    run(capsys, "l1norm", "--input", data("torus7"), "--degree", "1", "--report", str(report))
    rep = json.loads(report.read_text())
    assert rep["command"] == "l1norm" and rep["outputs"]["l1_seminorm"] == "3/1"
    assert len(rep["input_digest"]) == 64 and rep["timing"] >= 0 and rep["pivots"] >= 0
