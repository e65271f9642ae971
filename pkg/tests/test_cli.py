import json

import pytest

from randcomplex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sample_writes_ndjson(tmp_path, capsys):
    out = tmp_path / "samples.ndjson"
    code, _, _ = run(
        capsys,
        "sample", "--n", "4", "--r", "2", "--p", "0.7,0.6,0.5",
        "--seed", "9", "--count", "3", "--out", str(out),
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 3
    for line in lines:
        rec = json.loads(line)
        assert rec["n"] == 4 and rec["r"] == 2


def test_sample_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    for path in (a, b):
        code, _, _ = run(
            capsys,
            "sample", "--n", "5", "--r", "1", "--p", "0.5,0.5",
            "--seed", "3", "--count", "4", "--out", str(path),
        )
        assert code == 0
    assert a.read_text() == b.read_text()


def test_check_roundtrip(tmp_path, capsys):
    src = tmp_path / "in.ndjson"
    code, _, _ = run(
        capsys,
        "sample", "--n", "6", "--r", "2", "--p", "0.8,0.7,0.6",
        "--seed", "2", "--count", "4", "--out", str(src),
    )
    assert code == 0
    code, out, _ = run(capsys, "check", "--in", str(src), "--what", "dimension")
    assert code == 0
    verdicts = [json.loads(line) for line in out.strip().splitlines()]
    assert len(verdicts) == 4
    assert all("dimension" in v for v in verdicts)


def test_check_certificate(tmp_path, capsys):
    src = tmp_path / "in.ndjson"
    src.write_text('{"n":4,"r":2,"maximal_faces":[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]}\n')
    code, out, _ = run(capsys, "check", "--in", str(src), "--what", "certificate")
    assert code == 0
    assert json.loads(out.strip())["verdict"] == "Certified"


def test_enumerate_output(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2", "--r", "1", "--p", "0.5,0.5")
    assert code == 0
    body = json.loads(out)
    assert body["count"] == 5


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--r", "1", "--p-grid", "0.6,0.5;1,0")
    assert code == 0
    assert "[PASS] total_mass" in out


def test_mc_json(capsys):
    code, out, _ = run(
        capsys,
        "mc", "--metric", "connected_fraction", "--n", "5", "--r", "1",
        "--p", "1,1", "--trials", "10", "--seed", "0",
    )
    assert code == 0
    assert json.loads(out)["estimate"] == 1.0


def test_sweep_csv_deterministic(tmp_path, capsys):
    args = (
        "sweep", "--alphas", "0:0.4:2;0.2;0.1", "--n", "15",
        "--trials", "8", "--metric", "connected_fraction", "--seed", "11",
    )
    code, out1, _ = run(capsys, *args)
    assert code == 0
    code, out2, _ = run(capsys, *args)
    assert out1 == out2
    header = out1.splitlines()[0]
    assert header == "alpha0,alpha1,alpha2,n,trials,metric,estimate,ci_low,ci_high,regime"
    assert len(out1.strip().splitlines()) == 3  # header + 2 cells


def test_law_commands(capsys):
    code, out, _ = run(capsys, "law", "link", "--p", "0.6,0.5,0.4", "--k", "1")
    assert code == 0
    assert json.loads(out)["p"] == pytest.approx([0.6 * 0.25 * 0.4])

    code, out, _ = run(capsys, "law", "preset", "--name", "linial_meshulam", "--value", "0.4")
    assert code == 0
    assert json.loads(out)["p"] == [1.0, 1.0, 0.4]

    code, out, _ = run(capsys, "law", "degree", "--p", "0.5,0.2,1", "--n", "50", "--k", "0")
    assert json.loads(out)["trials"] == 49

    code, out, _ = run(capsys, "law", "links-intersection", "--p", "0.6,0.5,0.4", "--k", "2")
    assert json.loads(out)["p"] == pytest.approx([0.15, 0.08])

    code, out, _ = run(capsys, "law", "intersect", "--p", "0.5,0.5", "--q", "0.5,0.4")
    assert json.loads(out)["p"] == pytest.approx([0.25, 0.2])

    code, out, _ = run(capsys, "law", "restriction", "--p", "0.7,0.2")
    assert json.loads(out)["p"] == pytest.approx([0.7, 0.2])


def test_usage_error_exit_codes(capsys):
    code, _, err = run(capsys, "sample", "--n", "3", "--r", "1", "--p", "0.5")
    assert code == 2
    assert "error" in err.lower()
    code, _, err = run(capsys, "check", "--in", "/nonexistent/file", "--what", "connected")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sample", "--n", "3"])  # missing required flags
    assert exc.value.code == 2


def test_bad_alphas_rejected(capsys):
    code, _, err = run(
        capsys,
        "sweep", "--alphas", "0.1;0.2", "--n", "10", "--trials", "2",
    )
    assert code == 2
    assert "alpha" in err
