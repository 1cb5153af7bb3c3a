import hashlib
import json

import pytest

from g5census import cli


def _sha(p):
    return hashlib.sha256(p.read_bytes()).hexdigest()


def test_hyp_genus3_threads_and_resume(tmp_path):
    a, b, c = tmp_path / "a.txt", tmp_path / "b.txt", tmp_path / "c.txt"
    ck = tmp_path / "ck.json"
    assert cli.main(["census", "--stratum", "hyp", "--genus", "3", "--out", str(a)]) == 0
    assert cli.main(["census", "--stratum", "hyp", "--genus", "3", "--out", str(b), "--threads", "2"]) == 0
    assert cli.main(["census", "--stratum", "hyp", "--genus", "3", "--out", str(c),
                     "--checkpoint", str(ck), "--stop-after", "4"]) == 0
    assert not c.exists() and len(json.loads(ck.read_text())["body"]["done"]) == 4
    assert cli.main(["census", "--stratum", "hyp", "--genus", "3", "--out", str(c),
                     "--checkpoint", str(ck), "--resume"]) == 0
    assert len(a.read_text().splitlines()) == 76
    assert _sha(a) == _sha(b) == _sha(c)


def test_corrupt_checkpoint_rejected(tmp_path):
    ck = tmp_path / "ck.json"
    out = tmp_path / "o.txt"
    cli.main(["census", "--stratum", "hyp", "--genus", "2", "--out", str(out),
              "--checkpoint", str(ck), "--stop-after", "2"])
    data = json.loads(ck.read_text())
    data["body"]["done"]["q1"] = ["HYP g=2 q=1 p=1 aut=2"]
    ck.write_text(json.dumps(data))
    with pytest.raises(ValueError, match="corrupt"):
        cli.main(["census", "--stratum", "hyp", "--genus", "2", "--out", str(out),
                  "--checkpoint", str(ck), "--resume"])


def test_analyze_and_report(tmp_path):
    out = tmp_path / "h.txt"
    assert cli.main(["census", "--stratum", "hyp", "--genus", "3", "--out", str(out)]) == 0
    assert cli.main(["analyze", str(out)]) == 0
    assert all(" N=" in l for l in out.read_text().splitlines())
    assert cli.main(["report", str(out), "--out", str(tmp_path / "rep")]) == 0
    md = (tmp_path / "rep" / "report.md").read_text()
    assert "Mass: 32 + 0 + 0 = 32" in md
    assert (tmp_path / "rep" / "newton_counts.csv").exists()


def test_report_needs_analysis(tmp_path):
    out = tmp_path / "h.txt"
    cli.main(["census", "--stratum", "hyp", "--genus", "2", "--out", str(out)])
    with pytest.raises(SystemExit):
        cli.main(["report", str(out), "--out", str(tmp_path / "rep")])


def test_invariant_exit_code(tmp_path, monkeypatch):
    out = tmp_path / "h.txt"
    out.write_text("HYP g=2 q=1 p=20 aut=2\n")
    import g5census.records as R
    from g5census.zeta import PointCounts
    monkeypatch.setattr(R, "counts_for", lambda *a: PointCounts((30, 5)))
    assert cli.main(["analyze", str(out)]) == cli.EXIT_INVARIANT


def test_verify_flags_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    # L-polynomial inconsistent with the counts
    bad.write_text("HYP g=2 q=1 p=20 aut=2 N=3,5 L=1,0 NP=0,0,1,1\n")
    assert cli.main(["verify", "--quick", str(bad)]) == cli.EXIT_VERIFY
    assert "FAIL bad.txt: zeta round-trip" in capsys.readouterr().out


def test_genus_only_for_hyp():
    with pytest.raises(SystemExit):
        cli.main(["census", "--stratum", "trig", "--genus", "3", "--out", "x"])
