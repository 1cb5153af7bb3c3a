import pytest

from conftest import xpoly
import expected as E
from g5census.cicensus import QuadricTriple
from g5census.grpact import quadric_word
from g5census.records import CurveRecord, InvariantViolation, read_records, write_records
from g5census.trigcensus import quintic_word
from g5census.zeta import PointCounts


def _samples():
    q, p = map(xpoly, E.HYP_ISOGENOUS)
    t = QuadricTriple(*(quadric_word(w) for w in E.CI_ISOGENOUS))
    return [CurveRecord("HYP", (5, q, p), 2),
            CurveRecord("TRI", (quintic_word(E.TRIG_ISOGENOUS), "SN"), 1),
            CurveRecord("CI", (t.P, t.Q, t.R, 3), 1)]


@pytest.mark.parametrize("rec", _samples(), ids=["hyp", "trig", "ci"])
def test_round_trip(rec):
    assert CurveRecord.from_line(rec.to_line()) == rec
    done = rec.analyse()
    assert done.counts.N == E.ISOGENOUS_COUNTS
    assert CurveRecord.from_line(done.to_line()) == done


def test_line_format():
    line = _samples()[0].to_line()
    assert line.startswith("HYP g=5 q=1 p=") and line.endswith("aut=2")


def test_file_round_trip(tmp_path):
    recs = [r.analyse() for r in _samples()]
    write_records(tmp_path / "r.txt", recs)
    assert read_records(tmp_path / "r.txt") == recs


def test_weil_violation_detected(monkeypatch):
    import g5census.records as R
    monkeypatch.setattr(R, "counts_for", lambda *a: PointCounts((40, 5, 9, 17, 33)))
    with pytest.raises(InvariantViolation):
        _samples()[0].analyse()


def test_unknown_stratum():
    with pytest.raises(ValueError):
        CurveRecord.from_line("QUAD f=1 aut=1")
