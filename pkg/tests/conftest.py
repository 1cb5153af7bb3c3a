import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from g5census import cli                     # noqa: E402
from g5census.gf2algebra import pmul         # noqa: E402
from g5census.records import read_records    # noqa: E402


class _P:
    """Tiny F_2[x] wrapper so that textual polynomials can be evaluated."""

    def __init__(self, v):
        self.v = v

    def __add__(self, o):
        return _P(self.v ^ _P.of(o).v)

    __radd__ = __add__

    def __mul__(self, o):
        return _P(pmul(self.v, _P.of(o).v))

    __rmul__ = __mul__

    def __pow__(self, k):
        r = _P(1)
        for _ in range(k):
            r = r * self
        return r

    @staticmethod
    def of(o):
        return o if isinstance(o, _P) else _P(o)


def xpoly(text: str) -> int:
    """Parse '(x^2+x+1)^2x' style univariate polynomials over F_2."""
    s = text.replace(" ", "").replace("^", "**")
    s = re.sub(r"(?<=[\)x0-9])(?=[\(x])", "*", s)
    return _P.of(eval(s, {"x": _P(2)})).v


# ---------------------------------------------------------------------------
# The full census, built once per session through the command line driver

@pytest.fixture(scope="session")
def census_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("census")
    for s in ("hyp", "trig", "ci"):
        assert cli.main(["census", "--stratum", s, "--out", str(d / f"{s}.raw")]) == 0
        (d / f"{s}.txt").write_text((d / f"{s}.raw").read_text())
    files = [str(d / f"{s}.txt") for s in ("hyp", "trig", "ci")]
    assert cli.main(["analyze", *files]) == 0
    return d


@pytest.fixture(scope="session")
def records(census_dir):
    return {s: read_records(census_dir / f"{s}.txt") for s in ("hyp", "trig", "ci")}


@pytest.fixture(scope="session")
def all_records(records):
    return records["hyp"] + records["trig"] + records["ci"]


# ---------------------------------------------------------------------------
# One PASS/FAIL line per acceptance criterion in the terminal summary

CRITERIA: dict[int, tuple[bool, str]] = {}


def record_criterion(n: int, checks: dict) -> None:
    failed = [name for name, ok in checks.items() if not ok]
    CRITERIA[n] = (not failed, "; ".join(failed) if failed else f"{len(checks)} checks")
    assert not failed, f"criterion {n} failed: {failed}"


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, detail = CRITERIA[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
