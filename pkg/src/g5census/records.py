"""Census records and their one-line text format.

    HYP g=5 q=<hex> p=<hex> aut=<int> [N=.. L=.. NP=..]
    TRI f=<6 hex> sing=<SN|NN|CU> aut=<int> [N=.. L=.. NP=..]
    CI P=<4hex> Q=<4hex> R=<4hex> class=<P1..P4> aut=<int> [N=.. L=.. NP=..]

N lists N_1..N_5, L lists c_1..c_5 (the rest follow from the functional
equation) and NP lists the ten slopes.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .zeta import (GENUS, LPoly, NewtonPolygon, PointCounts, counts_for, isogeny_key,
                   lpoly_from_counts, newton_polygon)

STRATA = ("HYP", "TRI", "CI")


class InvariantViolation(Exception):
    """An analysed record breaks a property every genuine curve must have."""


@dataclass(frozen=True)
class CurveRecord:
    stratum: str
    payload: tuple          # HYP (g, q, p); TRI (F, sing); CI (P, Q, R, cls)
    aut: int
    counts: PointCounts | None = None
    lpoly: LPoly | None = None
    polygon: NewtonPolygon | None = None

    @property
    def analysed(self) -> bool:
        return self.counts is not None

    @property
    def isogeny_key(self) -> tuple:
        return isogeny_key(self.counts)

    def model_fields(self) -> list[str]:
        if self.stratum == "HYP":
            g, q, p = self.payload
            return [f"g={g}", f"q={q:x}", f"p={p:x}"]
        if self.stratum == "TRI":
            F, sing = self.payload
            return [f"f={F:06x}", f"sing={sing}"]
        P, Q, R, cls = self.payload
        return [f"P={P:04x}", f"Q={Q:04x}", f"R={R:04x}", f"class=P{cls}"]

    def to_line(self) -> str:
        parts = [self.stratum] + self.model_fields() + [f"aut={self.aut}"]
        if self.analysed:
            g = self.lpoly.genus
            parts += [f"N={self.counts}",
                      "L=" + ",".join(map(str, self.lpoly.coeffs[1:g + 1])),
                      f"NP={self.polygon}"]
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> "CurveRecord":
        tokens = line.split()
        kind, fields = tokens[0], dict(t.split("=", 1) for t in tokens[1:])
        if kind == "HYP":
            payload = (int(fields["g"]), int(fields["q"], 16), int(fields["p"], 16))
        elif kind == "TRI":
            payload = (int(fields["f"], 16), fields["sing"])
        elif kind == "CI":
            payload = (int(fields["P"], 16), int(fields["Q"], 16), int(fields["R"], 16),
                       int(fields["class"].lstrip("P")))
        else:
            raise ValueError(f"unknown stratum {kind!r}")
        rec = cls(kind, payload, int(fields["aut"]))
        if "N" in fields:
            counts = PointCounts(tuple(int(x) for x in fields["N"].split(",")))
            half = [int(x) for x in fields["L"].split(",")]
            g = len(half)
            coeffs = [1] + half + [2 ** (g - i) * ([1] + half)[i] for i in range(g - 1, -1, -1)]
            rec = replace(rec, counts=counts, lpoly=LPoly(tuple(coeffs)),
                          polygon=NewtonPolygon.parse(fields["NP"]))
        return rec

    def genus(self) -> int:
        return self.payload[0] if self.stratum == "HYP" else GENUS

    def count_payload(self):
        if self.stratum == "CI":
            return self.payload[:3]
        return self.payload

    def analyse(self) -> "CurveRecord":
        """Counts over F_2..F_{2^g}, L-polynomial and Newton polygon."""
        counts = counts_for(self.stratum, self.count_payload())
        if not counts.weil_ok(self.genus()):
            raise InvariantViolation(f"Weil bound fails: {self.to_line()} N={counts}")
        L = lpoly_from_counts(counts)
        return replace(self, counts=counts, lpoly=L, polygon=newton_polygon(L))


def read_records(path) -> list[CurveRecord]:
    with open(path) as fh:
        return [CurveRecord.from_line(line) for line in fh if line.strip() and not line.startswith("#")]


def write_records(path, records) -> None:
    with open(path, "w") as fh:
        for r in records:
            fh.write(r.to_line() + "\n")
