"""Published reference values the census must reproduce."""
from fractions import Fraction as Fr

# PGL_2(F_2)-orbit representatives of nonzero q with deg q <= 6, grouped by degree
Q5_LIST = {
    "<=2": ["1", "x", "x^2", "x(x+1)", "x^2+x+1"],
    "3": ["x^3", "x^2(x+1)", "(x^2+x+1)x", "x^3+x+1"],
    "4": ["x^2(x+1)^2", "(x^2+x+1)^2", "(x^2+x+1)x^2", "(x^2+x+1)x(x+1)", "(x^3+x+1)x",
          "(x^3+x^2+1)x", "x^4+x+1", "x^4+x^3+1"],
    "5": ["(x^2+x+1)^2x", "(x^3+x+1)(x^2+x+1)", "(x^3+x+1)x(x+1)", "(x^4+x+1)x",
          "(x^4+x^3+x^2+x+1)x", "x^5+x^2+1", "x^5+x^3+1", "x^5+x^3+x^2+x+1"],
    "6": ["(x^2+x+1)^3", "(x^3+x+1)^2", "(x^3+x+1)(x^3+x^2+1)", "(x^4+x+1)(x^2+x+1)",
          "x^6+x+1", "x^6+x^3+1"],
}

HYP_COUNT, HYP_MASS = 1070, 512
HYP_AUT = {2: 983, 4: 76, 6: 7, 12: 4}
TRIG_COUNT, TRIG_MASS = 2854, 2817
TRIG_AUT = {1: 2783, 2: 63, 3: 7, 6: 1}
CI_COUNT, CI_MASS = 3905, 3584
CI_AUT = {1: 3319, 2: 490, 3: 3, 4: 60, 6: 4, 8: 24, 12: 2, 16: 2, 24: 1}
QUADRIC_ORBITS, IRREDUCIBLE_UNION, REDUCIBLE_REST = 7, 32116, 651

_h, _t, _q, _f = Fr(1, 2), Fr(1, 3), Fr(1, 4), Fr(1, 5)
# slopes -> (hyp, trig, ci, total) curve counts, and stack counts
NEWTON_TABLE = [
    ((0,) * 5 + (1,) * 5, (550, 1417, 1617, 3584), (264, 1405, 1524, 3193)),
    ((0,) * 4 + (_h,) * 2 + (1,) * 4, (156, 623, 868, 1647), (76, 610, 838, 1524)),
    ((0,) * 3 + (_h,) * 4 + (1,) * 3, (108, 404, 672, 1184), (52, 402, 574, 1028)),
    ((0,) * 2 + (_t,) * 3 + (2 * _t,) * 3 + (1,) * 2, (32, 122, 206, 360), (16, 122, 198, 336)),
    ((0,) * 2 + (_h,) * 6 + (1,) * 2, (88, 80, 176, 344), (40, 78, 154, 272)),
    ((0,) + (_q,) * 4 + (3 * _q,) * 4 + (1,), (0, 64, 88, 152), (0, 64, 88, 152)),
    ((0,) + (_t,) * 3 + (_h,) * 2 + (2 * _t,) * 3 + (1,), (48, 24, 40, 112), (24, 24, 32, 80)),
    ((0,) + (_h,) * 8 + (1,), (56, 28, 108, 192), (24, 24, 64, 112)),
    ((_f,) * 5 + (4 * _f,) * 5, (0, 48, 48, 96), (0, 48, 48, 96)),
    ((_q,) * 4 + (_h,) * 2 + (3 * _q,) * 4, (0, 8, 24, 32), (0, 8, 24, 32)),
    ((_t,) * 3 + (_h,) * 4 + (2 * _t,) * 3, (16, 18, 26, 60), (8, 14, 18, 40)),
    ((2 * _f,) * 5 + (3 * _f,) * 5, (8, 4, 4, 16), (4, 4, 4, 12)),
    ((_h,) * 10, (8, 14, 28, 50), (4, 14, 18, 36)),
]

TOTAL_CURVES, TOTAL_MASS = 7829, 6913
ISOGENY_CLASSES, SHARED_CLASSES = 4339, 161
POINTLESS = {"HYP": 44, "TRI": 23, "CI": 241}
MAX_POINTS = {"HYP": (6, 44), "TRI": (8, 6), "CI": (9, 1)}

BERGSTROM = [({2: 1}, -1025), ({1: 2}, 1023), ({1: 2, 2: 1}, -2367),
             ({1: 2, 3: 1}, 0), ({3: 1, 4: 2}, 0), ({1: 1, 2: 1, 5: 2}, 0)]

SUPERSINGULAR_AUT = {"HYP": {2: 8}, "TRI": {1: 14}, "CI": {8: 4, 4: 6, 2: 4, 1: 14}}

# named curves
HYP_ISOGENOUS = ("1", "x^11+x^10+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x")
HYP_AUT12 = [("x^4+x^2", "x^11+x^9+x^8+x^5+x^3+x^2+x+1"),
             ("x^4+x^2", "x^11+x^10+x^3+x"),
             ("x^6+x^5+x^4+x^3+x^2+x+1", "x^10+x^6+x^4+x^3"),
             ("x^6+x^5+x^4+x^3+x^2+x+1", "x^12+x^10+x^8+x^7+x^5+x^3+1")]
TRIG_ISOGENOUS = ("X4Y + X3Y2 + XY4 + X3YZ + X2Y2Z + XY3Z + X3Z2 + X2YZ2 + Y3Z2 + XYZ3 + Y2Z3")
TRIG_AUT6 = ("X5 + Y5 + X4Z + X3YZ + XY3Z + Y4Z + X3Z2 + X2YZ2 + XY2Z2 + Y3Z2 + X2Z3"
             " + XYZ3 + Y2Z3")
CI_MAXPOINTS = ("Y2 + XZ + YZ", "XY + XZ + YT + ZT + XU + ZU + U2",
                "XY + XZ + YZ + Z2 + XT + ZT + T2 + YU + ZU")
CI_ISOGENOUS = ("Y2 + YZ + Z2 + XT + ZT", "XT + XU + YU + ZU",
                "X2 + XY + Y2 + XZ + YZ + XU + YU + ZU + TU + U2")
CI_AUT24 = ("Y2 + XZ + YZ", "Y2 + XZ + YZ + Z2 + YT + T2 + XU + YU + ZU",
            "X2 + Y2 + XZ + YT + T2 + YU + U2")
ISOGENOUS_COUNTS = (5, 9, 11, 33, 25)
