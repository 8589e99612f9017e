#!/usr/bin/env python3
"""Write data/knots.jsonl.

PD codes are KnotInfo's (note KnotInfo's 10_165 is Rolfsen's 10_166),
except 10_166, whose diagram is rebuilt from the displayed ten-relator
presentation by pd_from_wirtinger.py; KnotInfo's diagram is kept as
alt_pd.
Expected Alexander polynomials are stored as coefficient lists so the
test suite can compare against them.
"""
import json
import sys

PD = {
    "3_1": [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]],
    "4_1": [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
    "5_2": [[1, 5, 2, 4], [3, 9, 4, 8], [5, 1, 6, 10], [7, 3, 8, 2], [9, 7, 10, 6]],
    "6_1": [[1, 7, 2, 6], [3, 10, 4, 11], [5, 3, 6, 2], [7, 1, 8, 12], [9, 4, 10, 5], [11, 9, 12, 8]],
    "8_15": [[1, 7, 2, 6], [3, 15, 4, 14], [5, 9, 6, 8], [7, 3, 8, 2], [9, 13, 10, 12], [11, 1, 12, 16],
             [13, 5, 14, 4], [15, 11, 16, 10]],
    "9_25": [[2, 10, 3, 9], [4, 17, 5, 18], [6, 12, 7, 11], [8, 4, 9, 3], [10, 14, 11, 13], [12, 8, 13, 7],
             [14, 2, 15, 1], [16, 5, 17, 6], [18, 16, 1, 15]],
    "9_35": [[2, 12, 3, 11], [4, 16, 5, 15], [6, 14, 7, 13], [8, 18, 9, 17], [10, 4, 11, 3], [12, 2, 13, 1],
             [14, 6, 15, 5], [16, 10, 17, 9], [18, 8, 1, 7]],
    "9_39": [[1, 12, 2, 13], [3, 17, 4, 16], [5, 10, 6, 11], [7, 18, 8, 1], [9, 14, 10, 15], [11, 2, 12, 3],
             [13, 6, 14, 7], [15, 5, 16, 4], [17, 8, 18, 9]],
    "9_41": [[1, 15, 2, 14], [3, 12, 4, 13], [5, 16, 6, 17], [7, 3, 8, 2], [9, 18, 10, 1], [11, 4, 12, 5],
             [13, 9, 14, 8], [15, 6, 16, 7], [17, 10, 18, 11]],
    "9_46": [[2, 10, 3, 9], [3, 14, 4, 15], [6, 17, 7, 18], [8, 11, 9, 12], [10, 2, 11, 1], [13, 4, 14, 5],
             [15, 13, 16, 12], [16, 7, 17, 8], [18, 5, 1, 6]],
    "9_49": [[1, 15, 2, 14], [4, 12, 5, 11], [6, 16, 7, 15], [7, 3, 8, 2], [10, 18, 11, 17], [12, 4, 13, 3],
             [13, 9, 14, 8], [16, 6, 17, 5], [18, 10, 1, 9]],
    "10_58": [[2, 15, 3, 16], [4, 10, 5, 9], [6, 13, 7, 14], [8, 6, 9, 5], [10, 20, 11, 19], [12, 7, 13, 8],
              [14, 18, 15, 17], [16, 1, 17, 2], [18, 12, 19, 11], [20, 4, 1, 3]],
    "10_67": [[1, 14, 2, 15], [3, 19, 4, 18], [5, 17, 6, 16], [7, 11, 8, 10], [9, 1, 10, 20], [11, 7, 12, 6],
              [13, 2, 14, 3], [15, 13, 16, 12], [17, 5, 18, 4], [19, 9, 20, 8]],
    "10_120": [[2, 10, 3, 9], [4, 18, 5, 17], [6, 12, 7, 11], [8, 4, 9, 3], [10, 16, 11, 15], [12, 20, 13, 19],
               [14, 8, 15, 7], [16, 2, 17, 1], [18, 14, 19, 13], [20, 6, 1, 5]],
    "10_146": [[1, 14, 2, 15], [4, 10, 5, 9], [6, 14, 7, 13], [8, 17, 9, 18], [10, 4, 11, 3], [12, 8, 13, 7],
               [15, 20, 16, 1], [16, 11, 17, 12], [18, 5, 19, 6], [19, 3, 20, 2]],
    "10_166": [[1, 8, 2, 9], [3, 12, 4, 13], [4, 17, 5, 18], [7, 2, 8, 3], [9, 14, 10, 15], [11, 17, 12, 16],
               [13, 6, 14, 7], [15, 20, 16, 1], [18, 5, 19, 6], [19, 11, 20, 10]],
}

ALEXANDER = {
    "unknot": [1],
    "3_1": [1, -1, 1],
    "4_1": [1, -3, 1],
    "5_2": [2, -3, 2],
    "6_1": [2, -5, 2],
    "8_15": [3, -8, 11, -8, 3],
    "9_25": [3, -12, 17, -12, 3],
    "9_35": [7, -13, 7],
    "9_39": [3, -14, 21, -14, 3],
    "9_41": [3, -12, 19, -12, 3],
    "9_46": [2, -5, 2],
    "9_49": [3, -6, 7, -6, 3],
    "10_58": [3, -16, 27, -16, 3],
    "10_67": [4, -16, 23, -16, 4],
    "10_120": [8, -26, 37, -26, 8],
    "10_146": [2, -8, 13, -8, 2],
    "10_166": [2, -10, 15, -10, 2],
}

FIBERED = {"unknot", "3_1", "4_1"}


def inv(i):
    return "x%d^-1" % i


# planar diagram behind PRES_10_166 (unique output of pd_from_wirtinger.py)
PD_10_166_DISPLAYED = [[1, 7, 2, 6], [4, 17, 5, 18], [5, 11, 6, 10], [7, 15, 8, 14], [9, 3, 10, 2],
                       [11, 17, 12, 16], [13, 9, 14, 8], [15, 1, 16, 20], [18, 3, 19, 4], [19, 13, 20, 12]]

# 10_166 as a ten-relator Wirtinger presentation; a b a^-1 c^-1 per crossing
PRES_10_166 = [(4, 2, 1), (9, 2, 3), (6, 4, 3), (8, 5, 4), (2, 6, 5), (9, 7, 6), (5, 8, 7), (1, 9, 8),
               (2, 9, 10), (7, 1, 10)]


def main(path):
    records = [{"name": "unknot", "pd": [], "alexander": ALEXANDER["unknot"], "fibered": True,
                "provenance": "empty diagram"}]
    for name, pd in PD.items():
        rec = {"name": name, "pd": pd, "alexander": ALEXANDER[name], "fibered": name in FIBERED,
               "provenance": "KnotInfo PD notation" + (" (KnotInfo 10_165)" if name == "10_166" else "")}
        if name == "3_1":
            rec["reduced"] = {"generators": 2, "relators": ["x1^2 x2^-3"], "meridian": "x1 x2^-1"}
        if name == "10_166":
            rec["pd"] = PD_10_166_DISPLAYED
            rec["alt_pd"] = pd
            rec["provenance"] = ("diagram rebuilt from the displayed Wirtinger presentation; "
                                 "alt_pd is KnotInfo 10_165")
            rels = ["x%d x%d %s %s" % (a, b, inv(a), inv(c)) for a, b, c in PRES_10_166]
            rec["presentation"] = {"generators": 10, "relators": rels[:9], "redundant": rels[9:],
                                   "meridian": "x1", "phi": [1] * 10}
        records.append(rec)
    with open(path, "w") as fh:
        for r in records:
            fh.write(json.dumps(r, separators=(",", ":")) + "\n")
    print("wrote %d knots to %s" % (len(records), path))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "knots.jsonl")
