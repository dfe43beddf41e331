#!/usr/bin/env python3
"""Convert the MASS forensic glass CSV (fgl.csv) into scaled LIBSVM text.

Features are min-max scaled to [-1, 1] per column, the same mapping svm-scale uses.
Class names map to the original glass type ids 1,2,3,5,6,7.
"""
import csv
import sys

TYPES = {"WinF": 1, "WinNF": 2, "Veh": 3, "Con": 5, "Tabl": 6, "Head": 7}


def main(src, dst):
    with open(src, newline="") as f:
        rows = list(csv.reader(f))[1:]
    feats = [[float(v) for v in r[1:10]] for r in rows]
    labels = [TYPES[r[10]] for r in rows]
    lo = [min(c) for c in zip(*feats)]
    hi = [max(c) for c in zip(*feats)]
    with open(dst, "w") as out:
        for y, xs in zip(labels, feats):
            parts = [str(y)]
            for j, v in enumerate(xs):
                s = -1.0 + 2.0 * (v - lo[j]) / (hi[j] - lo[j]) if hi[j] > lo[j] else 0.0
                if s != 0.0:
                    parts.append("%d:%.6g" % (j + 1, s))
            out.write(" ".join(parts) + "\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
