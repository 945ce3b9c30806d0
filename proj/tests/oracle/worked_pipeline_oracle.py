#!/usr/bin/env python3
"""Independent oracle for the worked 2-object pipeline.

Recomputes, with numpy only, the quantities the C++ acceptance suite pins:
augmented matrix, double-centered matrix, eigenvalues, principal
coordinates, interval fold, and stress for the m=2 case with
dissimilarity [1,3] (plus the degenerate [1,1] cross-check).

Run from the repo root:

    python3 tests/oracle/worked_pipeline_oracle.py > tests/oracle/worked_pipeline_expected.json

The frozen constants in oracle_values.hpp are copied from that output and
must never be regenerated from the C++ implementation under test.
"""

import json

import numpy as np


def augmented(lo, hi, self_hi=(0.0, 0.0)):
    """2m x 2m matrix for m=2: off-diagonal blocks [[lo,mean],[mean,hi]]."""
    mean = (lo + hi) / 2.0
    d11, d22 = self_hi
    return np.array(
        [
            [0.0, d11, lo, mean],
            [d11, 0.0, mean, hi],
            [lo, mean, 0.0, d22],
            [mean, hi, d22, 0.0],
        ]
    )


def double_center(d):
    sq = d * d
    n = sq.shape[0]
    row = sq.mean(axis=1, keepdims=True)
    col = sq.mean(axis=0, keepdims=True)
    grand = sq.mean()
    return -0.5 * (sq - row - col + grand)


def sign_fix(vecs):
    """Largest-|entry| element of each column made positive."""
    out = vecs.copy()
    for j in range(out.shape[1]):
        k = int(np.argmax(np.abs(out[:, j])))
        if out[k, j] < 0:
            out[:, j] = -out[:, j]
    return out


def embed(delta_lo, delta_hi, q=1):
    dt = augmented(delta_lo, delta_hi)
    b = double_center(dt)
    evals, evecs = np.linalg.eigh(b)
    order = np.argsort(evals)[::-1]
    evals = evals[order]
    evecs = sign_fix(evecs[:, order])
    coords = np.zeros((4, q))
    for r in range(q):
        if evals[r] > 1e-10 * max(evals[0], 0.0):
            coords[:, r] = np.sqrt(evals[r]) * evecs[:, r]
    intervals = np.zeros((2, q, 2))
    for i in range(2):
        rows = coords[2 * i : 2 * i + 2, :]
        intervals[i, :, 0] = rows.min(axis=0)
        intervals[i, :, 1] = rows.max(axis=0)
    return dt, b, evals, coords, intervals


def box_min_max_1d(a, b):
    gap = max(0.0, a[0] - b[1], b[0] - a[1])
    span = max(abs(a[1] - b[0]), abs(b[1] - a[0]))
    return gap, span


def stress(intervals, delta_lo, delta_hi):
    dmin, dmax = box_min_max_1d(intervals[0, 0], intervals[1, 0])
    return (dmin - delta_lo) ** 2 + (dmax - delta_hi) ** 2


def main():
    dt, b, evals, coords, intervals = embed(1.0, 3.0)
    raw = stress(intervals, 1.0, 3.0)
    dmin, dmax = box_min_max_1d(intervals[0, 0], intervals[1, 0])

    dt_deg, b_deg, evals_deg, coords_deg, intervals_deg = embed(1.0, 1.0)

    out = {
        "worked_m2_lo1_hi3": {
            "augmented": dt.tolist(),
            "double_centered": b.tolist(),
            "eigenvalues": evals.tolist(),
            "point_coords_dim1": coords[:, 0].tolist(),
            "interval_obj1": intervals[0, 0].tolist(),
            "interval_obj2": intervals[1, 0].tolist(),
            "embedded_min_distance": dmin,
            "embedded_max_distance": dmax,
            "raw_stress": raw,
            "normalized_stress": raw / (1.0**2 + 3.0**2),
        },
        "degenerate_m2_lo1_hi1": {
            "eigenvalues": evals_deg.tolist(),
            "point_coords_dim1": coords_deg[:, 0].tolist(),
            "interval_obj1": intervals_deg[0, 0].tolist(),
            "interval_obj2": intervals_deg[1, 0].tolist(),
        },
    }
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
