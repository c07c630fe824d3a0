"""Closed-form maximizer of |A + Bz + Cz^2| + 1 - |z|^2 over the closed disk,
its brute-force oracle, and the proof-path functions it feeds.

Branch predicates of the piecewise closed form are evaluated in textual
order and the first match wins (cases overlap only where the values
coincide).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import backend

__all__ = [
    "YCase",
    "y_closed",
    "y_oracle",
    "classify_case",
    "abc_of_tau1",
    "proof_path_bound",
    "phi1",
    "phi2",
    "tau1_star",
    "subcase_iiic_sup",
    "classification_trace",
]


class YCase(enum.Enum):
    NONNEG_BIG_B = "AC>=0, |B| >= 2(1-|C|)"
    NONNEG_SMALL_B = "AC>=0, |B| < 2(1-|C|)"
    NEG_FIRST = "AC<0, first branch"
    NEG_SECOND = "AC<0, second branch"
    R_FIRST = "R: |A|+|B|-|C|"
    R_SECOND = "R: -|A|+|B|+|C|"
    R_THIRD = "R: (|C|+|A|)sqrt(1-B^2/(4AC))"


def classify_case(A: float, B: float, C: float) -> YCase:
    """Which branch of the closed form applies at (A, B, C)."""
    a, b, c = abs(A), abs(B), abs(C)
    if A * C >= 0:
        if b >= 2 * (1 - c):
            return YCase.NONNEG_BIG_B
        return YCase.NONNEG_SMALL_B
    gate = -4 * A * C * (C ** -2 - 1)
    if gate <= B * B and b < 2 * (1 - c):
        return YCase.NEG_FIRST
    if B * B < min(4 * (1 + c) ** 2, gate):
        return YCase.NEG_SECOND
    ab = abs(A * B)
    if c * (b + 4 * a) <= ab:
        return YCase.R_FIRST
    if ab <= c * (b - 4 * a):
        return YCase.R_SECOND
    return YCase.R_THIRD


def y_closed(A: float, B: float, C: float) -> tuple[float, YCase]:
    """The piecewise closed-form maximum, with the branch taken."""
    if not all(math.isfinite(x) for x in (A, B, C)):
        raise ValueError("A, B, C must be finite")
    case = classify_case(A, B, C)
    a, b, c = abs(A), abs(B), abs(C)
    if case is YCase.NONNEG_BIG_B:
        return a + b + c, case
    if case is YCase.NONNEG_SMALL_B:
        return 1 + a + b * b / (4 * (1 - c)), case
    if case is YCase.NEG_FIRST:
        return 1 - a + b * b / (4 * (1 - c)), case
    if case is YCase.NEG_SECOND:
        return 1 + a + b * b / (4 * (1 + c)), case
    if case is YCase.R_FIRST:
        return a + b - c, case
    if case is YCase.R_SECOND:
        return -a + b + c, case
    return (c + a) * math.sqrt(1 - B * B / (4 * A * C)), case


@dataclass(frozen=True)
class OracleGrid:
    """Resolution spec for the brute-force maximizer."""

    n_r: int = 512
    n_theta: int = 512
    refine_levels: int = 3
    refine_grid: int = 33
    top_k: int = 8


def y_oracle(A: float, B: float, C: float,
             grid: OracleGrid = OracleGrid()) -> float:
    """Grid maximum of |A + Bz + Cz^2| + 1 - |z|^2 with local refinement.

    A lower bound on the true maximum; within ~1e-6 of it at the default
    resolution.  By z -> conj(z) symmetry only theta in [0, pi] is scanned.
    Refinement zooms 10x per level around the best few coarse candidates,
    not just the single argmax, to survive near-tied local maxima.
    """
    rs = np.linspace(0.0, 1.0, grid.n_r)
    ts = np.linspace(0.0, math.pi, grid.n_theta)
    vals = np.asarray(backend.disk_quad_grid(A, B, C, rs, ts))

    flat = vals.ravel()
    k = min(max(grid.top_k * 25, grid.top_k), flat.size)
    cand = np.argpartition(flat, -k)[-k:]
    cand = cand[np.argsort(flat[cand])[::-1]]

    # keep candidates separated by a few cells so distinct basins survive
    picked: list[tuple[int, int]] = []
    for idx in cand:
        i, j = divmod(int(idx), grid.n_theta)
        if all(abs(i - pi) > 3 or abs(j - pj) > 3 for pi, pj in picked):
            picked.append((i, j))
        if len(picked) >= grid.top_k:
            break

    best = float(flat[cand[0]])
    dr = rs[1] - rs[0]
    dt = ts[1] - ts[0]
    for i, j in picked:
        r0, t0 = float(rs[i]), float(ts[j])
        hr, ht = 2 * dr, 2 * dt
        for _ in range(grid.refine_levels):
            v, r0, t0 = backend.disk_quad_window_max(
                A, B, C,
                max(r0 - hr, 0.0), min(r0 + hr, 1.0),
                max(t0 - ht, 0.0), min(t0 + ht, math.pi),
                grid.refine_grid, grid.refine_grid)
            if v > best:
                best = v
            hr /= 10.0
            ht /= 10.0
    return best


def abc_of_tau1(tau1: float) -> tuple[float, float, float]:
    """The proof-path coefficients at tau1; always has A*C < 0 on (0,1)."""
    if not 0.0 < tau1 < 1.0:
        raise ValueError("tau1 must lie strictly inside (0, 1)")
    A = tau1 ** 3 / (16 * (1 - tau1 ** 2))
    B = -tau1 / 12
    C = -(3 + tau1 ** 2) / (4 * tau1)
    return A, B, C


def proof_path_bound(tau1: float) -> float:
    """(1/48) tau1 (1 - tau1^2) Y(A, B, C) along the proof path."""
    A, B, C = abc_of_tau1(tau1)
    y, _ = y_closed(A, B, C)
    return tau1 * (1 - tau1 ** 2) * y / 48


def phi1(t: float) -> float:
    """36 - 20 t^2 - 19 t^4 (valid through tau1_star; divide by 2304)."""
    return 36 - 20 * t ** 2 - 19 * t ** 4


def phi2(t: float) -> float:
    """(12 - 8 t^2 - 3 t^4) sqrt((7 + 2 t^2)/(3 + t^2)) (beyond tau1_star; /1152)."""
    return (12 - 8 * t ** 2 - 3 * t ** 4) * math.sqrt((7 + 2 * t ** 2) / (3 + t ** 2))


def tau1_star() -> float:
    """Root of 17 t^4 + 44 t^2 - 12 = 0 where the proof path switches branch."""
    return math.sqrt((-22 + 4 * math.sqrt(43)) / 17)


def subcase_iiic_sup() -> float:
    """(-137 + 62 sqrt(43))/20808, the supremum of phi2/1152 past the switch."""
    return (-137 + 62 * math.sqrt(43)) / 20808


def classification_trace(tau1s: Iterable[float]) -> Iterator[dict]:
    """Audit records of the branch taken along the proof path."""
    for t1 in tau1s:
        A, B, C = abc_of_tau1(t1)
        y, case = y_closed(A, B, C)
        yield {
            "tau1": t1,
            "A": A,
            "B": B,
            "C": C,
            "case": case.name,
            "y": y,
            "bound": t1 * (1 - t1 ** 2) * y / 48,
        }
