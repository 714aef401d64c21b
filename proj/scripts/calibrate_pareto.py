#!/usr/bin/env python3
"""Calibrate the truncated-Pareto parameters used by the traffic generator.

The generator draws X = scale * U^(-1/shape) (Pareto type I), rounds to the
nearest integer, and clamps to [1, max]. This script solves for (shape, scale)
so the resulting integer distribution hits a target mean/std, using the exact
CDF of the rounded+clamped draw, then verifies the solution with the same
Monte Carlo the C++ tests run (10^6 draws of the identical recipe).

Usage: python3 scripts/calibrate_pareto.py
Prints the constants committed as TrafficConfig defaults.
"""

import numpy as np
from scipy import optimize

TARGETS = [
    ("work", 17.97, 22.22, 256),
    ("profit", 3.66, 3.20, 16),
]


def moments(shape: float, scale: float, vmax: int):
    """Exact mean/std of clamp(round(X), 1, vmax) for X ~ Pareto(shape, scale)."""
    k = np.arange(1, vmax + 1, dtype=float)

    def cdf(x):
        x = np.asarray(x, dtype=float)
        return np.where(x <= scale, 0.0, 1.0 - (scale / x) ** shape)

    lo = np.maximum(k - 0.5, scale)
    hi = k + 0.5
    p = np.where(hi <= scale, 0.0, cdf(hi) - cdf(lo))
    p[-1] = 1.0 - cdf(vmax - 0.5)  # spike at the maximum
    mean = float((k * p).sum())
    var = float((k * k * p).sum()) - mean * mean
    return mean, np.sqrt(max(var, 0.0))


def solve(mean_target: float, std_target: float, vmax: int):
    def residual(params):
        shape, scale = params
        if shape <= 0.01 or scale < 0.1:
            return [1e6, 1e6]
        m, s = moments(shape, scale, vmax)
        return [m - mean_target, s - std_target]

    best = None
    for guess in [(1.2, 2.0), (1.5, 5.0), (0.8, 1.0), (2.0, 8.0), (1.0, 3.0)]:
        sol = optimize.least_squares(residual, guess, xtol=1e-14, ftol=1e-14)
        if best is None or sol.cost < best.cost:
            best = sol
    return best.x


def monte_carlo(shape: float, scale: float, vmax: int, n: int = 10**6, seed: int = 7):
    rng = np.random.default_rng(seed)
    u = rng.random(n)
    x = scale * np.power(1.0 - u, -1.0 / shape)
    k = np.clip(np.rint(x), 1, vmax)
    return float(k.mean()), float(k.std())


def main():
    for name, mean_t, std_t, vmax in TARGETS:
        shape, scale = solve(mean_t, std_t, vmax)
        m, s = moments(shape, scale, vmax)
        mc_m, mc_s = monte_carlo(shape, scale, vmax)
        print(f"{name}: shape={shape:.10f} scale={scale:.10f}")
        print(f"  exact    mean={m:.5f} std={s:.5f} (targets {mean_t}, {std_t})")
        print(f"  mc(1e6)  mean={mc_m:.5f} std={mc_s:.5f}")


if __name__ == "__main__":
    main()
