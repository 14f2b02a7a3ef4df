"""The twelve lamination parameters of a step-function layup.

Each parameter is an integral over [-1, 1] of one of the four trig
functions cos(2*theta), cos(4*theta), sin(2*theta), sin(4*theta) of the
layup angle, weighted by z^0, z^1 or z^2 and scaled so every parameter
lies in [-1, 1]:

    xi_a[k] = 1/2 * integral f_k(theta(z)) dz
    xi_b[k] =       integral f_k(theta(z)) z dz
    xi_d[k] = 3/2 * integral f_k(theta(z)) z^2 dz

For a step function the integrals reduce to finite sums of closed-form
interval moments, so `lamination_parameters` is exact up to float
round-off. `quadrature_parameters` recomputes the same quantities by
composite midpoint sampling and serves as an independent cross-check.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .step import StepLaminate, moments

# Scale factors for the z^0, z^1, z^2 weighted families.
_PREFACTORS = (0.5, 1.0, 1.5)


@dataclass(frozen=True)
class LamParams:
    """In-plane (xi_a), coupling (xi_b) and bending (xi_d) parameter
    quadruples, ordered [cos 2t, cos 4t, sin 2t, sin 4t]."""

    xi_a: tuple[float, float, float, float]
    xi_b: tuple[float, float, float, float]
    xi_d: tuple[float, float, float, float]

    def flat(self) -> tuple[float, ...]:
        """All twelve components in the fixed order A1..A4, B1..B4, D1..D4."""
        return self.xi_a + self.xi_b + self.xi_d

    def as_dict(self) -> dict:
        return {
            "xiA": list(self.xi_a),
            "xiB": list(self.xi_b),
            "xiD": list(self.xi_d),
        }


def trig_values(angle: float) -> tuple[float, float, float, float]:
    """(cos 2*angle, cos 4*angle, sin 2*angle, sin 4*angle)."""
    return (
        math.cos(2.0 * angle),
        math.cos(4.0 * angle),
        math.sin(2.0 * angle),
        math.sin(4.0 * angle),
    )


def weighted_moments(t: StepLaminate,
                     f: Callable[[float], float]) -> tuple[float, float, float]:
    """integral f(theta(z)) z^j dz for j = 0, 1, 2, for any f.

    Exact for step functions: each interval contributes f(angle) times the
    closed-form interval moment. This generic entry point backs the trig
    parameters and lets tests drive the same machinery with arbitrary f.
    """
    s0 = s1 = s2 = 0.0
    for lo, hi, angle in t.intervals():
        fv = f(angle)
        m = moments(lo, hi)
        s0 += fv * m.m0
        s1 += fv * m.m1
        s2 += fv * m.m2
    return (s0, s1, s2)


def _from_sums(sums) -> LamParams:
    return LamParams(
        xi_a=tuple(_PREFACTORS[0] * sums[k][0] for k in range(4)),
        xi_b=tuple(_PREFACTORS[1] * sums[k][1] for k in range(4)),
        xi_d=tuple(_PREFACTORS[2] * sums[k][2] for k in range(4)),
    )


def lamination_parameters(t: StepLaminate) -> LamParams:
    """Exact lamination parameters of a step laminate.

    No quadrature is involved: per interval the four trig values multiply
    the closed-form moments, and the contributions are summed.
    """
    sums = [[0.0, 0.0, 0.0] for _ in range(4)]
    for lo, hi, angle in t.intervals():
        m = moments(lo, hi).as_tuple()
        tv = trig_values(angle)
        for k in range(4):
            fk = tv[k]
            row = sums[k]
            row[0] += fk * m[0]
            row[1] += fk * m[1]
            row[2] += fk * m[2]
    return _from_sums(sums)


def quadrature_parameters(t: StepLaminate, samples_per_interval: int) -> LamParams:
    """Composite midpoint-rule approximation of the parameters.

    Each laminate interval is sampled independently (samples never
    straddle a breakpoint), so the only error is the midpoint rule's
    O(h^2) term on the z^2 weight plus float round-off. Converges to
    `lamination_parameters` as the sample count grows.

    Args:
        samples_per_interval: midpoint samples per laminate interval, >= 1.
    """
    if samples_per_interval < 1:
        raise ValueError(f"samples_per_interval must be >= 1, got {samples_per_interval}")
    m = int(samples_per_interval)
    sums = [[0.0, 0.0, 0.0] for _ in range(4)]
    for lo, hi, angle in t.intervals():
        h = (hi - lo) / m
        z = lo + h * (np.arange(m, dtype=np.float64) + 0.5)
        s0 = h * m
        s1 = h * float(z.sum())
        s2 = h * float((z * z).sum())
        tv = trig_values(angle)
        for k in range(4):
            fk = tv[k]
            row = sums[k]
            row[0] += fk * s0
            row[1] += fk * s1
            row[2] += fk * s2
    return _from_sums(sums)


def blend(p: LamParams, q: LamParams, weight_on_first: float) -> LamParams:
    """Componentwise convex blend: weight_on_first * p + (1 - w) * q."""
    w = weight_on_first
    mix = lambda x, y: tuple(w * a + (1.0 - w) * b for a, b in zip(x, y))
    return LamParams(mix(p.xi_a, q.xi_a), mix(p.xi_b, q.xi_b), mix(p.xi_d, q.xi_d))
