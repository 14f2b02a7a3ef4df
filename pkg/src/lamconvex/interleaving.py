"""The classical interleaving sequence and why it fails pointwise.

Divide [-1, 1] into n equal cells and, inside each cell, take the first
fraction alpha from one laminate and the rest from the other. As n grows
the twelve parameters of the interleaved laminate converge to the
measure-weighted blend of the inputs' parameters, but at any fixed point
where the inputs disagree the value keeps flipping between both sources
forever, so the sequence has no pointwise limit there.

Which source a point x lands in is governed by the fractional part of
n*y with y = (x + 1)/2: strictly below alpha means the first source,
strictly above means the second, and hitting 0 or alpha exactly means x
sits on a partition point, where the interleaved function is undefined.

For rational x the fractional parts cycle with the denominator, and
witnesses for both regions come from solving n*p - q*i = j (Bezout).
For irrational x the fractional parts are dense in [0, 1] (Kronecker),
so a direct search finds witnesses. Rational inputs are handled in exact
integer arithmetic throughout; float inputs use a capped search with a
documented boundary-exclusion tolerance.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import (
    AlphaOutOfRange,
    JOutOfRange,
    NotCoprime,
    SearchCapExceeded,
    UndefinedAtBreakpoint,
)
from .parameters import LamParams, blend, lamination_parameters
from .step import StepLaminate, merge_close

Number = Union[Fraction, int, float]

DEFAULT_SEARCH_CAP = 10_000_000

# Float-path searches and evaluation refuse points this close to a region
# boundary; fractional parts of n*y carry O(n * eps) noise.
BOUNDARY_TOL = 1e-12


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"alpha must lie in (0, 1), got {alpha}")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")


def _exact(value: Number) -> Fraction | None:
    """Fraction for exact inputs (Fraction or int), None for floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return None


def interleave(t1: StepLaminate, t2: StepLaminate, alpha: float, n: int) -> StepLaminate:
    """The n-th interleaved laminate.

    Cell i spans (-1 + 2i/n, -1 + 2(i+1)/n); its first fraction alpha
    takes t1's values and the remainder takes t2's. Breakpoints of t1 and
    t2 are folded in so the result is a valid step laminate.
    """
    _check_alpha(alpha)
    _check_n(n)
    span = 2.0 * alpha / n
    raw = []
    for i in range(n):
        left = -1.0 + (2.0 * i) / n
        raw.append(left)
        raw.append(left + span)
    raw.append(1.0)
    raw.extend(t1.breakpoints[1:-1])
    raw.extend(t2.breakpoints[1:-1])
    raw.sort()
    edges = merge_close(raw)
    pieces = []
    for lo, hi in zip(edges, edges[1:]):
        mid = 0.5 * (lo + hi)
        frac = _float_frac(n * (mid + 1.0) / 2.0)
        src = t1 if frac < alpha else t2
        pieces.append((hi, src.value_at(mid)))
    return StepLaminate.from_pieces(pieces)


def _float_frac(v: float) -> float:
    return v - math.floor(v)


def interleave_value(t1: StepLaminate, t2: StepLaminate, alpha: float,
                     n: int, x: Number) -> float:
    """Value of the n-th interleaved laminate at x without building it.

    Rational x is classified exactly; float x uses BOUNDARY_TOL to refuse
    points indistinguishable from a partition point.

    Raises:
        UndefinedAtBreakpoint: if x falls on a partition point of the
            interleaving, or on a breakpoint of the source laminate.
        ValueError: if x is outside (-1, 1) or n < 1.
    """
    _check_alpha(alpha)
    _check_n(n)
    xf = float(x)
    if not -1.0 < xf < 1.0:
        raise ValueError(f"x = {x} outside (-1, 1)")
    exact = _exact(x)
    if exact is not None:
        ny = n * (exact + 1) / 2
        frac = ny - (ny.numerator // ny.denominator)
        if frac == 0 or frac == alpha:
            raise UndefinedAtBreakpoint(
                f"interleaving undefined at x = {x} for n = {n}")
        below = frac < alpha
    else:
        frac = _float_frac(n * (xf + 1.0) / 2.0)
        if min(frac, 1.0 - frac) < BOUNDARY_TOL or abs(frac - alpha) < BOUNDARY_TOL:
            raise UndefinedAtBreakpoint(
                f"interleaving undefined (or numerically ambiguous) at x = {x} for n = {n}")
        below = frac < alpha
    return t1.value_at(xf) if below else t2.value_at(xf)


def bezout_solve(p: int, q: int) -> tuple[int, int]:
    """Smallest n >= 1 with n*p - q*i = 1 for some integer i >= 0.

    Returns (n, i). All other solutions are (n + k*q, i + k*p).

    Raises:
        NotCoprime: if gcd(p, q) != 1.
        ValueError: unless 0 < p < q.
    """
    if not (isinstance(p, int) and isinstance(q, int) and 0 < p < q):
        raise ValueError(f"need integers 0 < p < q, got p={p!r}, q={q!r}")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"p = {p} and q = {q} share factor {math.gcd(p, q)}")
    n0 = pow(p, -1, q)
    return n0, (n0 * p - 1) // q


def congruence_solutions(p: int, q: int, j: int, count: int) -> list[tuple[int, int]]:
    """First `count` pairs (n, i) with n*p - q*i = j, in increasing n.

    Every returned pair satisfies n >= 1 and 0 <= i <= n - 1 exactly
    (any positive solution does: i >= n forces n*(q - p) < 0), and the
    fractional part of n*p/q equals j/q exactly.

    Raises:
        NotCoprime, JOutOfRange, ValueError.
    """
    n0, _ = bezout_solve(p, q)
    if not 1 <= j <= q - 1:
        raise JOutOfRange(f"j must lie in [1, {q - 1}], got {j}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    first = (j * n0) % q
    return [(first + k * q, ((first + k * q) * p - j) // q) for k in range(count)]


def scaled_bezout_solutions(p: int, q: int, j: int, count: int) -> list[tuple[int, int]]:
    """The constructive family j * (n, i) over the base solutions of
    n*p - q*i = 1. A subset of congruence_solutions(p, q, j, ...), kept
    separate because its certificate n' = j*n is what the scaling
    argument actually produces."""
    n0, i0 = bezout_solve(p, q)
    if not 1 <= j <= q - 1:
        raise JOutOfRange(f"j must lie in [1, {q - 1}], got {j}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return [(j * (n0 + k * q), j * (i0 + k * p)) for k in range(count)]


def find_n_in_region(y: Number, lo: float, hi: float, n_min: int = 1,
                     cap: int = DEFAULT_SEARCH_CAP) -> int:
    """Smallest n >= n_min whose fractional part of n*y lies strictly in
    (lo, hi).

    Rational y: exact integer arithmetic; since the fractional parts of
    n*p/q cycle with period q, one period decides existence, and failure
    within the period (or at the cap) raises immediately.
    Float y: chunked scan up to `cap` with BOUNDARY_TOL excluded at both
    region edges.

    Raises:
        SearchCapExceeded: if no admissible n exists at or below cap.
        ValueError: for a malformed region or n_min < 1.
    """
    if not (0.0 <= lo < hi <= 1.0):
        raise ValueError(f"region must satisfy 0 <= lo < hi <= 1, got ({lo}, {hi})")
    if n_min < 1:
        raise ValueError(f"n_min must be >= 1, got {n_min}")
    exact = _exact(y)
    if exact is not None:
        frac = exact % 1
        p, q = frac.numerator, frac.denominator
        last = min(cap, n_min + q - 1)
        for n in range(n_min, last + 1):
            value = Fraction((n * p) % q, q)
            if lo < value < hi:
                return n
        raise SearchCapExceeded(
            f"no n in [{n_min}, {cap}] with fractional part of n*{exact} in "
            f"({lo}, {hi}); residues have period {q}", cap=cap)
    yf = float(y)
    chunk = 1 << 16
    start = n_min
    while start <= cap:
        stop = min(start + chunk, cap + 1)
        ns = np.arange(start, stop, dtype=np.float64)
        fr = np.mod(ns * yf, 1.0)
        hits = np.flatnonzero((fr > lo + BOUNDARY_TOL) & (fr < hi - BOUNDARY_TOL))
        if hits.size:
            return int(start + hits[0])
        start = stop
    raise SearchCapExceeded(
        f"no n in [{n_min}, {cap}] with fractional part of n*{yf} in ({lo}, {hi})",
        cap=cap)


@dataclass(frozen=True)
class WitnessTable:
    """Indices certifying that the interleaved value at x keeps taking
    both sources' values.

    below: (n, fractional part of n*y) with the part strictly in (0, alpha),
        where the interleaving equals the first source at x.
    above: same for (alpha, 1), where it equals the second source.
    undefined_at: indices n where the interleaving is undefined at x
        (rational x only; multiples of twice its reduced denominator).
    angle1 / angle2: the two sources' values at x, None where undefined.
    """

    x: Number
    alpha: float
    below: tuple[tuple[int, Number], ...]
    above: tuple[tuple[int, Number], ...]
    undefined_at: tuple[int, ...]
    angle1: float | None = None
    angle2: float | None = None

    @property
    def distinct_values(self) -> bool | None:
        """Whether the two sources actually disagree at x (the oscillation
        is vacuous otherwise). None if either value is undefined."""
        if self.angle1 is None or self.angle2 is None:
            return None
        return self.angle1 != self.angle2


def _frac_of(y: Number, n: int) -> Number:
    exact = _exact(y)
    if exact is not None:
        v = n * exact
        return v % 1
    return _float_frac(n * float(y))


def oscillation_witness(t1: StepLaminate, t2: StepLaminate, alpha: float,
                        x: Number, count: int,
                        cap: int = DEFAULT_SEARCH_CAP) -> WitnessTable:
    """Search witness indices for both regions at the point x.

    Rational x (Fraction or int) runs entirely in exact arithmetic; both
    regions are guaranteed non-empty when 1/den((x+1)/2) is below both
    alpha and 1 - alpha. Float x searches numerically up to `cap`.

    Raises:
        SearchCapExceeded: from either region's search.
        AlphaOutOfRange, ValueError.
    """
    _check_alpha(alpha)
    xf = float(x)
    if not -1.0 < xf < 1.0:
        raise ValueError(f"x = {x} outside (-1, 1)")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    exact = _exact(x)
    y: Number = (exact + 1) / 2 if exact is not None else (xf + 1.0) / 2.0

    def collect(lo: float, hi: float) -> tuple[tuple[int, Number], ...]:
        found = []
        n_min = 1
        for _ in range(count):
            n = find_n_in_region(y, lo, hi, n_min=n_min, cap=cap)
            found.append((n, _frac_of(y, n)))
            n_min = n + 1
        return tuple(found)

    below = collect(0.0, alpha)
    above = collect(alpha, 1.0)
    if exact is not None:
        q = exact.denominator
        undefined = tuple(2 * q * k for k in range(1, count + 1))
    else:
        undefined = ()

    def value_or_none(t: StepLaminate) -> float | None:
        try:
            return t.value_at(xf)
        except UndefinedAtBreakpoint:
            return None

    return WitnessTable(
        x=x,
        alpha=alpha,
        below=below,
        above=above,
        undefined_at=undefined,
        angle1=value_or_none(t1),
        angle2=value_or_none(t2),
    )


@dataclass(frozen=True)
class ConvergenceRow:
    """Parameters of one interleaved laminate and the componentwise
    distance to the limiting blend."""

    n: int
    params: LamParams
    residuals: tuple[float, ...]

    @property
    def residual_a(self) -> float:
        return max(self.residuals[0:4])

    @property
    def residual_b(self) -> float:
        return max(self.residuals[4:8])

    @property
    def residual_d(self) -> float:
        return max(self.residuals[8:12])

    @property
    def residual_max(self) -> float:
        return max(self.residuals)


def convergence_table(t1: StepLaminate, t2: StepLaminate, alpha: float,
                      n_list: Sequence[int],
                      swap_limit: bool = False) -> list[ConvergenceRow]:
    """Parameters of the interleaved laminates for each n, with distances
    to the limit.

    The construction puts t1 on measure fraction alpha of each cell, so
    the limit used here weights params(t1) by alpha. Pass swap_limit=True
    to compare against the opposite orientation (weight 1 - alpha on t1)
    side by side.
    """
    _check_alpha(alpha)
    weight_on_first = (1.0 - alpha) if swap_limit else alpha
    limit = blend(lamination_parameters(t1), lamination_parameters(t2), weight_on_first)
    rows = []
    for n in n_list:
        params = lamination_parameters(interleave(t1, t2, alpha, n))
        residuals = tuple(abs(p - l) for p, l in zip(params.flat(), limit.flat()))
        rows.append(ConvergenceRow(n=n, params=params, residuals=residuals))
    return rows
