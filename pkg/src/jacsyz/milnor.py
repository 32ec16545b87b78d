"""Invariants of the Jacobian algebra M(f) = S/(∂f/∂x_0, …, ∂f/∂x_n).

For a degree-d form in n+1 variables the smooth reference algebra has
Hilbert series ((1−t^{d−1})/(1−t))^{n+1}: symmetric about T/2 and zero above
T = (n+1)(d−2).  For isolated singularities dim M(f)_k instead stabilises at
the total Tjurina number τ; the degree where it stops matching the smooth
series (ct) and the degree where it reaches τ (st) are the two thresholds
everything else in this package hangs off.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .fields import QQ
from .graded import slice_dim, space_dim
from .poly import HomogPoly, partial_derivatives

__all__ = [
    "NotStabilizedError",
    "SmoothInputError",
    "top_degree",
    "default_k_max",
    "smooth_series_coeff",
    "quotient_series_coeff",
    "jacobian_generators",
    "milnor_dim",
    "MilnorProfile",
    "milnor_profile",
    "total_tjurina",
    "stability_threshold",
    "coincidence_threshold",
    "isolated_check",
]


class NotStabilizedError(RuntimeError):
    """Milnor dimensions never settled inside the inspection window —
    either the singularities are not isolated or k_max is too small."""


class SmoothInputError(ValueError):
    """The requested invariant is undefined for a smooth hypersurface."""


def top_degree(nvars: int, d: int) -> int:
    """Largest degree where the smooth reference algebra is nonzero."""
    return nvars * (d - 2)


def default_k_max(nvars: int, d: int) -> int:
    # stabilisation must happen by top_degree+1; add a detection window on top
    return max(top_degree(nvars, d), 0) + 2 * (nvars - 1) + 4


def smooth_series_coeff(n: int, d: int, k: int) -> int:
    """Coefficient of t^k in ((1−t^{d−1})/(1−t))^{n+1}, the Hilbert series
    of the Jacobian algebra of any smooth degree-d form on P^n."""
    if k < 0:
        return 0
    nvars = n + 1
    total = 0
    for j in range(nvars + 1):
        r = k - j * (d - 1)
        if r < 0:
            break
        total += (-1) ** j * comb(nvars, j) * comb(n + r, n)
    return total


def quotient_series_coeff(gen_degrees: Sequence[int], nvars: int, k: int) -> int:
    """Coefficient of t^k in Π_i(1−t^{a_i}) / (1−t)^nvars — the Hilbert
    series of S modulo a regular sequence of forms with the given degrees."""
    if k < 0:
        return 0
    degrees = list(gen_degrees)
    if any(a < 1 for a in degrees):
        raise ValueError("generator degrees must be positive")
    bound = sum(degrees)
    num = [0] * (bound + 1)
    num[0] = 1
    for a in degrees:
        for i in range(bound, a - 1, -1):
            num[i] -= num[i - a]
    return sum(
        num[m] * space_dim(nvars, k - m) for m in range(min(k, bound) + 1)
    )


@lru_cache(maxsize=None)
def jacobian_generators(f: HomogPoly) -> tuple[HomogPoly, ...]:
    """The n+1 first partials of f, zero partials included in place."""
    return partial_derivatives(f)


def milnor_dim(f: HomogPoly, k: int, field=QQ) -> int:
    """dim M(f)_k = dim S_k − dim (J_f)_k."""
    if k < 0:
        return 0
    return space_dim(f.nvars, k) - slice_dim(jacobian_generators(f), k, field)


@dataclass(frozen=True)
class MilnorProfile:
    """Degree-wise dimensions of M(f) next to the smooth reference, with the
    stabilisation verdict.  dims/smooth_dims run 0..computed_max, which is at
    least k_max (the reporting range) and always covers the detection window
    past top_degree."""

    nvars: int
    n: int
    d: int
    top_degree: int
    k_max: int
    dims: tuple[int, ...]
    smooth_dims: tuple[int, ...]
    tau: int | None
    st: int | None
    ct: int | None
    smooth_input: bool
    stabilized: bool
    isolated: bool
    isolated_method: str = "heuristic-window"

    @property
    def computed_max(self) -> int:
        return len(self.dims) - 1


@lru_cache(maxsize=None)
def _milnor_profile(f: HomogPoly, k_max: int | None, field) -> MilnorProfile:
    if f.is_zero:
        raise ValueError("cannot analyze the zero polynomial")
    if f.degree < 2:
        raise ValueError("hypersurface degree must be at least 2")
    nvars = f.nvars
    n = nvars - 1
    d = f.degree
    T = top_degree(nvars, d)
    k_report = default_k_max(nvars, d) if k_max is None else k_max
    if k_report < 0:
        raise ValueError("k_max must be nonnegative")
    window = n + 2
    k_top = max(k_report, T + n + 2)

    gens = jacobian_generators(f)
    dims = tuple(
        space_dim(nvars, k) - slice_dim(gens, k, field) for k in range(k_top + 1)
    )
    smooth = tuple(smooth_series_coeff(n, d, k) for k in range(k_top + 1))

    tail = dims[-1]
    s = len(dims) - 1
    while s > 0 and dims[s - 1] == tail:
        s -= 1
    stabilized = len(dims) - s >= window
    # isolated singularities force stabilisation by T+1; a later (or absent)
    # plateau means the singular locus is positive-dimensional
    isolated = stabilized and s <= T + 1
    smooth_input = dims == smooth
    tau = tail if isolated else None
    st = s if isolated else None
    ct: int | None = None
    if isolated and not smooth_input:
        first = next(k for k in range(k_top + 1) if dims[k] != smooth[k])
        ct = first - 1
    return MilnorProfile(
        nvars=nvars,
        n=n,
        d=d,
        top_degree=T,
        k_max=k_report,
        dims=dims,
        smooth_dims=smooth,
        tau=tau,
        st=st,
        ct=ct,
        smooth_input=smooth_input,
        stabilized=stabilized,
        isolated=isolated,
    )


def milnor_profile(f: HomogPoly, k_max: int | None = None, field=QQ) -> MilnorProfile:
    return _milnor_profile(f, k_max, field)


def _require_isolated(f: HomogPoly, field) -> MilnorProfile:
    profile = _milnor_profile(f, None, field)
    if not profile.isolated:
        raise NotStabilizedError(
            "Milnor dimensions did not stabilize by degree "
            f"{profile.top_degree + 1}: non-isolated singularities, "
            "or k_max too small"
        )
    return profile


def total_tjurina(f: HomogPoly, field=QQ) -> int:
    """Stable value of dim M(f)_k; 0 exactly for smooth f."""
    return _require_isolated(f, field).tau


def stability_threshold(f: HomogPoly, field=QQ) -> int:
    """Least q with dim M(f)_k = τ for all k ≥ q."""
    return _require_isolated(f, field).st


def coincidence_threshold(f: HomogPoly, field=QQ) -> int:
    """Largest q with dim M(f)_k matching the smooth series for all k ≤ q."""
    profile = _require_isolated(f, field)
    if profile.smooth_input:
        raise SmoothInputError("coincidence threshold is undefined for smooth input")
    return profile.ct


def isolated_check(f: HomogPoly, field=QQ) -> tuple[bool, str]:
    """Heuristic isolatedness verdict plus its method tag.  True means the
    dimensions sat constant on the whole window past top_degree; constancy
    there is necessary but not by itself a proof of isolatedness."""
    profile = _milnor_profile(f, None, field)
    return profile.isolated, profile.isolated_method
