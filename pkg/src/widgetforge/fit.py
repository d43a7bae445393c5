"""Feedback-guided width search at a fixed aspect ratio, plus the final rescale."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .dsl.model import WidgetSpec
from .errors import BadParameter, NoConvergence
from .layout import natural_width, psi


@dataclass
class FitResult:
    w_star: float
    h_star: float
    aspect: float
    epsilon: float
    trace: list[tuple[float, float]] = field(default_factory=list)
    iterations: int = 0
    fallback_scan: bool = False

    @property
    def psi_star(self) -> float:
        for w, value in reversed(self.trace):
            if w == self.w_star:
                return value
        raise LookupError("w_star not evaluated")

    def to_json(self) -> dict:
        return {
            "w_star": self.w_star,
            "h_star": self.h_star,
            "aspect": self.aspect,
            "epsilon": self.epsilon,
            "iterations": self.iterations,
            "fallback_scan": self.fallback_scan,
            "trace": [{"w": w, "psi": p} for w, p in self.trace],
        }


def fit_width(
    spec: WidgetSpec,
    r: float | None = None,
    w_init: float | None = None,
    cap: int = 32,
) -> FitResult:
    """Smallest integer width w with Ψ(w, w/r) <= 0.

    Doubles from ``w_init`` while infeasible (at most ``cap`` doublings),
    halves while feasible, then bisects the integer bracket
    [last infeasible, first feasible] down to 1 px.
    """
    r = spec.aspect_ratio if r is None else r
    if r is None or not r > 0:
        raise BadParameter(f"aspect ratio must be > 0, got {r!r}")
    if w_init is None:
        w_init = max(natural_width(spec), 1.0)
    if not w_init > 0:
        raise BadParameter(f"w_init must be > 0, got {w_init!r}")

    trace: list[tuple[float, float]] = []
    cache: dict[int, float] = {}

    def feasible(w: int) -> bool:
        if w not in cache:
            cache[w] = psi(spec, (float(w), w / r))
            trace.append((float(w), cache[w]))
        return cache[w] <= 0

    w = max(1, math.ceil(w_init))
    if feasible(w):
        hi, lo = w, 0
        while hi > 1:
            w = hi // 2
            if feasible(w):
                hi = w
            else:
                lo = w
                break
    else:
        lo = w
        for _ in range(cap):
            w *= 2
            if feasible(w):
                break
            lo = w
        else:
            raise NoConvergence(f"still overflowing at width {w} after {cap} doublings")
        hi = w

    bracket_lo = lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if feasible(mid):
            hi = mid
        else:
            lo = mid

    fallback = _non_monotone(cache)
    if fallback:
        for w in range(max(bracket_lo, 0) + 1, hi):
            if feasible(w):
                hi = w
                break

    w_star = float(hi)
    return FitResult(
        w_star=w_star,
        h_star=w_star / r,
        aspect=r,
        epsilon=1.0 / w_star,
        trace=trace,
        iterations=len(trace),
        fallback_scan=fallback,
    )


def _non_monotone(cache: dict[int, float]) -> bool:
    """True if some feasible width lies below an infeasible one."""
    feasible_ws = [w for w, p in cache.items() if p <= 0]
    infeasible_ws = [w for w, p in cache.items() if p > 0]
    return bool(feasible_ws and infeasible_ws) and min(feasible_ws) < max(infeasible_ws)


def finalize_render_size(fit: FitResult, target: tuple[float, float]) -> tuple[float, float]:
    """Per-axis scale mapping (w*, h*) onto the target size."""
    tw, th = target
    if not (tw > 0 and th > 0):
        raise BadParameter(f"target {target!r} must be positive")
    return tw / fit.w_star, th / fit.h_star


def render_dims(fit: FitResult, scale: tuple[float, float]) -> tuple[int, int]:
    """Output pixel dimensions after rescaling, rounded at the emit boundary."""
    return round(fit.w_star * scale[0]), round(fit.h_star * scale[1])
