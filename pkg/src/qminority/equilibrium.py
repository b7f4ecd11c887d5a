"""Gradients, stationary-profile search, best-response audits, classification.

Stationarity (every group's own-payoff partial derivative vanishes) and Nash
equilibrium (no group gains by a unilateral move) are different predicates.
Everything here measures and reports them separately; neither is ever
inferred from the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BoundaryProfileError, DomainError
from .kernel import validate_profile

GRADIENT_STEP = 1e-6
INTERIOR_MARGIN = 1e-6
STATIONARY_TOL = 1e-9
HESSIAN_STEP = 1e-4
HESSIAN_EIG_TOL = 1e-6
MERGE_TOL = 1e-6


class Classification(Enum):
    NASH_EQUILIBRIUM = "NashEquilibrium"
    STATIONARY = "Stationary"
    STATIONARY_NOT_NASH = "StationaryNotNash"
    NOT_STATIONARY = "NotStationary"


@dataclass(frozen=True)
class EquilibriumReport:
    """Everything measured about one candidate profile.

    `gradient` is None when the profile touches the [0, 1] boundary (the audit
    then carries the classification); `improvements` is None when the audit
    was skipped; the Hessian fields apply to two-parameter scenarios only and
    describe player A's payoff surface.
    """

    scenario: str
    profile: tuple[float, ...]
    gradient: tuple[float, ...] | None
    gradient_norm: float | None
    improvements: tuple[float, ...] | None
    hessian_eigenvalues: tuple[float, float] | None
    hessian_kind: str | None
    classification: Classification
    tolerance: float
    grid_points: int | None


def is_interior(profile, margin: float = INTERIOR_MARGIN) -> bool:
    return all(margin < v < 1.0 - margin for v in profile)


def payoff_gradient(scenario, profile, step: float = GRADIENT_STEP) -> np.ndarray:
    """Central-difference partial of each group's own payoff in its own parameter."""
    values = validate_profile(scenario.spec, profile)
    if not is_interior(values):
        raise BoundaryProfileError(
            "gradient undefined at the [0, 1] boundary; use best_response_audit instead"
        )
    gradient = np.empty(len(values))
    for i in range(len(values)):
        up = list(values)
        down = list(values)
        up[i] += step
        down[i] -= step
        gradient[i] = (
            scenario.group_payoff(i, up) - scenario.group_payoff(i, down)
        ) / (2.0 * step)
    return gradient


def player_payoff_gradient(scenario, player: int, profile, step: float = GRADIENT_STEP) -> np.ndarray:
    """Central-difference partials of one player's payoff in every group parameter."""
    values = validate_profile(scenario.spec, profile)
    if not is_interior(values):
        raise BoundaryProfileError(
            "gradient undefined at the [0, 1] boundary; use best_response_audit instead"
        )
    gradient = np.empty(len(values))
    for i in range(len(values)):
        up = list(values)
        down = list(values)
        up[i] += step
        down[i] -= step
        gradient[i] = (
            scenario.payoffs(up)[player] - scenario.payoffs(down)[player]
        ) / (2.0 * step)
    return gradient


def best_response_audit(scenario, profile, grid_points: int = 1001) -> np.ndarray:
    """Largest payoff gain each group can reach by moving only its own parameter.

    Scans a uniform grid over [0, 1] (endpoints included) per group with the
    others held fixed; returns max(0, best - current) per group.
    """
    if grid_points < 3:
        raise DomainError("best-response audit needs at least 3 grid points")
    values = validate_profile(scenario.spec, profile)
    candidates = np.linspace(0.0, 1.0, grid_points)
    improvements = np.zeros(len(values))
    for i in range(len(values)):
        current = scenario.group_payoff(i, values)
        best = current
        trial = list(values)
        for candidate in candidates:
            trial[i] = float(candidate)
            best = max(best, scenario.group_payoff(i, trial))
        improvements[i] = max(0.0, best - current)
    return improvements


def _gradient_jacobian(scenario, theta, step: float = 1e-5) -> np.ndarray:
    g = len(theta)
    jacobian = np.empty((g, g))
    for j in range(g):
        up = np.array(theta)
        down = np.array(theta)
        up[j] += step
        down[j] -= step
        jacobian[:, j] = (
            payoff_gradient(scenario, up) - payoff_gradient(scenario, down)
        ) / (2.0 * step)
    return jacobian


def _newton(scenario, start, tol: float, max_iterations: int):
    lo, hi = 1e-3, 1.0 - 1e-3
    theta = np.clip(np.asarray(start, dtype=float), lo, hi)
    gradient = payoff_gradient(scenario, theta)
    for _ in range(max_iterations):
        norm = float(np.max(np.abs(gradient)))
        if norm <= tol:
            return theta
        jacobian = _gradient_jacobian(scenario, theta)
        step_vec, *_ = np.linalg.lstsq(jacobian, gradient, rcond=None)
        if not np.all(np.isfinite(step_vec)) or not np.any(step_vec):
            return None
        damping = 1.0
        while damping >= 1.0 / 4096.0:
            candidate = np.clip(theta - damping * step_vec, lo, hi)
            candidate_gradient = payoff_gradient(scenario, candidate)
            if float(np.max(np.abs(candidate_gradient))) < norm:
                theta, gradient = candidate, candidate_gradient
                break
            damping /= 2.0
        else:
            return None
    if float(np.max(np.abs(gradient))) <= tol:
        return theta
    return None


def stationary_profile_search(
    scenario,
    n_starts: int = 12,
    seed: int = 0,
    tol: float = STATIONARY_TOL,
    max_iterations: int = 80,
) -> list[tuple[float, ...]]:
    """Multi-start damped Newton on the finite-difference own-payoff gradient.

    Returns interior profiles whose gradient max-norm is at most `tol`,
    deduplicated (merged within 1e-6) and sorted; deterministic per seed.
    An empty list is a valid outcome.
    """
    if n_starts < 1:
        raise DomainError("need at least one start")
    g = scenario.spec.n_groups
    rng = np.random.default_rng(seed)
    starts = [np.full(g, 0.5)]
    starts.extend(rng.uniform(0.05, 0.95, (n_starts - 1, g)))
    hits: list[np.ndarray] = []
    for start in starts:
        solution = _newton(scenario, start, tol, max_iterations)
        if solution is None:
            continue
        if not any(float(np.max(np.abs(solution - h))) <= MERGE_TOL for h in hits):
            hits.append(solution)
    return sorted(tuple(float(v) for v in h) for h in hits)


def player_payoff_hessian(scenario, player: int, profile, step: float = HESSIAN_STEP) -> np.ndarray:
    """Central second differences of one player's payoff over the profile."""
    values = validate_profile(scenario.spec, profile)
    if not is_interior(values, margin=2 * step):
        raise BoundaryProfileError("Hessian needs room on both sides of the profile")
    g = len(values)

    def f(point):
        return float(scenario.payoffs(point)[player])

    center = f(values)
    hessian = np.empty((g, g))
    for i in range(g):
        for j in range(i, g):
            if i == j:
                up = list(values)
                down = list(values)
                up[i] += step
                down[i] -= step
                hessian[i, i] = (f(up) - 2.0 * center + f(down)) / step**2
            else:
                pp = list(values)
                pm = list(values)
                mp = list(values)
                mm = list(values)
                pp[i] += step; pp[j] += step
                pm[i] += step; pm[j] -= step
                mp[i] -= step; mp[j] += step
                mm[i] -= step; mm[j] -= step
                hessian[i, j] = hessian[j, i] = (
                    f(pp) - f(pm) - f(mp) + f(mm)
                ) / (4.0 * step**2)
    return hessian


def _hessian_kind(eigenvalues, tol: float = HESSIAN_EIG_TOL) -> str:
    low = float(np.min(eigenvalues))
    high = float(np.max(eigenvalues))
    if low > tol:
        return "minimum"
    if high < -tol:
        return "maximum"
    if low < -tol and high > tol:
        return "saddle"
    return "degenerate"


def classify_profile(
    scenario,
    profile,
    tol: float = STATIONARY_TOL,
    grid_points: int | None = 1001,
) -> EquilibriumReport:
    """Combine gradient, best-response audit and (two-parameter) Hessian.

    Interior profiles: NotStationary when the gradient max-norm exceeds tol,
    otherwise NashEquilibrium or StationaryNotNash by the audit.  Boundary
    profiles skip the gradient and classify from the audit alone: no improving
    unilateral move means NashEquilibrium, otherwise NotStationary.  With
    grid_points=0 the audit is skipped and only Stationary / NotStationary can
    result.
    """
    values = validate_profile(scenario.spec, profile)
    interior = is_interior(values)

    gradient = None
    gradient_norm = None
    if interior:
        gradient = tuple(float(v) for v in payoff_gradient(scenario, values))
        gradient_norm = max(abs(v) for v in gradient)

    improvements = None
    if grid_points:
        improvements = tuple(
            float(v) for v in best_response_audit(scenario, values, grid_points)
        )

    hessian_eigenvalues = None
    hessian_kind = None
    if scenario.spec.n_groups == 2 and interior:
        eigenvalues = np.linalg.eigvalsh(player_payoff_hessian(scenario, 0, values))
        hessian_eigenvalues = (float(eigenvalues[0]), float(eigenvalues[1]))
        hessian_kind = _hessian_kind(eigenvalues)

    if improvements is None:
        if gradient_norm is None:
            raise DomainError(
                "nothing to classify: boundary profile with the audit disabled"
            )
        classification = (
            Classification.STATIONARY
            if gradient_norm <= tol
            else Classification.NOT_STATIONARY
        )
    else:
        is_nash = max(improvements) <= tol
        if gradient_norm is not None and gradient_norm > tol:
            classification = Classification.NOT_STATIONARY
        elif is_nash:
            classification = Classification.NASH_EQUILIBRIUM
        elif gradient_norm is not None:
            classification = Classification.STATIONARY_NOT_NASH
        else:
            classification = Classification.NOT_STATIONARY

    return EquilibriumReport(
        scenario=scenario.name,
        profile=values,
        gradient=gradient,
        gradient_norm=gradient_norm,
        improvements=improvements,
        hessian_eigenvalues=hessian_eigenvalues,
        hessian_kind=hessian_kind,
        classification=classification,
        tolerance=tol,
        grid_points=grid_points or None,
    )
