"""Brute-force recomputation of both engines, kept deliberately literal.

Nothing here shares code with the engines beyond the payoff table: mask
probabilities are recomputed with explicit loops, the superposed operator is
materialized as a dense matrix, and payoffs accumulate index by index.  That
makes this module slow and redundant, which is the point: it is the arbiter
whenever an engine result or a transcribed formula is in doubt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from collections.abc import Sequence

import numpy as np

from .errors import DomainError
from .game import CoalitionSemantics, GameSpec
from .states import StateVector

MAX_DENSE_QUBITS = 12


@dataclass(frozen=True, eq=False)
class OracleResult:
    """Outcome weights and payoffs recomputed the slow way."""

    weights: np.ndarray
    payoffs: np.ndarray

    def max_deviation(self, engine_payoffs: Sequence[float]) -> float:
        """Largest per-player gap to an engine result; recomputed on every call."""
        return float(np.max(np.abs(self.payoffs - np.asarray(engine_payoffs, dtype=float))))


def _mask_probability(spec: GameSpec, profile: Sequence[float], mask: int) -> float:
    prob = 1.0
    for members, theta in zip(spec.groups, profile):
        bits = [(mask >> (spec.n_players - 1 - p)) & 1 for p in members]
        if spec.semantics is CoalitionSemantics.CORRELATED:
            if sum(bits) == 0:
                prob *= theta
            elif sum(bits) == len(bits):
                prob *= 1.0 - theta
            else:
                return 0.0
        else:
            for b in bits:
                prob *= (1.0 - theta) if b else theta
    return prob


def _payoffs_from_weights(spec: GameSpec, weights: Sequence[float]) -> np.ndarray:
    payoffs = np.zeros(spec.n_players)
    for outcome, weight in enumerate(weights):
        for player in range(spec.n_players):
            payoffs[player] += weight * spec.table.values[outcome, player]
    return payoffs


def oracle_cpo_payoffs(spec: GameSpec, x: Sequence[float], profile: Sequence[float]) -> OracleResult:
    """Classical engine redone as an explicit double loop over masks and outcomes."""
    size = 1 << spec.n_players
    pi = [_mask_probability(spec, profile, mask) for mask in range(size)]
    weights = np.zeros(size)
    for outcome in range(size):
        for mask in range(size):
            weights[outcome] += x[outcome ^ mask] * pi[mask]
    return OracleResult(weights, _payoffs_from_weights(spec, weights))


def oracle_qso_payoffs(
    spec: GameSpec,
    state: StateVector,
    profile: Sequence[float],
    mode: str = "paper",
) -> OracleResult:
    """Superposed engine redone by materializing the full dense operator.

    The operator is the weighted sum of flip-permutation matrices over all
    group-consistent masks, applied densely; outcome weights are the squared
    output coefficients (divided by their sum in normalized mode).
    """
    if spec.n_players > MAX_DENSE_QUBITS:
        raise DomainError(f"dense oracle is capped at {MAX_DENSE_QUBITS} qubits")
    size = 1 << spec.n_players
    operator = np.zeros((size, size))
    for mask in range(size):
        prob = _mask_probability(spec, profile, mask)
        if prob == 0.0:
            continue
        permutation = np.zeros((size, size))
        for basis in range(size):
            permutation[basis ^ mask, basis] = 1.0
        operator += math.sqrt(prob) * permutation
    output = operator @ state.amplitudes
    weights = output**2
    if mode == "normalized":
        total = float(weights.sum())
        if total <= 0.0:
            raise DomainError("degenerate output state: total weight is zero")
        weights = weights / total
    elif mode != "paper":
        raise DomainError(f"unknown weight mode {mode!r}")
    return OracleResult(weights, _payoffs_from_weights(spec, weights))


@dataclass(frozen=True)
class PolynomialFit:
    """Least-squares reconstruction of a payoff surface over profiles.

    `terms` maps monomial names (constant "1", group names, and pairwise
    products like "AB*C") to fitted coefficients; `radical_coefficient`
    multiplies sqrt of the product of theta*(1-theta) over all groups.  A
    residual at numerical-noise level confirms the functional form.
    """

    terms: dict[str, float]
    radical_coefficient: float
    residual: float


def expand_payoff_polynomial(scenario, player: int, sample_grid: Sequence[Sequence[float]]) -> PolynomialFit:
    """Fit one player's payoff onto {1, thetas, pairwise products} plus a radical term."""
    grid = np.asarray(sample_grid, dtype=float)
    if grid.ndim != 2 or grid.shape[1] != scenario.spec.n_groups:
        raise DomainError("sample grid must be shaped (points, n_groups)")
    names = scenario.spec.group_names
    columns = [np.ones(grid.shape[0])]
    labels = ["1"]
    for i, name in enumerate(names):
        columns.append(grid[:, i])
        labels.append(name)
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            columns.append(grid[:, i] * grid[:, j])
            labels.append(f"{names[i]}*{names[j]}")
    radical = np.sqrt(np.prod(grid * (1.0 - grid), axis=1))
    columns.append(radical)
    design = np.column_stack(columns)
    values = np.array([scenario.payoffs(row)[player] for row in grid])
    coefficients, _, rank, _ = np.linalg.lstsq(design, values, rcond=None)
    if rank < design.shape[1]:
        raise DomainError("rank-deficient sample grid; add more varied profiles")
    residual = float(np.max(np.abs(design @ coefficients - values)))
    return PolynomialFit(
        terms=dict(zip(labels, (float(c) for c in coefficients[:-1]))),
        radical_coefficient=float(coefficients[-1]),
        residual=residual,
    )
