"""Superposed-operator semantics: amplitude mixing with square-root weights.

Each group applies sqrt(theta) I...I + sqrt(1-theta) X...X across its qubits.
That operator is not unitary, so the output coefficients are left exactly as
the arithmetic produces them: squared coefficients are the default "paper"
outcome weights and may sum to more than one.  A "normalized" mode divides by
the total squared weight for a probability reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

import numpy as np

from .errors import DimensionError, DomainError
from .game import GameSpec, OutcomeWeights, expected_payoffs
from .kernel import mask_weights, validate_profile, xor_convolve
from .states import StateVector

WEIGHT_MODES = ("paper", "normalized")


@dataclass(frozen=True, eq=False)
class QsoOutputState:
    """Unnormalized output coefficients of a superposed-operator move."""

    spec: GameSpec
    state: StateVector
    profile: tuple[float, ...]
    coefficients: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coefficients, dtype=float)
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def total_weight(self) -> float:
        """Sum of squared output coefficients; at least one for nonnegative inputs."""
        return float(self.coefficients @ self.coefficients)


def apply_qso(spec: GameSpec, state: StateVector, profile: Sequence[float]) -> QsoOutputState:
    """Apply every group's superposed operator to the state's amplitudes.

    The output coefficient at index m is the sum over group-consistent flip
    masks k of W_k * amplitude[m XOR k], where W_k multiplies sqrt(theta) per
    all-zero group and sqrt(1 - theta) per all-one group.  Nothing is
    renormalized.  Signed amplitudes pass through untouched.
    """
    if state.n_qubits != spec.n_players:
        raise DimensionError(
            f"state has {state.n_qubits} qubits but the game has {spec.n_players} players"
        )
    values = validate_profile(spec, profile)
    weights = mask_weights(spec, values, amplitude=True)
    coefficients = xor_convolve(state.amplitudes, weights)
    return QsoOutputState(spec, state, values, coefficients)


def qso_outcome_weights(out: QsoOutputState, mode: str = "paper") -> OutcomeWeights:
    """Squared output coefficients, raw ("paper") or divided by their sum."""
    if mode not in WEIGHT_MODES:
        raise DomainError(f"weight mode must be one of {WEIGHT_MODES}, got {mode!r}")
    squared = out.coefficients**2
    if mode == "paper":
        return OutcomeWeights(squared, normalized=False)
    total = float(squared.sum())
    if total <= 0.0:
        raise DomainError("degenerate output state: total weight is zero")
    return OutcomeWeights(squared / total, normalized=True)


def qso_payoffs(
    spec: GameSpec,
    state: StateVector,
    profile: Sequence[float],
    mode: str = "paper",
) -> np.ndarray:
    """Expected payoffs per player under the superposed-operator semantics."""
    weights = qso_outcome_weights(apply_qso(spec, state, profile), mode)
    return expected_payoffs(spec.table, weights)
