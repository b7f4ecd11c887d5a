"""n-qubit pure states with real amplitudes, and the two-component family.

Everything here is real-valued: the games in scope never introduce complex
phases, so amplitudes are signed reals and probabilities are their squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from collections.abc import Mapping

import numpy as np

from .errors import DimensionError, DomainError

NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StateVector:
    """A normalized real amplitude vector over the 2**n computational basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=float)
        size = 1 << self.n_qubits
        if amps.shape != (size,):
            raise DimensionError(f"expected {size} amplitudes, got shape {amps.shape}")
        if abs(float(amps @ amps) - 1.0) > NORM_TOL:
            raise DomainError(
                f"amplitudes must be normalized (sum of squares {float(amps @ amps)!r})"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n_qubits: int, index: int) -> "StateVector":
        size = 1 << n_qubits
        if not 0 <= index < size:
            raise DomainError(f"basis index {index} out of range for {n_qubits} qubits")
        amps = np.zeros(size)
        amps[index] = 1.0
        return cls(n_qubits, amps)

    @classmethod
    def from_amplitudes(
        cls,
        n_qubits: int,
        mapping: Mapping[int, float],
        renormalize: bool = False,
        slack: float = 1e-9,
    ) -> "StateVector":
        """Build from a sparse index -> amplitude map.

        With `renormalize`, the squared sum may deviate from one by up to
        `slack` and is then divided out exactly.
        """
        size = 1 << n_qubits
        amps = np.zeros(size)
        for index, amp in mapping.items():
            i = int(index)
            if not 0 <= i < size:
                raise DomainError(f"amplitude index {index} out of range for {n_qubits} qubits")
            amps[i] = float(amp)
        if renormalize:
            norm_sq = float(amps @ amps)
            if abs(norm_sq - 1.0) > slack:
                raise DomainError(
                    f"amplitudes must normalize to 1 within {slack}, got {norm_sq!r}"
                )
            if norm_sq > 0.0:
                amps = amps / math.sqrt(norm_sq)
        return cls(n_qubits, amps)

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n_qubits == other.n_qubits and np.array_equal(
            self.amplitudes, other.amplitudes
        )


@dataclass(frozen=True)
class TwoComponentState:
    """c1|basis_a> + c2|basis_b> with c1, c2 >= 0 and c1^2 + c2^2 = 1."""

    n_qubits: int
    basis_a: int
    basis_b: int
    c1: float
    c2: float

    def __post_init__(self):
        size = 1 << self.n_qubits
        if not (0 <= self.basis_a < size and 0 <= self.basis_b < size):
            raise DomainError("basis indices out of range")
        if self.basis_a == self.basis_b:
            raise DomainError("the two basis indices must differ")
        if self.c1 < 0 or self.c2 < 0:
            raise DomainError("component amplitudes must be nonnegative")
        if abs(self.c1**2 + self.c2**2 - 1.0) > NORM_TOL:
            raise DomainError("c1^2 + c2^2 must equal 1")

    @classmethod
    def from_c1(cls, n_qubits: int, basis_a: int, basis_b: int, c1: float) -> "TwoComponentState":
        c1 = float(c1)
        if not 0.0 <= c1 <= 1.0:
            raise DomainError(f"c1 must lie in [0, 1], got {c1!r}")
        return cls(n_qubits, basis_a, basis_b, c1, math.sqrt(1.0 - c1 * c1))

    @classmethod
    def from_entanglement(
        cls, n_qubits: int, basis_a: int, basis_b: int, a: float
    ) -> "TwoComponentState":
        """Pick the c1 >= c2 branch realizing entanglement coefficient a = c1*c2."""
        a = float(a)
        if not 0.0 <= a <= 0.5:
            raise DomainError(f"entanglement coefficient must lie in [0, 0.5], got {a!r}")
        c1 = math.sqrt((1.0 + math.sqrt(1.0 - 4.0 * a * a)) / 2.0)
        return cls.from_c1(n_qubits, basis_a, basis_b, min(c1, 1.0))

    def to_state_vector(self) -> StateVector:
        amps = np.zeros(1 << self.n_qubits)
        amps[self.basis_a] = self.c1
        amps[self.basis_b] = self.c2
        return StateVector(self.n_qubits, amps)


def build_two_component(n_qubits: int, basis_a: int, basis_b: int, c1: float) -> StateVector:
    """State with amplitude c1 at basis_a and sqrt(1 - c1^2) at basis_b."""
    return TwoComponentState.from_c1(n_qubits, basis_a, basis_b, c1).to_state_vector()


def probabilities(state: StateVector) -> np.ndarray:
    """Measurement probabilities in the computational basis (squared amplitudes)."""
    return state.amplitudes**2


def entanglement_coefficient(state: TwoComponentState) -> float:
    """a = c1*c2; zero for a product state, 1/2 at maximum entanglement."""
    return state.c1 * state.c2
