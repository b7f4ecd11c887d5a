"""Scenario configs: named presets, JSON parsing and serialization, payoff dispatch.

A config is a JSON object, either a preset reference:

    {"preset": "tcqg-ghz", "a": 0.33, "mode": "paper"}

or a full description:

    {
      "name": "my-scenario",            # optional
      "n_players": 3,
      "groups": ["AB", "C"],            # names; the letters are the members
      "semantics": "correlated",        # correlated | shared_parameter | independent
      "engine": "qso",                  # cpo | qso
      "mode": "paper",                  # paper | normalized (weight handling, qso only)
      "state": {"two_component": {"basis_a": 0, "basis_b": 7, "c1": 0.7071067811865476}}
    }

The state is exactly one of a two-component shorthand or an amplitude map
{"amplitudes": {"0": 0.5, "3": -0.5, ...}}.  Amplitude maps may miss exact
normalization by up to 1e-9 and are renormalized exactly on load.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .cpo import cpo_outcome_distribution, cpo_payoffs, flip_mask_weights
from .errors import ConfigError
from .game import (
    PLAYER_NAMES,
    CoalitionSemantics,
    GameSpec,
    OutcomeWeights,
    minority_payoff_table,
)
from .qso import apply_qso, qso_outcome_weights, qso_payoffs
from .states import (
    StateVector,
    TwoComponentState,
    entanglement_coefficient,
    probabilities,
)

ENGINES = ("cpo", "qso")
DEFAULT_ENTANGLEMENT = 0.5

_QSO_PRESETS = {
    "tcqg-ghz": (3, 0b000, 0b111),
    "tcqg-flip": (3, 0b001, 0b110),
    "fcqg-qso-ghz": (4, 0b0000, 0b1111),
    "fcqg-qso-0001": (4, 0b0001, 0b1101),
}

_EIGHTH = 1.0 / math.sqrt(8.0)
_CPO_PRESETS = {
    "fcqg-cpo-uniform8": {i: _EIGHTH for i in (0, 1, 2, 3, 12, 13, 14, 15)},
    "fcqg-cpo-product": {0: 1.0},
    "fcqg-cpo-null": {i: _EIGHTH for i in (0, 3, 5, 6, 9, 10, 12, 15)},
    # A fixed non-uniform representative of the mixed support (x1, x2, x4,
    # x7, x8, x11, x13, x14 all zero).
    "fcqg-cpo-mixed": {
        0: math.sqrt(0.30),
        3: math.sqrt(0.20),
        5: math.sqrt(0.15),
        6: math.sqrt(0.10),
        9: math.sqrt(0.10),
        10: math.sqrt(0.05),
        12: math.sqrt(0.05),
        15: math.sqrt(0.05),
    },
}

PRESETS = tuple(sorted(_QSO_PRESETS) + sorted(_CPO_PRESETS))


@dataclass(frozen=True, eq=False)
class Scenario:
    """A fully resolved game: spec, engine, weight mode, and initial state."""

    name: str
    spec: GameSpec
    engine: str
    mode: str
    state: StateVector
    two_component: TwoComponentState | None = None

    def payoffs(self, profile) -> np.ndarray:
        if self.engine == "cpo":
            return cpo_payoffs(self.spec, probabilities(self.state), profile)
        return qso_payoffs(self.spec, self.state, profile, self.mode)

    def outcome_weights(self, profile) -> OutcomeWeights:
        if self.engine == "cpo":
            x = probabilities(self.state)
            return cpo_outcome_distribution(x, flip_mask_weights(self.spec, profile))
        return qso_outcome_weights(apply_qso(self.spec, self.state, profile), self.mode)

    def group_payoff(self, group: int, profile) -> float:
        """Mean payoff of the group's members (their own stake in the profile)."""
        pays = self.payoffs(profile)
        return float(np.mean(pays[list(self.spec.groups[group])]))

    @property
    def entanglement(self) -> float | None:
        if self.two_component is None:
            return None
        return entanglement_coefficient(self.two_component)

    def with_entanglement(self, a: float) -> "Scenario":
        """Same scenario with the two-component state rebuilt for coefficient a."""
        if self.two_component is None:
            raise ConfigError(
                f"scenario {self.name!r} has no two-component state to reparameterize"
            )
        tc = TwoComponentState.from_entanglement(
            self.two_component.n_qubits,
            self.two_component.basis_a,
            self.two_component.basis_b,
            a,
        )
        return replace(self, state=tc.to_state_vector(), two_component=tc)

    def with_mode(self, mode: str) -> "Scenario":
        if mode not in ("paper", "normalized"):
            raise ConfigError(f"weight mode must be paper or normalized, got {mode!r}")
        return replace(self, mode=mode)

    def __eq__(self, other):
        if not isinstance(other, Scenario):
            return NotImplemented
        return (
            self.name == other.name
            and self.spec == other.spec
            and self.engine == other.engine
            and self.mode == other.mode
            and self.state == other.state
            and self.two_component == other.two_component
        )


def preset_scenario(name: str, a: float | None = None, mode: str | None = None) -> Scenario:
    """Build one of the named presets; `a` applies to two-component presets only."""
    mode = mode or "paper"
    if mode not in ("paper", "normalized"):
        raise ConfigError(f"weight mode must be paper or normalized, got {mode!r}")
    if name in _QSO_PRESETS:
        n, basis_a, basis_b = _QSO_PRESETS[name]
        coefficient = DEFAULT_ENTANGLEMENT if a is None else float(a)
        tc = TwoComponentState.from_entanglement(n, basis_a, basis_b, coefficient)
        return Scenario(name, GameSpec.leading_pair(n), "qso", mode, tc.to_state_vector(), tc)
    if name in _CPO_PRESETS:
        if a is not None:
            raise ConfigError(f"preset {name!r} has no entanglement parameter")
        state = StateVector.from_amplitudes(4, _CPO_PRESETS[name], renormalize=True)
        return Scenario(name, GameSpec.independent(4), "cpo", mode, state)
    raise ConfigError(f"unknown preset {name!r}; known presets: {', '.join(PRESETS)}")


def _parse_groups(n_players: int, names) -> tuple[tuple[int, ...], ...]:
    if not isinstance(names, list) or not all(isinstance(g, str) for g in names):
        raise ConfigError("groups must be a list of strings like [\"AB\", \"C\"]")
    valid = PLAYER_NAMES[:n_players]
    groups = []
    for group_name in names:
        members = []
        for letter in group_name:
            if letter not in valid:
                raise ConfigError(
                    f"group {group_name!r} names player {letter!r}, "
                    f"but this game has players {valid}"
                )
            members.append(valid.index(letter))
        groups.append(tuple(members))
    return tuple(groups)


def parse_config(data) -> Scenario:
    """Turn a parsed JSON object into a Scenario (see the module docstring)."""
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    if "preset" in data:
        extra = set(data) - {"preset", "a", "mode"}
        if extra:
            raise ConfigError(
                f"a preset config allows only 'a' and 'mode' overrides, got {sorted(extra)}"
            )
        return preset_scenario(data["preset"], data.get("a"), data.get("mode"))

    required = {"n_players", "groups", "semantics", "engine", "state"}
    missing = required - set(data)
    if missing:
        raise ConfigError(f"config is missing keys: {sorted(missing)}")
    unknown = set(data) - required - {"name", "mode"}
    if unknown:
        raise ConfigError(f"config has unknown keys: {sorted(unknown)}")

    engine = data["engine"]
    if engine not in ENGINES:
        raise ConfigError(f"engine must be one of {ENGINES}, got {engine!r}")
    mode = data.get("mode", "paper")
    if mode not in ("paper", "normalized"):
        raise ConfigError(f"mode must be paper or normalized, got {mode!r}")

    try:
        n_players = int(data["n_players"])
        semantics = CoalitionSemantics(data["semantics"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    state_data = data["state"]
    if not isinstance(state_data, dict) or len(state_data) != 1:
        raise ConfigError("state must hold exactly one of 'amplitudes' or 'two_component'")

    try:
        groups = _parse_groups(n_players, data["groups"])
        spec = GameSpec(n_players, groups, semantics, minority_payoff_table(n_players))
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    two_component = None
    try:
        if "two_component" in state_data:
            tc_data = state_data["two_component"]
            two_component = TwoComponentState.from_c1(
                n_players,
                int(tc_data["basis_a"]),
                int(tc_data["basis_b"]),
                float(tc_data["c1"]),
            )
            state = two_component.to_state_vector()
        elif "amplitudes" in state_data:
            mapping = {int(k): float(v) for k, v in state_data["amplitudes"].items()}
            state = StateVector.from_amplitudes(n_players, mapping, renormalize=True)
        else:
            raise ConfigError("state must hold 'amplitudes' or 'two_component'")
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad state description: {exc}") from exc

    return Scenario(str(data.get("name", "custom")), spec, engine, mode, state, two_component)


def config_dict(scenario: Scenario) -> dict:
    """Serialize a Scenario back into the config schema; exact round trip."""
    if scenario.two_component is not None:
        tc = scenario.two_component
        state = {
            "two_component": {
                "basis_a": tc.basis_a,
                "basis_b": tc.basis_b,
                "c1": tc.c1,
            }
        }
    else:
        state = {
            "amplitudes": {
                str(i): float(amp)
                for i, amp in enumerate(scenario.state.amplitudes)
                if amp != 0.0
            }
        }
    return {
        "name": scenario.name,
        "n_players": scenario.spec.n_players,
        "groups": list(scenario.spec.group_names),
        "semantics": scenario.spec.semantics.value,
        "engine": scenario.engine,
        "mode": scenario.mode,
        "state": state,
    }


def load_scenario(path) -> Scenario:
    """Read and parse a JSON config file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}: {exc.msg}") from exc
    return parse_config(data)


def save_scenario(scenario: Scenario, path) -> None:
    Path(path).write_text(json.dumps(config_dict(scenario), indent=2) + "\n")
