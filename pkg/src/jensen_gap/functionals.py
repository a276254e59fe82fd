"""Positive normalized linear functionals (states) on the matrix algebra.

Four concrete families are provided: the normalized trace, vector states
x* a x, convex combinations of diagonal entries, and mixtures of the
above.  All four send the identity to 1, nonnegative elements to
nonnegative reals, and respect the spectral order.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from .algebra import HermitianElement
from .errors import DimensionMismatch, InvariantViolation, UnsupportedFamily
from .tolerances import TAU_ORDER

__all__ = [
    "NormalizedTrace",
    "VectorState",
    "WeightedDiagonal",
    "Mixture",
    "StateFunctional",
    "evaluate",
    "sample_functional",
    "state_to_json",
    "state_from_json",
    "FAMILIES",
]

FAMILIES = ("trace", "vector", "weights", "mixture")


@dataclass(frozen=True)
class NormalizedTrace:
    """psi(a) = tr(a) / dim; defined for every dimension."""

    kind = "trace"

    def dim_ok(self, dim: int) -> bool:
        return True


@dataclass(frozen=True)
class VectorState:
    """psi(a) = x* a x for a unit vector x."""

    vector: np.ndarray
    kind = "vector"

    def __post_init__(self):
        x = np.asarray(self.vector, dtype=complex).reshape(-1)
        norm = float(np.linalg.norm(x))
        if abs(norm - 1.0) > TAU_ORDER:
            raise InvariantViolation(f"vector state norm {norm!r} is not 1")
        x.setflags(write=False)
        object.__setattr__(self, "vector", x)

    def dim_ok(self, dim: int) -> bool:
        return self.vector.shape[0] == dim


@dataclass(frozen=True)
class WeightedDiagonal:
    """psi(a) = sum_i w_i a_ii with nonnegative weights summing to 1."""

    weights: np.ndarray
    kind = "weights"

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        if np.any(w < -TAU_ORDER):
            raise InvariantViolation("diagonal weights must be nonnegative")
        total = float(w.sum())
        if abs(total - 1.0) > TAU_ORDER:
            raise InvariantViolation(f"diagonal weights sum to {total!r}, not 1")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def dim_ok(self, dim: int) -> bool:
        return self.weights.shape[0] == dim


@dataclass(frozen=True)
class Mixture:
    """Convex combination of component states."""

    components: Tuple[Tuple[float, "StateFunctional"], ...]
    kind = "mixture"

    def __post_init__(self):
        comps = tuple((float(w), s) for w, s in self.components)
        if not comps:
            raise InvariantViolation("mixture needs at least one component")
        if any(w < -TAU_ORDER for w, _ in comps):
            raise InvariantViolation("mixture weights must be nonnegative")
        total = sum(w for w, _ in comps)
        if abs(total - 1.0) > TAU_ORDER:
            raise InvariantViolation(f"mixture weights sum to {total!r}, not 1")
        object.__setattr__(self, "components", comps)

    def dim_ok(self, dim: int) -> bool:
        return all(s.dim_ok(dim) for _, s in self.components)


StateFunctional = Union[NormalizedTrace, VectorState, WeightedDiagonal, Mixture]


def evaluate(state: StateFunctional, a: HermitianElement) -> float:
    """Apply the functional to a Hermitian element; the value is real."""
    if not state.dim_ok(a.dim):
        raise DimensionMismatch(
            f"state of kind '{state.kind}' does not fit dimension {a.dim}"
        )
    return _evaluate(state, a.matrix, a.dim)


def _evaluate(state, matrix, dim) -> float:
    if isinstance(state, NormalizedTrace):
        return float(np.trace(matrix).real) / dim
    if isinstance(state, VectorState):
        x = state.vector
        return float(np.vdot(x, matrix @ x).real)
    if isinstance(state, WeightedDiagonal):
        return float(np.dot(state.weights, np.diagonal(matrix).real))
    if isinstance(state, Mixture):
        return float(
            sum(w * _evaluate(s, matrix, dim) for w, s in state.components)
        )
    raise UnsupportedFamily(f"unknown state object {state!r}")


# ---------------------------------------------------------------------------
# Sampling.
# ---------------------------------------------------------------------------

def sample_functional(dim: int, family: str, seed) -> StateFunctional:
    """Draw a valid state of the requested family, deterministic per seed."""
    rng = np.random.default_rng(seed)
    return _sample_with_rng(dim, family, rng)


def _sample_with_rng(dim: int, family: str, rng: np.random.Generator):
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if family == "trace":
        return NormalizedTrace()
    if family == "vector":
        return VectorState(_unit_vector(dim, rng))
    if family == "weights":
        return WeightedDiagonal(_simplex_point(dim, rng))
    if family == "mixture":
        mix = _simplex_point(3, rng)
        return Mixture(
            (
                (mix[0], NormalizedTrace()),
                (mix[1], VectorState(_unit_vector(dim, rng))),
                (mix[2], WeightedDiagonal(_simplex_point(dim, rng))),
            )
        )
    raise UnsupportedFamily(f"unknown family tag '{family}'")


def _unit_vector(dim, rng):
    x = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return x / np.linalg.norm(x)


def _simplex_point(dim, rng):
    w = rng.random(dim) + 1e-12
    return w / w.sum()


# ---------------------------------------------------------------------------
# Serialization.
# ---------------------------------------------------------------------------

def state_to_json(state: StateFunctional) -> dict:
    if isinstance(state, NormalizedTrace):
        return {"kind": "trace"}
    if isinstance(state, VectorState):
        return {
            "kind": "vector",
            "re": state.vector.real.tolist(),
            "im": state.vector.imag.tolist(),
        }
    if isinstance(state, WeightedDiagonal):
        return {"kind": "weights", "w": state.weights.tolist()}
    if isinstance(state, Mixture):
        return {
            "kind": "mixture",
            "components": [
                {"weight": w, "state": state_to_json(s)}
                for w, s in state.components
            ],
        }
    raise UnsupportedFamily(f"cannot serialize {state!r}")


def state_from_json(payload: dict) -> StateFunctional:
    kind = payload.get("kind")
    if kind == "trace":
        return NormalizedTrace()
    if kind == "vector":
        re = np.asarray(payload["re"], dtype=float)
        im = np.asarray(payload["im"], dtype=float)
        return VectorState(re + 1j * im)
    if kind == "weights":
        return WeightedDiagonal(np.asarray(payload["w"], dtype=float))
    if kind == "mixture":
        comps = tuple(
            (float(item["weight"]), state_from_json(item["state"]))
            for item in payload["components"]
        )
        return Mixture(comps)
    raise UnsupportedFamily(f"unknown state kind {kind!r}")
