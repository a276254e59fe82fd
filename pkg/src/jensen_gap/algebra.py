"""Hermitian matrix algebra: spectral order, functional calculus, real powers.

The algebra of n-by-n complex Hermitian matrices carries the order
``a >= b  iff  spectrum(a - b) >= 0``.  Scalar maps are lifted to matrices
through the eigendecomposition ``f(c) = U diag(f(lambda)) U*``; an
independent contour-quadrature route to ``f(c)`` is provided as a
cross-check oracle.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

import numpy as np

from .errors import (
    ContourDoesNotEncloseSpectrum,
    ConvergenceError,
    DimensionMismatch,
    NonFiniteFunctionValue,
    NonHermitianInput,
    NotPositive,
    SingularResolvent,
    SpectrumOutOfWindow,
)
from .tolerances import TAU_CONTOUR, TAU_HERM, TAU_POS, tau_spec

__all__ = [
    "HermitianElement",
    "SpectralDecomposition",
    "SpectralInterval",
    "ContourSpec",
    "eigendecompose",
    "apply_function",
    "real_power",
    "apply_function_contour",
    "is_nonneg",
    "order_leq",
    "identity",
    "hermitian_from_diagonal",
]

_JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class SpectralInterval:
    """A window [m, M] assumed to contain the spectrum, with m < M."""

    m: float
    M: float

    def __post_init__(self):
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "M", float(self.M))
        if not (self.m < self.M):
            raise ValueError(f"window needs m < M, got [{self.m}, {self.M}]")

    @property
    def width(self) -> float:
        return self.M - self.m

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.m + self.M)

    def to_json(self) -> dict:
        return {"m": self.m, "M": self.M}

    @classmethod
    def from_json(cls, payload: dict) -> "SpectralInterval":
        return cls(payload["m"], payload["M"])


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending real eigenvalues and a unitary matrix of column eigenvectors."""

    eigenvalues: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "eigenvalues", np.asarray(self.eigenvalues, dtype=float)
        )
        object.__setattr__(
            self, "vectors", np.asarray(self.vectors, dtype=complex)
        )
        self.eigenvalues.setflags(write=False)
        self.vectors.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def min(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def max(self) -> float:
        return float(self.eigenvalues[-1])

    def reconstruct(self) -> np.ndarray:
        u = self.vectors
        return (u * self.eigenvalues) @ u.conj().T


@dataclass(frozen=True)
class ContourSpec:
    """A circle in the open right half-plane used for resolvent quadrature."""

    center: float
    radius: float
    nodes: int = 64

    def __post_init__(self):
        object.__setattr__(self, "center", float(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "nodes", int(self.nodes))
        if self.radius <= 0:
            raise ValueError("contour radius must be positive")
        if self.center - self.radius <= 0:
            raise ValueError("contour must stay in the open right half-plane")
        if self.nodes < 16:
            raise ValueError("contour needs at least 16 quadrature nodes")


@dataclass(frozen=True)
class HermitianElement:
    """A self-adjoint complex square matrix.

    The entries are validated against ``TAU_HERM`` on construction and kept
    read-only afterwards; the eigendecomposition is computed once on demand
    and cached.
    """

    matrix: np.ndarray
    _trusted_spectral: Optional[SpectralDecomposition] = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self):
        a = np.asarray(self.matrix, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NonHermitianInput(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise NonHermitianInput("dimension must be at least 1")
        skew = np.max(np.abs(a - a.conj().T))
        if skew > TAU_HERM:
            raise NonHermitianInput(
                f"matrix is not self-adjoint: max |a - a*| = {skew:.3e} > {TAU_HERM:.0e}"
            )
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "matrix", a)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def spectral(self) -> SpectralDecomposition:
        """Cached eigendecomposition (cyclic Jacobi)."""
        if self._trusted_spectral is not None:
            return self._trusted_spectral
        lam, u = _jacobi_hermitian(self.matrix)
        return SpectralDecomposition(lam, u)

    @property
    def spectral_radius(self) -> float:
        lam = self.spectral.eigenvalues
        return float(max(abs(lam[0]), abs(lam[-1])))

    # -- small closed arithmetic, enough for order tests ------------------
    def __add__(self, other: "HermitianElement") -> "HermitianElement":
        self._check_dim(other)
        return HermitianElement(self.matrix + other.matrix)

    def __sub__(self, other: "HermitianElement") -> "HermitianElement":
        self._check_dim(other)
        return HermitianElement(self.matrix - other.matrix)

    def scaled(self, alpha: float) -> "HermitianElement":
        return HermitianElement(float(alpha) * self.matrix)

    def _check_dim(self, other: "HermitianElement"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dims {self.dim} and {other.dim} differ")

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "re": self.matrix.real.tolist(),
            "im": self.matrix.imag.tolist(),
        }

    @classmethod
    def from_json(cls, payload: dict) -> "HermitianElement":
        dim = int(payload["dim"])
        re = np.asarray(payload["re"], dtype=float)
        im = np.asarray(payload["im"], dtype=float)
        if re.shape != (dim, dim) or im.shape != (dim, dim):
            raise NonHermitianInput(
                f"matrix payload shape mismatch: dim={dim}, re{re.shape}, im{im.shape}"
            )
        return cls(re + 1j * im)

    @classmethod
    def _from_eigensystem(
        cls, eigenvalues: np.ndarray, vectors: np.ndarray
    ) -> "HermitianElement":
        """Build an element from a known (sorted) eigensystem, caching it."""
        order = np.argsort(eigenvalues, kind="stable")
        lam = np.asarray(eigenvalues, dtype=float)[order]
        u = np.asarray(vectors, dtype=complex)[:, order]
        mat = (u * lam) @ u.conj().T
        mat = 0.5 * (mat + mat.conj().T)
        dec = SpectralDecomposition(lam, u)
        return cls(mat, _trusted_spectral=dec)


def identity(dim: int) -> HermitianElement:
    return HermitianElement(np.eye(dim, dtype=complex))


def hermitian_from_diagonal(values) -> HermitianElement:
    """Diagonal element from real values (kept in the given order)."""
    return HermitianElement(np.diag(np.asarray(values, dtype=float)).astype(complex))


# ---------------------------------------------------------------------------
# Eigensolver: cyclic Jacobi rotations on the Hermitian matrix.
# ---------------------------------------------------------------------------

def _jacobi_hermitian(a: np.ndarray):
    """Diagonalize a complex Hermitian matrix with cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below
    1e-12 * max(1, ||a||_F); the scale factor keeps the stop reachable in
    float64 for large-norm input.  Returns ascending eigenvalues and the
    corresponding unitary with phase-canonical columns.
    """
    n = a.shape[0]
    h = 0.5 * (a + a.conj().T)
    u = np.eye(n, dtype=complex)
    if n == 1:
        return np.array([h[0, 0].real]), u

    stop = 1e-12 * max(1.0, float(np.linalg.norm(h)))
    skip = stop / (4.0 * n * n)
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = np.linalg.norm(h - np.diag(np.diag(h)))
        if off < stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = h[p, q]
                gm = abs(g)
                if gm <= skip:
                    continue
                phase = g / gm
                tau = (h[q, q].real - h[p, p].real) / (2.0 * gm)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # columns, then rows: h <- V* h V with the plane rotation V
                hp = h[:, p].copy()
                hq = h[:, q].copy()
                h[:, p] = c * hp - s * np.conj(phase) * hq
                h[:, q] = s * hp + c * np.conj(phase) * hq
                hp = h[p, :].copy()
                hq = h[q, :].copy()
                h[p, :] = c * hp - s * phase * hq
                h[q, :] = s * hp + c * phase * hq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real
                up = u[:, p].copy()
                uq = u[:, q].copy()
                u[:, p] = c * up - s * np.conj(phase) * uq
                u[:, q] = s * up + c * np.conj(phase) * uq
    else:
        raise ConvergenceError(
            f"Jacobi sweeps did not converge in {_JACOBI_MAX_SWEEPS} passes"
        )

    lam = np.diag(h).real.copy()
    order = np.argsort(lam, kind="stable")
    lam = lam[order]
    u = u[:, order]
    return lam, _canonical_phases(u)


def _canonical_phases(u: np.ndarray) -> np.ndarray:
    """Rotate each column so its first non-negligible entry is real positive."""
    u = u.copy()
    for j in range(u.shape[1]):
        col = u[:, j]
        idx = np.flatnonzero(np.abs(col) > 1e-12)
        anchor = col[idx[0]] if idx.size else 1.0
        mag = abs(anchor)
        if mag > 0:
            u[:, j] = col * (np.conj(anchor) / mag)
    return u


def eigendecompose(c: HermitianElement) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian element (deterministic, cached)."""
    return c.spectral


# ---------------------------------------------------------------------------
# Functional calculus.
# ---------------------------------------------------------------------------

def _map_eigenvalues(fn: Callable, lam: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(fn(lam), dtype=float)
        if vals.shape != lam.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(fn(x)) for x in lam])
    return vals


def _lift(c: HermitianElement, vals: np.ndarray) -> HermitianElement:
    if not np.all(np.isfinite(vals)):
        raise NonFiniteFunctionValue("scalar map produced a non-finite value")
    u = c.spectral.vectors
    mat = (u * vals) @ u.conj().T
    mat = 0.5 * (mat + mat.conj().T)
    order = np.argsort(vals, kind="stable")
    dec = SpectralDecomposition(vals[order], u[:, order])
    return HermitianElement(mat, _trusted_spectral=dec)


def apply_function(
    c: HermitianElement, fn: Callable, window: SpectralInterval
) -> HermitianElement:
    """Lift the scalar map ``fn`` to ``c`` through its eigendecomposition.

    Every eigenvalue of ``c`` must lie in the window (up to the
    spectral-radius-relative tolerance); the result is Hermitian with
    spectrum ``fn(spectrum(c))``.
    """
    lam = c.spectral.eigenvalues
    tol = tau_spec(c.spectral_radius)
    if lam[0] < window.m - tol or lam[-1] > window.M + tol:
        raise SpectrumOutOfWindow(
            f"spectrum [{lam[0]:.6g}, {lam[-1]:.6g}] leaves window "
            f"[{window.m:.6g}, {window.M:.6g}]"
        )
    return _lift(c, _map_eigenvalues(fn, lam))


def real_power(a: HermitianElement, alpha: float) -> HermitianElement:
    """Real power of a strictly positive element."""
    lam = a.spectral.eigenvalues
    if lam[0] <= TAU_POS:
        raise NotPositive(
            f"real power needs a positive element; min eigenvalue {lam[0]:.3e}"
        )
    return _lift(a, lam ** float(alpha))


def _power_nonneg(a: HermitianElement, p: float) -> HermitianElement:
    """Power with p > 0 of a nonnegative element; clips roundoff negatives."""
    lam = a.spectral.eigenvalues
    if lam[0] < -TAU_POS:
        raise NotPositive(
            f"power of a nonnegative element requested, min eigenvalue {lam[0]:.3e}"
        )
    return _lift(a, np.clip(lam, 0.0, None) ** float(p))


def apply_function_contour(
    c: HermitianElement, fn: Callable, contour: ContourSpec
) -> HermitianElement:
    """Evaluate ``fn(c)`` by trapezoidal resolvent quadrature on a circle.

    Independent of the eigendecomposition route: resolvents come from dense
    linear solves.  The node count doubles (capped at 4096) until two
    successive grids agree to a tenth of the contour tolerance; trapezoid
    rule converges exponentially on analytic periodic integrands, so a few
    doublings suffice.
    """
    lam = c.spectral.eigenvalues
    if lam[0] <= TAU_POS:
        raise NotPositive(
            f"contour calculus implemented for positive elements; "
            f"min eigenvalue {lam[0]:.3e}"
        )
    inside = np.abs(lam - contour.center) < contour.radius
    if not np.all(inside):
        raise ContourDoesNotEncloseSpectrum(
            f"eigenvalues {lam[~inside]} lie on or outside the contour"
        )

    n_nodes = max(int(contour.nodes), 16)
    prev = None
    while True:
        approx = _resolvent_quadrature(c.matrix, lam, fn, contour, n_nodes)
        if prev is not None and np.max(np.abs(approx - prev)) < TAU_CONTOUR / 10.0:
            break
        if n_nodes >= 4096:
            break
        prev = approx
        n_nodes *= 2
    sym = 0.5 * (approx + approx.conj().T)
    return HermitianElement(sym)


def _resolvent_quadrature(a, lam, fn, contour, n_nodes):
    theta = 2.0 * np.pi * np.arange(n_nodes) / n_nodes
    ring = np.exp(1j * theta)
    zs = contour.center + contour.radius * ring
    gap = np.min(np.abs(zs[:, None] - lam[None, :]))
    if gap < TAU_POS:
        raise SingularResolvent(
            f"quadrature node within {gap:.3e} of an eigenvalue"
        )
    dim = a.shape[0]
    shifted = zs[:, None, None] * np.eye(dim) - a[None, :, :]
    resolvents = np.linalg.inv(shifted)
    weights = np.asarray(fn(zs), dtype=complex) * ring * (contour.radius / n_nodes)
    return np.einsum("k,kij->ij", weights, resolvents)


# ---------------------------------------------------------------------------
# Spectral order.
# ---------------------------------------------------------------------------

def is_nonneg(a: HermitianElement, tol: float = TAU_POS) -> bool:
    """True when the spectrum of ``a`` is >= -tol."""
    return a.spectral.min >= -tol


def order_leq(a: HermitianElement, b: HermitianElement, tol: float = TAU_POS) -> bool:
    """Spectral order test ``a <= b``, i.e. ``b - a`` nonnegative."""
    return is_nonneg(b - a, tol=tol)
