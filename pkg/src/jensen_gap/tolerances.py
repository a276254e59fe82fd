"""Floating-point tolerances.

The inequalities this package checks are exact statements about real
numbers; these constants make each "greater or equal" testable in float64.
They are fixed once here and referenced everywhere else.
"""

import numpy as np

# Absolute tolerance for the self-adjointness check a == a*.
TAU_HERM = 1e-10

# Strict positivity / nonnegativity margin for eigenvalues.
TAU_POS = 1e-10

# Slack for order comparisons through a state functional.
TAU_ORDER = 1e-9

# Agreement between contour quadrature and eigendecomposition calculus.
TAU_CONTOUR = 1e-6


def tau_spec(spectral_radius: float) -> float:
    """Reconstruction / containment tolerance, relative to spectral radius."""
    return max(1e-9 * float(spectral_radius), 1e-12)


def tau_end(m: float, big_m: float) -> float:
    """Guard distance from a window endpoint for slope-defect evaluation."""
    return 1e-12 * (big_m - m)


def tau_chain(values, scale: float = 1e-9) -> float:
    """Comparison slack for a chain of values, relative to its magnitude."""
    peak = float(np.max(np.abs(values))) if len(values) else 0.0
    return scale * max(1.0, peak)
