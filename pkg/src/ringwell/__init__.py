"""Eigenstates of a quantum particle on a ring with an attractive point well.

Closed-form states from transcendental characteristic equations, an
independent rank-one Fourier-basis oracle, a grid-based second opinion, and
an invariant suite that binds them together.
"""

from .charfn import (
    CharEquation,
    Root,
    SignConvention,
    approx_bound,
    approx_error_curve,
    approx_unbound,
    bound_residual,
    solve_bound,
    solve_unbound,
    unbound_residual,
)
from .core import ReducedParams, SystemParams, physical_energy, reduce
from .oracle import OracleConfig, OracleSpectrum, grid_oracle, oracle_spectrum, secular_residual, symmetric_eigenvalue
from .states import (
    BoundState,
    UnboundCosState,
    UnboundSinState,
    eval_psi,
    full_spectrum,
    make_bound,
    make_cos,
    make_sin,
    smooth_radius,
)
from .verify import Tolerances, VerificationReport, check_spectrum, check_state

__version__ = "0.1.0"

__all__ = [
    "BoundState",
    "CharEquation",
    "OracleConfig",
    "OracleSpectrum",
    "ReducedParams",
    "Root",
    "SignConvention",
    "SystemParams",
    "Tolerances",
    "UnboundCosState",
    "UnboundSinState",
    "VerificationReport",
    "approx_bound",
    "approx_error_curve",
    "approx_unbound",
    "bound_residual",
    "check_spectrum",
    "check_state",
    "eval_psi",
    "full_spectrum",
    "grid_oracle",
    "make_bound",
    "make_cos",
    "make_sin",
    "oracle_spectrum",
    "physical_energy",
    "reduce",
    "secular_residual",
    "smooth_radius",
    "solve_bound",
    "solve_unbound",
    "symmetric_eigenvalue",
    "unbound_residual",
]
