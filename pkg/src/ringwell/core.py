"""Reduced units for a charged particle on a ring with one attractive point well.

Everything downstream works with the dimensionless stationary equation

    psi'' + (eps + kappa * delta(theta)) * psi = 0,   theta in [0, 2pi),

where a single well-strength parameter ``kappa`` carries all the physics of
the charge ``q``, ring radius ``R0`` and particle constants, and ``eps`` is
the reduced energy.  This module owns that reduction and its inverse.  Atomic
units (hbar = m = e = 1) are the defaults; no solver ever sees anything else.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["SystemParams", "ReducedParams", "reduce", "physical_energy"]


@dataclass(frozen=True)
class SystemParams:
    """Physical description of the ring-with-well system.

    q:    well charge in units of the elementary charge; must be > 0
          (only the attractive case has a localized state).
    R0:   ring radius in bohr.
    m:    particle mass in electron masses.
    hbar: reduced Planck constant in atomic units.
    e:    elementary charge in atomic units.
    """

    q: float
    R0: float
    m: float = 1.0
    hbar: float = 1.0
    e: float = 1.0

    def __post_init__(self):
        if not self.q > 0:
            raise ValueError(f"well charge must be positive (attractive), got q={self.q}")
        if not self.R0 > 0:
            raise ValueError(f"ring radius must be positive, got R0={self.R0}")
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got m={self.m}")


@dataclass(frozen=True)
class ReducedParams:
    """Dimensionless well strength, constructable directly from ``kappa``.

    The slope ``lam`` = 2 / (pi * kappa) is the coefficient that appears when
    the characteristic equations are written against coth/cot; it is derived,
    never stored, so the two can not drift apart.
    """

    kappa: float

    def __post_init__(self):
        if not self.kappa > 0:
            raise ValueError(f"well strength must be positive, got kappa={self.kappa}")

    @property
    def lam(self) -> float:
        return 2.0 / (math.pi * self.kappa)


def reduce(params: SystemParams) -> ReducedParams:
    """Collapse the physical constants into the single well strength.

    kappa = 2 q e m R0^2 / hbar^2.  Scales linearly in q and quadratically
    in R0.
    """
    kappa = 2.0 * params.q * params.e * params.m * params.R0**2 / params.hbar**2
    return ReducedParams(kappa=kappa)


def physical_energy(eps: float, params: SystemParams) -> float:
    """Convert a reduced energy back to hartree: E = eps * hbar^2 / (2 m R0^2).

    Exact inverse of the reduction used in :func:`reduce`; round-trips to
    machine precision.
    """
    return eps * params.hbar**2 / (2.0 * params.m * params.R0**2)
