"""Eigenstates on the ring: one localized state, two oscillatory families.

With the well at theta = 0 the spectrum splits into

* a single localized state  N cosh(d (theta - pi))  with eps = -d^2,
* oscillatory "cos" states  C cos(d_n (pi - theta)) with eps = +d_n^2, one
  per branch of the oscillatory characteristic equation (these feel the
  well through the derivative jump at theta = 0),
* oscillatory "sin" states  sin(n (pi - theta)) / sqrt(pi) with eps = n^2,
  which have a node at the well and therefore sit exactly at the free-ring
  energies.

The sin family is what restores completeness: without it the spectrum would
be missing half the free-ring ladder, and comparison against the rank-one
oracle (which produces those eigenvalues exactly) would fail.  As kappa -> 0
each cos level rises to meet its sin partner and the familiar doubly
degenerate free spectrum reappears.

Evaluation uses theta in [0, 2pi) with the well at 0; all formulas are
2pi-periodic so the seam theta = 0 <-> 2pi is continuous by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .charfn import SignConvention, solve_bound, solve_unbound

__all__ = [
    "BoundState",
    "UnboundCosState",
    "UnboundSinState",
    "bound_normalization",
    "cos_normalization",
    "make_bound",
    "make_cos",
    "make_sin",
    "eval_psi",
    "full_spectrum",
    "smooth_radius",
]


def _scalar_or_array(x):
    x = np.asarray(x)
    return float(x) if x.ndim == 0 else x


def bound_normalization(d: float) -> float:
    """N = (sinh(2 pi d)/(2d) + pi)^(-1/2), overflow-safe for large d."""
    x = 2.0 * math.pi * d
    if x > 700.0:  # sinh overflows; its e^x/2 limit dominates pi completely
        return 2.0 * math.sqrt(d) * math.exp(-math.pi * d)
    return 1.0 / math.sqrt(math.sinh(x) / (2.0 * d) + math.pi)


def cos_normalization(d: float) -> float:
    """C = (sin(2 pi d)/(2d) + pi)^(-1/2); the bracket is always positive."""
    return 1.0 / math.sqrt(math.sin(2.0 * math.pi * d) / (2.0 * d) + math.pi)


@dataclass(frozen=True)
class BoundState:
    """The localized eps < 0 state, peaked at the well."""

    d: float
    N: float
    eps: float

    def psi(self, theta):
        th = np.asarray(theta, dtype=float)
        return _scalar_or_array(self.N * np.cosh(self.d * (th - math.pi)))

    def dpsi(self, theta):
        th = np.asarray(theta, dtype=float)
        return _scalar_or_array(self.N * self.d * np.sinh(self.d * (th - math.pi)))


@dataclass(frozen=True)
class UnboundCosState:
    """Oscillatory state that feels the well; eps = +d^2 with d off-integer."""

    d: float
    C: float
    eps: float
    branch: int
    convention: SignConvention = SignConvention.DERIVED

    def psi(self, theta):
        th = np.asarray(theta, dtype=float)
        return _scalar_or_array(self.C * np.cos(self.d * (math.pi - th)))

    def dpsi(self, theta):
        th = np.asarray(theta, dtype=float)
        return _scalar_or_array(self.C * self.d * np.sin(self.d * (math.pi - th)))


@dataclass(frozen=True)
class UnboundSinState:
    """Oscillatory state with a node at the well; untouched, eps = n^2 exactly."""

    n: int

    @property
    def eps(self) -> float:
        return float(self.n * self.n)

    def psi(self, theta):
        th = np.asarray(theta, dtype=float)
        return _scalar_or_array(np.sin(self.n * (math.pi - th)) / math.sqrt(math.pi))

    def dpsi(self, theta):
        th = np.asarray(theta, dtype=float)
        return _scalar_or_array(-self.n * np.cos(self.n * (math.pi - th)) / math.sqrt(math.pi))


def make_bound(kappa: float) -> BoundState:
    d = solve_bound(kappa).d
    return BoundState(d=d, N=bound_normalization(d), eps=-d * d)


def make_cos(kappa: float, n: int, convention: SignConvention = SignConvention.DERIVED) -> UnboundCosState:
    d = solve_unbound(kappa, n, convention).d
    return UnboundCosState(d=d, C=cos_normalization(d), eps=d * d, branch=n, convention=convention)


def make_sin(n: int) -> UnboundSinState:
    if n < 1:
        raise ValueError(f"sin states count from n=1, got {n}")
    return UnboundSinState(n=n)


def eval_psi(state, theta):
    """Evaluate a state at theta in [0, 2pi); callers reduce mod 2pi outside."""
    return state.psi(theta)


def full_spectrum(
    kappa: float,
    count: int | None = None,
    eps_max: float | None = None,
    convention: SignConvention = SignConvention.DERIVED,
) -> list:
    """All states ordered by reduced energy, truncated by count or eps_max.

    The list is {localized} + {cos_n} + {sin_n}.  Under DERIVED the cos roots
    satisfy (n - 1/2)^2 < eps < n^2, so each free level n^2 is bracketed from
    below by its cos partner with the sin partner exactly on it, and no two
    eigenvalues coincide for kappa > 0.
    """
    if (count is None) == (eps_max is None):
        raise ValueError("provide exactly one of count / eps_max")
    states: list = [make_bound(kappa)]
    n = 1
    while True:
        if count is not None and len(states) >= count + 1:
            break
        if eps_max is not None and float((n - 1) * (n - 1)) > eps_max:
            # lower edge of every remaining branch interval is past the cut
            break
        states.append(make_cos(kappa, n, convention))
        states.append(make_sin(n))
        n += 1
        if count is not None and n > count:
            break
    states.sort(key=lambda s: s.eps)
    if count is not None:
        states = states[:count]
    else:
        states = [s for s in states if s.eps <= eps_max]
    return states


def smooth_radius(q: float) -> float:
    """Ring radius (bohr) at which the localized state has no kink.

    Smoothness at the well forces d = 1/2, and feeding that through the
    characteristic equation with kappa = 2 q R0^2 (atomic units) gives
    R0 = sqrt(tanh(pi/2) / (2 q)).
    """
    if not q > 0:
        raise ValueError(f"well charge must be positive, got q={q}")
    return math.sqrt(math.tanh(math.pi / 2.0) / (2.0 * q))
