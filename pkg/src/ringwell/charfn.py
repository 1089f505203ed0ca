"""Characteristic equations of the ring-with-point-well spectrum.

The admissible wavenumbers ``d`` are roots of one transcendental equation per
sector:

    localized sector:    coth(pi d) = (2/kappa) d     -- exactly one d > 0
    oscillatory sector:  cot(pi d)  = -(2/kappa) d    -- one root per branch

Both right-hand-side signs are implemented for the oscillatory equation.
``DERIVED`` is the minus sign required by the derivative-jump condition at
the well (and confirmed independently by the rank-one oracle); the plus-sign
variant is kept as ``PAPER_COMPAT`` purely so the historic tabulated roots
can be reproduced.

Because cot(pi d) falls strictly from +inf to -inf on every interval
(n-1, n), each branch is a guaranteed bracket: PAPER_COMPAT roots live in
(n-1, n-1/2) where cot is positive, DERIVED roots in (n-1/2, n) where it is
negative.  Solvers clamp away from the poles, then hand the bracket to a
safeguarded Brent iteration with bisection fallback.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy.optimize import brentq

__all__ = [
    "SignConvention",
    "EquationKind",
    "Root",
    "CharEquation",
    "bound_residual",
    "unbound_residual",
    "solve_bound",
    "solve_unbound",
    "approx_bound",
    "approx_unbound",
    "approx_error_curve",
]

# brentq refuses rtol below 4*eps; this is as tight as float64 allows.
_RTOL = 4.0 * math.ulp(1.0)
_XTOL = 1e-300
_MAXITER = 200


class SignConvention(enum.Enum):
    """Sign of the linear term in the oscillatory characteristic equation."""

    DERIVED = "derived"
    PAPER_COMPAT = "paper-compat"


class EquationKind(enum.Enum):
    BOUND = "bound"
    UNBOUND = "unbound"


def coth(x: float) -> float:
    """Hyperbolic cotangent, safe for tiny and huge arguments.

    Uses coth(x) = 1 + 2/(e^{2x} - 1) with expm1, so the small-x pole and
    the large-x approach to +-1 are both evaluated without cancellation or
    overflow.  x must be nonzero.
    """
    if x < 0:
        return -coth(-x)
    if x > 350.0:  # 2/(e^700 - 1) underflows to zero anyway
        return 1.0
    return 1.0 + 2.0 / math.expm1(2.0 * x)


def cot_pi(x: float) -> float:
    """cot(pi * x), argument-reduced so large and near-integer x stay exact.

    cot(pi x) has period 1 in x; reducing x to x - round(x) in [-1/2, 1/2]
    keeps full precision near the poles at integer x.  At an exact integer
    the pole is reported as signed infinity.
    """
    r = x - round(x)
    if r == 0.0:
        return math.inf  # pole marker; the sign is direction-dependent
    if abs(r) == 0.5:
        return 0.0  # exact zero; cos(pi/2) in float64 is only ~6e-17
    return math.cos(math.pi * r) / math.sin(math.pi * r)


def bound_residual(x: float, kappa: float) -> float:
    """coth(pi x) - (2/kappa) x for x > 0; diverges to +inf as x -> 0+."""
    return coth(math.pi * x) - (2.0 / kappa) * x


def unbound_residual(x: float, kappa: float, convention: SignConvention = SignConvention.DERIVED) -> float:
    """cot(pi x) -+ (2/kappa) x; the sign of the linear term follows the convention."""
    if convention is SignConvention.DERIVED:
        return cot_pi(x) + (2.0 / kappa) * x
    return cot_pi(x) - (2.0 / kappa) * x


@dataclass(frozen=True)
class Root:
    """A solved characteristic-equation root.

    branch 0 is reserved for the localized root; oscillatory branches count
    from 1.  ``residual`` is the characteristic function evaluated at ``d``.
    """

    d: float
    branch: int
    residual: float
    iterations: int


@dataclass(frozen=True)
class CharEquation:
    """One characteristic-equation family at fixed well strength.

    Bundles the residual function with the bracketing strategy that makes
    every root solve a guaranteed-sign-change problem.
    """

    kind: EquationKind
    kappa: float
    convention: SignConvention = SignConvention.DERIVED

    def __post_init__(self):
        if not self.kappa > 0:
            raise ValueError(f"well strength must be positive, got kappa={self.kappa}")

    def residual(self, x: float) -> float:
        if self.kind is EquationKind.BOUND:
            return bound_residual(x, self.kappa)
        return unbound_residual(x, self.kappa, self.convention)

    def bracket(self, branch: int = 0) -> tuple[float, float]:
        """Sign-change interval for the requested branch.

        Bound: the root obeys sqrt(kappa/2pi) <= d <= kappa/2 + 1/pi (from
        coth(x) >= 1 and coth(x) <= 1 + 1/x), so the seeded interval already
        brackets; the expansion loop below is a safety net only.
        Unbound: half of the pole-to-pole branch interval, with the pole end
        clamped inward until the residual sign is correct.
        """
        if self.kind is EquationKind.BOUND:
            weak = math.sqrt(self.kappa / (2.0 * math.pi))
            lo = max(math.ulp(1.0), 0.5 * weak)
            hi = min(max(self.kappa, 1.0) + 1.0, self.kappa + 1.26 * weak)
            tries = 0
            while self.residual(lo) <= 0.0 and tries < 60:
                lo *= 0.25
                tries += 1
            tries = 0
            while self.residual(hi) >= 0.0 and tries < 60:
                hi *= 2.0
                tries += 1
            if not self.residual(lo) > 0.0 > self.residual(hi):
                raise RuntimeError(
                    f"failed to bracket the localized root for kappa={self.kappa}: "
                    f"f({lo})={self.residual(lo)}, f({hi})={self.residual(hi)}"
                )
            return lo, hi

        if branch < 1:
            raise ValueError(f"oscillatory branches count from 1, got {branch}")
        n = branch
        if self.convention is SignConvention.PAPER_COMPAT:
            # pole at n-1, zero of cot at n-1/2 where the residual is negative
            hi = n - 0.5
            lo = self._clamp_pole(pole=float(n - 1), toward=hi, want_positive=True)
            return lo, hi
        # DERIVED: residual positive at the cot zero n-1/2, pole at n
        lo = n - 0.5
        hi = self._clamp_pole(pole=float(n), toward=lo, want_positive=False)
        return lo, hi

    def _clamp_pole(self, pole: float, toward: float, want_positive: bool) -> float:
        delta = abs(toward - pole) / 16.0
        direction = math.copysign(1.0, toward - pole)
        for _ in range(64):
            x = pole + direction * delta
            r = self.residual(x)
            if math.isfinite(r) and (r > 0.0) == want_positive and r != 0.0:
                return x
            delta /= 16.0
        raise RuntimeError(
            f"could not clamp away from the pole at d={pole} for kappa={self.kappa}"
        )

    def solve(self, branch: int = 0) -> Root:
        lo, hi = self.bracket(branch)
        d, info = brentq(
            self.residual, lo, hi, xtol=_XTOL, rtol=_RTOL, maxiter=_MAXITER, full_output=True
        )
        return Root(d=d, branch=branch, residual=self.residual(d), iterations=info.iterations)


def solve_bound(kappa: float) -> Root:
    """The single positive root of coth(pi d) = (2/kappa) d."""
    return CharEquation(EquationKind.BOUND, kappa).solve(branch=0)


def solve_unbound(kappa: float, n: int, convention: SignConvention = SignConvention.DERIVED) -> Root:
    """The branch-n oscillatory root; n >= 1."""
    return CharEquation(EquationKind.UNBOUND, kappa, convention).solve(branch=n)


def approx_bound(kappa: float) -> float:
    """Closed-form estimate d ~ kappa/2, from coth -> 1 at large argument.

    Good for large kappa; poor as kappa -> 0 where the true root follows
    sqrt(kappa/2pi) instead.
    """
    if not kappa > 0:
        raise ValueError(f"well strength must be positive, got kappa={kappa}")
    return 0.5 * kappa

def approx_unbound(kappa: float, n: int) -> float:
    """Large-parameter oscillatory estimate d_n ~ n kappa/2.

    Only meaningful when the estimate lands inside the branch interval of
    the root it is approximating.
    """
    if not kappa > 0:
        raise ValueError(f"well strength must be positive, got kappa={kappa}")
    if n < 1:
        raise ValueError(f"oscillatory branches count from 1, got {n}")
    return 0.5 * n * kappa


def approx_error_curve(kappas) -> list[tuple[float, float]]:
    """Relative error (%) of the kappa/2 estimate against the exact root.

    Returns (d_exact, 100 * |d_exact - kappa/2| / d_exact) per input kappa,
    in input order.  The error falls monotonically as the root grows.
    """
    out = []
    for kappa in kappas:
        d = solve_bound(kappa).d
        out.append((d, 100.0 * abs(d - 0.5 * kappa) / d))
    return out
