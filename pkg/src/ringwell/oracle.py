"""Independent ground truth from the plane-wave (angular-momentum) basis.

In the basis e^{i m theta} / sqrt(2 pi), m = -M..M, the reduced Hamiltonian
-d^2/dtheta^2 - kappa delta(theta) is exactly

    H = diag(m^2) - (kappa / 2 pi) * ones,

a diagonal matrix minus a rank-one all-ones coupling.  That structure is the
whole point: no general eigensolver is needed, and nothing here depends on
the characteristic equations being checked.

Antisymmetric combinations (m, -m) are annihilated by the all-ones coupling,
so they keep their free eigenvalues m^2 exactly.  The symmetric sector
reduces to the scalar secular equation

    1 = (kappa / 2 pi) * sum_m 1 / (m^2 - eps),

whose roots interlace the distinct diagonal values {0, 1, 4, ..., M^2}:
exactly one root below 0 and one in each gap.  Every root is found by
bisection inside its guaranteed bracket.  In the M -> infinity limit the
partial-fraction identities

    sum_{m in Z} 1/(m^2 + d^2) =  pi coth(pi d) / d
    sum_{m in Z} 1/(m^2 - d^2) = -pi cot(pi d) / d

turn the secular equation into coth(pi d) = (2/kappa) d below zero and
cot(pi d) = -(2/kappa) d above, which is what makes this an analytic, not
merely numerical, cross-check (and what settles the sign of the oscillatory
equation).

Truncation error of the lowest root is O(1/M) from the series tail, so
convergence studies extrapolate in 1/M.

A second, physically distinct discretization (periodic finite differences
with the delta as a narrow grid potential, solved by deflated inverse
iteration) guards against shared-mistake failure modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

__all__ = [
    "OracleConfig",
    "OracleSpectrum",
    "GridResult",
    "secular_residual",
    "symmetric_eigenvalue",
    "oracle_spectrum",
    "grid_oracle",
]

_RESIDUAL_TOL = 1e-11
_MAX_BISECT = 200


@dataclass(frozen=True)
class OracleConfig:
    """Secular-oracle inputs: well strength and basis truncation.

    Modes m = -M..M give a (2M+1)-dimensional space.  ``diagonal_shift``
    adds a constant to every diagonal entry; a rank-one update must shift
    every eigenvalue by exactly that constant, which makes the field a
    machine-precision self-test hook.
    """

    kappa: float
    M: int
    diagonal_shift: float = 0.0

    def __post_init__(self):
        if not self.kappa > 0:
            raise ValueError(f"well strength must be positive, got kappa={self.kappa}")
        if self.M < 1:
            raise ValueError(f"need at least modes -1..1, got M={self.M}")


@dataclass(frozen=True)
class OracleSpectrum:
    """All 2M+1 eigenvalues of the truncated rank-one problem.

    ``symmetric`` holds the M+1 secular roots (index 0 below the diagonal,
    index j in the gap ((j-1)^2, j^2)); ``antisymmetric`` the M exact values
    m^2.  ``eigenvalues`` is the sorted merge; ``multiplicities`` groups
    exactly equal entries (all ones away from the kappa -> 0 limit).
    ``residuals`` are the secular-function values at the returned roots.
    """

    symmetric: np.ndarray
    antisymmetric: np.ndarray
    eigenvalues: np.ndarray
    multiplicities: tuple
    M: int
    residuals: np.ndarray


def secular_residual(eps: float, kappa: float, M: int, diagonal_shift: float = 0.0) -> float:
    """1 - (kappa/2pi) * sum_{m=-M..M} 1/(m^2 + shift - eps), pairwise-summed.

    Strictly decreasing in eps between consecutive poles.  Raises if eps sits
    within 1e-13 of a pole, where the sum is meaningless in float64.
    """
    m = np.arange(1.0, M + 1.0)
    gaps = m * m + (diagonal_shift - eps)
    g0 = diagonal_shift - eps
    if abs(g0) < 1e-13 or np.min(np.abs(gaps)) < 1e-13:
        raise ValueError(f"eps={eps} is within 1e-13 of a diagonal pole")
    s = 2.0 * np.sum(1.0 / gaps) + 1.0 / g0  # np.sum is pairwise for float64
    return 1.0 - kappa / (2.0 * math.pi) * float(s)


def _bisect_decreasing(f, lo: float, hi: float):
    """Bisection for strictly decreasing f with f(lo) > 0 > f(hi).

    Returns (root, residual, iterations); the returned point is the evaluated
    abscissa with the smallest |f| seen, so the reported residual is honest.
    """
    best_x, best_r = lo, math.inf
    for it in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):  # interval collapsed to adjacent floats
            return best_x, best_r, it
        r = f(mid)
        if abs(r) < abs(best_r):
            best_x, best_r = mid, r
        if r == 0.0:
            return mid, 0.0, it + 1
        if r > 0.0:
            lo = mid
        else:
            hi = mid
    return best_x, best_r, _MAX_BISECT


def symmetric_eigenvalue(kappa: float, M: int, index: int, diagonal_shift: float = 0.0):
    """One symmetric-sector root by interlacing-guaranteed bisection.

    index 0: the root below the diagonal, seeded at -(kappa/2)^2 - kappa
    (below the infinite-basis value, hence below every truncation of it).
    index j in 1..M: the root in the gap ((j-1)^2, j^2).

    Returns (eps, residual, iterations).  A bracket whose signs are wrong is
    a hard error: it would contradict the interlacing theorem.
    """
    if not 0 <= index <= M:
        raise ValueError(f"symmetric-sector indices run 0..M={M}, got {index}")
    s = diagonal_shift
    f = lambda e: secular_residual(e, kappa, M, s)

    if index == 0:
        lo = s - (0.5 * kappa) ** 2 - kappa
        hi = s - kappa / (4.0 * math.pi)  # m=0 term alone already makes f <= -1
        tries = 0
        while f(lo) <= 0.0 and tries < 60:
            lo = s - 2.0 * (s - lo)
            tries += 1
    else:
        left = float((index - 1) * (index - 1)) + s
        right = float(index * index) + s
        lo = _clamp_from_pole(f, left, right, want_positive=True)
        hi = _clamp_from_pole(f, right, left, want_positive=False)

    flo, fhi = f(lo), f(hi)
    if not (flo > 0.0 > fhi):
        raise RuntimeError(
            f"interlacing bracket violated at kappa={kappa}, M={M}, index={index}: "
            f"f({lo})={flo}, f({hi})={fhi} (implementation bug)"
        )
    root, residual, iterations = _bisect_decreasing(f, lo, hi)
    if abs(residual) > _RESIDUAL_TOL and not _sign_change_at_ulp(f, root):
        # a root pinned between adjacent floats is exact even when the local
        # slope makes the residual value itself unrepresentably small
        raise RuntimeError(
            f"secular residual {residual} above {_RESIDUAL_TOL} at kappa={kappa}, "
            f"M={M}, index={index}"
        )
    return root, residual, iterations


def _sign_change_at_ulp(f, root: float) -> bool:
    try:
        below = f(np.nextafter(root, -math.inf))
        above = f(np.nextafter(root, math.inf))
    except ValueError:
        return False
    return below >= 0.0 >= above


def _clamp_from_pole(f, pole: float, toward: float, want_positive: bool) -> float:
    delta = abs(toward - pole) / 16.0
    direction = math.copysign(1.0, toward - pole)
    for _ in range(64):
        x = pole + direction * delta
        try:
            r = f(x)
        except ValueError:
            break
        if (r > 0.0) == want_positive and r != 0.0:
            return x
        delta /= 16.0
    raise RuntimeError(f"no sign-correct point next to the pole at eps={pole}")


def oracle_spectrum(config: OracleConfig) -> OracleSpectrum:
    """Full truncated spectrum: M+1 secular roots plus M exact m^2 values."""
    kappa, M, s = config.kappa, config.M, config.diagonal_shift
    roots = np.empty(M + 1)
    residuals = np.empty(M + 1)
    for index in range(M + 1):
        roots[index], residuals[index], _ = symmetric_eigenvalue(kappa, M, index, s)
    anti = np.array([float(m * m) + s for m in range(1, M + 1)])
    merged = np.sort(np.concatenate([roots, anti]))
    mults = []
    i = 0
    while i < merged.size:
        j = i
        while j + 1 < merged.size and merged[j + 1] == merged[i]:
            j += 1
        mults.append(j - i + 1)
        i = j + 1
    return OracleSpectrum(
        symmetric=roots,
        antisymmetric=anti,
        eigenvalues=merged,
        multiplicities=tuple(mults),
        M=M,
        residuals=residuals,
    )


# ---------------------------------------------------------------------------
# Grid oracle: periodic finite differences, deflated inverse iteration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GridResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # columns, orthonormal
    iterations: tuple


def _cyclic_tridiag_solve(main: np.ndarray, off: float, rhs: np.ndarray) -> np.ndarray:
    """Solve the periodic tridiagonal system (constant off-diagonal).

    Sherman-Morrison on top of a banded LAPACK solve: the two corner entries
    are written as a rank-one update of an ordinary tridiagonal matrix.
    """
    n = main.size
    gamma = -main[0]
    b = main.copy()
    b[0] -= gamma
    b[-1] -= off * off / gamma
    ab = np.zeros((3, n))
    ab[0, 1:] = off
    ab[1] = b
    ab[2, :-1] = off
    u = np.zeros(n)
    u[0] = gamma
    u[-1] = off
    y, z = solve_banded((1, 1), ab, np.column_stack([rhs, u])).T
    factor = (y[0] + off * y[-1] / gamma) / (1.0 + z[0] + off * z[-1] / gamma)
    return y - factor * z


def _grid_potential(kappa: float, n_points: int, well_width: float | None) -> np.ndarray:
    h = 2.0 * math.pi / n_points
    v = np.zeros(n_points)
    if kappa == 0.0:
        return v
    if well_width is None:
        cells = [0]
    else:
        half = int(well_width / 2.0 / h)
        cells = [0] + [c for k in range(1, half + 1) for c in (k, n_points - k)]
    v[cells] = -kappa / (len(cells) * h)  # integrates to -kappa exactly
    return v


def grid_oracle(
    kappa: float,
    n_points: int,
    well_width: float | None = None,
    count: int = 3,
    tol: float = 1e-10,
    max_iter: int = 400,
) -> GridResult:
    """Lowest-count eigenpairs of the periodic finite-difference problem.

    Second-order Laplacian on n_points cells with the point well replaced by
    a single-cell (or top-hat of width well_width) potential of integrated
    strength kappa.  Eigenpairs come from inverse-power iteration with a
    fixed below-spectrum shift, switching to Rayleigh-quotient shifts once
    the iterate has settled, deflating previously found vectors throughout.

    Single-cell wells converge to the analytic values as n_points grows;
    top-hat wells carry an additional broadening error first order in the
    width.
    """
    if n_points < 64:
        raise ValueError(f"need at least 64 grid points, got {n_points}")
    if kappa < 0:
        raise ValueError(f"well strength must be nonnegative, got kappa={kappa}")
    h = 2.0 * math.pi / n_points
    v = _grid_potential(kappa, n_points, well_width)
    main = 2.0 / h**2 + v
    off = -1.0 / h**2

    def apply_h(x):
        return main * x - (np.roll(x, 1) + np.roll(x, -1)) / h**2

    rng = np.random.default_rng(1234)
    found_vals: list[float] = []
    found_vecs: list[np.ndarray] = []
    iter_counts: list[int] = []
    sigma_floor = -((0.5 * kappa) ** 2) - kappa - 1.0

    for _ in range(count):
        x = rng.standard_normal(n_points)
        for vec in found_vecs:
            x -= vec * (vec @ x)
        x /= np.linalg.norm(x)
        sigma = sigma_floor
        theta = 0.0
        converged = False
        for it in range(max_iter):
            try:
                y = _cyclic_tridiag_solve(main - sigma, off, x)
            except np.linalg.LinAlgError:
                sigma += 1e-8 * (1.0 + abs(sigma))
                continue
            if not np.all(np.isfinite(y)):
                sigma += 1e-8 * (1.0 + abs(sigma))
                continue
            for vec in found_vecs:
                y -= vec * (vec @ y)
            norm = np.linalg.norm(y)
            if norm == 0.0:
                raise RuntimeError("deflation annihilated the iterate; count too large?")
            x = y / norm
            hx = apply_h(x)
            theta = float(x @ hx)
            resid = float(np.linalg.norm(hx - theta * x))
            if resid <= tol * max(1.0, abs(theta)):
                converged = True
                iter_counts.append(it + 1)
                break
            if it >= 20:  # iterate has settled; Rayleigh shifts finish cubically
                sigma = theta
        if not converged:
            raise RuntimeError(
                f"inverse iteration did not converge: kappa={kappa}, n={n_points}, "
                f"eigenpair {len(found_vals)}, last theta={theta}, residual above "
                f"{tol} after {max_iter} iterations"
            )
        found_vals.append(theta)
        found_vecs.append(x)

    order = np.argsort(found_vals)
    vals = np.array(found_vals)[order]
    vecs = np.column_stack(found_vecs)[:, order]
    return GridResult(eigenvalues=vals, eigenvectors=vecs, iterations=tuple(iter_counts))
