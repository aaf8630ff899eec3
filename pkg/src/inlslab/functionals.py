"""Discrete energy functionals, their exact gradients, and verification residuals.

The operator-side energy and the eigen-term potential are

    I(u) = 1/2 int |grad u|^2 + 1/q int |u|^q |x|^(-b),
    J(u) = 1/p int |u|^p |x|^(-a),

and the full objective for a term list {(c_j, eta_j, r_j)} is

    Phi(u) = I(u) - lambda J(u) - sum_j (c_j / r_j) int |u|^(r_j) |x|^(-eta_j).

Gradients are exact derivatives of these discrete sums with respect to
nodal values (differentiate the quadrature, not the PDE), so central
finite differences reproduce them to rounding. The residuals below are
the workbench's verification surface: Euler-Lagrange stationarity in a
quadrature-weighted dual norm, the Pohozaev balance, and the eigenvalue
relation I = lambda J.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SearchFailed, ZeroProfileError
from .grid import RadialGrid, RadialProfile, dirichlet_energy, scale, weighted_integral
from .regimes import Params

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class TermSpec:
    """One power-type nonlinearity term c |u|^(r-2) u / |x|^eta."""

    c: float
    eta: float
    r: float

    def __post_init__(self):
        if self.r <= 1:
            raise DomainError(f"term power r must be > 1, got {self.r}")
        if not 0 <= self.eta < 2:
            raise DomainError(f"term weight eta must lie in [0, 2), got {self.eta}")


@dataclass(frozen=True)
class FunctionalReport:
    I: float
    J: float
    rayleigh: float
    phi: float
    grad_norm: float

    def to_dict(self) -> dict:
        return {
            "I": self.I,
            "J": self.J,
            "rayleigh": self.rayleigh,
            "phi": self.phi,
            "grad_norm": self.grad_norm,
        }


def _mass(grid: RadialGrid, eta: float) -> np.ndarray:
    """Diagonal quadrature weights of the eta-weighted integral."""
    w = grid.trapezoid_weights()
    return grid.omega * grid.h * w * grid.nodes ** (grid.N - eta)


def volume_weights(grid: RadialGrid) -> np.ndarray:
    """Unweighted volume measure per node; used by the dual norm."""
    return _mass(grid, 0.0)


def I_energy(u: RadialProfile, params: Params) -> float:
    return 0.5 * dirichlet_energy(u) + weighted_integral(u, params.q, params.b) / params.q


def J_energy(u: RadialProfile, params: Params) -> float:
    return weighted_integral(u, params.p, params.a) / params.p


def rayleigh(u: RadialProfile, params: Params) -> float:
    """Quotient I(u)/J(u); invariant under grid-exact scalings."""
    if u.is_zero():
        raise ZeroProfileError("Rayleigh quotient undefined for the zero profile")
    return I_energy(u, params) / J_energy(u, params)


def _grad_dirichlet(u: RadialProfile) -> np.ndarray:
    g = u.grid
    ds = g.nodes[1:] - g.nodes[:-1]
    smid = np.sqrt(g.nodes[:-1] * g.nodes[1:])
    slopes = (u.values[1:] - u.values[:-1]) / ds
    f = 2.0 * g.omega * g.h * smid ** g.N * slopes / ds
    out = np.zeros(g.M)
    out[1:] += f
    out[:-1] -= f
    return out


def _grad_power(u: RadialProfile, coeff: float, eta: float, r: float) -> np.ndarray:
    """Gradient of coeff * int |u|^r |x|^(-eta); coeff carries the 1/r."""
    mass = _mass(u.grid, eta)
    return coeff * r * mass * np.abs(u.values) ** (r - 1.0) * np.sign(u.values)


def grad_I(u: RadialProfile, params: Params) -> np.ndarray:
    return 0.5 * _grad_dirichlet(u) + _grad_power(u, 1.0 / params.q, params.b, params.q)


def grad_J(u: RadialProfile, params: Params) -> np.ndarray:
    return _grad_power(u, 1.0 / params.p, params.a, params.p)


def phi(u: RadialProfile, params: Params, lam: float, terms: list[TermSpec]) -> float:
    val = I_energy(u, params) - lam * J_energy(u, params)
    for t in terms:
        val -= (t.c / t.r) * weighted_integral(u, t.r, t.eta)
    return val


def grad_phi(u: RadialProfile, params: Params, lam: float, terms: list[TermSpec]) -> np.ndarray:
    """Exact gradient of the discrete phi w.r.t. nodal values, outer node excluded.

    Returns a vector of length M-1 (nodes 0 .. M-2); the outer node is
    pinned to zero by the profile invariant.
    """
    g = grad_I(u, params) - lam * grad_J(u, params)
    for t in terms:
        g -= _grad_power(u, t.c / t.r, t.eta, t.r)
    return g[:-1]


def el_residual(u: RadialProfile, params: Params, lam: float, terms: list[TermSpec]) -> float:
    """Dual norm of the discrete Euler-Lagrange gradient over interior nodes.

    The gradient entries are divided by the node volume weights (the
    Riesz map of the discrete L^2 pairing), which keeps the value stable
    under grid refinement. Both boundary nodes are excluded: the outer
    one is pinned by the profile invariant and the inner one is pinned
    by the solvers, so interior stationarity is what characterizes a
    computed critical point.
    """
    g = grad_phi(u, params, lam, terms)
    mu = volume_weights(u.grid)
    return math.sqrt(float(np.sum(g[1:] ** 2 / mu[1:-1])))


def pohozaev_residual(u: RadialProfile, params: Params, terms: list[TermSpec]) -> float:
    """Symmetric relative defect of the Pohozaev balance

        (N-2)/2 int |grad u|^2 + (N-b)/q int |u|^q |x|^(-b)
            = sum_j c_j (N-eta_j)/r_j int |u|^(r_j) |x|^(-eta_j).
    """
    N, b, q = params.N, params.b, params.q
    lhs = 0.5 * (N - 2) * dirichlet_energy(u) + (N - b) / q * weighted_integral(u, q, b)
    rhs = 0.0
    for t in terms:
        rhs += t.c * (N - t.eta) / t.r * weighted_integral(u, t.r, t.eta)
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs) + EPS)


def eigen_relation_residual(u: RadialProfile, params: Params, lam: float) -> float:
    """Relative defect of I(u) = lambda J(u)."""
    Iv = I_energy(u, params)
    Jv = J_energy(u, params)
    return abs(Iv - lam * Jv) / (Iv + lam * Jv + EPS)


def project_to_M(u: RadialProfile, params: Params) -> RadialProfile:
    """Scale u along the orbit onto the level set I = 1.

    Starts from the closed-form guess t = I(u)^(-1/ell) and, because the
    discrete scaling only transforms I approximately for interpolated t,
    refines t by bracketed bisection on ln t until |I - 1| <= 1e-10 (or
    the bracket is exhausted at float resolution). Raises DomainError if
    no scaling of u can reach I = 1 inside the grid window.
    """
    if u.is_zero():
        raise ZeroProfileError("cannot project the zero profile")
    g = u.grid
    delta, ell = params.delta, params.ell
    Iu = I_energy(u, params)

    def at(lt: float):
        v = scale(u, math.exp(min(lt, 700.0)), delta)
        return v, I_energy(v, params) - 1.0

    lt = -math.log(Iu) / ell  # ln of the closed-form guess I(u)^(-1/ell)
    v, res = at(lt)
    if abs(res) <= 1e-10:
        return v

    step = max(0.5 * g.h, abs(res))
    lo = hi = lt
    flo = fhi = res
    n = 0
    while flo > 0 and n < 300:
        lo -= step
        step *= 2.0
        _, flo = at(lo)
        n += 1
    step = max(0.5 * g.h, abs(res))
    while fhi < 0 and n < 300:
        hi += step
        step *= 2.0
        _, fhi = at(hi)
        n += 1
    if flo > 0 or fhi < 0:
        raise DomainError(
            "projection target I = 1 is not reachable by scaling inside the grid window"
        )
    for _ in range(300):
        mid = 0.5 * (lo + hi)
        v, fm = at(mid)
        if abs(fm) <= 1e-10 or hi - lo < 1e-15:
            break
        if fm < 0:
            lo = mid
        else:
            hi = mid
    else:  # pragma: no cover
        raise SearchFailed("projection bisection exhausted its iteration budget")
    return v


def functional_report(
    u: RadialProfile, params: Params, lam: float, terms: list[TermSpec]
) -> FunctionalReport:
    Iv = I_energy(u, params)
    Jv = J_energy(u, params)
    return FunctionalReport(
        I=Iv,
        J=Jv,
        rayleigh=(Iv / Jv) if Jv > 0 else math.nan,
        phi=phi(u, params, lam, terms),
        grad_norm=el_residual(u, params, lam, terms),
    )


def scale_profile(u: RadialProfile, t: float, params: Params) -> RadialProfile:
    """Convenience wrapper: the equation's own scaling rate."""
    return scale(u, t, params.delta)
