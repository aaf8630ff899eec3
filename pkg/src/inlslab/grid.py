"""Log-uniform radial grid, singular-weight quadrature, and the scaling action.

A radial function u(|x|) on R^N is stored by its values on nodes
s_i = s_min * exp(i h). In the log variable x = ln s every weighted
integral becomes a smooth integral with weight s^(N-eta):

    int |u|^r |x|^(-eta) dx = omega_{N-1} int |u(s)|^r s^(N-eta) d(ln s),

evaluated by the trapezoid rule. The gradient term uses cell slopes
(two-point differences) against geometric-midpoint weights; this keeps
the quadratic form positive definite on every mesh mode and makes its
Hessian tridiagonal.

The scaling u_t(x) = t^delta u(tx) acts on the log grid as a pure index
shift when ln t is a multiple of h (exact up to window truncation) and
by linear interpolation in ln s otherwise. Below s_min a profile is
extended by its innermost value (profiles need not vanish at the
origin); above s_max by zero.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import DomainError
from .reports import fmt_float

#: outer node is pinned to zero after every construction
_MIN_NODES = 16


def sphere_area(N: int) -> float:
    """Surface measure of the unit sphere, 2 pi^(N/2) / Gamma(N/2).

    Computed through the half-integer factorial recurrence so integer
    dimensions need no special-function calls.
    """
    if int(N) != N or N < 1:
        raise DomainError(f"dimension must be a positive integer, got {N}")
    N = int(N)
    if N % 2 == 0:
        gamma = 1.0
        for k in range(1, N // 2):
            gamma *= k
    else:
        gamma = math.sqrt(math.pi)
        k = 0.5
        while k < N / 2.0 - 0.25:
            gamma *= k
            k += 1.0
    return 2.0 * math.pi ** (N / 2.0) / gamma


@dataclass(frozen=True)
class RadialGrid:
    """Log-uniform radial mesh on [s_min, s_max] with M nodes."""

    s_min: float
    s_max: float
    M: int
    N: int
    h: float = field(init=False)
    nodes: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        h = math.log(self.s_max / self.s_min) / (self.M - 1)
        nodes = self.s_min * np.exp(h * np.arange(self.M))
        nodes.flags.writeable = False
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "nodes", nodes)

    @property
    def omega(self) -> float:
        return sphere_area(self.N)

    def trapezoid_weights(self) -> np.ndarray:
        w = np.ones(self.M)
        w[0] = 0.5
        w[-1] = 0.5
        return w


def make_grid(s_min: float, s_max: float, M: int, N: int) -> RadialGrid:
    if not (0 < s_min < s_max):
        raise DomainError(f"require 0 < s_min < s_max, got [{s_min}, {s_max}]")
    if int(M) != M or M < _MIN_NODES:
        raise DomainError(f"require M >= {_MIN_NODES}, got {M}")
    if int(N) != N or N < 2:
        raise DomainError(f"require integer N >= 2, got {N}")
    return RadialGrid(s_min=float(s_min), s_max=float(s_max), M=int(M), N=int(N))


@dataclass(frozen=True)
class RadialProfile:
    """Nodal values of a radial function; the outer node is always zero."""

    grid: RadialGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        vals = np.array(self.values, dtype=float)
        if vals.shape != (self.grid.M,):
            raise DomainError(
                f"profile needs {self.grid.M} nodal values, got shape {vals.shape}"
            )
        if not np.all(np.isfinite(vals)):
            raise DomainError("profile values must be finite")
        vals[-1] = 0.0
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def is_zero(self) -> bool:
        return not np.any(self.values)

    def with_values(self, vals: np.ndarray) -> "RadialProfile":
        return RadialProfile(self.grid, vals)


def weighted_integral(u: RadialProfile, r: float, eta: float) -> float:
    """omega_{N-1} * sum_i w_i |u_i|^r s_i^(N-eta) h  (trapezoid in ln s)."""
    g = u.grid
    if r < 1:
        raise DomainError(f"power r must be >= 1, got {r}")
    if not 0 <= eta < g.N:
        raise DomainError(f"eta must lie in [0, N), got {eta}")
    w = g.trapezoid_weights()
    val = g.omega * g.h * float(np.sum(w * np.abs(u.values) ** r * g.nodes ** (g.N - eta)))
    return val


def _cell_slopes(u: RadialProfile):
    g = u.grid
    ds = g.nodes[1:] - g.nodes[:-1]
    return (u.values[1:] - u.values[:-1]) / ds


def dirichlet_energy(u: RadialProfile) -> float:
    """omega_{N-1} * sum_cells (slope_i)^2 smid_i^N h, smid geometric midpoint."""
    g = u.grid
    smid = np.sqrt(g.nodes[:-1] * g.nodes[1:])
    slopes = _cell_slopes(u)
    return g.omega * g.h * float(np.sum(slopes * slopes * smid ** g.N))


def shift_values(grid: RadialGrid, vals: np.ndarray, k: int) -> np.ndarray:
    """Index shift by k cells: out[i] = vals[i+k], constant-extended below
    the window, zero-extended above."""
    M = grid.M
    out = np.zeros(M)
    if k >= M:
        return out
    if k <= -M:
        out[:] = vals[0]
        return out
    if k >= 0:
        out[: M - k] = vals[k:]
    else:
        out[-k:] = vals[: M + k]
        out[: -k] = vals[0]
    return out


def scale(u: RadialProfile, t: float, delta: float) -> RadialProfile:
    """Nodal representation of u_t(x) = t^delta u(t x).

    Grid-exact t (ln t an integer multiple of h) is a pure index shift;
    other t interpolate linearly in ln s. t = 0 gives the zero profile.
    """
    if t < 0:
        raise DomainError(f"scaling parameter t must be >= 0, got {t}")
    g = u.grid
    if t == 0.0:
        return RadialProfile(g, np.zeros(g.M))
    x = math.log(t) / g.h
    k = math.floor(x)
    f = x - k
    if f < 1e-9 or f > 1.0 - 1e-9:
        k = round(x)
        out = shift_values(g, u.values, k) * math.exp(k * g.h) ** delta
    else:
        out = ((1.0 - f) * shift_values(g, u.values, k)
               + f * shift_values(g, u.values, k + 1)) * t ** delta
    return RadialProfile(g, out)


class ProfileFamily(str, Enum):
    GAUSSIAN = "Gaussian"
    BUMP = "Bump"
    AUBIN_TALENTI = "AubinTalenti"


def sample_function(grid: RadialGrid, family: ProfileFamily | str, **shape) -> RadialProfile:
    """Sample a closed-form radial family on the grid.

    Gaussian(sigma): exp(-s^2 / (2 sigma^2)).
    Bump(lo, hi): exp(-1/((s-lo)(hi-s))) normalized to peak 1, zero outside.
    AubinTalenti(scale): (1 + (s/scale)^2)^(-(N-2)/2).
    """
    family = ProfileFamily(family)
    s = grid.nodes
    if family is ProfileFamily.GAUSSIAN:
        sigma = float(shape.get("sigma", 1.0))
        if sigma <= 0:
            raise DomainError(f"sigma must be positive, got {sigma}")
        vals = np.exp(-(s ** 2) / (2.0 * sigma ** 2))
    elif family is ProfileFamily.BUMP:
        lo = float(shape.get("lo", 1.0))
        hi = float(shape.get("hi", 2.0))
        if not 0 < lo < hi:
            raise DomainError(f"require 0 < lo < hi, got ({lo}, {hi})")
        vals = np.zeros(grid.M)
        inside = (s > lo) & (s < hi)
        t = (s[inside] - lo) * (hi - s[inside])
        peak = ((hi - lo) / 2.0) ** 2
        vals[inside] = np.exp(-1.0 / t + 1.0 / peak)
    elif family is ProfileFamily.AUBIN_TALENTI:
        scl = float(shape.get("scale", 1.0))
        if scl <= 0:
            raise DomainError(f"scale must be positive, got {scl}")
        vals = (1.0 + (s / scl) ** 2) ** (-(grid.N - 2) / 2.0)
    else:  # pragma: no cover
        raise DomainError(f"unknown family {family}")
    return RadialProfile(grid, vals)


def save_profile(u: RadialProfile, path, family: str = "custom", params: dict | None = None) -> None:
    """Write a profile as CSV with a JSON metadata comment line.

    The format round-trips bit-exactly: floats carry 17 significant digits.
    """
    g = u.grid
    meta = {
        "N": g.N,
        "s_min": g.s_min,
        "s_max": g.s_max,
        "M": g.M,
        "family": family,
        "params": params or {},
    }
    lines = ["# " + json.dumps(meta), "s,u"]
    for s, v in zip(g.nodes, u.values):
        lines.append(f"{fmt_float(s)},{fmt_float(v)}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_profile(path) -> RadialProfile:
    """Read a profile written by save_profile."""
    with open(path) as fh:
        header = fh.readline()
        if not header.startswith("#"):
            raise DomainError(f"{path}: missing metadata comment line")
        meta = json.loads(header[1:].strip())
        cols = fh.readline().strip()
        if cols != "s,u":
            raise DomainError(f"{path}: expected 's,u' header, got {cols!r}")
        vals = []
        for line in fh:
            line = line.strip()
            if line:
                vals.append(float(line.split(",")[1]))
    grid = make_grid(meta["s_min"], meta["s_max"], meta["M"], meta["N"])
    if len(vals) != grid.M:
        raise DomainError(f"{path}: expected {grid.M} rows, got {len(vals)}")
    return RadialProfile(grid, np.asarray(vals))
