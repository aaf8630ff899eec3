"""Exponent calculus for the weighted eigenproblem

    -Delta u + |u|^(q-2) u / |x|^b = lambda |u|^(p-2) u / |x|^a   on R^N.

Everything here is scalar arithmetic over the problem exponents: derived
parameters (delta, a, ell), weighted-embedding intervals for candidate
nonlinearity pairs (eta, r) in the nonradial and radial settings,
admissibility and the subscaled/scaled/superscaled trichotomy, the
Pohozaev-based nonexistence predicate, interpolation-pair construction,
and the compactness-threshold constants (c*, S-tilde, truncation window).

Comparisons against interval endpoints and the scaled threshold use a
uniform tolerance EQ_TOL: values within EQ_TOL (relative) of a boundary
are treated as sitting exactly on it, so grid sweeps give deterministic
verdicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from scipy.optimize import brentq

from .errors import DomainError, EmptyGridError, HypothesisViolation, SearchFailed

EQ_TOL = 1e-12

INF = math.inf


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= EQ_TOL * max(1.0, abs(x), abs(y))


class Regime(str, Enum):
    SUBSCALED = "Subscaled"
    SCALED = "Scaled"
    SUPERSCALED = "Superscaled"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Params:
    """Validated problem parameters plus derived exponents.

    delta is the scaling rate of u_t(x) = t^delta u(tx); a is the unique
    eigen-term weight that makes the equation invariant under that
    scaling; ell is the common growth rate of both energy terms along
    the scaling orbit.
    """

    N: int
    b: float
    q: float
    p: float
    delta: float
    a: float
    ell: float


@dataclass(frozen=True)
class WeightedPair:
    """A candidate weight/power pair (eta, r) for one nonlinearity term."""

    eta: float
    r: float

    def __post_init__(self):
        if self.eta < 0:
            raise DomainError(f"eta must be >= 0, got {self.eta}")
        if self.r <= 0:
            raise DomainError(f"r must be > 0, got {self.r}")


@dataclass(frozen=True)
class EmbeddingInterval:
    """Range of powers r for which the energy space embeds into L^r_eta."""

    lower: float
    upper: float  # math.inf marks the open upper range in dimension 2
    lower_included: bool
    upper_included: bool
    radial: bool
    compact_interior: bool


@dataclass(frozen=True)
class RegimeVerdict:
    admissible: bool
    regime: Regime
    interval: EmbeddingInterval | None
    reason: str


def derive_params(N: int, b: float, q: float, p: float) -> Params:
    """Validate (N, b, q, p) and compute delta, a, ell.

    Raises HypothesisViolation naming the first failed inequality of
    N >= 2, 0 < b < 2 < p < q < 2*_b.
    """
    if int(N) != N or N < 2:
        raise HypothesisViolation(f"N >= 2 required, got N = {N}")
    N = int(N)
    if not 0 < b < 2:
        raise HypothesisViolation(f"0 < b < 2 required, got b = {b}")
    if not p > 2:
        raise HypothesisViolation(f"p > 2 required, got p = {p}")
    if not q > p:
        raise HypothesisViolation(f"q > p required, got q = {q}, p = {p}")
    if N >= 3:
        qcrit = 2.0 * (N - b) / (N - 2)
        if not q < qcrit:
            raise HypothesisViolation(
                f"q < 2(N-b)/(N-2) = {qcrit!r} required, got q = {q}"
            )
    delta = (2.0 - b) / (q - 2.0)
    a1 = 2.0 - delta * (p - 2.0)
    a2 = b + delta * (q - p)
    if not _close(a1, a2):
        raise HypothesisViolation(f"inconsistent derived a: {a1!r} vs {a2!r}")
    a = a1
    if not (b < a < 2.0):
        raise HypothesisViolation(f"derived a = {a!r} outside (b, 2)")
    ell = q * delta + b - N
    if not ell > 0:
        raise HypothesisViolation(f"derived ell = {ell!r} not positive")
    ell2 = p * delta + a - N
    if not _close(ell, ell2):
        raise HypothesisViolation(f"inconsistent derived ell: {ell!r} vs {ell2!r}")
    return Params(N=N, b=b, q=q, p=p, delta=delta, a=a, ell=ell)


def critical_exponent(N: int, eta: float) -> float:
    """Upper embedding endpoint 2(N-eta)/(N-2); +inf in dimension 2."""
    if not 0 <= eta < N:
        raise DomainError(f"eta must lie in [0, N), got {eta}")
    if N == 2:
        return INF
    return 2.0 * (N - eta) / (N - 2.0)


def ell_of(params: Params, eta: float, r: float) -> float:
    """Growth rate r*delta + eta - N of the (eta, r) integral under scaling."""
    return r * params.delta + eta - params.N


def scaled_threshold(params: Params, eta: float) -> float:
    """The power r at which (eta, r) scales exactly like the equation."""
    return params.q + (params.b - eta) / params.delta


def lower_endpoint(params: Params, eta: float, radial: bool = False) -> float:
    """Lower endpoint of the embedding interval for weight exponent eta.

    Nonradial: q(N-eta)/(N-b) when eta >= b, and the steeper
    (eta q(N-2) + 2N(b-eta)) / (b(N-2)) when eta < b (dimension >= 3
    only). Radial with eta < b: the improved endpoint
    (q(2N-2-eta) + 2(b-eta)) / (2N-2-b), defined in every dimension >= 2.
    For eta >= b the radial flag is ignored (the intervals coincide).
    """
    N, b, q = params.N, params.b, params.q
    if not 0 <= eta < N:
        raise DomainError(f"eta must lie in [0, N), got {eta}")
    if eta >= b or _close(eta, b):
        return q * (N - eta) / (N - b)
    if radial:
        return (q * (2 * N - 2 - eta) + 2 * (b - eta)) / (2 * N - 2 - b)
    if N == 2:
        raise DomainError("nonradial lower endpoint undefined for N = 2, eta < b")
    return (eta * q * (N - 2) + 2 * N * (b - eta)) / (b * (N - 2))


def _interval(params: Params, eta: float, radial: bool) -> EmbeddingInterval | None:
    """Embedding interval with endpoint-inclusion rules, or None if undefined."""
    N, b = params.N, params.b
    radial_eff = radial and eta < b and not _close(eta, b)
    if N == 2 and eta < b and not radial_eff and not _close(eta, b):
        return None
    lower = lower_endpoint(params, eta, radial=radial_eff)
    upper = critical_exponent(N, eta)
    if radial_eff:
        lower_inc = True
        upper_inc = N >= 3
    else:
        lower_inc = eta <= b or _close(eta, b)
        upper_inc = N >= 3 and (eta <= 2 or _close(eta, 2.0))
    if N >= 3:
        compact = True
    else:
        compact = radial_eff or (eta > b and not _close(eta, b))
    return EmbeddingInterval(
        lower=lower,
        upper=upper,
        lower_included=lower_inc,
        upper_included=upper_inc,
        radial=radial_eff,
        compact_interior=compact,
    )


def classify_pair(params: Params, pair: WeightedPair, radial: bool = False) -> RegimeVerdict:
    """Admissibility and regime of (eta, r).

    Admissible means 0 <= eta < (N+2)/2 (with eta >= b additionally
    required nonradially when N = 2), and r > 1 inside the embedding
    interval, endpoints included per the interval's inclusion flags.
    The regime compares r against the scaled threshold with tolerance
    EQ_TOL; inadmissible pairs get regime NotApplicable.
    """
    eta, r = pair.eta, pair.r
    N, b = params.N, params.b

    eta_cap = (N + 2) / 2.0
    if eta > eta_cap or _close(eta, eta_cap):
        return RegimeVerdict(False, Regime.NOT_APPLICABLE, None, "ETA_TOO_LARGE")

    radial_eff = radial and eta < b and not _close(eta, b)
    if N == 2 and eta < b and not radial_eff and not _close(eta, b):
        return RegimeVerdict(False, Regime.NOT_APPLICABLE, None, "N2_ETA_LT_B")

    interval = _interval(params, eta, radial)
    assert interval is not None

    if r < 1.0 or _close(r, 1.0):
        return RegimeVerdict(False, Regime.NOT_APPLICABLE, interval, "R_LE_ONE")

    lo, hi = interval.lower, interval.upper
    on_lower = _close(r, lo)
    if r < lo and not on_lower:
        return RegimeVerdict(False, Regime.NOT_APPLICABLE, interval, "R_BELOW_LOWER")
    if on_lower and not interval.lower_included:
        return RegimeVerdict(False, Regime.NOT_APPLICABLE, interval, "R_BELOW_LOWER")
    if math.isfinite(hi):
        on_upper = _close(r, hi)
        if r > hi and not on_upper:
            return RegimeVerdict(False, Regime.NOT_APPLICABLE, interval, "R_ABOVE_UPPER")
        if on_upper and not interval.upper_included:
            return RegimeVerdict(False, Regime.NOT_APPLICABLE, interval, "R_ABOVE_UPPER")

    r_s = scaled_threshold(params, eta)
    if _close(r, r_s):
        regime = Regime.SCALED
    elif r < r_s:
        regime = Regime.SUBSCALED
    else:
        regime = Regime.SUPERSCALED
    return RegimeVerdict(True, regime, interval, "OK")


def nonexistence(params: Params, eta: float, r: float) -> bool:
    """Pohozaev nonexistence test: only the trivial solution exists when
    r >= 2*_eta (N >= 3) or r <= q(N-eta)/(N-b)."""
    N, b, q = params.N, params.b, params.q
    if not 0 <= eta < 2:
        raise DomainError(f"eta must lie in [0, 2), got {eta}")
    if r <= 1:
        raise DomainError(f"r must be > 1, got {r}")
    low = q * (N - eta) / (N - b)
    if r < low or _close(r, low):
        return True
    if N >= 3:
        crit = critical_exponent(N, eta)
        if r > crit or _close(r, crit):
            return True
    return False


def interpolation_pair(params: Params, pair: WeightedPair, radial: bool = False):
    """Companion pair (eta~, r~) with b < eta~ < 2 and theta in (0, 1)
    splitting the eigen-term integral:

        1/p = theta/r + (1-theta)/r~
        a/p = theta*eta/r + (1-theta)*eta~/r~

    The companion's regime mirrors the input: Scaled stays Scaled,
    Subscaled and Superscaled swap. The input pair must be admissible.
    """
    a, p = params.a, params.p
    eta, r = pair.eta, pair.r
    verdict = classify_pair(params, pair, radial=radial)
    if not verdict.admissible:
        raise DomainError(f"pair ({eta}, {r}) is not admissible ({verdict.reason})")

    if _close(eta, a):
        if _close(r, p):
            return a, p, 0.5
        # same weight: one-weight interpolation, r~ on the other side of p
        lo = max(1.0, lower_endpoint(params, a))
        hi = critical_exponent(params.N, a)
        if r > p:
            r_t = 0.5 * (lo + p)
        else:
            r_t = 0.5 * (p + min(hi, 2 * p)) if math.isfinite(hi) else 1.5 * p
        theta = (1.0 / p - 1.0 / r_t) / (1.0 / r - 1.0 / r_t)
        return a, r_t, theta

    want = {
        Regime.SCALED: Regime.SCALED,
        Regime.SUBSCALED: Regime.SUPERSCALED,
        Regime.SUPERSCALED: Regime.SUBSCALED,
    }[verdict.regime]

    # walk eta~ toward a from the far side; every constraint is open, so
    # a small enough offset works
    side = -1.0 if eta > a else 1.0
    d0 = min(abs(eta - a), a - params.b, 2.0 - a) / 2.0
    d = d0
    for _ in range(200):
        eta_t = a + side * d
        theta = (a - eta_t) / p * r / (eta - eta_t)
        if 0.0 < theta < 1.0:
            inv_rt = 1.0 / p + theta / (1.0 - theta) * (1.0 / p - 1.0 / r)
            if inv_rt > 0:
                r_t = 1.0 / inv_rt
                v = classify_pair(params, WeightedPair(eta_t, r_t))
                if v.admissible and v.regime == want and r_t > 1.0:
                    return eta_t, r_t, theta
        d *= 0.5
    raise SearchFailed(
        f"no admissible companion pair found for ({eta}, {r}); "
        "this indicates a bug for admissible inputs"
    )


def ps_threshold(N: int, eta1: float, S: float) -> float:
    """Compactness level c* = (2-eta1)/(2(N-eta1)) * S^((N-eta1)/(2-eta1))."""
    if N < 3:
        raise DomainError(f"N >= 3 required, got {N}")
    if not 0 <= eta1 < 2:
        raise DomainError(f"eta1 must lie in [0, 2), got {eta1}")
    if S < 0:
        raise DomainError(f"S must be >= 0, got {S}")
    if S == 0:
        return 0.0
    return (2.0 - eta1) / (2.0 * (N - eta1)) * S ** ((N - eta1) / (2.0 - eta1))


def tilde_s_root(mu: float, S1: float, S2: float, N: int, eta1: float, eta2: float) -> float:
    """Unique S~ > 0 solving

        mu S2^(-c2/2) S~^((2-eta2)/(N-2)) + S1^(-c1/2) S~^((2-eta1)/(N-2)) = 1

    with c_i = 2(N-eta_i)/(N-2). The left side increases strictly from 0,
    so a bracketed root find applies; the result is polished until the
    equation residual is below 1e-12.
    """
    if N < 3:
        raise DomainError(f"N >= 3 required, got {N}")
    for name, eta in (("eta1", eta1), ("eta2", eta2)):
        if not 0 <= eta < 2:
            raise DomainError(f"{name} must lie in [0, 2), got {eta}")
    if S1 <= 0 or S2 <= 0:
        raise DomainError("S1 and S2 must be positive")
    if mu < 0:
        raise DomainError(f"mu must be >= 0, got {mu}")

    c1 = critical_exponent(N, eta1)
    c2 = critical_exponent(N, eta2)
    k1 = S1 ** (-c1 / 2.0)
    k2 = mu * S2 ** (-c2 / 2.0)
    e1 = (2.0 - eta1) / (N - 2.0)
    e2 = (2.0 - eta2) / (N - 2.0)

    def f(x: float) -> float:
        return k2 * x ** e2 + k1 * x ** e1 - 1.0

    if mu == 0.0:
        return S1 ** ((N - eta1) / (2.0 - eta1))

    lo, hi = 1.0, 1.0
    for _ in range(2000):
        if f(lo) < 0:
            break
        lo *= 0.5
    for _ in range(2000):
        if f(hi) > 0:
            break
        hi *= 2.0
    x = brentq(f, lo, hi, xtol=1e-300, rtol=8.9e-16, maxiter=300)
    # Newton polish against residual
    for _ in range(8):
        res = f(x)
        if abs(res) <= 1e-13:
            break
        dfd = k2 * e2 * x ** (e2 - 1.0) + k1 * e1 * x ** (e1 - 1.0)
        x -= res / dfd
    return x


def gamma_mu_roots(mu: float, C: float, C1: float, exp_low: float, exp_high: float):
    """Sign-change radii (R1, R2) of gamma(t) = t - C mu t^exp_low - C1 t^exp_high.

    exp_low must lie in (0, 1) and exp_high in (1, inf); gamma is then
    negative on [0, R1) and (R2, inf) and nonnegative between. For
    mu = 0 the inner radius degenerates to 0. Raises DomainError when mu
    is too large for a sign change to exist.
    """
    if not 0 < exp_low < 1:
        raise DomainError(f"exp_low must lie in (0, 1), got {exp_low}")
    if not exp_high > 1:
        raise DomainError(f"exp_high must be > 1, got {exp_high}")
    if C < 0 or C1 <= 0 or mu < 0:
        raise DomainError("require C >= 0, C1 > 0, mu >= 0")

    # gamma(t)/t = 1 - g(t), g(t) = C mu t^(exp_low-1) + C1 t^(exp_high-1)
    def g(t: float) -> float:
        return C * mu * t ** (exp_low - 1.0) + C1 * t ** (exp_high - 1.0)

    if mu == 0.0 or C == 0.0:
        return 0.0, C1 ** (-1.0 / (exp_high - 1.0))
    tstar = (C * mu * (1.0 - exp_low) / (C1 * (exp_high - 1.0))) ** (1.0 / (exp_high - exp_low))
    gmin = g(tstar)
    if gmin > 1.0:
        raise DomainError(
            f"no truncation window: min of the mu-term envelope is {gmin!r} > 1 "
            "(mu too large for these constants)"
        )
    if _close(gmin, 1.0):
        return tstar, tstar

    def f(t: float) -> float:
        return g(t) - 1.0

    lo = tstar
    for _ in range(2000):
        if f(lo) > 0:
            break
        lo *= 0.5
    r1 = brentq(f, lo, tstar, xtol=1e-300, rtol=8.9e-16, maxiter=300)
    hi = tstar
    for _ in range(2000):
        if f(hi) > 0:
            break
        hi *= 2.0
    r2 = brentq(f, tstar, hi, xtol=1e-300, rtol=8.9e-16, maxiter=300)
    return r1, r2


def region_map(params: Params, eta_grid, r_grid, radial: bool = False):
    """Tabulate classify_pair and nonexistence over a rectangular grid.

    Returns a list of row dicts in eta-major order. Grids must be
    nonempty and strictly increasing.
    """
    eta_grid = list(eta_grid)
    r_grid = list(r_grid)
    if not eta_grid or not r_grid:
        raise EmptyGridError("eta and r grids must be nonempty")
    for g, name in ((eta_grid, "eta_grid"), (r_grid, "r_grid")):
        if any(y <= x for x, y in zip(g, g[1:])):
            raise DomainError(f"{name} must be strictly increasing")

    rows = []
    for eta in eta_grid:
        for r in r_grid:
            try:
                verdict = classify_pair(params, WeightedPair(eta, r), radial=radial)
            except DomainError:
                verdict = RegimeVerdict(False, Regime.NOT_APPLICABLE, None, "DOMAIN")
            if 0 <= eta < 2 and r > 1:
                nonex = nonexistence(params, eta, r)
            else:
                nonex = False
            iv = verdict.interval
            rows.append(
                {
                    "eta": eta,
                    "r": r,
                    "admissible": verdict.admissible,
                    "regime": verdict.regime.value,
                    "nonexistence": nonex,
                    "lower": iv.lower if iv else math.nan,
                    "lower_included": iv.lower_included if iv else False,
                    "upper": iv.upper if iv else math.nan,
                    "upper_included": iv.upper_included if iv else False,
                }
            )
    return rows


REGION_MAP_HEADER = "eta,r,admissible,regime,nonexistence,lower,lower_included,upper,upper_included"


def region_map_csv(rows) -> str:
    """Render region_map rows as the documented CSV atlas."""
    from .reports import fmt_float

    lines = [REGION_MAP_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                [
                    fmt_float(row["eta"]),
                    fmt_float(row["r"]),
                    "true" if row["admissible"] else "false",
                    row["regime"],
                    "true" if row["nonexistence"] else "false",
                    fmt_float(row["lower"]),
                    "true" if row["lower_included"] else "false",
                    fmt_float(row["upper"]),
                    "true" if row["upper_included"] else "false",
                ]
            )
        )
    return "\n".join(lines) + "\n"
