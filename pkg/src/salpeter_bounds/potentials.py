"""Central potential models and the L^s norms of their attractive parts.

The parametric models, with coupling g > 0 and range R > 0:

    exp    V(r) = -(g/R) exp(-r/R)
    pexp   V(r) = -(g/R^2) r exp(-r/R)
    sing   V(r) = -g (r R)^(-1/2) exp(-r/R)
    log    V(r) =  (g/R) ln(r/R)

plus tabulated potentials interpolated from (r, V) samples.  One-dimensional
usage reads the same shapes as even functions of |x| with measure dx over the
whole line.  Units throughout are GeV-based natural units (hbar = c = 1):
r and R in GeV^-1, V and C in GeV, g dimensionless.

Norms of the negative part V^- = max(0, -V) use Gamma-function closed forms
for the parametric kinds and singularity-aware quadrature otherwise; both
routes are exposed so they can be cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.interpolate import PchipInterpolator, PPoly
from scipy.optimize import brentq

from .errors import DivergentNormError, DomainError
from .specfun import DEFAULT_QUADRATURE, QuadratureSpec, _quad, _tail

__all__ = [
    "PotentialKind",
    "PotentialModel",
    "TruncatedPotential",
    "exponential",
    "power_exponential",
    "singular",
    "logarithmic",
    "tabulated",
    "load_table",
    "with_coupling",
    "evaluate",
    "evaluate_truncated",
    "evaluate_shifted",
    "sup_negative",
    "min_value",
    "length_scale",
    "negative_part_norm",
    "truncated_negative_norm",
]


class PotentialKind(str, Enum):
    EXPONENTIAL = "exp"
    POWER_EXPONENTIAL = "pexp"
    SINGULAR = "sing"
    LOGARITHMIC = "log"
    TABULATED = "table"


@dataclass(frozen=True)
class PotentialModel:
    """A central potential V(r) = g * v(r); see the module docstring."""

    kind: PotentialKind
    g: float = 1.0
    R: float = 1.0
    table: tuple[tuple[float, float], ...] | None = None
    interp: str = "pchip"

    def __post_init__(self):
        if not self.g > 0.0:
            raise DomainError(f"coupling g must be positive, got {self.g!r}")
        if not self.R > 0.0:
            raise DomainError(f"range R must be positive, got {self.R!r}")
        if self.kind is PotentialKind.TABULATED:
            if self.table is None or len(self.table) < 2:
                raise DomainError("tabulated potential needs at least two samples")
            radii = [r for r, _ in self.table]
            if radii[0] < 0.0 or any(b <= a for a, b in zip(radii, radii[1:])):
                raise DomainError("table radii must be strictly increasing and >= 0")
            if self.interp not in ("pchip", "linear"):
                raise DomainError(f"unknown interpolation rule {self.interp!r}")
        elif self.table is not None:
            raise DomainError("only tabulated potentials carry a table")


def exponential(g: float, R: float) -> PotentialModel:
    return PotentialModel(PotentialKind.EXPONENTIAL, g, R)


def power_exponential(g: float, R: float) -> PotentialModel:
    return PotentialModel(PotentialKind.POWER_EXPONENTIAL, g, R)


def singular(g: float, R: float) -> PotentialModel:
    return PotentialModel(PotentialKind.SINGULAR, g, R)


def logarithmic(g: float, R: float) -> PotentialModel:
    return PotentialModel(PotentialKind.LOGARITHMIC, g, R)


def tabulated(radii, values, g: float = 1.0, interp: str = "pchip") -> PotentialModel:
    table = tuple((float(r), float(v)) for r, v in zip(radii, values, strict=True))
    return PotentialModel(PotentialKind.TABULATED, g, 1.0, table, interp)


def load_table(path, g: float = 1.0, interp: str = "pchip") -> PotentialModel:
    """Read a two-column (r, V) text file; '#' starts a comment.

    Values are interpreted in GeV-based natural units: r in GeV^-1, V in GeV.
    """
    data = np.loadtxt(path, comments="#", ndmin=2)
    if data.shape[1] != 2:
        raise DomainError(f"expected two columns (r, V) in {path}")
    return tabulated(data[:, 0], data[:, 1], g=g, interp=interp)


def with_coupling(V: PotentialModel, g: float) -> PotentialModel:
    """The same shape with coupling g."""
    return replace(V, g=g)


@dataclass(frozen=True)
class TruncatedPotential:
    """V capped at the level C and shifted back down:

    truncated(r) = min(V(r), C),   shifted(r) = min(V(r), C) - C <= 0.

    The negative part of the shifted potential is (C - V)^+ and is what the
    confining-potential bound integrates.
    """

    base: PotentialModel
    cutoff: float


@lru_cache(maxsize=256)
def _interpolant(model: PotentialModel) -> PPoly:
    pts = np.asarray(model.table, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    if model.interp == "pchip":
        return PchipInterpolator(x, y, extrapolate=False)
    slopes = np.diff(y) / np.diff(x)
    return PPoly(np.vstack([slopes, y[:-1]]), x, extrapolate=False)


def _table_head_power(model: PotentialModel) -> tuple[float, float]:
    """Power-law extension V ~ v0 (r/r0)^p below the first table radius.

    Fitted from the first two samples when both are negative; a flat
    extension (p = 0) is used otherwise.  Yukawa-like tables (p near -1)
    are thereby integrable or not exactly as their small-r behavior demands.
    """
    (r0, v0), (r1, v1) = model.table[0], model.table[1]
    if r0 == 0.0:
        return 0.0, v0
    if v0 < 0.0 and v1 < 0.0 and r1 > r0:
        p = math.log(v1 / v0) / math.log(r1 / r0)
        return p, v0
    return 0.0, v0


def _eval_table(model: PotentialModel, r: np.ndarray) -> np.ndarray:
    # inside [r_first, r_last]: interpolant; beyond the table: 0; below it:
    # the fitted power-law head
    interp = _interpolant(model)
    r0 = model.table[0][0]
    rN = model.table[-1][0]
    out = np.asarray(interp(np.clip(r, r0, rN)), dtype=float)
    out = np.where(r > rN, 0.0, out)
    if np.any(r < r0):
        p, v0 = _table_head_power(model)
        with np.errstate(divide="ignore", over="ignore"):
            head = v0 * (np.maximum(r, 1e-320) / r0) ** p
        out = np.where(r < r0, head, out)
    return out


def evaluate(V: PotentialModel, r):
    """V(r) for scalar or array r (r > 0 required for the singular kinds)."""
    arr = np.asarray(r, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if np.any(arr < 0.0):
        raise DomainError("potentials are defined for r >= 0")
    if V.kind in (PotentialKind.SINGULAR, PotentialKind.LOGARITHMIC) and np.any(
        arr == 0.0
    ):
        raise DomainError(f"{V.kind.value} potential diverges at r = 0")
    if V.kind is PotentialKind.EXPONENTIAL:
        out = -(V.g / V.R) * np.exp(-arr / V.R)
    elif V.kind is PotentialKind.POWER_EXPONENTIAL:
        out = -(V.g / V.R**2) * arr * np.exp(-arr / V.R)
    elif V.kind is PotentialKind.SINGULAR:
        out = -V.g / np.sqrt(arr * V.R) * np.exp(-arr / V.R)
    elif V.kind is PotentialKind.LOGARITHMIC:
        out = (V.g / V.R) * np.log(arr / V.R)
    else:
        out = V.g * _eval_table(V, arr)
    return float(out[0]) if scalar else out


def evaluate_truncated(T: TruncatedPotential, r):
    """min(V(r), C)."""
    return np.minimum(evaluate(T.base, r), T.cutoff)


def evaluate_shifted(T: TruncatedPotential, r):
    """min(V(r), C) - C, nonpositive by construction."""
    return evaluate_truncated(T, r) - T.cutoff


def min_value(V: PotentialModel) -> float:
    """inf of V over r > 0 (-inf for the kinds unbounded below)."""
    if V.kind is PotentialKind.EXPONENTIAL:
        return -V.g / V.R
    if V.kind is PotentialKind.POWER_EXPONENTIAL:
        return -V.g / (math.e * V.R)
    if V.kind in (PotentialKind.SINGULAR, PotentialKind.LOGARITHMIC):
        return -math.inf
    p, v0 = _table_head_power(V)
    if p < 0.0 and v0 < 0.0:
        return -math.inf
    # monotone interpolation attains its extrema at the knots
    return V.g * min(0.0, min(v for _, v in V.table))


def sup_negative(V: PotentialModel) -> float:
    """Essential sup of V^- = max(0, -V): the s -> infinity norm limit."""
    return max(0.0, -min_value(V))


def length_scale(V: PotentialModel) -> float:
    """Characteristic radius used for default box sizes and split points."""
    if V.kind is PotentialKind.TABULATED:
        return max(V.table[-1][0] / 4.0, V.table[-1][0] - V.table[0][0]) or 1.0
    return V.R


def _check_norm_args(s: float, dim: int) -> None:
    if dim not in (1, 3):
        raise DomainError(f"dimension must be 1 or 3, got {dim!r}")
    if math.isnan(s) or not s > 1.0:
        raise DomainError(f"norm exponent must satisfy s > 1, got {s!r}")


def _closed_form_norm(V: PotentialModel, s: float, dim: int) -> float:
    """log-space Gamma closed forms; exact for the four parametric kinds."""
    g, R = V.g, V.R
    if dim == 3:
        if V.kind is PotentialKind.EXPONENTIAL:
            inner = math.log(8.0 * math.pi) - 3.0 * math.log(s)
        elif V.kind is PotentialKind.POWER_EXPONENTIAL:
            inner = (
                math.log(4.0 * math.pi) + math.lgamma(s + 3.0) - (s + 3.0) * math.log(s)
            )
        elif V.kind is PotentialKind.SINGULAR:
            if s >= 6.0:
                raise DivergentNormError(
                    f"singular potential: |V^-|^s ~ r^(-s/2) is not integrable in 3D "
                    f"for s = {s:g} >= 6"
                )
            inner = (
                math.log(4.0 * math.pi)
                + math.lgamma(3.0 - s / 2.0)
                + (3.0 - s / 2.0) * -math.log(s)
            )
        else:  # LOGARITHMIC: support of V^- is r < R
            inner = (
                math.log(4.0 * math.pi)
                + math.lgamma(s + 1.0)
                - (s + 1.0) * math.log(3.0)
            )
        return g * math.exp((3.0 / s - 1.0) * math.log(R) + inner / s)
    if V.kind is PotentialKind.EXPONENTIAL:
        inner = math.log(2.0) - math.log(s)
    elif V.kind is PotentialKind.POWER_EXPONENTIAL:
        inner = math.log(2.0) + math.lgamma(s + 1.0) - (s + 1.0) * math.log(s)
    elif V.kind is PotentialKind.SINGULAR:
        if s >= 2.0:
            raise DivergentNormError(
                f"singular potential: |V^-|^s ~ |x|^(-s/2) is not integrable in 1D "
                f"for s = {s:g} >= 2"
            )
        inner = math.log(2.0) + math.lgamma(1.0 - s / 2.0) + (1.0 - s / 2.0) * -math.log(s)
    else:  # LOGARITHMIC
        inner = math.log(2.0) + math.lgamma(s + 1.0)
    return g * math.exp((1.0 / s - 1.0) * math.log(R) + inner / s)


def _weight(dim: int, r):
    return 4.0 * math.pi * r * r if dim == 3 else 2.0


def _log_head_norm(amp: float, scale: float, s: float, dim: int, spec) -> float:
    # ||amp * ln(scale/r)||_s over (0, scale) via r = scale e^-t:
    #   power = w_const * amp^s * scale^dim * int_0^inf t^s e^(-dim t) dt,
    # assembled in log space.  The t-integral is evaluated in plain double
    # precision, which limits this independent-quadrature route to moderate s
    # (the closed forms cover every s).
    if s > 100.0:
        raise ConvergenceError(
            "quadrature route for logarithmic norms supports s <= 100; "
            "the Gamma closed form covers larger exponents"
        )
    spec = _power_spec(spec, s)
    t_max = max(45.0, -math.log(spec.abs_tol))
    for _ in range(8):
        t_max = (-math.log(spec.abs_tol / 256.0) + s * math.log1p(t_max)) / dim
    w_const = 4.0 * math.pi if dim == 3 else 2.0

    def f(t):
        return math.exp(s * math.log(t) - dim * t) if t > 0.0 else 0.0

    base = _quad(f, 0.0, min(t_max, 700.0), spec, spec.abs_tol / 4.0)
    ln_power = math.log(w_const) + s * math.log(amp) + dim * math.log(scale) + math.log(base)
    return math.exp(ln_power / s)


def _scaled_power(value: float, k: float, s: float) -> float:
    # (value/k)^s assembled in log space; hard clamps keep deep adaptive
    # subdivisions of singular integrands inside the double range
    if value <= 0.0 or k <= 0.0:
        return 0.0
    ln = s * (math.log(value) - math.log(k))
    if ln < -745.0:
        return 0.0
    if ln > 709.0:
        return math.inf
    return math.exp(ln)


def _singular_head_integrand(u: float, base: float, k: float, s: float, dim: int) -> float:
    # full integrand of the u = sqrt(r) substituted head in log space:
    # 2u * w(u^2) * (base/k)^s with w = 4 pi r^(dim-1)-type weight
    if u <= 0.0 or base <= 0.0 or k <= 0.0:
        return 0.0
    if dim == 3:
        ln = math.log(8.0 * math.pi) + 5.0 * math.log(u)
    else:
        ln = math.log(4.0) + math.log(u)
    ln += s * (math.log(base) - math.log(k))
    if ln < -745.0:
        return 0.0
    return math.exp(min(ln, 709.0))


def _power_spec(spec: QuadratureSpec, s: float) -> QuadratureSpec:
    # the 1/s root divides the power integral's relative error by s, so the
    # inner quadrature may run s times looser and still meet the norm contract
    slack = min(spec.rel_tol * max(s, 1.0), 1e-7)
    return replace(spec, rel_tol=slack)


def _norm_quadrature(V: PotentialModel, s: float, dim: int, spec) -> float:
    """||V^-||_s by quadrature.  The integrand is scaled by the sup of V^-
    (when finite) so that arbitrarily large exponents cannot overflow."""
    g, R = V.g, V.R
    if V.kind is PotentialKind.LOGARITHMIC:
        return _log_head_norm(g / R, R, s, dim, spec)
    if V.kind is PotentialKind.TABULATED:
        return _table_norm(V, s, dim, spec, cutoff=None)
    spec = _power_spec(spec, s)
    sup = sup_negative(V)
    if sup == 0.0:
        return 0.0
    k = sup if math.isfinite(sup) else 1.0

    def f(r):
        return _weight(dim, r) * _scaled_power(max(0.0, -evaluate(V, r)), k, s)

    if V.kind is PotentialKind.SINGULAR:
        if (dim == 3 and s >= 6.0) or (dim == 1 and s >= 2.0):
            raise DivergentNormError(
                f"singular potential negative part is not in L^{s:g} in {dim}D"
            )
        # u = sqrt(r) removes the r^(-s/2) endpoint singularity
        def head(u):
            return _singular_head_integrand(
                u, max(0.0, -evaluate(V, u * u)) if u > 0.0 else 0.0, k, s, dim
            )

        total = _quad(head, 0.0, math.sqrt(R), spec, spec.abs_tol / 4.0)
        total += _tail(f, R, spec, spec.abs_tol)
    else:
        total = _quad(f, 0.0, R, spec, spec.abs_tol / 4.0)
        total += _tail(f, R, spec, spec.abs_tol)
    return k * total ** (1.0 / s)


def _table_norm(
    V: PotentialModel, s: float, dim: int, spec, cutoff: float | None
) -> float:
    """Tabulated-potential norm, optionally of (C - V)^+ when cutoff is
    given, integrating piecewise between knots and sign changes."""
    if cutoff is not None and cutoff > 0.0:
        # the potential vanishes beyond the table, so (C - V)^+ -> C there
        raise DivergentNormError(
            "cutoff above the potential's vanishing tail: (C - V)^+ does not decay"
        )
    spec = _power_spec(spec, s)
    interp = _interpolant(V)
    level = (0.0 if cutoff is None else cutoff) / V.g

    def base(r):
        v = V.g * float(interp(r))
        return max(0.0, -v) if cutoff is None else max(0.0, cutoff - v)

    # monotone interpolation attains its extrema at the knots
    knot_sup = max((base(r) for r, _ in V.table), default=0.0)
    k = knot_sup if knot_sup > 0.0 else 1.0

    def f(r):
        return _weight(dim, r) * _scaled_power(base(r), k, s)

    knots = list(interp.x)
    crossings = [
        float(c)
        for c in np.ravel(interp.solve(level, extrapolate=False))
        if np.isreal(c)
    ]
    points = sorted(set(knots + crossings))
    total = 0.0
    n_pieces = max(1, len(points) - 1)
    for a, b in zip(points, points[1:]):
        if b > a:
            total += _quad(f, a, b, spec, spec.abs_tol / (4.0 * n_pieces))

    # head below the first radius: fitted power-law extension
    r0 = V.table[0][0]
    if r0 > 0.0:
        p, v0 = _table_head_power(V)
        v0 = V.g * v0
        # fuzz absorbs roundoff in the fitted exponent at the critical s
        if v0 < 0.0 and p < 0.0 and p * s + dim <= 1e-9:
            raise DivergentNormError(
                f"tabulated potential behaves like r^({p:.3f}) near r = 0; "
                f"its negative part is not in L^{s:g} in {dim}D"
            )

        def head_base(r):
            v = v0 * (r / r0) ** p
            return max(0.0, -v) if cutoff is None else max(0.0, cutoff - v)

        if any(head_base(r) > 0.0 for r in (r0 * 1e-6, r0 * 0.5, r0 * 0.999999)):
            total += _quad(
                lambda r: _weight(dim, r) * _scaled_power(head_base(r), k, s),
                0.0,
                r0,
                spec,
                spec.abs_tol / 4.0,
            )
    if total == 0.0:
        return 0.0
    return k * total ** (1.0 / s)


def negative_part_norm(
    V: PotentialModel,
    s: float,
    dim: int = 3,
    spec: QuadratureSpec | None = None,
    method: str = "auto",
) -> float:
    """||V^-||_s with the radial measure 4 pi r^2 dr in 3D and dx over the
    line in 1D.  ``s = math.inf`` returns the sup norm.

    method: "auto" uses the Gamma closed forms for the parametric kinds and
    quadrature otherwise; "quadrature" forces the quadrature route (used for
    cross-checks); "closed_form" fails for tabulated input.
    """
    if s == math.inf:
        return sup_negative(V)
    _check_norm_args(s, dim)
    spec = spec or DEFAULT_QUADRATURE
    if method not in ("auto", "quadrature", "closed_form"):
        raise DomainError(f"unknown method {method!r}")
    if method == "closed_form" or (
        method == "auto" and V.kind is not PotentialKind.TABULATED
    ):
        if V.kind is PotentialKind.TABULATED:
            raise DomainError("no closed form for tabulated potentials")
        return _closed_form_norm(V, s, dim)
    return _norm_quadrature(V, s, dim, spec)


def _shifted_support(V: PotentialModel, C: float) -> tuple[float, float]:
    """Support interval (a, b) of (C - V)^+ for the parametric kinds.

    Raises DivergentNormError when the support is unbounded (C above the
    large-r limit of a decaying potential).
    """
    g, R = V.g, V.R
    if V.kind is PotentialKind.LOGARITHMIC:
        return 0.0, R * math.exp(C * R / g)
    if C > 0.0:
        raise DivergentNormError(
            f"cutoff C = {C:g} > 0: (C - V)^+ tends to C at large r and its "
            "norm diverges for a decaying potential"
        )
    if V.kind is PotentialKind.EXPONENTIAL:
        if C <= -g / R:
            return 0.0, 0.0
        return 0.0, -R * math.log(-C * R / g)
    if V.kind is PotentialKind.SINGULAR:
        lo, hi = R * 1e-12, R
        while evaluate(V, hi) < C:
            hi *= 2.0
        while evaluate(V, lo) > C and lo > 1e-280:
            lo *= 1e-3
        # log-space keeps uniform relative precision over many decades
        t = brentq(
            lambda t: evaluate(V, math.exp(t)) - C,
            math.log(lo),
            math.log(hi),
            xtol=1e-13,
            rtol=8.9e-16,
            maxiter=300,
        )
        return 0.0, math.exp(t)
    # POWER_EXPONENTIAL: single minimum at r = R
    if C <= -g / (math.e * R):
        return 0.0, 0.0
    r1 = brentq(lambda r: evaluate(V, r) - C, 1e-280, R, rtol=1e-15)
    hi = 2.0 * R
    while evaluate(V, hi) < C:
        hi *= 2.0
    r2 = brentq(lambda r: evaluate(V, r) - C, R, hi, rtol=1e-15)
    return r1, r2


def _truncated_norm_quadrature(
    T: TruncatedPotential, s: float, dim: int, spec, prefer_closed: bool
) -> float:
    V, C = T.base, T.cutoff
    if V.kind is PotentialKind.TABULATED:
        return _table_norm(V, s, dim, spec, cutoff=C)
    if C == 0.0 and V.kind is not PotentialKind.LOGARITHMIC:
        # (0 - V)^+ = V^-: identical to the plain norm
        method = "auto" if prefer_closed else "quadrature"
        return negative_part_norm(V, s, dim, spec, method=method)
    a, b = _shifted_support(V, C)
    if b <= a:
        return 0.0
    if V.kind is PotentialKind.LOGARITHMIC:
        # (C - V)(r) = (g/R) ln(b/r) on (0, b)
        return _log_head_norm(V.g / V.R, b, s, dim, spec)

    spec = _power_spec(spec, s)
    vmin = min_value(V)
    k = C - vmin if math.isfinite(vmin) else 1.0

    def f(r):
        return _weight(dim, r) * _scaled_power(max(0.0, C - evaluate(V, r)), k, s)

    if V.kind is PotentialKind.SINGULAR:
        if (dim == 3 and s >= 6.0) or (dim == 1 and s >= 2.0):
            raise DivergentNormError(
                f"truncated singular potential still has r^(-s/2) behavior; "
                f"not integrable for s = {s:g} in {dim}D"
            )
        split = min(b, V.R)

        def head(u):
            return _singular_head_integrand(
                u,
                max(0.0, C - evaluate(V, u * u)) if u > 0.0 else 0.0,
                k,
                s,
                dim,
            )

        total = _quad(head, 0.0, math.sqrt(split), spec, spec.abs_tol / 4.0)
        if b > split:
            total += _quad(f, split, b, spec, spec.abs_tol / 4.0)
    else:
        total = _quad(f, a, b, spec, spec.abs_tol / 2.0)
    if total == 0.0:
        return 0.0
    return k * total ** (1.0 / s)


def truncated_negative_norm(
    T: TruncatedPotential,
    s: float,
    dim: int = 3,
    spec: QuadratureSpec | None = None,
    method: str = "auto",
) -> float:
    """||(min(V, C) - C)^-||_s = ||(C - V)^+||_s.

    Strictly increasing and continuous in C wherever finite.  The logarithmic
    kind uses a closed form (support r < R e^(CR/g)); other kinds integrate
    over the support of (C - V)^+.  ``s = math.inf`` gives C - min(V).
    """
    V, C = T.base, T.cutoff
    if s == math.inf:
        return max(0.0, C - min_value(V))
    _check_norm_args(s, dim)
    spec = spec or DEFAULT_QUADRATURE
    if method not in ("auto", "quadrature", "closed_form"):
        raise DomainError(f"unknown method {method!r}")
    if V.kind is PotentialKind.LOGARITHMIC and method in ("auto", "closed_form"):
        g, R = V.g, V.R
        b = R * math.exp(C * R / g)
        if dim == 3:
            ln_power = (
                s * math.log(g / R)
                + 3.0 * math.log(b)
                + math.log(4.0 * math.pi)
                + math.lgamma(s + 1.0)
                - (s + 1.0) * math.log(3.0)
            )
        else:
            ln_power = s * math.log(g / R) + math.log(2.0 * b) + math.lgamma(s + 1.0)
        return math.exp(ln_power / s)
    if method == "closed_form":
        raise DomainError(f"no closed form for truncated {V.kind.value} norms")
    return _truncated_norm_quadrature(T, s, dim, spec, prefer_closed=method == "auto")
