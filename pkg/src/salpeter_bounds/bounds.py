"""Ground-state lower bounds for the semirelativistic eigenproblem.

For a potential whose attractive part V^- lies in L^(q/(q-1)), the master
inequality gives in three dimensions

    M >= alpha m - Cq^3 Ct_q m^(3-3/q) ||V^-||_{q/(q-1)},   1 <= q < 3/2,

and in one dimension

    M >= alpha m - Cq Cb_q m^(1-1/q) ||V^-||_{q/(q-1)},     1 <= q <= 2,

where Cq is the combined sharp-Young constant and Ct_q/Cb_q are the
Green's-function norm constants from :mod:`.specfun`.  The free exponent q is
optimized.  Setting the right-hand side to zero yields a lower limit on the
critical coupling at which the ground-state mass vanishes, and capping a
confining potential at a level C (then shifting by -C) extends the bound to
potentials whose attractive-part norm would otherwise not exist: the largest
C at which the capped problem's bound is still nonnegative is itself a lower
bound on M.

Bounds are reported raw; negative values are flagged vacuous rather than
clipped, so sweeps can plot full curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import (
    ConvergenceError,
    DivergentNormError,
    DomainError,
    PotentialClassError,
)
from .potentials import (
    PotentialModel,
    TruncatedPotential,
    evaluate,
    length_scale,
    min_value,
    negative_part_norm,
    sup_negative,
    truncated_negative_norm,
    with_coupling,
)
from .specfun import (
    DEFAULT_QUADRATURE,
    QuadratureSpec,
    combined_constant,
    green_constant_1d,
    green_constant_3d,
)

__all__ = [
    "BoundReport",
    "TruncationResult",
    "mass_bound_3d",
    "optimize_mass_bound_3d",
    "binding_energy_bound_3d",
    "critical_coupling_bound_3d",
    "confining_bound",
    "cutoff_for_exponent",
    "mass_bound_1d",
    "optimize_mass_bound_1d",
]

_Q_HI_3D = 1.5
_Q_HI_1D = 2.0


@dataclass(frozen=True)
class BoundReport:
    """An optimized ground-state bound and its ingredients (GeV units)."""

    dimension: int
    alpha: float
    m: float
    q_opt: float
    norm_value: float
    green_norm: float
    mass_bound: float
    energy_bound: float
    trivial_limit_bound: float
    vacuous: bool


@dataclass(frozen=True)
class TruncationResult:
    """Outcome of the confining-potential cutoff optimization.

    The bound is M >= C*; ``residual`` is |LHS - 1| of the cutoff equation at
    (q*, C*).  ``at_cap`` marks C* pinned at the largest admissible cutoff
    (decaying potentials cap at C = 0); ``vacuous`` marks the degenerate case
    where no admissible cutoff exists at any q.
    """

    q_star: float
    c_star: float
    mass_bound: float
    residual: float
    at_cap: bool = False
    vacuous: bool = False


def _conjugate(q: float) -> float:
    return math.inf if q == 1.0 else q / (q - 1.0)


def _check_m_alpha(m: float, alpha: float) -> None:
    if not m > 0.0:
        raise DomainError(f"mass must be positive, got {m!r}")
    if alpha not in (1, 2, 1.0, 2.0):
        raise DomainError(f"alpha must be 1 or 2, got {alpha!r}")


def _check_q(q: float, dim: int) -> None:
    hi = _Q_HI_3D if dim == 3 else _Q_HI_1D
    ok = (1.0 <= q < hi) if dim == 3 else (1.0 <= q <= hi)
    if math.isnan(q) or not ok:
        bracket = "[1, 3/2)" if dim == 3 else "[1, 2]"
        raise DomainError(f"exponent q = {q!r} outside the admissible {bracket}")


def _norm_term(
    V: PotentialModel | TruncatedPotential,
    m: float,
    q: float,
    dim: int,
    spec: QuadratureSpec,
) -> float:
    """The subtracted term of the mass bound at exponent q.

    For a TruncatedPotential the norm taken is that of the shifted potential's
    negative part (C - V)^+.
    """
    s = _conjugate(q)
    if isinstance(V, TruncatedPotential):
        norm = truncated_negative_norm(V, s, dim, spec)
    else:
        norm = negative_part_norm(V, s, dim, spec)
    if math.isinf(norm):
        raise DivergentNormError(
            f"negative-part sup norm is infinite; the q = {q:g} bound does not apply"
        )
    if norm == 0.0:
        return 0.0
    if q == 1.0:
        return norm  # all constants and the mass power reduce to 1
    if dim == 3:
        return (
            combined_constant(q) ** 3
            * green_constant_3d(q, spec)
            * m ** (3.0 - 3.0 / q)
            * norm
        )
    return combined_constant(q) * green_constant_1d(q, spec) * m ** (1.0 - 1.0 / q) * norm


def mass_bound_3d(
    V: PotentialModel,
    m: float,
    alpha: float,
    q: float,
    spec: QuadratureSpec | None = None,
) -> float:
    """Lower bound on the ground-state mass at fixed exponent q (3D).

    A negative return is a vacuous bound (the inequality constrains |M| and
    is informative only while nonnegative); callers see the raw value.
    """
    _check_m_alpha(m, alpha)
    _check_q(q, 3)
    return alpha * m - _norm_term(V, m, q, 3, spec or DEFAULT_QUADRATURE)


def mass_bound_1d(
    V: PotentialModel,
    m: float,
    alpha: float,
    q: float,
    spec: QuadratureSpec | None = None,
) -> float:
    """Lower bound on the ground-state mass at fixed exponent q (1D)."""
    _check_m_alpha(m, alpha)
    _check_q(q, 1)
    return alpha * m - _norm_term(V, m, q, 1, spec or DEFAULT_QUADRATURE)


def _q_grid(dim: int, n: int) -> np.ndarray:
    if dim == 3:
        return np.linspace(1.0, _Q_HI_3D, n, endpoint=False)
    return np.linspace(1.0, _Q_HI_1D, n, endpoint=True)


def _minimize_term(term, grid) -> tuple[float, float]:
    """Minimize term(q) over the grid, then refine by golden section.

    Points where the norm diverges are skipped; if every point diverges the
    potential is out of the bound's class.
    """
    values = []
    for q in grid:
        try:
            values.append(term(float(q)))
        except (DivergentNormError, DomainError):
            values.append(math.inf)
    values = np.asarray(values)
    if not np.any(np.isfinite(values)):
        raise PotentialClassError(
            "negative part is not in L^(q/(q-1)) for any admissible q; "
            "the bound does not apply to this potential"
        )
    i = int(np.argmin(values))
    q_best, t_best = float(grid[i]), float(values[i])

    lo = float(grid[i - 1]) if i > 0 else float(grid[i])
    hi = float(grid[i + 1]) if i + 1 < len(grid) else float(grid[i])
    if hi <= lo:
        return q_best, t_best

    def safe(q):
        try:
            return term(q)
        except (DivergentNormError, DomainError):
            return math.inf

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = safe(c), safe(d)
    for _ in range(80):
        if b - a < 1e-10:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = safe(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = safe(d)
    for q, t in ((c, fc), (d, fd)):
        if t < t_best:
            q_best, t_best = q, t
    return q_best, t_best


def _optimize(V, m, alpha, dim, spec, q_points) -> BoundReport:
    spec = spec or DEFAULT_QUADRATURE

    def term(q):
        return _norm_term(V, m, q, dim, spec)

    q_opt, t_opt = _minimize_term(term, _q_grid(dim, q_points))
    mass_bound = alpha * m - t_opt
    sup = sup_negative(V)
    trivial = alpha * m - sup if math.isfinite(sup) else -math.inf
    s = _conjugate(q_opt)
    norm = negative_part_norm(V, s, dim, spec)
    if q_opt == 1.0:
        green = 1.0 / (alpha * m)
    elif dim == 3:
        green = m ** (2.0 - 3.0 / q_opt) * green_constant_3d(q_opt, spec) / alpha
    else:
        green = m ** (-1.0 / q_opt) * green_constant_1d(q_opt, spec) / alpha
    return BoundReport(
        dimension=dim,
        alpha=float(alpha),
        m=float(m),
        q_opt=q_opt,
        norm_value=norm,
        green_norm=green,
        mass_bound=mass_bound,
        energy_bound=mass_bound - alpha * m,
        trivial_limit_bound=trivial,
        vacuous=mass_bound < 0.0,
    )


def optimize_mass_bound_3d(
    V: PotentialModel,
    m: float,
    alpha: float,
    spec: QuadratureSpec | None = None,
    q_points: int = 64,
) -> BoundReport:
    """Best 3D mass bound over the admissible exponent window."""
    _check_m_alpha(m, alpha)
    return _optimize(V, m, alpha, 3, spec, q_points)


def optimize_mass_bound_1d(
    V: PotentialModel,
    m: float,
    alpha: float,
    spec: QuadratureSpec | None = None,
    q_points: int = 64,
) -> BoundReport:
    """Best 1D mass bound over the admissible exponent window."""
    _check_m_alpha(m, alpha)
    return _optimize(V, m, alpha, 1, spec, q_points)


def binding_energy_bound_3d(
    V: PotentialModel,
    m: float,
    alpha: float,
    spec: QuadratureSpec | None = None,
    q_points: int = 64,
) -> float:
    """Lower bound on the binding energy E = M - alpha m (3D, optimized q)."""
    return optimize_mass_bound_3d(V, m, alpha, spec, q_points).energy_bound


def critical_coupling_bound_3d(
    V: PotentialModel,
    m: float,
    alpha: float,
    spec: QuadratureSpec | None = None,
    q_points: int = 64,
    check_scaling: bool = False,
) -> float:
    """Lower limit on the critical coupling at which the ground-state mass
    vanishes, for the potential family g * (V / V.g).

    Returns math.inf when the shape has no attractive part.  With
    ``check_scaling`` the result is recomputed at (2m, R/2) -- the same
    dimensionless combination m*R -- and the two are required to agree.
    """
    _check_m_alpha(m, alpha)
    spec = spec or DEFAULT_QUADRATURE
    shape = with_coupling(V, 1.0) if V.g != 1.0 else V

    def term(q):
        return _norm_term(shape, m, q, 3, spec)

    q_opt, t_opt = _minimize_term(term, _q_grid(3, q_points))
    if t_opt == 0.0:
        return math.inf
    result = alpha * m / t_opt
    if check_scaling:
        if shape.table is not None:
            raise DomainError("scaling check needs a parametric potential")
        import dataclasses

        scaled = dataclasses.replace(shape, R=shape.R / 2.0)
        other = critical_coupling_bound_3d(scaled, 2.0 * m, alpha, spec, q_points)
        if abs(other - result) > 1e-8 * abs(result):
            raise ConvergenceError(
                f"critical-coupling bound changed under (m, R) -> (2m, R/2): "
                f"{result!r} vs {other!r}"
            )
    return result


def _has_decaying_tail(V: PotentialModel) -> bool:
    # kinds for which V -> 0 at large r, putting a hard cap C <= 0 on the
    # admissible cutoff window
    return V.kind.value in ("exp", "pexp", "sing", "table")


def cutoff_for_exponent(
    V: PotentialModel,
    m: float,
    alpha: float,
    q: float,
    dim: int = 3,
    spec: QuadratureSpec | None = None,
) -> tuple[float, float, bool]:
    """Largest cutoff C with lhs(C) = norm-term(capped V)/(alpha m) <= 1.

    Returns (C, |lhs-1| residual, at_cap).  lhs is strictly increasing in C,
    zero for C below min(V), so the root is unique when it exists.  C = -inf
    signals a vacuous result at this q.
    """
    spec = spec or DEFAULT_QUADRATURE

    def lhs(C: float) -> float:
        return _norm_term(TruncatedPotential(V, C), m, q, dim, spec) / (alpha * m)

    cap = 0.0 if _has_decaying_tail(V) else None
    vmin = min_value(V)

    if q == 1.0:
        # closed form: lhs = (C - min V)/(alpha m)
        if not math.isfinite(vmin):
            return -math.inf, math.inf, False
        root = vmin + alpha * m
        if cap is not None and root > cap:
            return cap, abs(lhs(cap) - 1.0), True
        return root, 0.0, False

    scale = max(abs(vmin) if math.isfinite(vmin) else 0.0, alpha * m, 1.0)
    if math.isfinite(vmin):
        c_lo = vmin
        if lhs(c_lo) >= 1.0:
            # min V is attained on a set of measure zero, so lhs(min V) = 0;
            # unreachable for the supported kinds but kept defensive
            return -math.inf, math.inf, False
    else:
        # walk the cutoff down along the potential: C = V(r_j) keeps the
        # support of (C - V)^+ shrinking geometrically without ever probing
        # astronomically deep cutoffs
        r_scale = length_scale(V)
        c_lo = None
        for j in range(1, 49):
            candidate = float(evaluate(V, r_scale * 4.0 ** (-j)))
            if candidate >= 0.0:
                continue
            if lhs(candidate) < 1.0:
                c_lo = candidate
                break
        if c_lo is None:
            return -math.inf, math.inf, False

    if cap is not None:
        top = cap
        if lhs(top) <= 1.0:
            return top, abs(lhs(top) - 1.0), True
    else:
        top = max(scale, c_lo + scale)
        for _ in range(200):
            if lhs(top) > 1.0:
                break
            top = 2.0 * top if top > 0 else top / 2.0 + scale
        else:
            raise ConvergenceError("could not bracket the cutoff equation from above")

    root = brentq(
        lambda C: lhs(C) - 1.0,
        c_lo,
        top,
        xtol=1e-13 * scale,
        rtol=8.9e-16,
        maxiter=200,
    )
    return float(root), abs(lhs(float(root)) - 1.0), False


def confining_bound(
    V: PotentialModel,
    m: float,
    alpha: float,
    spec: QuadratureSpec | None = None,
    dim: int = 3,
    q_points: int = 64,
) -> TruncationResult:
    """Lower bound M >= C* for potentials handled through the cutoff-and-shift
    construction (the route required when the attractive-part norm of V itself
    does not exist, e.g. for confining potentials).

    For each q on the admissible grid the cutoff equation is solved for C by
    bracketed root finding, and (q*, C*) maximize C.  The one-dimensional
    variant follows the same construction with the 1D constants; it is an
    extension beyond the published three-dimensional procedure.
    """
    _check_m_alpha(m, alpha)
    if dim not in (1, 3):
        raise DomainError(f"dimension must be 1 or 3, got {dim!r}")
    spec = spec or DEFAULT_QUADRATURE
    grid = _q_grid(dim, q_points)

    def neg_c_star(q: float) -> float:
        c, _, _ = cutoff_for_exponent(V, m, alpha, q, dim, spec)
        return -c

    try:
        q_star, _ = _minimize_term(neg_c_star, grid)
    except PotentialClassError:
        return TruncationResult(
            q_star=math.nan,
            c_star=-math.inf,
            mass_bound=-math.inf,
            residual=math.inf,
            vacuous=True,
        )
    c_star, residual, at_cap = cutoff_for_exponent(V, m, alpha, q_star, dim, spec)
    if not math.isfinite(c_star):
        return TruncationResult(
            q_star=q_star,
            c_star=-math.inf,
            mass_bound=-math.inf,
            residual=math.inf,
            vacuous=True,
        )
    return TruncationResult(
        q_star=q_star,
        c_star=c_star,
        mass_bound=c_star,
        residual=residual,
        at_cap=at_cap,
    )
