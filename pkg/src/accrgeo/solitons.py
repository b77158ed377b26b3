"""Soliton equations driven by both B-metrics, and the theorem checkers.

The central equation couples the Ricci tensor of g to Lie derivatives of
both metrics along a potential field theta:

    rho + (1/2) L_theta g + (1/2) L_theta g_assoc
        + (lam + beta tau) g + (lam_assoc + beta tau_assoc) g_assoc = 0

where tau and tau_assoc are the scalar curvatures of g and g_assoc and
beta is a fixed real parameter. A single-metric variant trades the
g_assoc terms for mu eta (.) eta:

    rho + (1/2) L_theta g + (lam + beta tau) g + mu eta (.) eta = 0.

Potentials come in three kinds. A conformal potential is not given by
components at all: it is the assumption L_theta g = 2 psi g and
L_theta g_assoc = 2 psi_assoc g_assoc for pointwise scalars. A vertical
potential is theta = k xi for a scalar k constant along the contact
distribution. A left-invariant potential is a plain constant vector.

The two theorem checkers turn the consequences of each assumption into
named residual checks: everything a conformal potential forces on
(tau, tau_assoc, psi + lam, psi_assoc + lam_assoc), and the closed-form
solution (lam, lam_assoc) a vertical potential admits on Sasaki-like
structures. beta = -1/(2n) is a genuine branch point of both theorems:
the scalar curvatures drop out of the coefficient equations there, so
the checkers route to the degenerate branch instead of dividing by the
vanishing factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    GeometryError,
    NotSasakiLike,
    SingularFit,
    UnsupportedPotential,
)
from .geometry import Connection, SasakiLikeResult
from .structure import AccRStructure
from .tensors import DEFAULT_TOL, MetricPair, Tensor, phi_trace, trace_g

#: |beta + 1/(2n)| below this routes to the degenerate branch
DEGENERATE_BETA_TOL = 1e-9


@dataclass(frozen=True)
class VerticalScalar:
    """Pointwise data of a scalar constant on the contact distribution.

    Only the value and the derivative along xi survive in any of the
    closed forms, so that is all we carry.
    """

    value: float
    xi_derivative: float


@dataclass(frozen=True)
class VerticalPotential:
    """theta = k xi."""

    k: VerticalScalar


@dataclass(frozen=True)
class ConformalPotential:
    """Potential known only through L_theta g = 2 psi g, L_theta g_assoc = 2 psi_assoc g_assoc."""

    psi: float
    psi_assoc: float


@dataclass(frozen=True)
class LeftInvariantPotential:
    """A constant vector field, given by its frame components."""

    components: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.components, dtype=float)
        if arr.ndim != 1:
            raise UnsupportedPotential("left-invariant potential needs a component vector")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)


@dataclass(frozen=True)
class SolitonSpec:
    """Coefficients of one soliton equation instance."""

    beta: float
    lam: float
    lam_assoc: float = 0.0
    mu: float = None


@dataclass(frozen=True)
class Check:
    """One named residual compared against one tolerance."""

    name: str
    residual: float
    tol: float = DEFAULT_TOL
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.residual < self.tol


@dataclass
class TheoremReport:
    """An ordered list of checks plus free-form notes."""

    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, name: str, residual: float, tol: float = DEFAULT_TOL, note: str = "") -> None:
        self.checks.append(Check(name, abs(float(residual)), tol, note))

    def add_note(self, text: str) -> None:
        self.notes.append(text)

    def extend(self, other: "TheoremReport") -> None:
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)

    def __getitem__(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(check.name == name for check in self.checks)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def worst(self) -> Check:
        if not self.checks:
            return None
        return max(self.checks, key=lambda check: check.residual / check.tol)


def lie_derivative_metric(
    metric: MetricPair, conn: Connection, potential, s: AccRStructure
) -> Tensor:
    """(L_theta m)(x, y) = m(D_x theta, y) + m(x, D_y theta) for constant-coefficient m.

    Works for any metric on the frame (g, g_assoc, or a transform), since
    only metric coefficients being frame-constant is used. Conformal
    potentials carry no components, so they are rejected here; their Lie
    derivatives exist only as the defining assumption.
    """
    if isinstance(potential, VerticalPotential):
        k = potential.k
        xi_field = s.xi.data
        d_theta = k.xi_derivative * np.outer(xi_field, s.eta.data) + k.value * conn.derivative_of_field(xi_field)
    elif isinstance(potential, LeftInvariantPotential):
        d_theta = conn.derivative_of_field(potential.components)
    elif isinstance(potential, ConformalPotential):
        raise UnsupportedPotential(
            "a conformal potential has no component representation; "
            "use its defining scalars directly"
        )
    else:
        raise UnsupportedPotential(f"unknown potential kind {type(potential).__name__}")
    half = np.einsum("mi,mj->ij", d_theta, metric.matrix)
    return Tensor(s.frame, half + half.T)


def vertical_lie_closed_form(
    k: VerticalScalar, s: AccRStructure, classification: SasakiLikeResult
) -> tuple:
    """Closed forms of L_{k xi} g and L_{k xi} g_assoc on a Sasaki-like structure.

    With h = 2 (dk along xi) eta (.) eta:

        L_{k xi} g       = h - 2k (g_assoc - eta (.) eta)
        L_{k xi} g_assoc = h + 2k (g - eta (.) eta)

    Both collapse the connection out of the computation; they are valid
    only in the Sasaki-like class, which is why the classification result
    is a required argument.
    """
    if not classification.is_sasaki_like:
        raise NotSasakiLike(
            "closed-form vertical Lie derivatives hold only for Sasaki-like structures"
        )
    eta_outer = np.outer(s.eta.data, s.eta.data)
    h = 2.0 * k.xi_derivative * eta_outer
    lie_g = h - 2.0 * k.value * (s.g_assoc.matrix - eta_outer)
    lie_assoc = h + 2.0 * k.value * (s.g.matrix - eta_outer)
    return Tensor(s.frame, lie_g), Tensor(s.frame, lie_assoc)


def rb_like_residual(
    ricci_tensor: Tensor,
    lie_g: Tensor,
    lie_assoc: Tensor,
    s: AccRStructure,
    spec: SolitonSpec,
    tau: float,
    tau_assoc: float,
) -> Tensor:
    """Left-hand side of the two-metric soliton equation; zero means soliton."""
    arr = (
        ricci_tensor.data
        + 0.5 * lie_g.data
        + 0.5 * lie_assoc.data
        + (spec.lam + spec.beta * tau) * s.g.matrix
        + (spec.lam_assoc + spec.beta * tau_assoc) * s.g_assoc.matrix
    )
    return Tensor(s.frame, arr)


def eta_rb_residual(
    ricci_tensor: Tensor,
    lie_g: Tensor,
    s: AccRStructure,
    spec: SolitonSpec,
    tau: float,
) -> Tensor:
    """Left-hand side of the single-metric variant with the eta (.) eta term."""
    if spec.mu is None:
        raise GeometryError("the single-metric soliton equation needs spec.mu (0 is allowed)")
    arr = (
        ricci_tensor.data
        + 0.5 * lie_g.data
        + (spec.lam + spec.beta * tau) * s.g.matrix
        + spec.mu * np.outer(s.eta.data, s.eta.data)
    )
    return Tensor(s.frame, arr)


def divergence(potential, conn: Connection, metric: MetricPair, s: AccRStructure) -> float:
    """div theta = g^ij g(D_i theta, e_j), cross-checked against (1/2) tr_g L_theta g."""
    lie = lie_derivative_metric(metric, conn, potential, s)
    div = 0.5 * trace_g(lie, metric)
    if isinstance(potential, VerticalPotential):
        d_theta = potential.k.xi_derivative * np.outer(
            s.xi.data, s.eta.data
        ) + potential.k.value * conn.derivative_of_field(s.xi.data)
    else:
        d_theta = conn.derivative_of_field(potential.components)
    direct = float(np.einsum("ij,mi,mj->", metric.inverse, d_theta, metric.matrix))
    if not abs(direct - div) < 1e-10:
        raise GeometryError(
            f"divergence routes disagree: {direct:.3e} vs half-trace {div:.3e}"
        )
    return direct


@dataclass(frozen=True)
class EinsteinLikeFit:
    """Least-squares coefficients of rho against {g, g_assoc, eta (.) eta}.

    kind is one of "einstein", "eta_einstein", "einstein_like",
    "not_einstein_like"; the trace residuals record how well
    tau = (2n+1)a + b + c and tau_star = -2nb hold for the fitted
    coefficients.
    """

    a: float
    b: float
    c: float
    residual: float
    kind: str
    tau_residual: float
    tau_star_residual: float


def einstein_like_fit(
    ricci_tensor: Tensor, s: AccRStructure, *, tol: float = DEFAULT_TOL
) -> EinsteinLikeFit:
    """Decompose rho = a g + b g_assoc + c eta (.) eta if possible.

    The basis Gram matrix is nonsingular for every valid structure, so a
    SingularFit signals corrupted inputs rather than a tight geometry.
    """
    basis = np.stack(
        [
            s.g.matrix.ravel(),
            s.g_assoc.matrix.ravel(),
            np.outer(s.eta.data, s.eta.data).ravel(),
        ]
    )
    gram = basis @ basis.T
    rhs = basis @ ricci_tensor.data.ravel()
    if abs(np.linalg.det(gram)) < 1e-12:
        raise SingularFit("fit basis {g, g_assoc, eta(.)eta} is numerically dependent")
    coeffs = np.linalg.solve(gram, rhs)

    def recompose(v):
        return (
            v[0] * s.g.matrix
            + v[1] * s.g_assoc.matrix
            + v[2] * np.outer(s.eta.data, s.eta.data)
        )

    # prefer exact zeros when they decompose rho just as well: the
    # sub-class labels below depend on which coefficients vanish
    snapped = np.where(np.abs(coeffs) < tol, 0.0, coeffs)
    if float(np.max(np.abs(ricci_tensor.data - recompose(snapped)))) < tol:
        coeffs = snapped
    a, b, c = coeffs
    residual = float(np.max(np.abs(ricci_tensor.data - recompose(coeffs))))
    if residual < tol:
        if abs(b) < tol and abs(c) < tol:
            kind = "einstein"
        elif abs(b) < tol:
            kind = "eta_einstein"
        else:
            kind = "einstein_like"
    else:
        kind = "not_einstein_like"

    n = s.n
    tau = trace_g(ricci_tensor, s.g)
    tau_star = phi_trace(ricci_tensor, s.g, s.phi)
    tau_residual = abs(tau - ((2 * n + 1) * a + b + c))
    tau_star_residual = abs(tau_star + 2 * n * b)
    if residual < tol and not (tau_residual < tol and tau_star_residual < tol):
        raise GeometryError(
            "Einstein-like fit trace consequences failed on an exact decomposition"
        )
    return EinsteinLikeFit(
        a=float(a),
        b=float(b),
        c=float(c),
        residual=residual,
        kind=kind,
        tau_residual=tau_residual,
        tau_star_residual=tau_star_residual,
    )


def is_degenerate_beta(beta: float, n: int) -> bool:
    """True when beta sits within DEGENERATE_BETA_TOL of -1/(2n).

    The window is on beta itself, not on the factor 1 + 2n beta: near the
    excluded value the conformal elimination divides by that factor, and
    rounding in the inputs is amplified by its reciprocal, so anything
    this close must take the division-free branch.
    """
    return abs(beta + 1.0 / (2.0 * n)) < DEGENERATE_BETA_TOL


def solve_vertical_soliton(
    beta: float,
    k: VerticalScalar,
    tau: float,
    tau_assoc: float,
    n: int,
    *,
    classification: SasakiLikeResult = None,
    ricci_tensor: Tensor = None,
    structure: AccRStructure = None,
) -> tuple:
    """Soliton constants forced by a vertical potential on a Sasaki-like structure.

    Away from the branch point beta = -1/(2n):

        lam       = 1 - k - tau (1 + 2 n beta) / (2n)
        lam_assoc = 1 + k - tau_assoc (1 + 2 n beta) / (2n)

    At the branch point both scalar-curvature terms drop out, leaving
    lam = 1 - k and lam_assoc = 1 + k with (tau, tau_assoc) constrained
    only through their sum. Returns (lam, lam_assoc, report); the report
    re-derives the constants through every independent identity the
    theorem provides.
    """
    if classification is not None and not classification.is_sasaki_like:
        raise NotSasakiLike("the vertical-potential theorem needs a Sasaki-like structure")
    report = TheoremReport()
    factor = 1.0 + 2.0 * n * beta
    degenerate = is_degenerate_beta(beta, n)
    k_prime = k.xi_derivative

    if degenerate:
        lam = 1.0 - k.value
        lam_assoc = 1.0 + k.value
        report.add_note(
            "beta at the branch point -1/(2n): scalar curvatures are not "
            "separately determined, only their sum is constrained"
        )
    else:
        lam = 1.0 - k.value - tau * factor / (2.0 * n)
        lam_assoc = 1.0 + k.value - tau_assoc * factor / (2.0 * n)

    report.add(
        "scalar_sum_from_k_derivative",
        tau + tau_assoc - 4.0 * n * (k_prime + n + 1.0),
        note="tau + tau_assoc = 4n(k' + n + 1)",
    )
    report.add(
        "k_derivative_from_trace",
        k_prime + 0.5 * (lam + lam_assoc + beta * (tau + tau_assoc) + 2.0 * n),
        note="k' = -(lam + lam_assoc + beta(tau + tau_assoc) + 2n)/2",
    )
    if not degenerate:
        report.add(
            "k_derivative_consistency",
            k_prime - (-(lam + lam_assoc - 2.0) / (2.0 * factor) - n - 1.0),
            note="k' recovered from the solved constants",
        )
        report.add(
            "scalar_sum_from_lambdas",
            tau + tau_assoc + 2.0 * n * (lam + lam_assoc - 2.0) / factor,
            note="tau + tau_assoc recovered from the solved constants",
        )
    if ricci_tensor is not None and structure is not None:
        expected = (
            (tau / (2.0 * n) - 1.0) * structure.g.matrix
            + (tau_assoc / (2.0 * n) - 1.0) * structure.g_assoc.matrix
            - ((tau + tau_assoc) / (2.0 * n) - 2.0 * (n + 1.0))
            * np.outer(structure.eta.data, structure.eta.data)
        )
        report.add(
            "ricci_reconstruction",
            float(np.max(np.abs(ricci_tensor.data - expected))),
            note="rho rebuilt from (tau, tau_assoc) alone",
        )
    return lam, lam_assoc, report


def verify_conformal_theorem(
    beta: float,
    psi: float,
    psi_assoc: float,
    lam: float,
    lam_assoc: float,
    tau: float,
    tau_assoc: float,
    n: int,
    *,
    ricci_tensor: Tensor = None,
    structure: AccRStructure = None,
) -> TheoremReport:
    """Check every identity a conformal potential forces on a Sasaki-like soliton.

    The theorem constrains only the sums psi + lam and psi_assoc + lam_assoc,
    never the summands separately; callers that know just the sums can pass
    them through psi with lam = 0. Checks that require dividing by
    1 + 2 n beta, 1 + (2n+1) beta, or beta are guarded and skipped at the
    respective parameter values; the degenerate beta = -1/(2n) branch gets
    its own pair of checks instead.
    """
    report = TheoremReport()
    factor = 1.0 + 2.0 * n * beta
    sum_g = psi + lam
    sum_assoc = psi_assoc + lam_assoc
    degenerate = is_degenerate_beta(beta, n)

    report.add(
        "scalar_sum",
        tau + tau_assoc - 4.0 * n * (n + 1.0),
        note="tau + tau_assoc = 4n(n+1)",
    )
    report.add(
        "g_trace_closure",
        (1.0 + (2.0 * n + 1.0) * beta) * tau
        + beta * tau_assoc
        + (2.0 * n + 1.0) * sum_g
        + sum_assoc,
        note="g-trace of the soliton equation",
    )
    report.add(
        "reeb_trace_closure",
        beta * (tau + tau_assoc) + sum_g + sum_assoc + 2.0 * n,
        note="evaluation on (xi, xi)",
    )
    tau_star = 2.0 * n - tau_assoc
    if ricci_tensor is not None and structure is not None:
        tau_star = phi_trace(ricci_tensor, structure.g, structure.phi)
    else:
        report.add_note("tau_star derived from tau_assoc; no Ricci tensor supplied")
    report.add(
        "phi_trace_relation",
        tau_star - 2.0 * n * (sum_assoc + beta * tau_assoc),
        note="phi-trace of the soliton equation",
    )

    if degenerate:
        report.add_note(
            "beta at the branch point -1/(2n): the scalar curvatures decouple "
            "from the potential sums"
        )
        report.add("unit_sum_g", sum_g - 1.0, note="psi + lam = 1 at the branch point")
        report.add(
            "unit_sum_assoc",
            sum_assoc - 1.0,
            note="psi_assoc + lam_assoc = 1 at the branch point",
        )
    else:
        report.add(
            "tau_from_sums",
            tau + 2.0 * n * (sum_g - 1.0) / factor,
            note="tau = -2n(psi + lam - 1)/(1 + 2n beta)",
        )
        report.add(
            "tau_assoc_from_sums",
            tau_assoc + 2.0 * n * (sum_assoc - 1.0) / factor,
            note="tau_assoc = -2n(psi_assoc + lam_assoc - 1)/(1 + 2n beta)",
        )
        report.add(
            "sums_closure",
            sum_g + sum_assoc + 2.0 * n * (1.0 + 2.0 * (n + 1.0) * beta),
            note="the two sums are not independent",
        )
        nested_factor = 1.0 + (2.0 * n + 1.0) * beta
        if abs(nested_factor) > DEGENERATE_BETA_TOL:
            report.add(
                "tau_nested_form",
                tau
                + ((2.0 * n + 1.0) * sum_g + 1.0 + (sum_assoc - 1.0) / factor)
                / nested_factor,
                note="tau eliminated through the g-trace instead of the sums",
            )
        else:
            report.add_note(
                "beta = -1/(2n+1): nested tau elimination skipped (guarded division)"
            )
        if abs(beta) > DEGENERATE_BETA_TOL:
            report.add(
                "tau_assoc_solved_form",
                tau_assoc
                + ((sum_g - 1.0) / factor + sum_assoc + 2.0 * n + 1.0) / beta,
                note="tau_assoc eliminated through the g-trace",
            )
        else:
            report.add_note("beta = 0: tau_assoc elimination skipped (guarded division)")

    if ricci_tensor is not None and structure is not None:
        soliton_form = (
            ricci_tensor.data
            + (sum_g + beta * tau) * structure.g.matrix
            + (sum_assoc + beta * tau_assoc) * structure.g_assoc.matrix
        )
        report.add(
            "ricci_from_soliton_coeffs",
            float(np.max(np.abs(soliton_form))),
            note="rho + (psi+lam+beta tau) g + (psi_assoc+lam_assoc+beta tau_assoc) g_assoc = 0",
        )
        einstein_form = (
            ricci_tensor.data
            - (tau / (2.0 * n) - 1.0) * structure.g.matrix
            - (tau_assoc / (2.0 * n) - 1.0) * structure.g_assoc.matrix
        )
        report.add(
            "ricci_einstein_like",
            float(np.max(np.abs(einstein_form))),
            note="rho = (tau/2n - 1) g + (tau_assoc/2n - 1) g_assoc",
        )
    return report
