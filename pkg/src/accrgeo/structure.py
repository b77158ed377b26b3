"""Almost contact B-metric structures.

A structure on a (2n+1)-dimensional frame is a quadruple (phi, xi, eta, g):
an endomorphism phi, a Reeb field xi, its dual one-form eta, and a
pseudo-Riemannian metric g of signature (n+1, n) subject to

    phi xi = 0                  phi^2 = -id + eta (.) xi
    eta o phi = 0               eta(xi) = 1
    g(phi x, phi y) = -g(x, y) + eta(x) eta(y)

The last identity makes g a B-metric: phi is g-symmetric rather than
g-skew, which is what separates this geometry from the metric contact
world. Every such structure carries a second metric of the same
signature, the associated metric

    g_assoc(x, y) = g(x, phi y) + eta(x) eta(y).

Applying the same recipe to g_assoc does not return g: the map has
period four, with two applications giving -g + 2 eta (.) eta.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateMetric,
    DimensionMismatch,
    StructureViolation,
    WrongSignature,
    ZeroTransform,
)
from .tensors import DEFAULT_TOL, Frame, MetricPair, Tensor, invert_metric

#: eigenvalues inside this band around zero mean a degenerate metric
SIGNATURE_TOL = 1e-9


@dataclass(frozen=True)
class AccRStructure:
    """A validated almost contact B-metric structure with both metrics."""

    frame: Frame
    phi: Tensor
    xi: Tensor
    eta: Tensor
    g: MetricPair
    g_assoc: MetricPair

    @property
    def n(self) -> int:
        return self.frame.n

    @property
    def eta_outer(self) -> Tensor:
        """The rank-2 tensor eta (.) eta."""
        return Tensor(self.frame, np.outer(self.eta.data, self.eta.data))


def metric_signature(g: Tensor) -> tuple:
    """Counts of positive and negative eigenvalues of a symmetric tensor."""
    eigenvalues = np.linalg.eigvalsh(0.5 * (g.data + g.data.T))
    if np.any(np.abs(eigenvalues) < SIGNATURE_TOL):
        raise DegenerateMetric(
            f"metric has an eigenvalue within {SIGNATURE_TOL} of zero"
        )
    pos = int(np.sum(eigenvalues > 0))
    return pos, g.frame.dim - pos


def validate_structure(phi, xi, eta, g, frame: Frame, *, tol: float = DEFAULT_TOL) -> AccRStructure:
    """Check every defining identity and return the validated structure.

    Inputs may be Tensors on ``frame`` or plain array-likes. Shape errors,
    metric symmetry and degeneracy, and signature are rejected first; the
    defining identities are then checked as a batch so a StructureViolation
    names all failures, not just the first.
    """
    phi = _as_tensor(phi, frame, 2)
    xi = _as_tensor(xi, frame, 1)
    eta = _as_tensor(eta, frame, 1)
    g = _as_tensor(g, frame, 2)

    metric = invert_metric(g)
    n = frame.n
    sig = metric_signature(g)
    if sig != (n + 1, n):
        raise WrongSignature(f"metric signature {sig} instead of ({n + 1}, {n})")

    phi_m, xi_v, eta_v, g_m = phi.data, xi.data, eta.data, g.data
    ident = np.eye(frame.dim)
    violations = []

    def check(name, residual_array):
        residual = float(np.max(np.abs(np.asarray(residual_array))))
        if not residual < tol:
            violations.append((name, residual))

    check("phi(xi) = 0", phi_m @ xi_v)
    check("phi^2 = -id + eta(.)xi", phi_m @ phi_m + ident - np.outer(xi_v, eta_v))
    check("eta(phi(.)) = 0", eta_v @ phi_m)
    check("eta(xi) = 1", eta_v @ xi_v - 1.0)
    check(
        "g(phi.,phi.) = -g + eta(.)eta",
        phi_m.T @ g_m @ phi_m + g_m - np.outer(eta_v, eta_v),
    )
    check("g(phi.,.) = g(.,phi.)", phi_m.T @ g_m - g_m @ phi_m)
    check("g(.,xi) = eta", g_m @ xi_v - eta_v)
    if violations:
        raise StructureViolation(violations)

    g_assoc = associated_metric_from_parts(g, phi, eta, tol=tol)
    return AccRStructure(frame=frame, phi=phi, xi=xi, eta=eta, g=metric, g_assoc=g_assoc)


def associated_metric_from_parts(g: Tensor, phi: Tensor, eta: Tensor, *, tol: float = DEFAULT_TOL) -> MetricPair:
    """Build g_assoc(x,y) = g(x, phi y) + eta(x) eta(y) and invert it.

    Symmetry and the B-metric identity of the result are consequences of
    the structure identities, so their failure means the inputs were bad;
    both are still verified here.
    """
    assoc = g.data @ phi.data + np.outer(eta.data, eta.data)
    violations = []
    asym = float(np.max(np.abs(assoc - assoc.T)))
    if not asym < tol:
        violations.append(("g_assoc symmetric", asym))
    b_metric = float(
        np.max(np.abs(phi.data.T @ assoc @ phi.data + assoc - np.outer(eta.data, eta.data)))
    )
    if not b_metric < tol:
        violations.append(("g_assoc(phi.,phi.) = -g_assoc + eta(.)eta", b_metric))
    if violations:
        raise StructureViolation(violations)
    return invert_metric(Tensor(g.frame, 0.5 * (assoc + assoc.T)))


def associated_metric(s: AccRStructure) -> MetricPair:
    """The associated metric of a validated structure, rebuilt from parts."""
    return associated_metric_from_parts(s.g.g, s.phi, s.eta)


def contact_homothetic_transform(s: AccRStructure, p: float, q: float) -> AccRStructure:
    """Replace the metric by g' = p g + q g_assoc + (1 - p - q) eta (.) eta.

    (phi, xi, eta) are kept. The result is validated from scratch, so a
    choice of (p, q) that ruins the signature raises WrongSignature rather
    than returning a broken structure. p = q = 0 collapses the metric onto
    the eta line and is rejected outright.
    """
    p, q = float(p), float(q)
    if p == 0.0 and q == 0.0:
        raise ZeroTransform("contact homothetic transform needs (p, q) != (0, 0)")
    g_new = (
        p * s.g.matrix
        + q * s.g_assoc.matrix
        + (1.0 - p - q) * np.outer(s.eta.data, s.eta.data)
    )
    return validate_structure(s.phi, s.xi, s.eta, Tensor(s.frame, g_new), s.frame)


def _as_tensor(value, frame: Frame, rank: int) -> Tensor:
    if isinstance(value, Tensor):
        tensor = value if value.frame == frame else Tensor(frame, value.data)
    else:
        tensor = Tensor(frame, np.asarray(value, dtype=float))
    if tensor.rank != rank:
        raise DimensionMismatch(f"expected rank {rank}, got rank {tensor.rank}")
    return tensor
