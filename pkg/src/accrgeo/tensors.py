"""Dense tensors over a fixed odd-dimensional frame.

Everything downstream works with small dense float64 arrays (dimension
2n+1, with n <= 5 in practice), wrapped with just enough structure to
catch frame and rank mismatches early and to keep data immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMetric, DimensionMismatch, NotSymmetric

#: default residual tolerance for identity checks
DEFAULT_TOL = 1e-9
#: tighter tolerance used inside linear algebra
LINALG_TOL = 1e-12


@dataclass(frozen=True)
class Frame:
    """An ordered basis e_0 .. e_{dim-1} of an odd-dimensional tangent space."""

    dim: int
    labels: tuple = ()

    def __post_init__(self):
        if self.dim < 3 or self.dim % 2 == 0:
            raise DimensionMismatch(
                f"frame dimension must be odd and >= 3, got {self.dim}"
            )
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(f"e_{i}" for i in range(self.dim))
            )
        if len(self.labels) != self.dim:
            raise DimensionMismatch(
                f"{len(self.labels)} labels for a {self.dim}-dimensional frame"
            )

    @property
    def n(self) -> int:
        return (self.dim - 1) // 2


@dataclass(frozen=True)
class Tensor:
    """A rank-r array of components over ``frame``.

    Components are stored fully covariant or fully contravariant at the
    caller's discretion; the wrapper only tracks the frame and the shape.
    Rank-0 tensors behave as plain scalars via ``float()``.
    """

    frame: Frame
    data: np.ndarray

    def __post_init__(self):
        arr = np.array(self.data, dtype=float, copy=True)
        if any(d != self.frame.dim for d in arr.shape):
            raise DimensionMismatch(
                f"tensor shape {arr.shape} does not match frame dimension {self.frame.dim}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @property
    def rank(self) -> int:
        return self.data.ndim

    def __getitem__(self, idx):
        return self.data[idx]

    def __float__(self):
        if self.rank != 0:
            raise DimensionMismatch(f"rank-{self.rank} tensor is not a scalar")
        return float(self.data)

    def _binary(self, other, op):
        if not isinstance(other, Tensor):
            return NotImplemented
        if other.frame != self.frame:
            raise DimensionMismatch("operands live on different frames")
        if other.data.shape != self.data.shape:
            raise DimensionMismatch(
                f"rank mismatch: {self.data.shape} vs {other.data.shape}"
            )
        return Tensor(self.frame, op(self.data, other.data))

    def __add__(self, other):
        return self._binary(other, np.add)

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __mul__(self, scalar):
        return Tensor(self.frame, self.data * float(scalar))

    __rmul__ = __mul__

    def __neg__(self):
        return Tensor(self.frame, -self.data)

    @classmethod
    def zeros(cls, frame: Frame, rank: int) -> "Tensor":
        return cls(frame, np.zeros((frame.dim,) * rank))


@dataclass(frozen=True)
class MetricPair:
    """A symmetric nondegenerate metric bundled with its inverse."""

    g: Tensor
    g_inv: Tensor

    @property
    def frame(self) -> Frame:
        return self.g.frame

    @property
    def matrix(self) -> np.ndarray:
        return self.g.data

    @property
    def inverse(self) -> np.ndarray:
        return self.g_inv.data


def invert_metric(g: Tensor) -> MetricPair:
    """Invert a symmetric rank-2 tensor and return it with its inverse.

    Uses LU factorization with partial pivoting. The inverse is
    symmetrized by averaging and the product g.g_inv is required to match
    the identity within LINALG_TOL.
    """
    if g.rank != 2:
        raise DimensionMismatch(f"metric must have rank 2, got rank {g.rank}")
    mat = g.data
    asym = float(np.max(np.abs(mat - mat.T)))
    if not asym < LINALG_TOL:
        raise NotSymmetric(f"metric asymmetry {asym:.3e} exceeds {LINALG_TOL}")
    dim = g.frame.dim
    try:
        inv = np.linalg.solve(mat, np.eye(dim))
    except np.linalg.LinAlgError as exc:
        raise DegenerateMetric(f"metric is singular: {exc}") from None
    inv = 0.5 * (inv + inv.T)
    resid = float(np.max(np.abs(mat @ inv - np.eye(dim))))
    if not resid < LINALG_TOL:
        raise DegenerateMetric(
            f"metric too ill-conditioned to invert: identity residual {resid:.3e}"
        )
    return MetricPair(Tensor(g.frame, mat), Tensor(g.frame, inv))


def trace_g(tensor: Tensor, metric: MetricPair) -> float:
    """Metric trace g^{ij} T_{ij} of a rank-2 tensor."""
    _require_rank2_on_frame(tensor, metric)
    return float(np.einsum("ij,ij->", metric.inverse, tensor.data))


def phi_trace(tensor: Tensor, metric: MetricPair, phi: Tensor) -> float:
    """Twisted trace g^{ij} T(e_i, phi e_j) of a rank-2 tensor."""
    _require_rank2_on_frame(tensor, metric)
    if phi.rank != 2 or phi.frame != tensor.frame:
        raise DimensionMismatch("endomorphism must be rank 2 on the same frame")
    return float(np.einsum("ij,ik,kj->", metric.inverse, tensor.data, phi.data))


def max_abs(tensor: Tensor) -> float:
    """Largest absolute component; the residual norm used everywhere."""
    if tensor.data.size == 0:
        return 0.0
    return float(np.max(np.abs(tensor.data)))


def _require_rank2_on_frame(tensor: Tensor, metric: MetricPair) -> None:
    if tensor.rank != 2:
        raise DimensionMismatch(f"expected a rank-2 tensor, got rank {tensor.rank}")
    if tensor.frame != metric.frame:
        raise DimensionMismatch("tensor and metric live on different frames")
