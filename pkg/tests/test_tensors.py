"""Frame/Tensor plumbing and metric inversion."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from accrgeo import (
    DimensionMismatch,
    Frame,
    Tensor,
    invert_metric,
    max_abs,
    phi_trace,
    trace_g,
)
from accrgeo.errors import DegenerateMetric, NotSymmetric


def test_frame_requires_odd_dimension():
    Frame(3)
    Frame(5)
    with pytest.raises(DimensionMismatch):
        Frame(4)
    with pytest.raises(DimensionMismatch):
        Frame(1)


def test_frame_labels_autofill():
    f = Frame(5)
    assert f.labels == ("e_0", "e_1", "e_2", "e_3", "e_4")
    assert f.n == 2


def test_tensor_is_read_only():
    f = Frame(3)
    t = Tensor(f, np.zeros((3, 3)))
    with pytest.raises(ValueError):
        t.data[0, 0] = 1.0


def test_tensor_shape_checked():
    f = Frame(3)
    with pytest.raises(DimensionMismatch):
        Tensor(f, np.zeros((3, 4)))


def test_tensor_arithmetic_and_scalars():
    f = Frame(3)
    a = Tensor(f, np.eye(3))
    b = Tensor(f, 2 * np.eye(3))
    assert max_abs(a + a - b) == 0.0
    assert max_abs(2.0 * a - b) == 0.0
    assert max_abs(-a + a) == 0.0
    zero = Tensor.zeros(f, 2)
    assert max_abs(zero) == 0.0


def test_mixed_frames_rejected():
    a = Tensor(Frame(3), np.eye(3))
    b = Tensor(Frame(5), np.eye(5))
    with pytest.raises(DimensionMismatch):
        a + b  # noqa: B018


def test_invert_metric_rejects_asymmetric():
    f = Frame(3)
    m = np.eye(3)
    m[0, 1] = 0.5
    with pytest.raises(NotSymmetric):
        invert_metric(Tensor(f, m))


def test_invert_metric_rejects_singular():
    f = Frame(3)
    m = np.diag([1.0, 1.0, 0.0])
    with pytest.raises(DegenerateMetric):
        invert_metric(Tensor(f, m))


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.floats(min_value=0.2, max_value=5.0), min_size=5, max_size=5
    ),
    st.lists(st.integers(min_value=0, max_value=1), min_size=5, max_size=5),
)
def test_invert_metric_roundtrip(diag, signs):
    f = Frame(5)
    values = [d * (1 if s else -1) for d, s in zip(diag, signs)]
    pair = invert_metric(Tensor(f, np.diag(values)))
    assert np.max(np.abs(pair.matrix @ pair.inverse - np.eye(5))) < 1e-12


def test_traces_on_known_metric():
    f = Frame(5)
    g = invert_metric(Tensor(f, np.diag([1.0, 1.0, 1.0, -1.0, -1.0])))
    # trace of g against itself is the dimension
    assert trace_g(g.g, g) == pytest.approx(5.0)
    phi = np.zeros((5, 5))
    phi[3, 1] = phi[4, 2] = 1.0
    phi[1, 3] = phi[2, 4] = -1.0
    # phi-twisted trace of the metric vanishes: phi maps the two
    # eigenblocks of g into each other
    assert phi_trace(g.g, g, Tensor(f, phi)) == pytest.approx(0.0)
