import itertools
import numpy as np
import pytest
import levelfrac.core.interp.interp as interp
from levelfrac.core.exceptions.exceptions import NoInterface, DegenerateEdge
from tests import GOLDEN_CELL

rng = np.random.default_rng(20)


def test_corners_2d_array_layout():
    cell = interp.CellCorners2D(*GOLDEN_CELL)
    arr = cell.as_array()
    assert arr[1, 0] == 0.6
    assert arr[0, 1] == -0.3
    assert interp.CellCorners2D.from_array(arr) == cell
    assert (-cell).phi11 == 0.1


def test_corners_3d_round_trip():
    arr = rng.uniform(-1, 1, (2, 2, 2))
    cell = interp.CellCorners3D.from_array(arr)
    assert cell.phi100 == arr[1, 0, 0]
    assert cell.phi011 == arr[0, 1, 1]
    assert np.array_equal(cell.as_array(), arr)


def test_corner_array_rejects_bad_shape():
    with pytest.raises(ValueError):
        interp.corner_array(np.zeros((3, 2)))


def test_bilinear_coeffs_golden():
    b = interp.bilinear_coeffs(interp.CellCorners2D(*GOLDEN_CELL))
    assert (b.beta0, b.beta1, b.beta2) == pytest.approx((0.1, 0.5, -0.4))
    assert b.beta3 == pytest.approx(-0.3)


def test_trilinear_reproduces_corners():
    arr = rng.uniform(-1, 1, (2, 2, 2))
    coeffs = interp.trilinear_coeffs(arr)
    for corner in itertools.product((0, 1), repeat=3):
        assert interp.evaluate(coeffs, corner) == pytest.approx(arr[corner], abs=1e-15)


def test_select_origin_single_negative_corner():
    arr = np.ones((2, 2, 2))
    arr[1, 1, 0] = -1.0
    assert interp.select_origin(arr) == (1, 1, 0)


def test_select_origin_tie_goes_lexicographic():
    # strip: every corner has one opposite neighbour
    assert interp.select_origin(np.array([[0.5, -0.5], [0.5, -0.5]])) == (0, 0)


def test_select_origin_no_interface():
    with pytest.raises(NoInterface):
        interp.select_origin(np.ones((2, 2)))


def test_edge_lengths_golden():
    b = interp.bilinear_coeffs(interp.CellCorners2D(*GOLDEN_CELL))
    assert interp.edge_lengths_2d(b, (0, 0)) == pytest.approx((1.0, 0.25))


def test_edge_lengths_affine():
    # phi = 0.5 - y
    b = interp.bilinear_coeffs(np.array([[0.5, -0.5], [0.5, -0.5]]))
    assert interp.edge_lengths_2d(b, (0, 0)) == pytest.approx((1.0, 0.5))


def test_edge_length_from_far_corner():
    # distance is measured from the origin, so an origin at 1 sees 1 - root
    b = interp.bilinear_coeffs(np.array([[0.5, 0.5], [-0.25, -0.25]]))
    assert interp.edge_lengths_2d(b, (1, 0))[0] == pytest.approx(1.0 - 2.0 / 3.0)


def test_edge_lengths_clamped():
    b = interp.bilinear_coeffs(np.array([[1e-300, 1.0], [-1.0, 1.0]]))
    l_x, _ = interp.edge_lengths_2d(b, (0, 0))
    assert l_x == interp.LENGTH_EPS


def test_degenerate_edge():
    with pytest.raises(DegenerateEdge):
        interp._edge_length(0.0, 0.0, 0.0, 0.0, 0)


def test_build_frame_golden():
    frame, rc = interp.build_frame(interp.CellCorners2D(*GOLDEN_CELL))
    assert frame.origin == (0, 0)
    assert frame.axis_perm == (0, 1)
    assert (rc.a, rc.b, rc.c, rc.d) == pytest.approx((0.5, 0.1, -0.3, -0.4))
    assert rc.zeta(0.0) == pytest.approx(0.25)


def test_axes_by_length_ties():
    assert interp.axes_by_length((0.5, 0.5, 0.5)) == (0, 1, 2)
    assert interp.axes_by_length((0.2, 1.0, 0.7)) == (1, 2, 0)


@pytest.mark.parametrize("perm", list(itertools.permutations(range(3))))
def test_rational_coeffs_3d_lie_on_interface(perm):
    arr = rng.uniform(-1, 1, (2, 2, 2))
    rc = interp.rational_coeffs(arr, perm)
    coeffs = interp.trilinear_coeffs(arr)
    for xi, eta in rng.uniform(0, 1, (10, 2)):
        zeta = rc.zeta(xi, eta)
        point = [0.0, 0.0, 0.0]
        point[perm[0]], point[perm[1]], point[perm[2]] = xi, eta, zeta
        assert interp.evaluate(coeffs, point) == pytest.approx(0.0, abs=1e-9 * max(1.0, abs(zeta)))


def test_slice_matches_rational_3d():
    rc = interp.RationalCoeffs3D(*rng.uniform(-1, 1, 8))
    for xi, eta in rng.uniform(0, 1, (10, 2)):
        assert rc.slice(xi).zeta(eta) == pytest.approx(rc.zeta(xi, eta), rel=1e-12, abs=1e-12)


def test_nudge_zero_corners():
    arr = interp.nudge_zero_corners(np.array([[0.0, -2.0], [1.0, 0.5]]))
    assert arr[0, 0] == pytest.approx(2e-14)
    assert interp.has_sign_change(arr)
    assert interp.nudge_zero_corners(np.zeros((2, 2)))[0, 0] == interp.ZERO_NUDGE


def test_zero_counts_positive():
    assert interp.is_positive(0.0)
    assert not interp.has_sign_change(np.array([[0.0, 1.0], [2.0, 0.0]]))


def test_edge_lengths_3d():
    arr = np.ones((2, 2, 2))
    arr[0, 0, 0] = -1.0
    assert interp.edge_lengths_3d(interp.trilinear_coeffs(arr), (0, 0, 0)) == pytest.approx((0.5, 0.5, 0.5))
    arr = np.ones((2, 2, 2))
    arr[1, 1, 1] = -3.0
    assert interp.edge_lengths_3d(interp.trilinear_coeffs(arr), (1, 1, 1)) == pytest.approx((0.75, 0.75, 0.75))
