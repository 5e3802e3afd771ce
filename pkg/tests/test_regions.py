"""Region membership, inclusion radii, boundary geometry, winding tests."""

import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starlike_radii.errors import NoBoundaryOnRay, OutOfWindow, TooCloseToBoundary
from starlike_radii.regions import (
    SIN1,
    SQRT2,
    E,
    Region,
    RegionKind,
    all_regions,
    boundary_point,
    boundary_polyline,
    contains,
    contains_batch,
    inclusion_radius,
    min_center_distance,
    region,
    starlike,
    winding_membership,
    write_boundary_csv,
)

BOUNDED = [k for k in RegionKind if k is not RegionKind.STARLIKE]


# -- construction and deltas --------------------------------------------------


def test_delta_values_exact():
    assert starlike(0.25).delta == 0.75
    assert region("lemniscate").delta == SQRT2 - 1.0
    assert region("parabolic").delta == 0.5
    assert region("exponential").delta == 1.0 - 1.0 / E
    assert region("cardioid").delta == 2.0 / 3.0
    assert region("sine").delta == SIN1
    assert region("lune").delta == 2.0 - SQRT2
    assert region("rational").delta == 3.0 - 2.0 * SQRT2
    assert region("nephroid").delta == 2.0 / 3.0
    assert region("sigmoid").delta == (E - 1.0) / (E + 1.0)


def test_membership_method_assignment():
    for kind in RegionKind:
        reg = starlike(0.0) if kind is RegionKind.STARLIKE else region(kind)
        expected = "winding-number" if kind in (RegionKind.SINE, RegionKind.RATIONAL) else "closed-form"
        assert reg.membership_method == expected


def test_starlike_requires_alpha():
    with pytest.raises(ValueError):
        Region(RegionKind.STARLIKE)
    with pytest.raises(ValueError):
        starlike(1.0)
    with pytest.raises(ValueError):
        Region(RegionKind.LUNE, 0.3)


# -- contains -----------------------------------------------------------------


def test_contains_center_for_all_regions():
    for reg in all_regions(alpha=0.3):
        assert contains(reg, 1.0), reg
        assert reg.delta > 0.0


def test_contains_examples():
    assert contains(region("lemniscate"), 1.0)
    assert not contains(region("parabolic"), 0.0)
    assert contains(region("sigmoid"), 1.0)
    assert not contains(region("cardioid"), 1.0 / 3.0)  # cusp is on the boundary
    assert not contains(region("sine"), 1.0 + SIN1)  # image of z = 1 is a boundary point


def test_contains_rejects_non_finite():
    with pytest.raises(ValueError):
        contains(region("lune"), complex(float("nan"), 0.0))
    with pytest.raises(ValueError):
        contains(region("sine"), complex(float("inf"), 0.0))


def test_lemniscate_and_lune_exclude_mirror_component():
    # the raw inequality also holds around -1; membership means the component at 1
    assert not contains(region("lemniscate"), -1.0)
    assert not contains(region("lune"), -1.0)
    assert abs((-0.3) ** 2 - 1.0) < 1.0 and not contains(region("lemniscate"), -0.3)


def test_exponential_branch_cut_is_outside():
    assert not contains(region("exponential"), -0.5)
    assert not contains(region("exponential"), 0.0)
    assert not contains(region("sigmoid"), 2.0)
    assert not contains(region("sigmoid"), -0.1)


def test_rational_boundary_value_outside():
    assert not contains(region("rational"), 2.0 * (SQRT2 - 1.0))


def test_sine_far_exterior():
    assert not contains(region("sine"), 3.0)


# -- inclusion_radius ----------------------------------------------------------


def test_inclusion_radius_at_center_one_equals_delta():
    for reg in all_regions(alpha=0.2):
        assert inclusion_radius(reg, 1.0) == pytest.approx(reg.delta, abs=1e-15)


def test_inclusion_radius_examples():
    assert inclusion_radius(region("parabolic"), 1.0) == pytest.approx(0.5)
    assert inclusion_radius(region("cardioid"), 1.0) == pytest.approx(2.0 / 3.0)
    assert inclusion_radius(region("lemniscate"), 1.0) == pytest.approx(SQRT2 - 1.0)
    assert inclusion_radius(region("sine"), 1.0) == pytest.approx(SIN1)
    assert inclusion_radius(starlike(0.25), 1.0) == pytest.approx(0.75)


def test_inclusion_radius_windows():
    with pytest.raises(OutOfWindow):
        inclusion_radius(region("lemniscate"), SQRT2)
    with pytest.raises(OutOfWindow):
        inclusion_radius(region("lemniscate"), 2.0 * SQRT2 / 3.0)
    with pytest.raises(OutOfWindow):
        inclusion_radius(region("parabolic"), 0.5)
    with pytest.raises(OutOfWindow):
        inclusion_radius(region("nephroid"), 5.0 / 3.0)
    with pytest.raises(OutOfWindow):
        inclusion_radius(starlike(0.5), 0.5)
    # closed endpoints are allowed
    assert inclusion_radius(region("exponential"), 1.0 / E) == pytest.approx(0.0, abs=1e-15)
    assert inclusion_radius(region("cardioid"), 5.0 / 3.0) == pytest.approx(4.0 / 3.0)
    assert inclusion_radius(region("rational"), SQRT2) == pytest.approx(SQRT2 - 2.0 * (SQRT2 - 1.0))


def test_inclusion_radius_window_edge_limits():
    # radius tends to 0 (or the stated cap) at the window edges
    assert inclusion_radius(region("lemniscate"), SQRT2 - 1e-10) == pytest.approx(0.0, abs=1e-9)
    assert inclusion_radius(region("parabolic"), 0.5 + 1e-10) == pytest.approx(0.0, abs=1e-9)
    assert inclusion_radius(region("sine"), 1.0 + SIN1) == pytest.approx(0.0, abs=1e-9)
    assert inclusion_radius(region("sigmoid"), 2.0 * E / (1.0 + E) - 1e-10) == pytest.approx(0.0, abs=1e-9)
    assert inclusion_radius(region("rational"), 2.0 * (SQRT2 - 1.0) + 1e-10) == pytest.approx(0.0, abs=1e-9)
    assert inclusion_radius(region("lune"), SQRT2 + 1.0) == pytest.approx(0.0, abs=1e-9)
    assert inclusion_radius(region("nephroid"), 1.0) == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert inclusion_radius(region("exponential"), (E + 1.0 / E) / 2.0) == pytest.approx(
        (E - 1.0 / E) / 2.0, abs=1e-12
    )


def _window_interior(kind):
    from starlike_radii.regions import _WINDOWS

    lo, hi, _, _ = _WINDOWS[kind]
    return [lo + (hi - lo) * (i + 0.5) / 50.0 for i in range(50)]


def test_disc_inclusion_soundness_sampled():
    # 50 centers per region, 720 points on the slightly shrunk inscribed circle
    thetas = 2.0 * math.pi * np.arange(720) / 720.0
    unit = np.exp(1j * thetas)
    for kind in BOUNDED:
        reg = region(kind)
        for center in _window_interior(kind):
            rad = inclusion_radius(reg, center) * (1.0 - 1e-6)
            pts = center + rad * unit
            ok = contains_batch(reg, pts)
            assert ok.all(), f"{kind} center={center}"
    reg = starlike(0.3)
    for center in (0.31, 0.5, 1.0, 2.0):
        rad = inclusion_radius(reg, center) * (1.0 - 1e-6)
        assert contains_batch(reg, center + rad * unit).all()


def test_disc_inclusion_tightness_at_center_one():
    # the minimal boundary distance from 1 equals delta, and stepping past the
    # touching point in the touching direction exits the region
    for kind in BOUNDED:
        reg = region(kind)
        theta, dist = min_center_distance(reg)
        assert dist == pytest.approx(reg.delta, abs=1e-9), kind
        outside = 1.0 + (reg.delta + 1e-5) * complex(math.cos(theta), math.sin(theta))
        assert not contains(reg, outside), kind
        inside = 1.0 + (reg.delta * (1.0 - 1e-5)) * complex(math.cos(theta), math.sin(theta))
        assert contains(reg, inside), kind


def test_tightness_touch_sides():
    # left-touching regions exit just past 1 - delta on the real axis
    for name in ("parabolic", "exponential", "cardioid", "lune", "rational"):
        reg = region(name)
        assert not contains(reg, 1.0 - reg.delta - 1e-6), name
        assert contains(reg, 1.0 - reg.delta + 1e-6), name
    assert not contains(starlike(0.25), 0.25 - 1e-6)
    # right-touching: lemniscate exits past 1 + delta = sqrt(2)
    for name in ("lemniscate", "nephroid", "sine", "sigmoid"):
        reg = region(name)
        assert not contains(reg, 1.0 + reg.delta + 1e-6), name
        assert contains(reg, 1.0 + reg.delta - 1e-6), name
    # lemniscate is not left-binding: well past 1 - delta is still inside
    assert contains(region("lemniscate"), 1.0 - region("lemniscate").delta - 1e-3)


# -- boundary_point ------------------------------------------------------------


def test_boundary_point_examples():
    assert boundary_point(region("sine"), 0.0) == pytest.approx(1.0 + SIN1)
    assert boundary_point(region("lemniscate"), 0.0).real == pytest.approx(SQRT2, abs=1e-11)
    lune_left = boundary_point(region("lune"), math.pi)
    assert lune_left.real == pytest.approx(SQRT2 - 1.0, abs=1e-11)
    assert abs(lune_left.imag) < 1e-11
    assert boundary_point(region("rational"), math.pi).real == pytest.approx(2.0 * (SQRT2 - 1.0), abs=1e-12)


def test_boundary_point_on_boundary_for_implicit_regions():
    for kind in BOUNDED:
        reg = region(kind)
        for theta in np.linspace(0.0, 2.0 * math.pi, 17, endpoint=False):
            w = boundary_point(reg, float(theta))
            # a point nudged inward is inside, nudged outward is outside
            direction = (w - 1.0) / abs(w - 1.0)
            assert contains(reg, w - 1e-6 * direction), (kind, theta)
            assert not contains(reg, w + 1e-6 * direction), (kind, theta)


def test_starlike_boundary_rays():
    reg = starlike(0.25)
    w = boundary_point(reg, math.pi)
    assert w == pytest.approx(0.25 + 0.0j)
    w = boundary_point(reg, 2.0)  # cos(2) < 0
    assert w.real == pytest.approx(0.25, abs=1e-12)
    with pytest.raises(NoBoundaryOnRay):
        boundary_point(reg, 0.3)


def test_lemniscate_boundary_satisfies_curve_equation():
    reg = region("lemniscate")
    for theta in np.linspace(0, 2 * math.pi, 64, endpoint=False):
        w = boundary_point(reg, float(theta))
        assert abs(abs(w * w - 1.0) - 1.0) < 1e-9


# -- winding membership ---------------------------------------------------------


def test_winding_membership_examples():
    sine_poly = boundary_polyline(region("sine"), 4096)
    assert winding_membership(sine_poly, 1.0)
    assert not winding_membership(sine_poly, 3.0)
    rational_poly = boundary_polyline(region("rational"), 4096)
    assert winding_membership(rational_poly, 1.0)
    with pytest.raises(TooCloseToBoundary):
        winding_membership(sine_poly, complex(sine_poly[0].real, sine_poly[0].imag))


def test_winding_agrees_with_closed_form_on_lemniscate():
    reg = region("lemniscate")
    poly = boundary_polyline(reg, 4096)
    rng = np.random.default_rng(20240817)
    pts = rng.uniform(-0.5, 2.5, 10_000) + 1j * rng.uniform(-1.5, 1.5, 10_000)
    from starlike_radii.regions import _segment_distances_batch

    far = _segment_distances_batch(poly, pts) > 1e-6
    pts = pts[far]
    closed = contains_batch(reg, pts)
    winding = np.abs(
        __import__("starlike_radii.regions", fromlist=["_winding_numbers"])._winding_numbers(poly, pts)
    ) == 1
    assert np.array_equal(closed, winding)


@settings(max_examples=300, deadline=None)
@given(x=st.floats(-3.0, 3.0), y=st.floats(-3.0, 3.0))
def test_closed_form_contains_is_total_and_boolean(x, y):
    for name in ("lemniscate", "parabolic", "exponential", "cardioid", "lune", "nephroid", "sigmoid"):
        assert contains(region(name), complex(x, y)) in (True, False)


def test_contains_batch_matches_scalar_contains():
    rng = np.random.default_rng(7)
    pts = rng.uniform(0.0, 2.0, 200) + 1j * rng.uniform(-1.0, 1.0, 200)
    for kind in BOUNDED:
        reg = region(kind)
        batch = contains_batch(reg, pts)
        scalar = np.array([contains(reg, complex(p)) for p in pts])
        assert np.array_equal(batch, scalar), kind


# -- CSV export -------------------------------------------------------------------


def test_boundary_csv_rows_and_precision():
    buf = io.StringIO()
    write_boundary_csv(region("sine"), 8, buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "theta,re,im"
    assert len(lines) == 9
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert float(first[1]) == pytest.approx(1.0 + SIN1, abs=1e-16)
    # 17 significant digits round-trip
    assert float(first[1]) == 1.0 + SIN1


def test_boundary_csv_lemniscate_definitional_check():
    buf = io.StringIO()
    write_boundary_csv(region("lemniscate"), 512, buf)
    rows = buf.getvalue().strip().splitlines()[1:]
    for row in rows:
        _, re_s, im_s = row.split(",")
        w = complex(float(re_s), float(im_s))
        assert abs(abs(w * w - 1.0) - 1.0) <= 1e-9
