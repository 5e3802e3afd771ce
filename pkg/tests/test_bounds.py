"""Coefficient bounds: golden values, branch logic, identities, monotonicity."""

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starlike_radii.bounds import (
    JUSTIFIED_R_MAX,
    ClassParams,
    disc_bound,
    lemma2_condition,
    mccarty_lower,
    mccarty_upper,
    refined_h2_lower,
)
from starlike_radii.errors import DomainError, InfeasibleParams, WrongVariant


# -- ClassParams ------------------------------------------------------------


def test_derived_parameters_at_reference_point():
    p1 = ClassParams.h1(1.0, 1.0, 2.0)
    assert (p1.d, p1.s) == (2.0, 2.0)
    p2 = ClassParams.h2(1.0, 1.0, 2.0)
    assert (p2.m, p2.n) == (2.0, 1.0)
    p3 = ClassParams.h3(1.0, 2.0)
    assert p3.l == 2.0


@pytest.mark.parametrize(
    "build, message",
    [
        (lambda: ClassParams.h1(1.0, 0.0, 0.0), "d=|6b-4c|"),
        (lambda: ClassParams.h1(0.8, 1.0, 0.0), "s=|4c-q|"),
        (lambda: ClassParams.h2(0.0, 1.0, 0.0), "n=|3c-q|"),
        (lambda: ClassParams.h2(1.0, 0.2, 0.5), "m=|5b-3c|"),
        (lambda: ClassParams.h3(1.0, 0.0), "l=|4b-q|"),
        (lambda: ClassParams.h1(1.2, 0.9, 1.0), "b must lie in"),
        (lambda: ClassParams.h1(0.5, -0.1, 1.0), "c must lie in"),
        (lambda: ClassParams.h3(0.5, 2.5), "q must lie in"),
    ],
)
def test_inadmissible_params_name_the_invariant(build, message):
    with pytest.raises(InfeasibleParams, match=__import__("re").escape(message)):
        build()


def test_from_derived_constructors_are_sign_nonnegative():
    rng = random.Random(4)
    for _ in range(200):
        d, s, q = 2 * rng.random(), 2 * rng.random(), 2 * rng.random()
        p = ClassParams.h1_from_derived(d, s, q)
        assert p.d == pytest.approx(d, abs=1e-12) and p.s == pytest.approx(s, abs=1e-12)
        assert all(v >= -1e-12 for v in p.signed_derived())
        m, n = 2 * rng.random(), rng.random()
        p = ClassParams.h2_from_derived(m, n, q)
        assert p.m == pytest.approx(m, abs=1e-12) and p.n == pytest.approx(n, abs=1e-12)
        p = ClassParams.h3_from_derived(2 * rng.random(), q)
        assert p.signed_derived()[0] >= -1e-12


# -- mccarty_upper ----------------------------------------------------------


def test_mccarty_upper_b1_reduces_to_half_plane_bound():
    # numerator and denominator both (1+r)^2
    assert mccarty_upper(1.0, 0.0, 0.5) == pytest.approx(4.0 / 3.0, abs=1e-15)


def test_mccarty_upper_b0():
    # 2r/(1-r^2) * 2r/(r^2+1) at r = 1/2
    assert mccarty_upper(0.0, 0.0, 0.5) == pytest.approx(16.0 / 15.0, abs=1e-15)


def test_mccarty_upper_vanishes_at_origin():
    assert mccarty_upper(0.7, 0.3, 1e-12) == pytest.approx(0.0, abs=1e-10)


def test_mccarty_upper_domain():
    with pytest.raises(DomainError):
        mccarty_upper(0.5, 0.0, 1.0)
    with pytest.raises(DomainError):
        mccarty_upper(0.5, 0.0, -0.1)
    with pytest.raises(DomainError):
        mccarty_upper(0.5, 1.0, 0.5)


# -- mccarty_lower ----------------------------------------------------------


def _cb_db_oracle(b, alpha, r):
    den = (1 + 2 * b * r + r * r) * (1 - r * r)
    cb = ((1 + b * r) ** 2 - (2 * alpha - 1) * (b + r) ** 2 * r * r) / den
    db = 2 * (1 - alpha) * (b + r) * (1 + b * r) * r / den
    return cb, db


def test_mccarty_lower_alpha0_is_small_branch():
    for b in (0.0, 0.3, 1.0):
        out = mccarty_lower(b, 0.0, 0.4)
        assert out.branch == "small"
        assert out.r_alpha == 0.0


def test_mccarty_lower_symmetry_with_upper_at_b1():
    out = mccarty_lower(1.0, 0.0, 0.5)
    assert out.value == pytest.approx(-4.0 / 3.0, abs=1e-15)


def test_mccarty_lower_golden_b_half_alpha_quarter():
    # frozen from direct substitution of the closed forms at b=1/2, a=1/4, r=1/10
    out = mccarty_lower(0.5, 0.25, 0.1)
    assert out.c_b == pytest.approx(1.004914004914004914, abs=1e-15)
    assert out.d_b == pytest.approx(0.085995085995085995, abs=1e-15)
    assert out.r_b == pytest.approx(0.91891891891891892, abs=1e-15)
    assert out.r_alpha == pytest.approx(0.50377363844079693, abs=1e-15)
    assert out.branch == "small"
    assert out.value == pytest.approx(-0.093402225755166932, abs=1e-15)
    cb, db = _cb_db_oracle(0.5, 0.25, 0.1)
    assert out.c_b == pytest.approx(cb, abs=1e-15)
    assert out.d_b == pytest.approx(db, abs=1e-15)


def test_mccarty_lower_large_branch_reachable():
    # high alpha and large r push R_alpha above R_b
    alpha, r = 0.95, 0.7
    out = mccarty_lower(0.0, alpha, r)
    assert out.branch == "large"
    assert out.r_alpha > out.r_b
    c1 = (1 - (2 * alpha - 1) * r * r) / (1 - r * r)
    expected = (2 * math.sqrt(alpha * c1) - c1 - alpha) / (1 - alpha)
    assert out.value == pytest.approx(expected, rel=1e-13)


# -- lemma2_condition ---------------------------------------------------------


def test_lemma2_condition_goldens():
    # direct substitution into the closed form
    assert lemma2_condition(0.0, 0.1) == pytest.approx(0.4752455443564158, abs=1e-15)
    assert lemma2_condition(1.0, 0.3) == pytest.approx(0.042265426880811496, abs=1e-15)


def test_lemma2_condition_small_r_limit():
    assert lemma2_condition(0.5, 1e-9) == pytest.approx(0.5, abs=1e-6)


def test_lemma2_condition_equals_branch_gap_certificate():
    # closed form must match (C_b - D_b)^2 - C_1/2 built from the raw pieces
    rng = random.Random(11)
    for _ in range(100):
        b, r = rng.random(), rng.random() / 3.0
        if r <= 0.0 or r >= 1.0 / 3.0:
            continue
        cb, db = _cb_db_oracle(b, 0.5, r)
        c1 = 1.0 / (1.0 - r * r)
        assert lemma2_condition(b, r) == pytest.approx((cb - db) ** 2 - c1 / 2.0, rel=1e-11, abs=1e-13)


def test_lemma2_condition_positive_on_grid():
    bs = np.linspace(0.0, 1.0, 100)
    rs = (np.arange(100) + 0.5) / 100.0 * JUSTIFIED_R_MAX
    for b in bs:
        assert np.all(lemma2_condition(float(b), rs) > 0.0)


def test_lemma2_condition_domain():
    with pytest.raises(DomainError):
        lemma2_condition(0.5, 1.0 / 3.0)
    with pytest.raises(DomainError):
        lemma2_condition(0.5, 0.0)


# -- disc_bound ----------------------------------------------------------------


def test_disc_bound_h3_zero_params():
    # both terms reduce to 4r/(1+r^2): M = 8 r^2 / (1 - r^4)
    p = ClassParams.h3(0.0, 0.0)
    assert disc_bound(p, 0.5) == pytest.approx(32.0 / 15.0, abs=1e-15)


def test_disc_bound_small_r():
    p = ClassParams.h1(1.0, 1.0, 2.0)
    assert disc_bound(p, 1e-10) == pytest.approx(0.0, abs=1e-8)


def test_disc_bound_golden_h1_reference():
    # frozen by direct substitution at d = s = q = 2, r = 0.05
    p = ClassParams.h1(1.0, 1.0, 2.0)
    assert disc_bound(p, 0.05) == pytest.approx(0.3007518796992481, abs=1e-15)
    # at d=s=q=2 every term is 2, so M = 6r/(1-r^2)
    for r in (0.05, 0.2, 0.7):
        assert disc_bound(p, r) == pytest.approx(6 * r / (1 - r * r), rel=1e-14)


def test_disc_bound_matches_mccarty_terms():
    # h3 with q=0: M = upper(l/2, 0, r) + upper(0, 0, r)
    rng = random.Random(3)
    for _ in range(50):
        l = 2 * rng.random()
        p = ClassParams.h3_from_derived(l, 0.0)
        for r in (0.1, 0.35, 0.8):
            expected = mccarty_upper(l / 2.0, 0.0, r) + mccarty_upper(0.0, 0.0, r)
            assert disc_bound(p, r) == pytest.approx(expected, abs=1e-12)


def _random_params(rng):
    kind = rng.choice(["h1", "h2", "h3"])
    while True:
        try:
            if kind == "h3":
                return ClassParams.h3(rng.random(), 2 * rng.random())
            return ClassParams(kind, rng.random(), 2 * rng.random(), rng.random())
        except InfeasibleParams:
            continue


def test_disc_bound_strictly_increasing_in_r():
    rng = random.Random(91)
    grid = np.linspace(1e-4, 0.999, 100)
    for _ in range(1000):
        p = _random_params(rng)
        vals = disc_bound(p, grid)
        assert np.all(np.diff(vals) > 0.0)
        # finite-difference slope is positive as well
        h = 1e-6
        r0 = 0.3 + 0.4 * rng.random()
        assert disc_bound(p, r0 + h) - disc_bound(p, r0 - h) > 0.0


def test_disc_bound_nondecreasing_in_derived_params():
    grid = np.linspace(0.0, 2.0, 21)
    for r in (0.1, 0.4, 0.75):
        h1_vals = [disc_bound(ClassParams.h1_from_derived(d, 1.0, 1.0), r) for d in grid]
        assert all(b - a >= -1e-14 for a, b in zip(h1_vals, h1_vals[1:]))
        h1_vals = [disc_bound(ClassParams.h1_from_derived(1.0, s, 1.0), r) for s in grid]
        assert all(b - a >= -1e-14 for a, b in zip(h1_vals, h1_vals[1:]))
        h1_vals = [disc_bound(ClassParams.h1_from_derived(1.0, 1.0, q), r) for q in grid]
        assert all(b - a >= -1e-14 for a, b in zip(h1_vals, h1_vals[1:]))
        h2_vals = [disc_bound(ClassParams.h2_from_derived(m, 0.5, 1.0), r) for m in grid]
        assert all(b - a >= -1e-14 for a, b in zip(h2_vals, h2_vals[1:]))
        h2_vals = [disc_bound(ClassParams.h2_from_derived(1.0, n, 1.0), r) for n in np.linspace(0, 1, 21)]
        assert all(b - a >= -1e-14 for a, b in zip(h2_vals, h2_vals[1:]))
        h3_vals = [disc_bound(ClassParams.h3_from_derived(l, 1.0), r) for l in grid]
        assert all(b - a >= -1e-14 for a, b in zip(h3_vals, h3_vals[1:]))


@settings(max_examples=200, deadline=None)
@given(
    b=st.floats(0.0, 1.0),
    c=st.floats(0.0, 1.0),
    q=st.floats(0.0, 2.0),
    r=st.floats(1e-6, 0.99),
)
def test_disc_bound_positive_wherever_defined(b, c, q, r):
    try:
        p = ClassParams.h1(b, c, q)
    except InfeasibleParams:
        return
    assert disc_bound(p, r) > 0.0


def test_disc_bound_rejects_r_near_one():
    p = ClassParams.h3(0.5, 1.0)
    with pytest.raises(DomainError):
        disc_bound(p, 1.0 - 1e-12)


# -- refined_h2_lower -----------------------------------------------------------


def test_refined_lower_zero_params_closed_form():
    p = ClassParams.h2_from_derived(0.0, 0.0, 0.0)
    for r in (0.05, 0.2, 0.31):
        expected = 1 - 8 * r * r / (1 - r**4) - 2 * r * r / (1 + r * r)
        assert refined_h2_lower(p, r) == pytest.approx(expected, abs=1e-14)


def test_refined_lower_tends_to_one():
    p = ClassParams.h2(1.0, 1.0, 2.0)
    assert refined_h2_lower(p, 1e-9) == pytest.approx(1.0, abs=1e-7)


def test_refined_lower_golden_reference():
    # frozen by direct substitution at m=2, n=1, q=2, r=0.09
    p = ClassParams.h2(1.0, 1.0, 2.0)
    assert refined_h2_lower(p, 0.09) == pytest.approx(0.55449138017945357, abs=1e-15)


def test_refined_lower_beats_disc_complement():
    # the refined bound dominates 1 - disc_bound wherever both apply
    rng = random.Random(17)
    for _ in range(200):
        while True:
            try:
                p = ClassParams.h2(rng.random(), rng.random(), 2 * rng.random())
                break
            except InfeasibleParams:
                continue
        r = 0.01 + 0.3 * rng.random()
        assert refined_h2_lower(p, r) >= 1.0 - disc_bound(p, r) - 1e-12


def test_refined_lower_wrong_variant():
    with pytest.raises(WrongVariant):
        refined_h2_lower(ClassParams.h1(1.0, 1.0, 2.0), 0.1)
