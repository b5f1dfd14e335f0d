"""Rotations, affine maps and congruence transforms on the phase plane."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from wignerflow import AffineMap, apply_affine, conjugate, rotation_matrix

ATOL = 1e-12

angles = st.floats(min_value=-4 * np.pi, max_value=4 * np.pi)


def test_rotation_identity():
    assert_allclose(rotation_matrix(0.0), np.eye(2), atol=ATOL)


def test_rotation_quarter_turn():
    assert_allclose(rotation_matrix(np.pi / 2) @ [1.0, 0.0], [0.0, 1.0], atol=ATOL)


def test_rotation_group_law():
    lhs = rotation_matrix(0.3) @ rotation_matrix(0.7)
    assert_allclose(lhs, rotation_matrix(1.0), atol=ATOL)


@given(angles)
def test_rotation_orthogonal_unit_det(theta):
    r = rotation_matrix(theta)
    assert_allclose(r @ r.T, np.eye(2), atol=ATOL)
    assert abs(np.linalg.det(r) - 1.0) < ATOL


@given(angles)
def test_rotation_inverse_is_transpose(theta):
    assert_allclose(rotation_matrix(-theta), rotation_matrix(theta).T, atol=ATOL)


def test_apply_affine_identity():
    assert_allclose(apply_affine(np.eye(2), np.zeros(2), [2.0, 3.0]), [2.0, 3.0], atol=ATOL)


def test_apply_affine_half_turn():
    assert_allclose(apply_affine(rotation_matrix(np.pi), np.zeros(2), [1.0, 0.0]),
                    [-1.0, 0.0], atol=ATOL)


def test_apply_affine_clockwise_quarter():
    # R(-pi/2) (4, 0) = (4 cos(pi/2), -4 sin(pi/2)) = (0, -4)
    assert_allclose(apply_affine(rotation_matrix(-np.pi / 2), np.zeros(2), [4.0, 0.0]),
                    [0.0, -4.0], atol=ATOL)


def test_apply_affine_batched():
    pts = np.array([[1.0, 0.0], [0.0, 1.0], [2.0, -3.0]])
    out = apply_affine(rotation_matrix(np.pi / 2), [1.0, 1.0], pts)
    assert_allclose(out, [[1.0, 2.0], [0.0, 1.0], [4.0, 3.0]], atol=ATOL)


def test_conjugate_by_identity():
    a = np.array([[2.0, 0.3], [0.3, 1.0]])
    assert_allclose(conjugate(np.eye(2), a), a, atol=ATOL)


def test_conjugate_quarter_turn_swaps_diagonal():
    # R(-pi/2) diag(1, 4) R(-pi/2)^T: the quadratic form axes swap
    out = conjugate(rotation_matrix(-np.pi / 2), np.diag([1.0, 4.0]))
    assert_allclose(out, np.diag([4.0, 1.0]), atol=ATOL)


def test_conjugate_rotation_preserves_det():
    a = np.array([[2.0, 0.3], [0.3, 1.0]])
    out = conjugate(rotation_matrix(0.7), a)
    assert abs(np.linalg.det(out) - np.linalg.det(a)) < ATOL


@given(angles, st.floats(0.1, 3.0), st.floats(0.1, 3.0), st.floats(-0.9, 0.9))
def test_conjugate_rotation_preserves_spd(theta, d1, d2, corr):
    # symmetric positive-definite input with controlled correlation
    off = corr * np.sqrt(d1 * d2)
    a = np.array([[d1, off], [off, d2]])
    out = conjugate(rotation_matrix(theta), a)
    assert_allclose(out, out.T, atol=ATOL)
    assert np.linalg.eigvalsh(out).min() > 0
    assert abs(np.linalg.det(out) - np.linalg.det(a)) < 1e-10


def test_affine_map_composition():
    inner = AffineMap(rotation_matrix(0.4), np.array([1.0, 0.0]))
    outer = AffineMap(rotation_matrix(-0.4), np.array([0.0, 2.0]))
    combined = inner.then(outer)
    r = np.array([0.3, -1.2])
    assert_allclose(combined(r), outer(inner(r)), atol=ATOL)
