import numpy as np
import pytest

from ghzmeter import (
    OrthoFrame,
    build_quad,
    correlators_from_tensor,
    expectations,
    kron,
    make_ghz,
    make_w,
    maximally_mixed,
    pauli_tensor,
    verify_identities,
)
from ghzmeter.linalg import SIGMA_X, is_hermitian, max_norm
from ghzmeter.states import StateError, haar_random_pure

from conftest import random_direction, random_orthogonal_frame


def test_quad_xy_o4_is_xxx(frame_xy):
    quad = build_quad(frame_xy)
    assert np.allclose(quad.o4, kron(SIGMA_X, SIGMA_X, SIGMA_X))


def test_quad_xy_stabiliser_relation(frame_xy):
    quad = build_quad(frame_xy)
    prod = quad.o1 @ quad.o2 @ quad.o3 @ quad.o4
    assert max_norm(prod + np.eye(8)) < 1e-12


def test_quad_degenerate_frame():
    quad = build_quad(OrthoFrame([1, 0, 0], [1, 0, 0]))
    for o in quad.operators[1:]:
        assert max_norm(o - quad.o1) < 1e-12


def test_quad_operators_hermitian_unitary(rng):
    quad = build_quad(OrthoFrame(random_direction(rng), random_direction(rng)))
    for o in quad.operators:
        assert is_hermitian(o)
        assert max_norm(o @ o - np.eye(8)) < 1e-12


def test_expectations_ghz(frame_xy):
    e = expectations(build_quad(frame_xy), make_ghz(2))
    assert np.allclose(e, (-1, -1, -1, 1), atol=1e-12)


def test_expectations_w_vanish(frame_xy):
    assert np.allclose(expectations(build_quad(frame_xy), make_w()), 0, atol=1e-12)


def test_expectations_maximally_mixed(rng):
    quad = build_quad(random_orthogonal_frame(rng))
    assert np.allclose(expectations(quad, maximally_mixed(2)), 0, atol=1e-12)


def test_expectations_rejects_qutrits(frame_xy):
    with pytest.raises(StateError):
        expectations(build_quad(frame_xy), make_ghz(3))


def test_expectations_bounded(rng):
    for i in range(200):
        quad = build_quad(OrthoFrame(random_direction(rng), random_direction(rng)))
        st = haar_random_pure(2, rng)
        for e in expectations(quad, st):
            assert abs(e) <= 1 + 1e-12


def test_pauli_tensor_matches_expectations(rng):
    st = haar_random_pure(2, rng)
    tensor = pauli_tensor(st)
    for _ in range(20):
        frame = OrthoFrame(random_direction(rng), random_direction(rng))
        fast = correlators_from_tensor(tensor, frame.n1, frame.n2)
        slow = expectations(build_quad(frame), st)
        assert np.allclose(fast, slow, atol=1e-12)


def test_identities_random_frames(rng):
    for _ in range(100):
        report = verify_identities(
            OrthoFrame(random_direction(rng), random_direction(rng))
        )
        assert report.max_residual < 1e-12


def test_identities_orthogonal_frame(rng):
    # with c = 0 the triple product collapses to O1 O2 O3 = -O4
    for _ in range(20):
        report = verify_identities(random_orthogonal_frame(rng))
        assert report.triple_product_residual < 1e-12
        assert report.stabiliser_residual < 1e-12


def test_identities_parallel_frame():
    report = verify_identities(OrthoFrame([0, 1, 0], [0, 1, 0]))
    assert report.commutator_residual == 0.0


def test_orthogonal_frames_jointly_diagonalizable(rng):
    frame = random_orthogonal_frame(rng)
    quad = build_quad(frame)
    for a in quad.operators:
        for b in quad.operators:
            assert max_norm(a @ b - b @ a) < 1e-12
    # a generic combination of the commuting operators lifts the +/-1
    # degeneracies; its eigenbasis must diagonalize all four at once
    generic = quad.o1 + np.sqrt(2) * quad.o2 + np.sqrt(3) * quad.o3
    _, vecs = np.linalg.eigh(generic)
    for o in quad.operators:
        transformed = vecs.conj().T @ o @ vecs
        off_diag = transformed - np.diag(np.diag(transformed))
        assert max_norm(off_diag) < 1e-10


def test_nonorthogonal_frames_cannot_saturate(rng):
    # scan the 8 GHZ-basis states at tilted frames: |I| stays below 2
    from ghzmeter import eval_I, ghz_basis

    for _ in range(10):
        n1 = random_direction(rng)
        v = rng.standard_normal(3)
        v -= np.dot(v, n1) * n1
        v /= np.linalg.norm(v)
        c = rng.uniform(0.15, 0.8) * rng.choice([-1, 1])
        n2 = c * n1 + np.sqrt(1 - c**2) * v
        frame = OrthoFrame(n1, n2)
        assert abs(frame.c) > 0.1
        worst = max(abs(eval_I(st, frame)) for _, st in ghz_basis())
        assert worst < 2.0 - 1e-3
