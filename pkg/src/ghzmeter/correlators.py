"""The four stabiliser-like observables of a frame and their expectations."""

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import (
    IDENTITY_2,
    PAULIS,
    OrthoFrame,
    kron,
    max_norm,
    spin_observable,
    triple_observable,
)
from .states import QuantumState, StateError

IMAG_ATOL = 1e-10


@dataclass(frozen=True)
class StabQuad:
    """O1..O4 as 8x8 Hermitian unitaries, together with the frame."""

    o1: np.ndarray
    o2: np.ndarray
    o3: np.ndarray
    o4: np.ndarray
    frame: OrthoFrame

    @property
    def operators(self):
        return (self.o1, self.o2, self.o3, self.o4)


class CorrelatorQuad(NamedTuple):
    e1: float
    e2: float
    e3: float
    e4: float


def build_quad(frame):
    """The four observables with n1 in one slot and n2 in the others (O4: all n1)."""
    s1 = spin_observable(frame.n1)
    s2 = spin_observable(frame.n2)
    return StabQuad(
        o1=kron(s1, s2, s2),
        o2=kron(s2, s1, s2),
        o3=kron(s2, s2, s1),
        o4=kron(s1, s1, s1),
        frame=frame,
    )


def expectations(quad, state):
    """Expectations (e1..e4) of the quad's observables under a qubit state."""
    if state.local_dim != 2:
        raise StateError(f"expected a three-qubit state, got local_dim {state.local_dim}")
    return CorrelatorQuad(*(state.real_expectation(o, IMAG_ATOL) for o in quad.operators))


def pauli_tensor(state):
    """Full 3x3x3 tensor of three-body Pauli correlations <s_i x s_j x s_k>.

    A direct 27-entry tabulation; evaluating correlators for many frames
    against a fixed state then reduces to cubic contractions of this tensor.
    """
    if state.local_dim != 2:
        raise StateError(f"expected a three-qubit state, got local_dim {state.local_dim}")
    t = np.empty((3, 3, 3))
    for i, j, k in itertools.product(range(3), repeat=3):
        t[i, j, k] = state.real_expectation(kron(PAULIS[i], PAULIS[j], PAULIS[k]))
    return t


def correlators_from_tensor(tensor, n1, n2):
    """(e1..e4) by contracting the Pauli tensor with the two directions."""
    e1 = np.einsum("ijk,i,j,k->", tensor, n1, n2, n2)
    e2 = np.einsum("ijk,i,j,k->", tensor, n2, n1, n2)
    e3 = np.einsum("ijk,i,j,k->", tensor, n2, n2, n1)
    e4 = np.einsum("ijk,i,j,k->", tensor, n1, n1, n1)
    return CorrelatorQuad(float(e1), float(e2), float(e3), float(e4))


@dataclass(frozen=True)
class IdentityReport:
    """Max-norm residuals of the frame's operator identities (report, no assert)."""

    commutator_residual: float
    triple_product_residual: float
    sandwich_residual: float
    stabiliser_residual: float

    @property
    def max_residual(self):
        return max(
            self.commutator_residual,
            self.triple_product_residual,
            self.sandwich_residual,
        )


def verify_identities(frame):
    """Residuals of the commutator, triple-product and sandwich identities.

    ``stabiliser_residual`` is ||O1 O2 O3 O4 + 1||_max, which vanishes only
    for orthogonal frames; it is reported unconditionally so callers can
    probe degenerate frames too.
    """
    c, m = frame.c, frame.m
    s1 = spin_observable(frame.n1)
    s2 = spin_observable(frame.n2)
    o1 = kron(s1, s2, s2)
    o2 = kron(s2, s1, s2)
    o3 = kron(s2, s2, s1)
    o4 = kron(s1, s1, s1)
    m_sigma = m[0] * PAULIS[0] + m[1] * PAULIS[1] + m[2] * PAULIS[2]

    o1o2 = o1 @ o2
    o1o2o3 = o1o2 @ o3
    comm = o1o2 - o2 @ o1
    comm_expected = 2j * c * kron(
        kron(m_sigma, IDENTITY_2) - kron(IDENTITY_2, m_sigma), IDENTITY_2
    )
    triple = o1o2o3 + o4 - 2.0 * c * kron(s1, s2, s1)
    sandwich = s2 @ s1 @ s2 - (2.0 * c * s2 - s1)
    stab = o1o2o3 @ o4 + np.eye(8)

    return IdentityReport(
        commutator_residual=max_norm(comm - comm_expected),
        triple_product_residual=max_norm(triple),
        sandwich_residual=max_norm(sandwich),
        stabiliser_residual=max_norm(stab),
    )
