"""Small dense complex linear algebra: Pauli and Heisenberg-Weyl operators, frames.

Everything here acts on spaces of dimension at most d**3 <= 125, so all
matrices are plain dense complex numpy arrays and every function is pure.
"""

from dataclasses import dataclass, field

import numpy as np

ATOL = 1e-12

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])
Z_HAT = np.array([0.0, 0.0, 1.0])


def kron(*matrices):
    """Kronecker product of any number of matrices, left to right."""
    out = np.asarray(matrices[0], dtype=complex)
    for m in matrices[1:]:
        m = np.asarray(m, dtype=complex)
        # broadcasting beats np.kron by a wide margin on these tiny matrices
        out = (out[:, None, :, None] * m[None, :, None, :]).reshape(
            out.shape[0] * m.shape[0], out.shape[1] * m.shape[1]
        )
    return out


def max_norm(m):
    """Entrywise max-abs norm, the equality norm used throughout."""
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def is_hermitian(m, atol=ATOL):
    return max_norm(m - m.conj().T) < atol


def is_unitary(m, atol=ATOL):
    return max_norm(m.conj().T @ m - np.eye(m.shape[0])) < atol


def unit_vector(n, atol=ATOL):
    """Validate and return a real unit 3-vector as a float array."""
    n = np.asarray(n, dtype=float)
    if n.shape != (3,):
        raise ValueError(f"direction must be a real 3-vector, got shape {n.shape}")
    norm = np.linalg.norm(n)
    if abs(norm - 1.0) >= atol:
        raise ValueError(f"direction must be unit length, got |n| = {norm!r}")
    return n


def spin_observable(n):
    """Spin observable along a unit direction: n . (sigma_x, sigma_y, sigma_z)."""
    n = unit_vector(n)
    return n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z


def triple_observable(na, nb, nc):
    """Tensor product of single-qubit spin observables on the three parties."""
    return kron(spin_observable(na), spin_observable(nb), spin_observable(nc))


@dataclass(frozen=True)
class OrthoFrame:
    """Ordered pair of unit measurement directions with derived scalars.

    ``c`` is the inner product n1.n2 and ``m`` the cross product n1 x n2.
    Orthogonality is *not* required at construction; use :meth:`orthogonal`
    or :attr:`is_orthogonal` where it matters.
    """

    n1: np.ndarray
    n2: np.ndarray
    c: float = field(init=False)
    m: np.ndarray = field(init=False)

    def __post_init__(self):
        n1 = unit_vector(self.n1)
        n2 = unit_vector(self.n2)
        object.__setattr__(self, "n1", n1)
        object.__setattr__(self, "n2", n2)
        object.__setattr__(self, "c", float(np.dot(n1, n2)))
        object.__setattr__(self, "m", np.cross(n1, n2))

    @property
    def is_orthogonal(self):
        return abs(self.c) < 1e-10

    @classmethod
    def orthogonal(cls, n1, n2, atol=1e-10):
        frame = cls(n1, n2)
        if abs(frame.c) >= atol:
            raise ValueError(f"directions are not orthogonal: n1.n2 = {frame.c!r}")
        return frame


def shift_matrix(d):
    """Cyclic shift X|j> = |j+1 mod d>."""
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def clock_matrix(d):
    """Clock Z|j> = omega^j |j> with omega = exp(2*pi*i/d)."""
    omega = np.exp(2j * np.pi / d)
    return np.diag(omega ** np.arange(d))


def weyl_operator(d, p, q):
    """Heisenberg-Weyl unitary on C^d with label (p, q).

    Phase convention tau**(-p*q) with tau = exp(i*pi/d), a primitive 2d-th
    root of unity; this agrees with the half-integer power of omega for odd
    d and stays well defined for even d.  Recovers sigma_x, sigma_z (and
    -sigma_y at (1,1)) when d = 2.
    """
    if d < 2:
        raise ValueError(f"qudit dimension must be >= 2, got {d}")
    p, q = p % d, q % d
    tau = np.exp(1j * np.pi / d)
    return tau ** (-p * q) * (
        np.linalg.matrix_power(shift_matrix(d), p)
        @ np.linalg.matrix_power(clock_matrix(d), q)
    )


def symplectic_form(d, g1, g2):
    """Symplectic pairing (p1*q2 - p2*q1) mod d of two Weyl labels."""
    return (g1[0] * g2[1] - g1[1] * g2[0]) % d
