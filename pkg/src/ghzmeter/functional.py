"""The multiplicative GHZ functional, its closed forms, and the qudit version."""

import itertools
from dataclasses import dataclass

import numpy as np

from .correlators import build_quad, expectations
from .linalg import kron, max_norm, symplectic_form, weyl_operator
from .states import StateError


def eval_I(state, frame):
    """I(n1, n2) = e4 - e1*e2*e3 on a three-qubit state.

    The frame need not be orthogonal; orthogonality is a constraint of the
    entanglement indicator's supremum, not of the functional itself.
    """
    e = expectations(build_quad(frame), state)
    return e.e4 - e.e1 * e.e2 * e.e3


def mermin_M3(state, frame):
    """Linear Mermin combination e4 - e1 - e2 - e3 at the frame's axes."""
    e = expectations(build_quad(frame), state)
    return e.e4 - e.e1 - e.e2 - e.e3


def lhv_oracle():
    """Values of I attainable by deterministic local hidden-variable models.

    Enumerates all 64 assignments A(n1), A(n2), B(n1), B(n2), C(n1), C(n2)
    in {-1, +1} and evaluates I = A1*B1*C1 - (A1*B2*C2)(A2*B1*C2)(A2*B2*C1)
    for each; returns the set of attained values.
    """
    attained = set()
    for a1, a2, b1, b2, c1, c2 in itertools.product((-1, 1), repeat=6):
        value = a1 * b1 * c1 - (a1 * b2 * c2) * (a2 * b1 * c2) * (a2 * b2 * c1)
        attained.add(value)
    return attained


def lhv_identity_holds():
    """The product of the three mixed terms equals A1*B1*C1 for all 64 assignments."""
    for a1, a2, b1, b2, c1, c2 in itertools.product((-1, 1), repeat=6):
        if (a1 * b2 * c2) * (a2 * b1 * c2) * (a2 * b2 * c1) != a1 * b1 * c1:
            return False
    return True


def closed_form_from_mu(mu):
    """I at the canonical frame as a function of mu = lambda0*lambda4: 8*mu^3 + 2*mu."""
    return 2.0 * mu * (4.0 * mu**2 + 1.0)


def acin_closed_form(params):
    """Closed-form I(x, y) on the canonical family; depends only on lambda0*lambda4."""
    return closed_form_from_mu(params.mu)


def acin_correlators(params):
    """(xxx, xyy, yxy, yyx) correlators of the canonical state: (2mu, -2mu, -2mu, -2mu)."""
    mu = params.mu
    return (2.0 * mu, -2.0 * mu, -2.0 * mu, -2.0 * mu)


def schmidt_subfamily_I(beta):
    """I at the canonical frame on cos(b)|000> + sin(b)|111>: sin^3(2b) + sin(2b)."""
    s = np.sin(2.0 * beta)
    return s**3 + s


def tau3_relation(tau3):
    """I at the canonical frame as a function of the three-tangle: sqrt(t3)*(t3 + 1)."""
    if not 0.0 <= tau3 <= 1.0:
        raise ValueError(f"three-tangle must lie in [0, 1], got {tau3!r}")
    return np.sqrt(tau3) * (tau3 + 1.0)


def w_reduced_I(a3, b3, atol=1e-12):
    """I on the W state for an orthogonal frame with z-projections (a3, b3).

    Feasibility requires a3^2 + b3^2 <= 1 (the two orthonormal directions
    cannot both hug the z axis).
    """
    if a3**2 + b3**2 > 1.0 + atol:
        raise ValueError(
            f"no orthogonal frame has z-projections ({a3!r}, {b3!r}): "
            "a3^2 + b3^2 must be <= 1"
        )
    return a3 * (2.0 - 3.0 * a3**2) - a3**3 * (2.0 / 3.0 - 3.0 * b3**2) ** 3


@dataclass(frozen=True)
class QuditGenPair:
    """Two Weyl labels g1, g2 in Z_d^2 with their symplectic pairing."""

    d: int
    g1: tuple
    g2: tuple

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"qudit dimension must be >= 2, got {self.d}")
        for g in (self.g1, self.g2):
            if len(g) != 2 or any(not 0 <= x < self.d for x in g):
                raise ValueError(f"generator {g!r} is not a pair mod {self.d}")

    @property
    def symplectic(self):
        return symplectic_form(self.d, self.g1, self.g2)

    @property
    def omega(self):
        return np.exp(2j * np.pi / self.d)


def weyl_quad(pair):
    """The four three-qudit observables G1..G4 built from the generator pair."""
    w1 = weyl_operator(pair.d, *pair.g1)
    w2 = weyl_operator(pair.d, *pair.g2)
    return (
        kron(w1, w2, w2),
        kron(w2, w1, w2),
        kron(w2, w2, w1),
        kron(w1, w1, w1),
    )


def qudit_product_residual(pair):
    """Max-norm residual of G1 G2 G3 - omega^(2<g1,g2>) G4.

    The identity is only claimed when the repeated generator squares to the
    identity (2*g2 = 0 mod d), so the residual is reported, not asserted.
    """
    g1, g2, g3, g4 = weyl_quad(pair)
    phase = pair.omega ** (2 * pair.symplectic)
    return max_norm(g1 @ g2 @ g3 - phase * g4)


def eval_Id(state, pair):
    """Qudit functional <G4> - omega^(2<g1,g2>) <G1><G2><G3>; complex, |I_d| <= 2."""
    if state.local_dim != pair.d:
        raise StateError(
            f"state has local_dim {state.local_dim} but generators live in Z_{pair.d}"
        )
    g1, g2, g3, g4 = weyl_quad(pair)
    phase = pair.omega ** (2 * pair.symplectic)
    return state.expectation(g4) - phase * (
        state.expectation(g1) * state.expectation(g2) * state.expectation(g3)
    )


def scan_qudit_pairs(state, d=None):
    """Exhaustive scan of |I_d| over all non-commuting generator pairs.

    Returns (best_modulus, best_pair, results) where results maps each
    :class:`QuditGenPair` with nonzero symplectic pairing to its I_d value.
    """
    d = state.local_dim if d is None else d
    results = {}
    best_pair, best = None, -1.0
    for g1 in itertools.product(range(d), repeat=2):
        for g2 in itertools.product(range(d), repeat=2):
            if symplectic_form(d, g1, g2) == 0:
                continue
            pair = QuditGenPair(d, g1, g2)
            value = eval_Id(state, pair)
            results[pair] = value
            if abs(value) > best:
                best, best_pair = abs(value), pair
    return best, best_pair, results
