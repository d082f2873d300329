"""Cyclic N-dimensional modules of the Weyl algebra and their quantum-group structure.

The module V(alpha, beta, mu) is C^N with x, y acting by a weighted shift and
a diagonal (which is which depends on the basis).  The quantum-group
generators K, E, F act through the homomorphism K = x, E = xi*y*(z - x),
F = y^{-1}(1 - (zx)^{-1}); all matrices here are dense complex arrays.

Two distinguished bases: WEIGHT (x diagonal) and FOURIER (y diagonal); the
R-matrix coefficients elsewhere in the library are taken in the FOURIER basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .characters import LogWeylChar, braid, principal_log_char
from .qdilog import RootConfig


class Basis(Enum):
    WEIGHT = "weight"
    FOURIER = "fourier"


@dataclass(frozen=True)
class GenMatrices:
    """Matrices of the Weyl generators and the quantum-group generators they induce."""

    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    K: np.ndarray
    E: np.ndarray
    F: np.ndarray
    Omega: np.ndarray


def _shift_down(cfg: RootConfig, scale: complex) -> np.ndarray:
    """Matrix sending basis vector n to scale * (basis vector n-1 mod N)."""
    N = cfg.N
    M = np.zeros((N, N), dtype=complex)
    for n in range(N):
        M[(n - 1) % N, n] = scale
    return M


def rep_matrices(cfg: RootConfig, lc: LogWeylChar, basis: Basis = Basis.FOURIER) -> GenMatrices:
    """Generator matrices of V(alpha, beta, mu) in the requested basis.

    WEIGHT:  x v_n = omega**(alpha-n) v_n,  y v_n = omega**beta v_{n-1}.
    FOURIER: x w_n = omega**alpha w_{n-1},  y w_n = omega**(beta+n) w_n.
    """
    N = cfg.N
    w = cfg.omega_pow
    if basis == Basis.WEIGHT:
        x = np.diag([w(lc.alpha - n) for n in range(N)]).astype(complex)
        y = _shift_down(cfg, w(lc.beta))
    else:
        x = _shift_down(cfg, w(lc.alpha))
        y = np.diag([w(lc.beta + n) for n in range(N)]).astype(complex)
    z = w(lc.mu) * np.eye(N, dtype=complex)
    xi = cfg.xi
    K = x
    E = xi * y @ (z - x)
    F = np.linalg.inv(y) @ (np.eye(N) - np.linalg.inv(z @ x))
    Omega = E @ F + K / xi + xi * np.linalg.inv(K)
    return GenMatrices(x=x, y=y, z=z, K=K, E=E, F=F, Omega=Omega)


def fourier_matrix(cfg: RootConfig) -> np.ndarray:
    """Change of basis G with (FOURIER vector n) = sum_k omega**(nk) (WEIGHT vector k)."""
    N = cfg.N
    return np.array([[cfg.omega_pow(n * k) for n in range(N)] for k in range(N)],
                    dtype=complex)


def fourier_basis_change(cfg: RootConfig, obj: np.ndarray, inverse: bool = False) -> np.ndarray:
    """Apply the WEIGHT <-> FOURIER transform to a vector or conjugate a matrix.

    For a matrix M expressed in the FOURIER basis, returns the WEIGHT-basis
    matrix G M G^{-1} (or the reverse with inverse=True).
    """
    G = fourier_matrix(cfg)
    Ginv = G.conj().T / cfg.N  # inverse: (1/N) omega**(-nk)
    if inverse:
        G, Ginv = Ginv, G
    obj = np.asarray(obj, dtype=complex)
    if obj.ndim == 1:
        return G @ obj
    return G @ obj @ Ginv


def central_scalars(cfg: RootConfig, lc: LogWeylChar) -> dict:
    """Scalars by which K^N, E^N, F^N act on V(lc): a, b(a-m), (ab)^{-1}(a-1/m)."""
    chi = lc.char()
    a, b, m = chi.as_tuple()
    return {"KN": a, "EN": b * (a - m), "FN": (a - 1.0 / m) / (a * b)}


def matrix_power(M: np.ndarray, n: int) -> np.ndarray:
    """Repeated multiplication (exactness over speed for small N)."""
    out = np.eye(M.shape[0], dtype=complex)
    for _ in range(n):
        out = out @ M
    return out


def _pi2(cfg: RootConfig, lc1: LogWeylChar, lc2: LogWeylChar, basis: Basis) -> dict:
    """Tensor-product matrices of the elementary generators on V(lc1) (x) V(lc2)."""
    N = cfg.N
    eye = np.eye(N, dtype=complex)
    g1 = rep_matrices(cfg, lc1, basis)
    g2 = rep_matrices(cfg, lc2, basis)
    return {
        "x1": np.kron(g1.x, eye), "x2": np.kron(eye, g2.x),
        "y1": np.kron(g1.y, eye), "y2": np.kron(eye, g2.y),
        "z1": np.kron(g1.z, eye), "z2": np.kron(eye, g2.z),
    }


def pi_tensor(cfg: RootConfig, lc1: LogWeylChar, lc2: LogWeylChar,
              basis: Basis = Basis.FOURIER) -> dict:
    """Generator matrices {x1, x2, y1inv, y2, z1, z2} of the unprimed tensor action."""
    m = _pi2(cfg, lc1, lc2, basis)
    return {"x1": m["x1"], "x2": m["x2"],
            "y1inv": np.linalg.inv(m["y1"]), "y2": m["y2"],
            "z1": m["z1"], "z2": m["z2"]}


def rw_images(cfg: RootConfig, lc1: LogWeylChar, lc2: LogWeylChar,
              lc1p: LogWeylChar = None, lc2p: LogWeylChar = None,
              inverse: bool = False, basis: Basis = Basis.FOURIER,
              cond_max: float = 1e12) -> dict:
    """Matrices of the braiding automorphism on generators, in the primed action.

    Each generator u of the doubled Weyl algebra is sent to an explicit
    rational expression; this returns that expression evaluated in the
    representation attached to the *output* log-characters (lc1p, lc2p).
    When the primed data are omitted they are rebuilt by braiding the
    characters and taking principal logarithms.
    """
    if lc1p is None or lc2p is None:
        out = braid(lc1.char(), lc2.char(), -1 if inverse else +1)
        if not out.admissible:
            raise ValueError("pair is not admissible; no braiding exists")
        lc1p = principal_log_char(out.chi1p, mu=lc1.mu)
        lc2p = principal_log_char(out.chi2p, mu=lc2.mu)
    m = _pi2(cfg, lc1p, lc2p, basis)
    x1, x2, y1, y2, z1, z2 = (m["x1"], m["x2"], m["y1"], m["y2"], m["z1"], m["z2"])
    N2 = x1.shape[0]
    eye = np.eye(N2, dtype=complex)
    x1i, x2i = np.linalg.inv(x1), np.linalg.inv(x2)
    y1i, y2i = np.linalg.inv(y1), np.linalg.inv(y2)
    z1i, z2i = np.linalg.inv(z1), np.linalg.inv(z2)
    if not inverse:
        g = eye - x1i @ y1 @ (z1 - x1) @ y2i @ (x2 - z2i)
        if np.linalg.cond(g) > cond_max:
            raise ValueError("braiding element g is numerically singular")
        gi = np.linalg.inv(g)
        return {
            "x1": x1 @ g,
            "x2": gi @ x2,
            "y1inv": y2i + (y1i - z2i @ y2i) @ x2i,
            "y2": z1 @ z2i @ y1 + (y2 - z2i @ y1) @ x1,
            "z1": z1, "z2": z2,
        }
    g = eye - y1 @ (z1 - x1) @ y2i @ (eye - z2i @ x2i)
    if np.linalg.cond(g) > cond_max:
        raise ValueError("inverse braiding element is numerically singular")
    gi = np.linalg.inv(g)
    return {
        "x1": x1 @ gi,
        "x2": g @ x2,
        "y1inv": z1 @ z2i @ y2i + (y1i - z1 @ y2i) @ x2,
        "y2": y1 + (y2 - z1 @ y1) @ x1i,
        "z1": z1, "z2": z2,
    }


def rw_images_negative(cfg: RootConfig, lc1: LogWeylChar, lc2: LogWeylChar,
                       lc1p: LogWeylChar = None, lc2p: LogWeylChar = None,
                       basis: Basis = Basis.FOURIER,
                       cond_max: float = 1e12) -> dict:
    """Generator images intertwined by the negative R-matrix.

    The negative crossing realizes the inverse braiding automorphism
    conjugated by the tensor swap; on generators it reads
        x1 -> g x1,   x2 -> x2 g^{-1},
        y1 -> y2 + (y1 - z2 y2) x2^{-1},
        y2^{-1} -> (z2/z1) y1^{-1} + (y2^{-1} - z2 y1^{-1}) x1,
    with g = 1 - y2 (z2 - x2) y1^{-1} (1 - (z1 x1)^{-1}), evaluated in the
    output representation.
    """
    if lc1p is None or lc2p is None:
        out = braid(lc1.char(), lc2.char(), -1)
        if not out.admissible:
            raise ValueError("pair is not admissible; no braiding exists")
        lc1p = principal_log_char(out.chi1p, mu=lc1.mu)
        lc2p = principal_log_char(out.chi2p, mu=lc2.mu)
    m = _pi2(cfg, lc1p, lc2p, basis)
    x1, x2, y1, y2, z1, z2 = (m["x1"], m["x2"], m["y1"], m["y2"], m["z1"], m["z2"])
    eye = np.eye(x1.shape[0], dtype=complex)
    x1i, x2i = np.linalg.inv(x1), np.linalg.inv(x2)
    y1i, y2i = np.linalg.inv(y1), np.linalg.inv(y2)
    z1i, z2i = np.linalg.inv(z1), np.linalg.inv(z2)
    g = eye - y2 @ (z2 - x2) @ y1i @ (eye - z1i @ x1i)
    if np.linalg.cond(g) > cond_max:
        raise ValueError("negative braiding element is numerically singular")
    gi = np.linalg.inv(g)
    y1_img = y2 + (y1 - z2 @ y2) @ x2i
    return {
        "x1": g @ x1,
        "x2": x2 @ gi,
        "y1inv": np.linalg.inv(y1_img),
        "y2": np.linalg.inv(z2 @ z1i @ y1i + (y2i - z2 @ y1i) @ x1),
        "z1": z1, "z2": z2,
    }


def commutant_dim(mats: GenMatrices, cutoff: float = 1e-8) -> int:
    """Dimension of {A : [A, K] = [A, E] = [A, F] = 0} via the stacked nullspace.

    Rank cutoff is relative to the largest singular value of the stack.
    """
    N = mats.K.shape[0]
    eye = np.eye(N, dtype=complex)
    rows = []
    for M in (mats.K, mats.E, mats.F):
        rows.append(np.kron(M, eye) - np.kron(eye, M.T))
    stack = np.vstack(rows)
    svals = np.linalg.svd(stack, compute_uv=False)
    smax = svals[0] if len(svals) else 0.0
    rank = int(np.sum(svals > cutoff * smax))
    return N * N - rank
