"""Cyclic modules, quantum-group matrices, braiding images, commutants."""

import numpy as np
import pytest

from holorm.characters import LogWeylChar, braid, char_product, to_z0_char
from holorm.qdilog import RootConfig
from holorm.sampling import random_crossing, random_logchar
from holorm.weylrep import (Basis, GenMatrices, central_scalars, commutant_dim,
                            fourier_basis_change, fourier_matrix, matrix_power,
                            pi_tensor, rep_matrices, rw_images,
                            rw_images_negative)

from conftest import mrel


def test_weight_and_fourier_shapes(rng):
    cfg = RootConfig(4)
    lc = random_logchar(rng)
    gw = rep_matrices(cfg, lc, Basis.WEIGHT)
    assert mrel(gw.x, np.diag([cfg.omega_pow(lc.alpha - n) for n in range(4)])) < 1e-14
    gf = rep_matrices(cfg, lc, Basis.FOURIER)
    assert mrel(gf.y, np.diag([cfg.omega_pow(lc.beta + n) for n in range(4)])) < 1e-14
    cas = cfg.omega_pow(lc.mu + 0.5) + cfg.omega_pow(-(lc.mu + 0.5))
    assert mrel(gf.Omega, cas * np.eye(4)) < 1e-12
    assert mrel(gw.Omega, cas * np.eye(4)) < 1e-12


@pytest.mark.parametrize("N", [2, 3, 5, 7])
def test_algebra_relations(N, rng):
    cfg = RootConfig(N)
    xi = cfg.xi
    for _ in range(5):
        lc = random_logchar(rng)
        for basis in (Basis.WEIGHT, Basis.FOURIER):
            g = rep_matrices(cfg, lc, basis)
            assert mrel(g.x @ g.y, cfg.omega * g.y @ g.x) < 1e-10
            assert mrel(g.K @ g.E, xi ** 2 * g.E @ g.K) < 1e-10
            assert mrel(g.K @ g.F, g.F @ g.K / xi ** 2) < 1e-10
            assert mrel(g.E @ g.F - g.F @ g.E,
                        (xi - 1 / xi) * (g.K - np.linalg.inv(g.K))) < 1e-10


def test_fourier_basis_change(rng):
    cfg = RootConfig(5)
    G = fourier_matrix(cfg)
    assert mrel(G @ G.conj().T / 5, np.eye(5)) < 1e-13
    assert mrel(fourier_matrix(RootConfig(2)), np.array([[1, 1], [1, -1]])) < 1e-14
    lc = random_logchar(rng)
    gw = rep_matrices(cfg, lc, Basis.WEIGHT)
    gf = rep_matrices(cfg, lc, Basis.FOURIER)
    for Mw, Mf in ((gw.x, gf.x), (gw.y, gf.y), (gw.E, gf.E), (gw.F, gf.F)):
        assert mrel(fourier_basis_change(cfg, Mf), Mw) < 1e-12
        assert mrel(fourier_basis_change(cfg, Mw, inverse=True), Mf) < 1e-12


def test_central_scalars(rng):
    cfg = RootConfig(5)
    lc = random_logchar(rng)
    sc = central_scalars(cfg, lc)
    chi = lc.char()
    assert abs(sc["KN"] - chi.a) < 1e-13
    lc_am = LogWeylChar(0.21 + 0.05j, 0.4, 0.21 + 0.05j)  # a = m
    assert abs(central_scalars(cfg, lc_am)["EN"]) < 1e-13
    for basis in (Basis.WEIGHT, Basis.FOURIER):
        g = rep_matrices(cfg, lc, basis)
        for key, M in (("KN", g.K), ("EN", g.E), ("FN", g.F)):
            assert mrel(matrix_power(M, 5), sc[key] * np.eye(5)) < 1e-9


def test_tensor_grading(rng):
    cfg = RootConfig(5)
    N = 5
    eye = np.eye(N)
    for _ in range(5):
        lc1, lc2 = random_logchar(rng), random_logchar(rng)
        g1 = rep_matrices(cfg, lc1, Basis.FOURIER)
        g2 = rep_matrices(cfg, lc2, Basis.FOURIER)
        K12 = np.kron(g1.K, g2.K)
        E12 = np.kron(g1.E, g2.K) + np.kron(eye, g2.E)
        F12 = np.kron(g1.F, eye) + np.kron(np.linalg.inv(g1.K), g2.F)
        prod = char_product(to_z0_char(lc1.char()), to_z0_char(lc2.char()))
        eye2 = np.eye(N * N)
        assert mrel(matrix_power(K12, N), prod.chi_KN * eye2) < 1e-8
        assert mrel(matrix_power(E12, N), prod.chi_EN * eye2) < 1e-8
        assert mrel(matrix_power(F12, N), prod.chi_FN * eye2) < 1e-8


def test_rw_images_center_and_cancellation(rng):
    cfg = RootConfig(3)
    for _ in range(5):
        lc1, lc2 = random_logchar(rng), random_logchar(rng)
        if not braid(lc1.char(), lc2.char(), +1).admissible:
            continue
        imgs = rw_images(cfg, lc1, lc2)
        assert mrel(imgs["z1"], cfg.omega_pow(lc1.mu) * np.eye(9)) < 1e-12
        assert mrel(imgs["z2"], cfg.omega_pow(lc2.mu) * np.eye(9)) < 1e-12
        # g cancels between the images of x1 and x2
        out = braid(lc1.char(), lc2.char(), +1)
        from holorm.characters import principal_log_char
        lc1p = principal_log_char(out.chi1p, mu=lc1.mu)
        lc2p = principal_log_char(out.chi2p, mu=lc2.mu)
        prim = pi_tensor(cfg, lc1p, lc2p)
        assert mrel(imgs["x1"] @ imgs["x2"], prim["x1"] @ prim["x2"]) < 1e-10


def test_intertwining_via_rmatrix(rng):
    # full matrix check against the R-matrix for one random crossing per sign
    from holorm.rmatrix import rmat
    cfg = RootConfig(3)
    c = random_crossing(cfg, rng, +1)
    act = rmat(c).as_operator()
    piu = pi_tensor(cfg, c.lc1, c.lc2)
    imgs = rw_images(cfg, c.lc1, c.lc2, c.lc1p, c.lc2p)
    for key in ("x1", "x2", "y1inv", "y2", "z1", "z2"):
        assert mrel(act @ piu[key], imgs[key] @ act) < 1e-9
    c = random_crossing(cfg, rng, -1)
    act = rmat(c).as_operator()
    piu = pi_tensor(cfg, c.lc1, c.lc2)
    imgs = rw_images_negative(cfg, c.lc1, c.lc2, c.lc1p, c.lc2p)
    for key in ("x1", "x2", "y1inv", "y2", "z1", "z2"):
        assert mrel(act @ piu[key], imgs[key] @ act) < 1e-9


def test_commutant_dim(rng):
    cfg = RootConfig(5)
    # generic cyclic module: scalars only
    g = rep_matrices(cfg, random_logchar(rng), Basis.FOURIER)
    assert commutant_dim(g) == 1
    # block-diagonal doubling has a 2x2 matrix commutant
    fields = {f: np.kron(np.eye(2), getattr(g, f))
              for f in ("x", "y", "z", "K", "E", "F", "Omega")}
    assert commutant_dim(GenMatrices(**fields)) == 4
    # scalar-holonomy simple case (a = m = -1, 2 mu = -1 mod N)
    assert commutant_dim(rep_matrices(cfg, LogWeylChar(-0.5, 0.0, -0.5),
                                      Basis.FOURIER)) == 1
    # reducible-indecomposable case still has scalar endomorphisms only
    assert commutant_dim(rep_matrices(cfg, LogWeylChar(0.5, 0.37, 0.5),
                                      Basis.FOURIER)) == 1
    # parabolic case
    assert commutant_dim(rep_matrices(cfg, LogWeylChar(0.31, 0.11, 0.5),
                                      Basis.FOURIER)) == 1
