"""Identity battery: every structural identity the library rests on.

Each check function returns {identity name: max deviation}; run_all wraps
them into a report with per-identity tolerances.  Deviations are relative
unless the name says otherwise.  All randomness flows through one seeded
generator, so reports are reproducible.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from . import sampling
from .braidgrpd import (BraidWord, InadmissibleColoringError, build_diagram,
                        check_move, crossing_data, edge_gluing_defects,
                        extend_log_coloring, jfunc_dets, jfunc_eval,
                        log_longitudes)
from .characters import (LogWeylChar, braid, casimir_relation, char_product,
                         psi, to_z0_char)
from .qdilog import (RootConfig, TWO_PI_I, cyc_dilog, d_const, fusion_f,
                     lambda_dilog, lambda_table, lifted_dilog, qpoch, s_norm)
from .rmatrix import (CrossingData, braiding_op, det_braiding, det_lu,
                      factorized_ops, kashaev_rmat, rmat, rmat_pinched,
                      transform_rules, weight_basis_closed_form,
                      weight_basis_rmat)
from .weylrep import (Basis, central_scalars, commutant_dim, matrix_power,
                      pi_tensor, rep_matrices, rw_images, rw_images_negative)


def _rel(a, b) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def _mrel(A, B) -> float:
    A, B = np.asarray(A), np.asarray(B)
    return float(np.abs(A - B).max() / max(1e-300, np.abs(A).max(), np.abs(B).max()))


class _Worst(dict):
    def note(self, key, val):
        self[key] = max(self.get(key, 0.0), float(val))


# ---------------------------------------------------------------- qdilog

def check_qdilog(cfg: RootConfig, rng: np.random.Generator, trials: int = 40) -> dict:
    N = cfg.N
    w = cfg.omega_pow
    out = _Worst()
    for _ in range(trials):
        f = sampling.random_flattening(cfg, rng)
        z0, z1 = f.zeta0, f.zeta1
        lam = lambda_table(cfg, f)
        # recurrence route vs reduced route, n in [-N, N]
        for n in range(-N, N + 1):
            route = lam[0] * w(-n * z1) * cyc_dilog(cfg, z0, n)
            out.note("lambda recurrence", _rel(route, lambda_dilog(cfg, f, n)))
            routeN = lam[0] * w(-(n + N) * z1) * cyc_dilog(cfg, z0, n + N)
            out.note("lambda periodicity", _rel(route, routeN))
        # shifts
        for k in (-2, -1, 1, 2):
            out.note("lambda shift (zeta0)",
                     _rel(lambda_dilog(cfg, f.shifted(k0=k), 1),
                          w(k * z1 / 2) * lambda_dilog(cfg, f, 1 + k)))
            out.note("lambda shift (zeta1)",
                     _rel(lambda_dilog(cfg, f.shifted(k1=k), 2),
                          w(-k * z0 / 2 - 2 * k) * lambda_dilog(cfg, f, 2)))
        # product over a period
        out.note("lambda product",
                 _rel(np.prod(lam),
                      w(-N * (N - 1) * z1 / 2) * cmath.exp(-lifted_dilog(f) / TWO_PI_I)))
        # inverse sum
        for (k, l) in ((0, 0), (1, 0), (2, 1), (0, 3 % N)):
            tot = sum(w(n) * lambda_dilog(cfg, f, n + k)
                      / lambda_dilog(cfg, f, n + l - 1) for n in range(N))
            expect = (N * w(-k) * w((N - 1) * (z0 + z1)) if (l - k) % N == 0 else 0.0)
            out.note("lambda inverse sum", abs(tot - expect) / max(1.0, abs(expect)))
        # Fourier pair and its composition
        S = s_norm(cfg, f)
        dual = f.dual()
        for n in range(N):
            lhs = sum(lambda_dilog(cfg, f, k) * w(n * k) for k in range(N))
            out.note("Fourier transform",
                     _rel(lhs, w((N - 1) * z0) * N / S / lambda_dilog(cfg, dual, n - 1)))
            lhs2 = sum(w(-n * k) / lambda_dilog(cfg, f, k) for k in range(N))
            out.note("Fourier inverse",
                     _rel(lhs2, S * w((N - 1) * z1) * w(n) * lambda_dilog(cfg, dual, n)))
        # composing the closed-form transform with the inverse DFT returns
        # the Lambda table (N * identity after normalization)
        G = [w((N - 1) * z0) * N / S / lambda_dilog(cfg, dual, n - 1)
             for n in range(N)]
        back = [sum(G[n] * w(-n * m) for n in range(N)) / N for m in range(N)]
        out.note("Fourier roundtrip",
                 max(_rel(back[m], lambda_dilog(cfg, f, m)) for m in range(N)))
        # S identities
        out.note("S symmetry", _rel(S, s_norm(cfg, dual)))
        for n in (-1, 1, 2):
            out.note("S shift (zeta0)", _rel(s_norm(cfg, f.shifted(k0=n)), S))
            out.note("S shift (zeta1)", _rel(s_norm(cfg, f.shifted(k1=n)), S))
        out.note("S Nth power",
                 _rel(S ** N, d_const(cfg, 0.0) ** N
                      * cmath.exp((lifted_dilog(f) + lifted_dilog(dual)) / TWO_PI_I)))
        # factorization of unity
        prodB = np.prod([1 - w(z0 + k) for k in range(N)])
        out.note("unity factorization", _rel(prodB, 1 - cmath.exp(TWO_PI_I * z0)))
        # q-series transformation
        nn = int(rng.integers(0, N))
        lhsq = sum(w(k * (z1 - nn)) / cyc_dilog(cfg, z0, k) for k in range(N))
        rhsq = w(nn) * w((N - 1) * (z0 + z1)) * sum(
            w(-k * z0) / cyc_dilog(cfg, -z1 + nn, k) for k in range(N))
        out.note("q-series transform", _rel(lhsq, rhsq))
        # fusion identities
        alpha = z0 + 1j * rng.uniform(0.1, 0.9)
        beta = z0 - 0.3 + 0.2j * rng.uniform(-1, 1)
        g = (1 - cmath.exp(TWO_PI_I * alpha)) / (1 - cmath.exp(TWO_PI_I * beta))
        gamma = cmath.log(g) / TWO_PI_I
        base = fusion_f(cfg, alpha, beta, gamma)
        for (k, l, m) in ((1, 0, 0), (0, 1, -1), (2, -1, 1)):
            lhsf = fusion_f(cfg, alpha + k, beta + l, gamma + m)
            rhsf = base * (cyc_dilog(cfg, alpha - beta - 1, k - l)
                           * cyc_dilog(cfg, beta, l) * cyc_dilog(cfg, -gamma, -m)) / (
                w(l * (gamma + m)) * w(m * (beta + 1)) * cyc_dilog(cfg, alpha, k)
                * cyc_dilog(cfg, alpha - beta - gamma - 1, k - l - m))
            out.note("fusion shift identity",
                     abs(lhsf - rhsf) / max(1.0, abs(base)))
        for (k, l, m) in ((1, 0, 0), (2, 1, -1), (0, 2, 1)):
            lhsf = fusion_f(cfg, alpha + k, alpha + l - 1, m)
            mb_m, mb_kl = (-m) % N, (k - l) % N
            rhsf = (N * (1 - w(alpha + l)) / (1 - cmath.exp(TWO_PI_I * alpha))
                    * w(mb_m * (alpha + l)) / cyc_dilog(cfg, alpha + l, mb_kl)
                    * qpoch(cfg.omega, cfg.omega, mb_kl + mb_m)
                    / (qpoch(cfg.omega, cfg.omega, mb_kl)
                       * qpoch(cfg.omega, cfg.omega, mb_m)))
            out.note("fusion integer form", abs(lhsf - rhsf) / max(1.0, abs(lhsf)))
        # fusion Nth power (beta plays -zeta1, gamma plays -zeta0)
        b, g2 = -z1, -z0
        lhsP = sum(w(k * g2) / cyc_dilog(cfg, b, k) for k in range(N)) ** N
        d0 = d_const(cfg, 0.0)
        rhsP = (d0 ** N * w(N * (N - 1) * g2)
                * (1 - cmath.exp(-TWO_PI_I * g2)) ** N
                * (1 - cmath.exp(TWO_PI_I * b)) ** N
                / (1 - w(-g2)) ** N / (1 - w(b)) ** N
                / d_const(cfg, -g2) ** N / d_const(cfg, b) ** N)
        out.note("fusion Nth power", _rel(lhsP, rhsP))
    return dict(out)


# ------------------------------------------------------------ characters

def check_characters(cfg: RootConfig, rng: np.random.Generator,
                     trials: int = 500) -> dict:
    out = _Worst()
    done_rel = 0
    for _ in range(trials):
        c1, c2 = sampling.random_char(rng), sampling.random_char(rng)
        o = braid(c1, c2, +1)
        if not o.admissible:
            continue
        back = braid(o.chi2p, o.chi1p, -1)
        if back.admissible:
            out.note("inverse pair", max(
                max(map(abs, np.subtract(back.chi2p.as_tuple(), c1.as_tuple()))),
                max(map(abs, np.subtract(back.chi1p.as_tuple(), c2.as_tuple())))))
        out.note("meridian preservation",
                 max(abs(o.chi1p.m - c1.m), abs(o.chi2p.m - c2.m)))
        p_in = char_product(to_z0_char(c1), to_z0_char(c2))
        p_out = char_product(to_z0_char(o.chi2p), to_z0_char(o.chi1p))
        out.note("product preservation", float(
            max(np.abs(p_in.lower - p_out.lower).max(),
                np.abs(p_in.upper - p_out.upper).max())))
        out.note("a balance", abs(c1.a * c2.a - o.chi1p.a * o.chi2p.a))
        out.note("det psi", abs(np.linalg.det(psi(c1)) - 1.0))
        mu = cmath.log(c1.m) / TWO_PI_I
        out.note("Casimir relation", casimir_relation(c1, mu))
    for _ in range(trials * 4):
        triple = [sampling.random_char(rng) for _ in range(3)]

        def bx(t):
            o = braid(t[0], t[1], +1)
            return (o.chi2p, o.chi1p, t[2]) if o.admissible else None

        def xb(t):
            o = braid(t[1], t[2], +1)
            return (t[0], o.chi2p, o.chi1p) if o.admissible else None

        lhs = rhs = tuple(triple)
        for step in (bx, xb, bx):
            lhs = step(lhs) if lhs is not None else None
        for step in (xb, bx, xb):
            rhs = step(rhs) if rhs is not None else None
        if lhs is None or rhs is None:
            continue
        done_rel += 1
        out.note("braid relation", max(
            abs(x - y) for u, v in zip(lhs, rhs)
            for x, y in zip(u.as_tuple(), v.as_tuple())))
    if done_rel == 0:
        out.note("braid relation", float("nan"))
    return dict(out)


# --------------------------------------------------------------- weylrep

def check_weylrep(cfg: RootConfig, rng: np.random.Generator,
                  trials: int = 10) -> dict:
    N = cfg.N
    xi = cfg.xi
    out = _Worst()
    eyeN = np.eye(N)
    for _ in range(trials):
        lc = sampling.random_logchar(rng)
        for basis in (Basis.WEIGHT, Basis.FOURIER):
            g = rep_matrices(cfg, lc, basis)
            out.note("Weyl relation", _mrel(g.x @ g.y, cfg.omega * g.y @ g.x))
            out.note("KE = xi^2 EK", _mrel(g.K @ g.E, xi ** 2 * g.E @ g.K))
            out.note("KF = xi^-2 FK", _mrel(g.K @ g.F, g.F @ g.K / xi ** 2))
            out.note("[E,F] relation",
                     _mrel(g.E @ g.F - g.F @ g.E,
                           (xi - 1 / xi) * (g.K - np.linalg.inv(g.K))))
            cas = cfg.omega_pow(lc.mu + 0.5) + cfg.omega_pow(-(lc.mu + 0.5))
            out.note("Casimir scalar", _mrel(g.Omega, cas * eyeN))
            sc = central_scalars(cfg, lc)
            for key, M in (("KN", g.K), ("EN", g.E), ("FN", g.F)):
                out.note("central scalars",
                         _mrel(matrix_power(M, N), sc[key] * eyeN))
        # tensor grading
        lc2 = sampling.random_logchar(rng)
        g1 = rep_matrices(cfg, lc, Basis.FOURIER)
        g2 = rep_matrices(cfg, lc2, Basis.FOURIER)
        K12 = np.kron(g1.K, g2.K)
        E12 = np.kron(g1.E, g2.K) + np.kron(eyeN, g2.E)
        F12 = np.kron(g1.F, eyeN) + np.kron(np.linalg.inv(g1.K), g2.F)
        prod = char_product(to_z0_char(lc.char()), to_z0_char(lc2.char()))
        eye2 = np.eye(N * N)
        out.note("tensor grading", max(
            _mrel(matrix_power(K12, N), prod.chi_KN * eye2),
            _mrel(matrix_power(E12, N), prod.chi_EN * eye2),
            _mrel(matrix_power(F12, N), prod.chi_FN * eye2)))
    # commutant probes across the scalar/parabolic/reducible cases
    for _ in range(max(4, trials // 2)):
        lc = sampling.random_logchar(rng)
        out.note("commutant generic",
                 abs(commutant_dim(rep_matrices(cfg, lc, Basis.FOURIER)) - 1))
    out.note("commutant scalar case",
             abs(commutant_dim(rep_matrices(cfg, LogWeylChar(-0.5, 0.0, -0.5),
                                            Basis.FOURIER)) - 1))
    out.note("commutant parabolic case",
             abs(commutant_dim(rep_matrices(cfg, LogWeylChar(0.31, 0.11, 0.5),
                                            Basis.FOURIER)) - 1))
    if N >= 3:
        out.note("commutant reducible case",
                 abs(commutant_dim(rep_matrices(cfg, LogWeylChar(0.5, 0.37, 0.5),
                                                Basis.FOURIER)) - 1))
    return dict(out)


# --------------------------------------------------------------- rmatrix

def check_rmatrix(cfg: RootConfig, rng: np.random.Generator,
                  trials: int = 8) -> dict:
    N = cfg.N
    w = cfg.omega_pow
    out = _Worst()
    for sign in (+1, -1):
        for _ in range(trials):
            c = sampling.random_crossing(cfg, rng, sign)
            R = rmat(c)
            act = R.as_operator()
            piu = pi_tensor(cfg, c.lc1, c.lc2)
            if sign == +1:
                imgs = rw_images(cfg, c.lc1, c.lc2, c.lc1p, c.lc2p)
            else:
                imgs = rw_images_negative(cfg, c.lc1, c.lc2, c.lc1p, c.lc2p)
            for key in ("x1", "x2", "y1inv", "y2", "z1", "z2"):
                out.note("intertwining", _mrel(act @ piu[key], imgs[key] @ act))
            B = braiding_op(c)
            out.note("factorization",
                     _mrel(B.entries, factorized_ops(c).braiding_matrix()))
            kap = c.resolved_kappa()
            for p in (-3, 2):
                c2 = CrossingData(cfg, c.sign, c.lc1, c.lc2, c.lc1p, c.lc2p,
                                  c.gamma_n, c.gamma_w, c.gamma_s, c.gamma_e,
                                  kappa=kap + p)
                out.note("kappa independence", _mrel(rmat(c2).entries, R.entries))
            out.note("determinant closed vs LU",
                     _rel(det_braiding(c), det_lu(B)))
            ks = {r: int(rng.integers(-2, 3)) for r in "NWSE"}
            rel_g = transform_rules(c, gamma_shifts=ks)
            out.note("gamma shift rule",
                     _mrel(rmat(rel_g.crossing).entries, rel_g.predict(R)))
            ls = tuple(int(rng.integers(-2, 3)) for _ in range(4))
            rel_b = transform_rules(c, beta_shifts=ls)
            out.note("beta shift rule",
                     _mrel(rmat(rel_b.crossing).entries, rel_b.predict(R)))
    # recurrences at a positive crossing
    for _ in range(max(2, trials // 2)):
        c = sampling.random_crossing(cfg, rng, +1)
        R4 = rmat(c).entries.reshape(N, N, N, N)
        z0 = c.zeta0()
        scale = np.abs(R4).max()
        al1, al2 = c.lc1.alpha, c.lc2.alpha
        al1p, al2p = c.lc1p.alpha, c.lc2p.alpha
        mu1, mu2 = c.lc1.mu, c.lc2.mu
        for n1 in range(N):
            for n2 in range(N):
                for n1p in range(N):
                    for n2p in range(N):
                        lhs = R4[n1, n2, n1p, n2p]
                        out.note("recurrence i", abs(
                            lhs - R4[n1, n2, n1p, (n2p - 1) % N] * w(-al2p - mu2)
                            * (1 - w(z0["E"] + n2p - n1p))
                            / (1 - w(z0["N"] + n2p - n1))) / scale)
                        out.note("recurrence ii", abs(
                            lhs - R4[n1, n2, (n1p - 1) % N, n2p] * w(-al1p + mu1)
                            * (1 - w(z0["S"] + n2 - n1p + 1))
                            / (1 - w(z0["E"] + n2p - n1p + 1))) / scale)
                        out.note("recurrence iii", abs(
                            lhs - R4[n1, (n2 - 1) % N, n1p, n2p] * w(al2 + mu2 + 1)
                            * (1 - w(z0["W"] - 1 + n2 - n1))
                            / (1 - w(z0["S"] + n2 - n1p))) / scale)
                        out.note("recurrence iv", abs(
                            lhs - R4[(n1 - 1) % N, n2, n1p, n2p] * w(al1 - mu1 - 1)
                            * (1 - w(z0["N"] + n2p - n1 + 1))
                            / (1 - w(z0["W"] + n2 - n1))) / scale)
    # R2 contraction
    for _ in range(trials):
        c = sampling.random_crossing(cfg, rng, +1)
        b1 = braiding_op(c)
        cinv = CrossingData(cfg, -1, c.lc2p, c.lc1p, c.lc2, c.lc1,
                            c.gamma_n, c.gamma_e, c.gamma_s, c.gamma_w)
        b2 = braiding_op(cinv)
        out.note("R2 contraction",
                 float(np.abs(b2.as_operator() @ b1.as_operator()
                              - np.eye(N * N)).max()))
    # pinched limit (absolute deviation) and closed pinched forms
    for _ in range(max(2, trials // 3)):
        prm = _random_pinched_params(rng)
        for sign in (+1, -1):
            try:
                cpin = sampling.standard_pinched_crossing(cfg, *prm, sign=sign)
            except Exception:
                continue
            lim = _pinched_limit(cfg, cpin)
            out.note("pinched limit (abs)",
                     float(np.abs(lim - rmat_pinched(cpin).entries).max()))
    # pinched R2
    prm = _random_pinched_params(rng)
    cpin = sampling.standard_pinched_crossing(cfg, *prm)
    b1 = braiding_op(cpin)
    cneg = CrossingData(cfg, -1, cpin.lc2p, cpin.lc1p, cpin.lc2, cpin.lc1,
                        cpin.gamma_n, cpin.gamma_e, cpin.gamma_s, cpin.gamma_w)
    out.note("pinched R2 contraction",
             float(np.abs(braiding_op(cneg).as_operator() @ b1.as_operator()
                          - np.eye(N * N)).max()))
    # Kashaev: closed pinched form times omega^(1/2) is the canonical matrix
    ck = sampling.kashaev_crossing(cfg)
    out.note("Kashaev normalization",
             _mrel(rmat_pinched(ck).entries * w(0.5), kashaev_rmat(cfg).entries))
    K = kashaev_rmat(cfg)
    ent = K.entries.reshape(N, N, N, N).transpose(0, 1, 3, 2).reshape(N * N, N * N)
    B = ent.T
    B1, B2 = np.kron(B, np.eye(N)), np.kron(np.eye(N), B)
    out.note("Kashaev braid relation", _mrel(B1 @ B2 @ B1, B2 @ B1 @ B2))
    # weight basis: conjugation vs closed form vs specializations
    prm = _random_pinched_params(rng)
    cpin = sampling.standard_pinched_crossing(cfg, *prm)
    out.note("weight-basis closed form",
             _mrel(weight_basis_rmat(cpin).entries, weight_basis_closed_form(cpin)))
    from .rmatrix import colored_jones_closed_form, nilpotent_closed_form
    cj = sampling.kashaev_crossing(cfg)
    out.note("colored-Jones form",
             _mrel(weight_basis_rmat(cj).entries, colored_jones_closed_form(cfg)))
    al1 = prm[2]  # reuse mu1 as the nilpotent alpha1 = mu1
    cnil = sampling.standard_pinched_crossing(cfg, al1, prm[1], al1, prm[3],
                                              alpha2p=prm[1])
    out.note("nilpotent form",
             _mrel(weight_basis_rmat(cnil).entries, nilpotent_closed_form(cnil)))
    return dict(out)


def _random_pinched_params(rng) -> tuple:
    return (complex(rng.uniform(0.1, 0.4) + 0.05j * rng.uniform(-1, 1)),
            complex(rng.uniform(-0.4, -0.1) + 0.05j * rng.uniform(-1, 1)),
            complex(rng.uniform(0.05, 0.3) - 0.03j * rng.uniform(-1, 1)),
            complex(rng.uniform(0.3, 0.45) + 0.04j * rng.uniform(-1, 1)))


def _pinched_limit(cfg: RootConfig, cpin: CrossingData, t0: float = 1e-2,
                   steps: int = 7) -> np.ndarray:
    """Richardson-extrapolated limit of the generic formula toward a pinched point."""
    from .characters import LogWeylChar

    def perturbed(t):
        lc2t = LogWeylChar(cpin.lc2.alpha, cpin.lc2.beta + t, cpin.lc2.mu)
        outt = braid(cpin.lc1.char(), lc2t.char(), cpin.sign)
        if not outt.admissible or outt.pinched:
            raise RuntimeError("perturbation left the admissible range")
        b2pt = cmath.log(outt.chi2p.b) / TWO_PI_I
        b1pt = cmath.log(outt.chi1p.b) / TWO_PI_I
        b2pt += round((cpin.lc2p.beta - b2pt).real)
        b1pt += round((cpin.lc1p.beta - b1pt).real)
        al2pt = cmath.log(outt.chi2p.a) / TWO_PI_I
        al2pt += round((cpin.lc2p.alpha - al2pt).real)
        ge = cpin.gamma_n + al2pt
        lc1pt = LogWeylChar(cpin.gamma_s - ge, b1pt, cpin.lc1.mu)
        lc2pt = LogWeylChar(al2pt, b2pt, cpin.lc2.mu)
        ct = CrossingData(cfg, cpin.sign, cpin.lc1, lc2t, lc1pt, lc2pt,
                          cpin.gamma_n, cpin.gamma_w, cpin.gamma_s, ge)
        return rmat(ct).entries

    ts = [t0 / 2 ** k for k in range(steps)]
    tab = [perturbed(t) for t in ts]
    for j in range(1, len(tab)):
        for i in range(len(tab) - 1, j - 1, -1):
            tab[i] = tab[i] + (tab[i] - tab[i - 1]) * ts[i] / (ts[i - j] - ts[i])
    return tab[-1]


# -------------------------------------------------------------- braidgrpd

def check_braidgrpd(cfg: RootConfig, rng: np.random.Generator,
                    trials: int = 5) -> dict:
    N = cfg.N
    out = _Worst()
    # R2 move at the diagram level (bottom boundary must equal the top one)
    d2 = build_diagram(BraidWord(2, (1, -1)))
    for _ in range(trials):
        lc = sampling.random_coloring(cfg, d2, rng)
        top_b = [lc.beta[d2.top_segments[p]] for p in (1, 2)]
        top_g = [lc.gamma[r] for r in d2.top_regions]
        b_over = {d2.bottom_segments[p]: top_b[p - 1] for p in (1, 2)}
        g_over = {d2.bottom_regions[col]: top_g[col] for col in range(3)
                  if d2.bottom_regions[col] not in d2.top_regions}
        lc = extend_log_coloring(d2, top_b, top_g, lc.mu,
                                 beta_overrides=b_over, gamma_overrides=g_over)
        out.note("R2 move", float(np.abs(jfunc_eval(cfg, d2, lc)
                                         - np.eye(N * N)).max()))
    # composition functoriality: the word factors through its crossings
    d_ab = build_diagram(BraidWord(3, (1, 2)))
    for _ in range(trials):
        lc = sampling.random_coloring(cfg, d_ab, rng)
        full = jfunc_eval(cfg, d_ab, lc)
        c0, c1 = d_ab.crossings
        from .rmatrix import braiding_op as bop
        m0 = np.kron(bop(crossing_data(cfg, d_ab, lc, c0)).as_operator(), np.eye(N))
        m1 = np.kron(np.eye(N), bop(crossing_data(cfg, d_ab, lc, c1)).as_operator())
        out.note("composition functoriality", _mrel(full, m1 @ m0))
    # edge gluing (absolute defect)
    for word in ((1, -1), (1, 1), (1, 2, 1), (2, 1, -2, 1)):
        width = max(abs(x) for x in word) + 1
        dd = build_diagram(BraidWord(width, word))
        lc = sampling.random_coloring(cfg, dd, rng)
        defs = edge_gluing_defects(cfg, dd, lc)
        if defs:
            out.note("edge gluing (abs)", max(defs))
    # log-parameter dependence
    dd = build_diagram(BraidWord(3, (1, 2, 1)))
    for _ in range(trials):
        lc0 = sampling.random_coloring(cfg, dd, rng)
        b_over = {s: lc0.beta[s] + int(rng.integers(-2, 3))
                  for s in dd.internal_segments()}
        g_over = {r: lc0.gamma[r] + int(rng.integers(-2, 3))
                  for r in dd.internal_regions()}
        for p in range(1, 4):
            b_over[dd.bottom_segments[p]] = lc0.beta[dd.bottom_segments[p]]
        for col in range(4):
            r = dd.bottom_regions[col]
            if r not in dd.top_regions:
                g_over[r] = lc0.gamma[r]
        lc1 = extend_log_coloring(
            dd, [lc0.beta[dd.top_segments[p]] for p in (1, 2, 3)],
            [lc0.gamma[r] for r in dd.top_regions], lc0.mu,
            beta_overrides=b_over, gamma_overrides=g_over)
        lam0, lam1 = log_longitudes(dd, lc0), log_longitudes(dd, lc1)
        phase = cmath.exp(-TWO_PI_I / N * sum(
            (l1 - l0) * m for l1, l0, m in zip(lam1, lam0, lc0.mu)))
        out.note("log-decoration dependence",
                 _mrel(jfunc_eval(cfg, dd, lc1),
                       phase * jfunc_eval(cfg, dd, lc0)))
    # R3 move
    good = 0
    for _ in range(trials * 6):
        if good >= trials:
            break
        try:
            before, after = sampling.matched_pair_colorings(
                cfg, rng, (1, 2, 1), (2, 1, 2), 3)
        except RuntimeError:
            continue
        rep = check_move(cfg, before, after, "R3")
        if not rep.eligible and "mismatch" in rep.reason:
            continue
        good += 1
        out.note("R3 move", rep.deviation)
    # determinant cocycle over the double diagram
    loop = build_diagram(BraidWord(3, (1, 2, 1, -1, -2, -1)))
    done = 0
    for _ in range(trials * 4):
        if done >= max(2, trials // 2):
            break
        try:
            lc = sampling.random_coloring(cfg, loop, rng)
        except RuntimeError:
            continue
        # impose boundary match bottom = top, then zero the longitudes
        top_b = [lc.beta[loop.top_segments[p]] for p in (1, 2, 3)]
        top_g = [lc.gamma[r] for r in loop.top_regions]
        b_over = {loop.bottom_segments[p]: top_b[p - 1] for p in (1, 2, 3)}
        g_over = {loop.bottom_regions[col]: top_g[col]
                  for col in range(4) if loop.bottom_regions[col] not in loop.top_regions}
        try:
            lc = extend_log_coloring(loop, top_b, top_g, lc.mu,
                                     beta_overrides=b_over, gamma_overrides=g_over)
        except InadmissibleColoringError:
            continue
        lc = sampling._tune_longitudes(loop, lc, top_b, top_g, lc.mu, b_over,
                                       g_over, [0.0, 0.0, 0.0])
        if lc is None:
            continue
        if max(abs(x) for x in log_longitudes(loop, lc)) > 1e-9:
            continue
        prod = np.prod(jfunc_dets(cfg, loop, lc))
        done += 1
        out.note("determinant cocycle", min(abs(prod - 1.0), abs(prod + 1.0)))
    if done == 0:
        out.note("determinant cocycle", float("nan"))
    return dict(out)


# ----------------------------------------------------------------- runner

DEFAULT_TOLS = {
    "lambda recurrence": 1e-10,
    "lambda periodicity": 1e-10,
    "lambda shift (zeta0)": 1e-8,
    "lambda shift (zeta1)": 1e-8,
    "lambda product": 1e-8,
    "lambda inverse sum": 1e-8,
    "Fourier transform": 1e-8,
    "Fourier inverse": 1e-8,
    "Fourier roundtrip": 1e-8,
    "S symmetry": 1e-8,
    "S shift (zeta0)": 1e-8,
    "S shift (zeta1)": 1e-8,
    "S Nth power": 1e-8,
    "unity factorization": 1e-10,
    "q-series transform": 1e-8,
    "fusion shift identity": 1e-8,
    "fusion integer form": 1e-8,
    "fusion Nth power": 1e-8,
    "inverse pair": 1e-10,
    "braid relation": 1e-9,
    "meridian preservation": 0.0,
    "product preservation": 1e-10,
    "a balance": 1e-12,
    "det psi": 1e-12,
    "Casimir relation": 1e-10,
    "Weyl relation": 1e-10,
    "KE = xi^2 EK": 1e-10,
    "KF = xi^-2 FK": 1e-10,
    "[E,F] relation": 1e-10,
    "Casimir scalar": 1e-10,
    "central scalars": 1e-9,
    "tensor grading": 1e-8,
    "commutant generic": 0.0,
    "commutant scalar case": 0.0,
    "commutant parabolic case": 0.0,
    "commutant reducible case": 0.0,
    "intertwining": 1e-8,
    "factorization": 1e-9,
    "kappa independence": 1e-12,
    "determinant closed vs LU": 1e-7,
    "gamma shift rule": 1e-8,
    "beta shift rule": 1e-8,
    "recurrence i": 1e-8,
    "recurrence ii": 1e-8,
    "recurrence iii": 1e-8,
    "recurrence iv": 1e-8,
    "R2 contraction": 1e-8,
    "pinched limit (abs)": 1e-5,
    "pinched R2 contraction": 1e-8,
    "Kashaev normalization": 1e-12,
    "Kashaev braid relation": 1e-10,
    "weight-basis closed form": 1e-8,
    "colored-Jones form": 1e-8,
    "nilpotent form": 1e-8,
    "R2 move": 1e-8,
    "R3 move": 1e-7,
    "composition functoriality": 1e-10,
    "edge gluing (abs)": 1e-10,
    "log-decoration dependence": 1e-8,
    "determinant cocycle": 1e-6,
}


@dataclass
class CheckResult:
    module: str
    name: str
    N: int
    deviation: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.deviation == self.deviation and self.deviation <= self.tol


def run_all(Ns=(2, 3, 5), seed: int = 7, scale: float = 1.0,
            tol_overrides: dict = None) -> list:
    """Run every check at every N; returns a flat list of CheckResults."""
    tols = dict(DEFAULT_TOLS)
    if tol_overrides:
        tols.update(tol_overrides)
    rng = np.random.default_rng(seed)
    results = []
    for N in Ns:
        cfg = RootConfig(N)
        suites = (
            ("qdilog", check_qdilog, max(4, int(30 * scale))),
            ("characters", check_characters, max(40, int(400 * scale))),
            ("weylrep", check_weylrep, max(3, int(8 * scale))),
            ("rmatrix", check_rmatrix, max(2, int(6 * scale))),
            ("braidgrpd", check_braidgrpd, max(2, int(4 * scale))),
        )
        for module, fn, trials in suites:
            for name, dev in fn(cfg, rng, trials).items():
                results.append(CheckResult(module, name, N, dev,
                                           tols.get(name, 1e-8)))
    return results
