"""Seeded random generators for flattenings, characters, crossings, colorings.

Used by the self-test battery and the test suite.  Sampling boxes are chosen
so that principal-branch logarithms behave tamely: real parts of log-data
stay within about half a unit of 0 and imaginary parts are small, which keeps
every quantum-dilogarithm argument far from its poles unless explicitly
requested otherwise.
"""

from __future__ import annotations

import numpy as np

from .braidgrpd import (BraidWord, DiagramGraph, InadmissibleColoringError,
                        LogColoring, build_diagram, extend_log_coloring,
                        log_longitudes)
from .characters import LogWeylChar, WeylChar, braid
from .qdilog import Flattening, RootConfig
from .rmatrix import CrossingData, make_crossing


def random_flattening(cfg: RootConfig, rng: np.random.Generator,
                      min_dist: float = 0.05, im: float = 0.25,
                      branches: int = 2) -> Flattening:
    """Random flattening with dist(zeta0, Z) > min_dist."""
    while True:
        z0 = rng.uniform(0.0, 1.0) + 1j * rng.uniform(-im, im)
        if min(abs(z0 - round(z0.real)), abs(z0 - round(z0.real) - 1),
               abs(z0 - round(z0.real) + 1)) <= min_dist:
            continue
        z0 += int(rng.integers(-1, 2))
        return Flattening.from_zeta0(z0, branch=int(rng.integers(-branches, branches + 1)))


def random_value(rng: np.random.Generator, scale: float = 0.4,
                 im: float = 0.15) -> complex:
    return rng.uniform(-scale, scale) + 1j * rng.uniform(-im, im)


def random_logchar(rng: np.random.Generator, scale: float = 0.4,
                   im: float = 0.15) -> LogWeylChar:
    return LogWeylChar(random_value(rng, scale, im), random_value(rng, scale, im),
                       random_value(rng, scale, im))


def random_char(rng: np.random.Generator) -> WeylChar:
    return random_logchar(rng).char()


def random_admissible_pair(rng: np.random.Generator, sign: int = +1,
                           tries: int = 200) -> tuple:
    for _ in range(tries):
        c1, c2 = random_char(rng), random_char(rng)
        out = braid(c1, c2, sign)
        if out.admissible:
            return c1, c2
    raise RuntimeError("could not sample an admissible pair")


def random_crossing(cfg: RootConfig, rng: np.random.Generator, sign: int = +1,
                    min_dist: float = 0.05, tries: int = 500) -> CrossingData:
    """Random non-pinched crossing with all zeta0 at distance > min_dist from Z."""
    for _ in range(tries):
        lc1, lc2 = random_logchar(rng), random_logchar(rng)
        if not braid(lc1.char(), lc2.char(), sign).admissible:
            continue
        try:
            c = make_crossing(cfg, lc1, lc2, sign,
                              gamma_n=random_value(rng, 0.3, 0.1))
        except Exception:
            continue
        z0 = c.zeta0()
        if min(abs(z0[r] - round(z0[r].real)) for r in "NWSE") < min_dist:
            continue
        return c
    raise RuntimeError("could not sample a crossing")


def standard_pinched_crossing(cfg: RootConfig, al1: complex, al2: complex,
                              mu1: complex, mu2: complex, sign: int = +1,
                              beta: complex = 0.0, gamma_n: complex = 0.1,
                              alpha2p: complex = None) -> CrossingData:
    """Pinched crossing (b2 = m1 b1) with the standard log-coloring."""
    lc1 = LogWeylChar(al1, beta, mu1)
    lc2 = LogWeylChar(al2, beta + mu1, mu2)
    return make_crossing(cfg, lc1, lc2, sign, gamma_n=gamma_n,
                         beta1p=beta + mu2, beta2p=beta, alpha2p=alpha2p)


def kashaev_crossing(cfg: RootConfig, sign: int = +1) -> CrossingData:
    """The alpha = mu = -1/2 pinched crossing underlying the Kashaev matrix."""
    return standard_pinched_crossing(cfg, -0.5, -0.5, -0.5, -0.5, sign=sign,
                                     alpha2p=-0.5)


def random_coloring(cfg: RootConfig, d: DiagramGraph, rng: np.random.Generator,
                    tries: int = 300, **kw) -> LogColoring:
    for _ in range(tries):
        top_b = [random_value(rng, 0.35, 0.12) for _ in range(d.width)]
        top_g = [random_value(rng, 0.35, 0.12) for _ in range(d.width + 1)]
        mus = [random_value(rng, 0.35, 0.12) for _ in range(d.width)]
        try:
            return extend_log_coloring(d, top_b, top_g, mus, **kw)
        except InadmissibleColoringError:
            continue
    raise RuntimeError("could not sample an admissible coloring")


def matched_pair_colorings(cfg: RootConfig, rng: np.random.Generator,
                           word_a: tuple, word_b: tuple, width: int,
                           tries: int = 300) -> tuple:
    """Colorings of two words with identical boundary data and log-longitudes.

    The second word is colored with the first word's boundary values imposed
    on its bottom segments and regions, and one internal beta is shifted by
    an integer to equalize the log-longitudes (always possible when the two
    words are related by braid moves).
    """
    da, db = build_diagram(BraidWord(width, word_a)), build_diagram(BraidWord(width, word_b))
    for _ in range(tries):
        try:
            lca = random_coloring(cfg, da, rng, tries=50)
        except RuntimeError:
            continue
        top_b = [lca.beta[da.top_segments[p]] for p in range(1, width + 1)]
        top_g = [lca.gamma[r] for r in da.top_regions]
        b_over = {db.bottom_segments[p]: lca.beta[da.bottom_segments[p]]
                  for p in range(1, width + 1)}
        g_over = {db.bottom_regions[col]: lca.gamma[da.bottom_regions[col]]
                  for col in range(width + 1)
                  if db.bottom_regions[col] not in db.top_regions}
        try:
            lcb = extend_log_coloring(db, top_b, top_g, lca.mu,
                                      beta_overrides=b_over, gamma_overrides=g_over)
        except InadmissibleColoringError:
            continue
        lama = log_longitudes(da, lca)
        if max(abs(x - y) for x, y in zip(lama, log_longitudes(db, lcb))) > 1e-9:
            lcb = _tune_longitudes(db, lcb, top_b, top_g, lca.mu,
                                   b_over, g_over, lama)
        if lcb is None:
            continue
        if max(abs(x - y) for x, y in zip(lama, log_longitudes(db, lcb))) > 1e-9:
            continue
        return (da, lca), (db, lcb)
    raise RuntimeError("no matched pair of colorings found")


def _tune_longitudes(d, lc, top_b, top_g, mus, b_over, g_over, target):
    """Shift internal betas by integers to steer the longitudes to `target`."""
    overrides = dict(b_over)
    for s in d.internal_segments():
        remaining = [t - l for t, l in zip(target, log_longitudes(d, lc))]
        if max(abs(x) for x in remaining) <= 1e-9:
            break
        try:
            probe = extend_log_coloring(d, top_b, top_g, mus,
                                        beta_overrides={**overrides, s: lc.beta[s] + 1},
                                        gamma_overrides=g_over)
        except InadmissibleColoringError:
            return None
        eff = [x - y for x, y in zip(log_longitudes(d, probe), log_longitudes(d, lc))]
        j = int(np.argmax([abs(e) for e in eff]))
        if abs(eff[j]) < 0.4:
            continue
        shift = remaining[j] / eff[j]
        if abs(shift - round(shift.real)) > 1e-9:
            return None
        overrides[s] = lc.beta[s] + round(shift.real)
        try:
            lc = extend_log_coloring(d, top_b, top_g, mus,
                                     beta_overrides=overrides, gamma_overrides=g_over)
        except InadmissibleColoringError:
            return None
    return lc
