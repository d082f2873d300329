"""Braid diagrams as labelled graphs, coloring propagation, and the state sum.

A braid word on `width` strands is read top to bottom; strands are numbered
right to left, so generator i braids the strands at positions i and i+1 and
position 1 is the rightmost.  Tensor slot j of the state-sum matrix carries
strand position j (slot 1 most significant in the row-major flat index).

Crossings break strands into segments (width + 2 * crossings of them) and
regions come in width+1 columns, the middle columns subdivided by the
crossings acting there.  A coloring assigns a central character to every
segment; a log-coloring additionally fixes logarithms: beta per segment,
gamma per region, mu per component.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .characters import LogWeylChar, braid
from .qdilog import RootConfig, TWO_PI_I
from .rmatrix import CrossingData, braiding_op, det_braiding


class InadmissibleColoringError(ValueError):
    def __init__(self, crossing: int, msg: str = ""):
        self.crossing = crossing
        super().__init__(msg or f"coloring degenerates at crossing {crossing}")


@dataclass(frozen=True)
class BraidWord:
    """width >= 1 strands; letters are signed generator indices in 1..width-1."""

    width: int
    letters: tuple

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be >= 1")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if not (1 <= abs(x) <= self.width - 1):
                raise ValueError(f"generator {x} out of range for width {self.width}")


@dataclass
class Crossing:
    """One crossing: indices of its four segments and four regions.

    seg1/seg2 enter at positions pos/pos+1; seg2p/seg1p leave at positions
    pos/pos+1 (the strands swap sides).  Regions: N right, W above, S left,
    E below (the freshly created region).
    """

    index: int
    sign: int
    pos: int
    seg1: int
    seg2: int
    seg1p: int
    seg2p: int
    reg_n: int
    reg_w: int
    reg_s: int
    reg_e: int


@dataclass
class DiagramGraph:
    """Deterministic combinatorial data of a braid word."""

    word: BraidWord
    crossings: list
    n_segments: int
    n_regions: int
    seg_component: list          # component id (top position of the strand)
    region_column: list
    top_segments: list           # per position 1..w (index 0 unused)
    bottom_segments: list
    top_regions: list            # per column 0..w
    bottom_regions: list
    perm: list                   # bottom position -> component there

    @property
    def width(self) -> int:
        return self.word.width

    def internal_regions(self) -> list:
        """Regions bounded above and below by crossings of their column."""
        opened = {c.reg_e: c.index for c in self.crossings}
        closed = {}
        for c in self.crossings:
            if c.reg_w not in closed:
                closed[c.reg_w] = c.index
        return [r for r in opened if r in closed]

    def internal_segments(self) -> list:
        out = []
        touched_top = set(self.top_segments[1:])
        touched_bot = set(self.bottom_segments[1:])
        for s in range(self.n_segments):
            if s not in touched_top and s not in touched_bot:
                out.append(s)
        return out


def build_diagram(word: BraidWord) -> DiagramGraph:
    """Thread the strands through the word, recording segments and regions."""
    w = word.width
    seg_component = list(range(w))        # initial segments 0..w-1; component = index
    cur_seg = list(range(w))              # cur_seg[p-1] = segment at position p
    region_column = list(range(w + 1))    # initial regions 0..w, one per column
    cur_reg = list(range(w + 1))
    top_segments = [None] + list(range(w))
    top_regions = list(range(w + 1))
    crossings = []
    for t, letter in enumerate(word.letters):
        i = abs(letter)
        sign = 1 if letter > 0 else -1
        s1, s2 = cur_seg[i - 1], cur_seg[i]
        # strands swap positions: position i continues strand 2, i+1 strand 1
        s2p = len(seg_component)
        seg_component.append(seg_component[s2])
        s1p = len(seg_component)
        seg_component.append(seg_component[s1])
        cur_seg[i - 1], cur_seg[i] = s2p, s1p
        reg_e = len(region_column)
        region_column.append(i)
        crossings.append(Crossing(t, sign, i, s1, s2, s1p, s2p,
                                  cur_reg[i - 1], cur_reg[i], cur_reg[i + 1], reg_e))
        cur_reg[i] = reg_e
    return DiagramGraph(word=word, crossings=crossings,
                        n_segments=len(seg_component),
                        n_regions=len(region_column),
                        seg_component=seg_component,
                        region_column=region_column,
                        top_segments=top_segments,
                        bottom_segments=[None] + list(cur_seg),
                        top_regions=top_regions,
                        bottom_regions=list(cur_reg),
                        perm=[None] + [seg_component[s] for s in cur_seg])


@dataclass
class ChiColoring:
    """Character per segment plus pinched flags per crossing."""

    colors: list                 # WeylChar per segment id
    pinched_crossings: list


def propagate_chi(d: DiagramGraph, top: list) -> ChiColoring:
    """Color every segment by braiding the top characters through the word.

    `top` lists the characters of positions 1..width.  Raises
    InadmissibleColoringError naming the first crossing that degenerates.
    """
    if len(top) != d.width:
        raise ValueError(f"need {d.width} top characters, got {len(top)}")
    colors = [None] * d.n_segments
    for p in range(1, d.width + 1):
        colors[d.top_segments[p]] = top[p - 1]
    pinched = []
    for c in d.crossings:
        out = braid(colors[c.seg1], colors[c.seg2], c.sign)
        if not out.admissible:
            raise InadmissibleColoringError(
                c.index, f"inadmissible pair at crossing {c.index} "
                         f"(letter {c.index}, positions {c.pos},{c.pos+1})")
        if out.pinched:
            pinched.append(c.index)
        colors[c.seg1p] = out.chi1p
        colors[c.seg2p] = out.chi2p
    return ChiColoring(colors, pinched)


@dataclass
class LogColoring:
    """beta per segment, gamma per region, mu per component."""

    beta: list
    gamma: list
    mu: list

    def segment_logchar(self, d: DiagramGraph, c: Crossing, which: str) -> LogWeylChar:
        seg = {"1": c.seg1, "2": c.seg2, "1p": c.seg1p, "2p": c.seg2p}[which]
        g = self.gamma
        alpha = {"1": g[c.reg_w] - g[c.reg_n],
                 "2": g[c.reg_s] - g[c.reg_w],
                 "2p": g[c.reg_e] - g[c.reg_n],
                 "1p": g[c.reg_s] - g[c.reg_e]}[which]
        return LogWeylChar(alpha, self.beta[seg], self.mu[d.seg_component[seg]])


def extend_log_coloring(d: DiagramGraph, top_betas: list, top_gammas: list,
                        mus: list, beta_shifts: dict = None,
                        gamma_shifts: dict = None,
                        beta_overrides: dict = None,
                        gamma_overrides: dict = None) -> LogColoring:
    """Propagate a log-coloring from top boundary data.

    Per crossing, the two output betas and the new region gamma default to
    principal-branch logarithms; integer shifts (per crossing index) or
    outright per-segment/region overrides adjust the branches.
    """
    if len(top_betas) != d.width or len(top_gammas) != d.width + 1:
        raise ValueError("boundary data sizes do not match the diagram")
    beta_shifts = beta_shifts or {}
    gamma_shifts = gamma_shifts or {}
    beta_overrides = beta_overrides or {}
    gamma_overrides = gamma_overrides or {}
    beta = [None] * d.n_segments
    gamma = [None] * d.n_regions
    for p in range(1, d.width + 1):
        beta[d.top_segments[p]] = top_betas[p - 1]
    for col in range(d.width + 1):
        gamma[col] = top_gammas[col]
    for c in d.crossings:
        lc1 = LogWeylChar(gamma[c.reg_w] - gamma[c.reg_n], beta[c.seg1],
                          mus[d.seg_component[c.seg1]])
        lc2 = LogWeylChar(gamma[c.reg_s] - gamma[c.reg_w], beta[c.seg2],
                          mus[d.seg_component[c.seg2]])
        out = braid(lc1.char(), lc2.char(), c.sign)
        if not out.admissible:
            raise InadmissibleColoringError(c.index)
        s1, s2 = beta_shifts.get(c.index, (0, 0))
        if out.pinched:
            # standard branch choice: all region flattenings vanish exactly
            b1p_default = lc1.beta + lc2.mu
            b2p_default = lc1.beta
        else:
            b1p_default = cmath.log(out.chi1p.b) / TWO_PI_I
            b2p_default = cmath.log(out.chi2p.b) / TWO_PI_I
        b1p = beta_overrides.get(c.seg1p, b1p_default + s1)
        b2p = beta_overrides.get(c.seg2p, b2p_default + s2)
        ge = gamma_overrides.get(c.reg_e,
                                 gamma[c.reg_n] + cmath.log(out.chi2p.a) / TWO_PI_I
                                 + gamma_shifts.get(c.index, 0))
        beta[c.seg1p], beta[c.seg2p] = b1p, b2p
        gamma[c.reg_e] = ge
    return LogColoring(beta, gamma, list(mus))


def crossing_data(cfg: RootConfig, d: DiagramGraph, lc: LogColoring,
                  c: Crossing) -> CrossingData:
    return CrossingData(
        cfg, c.sign,
        lc.segment_logchar(d, c, "1"), lc.segment_logchar(d, c, "2"),
        lc.segment_logchar(d, c, "1p"), lc.segment_logchar(d, c, "2p"),
        lc.gamma[c.reg_n], lc.gamma[c.reg_w], lc.gamma[c.reg_s], lc.gamma[c.reg_e])


def log_longitudes(d: DiagramGraph, lc: LogColoring) -> list:
    """lambda per component: half-sum of signed betas over half-segments."""
    lam = [0.0 + 0.0j] * d.width
    for c in d.crossings:
        e = c.sign
        comp1 = d.seg_component[c.seg1]
        comp2 = d.seg_component[c.seg2]
        lam[comp1] += 0.5 * e * (lc.beta[c.seg1p] - lc.beta[c.seg1])
        lam[comp2] += 0.5 * e * (lc.beta[c.seg2] - lc.beta[c.seg2p])
    return lam


def edge_gluing_defects(cfg: RootConfig, d: DiagramGraph, lc: LogColoring) -> list:
    """Signed zeta^0 sums around internal regions (all should vanish)."""
    role_sign = {"N": +1, "W": -1, "S": +1, "E": -1}
    sums = {}
    for c in d.crossings:
        cd = crossing_data(cfg, d, lc, c)
        z0 = cd.zeta0()
        for role, reg in (("N", c.reg_n), ("W", c.reg_w),
                          ("S", c.reg_s), ("E", c.reg_e)):
            sums[reg] = sums.get(reg, 0.0) + c.sign * role_sign[role] * z0[role]
    return [abs(sums.get(r, 0.0)) for r in d.internal_regions()]


def jfunc_eval(cfg: RootConfig, d: DiagramGraph, lc: LogColoring) -> np.ndarray:
    """State-sum matrix of the log-colored diagram (operator[out, in]).

    Top crossing acts first; pinched crossings are routed to the closed
    pinched braiding automatically.
    """
    N = cfg.N
    w = d.width
    total = np.eye(N ** w, dtype=complex)
    for c in d.crossings:
        cd = crossing_data(cfg, d, lc, c)
        b = braiding_op(cd).as_operator()
        op = np.kron(np.eye(N ** (c.pos - 1), dtype=complex),
                     np.kron(b, np.eye(N ** (w - c.pos - 1), dtype=complex)))
        total = op @ total
    return total


def jfunc_dets(cfg: RootConfig, d: DiagramGraph, lc: LogColoring) -> list:
    """Closed-form braiding determinant at every crossing of the diagram."""
    return [det_braiding(crossing_data(cfg, d, lc, c)) for c in d.crossings]


@dataclass
class MoveReport:
    eligible: bool
    reason: str
    deviation: float


def _boundary_data(d: DiagramGraph, lc: LogColoring) -> tuple:
    top_b = tuple(lc.beta[d.top_segments[p]] for p in range(1, d.width + 1))
    bot_b = tuple(lc.beta[d.bottom_segments[p]] for p in range(1, d.width + 1))
    top_g = tuple(lc.gamma[r] for r in d.top_regions)
    bot_g = tuple(lc.gamma[r] for r in d.bottom_regions)
    return top_b, bot_b, top_g, bot_g, tuple(lc.mu), tuple(d.perm[1:])


def check_move(cfg: RootConfig, before: tuple, after: tuple, kind: str,
               tol: float = None) -> MoveReport:
    """Verify a log-colored R2 or R3 move.

    before/after are (DiagramGraph, LogColoring) pairs.  Eligibility: equal
    boundary log-data and, for R3, equal log-longitudes per component (the
    segment-log matching condition).  On an eligible move the two state sums
    are compared entrywise.
    """
    if kind not in ("R2", "R3"):
        raise ValueError("kind must be 'R2' or 'R3'")
    (d1, lc1), (d2, lc2) = before, after
    if d1.width != d2.width:
        return MoveReport(False, "widths differ", float("nan"))
    b1, b2 = _boundary_data(d1, lc1), _boundary_data(d2, lc2)
    names = ("top betas", "bottom betas", "top gammas", "bottom gammas",
             "meridians", "permutation")
    for name, u, v in zip(names, b1, b2):
        dev = max((abs(complex(x) - complex(y)) for x, y in zip(u, v)), default=0.0)
        if name == "permutation":
            if u != v:
                return MoveReport(False, "strand permutations differ", float("nan"))
        elif dev > 1e-9:
            return MoveReport(False, f"boundary mismatch in {name} ({dev:.2e})",
                              float("nan"))
    l1 = log_longitudes(d1, lc1)
    l2 = log_longitudes(d2, lc2)
    ldev = max(abs(x - y) for x, y in zip(l1, l2))
    if ldev > 1e-9:
        return MoveReport(False,
                          f"log-decoration mismatch (max |dlambda| = {ldev:.2e}); "
                          "for R3 this is the beta + beta'' = beta' + beta~' condition",
                          float("nan"))
    m1 = jfunc_eval(cfg, d1, lc1)
    m2 = jfunc_eval(cfg, d2, lc2)
    dev = float(np.abs(m1 - m2).max() / max(1.0, np.abs(m1).max()))
    if tol is None:
        tol = 1e-8 if kind == "R2" else 1e-7
    return MoveReport(dev <= tol, "ok" if dev <= tol else "state sums differ", dev)
