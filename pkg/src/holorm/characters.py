"""Central characters of the cyclic Weyl algebra and their braiding.

A character is the triple (a, b, m) of values on the central N-th powers
(x^N, y^N, z^N).  Characters correspond to elements of the dual group SL2*
(pairs of triangular matrices) and map to SL2 holonomy matrices via the
birational map psi.  The braiding B acts on pairs of characters; it is only
partially defined, and the places where it degenerates (inadmissible pairs,
pinched pairs) drive all the special-casing downstream.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .qdilog import Tolerance, TWO_PI_I


class RootMismatchError(ValueError):
    """A claimed N-th root does not exponentiate to the claimed value."""


@dataclass(frozen=True)
class WeylChar:
    """Central character: a = chi(x^N), b = chi(y^N), m = chi(z^N), all nonzero."""

    a: complex
    b: complex
    m: complex

    def __post_init__(self):
        for name in ("a", "b", "m"):
            if abs(getattr(self, name)) < 1e-12:
                raise ValueError(f"character coordinate {name} must be nonzero")

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.m)

    def isclose(self, other: "WeylChar", rel: float = 1e-9) -> bool:
        return all(
            abs(x - y) <= rel * max(1.0, abs(x), abs(y))
            for x, y in zip(self.as_tuple(), other.as_tuple()))


@dataclass(frozen=True)
class LogWeylChar:
    """Chosen logarithms (alpha, beta, mu) of a character: a = e^{2 pi i alpha} etc."""

    alpha: complex
    beta: complex
    mu: complex

    def char(self) -> WeylChar:
        return WeylChar(cmath.exp(TWO_PI_I * self.alpha),
                        cmath.exp(TWO_PI_I * self.beta),
                        cmath.exp(TWO_PI_I * self.mu))

    def shifted(self, dalpha: int = 0, dbeta: int = 0) -> "LogWeylChar":
        """Integer translate; same underlying character."""
        return LogWeylChar(self.alpha + dalpha, self.beta + dbeta, self.mu)

    def check_consistent(self, chi: WeylChar, rel: float = 1e-9) -> None:
        if not self.char().isclose(chi, rel=rel):
            raise RootMismatchError(
                f"log-character {self} does not exponentiate to {chi}")


def principal_log_char(chi: WeylChar, mu: complex = None) -> LogWeylChar:
    """Principal-branch logarithms of a character (mu may be prescribed)."""
    alpha = cmath.log(chi.a) / TWO_PI_I
    beta = cmath.log(chi.b) / TWO_PI_I
    if mu is None:
        mu = cmath.log(chi.m) / TWO_PI_I
    else:
        if abs(cmath.exp(TWO_PI_I * mu) - chi.m) > 1e-9 * max(1.0, abs(chi.m)):
            raise RootMismatchError(f"mu={mu} is not a logarithm of m={chi.m}")
    return LogWeylChar(alpha, beta, mu)


@dataclass(frozen=True)
class SL2StarElement:
    """Dual-group element: a pair (lower, upper) of triangular 2x2 matrices.

    lower = [[kappa, 0], [phi, 1]], upper = [[1, eps], [0, kappa]], kappa != 0.
    Group coordinates of a character chi: kappa = chi(K^N) = a,
    eps = chi(E^N) = b(a-m), phi = kappa*chi(F^N) = b^{-1}(a - 1/m).
    """

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lower, dtype=complex)
        up = np.asarray(self.upper, dtype=complex)
        if lo.shape != (2, 2) or up.shape != (2, 2):
            raise ValueError("SL2* components must be 2x2")
        scale = max(1.0, float(np.abs(lo).max()), float(np.abs(up).max()))
        if (abs(lo[0, 1]) > 1e-9 * scale or abs(lo[1, 1] - 1.0) > 1e-9 * scale
                or abs(up[1, 0]) > 1e-9 * scale or abs(up[0, 0] - 1.0) > 1e-9 * scale
                or abs(lo[0, 0] - up[1, 1]) > 1e-9 * scale):
            raise ValueError("matrices do not have the SL2* triangular shape")
        if abs(lo[0, 0]) < 1e-12:
            raise ValueError("kappa must be nonzero")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", up)

    @property
    def kappa(self) -> complex:
        return self.lower[0, 0]

    @property
    def eps(self) -> complex:
        return self.upper[0, 1]

    @property
    def phi(self) -> complex:
        return self.lower[1, 0]

    @property
    def chi_KN(self) -> complex:
        return self.kappa

    @property
    def chi_EN(self) -> complex:
        return self.eps

    @property
    def chi_FN(self) -> complex:
        return self.phi / self.kappa

    def holonomy(self) -> np.ndarray:
        """psi of this element: lower @ inverse(upper)."""
        return self.lower @ np.linalg.inv(self.upper)

    def isclose(self, other: "SL2StarElement", rel: float = 1e-9) -> bool:
        s = max(1.0, float(np.abs(self.lower).max()), float(np.abs(self.upper).max()))
        return (np.abs(self.lower - other.lower).max() <= rel * s
                and np.abs(self.upper - other.upper).max() <= rel * s)


def psi(chi: WeylChar) -> np.ndarray:
    """Holonomy matrix of a character; determinant 1.

    [[a, -b(a-m)], [b^{-1}(a - 1/m), m + 1/m - a]]
    """
    a, b, m = chi.a, chi.b, chi.m
    return np.array([[a, -b * (a - m)],
                     [(a - 1.0 / m) / b, m + 1.0 / m - a]], dtype=complex)


def to_z0_char(chi: WeylChar) -> SL2StarElement:
    """SL2* element of a character; psi(chi) = lower @ upper^{-1} by construction."""
    a, b, m = chi.a, chi.b, chi.m
    eps = b * (a - m)
    phi = (a - 1.0 / m) / b
    lower = np.array([[a, 0.0], [phi, 1.0]], dtype=complex)
    upper = np.array([[1.0, eps], [0.0, a]], dtype=complex)
    return SL2StarElement(lower, upper)


def char_product(c1: SL2StarElement, c2: SL2StarElement) -> SL2StarElement:
    """Group product (componentwise matrix product); realizes the coproduct pairing."""
    return SL2StarElement(c1.lower @ c2.lower, c1.upper @ c2.upper)


@dataclass(frozen=True)
class BraidOutcome:
    """Result of braiding a pair of characters.

    chi2p/chi1p are the outputs in braid order (the pair returned is
    (chi_{2'}, chi_{1'})); meridians are preserved: m_{i'} = m_i.
    """

    chi2p: WeylChar
    chi1p: WeylChar
    admissible: bool
    pinched: bool


def is_pinched(chi1: WeylChar, chi2: WeylChar, singular: float = 1e-9) -> bool:
    """Pinched pair: b2 = m1 b1 (all four equivalent degeneracies collapse here)."""
    b2, m1b1 = chi2.b, chi1.m * chi1.b
    return abs(b2 - m1b1) <= singular * max(abs(b2), abs(m1b1))


def _window_ok(*vals, singular: float) -> bool:
    return all(singular < abs(v) < 1.0 / singular for v in vals)


def braid(chi1: WeylChar, chi2: WeylChar, sign: int,
          tol: Tolerance = Tolerance()) -> BraidOutcome:
    """Braiding B (sign=+1) or its inverse (sign=-1) on a pair of characters.

    Returns the outputs plus flags instead of raising, so coloring
    propagation can report exactly where a diagram degenerates.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    a1, b1, m1 = chi1.as_tuple()
    a2, b2, m2 = chi2.as_tuple()
    sing = tol.singular
    pinched = is_pinched(chi1, chi2, singular=sing)
    try:
        if sign == +1:
            A = 1.0 - (m1 * b1 / b2) * (1.0 - a1 / m1) * (1.0 - 1.0 / (m2 * a2))
            if not _window_ok(A, singular=sing):
                raise ZeroDivisionError
            a1p = a1 / A
            a2p = a2 * A
            den = 1.0 - m2 * a2 * (1.0 - b2 / (m1 * b1))
            if not _window_ok(den, singular=sing):
                raise ZeroDivisionError
            b1p = (m2 * b2 / m1) / den
            b2p = b1 * (1.0 - (m1 / a1) * (1.0 - b2 / (m1 * b1)))
        else:
            A = 1.0 - (b2 / (m1 * b1)) * (1.0 - m1 * a1) * (1.0 - m2 / a2)
            if not _window_ok(A, singular=sing):
                raise ZeroDivisionError
            a1p = a1 / A
            a2p = a2 * A
            b1p = (m2 * b2 / m1) * (1.0 - (a2 / m2) * (1.0 - m1 * b1 / b2))
            den = 1.0 - (1.0 / (m1 * a1)) * (1.0 - m1 * b1 / b2)
            if not _window_ok(den, singular=sing):
                raise ZeroDivisionError
            b2p = b1 / den
        if not _window_ok(a1p, a2p, b1p, b2p, singular=sing):
            raise ZeroDivisionError
    except ZeroDivisionError:
        return BraidOutcome(chi2, chi1, admissible=False, pinched=pinched)
    return BraidOutcome(WeylChar(a2p, b2p, m2), WeylChar(a1p, b1p, m1),
                        admissible=True, pinched=pinched)


def classify_pair(chi1: WeylChar, chi2: WeylChar, sign: int = +1,
                  tol: Tolerance = Tolerance()) -> dict:
    """Admissibility / pinched report for a pair, with the Y discriminant.

    Y = 1 + K1^{-N} E1^N F2^N K2^N evaluated on character values; its vanishing
    on the output pair detects the inadmissible locus for the stated sign.
    """
    out = braid(chi1, chi2, sign, tol=tol)

    def yval(u: WeylChar, v: WeylChar) -> complex:
        e1 = u.b * (u.a - u.m)
        f2 = (v.a - 1.0 / v.m) / (v.a * v.b)
        return 1.0 + (1.0 / u.a) * e1 * f2 * v.a

    report = {
        "admissible": out.admissible,
        "pinched": out.pinched,
        "y_in": yval(chi1, chi2),
    }
    if out.admissible:
        report["y_out"] = yval(out.chi1p, out.chi2p)
    return report


def casimir_relation(chi: WeylChar, mu: complex) -> float:
    """Residual of the Chebyshev/Casimir compatibility relation.

    P_N(t + 1/t) = t^N + 1/t^N with t = omega**(mu + 1/2) must match
    chi(E^N F^N - K^N - K^{-N}); both sides equal -(m + 1/m).
    The residual is |LHS - RHS| (absolute, both sides O(1)-normalized).
    """
    a, b, m = chi.as_tuple()
    if abs(cmath.exp(TWO_PI_I * mu) - m) > 1e-9 * max(1.0, abs(m)):
        raise RootMismatchError(f"omega**(N mu) = {cmath.exp(TWO_PI_I * mu)} != m = {m}")
    tN = cmath.exp(TWO_PI_I * mu) * cmath.exp(1j * cmath.pi)  # omega**(N(mu+1/2)) = -m
    lhs = tN + 1.0 / tN
    rhs = b * (a - m) * (a - 1.0 / m) / (a * b) - a - 1.0 / a
    return abs(lhs - rhs)
