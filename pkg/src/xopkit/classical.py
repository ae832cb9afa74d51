"""Classical Laguerre and Jacobi polynomials and their stock identities.

Polynomials are built from their three-term recurrences in exact arithmetic.
Jacobi polynomials additionally have a hypergeometric-sum construction that
stays polynomial-valued for parameters outside the orthogonality range
(needed for the twisted-parameter deformation polynomials), where the
recurrence coefficients can degenerate.

Norms are exposed only as the exact ratios h_n/h_0; the absolute constants
involve Gamma at non-integer arguments and are checked numerically elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple, Union

from .ratpoly import (RatLike, UniPoly, binom_general, pochhammer, rat)
from .reporting import CheckReport


class DegenerateJacobiError(ValueError):
    """Raised when the printed recurrence coefficients are ill-defined."""


@dataclass(frozen=True)
class Laguerre:
    alpha: Fraction

    def __str__(self) -> str:
        return f"Laguerre(alpha={self.alpha})"


@dataclass(frozen=True)
class Jacobi:
    a: Fraction
    b: Fraction

    def __str__(self) -> str:
        return f"Jacobi(a={self.a}, b={self.b})"


ClassicalKind = Union[Laguerre, Jacobi]


# -- Laguerre ----------------------------------------------------------------


@lru_cache(maxsize=None)
def laguerre(n: int, alpha: RatLike) -> UniPoly:
    """Generalized Laguerre polynomial of degree n, any rational parameter.

    Built from the recurrence
    -(n+1) L_{n+1} + (2n+alpha+1) L_n - (n+alpha) L_{n-1} = x L_n,
    which never degenerates.  Leading coefficient is (-1)^n / n!.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha = rat(alpha)
    x = UniPoly.x()
    prev, cur = UniPoly.zero(), UniPoly.one()
    for k in range(n):
        nxt = ((2 * k + alpha + 1) * cur - x * cur - (k + alpha) * prev) * Fraction(1, k + 1)
        prev, cur = cur, nxt
    return cur


def laguerre_rec_coeffs(n: int, alpha: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
    """(A_n, B_n, C_n) with A_n L_{n+1} + B_n L_n + C_n L_{n-1} = x L_n."""
    return (Fraction(-(n + 1)), 2 * n + alpha + 1, Fraction(-(n + alpha)))


def laguerre_ode_residual(n: int, alpha: Fraction) -> UniPoly:
    """x y'' + (alpha+1-x) y' + n y for y = L_n; the zero polynomial iff exact."""
    y = laguerre(n, alpha)
    x = UniPoly.x()
    return x * y.derivative().derivative() + (UniPoly((alpha + 1, -1))) * y.derivative() + n * y


# -- Jacobi ------------------------------------------------------------------


_DEGENERATE = {Fraction(0), Fraction(-1), Fraction(-2)}


def jacobi_rec_coeffs(n: int, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction, Fraction]:
    """(A_n, B_n, C_n) with A_n P_{n+1} + B_n P_n + C_n P_{n-1} = x P_n."""
    s = a + b
    if 2 * n + s in _DEGENERATE:
        raise DegenerateJacobiError(
            f"degenerate Jacobi parameters: 2n+a+b={2 * n + s} at n={n}")
    A = Fraction(2 * (n + 1)) * (n + s + 1) / ((2 * n + s + 1) * (2 * n + s + 2))
    B = (b * b - a * a) / ((2 * n + s) * (2 * n + s + 2))
    C = Fraction(2) * (n + a) * (n + b) / ((2 * n + s) * (2 * n + s + 1))
    return A, B, C


@lru_cache(maxsize=None)
def jacobi(n: int, a: RatLike, b: RatLike) -> UniPoly:
    """Jacobi polynomial of degree n via the three-term recurrence.

    Raises DegenerateJacobiError when a printed recurrence coefficient is
    ill-defined for the given parameters (2k+a+b in {0,-1,-2} at some step
    k >= 1).  Callers needing twisted parameters fall back to jacobi_hyp.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a, b = rat(a), rat(b)
    if n == 0:
        return UniPoly.one()
    x = UniPoly.x()
    p1 = UniPoly((Fraction(a - b, 2), Fraction(a + b + 2, 2)))
    if n == 1:
        return p1
    prev, cur = UniPoly.one(), p1
    for k in range(1, n):
        A, B, C = jacobi_rec_coeffs(k, a, b)
        nxt = (x * cur - B * cur - C * prev) * (1 / A)
        prev, cur = cur, nxt
    return cur


@lru_cache(maxsize=None)
def jacobi_hyp(n: int, a: RatLike, b: RatLike) -> UniPoly:
    """Jacobi polynomial as the explicit finite sum

    P_n = sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^{n-k},

    polynomial-valued for every rational (a, b).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a, b = rat(a), rat(b)
    minus = UniPoly((Fraction(-1, 2), Fraction(1, 2)))   # (x-1)/2
    plus = UniPoly((Fraction(1, 2), Fraction(1, 2)))     # (x+1)/2
    out = UniPoly.zero()
    for k in range(n + 1):
        c = binom_general(n + a, n - k) * binom_general(n + b, k)
        if c == 0:
            continue
        out = out + c * (minus ** k) * (plus ** (n - k))
    return out


def jacobi_any(n: int, a: RatLike, b: RatLike) -> UniPoly:
    """Recurrence construction when nondegenerate, else the explicit sum."""
    try:
        return jacobi(n, a, b)
    except DegenerateJacobiError:
        return jacobi_hyp(n, a, b)


def jacobi_ode_residual(n: int, a: Fraction, b: Fraction) -> UniPoly:
    """(1-x^2) y'' + (b-a-(a+b+2)x) y' + n(n+a+b+1) y for y = P_n."""
    y = jacobi_any(n, a, b)
    one_m_x2 = UniPoly((1, 0, -1))
    lin = UniPoly((b - a, -(a + b + 2)))
    return one_m_x2 * y.derivative().derivative() + lin * y.derivative() \
        + n * (n + a + b + 1) * y


# -- norm ratios --------------------------------------------------------------


def norm_ratio(kind: ClassicalKind, n: int) -> Fraction:
    """h_n/h_0 for the orthogonality weight of `kind`, exact.

    Laguerre(alpha), weight x^alpha e^-x on (0, inf):
        h_n/h_0 = (alpha+1)_n / n!
    Jacobi(a, b), weight (1-x)^a (1+x)^b on [-1, 1]:
        h_n/h_0 = (a+1)_n (b+1)_n (a+b+1) / (n! (a+b+1)_n (2n+a+b+1))
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if isinstance(kind, Laguerre):
        if not kind.alpha > -1:
            raise ValueError("Laguerre norm requires alpha > -1")
        return pochhammer(kind.alpha + 1, n) / factorial(n)
    a, b = kind.a, kind.b
    if not (a > -1 and b > -1):
        raise ValueError("Jacobi norm requires a > -1 and b > -1")
    return (pochhammer(a + 1, n) * pochhammer(b + 1, n) * (a + b + 1)) / \
        (factorial(n) * pochhammer(a + b + 1, n) * (2 * n + a + b + 1))


# -- identity suite -----------------------------------------------------------


def verify_classical_identities(kind: ClassicalKind, nmax: int) -> CheckReport:
    """Exact checks of the stock identities for n <= nmax.

    Laguerre: ODE, three-term recurrence, differentiation formula
    L_n' = -L_{n-1}^{(alpha+1)}, and the parameter-shift two-term relation
    L_n^{(alpha)} = L_n^{(alpha+1)} - L_{n-1}^{(alpha+1)}.

    Jacobi: ODE, three-term recurrence, recurrence/explicit-sum agreement,
    parity P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x), the two weight-shift
    relations (multiply / divide the weight by (1+x) resp. (1-x)) and their
    composed (1+x)-expansion in the (a+1, b-1) basis.
    """
    rep = CheckReport()
    if isinstance(kind, Laguerre):
        al = kind.alpha
        x = UniPoly.x()
        for n in range(nmax + 1):
            rep.add(f"laguerre ode n={n}", laguerre_ode_residual(n, al).is_zero)
        for n in range(1, nmax + 1):
            A, B, C = laguerre_rec_coeffs(n, al)
            lhs = A * laguerre(n + 1, al) + B * laguerre(n, al) + C * laguerre(n - 1, al)
            rep.add(f"laguerre recurrence n={n}", lhs == x * laguerre(n, al))
        for n in range(1, nmax + 1):
            rep.add(f"laguerre differentiation n={n}",
                    laguerre(n, al).derivative() == -laguerre(n - 1, al + 1))
            rep.add(f"laguerre parameter shift n={n}",
                    laguerre(n, al) == laguerre(n, al + 1) - laguerre(n - 1, al + 1))
        return rep

    a, b = kind.a, kind.b
    x = UniPoly.x()
    for n in range(nmax + 1):
        rep.add(f"jacobi ode n={n}", jacobi_ode_residual(n, a, b).is_zero)
        rep.add(f"jacobi recurrence==sum n={n}",
                jacobi_any(n, a, b) == jacobi_hyp(n, a, b))
        rep.add(f"jacobi parity n={n}",
                jacobi_any(n, a, b).compose_affine(-1, 0)
                == (-1) ** n * jacobi_any(n, b, a))
    for n in range(1, nmax + 1):
        try:
            A, B, C = jacobi_rec_coeffs(n, a, b)
        except DegenerateJacobiError:
            rep.add(f"jacobi recurrence n={n}", False, "degenerate parameters")
            continue
        lhs = A * jacobi_any(n + 1, a, b) + B * jacobi_any(n, a, b) + C * jacobi_any(n - 1, a, b)
        rep.add(f"jacobi recurrence n={n}", lhs == x * jacobi_any(n, a, b))
    s = a + b
    for n in range(nmax + 1):
        # weight gains a factor (1+x): two-term relation in the (a, b-1) family
        lhs = (2 * n + s + 1) * UniPoly((1, 1)) * jacobi_any(n, a, b)
        rhs = 2 * (n + 1) * jacobi_hyp(n + 1, a, b - 1) + 2 * (n + b) * jacobi_hyp(n, a, b - 1)
        rep.add(f"jacobi weight*(1+x) shift n={n}", lhs == rhs)
        # weight loses a factor (1-x): two-term relation from the (a+1, b) family
        lhs = (2 * n + s + 1) * jacobi_any(n, a, b)
        low = jacobi_hyp(n - 1, a + 1, b) if n >= 1 else UniPoly.zero()
        rhs = (n + s + 1) * jacobi_hyp(n, a + 1, b) - (n + b) * low
        rep.add(f"jacobi weight/(1-x) shift n={n}", lhs == rhs)
        # composition of the two: (1+x) P_n^{(a,b)} in the (a+1, b-1) basis
        if 2 * n + s == 0:
            rep.add(f"jacobi (1+x)-expansion n={n}", True, "skipped: 2n+a+b=0")
            continue
        alpha_n = Fraction(2 * (n + 1)) * (n + s + 1) / ((2 * n + s + 1) * (2 * n + s + 2))
        beta_n = Fraction(2) * s * (n + b) / ((2 * n + s) * (2 * n + s + 2))
        gamma_n = Fraction(-2) * (n + b) * (n + b - 1) / ((2 * n + s) * (2 * n + s + 1))
        lhs = UniPoly((1, 1)) * jacobi_any(n, a, b)
        low = jacobi_hyp(n - 1, a + 1, b - 1) if n >= 1 else UniPoly.zero()
        rhs = alpha_n * jacobi_hyp(n + 1, a + 1, b - 1) \
            + beta_n * jacobi_hyp(n, a + 1, b - 1) + gamma_n * low
        rep.add(f"jacobi (1+x)-expansion n={n}", lhs == rhs)
    return rep
