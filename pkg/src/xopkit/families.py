"""Parameter bookkeeping for the four families L1, L2, J1, J2.

A family point is (family tag, deformation degree ell, couplings).  This
module builds the degree-ell deformation polynomial xi in the sinusoidal
coordinate eta (eta = x^2 on the half-line, eta = cos 2x on the interval),
the exact eigenvalue formulas, and the coefficient data of the second-order
operator acting on polynomials in eta.

Validity ranges are strict: L1 needs g > 1/2, L2 needs g > -1/2, J1 needs
g > h > 0, J2 needs h > g > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional, Tuple

from .classical import Jacobi, Laguerre, ClassicalKind, jacobi_hyp, laguerre
from .ratpoly import (RatLike, UniPoly, cauchy_root_bound,
                      count_roots_in_interval, pochhammer, rat)
from .reporting import CheckReport

FAMILIES = ("L1", "L2", "J1", "J2")
HALF = Fraction(1, 2)


class ParamError(ValueError):
    """A family parameter violates its validity range."""


@dataclass(frozen=True)
class FamilyParams:
    family: str
    ell: int
    g: Fraction
    h: Optional[Fraction] = None

    @property
    def is_laguerre(self) -> bool:
        return self.family in ("L1", "L2")

    @property
    def kind(self) -> str:
        """Coordinate kind: "L" (eta = x^2) or "J" (eta = cos 2x)."""
        return "L" if self.is_laguerre else "J"

    def shifted(self, k: int = 1) -> "FamilyParams":
        """Same family with couplings advanced k steps along the shift."""
        h = None if self.h is None else self.h + k
        return FamilyParams(self.family, self.ell, self.g + k, h)

    def label(self) -> str:
        if self.is_laguerre:
            return f"{self.family}(ell={self.ell}, g={self.g})"
        return f"{self.family}(ell={self.ell}, g={self.g}, h={self.h})"


def make_params(family: str, ell: int, g: RatLike, h: Optional[RatLike] = None) -> FamilyParams:
    if family not in FAMILIES:
        raise ParamError(f"unknown family {family!r}; expected one of {FAMILIES}")
    p = FamilyParams(family, int(ell), rat(g), None if h is None else rat(h))
    validate(p)
    return p


def validate(params: FamilyParams) -> None:
    """Raise ParamError unless the family's strict inequalities hold."""
    if params.family not in FAMILIES:
        raise ParamError(f"unknown family {params.family!r}")
    if params.ell < 1:
        raise ParamError("ell must be a positive integer")
    g, h = params.g, params.h
    if params.family == "L1":
        if not g > HALF:
            raise ParamError(f"L1 requires g > 1/2 (got g={g})")
    elif params.family == "L2":
        if not g > -HALF:
            raise ParamError(f"L2 requires g > -1/2 (got g={g})")
    else:
        if h is None:
            raise ParamError(f"{params.family} requires the second coupling h")
        if params.family == "J1":
            if not (g > h > 0):
                raise ParamError(f"J1 requires g > h > 0 (got g={g}, h={h})")
        else:
            if not (h > g > 0):
                raise ParamError(f"J2 requires h > g > 0 (got g={g}, h={h})")


# -- deformation polynomial ---------------------------------------------------


@lru_cache(maxsize=None)
def _xi_cached(family: str, ell: int, g: Fraction, h: Optional[Fraction]) -> UniPoly:
    if family == "L1":
        return laguerre(ell, g + ell - Fraction(3, 2)).compose_affine(-1, 0)
    if family == "L2":
        return laguerre(ell, -g - ell - HALF)
    if family == "J1":
        return jacobi_hyp(ell, g + ell - Fraction(3, 2), -h - ell - HALF)
    return jacobi_hyp(ell, -g - ell - HALF, h + ell - Fraction(3, 2))


def xi(params: FamilyParams, shift: int = 0) -> UniPoly:
    """Degree-ell deformation polynomial in eta, couplings advanced `shift`."""
    validate(params)
    p = params.shifted(shift) if shift else params
    return _xi_cached(p.family, p.ell, p.g, p.h)


def physical_interval(params: FamilyParams) -> Tuple[Fraction, Fraction]:
    """Open eta-interval carrying the weight; (0, B) uses a Cauchy bound."""
    if params.is_laguerre:
        return Fraction(0), cauchy_root_bound(xi(params))
    return Fraction(-1), Fraction(1)


def xi_structure_check(params: FamilyParams) -> CheckReport:
    """Exact structure checks on xi: explicit-sum match and zero-freeness.

    The explicit sums (in x^2, cos^2 x or sin^2 x) have manifestly positive
    terms on the physical interval; xi must equal the sum up to a global
    sign, which gets recorded per (family, ell) rather than assumed.
    Zero-freeness on the open physical interval is established independently
    by an exact Sturm root count.
    """
    validate(params)
    rep = CheckReport()
    ell, g, h = params.ell, params.g, params.h
    eta = UniPoly.x()

    if params.family == "L1":
        terms = [pochhammer(g + ell + k - HALF, ell - k)
                 / (factorial(k) * factorial(ell - k)) for k in range(ell + 1)]
        sum_poly = UniPoly(terms)
    elif params.family == "L2":
        terms = [pochhammer(g + HALF, ell - k)
                 / (factorial(k) * factorial(ell - k)) for k in range(ell + 1)]
        sum_poly = UniPoly(terms)
    else:
        # cos^2 x = (1+eta)/2 for J1, sin^2 x = (1-eta)/2 for J2
        base = UniPoly((HALF, HALF)) if params.family == "J1" else UniPoly((HALF, -HALF))
        lead_g = h if params.family == "J1" else g
        other = g - h if params.family == "J1" else h - g
        prefac = pochhammer(lead_g + HALF, ell) / factorial(ell)
        sum_poly = UniPoly.zero()
        terms = []
        for k in range(ell + 1):
            c = pochhammer(Fraction(ell - k + 1), k) * pochhammer(other + ell - 1, k) \
                / (factorial(k) * pochhammer(lead_g + ell - k + HALF, k))
            terms.append(prefac * c)
            sum_poly = sum_poly + prefac * c * base ** k
    rep.add("explicit-sum terms positive", all(t > 0 for t in terms),
            f"{len(terms)} terms")

    xi0 = xi(params)
    sign = 0
    if xi0 == sum_poly:
        sign = 1
    elif xi0 == -sum_poly:
        sign = -1
    printed_sign = 1 if params.family == "L1" else (-1) ** ell
    rep.add("xi equals explicit sum up to sign", sign != 0,
            f"recorded sign {sign:+d}; printed convention {printed_sign:+d}"
            + ("" if sign == printed_sign else " (differs)"))

    lo, hi = physical_interval(params)
    n_roots = count_roots_in_interval(xi0, lo, hi, open_interval=True)
    rep.add("xi zero-free on physical interval", n_roots == 0,
            f"{n_roots} roots in ({lo}, {hi})")
    rep.add("xi degree equals ell", xi0.degree == ell)
    if params.family == "L1":
        rep.add("xi coefficients strictly positive",
                all(c > 0 for c in xi0.coeffs))
    return rep


# -- eigenvalues ---------------------------------------------------------------


def eigenvalue(params: FamilyParams, n: int, tier: str = "os") -> Fraction:
    """Exact eigenvalue of level n.

    tier "os"   : spectrum of the deformed second-order operator, ground 0;
    tier "plus" : spectrum of the factorized pair (iso-spectral, so "minus"
                  is identical); the two tiers differ by the stated constant.
    """
    validate(params)
    if n < 0:
        raise ValueError("level must be nonnegative")
    ell, g, h = params.ell, params.g, params.h
    if params.is_laguerre:
        base = Fraction(4 * n)
    else:
        base = 4 * n * (n + g + h + 2 * ell)
    if tier == "os":
        return base
    if tier in ("plus", "minus"):
        return base + plus_minus_shift(params)
    raise ValueError(f"unknown tier {tier!r}")


def plus_minus_shift(params: FamilyParams) -> Fraction:
    """Constant separating the factorized-pair spectrum from the 'os' tier."""
    ell, g, h = params.ell, params.g, params.h
    if params.family == "L1":
        return 2 * (2 * g + 4 * ell - 1)
    if params.family == "L2":
        return 2 * (2 * g + 1)
    if params.family == "J1":
        return (2 * g + 4 * ell - 1) * (2 * h + 1)
    return (2 * h + 4 * ell - 1) * (2 * g + 1)


def classical_ground_gap(params: FamilyParams) -> Fraction:
    """First classical-layer excitation energy used by shape invariance."""
    if params.is_laguerre:
        return Fraction(4)
    return 4 * (params.g + params.h + 1)


# -- second-order operator coefficient data -----------------------------------


@dataclass(frozen=True)
class SLCoeffs:
    """Coefficient data (c1, c2, d1, d2, etilde) of the eta-space operator.

    c1 carries the ell-step coupling shift; etilde is evaluated at the
    one-step shift, which is what the operator display uses.
    """
    c1: UniPoly
    c2: UniPoly
    d1: Fraction
    d2: UniPoly
    etilde: Fraction

    @property
    def c2_over_d2(self) -> UniPoly:
        return self.c2.exact_div(self.d2)


def sl_coeffs(params: FamilyParams) -> SLCoeffs:
    validate(params)
    ell, g, h = params.ell, params.g, params.h
    if params.is_laguerre:
        gs = g + ell
        c1 = UniPoly((gs + HALF, -1))
        c2 = UniPoly.x()
        if params.family == "L1":
            d1, d2 = Fraction(1), UniPoly.one()
            etilde = Fraction(-4 * ell)
        else:
            d1, d2 = g + HALF, UniPoly((0, -1))
            etilde = Fraction(4 * ell)
        return SLCoeffs(c1, c2, d1, d2, etilde)
    gs, hs = g + ell, h + ell
    c1 = UniPoly((hs - gs, -(gs + hs + 1)))
    c2 = UniPoly((1, 0, -1))
    if params.family == "J1":
        d1, d2 = h + HALF, UniPoly((-1, -1))
        etilde = 4 * ell * (ell + g - h - 1)
    else:
        d1, d2 = g + HALF, UniPoly((1, -1))
        etilde = 4 * ell * (ell + h - g - 1)
    return SLCoeffs(c1, c2, d1, d2, etilde)


# -- data for the factorized-pair eigenfunctions ------------------------------


@dataclass(frozen=True)
class PlusState:
    """Prefactor exponents and classical polynomial family of the plus side."""
    c: Fraction                       # power of x (L) or sin x (J)
    d: Fraction                       # power of cos x (J only)
    poly_kind: ClassicalKind


def plus_state(params: FamilyParams) -> PlusState:
    validate(params)
    ell, g, h = params.ell, params.g, params.h
    if params.family == "L1":
        return PlusState(g + ell - 1, Fraction(0), Laguerre(g + ell - Fraction(3, 2)))
    if params.family == "L2":
        return PlusState(g + ell + 1, Fraction(0), Laguerre(g + ell + HALF))
    if params.family == "J1":
        return PlusState(g + ell - 1, h + ell + 1,
                         Jacobi(g + ell - Fraction(3, 2), h + ell + HALF))
    return PlusState(g + ell + 1, h + ell - 1,
                     Jacobi(g + ell + HALF, h + ell - Fraction(3, 2)))


def weight_matched_basis(params: FamilyParams) -> ClassicalKind:
    """Classical family whose weight equals the exceptional weight times xi^2.

    This is the candidate expansion basis the banded-support discovery in the
    recurrence engine tries first; for all four families it sits at
    g + ell - 1/2 (and h + ell - 1/2 on the interval).
    """
    ell, g, h = params.ell, params.g, params.h
    if params.is_laguerre:
        return Laguerre(g + ell - HALF)
    return Jacobi(g + ell - HALF, h + ell - HALF)
