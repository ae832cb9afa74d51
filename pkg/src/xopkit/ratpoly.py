"""Exact univariate polynomial and rational-function arithmetic over Fraction.

Everything in this module is exact: coefficients are `fractions.Fraction`,
polynomials are dense coefficient lists (lowest degree first, no trailing
zeros), and rational functions are kept fully reduced with a monic
denominator.  That normal form makes structural equality coincide with
mathematical equality, so identity checks elsewhere in the package are plain
`==` comparisons, never tolerance tests.

Also provides exact root counting on intervals via Sturm sequences, with a
Cauchy bound standing in for +infinity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

RatLike = Union[Fraction, int, str]


def rat(x: RatLike) -> Fraction:
    """Coerce ints, 'p/q' strings and Fractions into Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def pochhammer(x: Fraction, k: int) -> Fraction:
    """Rising factorial x(x+1)...(x+k-1), exact."""
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


def binom_general(top: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient with rational top argument."""
    out = Fraction(1)
    for j in range(k):
        out *= (top - j)
        out /= j + 1
    return out


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients, lowest first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((1,))

    @staticmethod
    def const(c: RatLike) -> "UniPoly":
        return UniPoly((rat(c),))

    @staticmethod
    def x() -> "UniPoly":
        return UniPoly((0, 1))

    @staticmethod
    def monomial(k: int, c: RatLike = 1) -> "UniPoly":
        return UniPoly((0,) * k + (rat(c),))

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def pretty(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*{var}" if c != 1 else var)
            else:
                parts.append(f"{c}*{var}^{k}" if c != 1 else f"{var}^{k}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "UniPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        """Exact polynomial division: self = q*other + r, deg r < deg other."""
        if not isinstance(other, UniPoly):
            other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("zero divisor")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(), self
        q = [Fraction(0)] * (dq + 1)
        dlead = other.lead
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / dlead
            q[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    # -- calculus and evaluation --------------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def eval(self, x: RatLike) -> Fraction:
        x = rat(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def eval_float(self, x: float) -> float:
        out = 0.0
        for c in reversed(self.coeffs):
            out = out * x + float(c)
        return out

    def compose_affine(self, alpha: RatLike, beta: RatLike) -> "UniPoly":
        """p(alpha*x + beta), by Horner over the affine argument."""
        arg = UniPoly((rat(beta), rat(alpha)))
        out = UniPoly.zero()
        for c in reversed(self.coeffs):
            out = out * arg + UniPoly.const(c)
        return out

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self * (1 / self.lead)


def _as_poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly.const(x)
    return NotImplemented


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd via the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


class RationalFunction:
    """Reduced quotient of two UniPoly, denominator monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly = UniPoly((1,))):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num, self.den = UniPoly.zero(), UniPoly.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.lead
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    @staticmethod
    def from_poly(p: UniPoly) -> "RationalFunction":
        return RationalFunction(p)

    @staticmethod
    def const(c: RatLike) -> "RationalFunction":
        return RationalFunction(UniPoly.const(c))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == UniPoly.one()

    def as_poly(self) -> UniPoly:
        if not self.is_polynomial:
            raise ValueError("rational function has a nontrivial denominator")
        return self.num

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, UniPoly)):
            other = RationalFunction(_as_poly(other))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_polynomial:
            return f"RF({self.num.pretty()})"
        return f"RF(({self.num.pretty()}) / ({self.den.pretty()}))"

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _as_rf(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return _as_rf(other) / self

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def eval(self, x: RatLike) -> Fraction:
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.eval(x) / d

    def eval_float(self, x: float) -> float:
        return self.num.eval_float(x) / self.den.eval_float(x)


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_as_poly(x))


# -- exact root counting ----------------------------------------------------


def square_free_part(p: UniPoly) -> UniPoly:
    """p divided by gcd(p, p'), removing multiple roots."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    return p.exact_div(g)


def _sturm_chain(p: UniPoly) -> list:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_variations(chain: Sequence[UniPoly], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = q.eval(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_root_bound(p: UniPoly) -> Fraction:
    """B with every real root of p strictly inside (-B, B)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    lead = abs(p.lead)
    return 1 + max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0)) / lead


def count_roots_in_interval(p: UniPoly, lo: RatLike, hi: RatLike,
                            open_interval: bool = True) -> int:
    """Exact count of distinct real roots of p in (lo, hi) or [lo, hi].

    Sturm's theorem on the square-free part of p; multiple roots count once.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    lo, hi = rat(lo), rat(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    sf = square_free_part(p)
    if sf.degree == 0:
        return 0
    chain = _sturm_chain(sf)
    count = _sign_variations(chain, lo) - _sign_variations(chain, hi)  # (lo, hi]
    if open_interval and sf.eval(hi) == 0:
        count -= 1
    if not open_interval and sf.eval(lo) == 0:
        count += 1
    return count


def count_roots_positive_axis(p: UniPoly, open_at_zero: bool = True) -> int:
    """Distinct real roots on (0, +inf); the Cauchy bound truncates infinity."""
    bound = cauchy_root_bound(p)
    n = count_roots_in_interval(p, 0, bound, open_interval=True)
    # (0, B) with B beyond every root equals (0, inf); include B just in case
    if p.eval(bound) == 0:  # cannot happen (strict bound), kept as a guard
        n += 1
    if not open_at_zero and p.eval(0) == 0:
        n += 1
    return n
