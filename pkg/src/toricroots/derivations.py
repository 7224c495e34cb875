"""Character algebra of a cone and its homogeneous locally nilpotent derivations.

Elements of the coordinate ring are finite rational combinations of
characters chi^m with m in the dual monoid.  A root alpha with distinguished
ray rho acts by delta(chi^m) = <m, rho> * chi^(m + alpha); delta is locally
nilpotent, so exp(s * delta) is a finite sum and every identity below is an
exact equality of rational numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .cone import Cone, dual_contains, enumerate_box
from .errors import InputError
from .lattice import LatticeVector, mvec, pairing
from .roots import Root, is_root

Coords = tuple[int, ...]
Rational = Fraction | int


@dataclass(frozen=True)
class TorusPoint:
    """Rational point of the torus; all coordinates nonzero."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(c == 0 for c in self.coords):
            raise InputError("torus point coordinates must be nonzero")

    @classmethod
    def of(cls, *coords: Rational) -> "TorusPoint":
        return cls(tuple(Fraction(c) for c in coords))

    def inverse(self) -> "TorusPoint":
        return TorusPoint(tuple(1 / c for c in self.coords))


def char_value(t: TorusPoint, m: Coords) -> Fraction:
    """Value of the character chi^m at t: product of t_i^(m_i)."""
    if len(t.coords) != len(m):
        raise InputError("length mismatch")
    val = Fraction(1)
    for base, exp in zip(t.coords, m):
        val *= base**exp
    return val


class LaurentPoly:
    """Finite rational combination of characters supported in the dual monoid.

    Instances are immutable by convention; exponents are raw coordinate
    tuples in M.
    """

    __slots__ = ("cone", "_terms")

    def __init__(self, cone: Cone, terms: Mapping[Coords, Rational]):
        clean: dict[Coords, Fraction] = {}
        for m, coeff in terms.items():
            c = Fraction(coeff)
            if c == 0:
                continue
            m = tuple(int(x) for x in m)
            if not dual_contains(cone, LatticeVector(m, "M")):
                raise InputError(f"exponent {m} lies outside the dual cone")
            clean[m] = c
        self.cone = cone
        self._terms = clean

    @classmethod
    def chi(cls, cone: Cone, m: LatticeVector | Coords, coeff: Rational = 1) -> "LaurentPoly":
        coords = m.coords if isinstance(m, LatticeVector) else tuple(m)
        return cls(cone, {coords: coeff})

    @classmethod
    def zero(cls, cone: Cone) -> "LaurentPoly":
        return cls(cone, {})

    @classmethod
    def one(cls, cone: Cone) -> "LaurentPoly":
        return cls(cone, {(0,) * cone.rank: 1})

    def items(self) -> list[tuple[Coords, Fraction]]:
        return sorted(self._terms.items())

    def coefficient(self, m: Coords) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def _check_same_cone(self, other: "LaurentPoly") -> None:
        if self.cone != other.cone:
            raise InputError("polynomials live over different cones")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_same_cone(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return LaurentPoly(self.cone, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return poly_mul(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def scaled(self, c: Rational) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly(self.cone, {m: c * v for m, v in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.cone == other.cone
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.cone, tuple(self.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return "LaurentPoly(0)"
        parts = [f"{c}*chi^{list(m)}" for m, c in self.items()]
        return "LaurentPoly(" + " + ".join(parts) + ")"


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Convolution product; the dual monoid is closed, so support stays valid."""
    f._check_same_cone(g)
    out: dict[Coords, Fraction] = {}
    for m1, c1 in f._terms.items():
        for m2, c2 in g._terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return LaurentPoly(f.cone, out)


def _checked_ray(c: Cone, r: Root) -> Coords:
    if is_root(c, r.alpha) != r.ray_index:
        raise InputError(f"{tuple(r.alpha.coords)} is not a root of the cone with ray {r.ray_index}")
    return c.rays[r.ray_index].coords


def delta_apply(r: Root, f: LaurentPoly) -> LaurentPoly:
    """Apply the derivation of r term-wise: chi^m -> <m, rho> chi^(m + alpha)."""
    rho = _checked_ray(f.cone, r)
    alpha = r.alpha.coords
    out: dict[Coords, Fraction] = {}
    for m, c in f._terms.items():
        w = sum(a * b for a, b in zip(m, rho))
        if w == 0:
            continue
        shifted = tuple(a + b for a, b in zip(m, alpha))
        out[shifted] = out.get(shifted, Fraction(0)) + w * c
    return LaurentPoly(f.cone, out)


def nilpotency_index(c: Cone, r: Root, m: LatticeVector) -> int:
    """Smallest l with delta^l(chi^m) = 0; equals <m, rho> + 1."""
    if not dual_contains(c, m):
        raise InputError("monomial exponent lies outside the dual cone")
    _checked_ray(c, r)
    f = LaurentPoly.chi(c, m)
    steps = 0
    while not f.is_zero:
        f = delta_apply(r, f)
        steps += 1
    return steps


def exp_lnd(r: Root, s: Rational, f: LaurentPoly) -> LaurentPoly:
    """Exponential automorphism: sum of s^i delta^i(f) / i! (a finite sum)."""
    _checked_ray(f.cone, r)
    s = Fraction(s)
    total = f
    term = f
    i = 0
    factorial = 1
    power = Fraction(1)
    while True:
        term = delta_apply(r, term)
        if term.is_zero:
            return total
        i += 1
        factorial *= i
        power *= s
        total = total + term.scaled(power / factorial)


def torus_act(t: TorusPoint, f: LaurentPoly) -> LaurentPoly:
    """Scale each term chi^m by the character value chi^m(t)."""
    if len(t.coords) != f.cone.rank:
        raise InputError("torus point rank does not match the cone")
    return LaurentPoly(f.cone, {m: c * char_value(t, m) for m, c in f._terms.items()})


def commutes(c: Cone, r1: Root, r2: Root) -> bool:
    """Exact check that the two derivations commute on a spanning box of monomials.

    The commutator is homogeneous, so vanishing on every dual monomial with
    coordinates up to 2 * max|root coordinate| + 2 decides it.
    """
    rho1 = _checked_ray(c, r1)
    rho2 = _checked_ray(c, r2)
    a1 = r1.alpha.coords
    a2 = r2.alpha.coords
    radius = 2 * max(abs(x) for x in a1 + a2) + 2
    for m in enumerate_box(c.rank, radius):
        vec = LatticeVector(m, "M")
        if not dual_contains(c, vec):
            continue
        # delta1(delta2(chi^m)) has coefficient <m,rho2><m+a2,rho1>; both
        # orders shift the exponent by a1+a2, so only coefficients compare.
        m_a2 = tuple(x + y for x, y in zip(m, a2))
        m_a1 = tuple(x + y for x, y in zip(m, a1))
        c12 = _dot(m, rho2) * _dot(m_a2, rho1)
        c21 = _dot(m, rho1) * _dot(m_a1, rho2)
        if c12 != c21:
            return False
    return True


def _dot(a: Iterable[int], b: Iterable[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def weight_conjugation_scale(t: TorusPoint, r: Root) -> Fraction:
    """Character value chi^alpha(t): conjugating exp(s delta) by t rescales s by it."""
    return char_value(t, r.alpha.coords)
