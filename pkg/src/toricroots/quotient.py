"""Cyclic-quotient surface models X_{d,e}.

X_{d,e} is the quotient of the affine plane by the order-d cyclic group
acting with weights (e, 1); its cone has rays (0,1) and (d,-e).  Invariance
of a monomial x^a y^b is the congruence e*a + b = 0 (mod d), so the group
itself never appears: everything stays in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cone import Cone, dual_contains, make_cone
from .errors import InputError, VerifyMismatchError
from .lattice import IntMatrix, LatticeVector, mvec, nvec


def _validate_de(d: int, e: int) -> None:
    if d < 1:
        raise InputError("d must be a positive integer")
    if d == 1:
        if e != 0:
            raise InputError("d = 1 requires e = 0 (the affine plane)")
        return
    if not 0 <= e < d:
        raise InputError("e must satisfy 0 <= e < d")
    if gcd(e, d) != 1:
        raise InputError(f"gcd(e, d) must be 1, got gcd({e}, {d}) = {gcd(e, d)}")
    if e == 0:
        raise InputError("e = 0 is only valid with d = 1")


def eprime_a(d: int, e: int) -> tuple[int, int]:
    """The unique (e', a) with 0 <= e' < d and e*e' = 1 + a*d.

    For (d, e) = (1, 0) this is (0, -1).
    """
    _validate_de(d, e)
    e_prime = pow(e, -1, d) if d > 1 else 0
    a = (e * e_prime - 1) // d
    return e_prime, a


@dataclass(frozen=True)
class SurfaceDE:
    """Parameters (d, e) together with the derived (e', a)."""

    d: int
    e: int
    e_prime: int
    a: int

    @classmethod
    def of(cls, d: int, e: int) -> "SurfaceDE":
        e_prime, a = eprime_a(d, e)
        return cls(d, e, e_prime, a)

    def cone(self) -> Cone:
        return make_cone(2, [nvec(0, 1), nvec(self.d, -self.e)])


def invariant_member(d: int, e: int, m: tuple[int, int]) -> bool:
    """Whether the monomial with exponents m is fixed by the weight-(e,1) action."""
    _validate_de(d, e)
    m1, m2 = m
    if m1 < 0 or m2 < 0:
        raise InputError("exponents must be nonnegative")
    return (e * m1 + m2) % d == 0


@dataclass(frozen=True)
class MonoidConeMatch:
    """Verified identification of the invariant-monomial monoid with the dual cone.

    ``to_exponents`` sends a dual-cone lattice point m to the pair of pairings
    (<m, ray0>, <m, ray1>), which is exactly an invariant exponent vector; its
    determinant is -d.  ``checked`` counts the box points the bijection was
    verified on.
    """

    d: int
    e: int
    box: int
    to_exponents: IntMatrix
    checked: int


def _weight_of_exponents(d: int, e: int, w: tuple[int, int]) -> tuple[int, int]:
    # Inverse of the to_exponents matrix, defined on the invariant sublattice.
    q, r = divmod(e * w[0] + w[1], d)
    if r != 0:
        raise InputError("exponent pair is not in the invariant sublattice")
    return (q, w[0])


def monoid_matches_cone(d: int, e: int, box: int) -> MonoidConeMatch:
    """Verify that invariant monomials in [0, box]^2 biject with dual-cone points.

    The chosen lattice map is checked point-by-point in both directions; a
    failure raises VerifyMismatchError and would indicate a bug, not a
    property of (d, e).
    """
    _validate_de(d, e)
    if box < 0:
        raise InputError("box must be nonnegative")
    if d == 1:
        matrix = IntMatrix.identity(2)
        forward = lambda w: w
        backward = lambda m: m
    else:
        matrix = IntMatrix.from_rows([[0, 1], [d, -e]])
        forward = lambda w: _weight_of_exponents(d, e, w)
        backward = lambda m: (m[1], d * m[0] - e * m[1])

    cone = SurfaceDE.of(d, e).cone()
    invariants = [
        (m1, m2)
        for m1 in range(box + 1)
        for m2 in range(box + 1)
        if invariant_member(d, e, (m1, m2))
    ]
    image = set()
    for w in invariants:
        m = forward(w)
        if not dual_contains(cone, mvec(*m)):
            raise VerifyMismatchError(f"image of invariant {w} lies outside the dual cone")
        if backward(m) != w:
            raise VerifyMismatchError(f"matrix does not invert on {w}")
        image.add(m)
    # Conversely every dual point whose exponent image lands in the box must
    # occur.  Dual points with image in [0, box]^2 satisfy 0 <= m2 <= box and
    # 0 <= m1 <= (box * (1 + e)) / d, so the scan below is exhaustive.
    bound1 = (box * (1 + e)) // d + 1
    for x1 in range(bound1 + 1):
        for x2 in range(box + 1):
            m = (x1, x2)
            if not dual_contains(cone, mvec(*m)):
                continue
            w = backward(m)
            if 0 <= w[0] <= box and 0 <= w[1] <= box:
                if m not in image:
                    raise VerifyMismatchError(f"dual point {m} missed by the bijection")
                image.discard(m)
    if image:
        raise VerifyMismatchError(f"image points {sorted(image)} have no dual-cone partner")
    return MonoidConeMatch(d, e, box, matrix, len(invariants))


def iso_test(s1: SurfaceDE, s2: SurfaceDE) -> bool:
    """X_{d1,e1} and X_{d2,e2} are isomorphic iff d1 = d2 and e1 = e2 or e1*e2 = 1 mod d."""
    if s1.d != s2.d:
        return False
    return s1.e == s2.e or (s1.e * s2.e) % s1.d == 1 % s1.d


def canonical_form(s: SurfaceDE) -> tuple[int, int]:
    """Representative (d, min(e, e')) of the isomorphism class."""
    return (s.d, min(s.e, s.e_prime))
