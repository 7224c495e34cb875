"""Finite-order tests for unimodular integer matrices and monomial torus maps.

Reduction modulo an odd prime has torsion-free kernel, so a unimodular matrix
has finite order exactly when its order modulo 3 already holds over the
integers.  A monomial map (matrix, scaling) generates a bounded subgroup iff
its matrix part is torsion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .derivations import TorusPoint
from .errors import InputError
from .lattice import IntMatrix

WITNESS_PRIME = 3


def _require_square(a: IntMatrix) -> None:
    if a.rows != a.cols:
        raise InputError("order tests require a square matrix")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


def _gl_order(n: int, p: int) -> int:
    order = 1
    pn = p**n
    for i in range(n):
        order *= pn - p**i
    return order


def order_mod_p(a: IntMatrix, p: int) -> int:
    """Multiplicative order of a modulo p (p an odd prime not dividing det)."""
    _require_square(a)
    if p < 3 or not _is_prime(p):
        raise InputError("p must be an odd prime")
    if a.det() % p == 0:
        raise InputError("p divides the determinant; no order modulo p")
    identity = IntMatrix.identity(a.rows).mod(p)
    power = a.mod(p)
    bound = _gl_order(a.rows, p)
    k = 1
    while power != identity:
        power = (power @ a).mod(p)
        k += 1
        if k > bound:
            raise AssertionError("order exceeded the group order; unreachable")
    return k


def finite_order(a: IntMatrix) -> int | None:
    """Exact order of a unimodular matrix, or None when the order is infinite.

    The kernel of reduction modulo 3 is torsion-free, so the integral order,
    when finite, equals the order modulo 3.
    """
    _require_square(a)
    if abs(a.det()) != 1:
        raise InputError("finite_order requires |det| = 1")
    m = order_mod_p(a, WITNESS_PRIME)
    return m if a**m == IntMatrix.identity(a.rows) else None


@dataclass(frozen=True)
class MonomialAut:
    """Monomial torus map: unimodular exponent matrix plus coordinate scaling."""

    matrix: IntMatrix
    scale: TorusPoint

    def __post_init__(self) -> None:
        _require_square(self.matrix)
        if abs(self.matrix.det()) != 1:
            raise InputError("monomial map needs a unimodular exponent matrix")
        if len(self.scale.coords) != self.matrix.rows:
            raise InputError("scaling rank does not match the matrix")


def is_algebraic_monomial(g: MonomialAut) -> bool:
    """Bounded iterates (containment in an algebraic subgroup) for a monomial map.

    Holds exactly when the exponent matrix is torsion: the iterates then stay
    inside the subgroup generated by the torus and finitely many matrices.
    """
    return finite_order(g.matrix) is not None
