"""Demazure roots of a cone: predicate, bounded enumeration, closed-form families.

A root is an M-vector pairing to -1 with exactly one ray (its distinguished
ray) and nonnegatively with all others.  Enumeration is a plain box scan with
the predicate; it doubles as the independent oracle for the closed-form
families of the cyclic-quotient surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cone import Cone, enumerate_box
from .errors import InputError
from .lattice import M, LatticeVector, mvec
from .quotient import eprime_a


@dataclass(frozen=True)
class Root:
    alpha: LatticeVector
    ray_index: int

    def __post_init__(self) -> None:
        if self.alpha.lattice != M:
            raise InputError("root weight must be an M-vector")


def is_root(c: Cone, alpha: LatticeVector) -> int | None:
    """Index of the distinguished ray when alpha is a root of c, else None."""
    if alpha.lattice != M or len(alpha) != c.rank:
        raise InputError("root candidate must be an M-vector of matching rank")
    distinguished = None
    for i, rho in enumerate(c.rays):
        val = sum(a * b for a, b in zip(alpha.coords, rho.coords))
        if val >= 0:
            continue
        if val == -1 and distinguished is None:
            distinguished = i
        else:
            return None
    return distinguished


def enumerate_roots(c: Cone, bound: int) -> list[Root]:
    """All roots with max|coordinate| <= bound, ordered by (ray, lex alpha)."""
    if bound < 0:
        raise InputError("bound must be nonnegative")
    found = []
    for coords in enumerate_box(c.rank, bound):
        alpha = LatticeVector(coords, M)
        idx = is_root(c, alpha)
        if idx is not None:
            found.append(Root(alpha, idx))
    found.sort(key=lambda r: (r.ray_index, r.alpha.coords))
    return found


def roots_of_xde(d: int, e: int, l_max: int, k_max: int) -> tuple[list[LatticeVector], list[LatticeVector]]:
    """Closed-form root weights of the surface X_{d,e}.

    Family one, distinguished ray (0,1): (l, -1) for 0 <= l <= l_max.
    Family two, distinguished ray (d,-e): (a + k*e, e' + k*d) for 0 <= k <= k_max,
    where e*e' = 1 + a*d with 0 <= e' < d.
    """
    e_prime, a = eprime_a(d, e)
    if l_max < 0 or k_max < 0:
        raise InputError("family truncations must be nonnegative")
    family1 = [mvec(l, -1) for l in range(l_max + 1)]
    family2 = [mvec(a + k * e, e_prime + k * d) for k in range(k_max + 1)]
    return family1, family2


def group_by_ray(roots: list[Root]) -> dict[int, list[Root]]:
    """Partition roots by distinguished ray index, preserving order."""
    grouped: dict[int, list[Root]] = {}
    for r in roots:
        grouped.setdefault(r.ray_index, []).append(r)
    return grouped
