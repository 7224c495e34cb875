"""Strongly convex rational polyhedral cones given by primitive ray generators.

The dual cone is kept implicit as the inequality list <.,ray> >= 0; explicit
dual generators and Hilbert bases are provided for the full-dimensional
two-ray case in rank 2, which is all the surface pipelines need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import InputError
from .lattice import M, N, LatticeVector, pairing, primitive

Coords = tuple[int, ...]


@dataclass(frozen=True)
class Cone:
    """Strongly convex cone; ``rays`` may be empty (the zero cone of the torus)."""

    rank: int
    rays: tuple[LatticeVector, ...]

    def __post_init__(self) -> None:
        for r in self.rays:
            if r.lattice != N or len(r) != self.rank:
                raise InputError("cone rays must be N-vectors of the ambient rank")

    @property
    def is_zero(self) -> bool:
        return not self.rays

    def contains(self, v: LatticeVector) -> bool:
        """Exact membership of an N-vector in the cone spanned by the rays."""
        if v.lattice != N or len(v) != self.rank:
            raise InputError("membership test requires an N-vector of matching rank")
        return _in_cone([r.coords for r in self.rays], v.coords)


def make_cone(rank: int, generators: list[LatticeVector]) -> Cone:
    """Normalize generators into a strongly convex cone.

    Generators are primitivized, duplicates and non-extremal generators are
    dropped (first occurrence wins), and strong convexity is enforced.
    """
    if rank < 1:
        raise InputError("rank must be at least 1")
    prims: list[Coords] = []
    for g in generators:
        if g.lattice != N:
            raise InputError("cone generators must be N-vectors")
        if len(g) != rank:
            raise InputError("generator length does not match rank")
        if g.is_zero:
            raise InputError("zero vector cannot generate a ray")
        c = primitive(g).coords
        if c not in prims:
            prims.append(c)

    # A line lies in the cone exactly when some -g is a nonnegative
    # combination of the generators.
    for c in prims:
        if _in_cone(prims, tuple(-x for x in c)):
            raise InputError("generators span a line; cone is not strongly convex")

    # Drop generators contained in the cone of the others until all are extremal.
    changed = True
    while changed:
        changed = False
        for i, c in enumerate(prims):
            others = prims[:i] + prims[i + 1 :]
            if others and _in_cone(others, c):
                prims.pop(i)
                changed = True
                break

    return Cone(rank, tuple(LatticeVector(c, N) for c in prims))


def dual_contains(c: Cone, m: LatticeVector) -> bool:
    """True when m pairs nonnegatively with every ray (m lies in the dual cone)."""
    if m.lattice != M or len(m) != c.rank:
        raise InputError("dual membership requires an M-vector of matching rank")
    return all(pairing(m, rho) >= 0 for rho in c.rays)


def dual_rays_2d(c: Cone) -> list[LatticeVector]:
    """Primitive generators of the dual cone for a full-dimensional rank-2 cone.

    Each output vector annihilates one ray of the cone and is positive on the
    other; output is sorted lexicographically.
    """
    _require_two_rays(c)
    r0, r1 = c.rays
    out = [_facet_normal(r1, r0), _facet_normal(r0, r1)]
    out.sort(key=lambda v: v.coords)
    return out


def _facet_normal(on: LatticeVector, positive: LatticeVector) -> LatticeVector:
    """Primitive M-vector orthogonal to ``on`` and positive on ``positive``."""
    a, b = on.coords
    m = primitive(LatticeVector((b, -a), M))
    val = pairing(m, positive)
    if val == 0:
        raise InputError("cone rays are proportional")
    return m if val > 0 else -m


def hilbert_basis_2d(c: Cone) -> list[LatticeVector]:
    """Minimal generating set of the dual monoid of a full-dimensional rank-2 cone.

    Candidates come from a box scan of radius max|dual ray coordinate| + 1
    (every irreducible lies in the triangle spanned by the dual rays, hence in
    that box); irreducibility is decided by peeling already-found irreducibles,
    processed in increasing order of a strictly positive grading.
    """
    _require_two_rays(c)
    u, v = dual_rays_2d(c)
    radius = max(abs(x) for w in (u, v) for x in w.coords) + 1
    points = []
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            if x == 0 and y == 0:
                continue
            m = LatticeVector((x, y), M)
            if dual_contains(c, m):
                points.append(m)
    # <.,r0> + <.,r1> is positive on every nonzero dual point.
    grade = lambda m: pairing(m, c.rays[0]) + pairing(m, c.rays[1])
    points.sort(key=lambda m: (grade(m), m.coords))
    basis: list[LatticeVector] = []
    for w in points:
        reducible = False
        for h in basis:
            rest = w - h
            if not rest.is_zero and dual_contains(c, rest):
                reducible = True
                break
        if not reducible:
            basis.append(w)
    basis.sort(key=lambda m: m.coords)
    return basis


def _require_two_rays(c: Cone) -> None:
    if c.rank != 2 or len(c.rays) != 2:
        raise InputError("operation requires a rank-2 cone with exactly two rays")


# Exact nonnegative-combination machinery (Caratheodory over independent subsets).


def _in_cone(gens: list[Coords], target: Coords) -> bool:
    if all(t == 0 for t in target):
        return True
    if not gens:
        return False
    n = len(target)
    for size in range(1, min(n, len(gens)) + 1):
        for subset in combinations(gens, size):
            sol = _solve_unique(subset, target)
            if sol is not None and all(x >= 0 for x in sol):
                return True
    return False


def _solve_unique(cols: tuple[Coords, ...], target: Coords) -> list[Fraction] | None:
    """Solve sum c_i * cols_i = target when cols are independent; None otherwise.

    Returns None when the columns are dependent or the system is inconsistent.
    """
    n = len(target)
    k = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    pivot_rows: list[int] = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, n) if aug[i][col] != 0), None)
        if piv is None:
            return None  # dependent columns
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivot_rows.append(r)
        r += 1
    for i in range(r, n):
        if aug[i][k] != 0:
            return None  # inconsistent
    return [aug[i][k] for i in range(k)]


def enumerate_box(rank: int, bound: int):
    """All integer coordinate tuples with max-norm at most ``bound``."""
    if bound < 0:
        raise InputError("bound must be nonnegative")
    return product(range(-bound, bound + 1), repeat=rank)
