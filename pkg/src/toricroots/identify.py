"""Fingerprint and recovery pipelines.

Two independent surfaces identify a cyclic-quotient surface: the grid of
kernel orders |det(alpha1(l), alpha2(k))| over the two root-weight families
equals a + l*e' + k*e + l*k*d, and the row/column common differences of that
grid give (d, e) back.  Separately, a strongly convex cone is recovered from
its root set: for each root e the translations D_e = {m : e + m in roots}
accumulate on the hyperplane orthogonal to the distinguished ray, whose
primitive normal p yields the ray as -<e, p> * p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .cone import Cone, make_cone
from .errors import FailedSpanError, InputError, VerifyMismatchError
from .lattice import LatticeVector, det2, dot, nvec, primitive_tuple
from .quotient import SurfaceDE, canonical_form
from .roots import enumerate_roots, roots_of_xde

Coords = tuple[int, ...]


def kernel_order(alpha1: LatticeVector, alpha2: LatticeVector) -> int:
    """Order of the intersection of the two character kernels; 0 means infinite."""
    return abs(det2(alpha1, alpha2))


@dataclass(frozen=True)
class Fingerprint:
    """(l_max+1) x (k_max+1) grid of kernel orders for the two weight families."""

    l_max: int
    k_max: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.l_max < 0 or self.k_max < 0:
            raise InputError("fingerprint bounds must be nonnegative")
        if len(self.entries) != self.l_max + 1 or any(
            len(row) != self.k_max + 1 for row in self.entries
        ):
            raise InputError("fingerprint grid shape does not match bounds")
        if any(x < 0 for row in self.entries for x in row):
            raise InputError("fingerprint entries must be nonnegative")

    def entry(self, l: int, k: int) -> int:
        return self.entries[l][k]


def fingerprint(s: SurfaceDE, l_max: int, k_max: int) -> Fingerprint:
    """Kernel-order grid of X_{d,e}, cross-checked against the closed form.

    Requires d >= 2: for the affine plane (d = 1) the closed form
    a + l*e' + k*e + l*k*d turns negative and the grid carries no
    quotient-surface data.
    """
    if s.d < 2:
        raise InputError("fingerprint is defined for d >= 2 (the plane has none)")
    family1, family2 = roots_of_xde(s.d, s.e, l_max, k_max)
    rows = []
    for l in range(l_max + 1):
        row = []
        for k in range(k_max + 1):
            order = kernel_order(family1[l], family2[k])
            closed = s.a + l * s.e_prime + k * s.e + l * k * s.d
            if order != closed:
                raise VerifyMismatchError(
                    f"kernel order {order} at (l={l}, k={k}) disagrees with closed form {closed}"
                )
            row.append(order)
        rows.append(tuple(row))
    return Fingerprint(l_max, k_max, tuple(rows))


def _progression_difference(values: Sequence[int], where: str) -> int:
    diffs = {b - a for a, b in zip(values, values[1:])}
    if len(diffs) != 1:
        raise InputError(f"{where} is not an arithmetic progression")
    return diffs.pop()


def recover_de(fp: Fingerprint) -> tuple[int, int]:
    """Recover the canonical (d, e) from a kernel-order grid.

    Row common differences are e + l*d, so e is the smallest difference and d
    the gap between successive ones; columns give e' the same way.  The zero
    entry (infinite kernel, only legal at (0, 0)) is excluded from difference
    extraction.  The recovered parameters must reproduce the whole grid.
    """
    if fp.l_max < 2 or fp.k_max < 2:
        raise InputError("recovery needs l_max and k_max at least 2")
    for l, row in enumerate(fp.entries):
        for k, x in enumerate(row):
            if x == 0 and (l, k) != (0, 0):
                raise InputError("zero kernel order away from (0, 0): not an X_{d,e} grid")

    def usable(values: Sequence[int], skip_first: bool) -> Sequence[int]:
        return values[1:] if skip_first and values[0] == 0 else values

    row_diffs = [
        _progression_difference(usable(row, l == 0), f"row {l}")
        for l, row in enumerate(fp.entries)
    ]
    cols = list(zip(*fp.entries))
    col_diffs = [
        _progression_difference(usable(col, k == 0), f"column {k}")
        for k, col in enumerate(cols)
    ]
    d = _progression_difference(row_diffs, "row-difference sequence")
    if _progression_difference(col_diffs, "column-difference sequence") != d:
        raise InputError("row and column difference gaps disagree")
    e = row_diffs[0]
    e_prime = col_diffs[0]
    if d < 2 or not 0 < e < d or not 0 < e_prime < d:
        raise InputError("recovered parameters are outside the valid range")
    if (e * e_prime) % d != 1:
        raise InputError("recovered e and e' are not inverse modulo d")
    a = (e * e_prime - 1) // d
    for l, row in enumerate(fp.entries):
        for k, x in enumerate(row):
            if x != a + l * e_prime + k * e + l * k * d:
                raise InputError("grid does not match the recovered parameters")
    return canonical_form(SurfaceDE.of(d, e))


# Cone reconstruction from a truncated root set.


def reconstruct_cone(roots: Iterable[LatticeVector | Coords], rank: int) -> Cone:
    """Rebuild the unique strongly convex cone whose truncated root set was given.

    Raises FailedSpanError when some root's translation set cannot span a
    hyperplane (enumeration box too small) and VerifyMismatchError when the
    rebuilt cone does not reproduce the input roots exactly.
    """
    if rank < 1:
        raise InputError("rank must be at least 1")
    alphas: list[Coords] = []
    seen = set()
    for r in roots:
        coords = tuple(r.coords) if isinstance(r, LatticeVector) else tuple(int(x) for x in r)
        if len(coords) != rank:
            raise InputError("root length does not match rank")
        if coords not in seen:
            seen.add(coords)
            alphas.append(coords)
    if not alphas:
        # Only the torus has an empty root set.
        return Cone(rank, ())

    bound = max(abs(x) for a in alphas for x in a)
    ray_dirs: list[Coords] = []
    for e in alphas:
        diffs = [tuple(x - y for x, y in zip(r, e)) for r in alphas if r != e]
        p = _dominant_normal(diffs, rank)
        t = dot(e, p)
        if t == 0:
            raise FailedSpanError(
                f"selected hyperplane for root {e} contains the root itself; enlarge the box"
            )
        direction = tuple((-1 if t > 0 else 1) * x for x in p)
        if direction not in ray_dirs:
            ray_dirs.append(direction)

    try:
        cone = make_cone(rank, [nvec(*d) for d in ray_dirs])
    except InputError as exc:
        raise VerifyMismatchError(f"recovered rays do not form a strongly convex cone: {exc}")
    produced = {tuple(r.alpha.coords) for r in enumerate_roots(cone, bound)}
    if produced != seen:
        raise VerifyMismatchError(
            f"reconstructed cone yields {len(produced)} roots in the box, input had {len(seen)}"
        )
    return cone


def roundtrip_reconstruct(c: Cone, start_bound: int = 8, doublings: int = 3) -> tuple[Cone, int]:
    """Enumerate roots of c and reconstruct, doubling the box on span failure."""
    bound = start_bound
    for attempt in range(doublings + 1):
        roots = [r.alpha for r in enumerate_roots(c, bound)]
        try:
            return reconstruct_cone(roots, c.rank), bound
        except FailedSpanError:
            if attempt == doublings:
                raise
            bound *= 2
    raise AssertionError("unreachable")


def _dominant_normal(diffs: Sequence[Coords], rank: int) -> Coords:
    """Primitive normal of the hyperplane through 0 holding the most difference vectors.

    Candidates are the hyperplanes spanned by (rank-1)-subsets of the nonzero
    differences; ties break toward the lexicographically smallest normal
    (sign-normalized so the first nonzero entry is positive).
    """
    points = [d for d in diffs if any(x != 0 for x in d)]
    if rank == 1:
        return (1,)
    if rank == 2:
        candidates = {_normalize_sign(primitive_tuple((d[1], -d[0]))) for d in points}
    elif rank == 3:
        candidates = _cross_candidates(points)
    else:
        candidates = set()
        for subset in combinations(points, rank - 1):
            normal = _nullspace_normal(subset, rank)
            if normal is not None:
                candidates.add(normal)
    if not candidates:
        raise FailedSpanError("translated roots do not span any hyperplane in the box")

    best: Coords | None = None
    best_count = -1
    for p in sorted(candidates):
        count = sum(1 for d in points if dot(d, p) == 0)
        if count > best_count:
            best, best_count = p, count
    assert best is not None
    return best


def _cross_candidates(points: Sequence[Coords]) -> set[Coords]:
    if len(points) < 2:
        return set()
    arr = np.asarray(points, dtype=np.int64)
    if np.abs(arr).max(initial=0) > 2**20:
        # Exactness guard for the vectorized path; fall back to pure python.
        return _pair_candidates_python(points)
    i, j = np.triu_indices(len(points), k=1)
    cross = np.cross(arr[i], arr[j])
    cross = cross[np.any(cross != 0, axis=1)]
    if cross.size == 0:
        return set()
    g = np.gcd.reduce(np.abs(cross), axis=1)
    cross //= g[:, None]
    first = np.argmax(cross != 0, axis=1)
    signs = np.sign(cross[np.arange(len(cross)), first])
    cross *= signs[:, None]
    unique = np.unique(cross, axis=0)
    return {tuple(int(x) for x in row) for row in unique}


def _pair_candidates_python(points: Sequence[Coords]) -> set[Coords]:
    out: set[Coords] = set()
    for (a1, a2, a3), (b1, b2, b3) in combinations(points, 2):
        c = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
        if c != (0, 0, 0):
            out.add(_normalize_sign(primitive_tuple(c)))
    return out


def _nullspace_normal(subset: Sequence[Coords], rank: int) -> Coords | None:
    """Primitive normal of span(subset) when the subset has rank rank-1."""
    rows = [[Fraction(x) for x in v] for v in subset]
    pivots: list[int] = []
    r = 0
    for col in range(rank):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if r != rank - 1:
        return None
    free = next(c for c in range(rank) if c not in pivots)
    sol = [Fraction(0)] * rank
    sol[free] = Fraction(1)
    for row_idx, col in enumerate(pivots):
        sol[col] = -rows[row_idx][free]
    denom = lcm(*(x.denominator for x in sol))
    ints = tuple(int(x * denom) for x in sol)
    return _normalize_sign(primitive_tuple(ints))


def _normalize_sign(p: Coords) -> Coords:
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    raise InputError("zero vector has no sign normalization")


def fingerprint_of(d: int, e: int, l_max: int, k_max: int) -> Fingerprint:
    """Convenience wrapper building the surface and its fingerprint."""
    return fingerprint(SurfaceDE.of(d, e), l_max, k_max)
