"""Exact integer lattice arithmetic shared by all modules.

Vectors are tagged with the lattice they live in: ``M`` (characters) or
``N`` (one-parameter subgroups).  The tag is advisory metadata; ``pairing``
checks it to catch transposed arguments early.  All arithmetic is on Python
integers, so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import InputError

M = "M"
N = "N"


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple[int, ...]
    lattice: str = M

    def __post_init__(self) -> None:
        if self.lattice not in (M, N):
            raise InputError(f"unknown lattice tag {self.lattice!r}")
        if not all(isinstance(c, int) for c in self.coords):
            raise InputError("lattice vector coordinates must be integers")

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        self._check_compatible(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        self._check_compatible(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords), self.lattice)

    def scale(self, k: int) -> "LatticeVector":
        return LatticeVector(tuple(k * a for a in self.coords), self.lattice)

    def _check_compatible(self, other: "LatticeVector") -> None:
        if self.lattice != other.lattice:
            raise InputError("cannot combine vectors from different lattices")
        if len(self.coords) != len(other.coords):
            raise InputError("length mismatch")


def mvec(*coords: int) -> LatticeVector:
    """Character-lattice vector."""
    return LatticeVector(tuple(coords), M)


def nvec(*coords: int) -> LatticeVector:
    """One-parameter-lattice vector."""
    return LatticeVector(tuple(coords), N)


def pairing(m: LatticeVector, p: LatticeVector) -> int:
    """Duality pairing of an M-vector with an N-vector: sum of m_i * p_i."""
    if m.lattice != M or p.lattice != N:
        raise InputError("pairing takes an M-vector and an N-vector, in that order")
    if len(m.coords) != len(p.coords):
        raise InputError("length mismatch in pairing")
    return sum(a * b for a, b in zip(m.coords, p.coords))


def dot(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Plain integer dot product on raw coordinate tuples."""
    if len(a) != len(b):
        raise InputError("length mismatch")
    return sum(x * y for x, y in zip(a, b))


def primitive(v: LatticeVector) -> LatticeVector:
    """Divide a nonzero vector by the gcd of its entries (sign preserved)."""
    if v.is_zero:
        raise InputError("the zero vector has no primitive representative")
    g = 0
    for c in v.coords:
        g = gcd(g, c)
    return LatticeVector(tuple(c // g for c in v.coords), v.lattice)


def primitive_tuple(coords: tuple[int, ...]) -> tuple[int, ...]:
    """Tuple-level primitivization used by internal scans."""
    g = 0
    for c in coords:
        g = gcd(g, c)
    if g == 0:
        raise InputError("the zero vector has no primitive representative")
    return tuple(c // g for c in coords)


def det2(a: LatticeVector, b: LatticeVector) -> int:
    """Determinant of the 2x2 matrix with rows a and b."""
    if len(a.coords) != 2 or len(b.coords) != 2:
        raise InputError("det2 requires vectors of length 2")
    return a.coords[0] * b.coords[1] - a.coords[1] * b.coords[0]


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix with arbitrary-precision entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise InputError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise InputError("entry count does not match matrix shape")
        if not all(isinstance(e, int) for e in self.entries):
            raise InputError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "IntMatrix":
        if not rows or not rows[0]:
            raise InputError("matrix needs at least one row and one column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise InputError("ragged rows in matrix")
        flat = tuple(int(e) for r in rows for e in r)
        return cls(len(rows), ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError("matrix shapes do not compose")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.entry(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __pow__(self, k: int) -> "IntMatrix":
        if self.rows != self.cols:
            raise InputError("only square matrices can be raised to a power")
        if k < 0:
            raise InputError("negative powers are not supported")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def mod(self, p: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(e % p for e in self.entries))

    def det(self) -> int:
        """Determinant by cofactor expansion; exact, intended for small n."""
        if self.rows != self.cols:
            raise InputError("determinant of a non-square matrix")
        return _det_rows(self.to_rows())


def _det_rows(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    sign = 1
    for j in range(n):
        if rows[0][j] != 0:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += sign * rows[0][j] * _det_rows(minor)
        sign = -sign
    return total
