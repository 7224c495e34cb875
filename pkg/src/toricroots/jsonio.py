"""Canonical JSON encoding of the library's value types.

Output is byte-stable: keys sorted, compact separators, rationals as "p/q"
strings in lowest terms with positive denominator.  Every ``*_from`` parser
round-trips the corresponding ``*_to`` encoder.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .cone import Cone, make_cone
from .derivations import LaurentPoly
from .errors import InputError
from .identify import Fingerprint
from .lattice import IntMatrix, LatticeVector, M, N
from .roots import Root


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def fraction_to(c: Fraction) -> str:
    return str(c)


def fraction_from(s: str | int) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational: {s!r}") from exc


def vector_to(v: LatticeVector) -> list[int]:
    return list(v.coords)


def vector_from(data: Any, lattice: str = M) -> LatticeVector:
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise InputError(f"vector must be a JSON array of integers, got {data!r}")
    return LatticeVector(tuple(data), lattice)


def cone_to(c: Cone) -> dict:
    return {"rank": c.rank, "rays": [vector_to(r) for r in c.rays]}


def cone_from(data: Any) -> Cone:
    if not isinstance(data, dict) or "rank" not in data or "rays" not in data:
        raise InputError('cone JSON must be {"rank": n, "rays": [[...], ...]}')
    if not isinstance(data["rank"], int):
        raise InputError("cone rank must be an integer")
    rays = [vector_from(r, N) for r in _expect_list(data["rays"], "rays")]
    return make_cone(data["rank"], rays)


def root_to(r: Root) -> dict:
    return {"alpha": vector_to(r.alpha), "ray": r.ray_index}


def root_from(data: Any) -> Root:
    if not isinstance(data, dict) or "alpha" not in data or "ray" not in data:
        raise InputError('root JSON must be {"alpha": [...], "ray": i}')
    if not isinstance(data["ray"], int):
        raise InputError("root ray index must be an integer")
    return Root(vector_from(data["alpha"], M), data["ray"])


def roots_to(roots: list[Root]) -> list[dict]:
    return [root_to(r) for r in roots]


def root_vectors_from(data: Any) -> list[LatticeVector]:
    """Accept either bare vectors or root objects; only the weights matter."""
    out = []
    for item in _expect_list(data, "roots"):
        if isinstance(item, dict):
            out.append(root_from(item).alpha)
        else:
            out.append(vector_from(item, M))
    return out


def poly_to(f: LaurentPoly) -> dict:
    return {
        "cone": cone_to(f.cone),
        "terms": [{"m": list(m), "c": fraction_to(c)} for m, c in f.items()],
    }


def poly_from(data: Any, cone: Cone | None = None) -> LaurentPoly:
    if not isinstance(data, dict) or "terms" not in data:
        raise InputError('polynomial JSON must be {"cone": ..., "terms": [...]}')
    if cone is None:
        if "cone" not in data:
            raise InputError("polynomial JSON needs a cone")
        cone = cone_from(data["cone"])
    terms: dict[tuple[int, ...], Fraction] = {}
    for t in _expect_list(data["terms"], "terms"):
        if not isinstance(t, dict) or "m" not in t or "c" not in t:
            raise InputError('each term must be {"m": [...], "c": "p/q"}')
        m = tuple(vector_from(t["m"], M).coords)
        terms[m] = terms.get(m, Fraction(0)) + fraction_from(t["c"])
    return LaurentPoly(cone, terms)


def fingerprint_to(fp: Fingerprint) -> dict:
    return {
        "l_max": fp.l_max,
        "k_max": fp.k_max,
        "entries": [list(row) for row in fp.entries],
    }


def fingerprint_from(data: Any) -> Fingerprint:
    if not isinstance(data, dict) or not {"l_max", "k_max", "entries"} <= set(data):
        raise InputError('fingerprint JSON must be {"l_max":L,"k_max":K,"entries":[[...]]}')
    entries = tuple(
        tuple(_expect_int_list(row, "fingerprint row"))
        for row in _expect_list(data["entries"], "entries")
    )
    if not isinstance(data["l_max"], int) or not isinstance(data["k_max"], int):
        raise InputError("fingerprint bounds must be integers")
    return Fingerprint(data["l_max"], data["k_max"], entries)


def matrix_to(a: IntMatrix) -> list[list[int]]:
    return a.to_rows()


def matrix_from(data: Any) -> IntMatrix:
    rows = [_expect_int_list(r, "matrix row") for r in _expect_list(data, "matrix")]
    return IntMatrix.from_rows(rows)


def _expect_list(data: Any, what: str) -> list:
    if not isinstance(data, list):
        raise InputError(f"{what} must be a JSON array")
    return data


def _expect_int_list(data: Any, what: str) -> list[int]:
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise InputError(f"{what} must be a JSON array of integers")
    return data
