"""Exact combinatorics of torus actions on affine toric varieties.

The package covers: integer lattice arithmetic with the M/N duality pairing,
strongly convex rational polyhedral cones with dual-cone data, Demazure root
enumeration, homogeneous locally nilpotent derivations with their exponential
automorphisms, cyclic-quotient surface models X_{d,e}, the kernel-order
fingerprint that identifies such a surface, reconstruction of a cone from its
root set, and finite-order tests in GL_n(Z).  Everything is exact: integers,
rationals, and equality tests only.
"""

from .cone import Cone, dual_contains, dual_rays_2d, hilbert_basis_2d, make_cone
from .derivations import (
    LaurentPoly,
    TorusPoint,
    char_value,
    commutes,
    delta_apply,
    exp_lnd,
    nilpotency_index,
    poly_mul,
    torus_act,
)
from .errors import FailedSpanError, InputError, ToricError, VerifyMismatchError
from .identify import (
    Fingerprint,
    fingerprint,
    fingerprint_of,
    kernel_order,
    reconstruct_cone,
    recover_de,
    roundtrip_reconstruct,
)
from .lattice import IntMatrix, LatticeVector, det2, mvec, nvec, pairing, primitive
from .quotient import (
    MonoidConeMatch,
    SurfaceDE,
    canonical_form,
    eprime_a,
    invariant_member,
    iso_test,
    monoid_matches_cone,
)
from .roots import Root, enumerate_roots, group_by_ray, is_root, roots_of_xde
from .torsion import MonomialAut, finite_order, is_algebraic_monomial, order_mod_p

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "Fingerprint",
    "FailedSpanError",
    "InputError",
    "IntMatrix",
    "LatticeVector",
    "LaurentPoly",
    "MonoidConeMatch",
    "MonomialAut",
    "Root",
    "SurfaceDE",
    "ToricError",
    "TorusPoint",
    "VerifyMismatchError",
    "canonical_form",
    "char_value",
    "commutes",
    "delta_apply",
    "det2",
    "dual_contains",
    "dual_rays_2d",
    "enumerate_roots",
    "eprime_a",
    "exp_lnd",
    "fingerprint",
    "fingerprint_of",
    "finite_order",
    "group_by_ray",
    "hilbert_basis_2d",
    "invariant_member",
    "is_algebraic_monomial",
    "is_root",
    "iso_test",
    "kernel_order",
    "make_cone",
    "monoid_matches_cone",
    "mvec",
    "nilpotency_index",
    "nvec",
    "order_mod_p",
    "pairing",
    "poly_mul",
    "primitive",
    "reconstruct_cone",
    "recover_de",
    "roots_of_xde",
    "roundtrip_reconstruct",
    "torus_act",
]
