"""Batch command-line front end with deterministic JSON input and output.

Every flag taking structured data accepts inline JSON or ``@path`` to read a
file.  Output is canonical JSON (sorted keys, compact separators) followed by
a newline, so golden-file comparisons are byte exact.  Exit codes: 0 success,
2 input error, 3 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .derivations import LaurentPoly, commutes, exp_lnd
from .errors import FailedSpanError, InputError, ToricError, VerifyMismatchError
from .identify import fingerprint, recover_de, reconstruct_cone
from .lattice import LatticeVector, M
from .quotient import SurfaceDE, canonical_form, iso_test
from .roots import Root, enumerate_roots, is_root
from .cone import hilbert_basis_2d
from .torsion import finite_order


def _read_arg(raw: str):
    """Parse inline JSON, or the JSON contents of a file given as @path."""
    if raw.startswith("@"):
        try:
            with open(raw[1:], "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {raw[1:]}: {exc}")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}")


def _parse_de(raw: str) -> SurfaceDE:
    parts = raw.split(",")
    if len(parts) != 2:
        raise InputError(f"expected d,e — got {raw!r}")
    try:
        d, e = (int(p) for p in parts)
    except ValueError:
        raise InputError(f"expected integers d,e — got {raw!r}")
    return SurfaceDE.of(d, e)


def _cmd_roots(args) -> object:
    cone = jsonio.cone_from(_read_arg(args.cone))
    if args.bound < 0:
        raise InputError("--bound must be nonnegative")
    return jsonio.roots_to(enumerate_roots(cone, args.bound))


def _cmd_reconstruct(args) -> object:
    vectors = jsonio.root_vectors_from(_read_arg(args.roots))
    return jsonio.cone_to(reconstruct_cone(vectors, args.rank))


def _cmd_fingerprint(args) -> object:
    surface = SurfaceDE.of(args.d, args.e)
    return jsonio.fingerprint_to(fingerprint(surface, args.lmax, args.kmax))


def _cmd_identify(args) -> object:
    fp = jsonio.fingerprint_from(_read_arg(args.fingerprint))
    d, e = recover_de(fp)
    return {"d": d, "e": e}


def _cmd_iso(args) -> object:
    return {"isomorphic": iso_test(_parse_de(args.a), _parse_de(args.b))}


def _cmd_canon(args) -> object:
    d, e = canonical_form(_parse_de(args.a))
    return {"d": d, "e": e}


def _cmd_exp(args) -> object:
    cone = jsonio.cone_from(_read_arg(args.cone))
    alpha = jsonio.vector_from(_read_arg(args.root), M)
    root = Root(alpha, args.ray)
    if is_root(cone, alpha) != args.ray:
        raise InputError("--root/--ray is not a root of the cone")
    s = jsonio.fraction_from(args.s)
    poly = jsonio.poly_from(_read_arg(args.poly), cone)
    return jsonio.poly_to(exp_lnd(root, s, poly))


def _cmd_commute(args) -> object:
    cone = jsonio.cone_from(_read_arg(args.cone))
    r1 = jsonio.root_from(_read_arg(args.r1))
    r2 = jsonio.root_from(_read_arg(args.r2))
    return {"commute": commutes(cone, r1, r2)}


def _cmd_hilbert(args) -> object:
    cone = jsonio.cone_from(_read_arg(args.cone))
    return [jsonio.vector_to(v) for v in hilbert_basis_2d(cone)]


def _cmd_order(args) -> object:
    matrix = jsonio.matrix_from(_read_arg(args.matrix))
    return {"order": finite_order(matrix)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricroots",
        description="Exact toolkit for Demazure roots, cyclic-quotient surfaces, "
        "and root-set identification of affine toric varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="enumerate roots of a cone inside a coordinate box")
    p.add_argument("--cone", required=True, help="cone JSON or @file")
    p.add_argument("--bound", required=True, type=int, help="max |coordinate|")
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("reconstruct", help="rebuild a cone from its truncated root set")
    p.add_argument("--roots", required=True, help="roots JSON (vectors or objects) or @file")
    p.add_argument("--rank", required=True, type=int)
    p.set_defaults(fn=_cmd_reconstruct)

    p = sub.add_parser("fingerprint", help="kernel-order grid of the surface X_{d,e}")
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--e", required=True, type=int)
    p.add_argument("--lmax", required=True, type=int)
    p.add_argument("--kmax", required=True, type=int)
    p.set_defaults(fn=_cmd_fingerprint)

    p = sub.add_parser("identify", help="recover canonical (d, e) from a fingerprint")
    p.add_argument("--fingerprint", required=True, help="fingerprint JSON or @file")
    p.set_defaults(fn=_cmd_identify)

    p = sub.add_parser("iso", help="isomorphism test for two surfaces")
    p.add_argument("--a", required=True, metavar="d,e")
    p.add_argument("--b", required=True, metavar="d,e")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("canon", help="canonical representative of a surface")
    p.add_argument("--a", required=True, metavar="d,e")
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("exp", help="apply the exponential of a root derivation")
    p.add_argument("--cone", required=True)
    p.add_argument("--root", required=True, help="root weight vector JSON")
    p.add_argument("--ray", required=True, type=int, help="distinguished ray index")
    p.add_argument("--s", required=True, help="parameter, rational p/q")
    p.add_argument("--poly", required=True, help="polynomial JSON or @file")
    p.set_defaults(fn=_cmd_exp)

    p = sub.add_parser("commute", help="do two root derivations commute")
    p.add_argument("--cone", required=True)
    p.add_argument("--r1", required=True, help="root JSON")
    p.add_argument("--r2", required=True, help="root JSON")
    p.set_defaults(fn=_cmd_commute)

    p = sub.add_parser("hilbert", help="Hilbert basis of the dual monoid (rank 2)")
    p.add_argument("--cone", required=True)
    p.set_defaults(fn=_cmd_hilbert)

    p = sub.add_parser("order", help="finite order of a unimodular integer matrix")
    p.add_argument("--matrix", required=True, help="matrix JSON or @file")
    p.set_defaults(fn=_cmd_order)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.fn(args)
    except VerifyMismatchError as exc:
        print(jsonio.dumps({"error": exc.code, "detail": str(exc)}))
        return 3
    except (InputError, FailedSpanError) as exc:
        print(jsonio.dumps({"error": exc.code, "detail": str(exc)}))
        return 2
    except ToricError as exc:
        print(jsonio.dumps({"error": exc.code, "detail": str(exc)}))
        return 2
    print(jsonio.dumps(payload))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
