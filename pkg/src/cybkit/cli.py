"""Command-line front door.

Exit codes: 0 on success, 1 for usage/parse problems, 2 when a
verification fails.  The CYBKIT_OUTPUT_DIR environment variable, when
set, is prepended to relative output paths.
"""

import argparse
import json
import os
import sys

from .algebra import CybkitError, DomainError
from .catalog import build_catalog, catalog_to_json, verify_catalog_json
from .dualnum import (build_root_space_lagrangian, classify_pair,
                      is_lagrangian_subalgebra, lagrangian_from_bivector,
                      lagrangian_to_pair, pair_to_lagrangian, PairRejection)
from .dynconst import build_example, verify_example
from .reductive import RootSubset, enumerate_reductive, regular_element
from .rmatrix import (RMatrixCandidate, build_diagonal,
                      classify_coefficients, coefficients_from_tensor,
                      in_invariant_wedge, in_moduli)
from .twist import (cobracket_from_r, twist_residual_general,
                    twist_residual_triangular)
from . import serialize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class UsageError(Exception):
    pass


def _parse_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("bad %s JSON at position %d: %s"
                         % (what, exc.pos, exc.msg))


def _load_file(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(str(exc))
    except json.JSONDecodeError as exc:
        raise UsageError("%s: bad JSON at position %d: %s"
                         % (path, exc.pos, exc.msg))


def _out_path(path):
    base = os.environ.get("CYBKIT_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _algebra(name):
    try:
        return serialize.algebra_from_json(name)
    except CybkitError as exc:
        raise UsageError(str(exc))


def _subset(g, text):
    return serialize.root_subset_from_json(g, _parse_json(text, "root list"))


def _cartan(g, spec):
    from fractions import Fraction
    if spec == "auto":
        return None
    try:
        diag = [Fraction(v) for v in spec.split(",")]
    except ValueError:
        raise UsageError("bad Cartan element: %r" % (spec,))
    return g.cartan_element_from_diagonal(diag)


def _emit(doc, output):
    text = json.dumps(doc, indent=2, sort_keys=True)
    if output:
        path = _out_path(output)
        with open(path, "w") as fh:
            fh.write(text + "\n")
        print("wrote %s" % path)
    else:
        print(text)


def cmd_info(args):
    g = _algebra(args.algebra)
    print("algebra %s: dim %d, %d roots" % (g.name, g.dim, len(g.roots)))
    for r in g.roots:
        print("  %s" % json.dumps(serialize.root_to_json(g, r)))
    return EXIT_OK


def cmd_reductive(args):
    g = _algebra(args.algebra)
    contains = _subset(g, args.contains)
    subsets = enumerate_reductive(g, contains)
    print(json.dumps([serialize.root_subset_to_json(s) for s in subsets]))
    return EXIT_OK


def cmd_rmatrix_build(args):
    g = _algebra(args.algebra)
    u_set = _subset(g, args.U)
    n_set = _subset(g, args.N)
    h = _cartan(g, args.h)
    if h is None:
        h = regular_element(n_set, u_set)
        if h is None:
            print("no regular element exists for this (N, U)",
                  file=sys.stderr)
            return EXIT_VERIFY
    cand = build_diagonal(n_set, h, u_set)
    _emit({
        "algebra": g.name,
        "U": serialize.root_subset_to_json(u_set),
        "N": serialize.root_subset_to_json(n_set),
        "h": serialize.element_to_json(h),
        "tensor": serialize.tensor2_to_json(cand.tensor),
    }, args.output)
    return EXIT_OK


def cmd_rmatrix_verify(args):
    doc = _load_file(args.file)
    g = _algebra(doc["algebra"])
    u_set = serialize.root_subset_from_json(g, doc["U"])
    tensor = serialize.tensor2_from_json(g, doc["tensor"])
    cand = RMatrixCandidate(tensor, u_set)
    wedge_ok = in_invariant_wedge(tensor, u_set)
    moduli_ok = in_moduli(cand)
    f = coefficients_from_tensor(tensor, u_set)
    cls = classify_coefficients(g, f, u_set) if f is not None else None
    print("invariant wedge membership: %s" % ("ok" if wedge_ok else "FAIL"))
    print("moduli membership (both oracles): %s"
          % ("ok" if moduli_ok else "FAIL"))
    if cls is not None:
        print("coefficient classification: %s"
              % ("accepted" if cls.accepted else "rejected (%s)" % cls.reason))
    return EXIT_OK if wedge_ok and moduli_ok else EXIT_VERIFY


def cmd_lagrangian(args):
    g = _algebra(args.algebra)
    if args.lag_cmd == "build-from-pair":
        doc = _load_file(args.file)
        pair = serialize.pair_from_json(g, doc)
        lag = pair_to_lagrangian(g, pair)
        _emit(serialize.dual_subspace_to_json(g, lag), args.output)
        return EXIT_OK
    if args.lag_cmd == "build-lnb":
        u_set = _subset(g, args.U)
        n_set = _subset(g, args.N)
        h = _cartan(g, args.h)
        if h is None:
            h = regular_element(n_set, u_set)
            if h is None:
                print("no regular element exists", file=sys.stderr)
                return EXIT_VERIFY
        lag = build_root_space_lagrangian(n_set, h, u_set, sign=args.sign)
        _emit(serialize.dual_subspace_to_json(g, lag), args.output)
        return EXIT_OK
    if args.lag_cmd == "from-bivector":
        u_set = _subset(g, args.U)
        doc = _load_file(args.file)
        tensor = serialize.tensor2_from_json(g, doc["tensor"]
                                             if "tensor" in doc else doc)
        lag = lagrangian_from_bivector(u_set, tensor)
        _emit(serialize.dual_subspace_to_json(g, lag), args.output)
        return EXIT_OK
    if args.lag_cmd == "to-pair":
        lag = serialize.dual_subspace_from_json(g, _load_file(args.file))
        pair = lagrangian_to_pair(g, lag)
        _emit(serialize.pair_to_json(g, pair), args.output)
        return EXIT_OK
    if args.lag_cmd == "verify":
        lag = serialize.dual_subspace_from_json(g, _load_file(args.file))
        verdict = is_lagrangian_subalgebra(g, lag)
        print("isotropic: %s" % ("ok" if verdict.isotropic else "FAIL"))
        print("dimension: %s" % ("ok" if verdict.dimension_ok else "FAIL"))
        print("subalgebra: %s" % ("ok" if verdict.subalgebra else "FAIL"))
        return EXIT_OK if verdict.all_true else EXIT_VERIFY
    raise UsageError("unknown lagrangian subcommand")


def cmd_twist_check(args):
    rho_doc = _load_file(args.rho)
    s_doc = _load_file(args.s)
    g = _algebra(rho_doc["algebra"])
    rho = serialize.tensor2_from_json(g, rho_doc["tensor"])
    s = serialize.tensor2_from_json(g, s_doc["tensor"])
    delta = cobracket_from_r(rho)
    res_gen = twist_residual_general(delta, s)
    res_tri = twist_residual_triangular(rho, s)
    print("general condition: %s" % ("ok" if res_gen.is_zero() else "FAIL"))
    print("coboundary condition: %s" % ("ok" if res_tri.is_zero() else "FAIL"))
    if not res_tri.is_zero():
        print("residual: %s"
              % json.dumps(serialize.tensor3_to_json(res_tri)))
    return EXIT_OK if res_gen.is_zero() and res_tri.is_zero() else EXIT_VERIFY


def cmd_example(args):
    from fractions import Fraction
    try:
        hvals = [Fraction(v) for v in args.h.split(",")]
    except ValueError:
        raise UsageError("bad h values: %r" % (args.h,))
    e = build_example(args.n, hvals)
    report = verify_example(e)
    print("preconditions: %s"
          % ("ok" if report.preconditions.all_true else "FAIL"))
    print("projection matches closed form: %s"
          % ("ok" if report.projection_matches_closed_form else "FAIL"))
    print("closed form solves CYBE: %s"
          % ("ok" if report.closed_form_solves_cybe else "FAIL"))
    if args.dump:
        _emit({
            "algebra": e.algebra.name,
            "r0": serialize.tensor2_to_json(e.r0),
            "expected": serialize.tensor2_to_json(e.expected_v),
        }, args.dump)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_catalog(args):
    g = _algebra(args.algebra)
    u_set = _subset(g, args.U)
    entries = build_catalog(g, u_set)
    _emit(catalog_to_json(g, u_set, entries), args.output)
    return EXIT_OK


def cmd_verify(args):
    doc = _load_file(args.file)
    if "entries" in doc:
        ok, lines = verify_catalog_json(doc)
        for line in lines:
            print(line)
        return EXIT_OK if ok else EXIT_VERIFY
    if "tensor" in doc and "U" in doc:
        return cmd_rmatrix_verify(args)
    raise UsageError("unrecognized file format: %s" % args.file)


def make_parser():
    p = _Parser(prog="cybkit", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("info")
    sp.add_argument("algebra")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("reductive")
    sp.add_argument("algebra")
    sp.add_argument("--contains", default="[]")
    sp.set_defaults(func=cmd_reductive)

    rp = sub.add_parser("rmatrix")
    rsub = rp.add_subparsers(dest="rm_cmd", required=True)
    sp = rsub.add_parser("build")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--U", default="[]")
    sp.add_argument("--N", required=True)
    sp.add_argument("--h", default="auto")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_rmatrix_build)
    sp = rsub.add_parser("verify")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_rmatrix_verify)

    lp = sub.add_parser("lagrangian")
    lsub = lp.add_subparsers(dest="lag_cmd", required=True)
    for name in ("build-from-pair", "to-pair", "verify"):
        sp = lsub.add_parser(name)
        sp.add_argument("--algebra", required=True)
        sp.add_argument("file")
        if name != "verify":
            sp.add_argument("--output")
        sp.set_defaults(func=cmd_lagrangian)
    sp = lsub.add_parser("build-lnb")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--U", default="[]")
    sp.add_argument("--N", required=True)
    sp.add_argument("--h", default="auto")
    sp.add_argument("--sign", type=int, choices=(1, -1), default=1)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_lagrangian)
    sp = lsub.add_parser("from-bivector")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--U", default="[]")
    sp.add_argument("file")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_lagrangian)

    tp = sub.add_parser("twist")
    tsub = tp.add_subparsers(dest="tw_cmd", required=True)
    sp = tsub.add_parser("check")
    sp.add_argument("--rho", required=True)
    sp.add_argument("--s", required=True)
    sp.set_defaults(func=cmd_twist_check)

    ep = sub.add_parser("example")
    esub = ep.add_subparsers(dest="ex_cmd", required=True)
    sp = esub.add_parser("appendix-b")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--dump")
    sp.set_defaults(func=cmd_example)

    sp = sub.add_parser("catalog")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--U", default="[]")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("verify")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_verify)

    return p


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except CybkitError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
