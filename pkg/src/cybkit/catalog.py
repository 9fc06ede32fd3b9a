"""Catalog generation: all classified structures for a pair (algebra, U).

One entry per reductive subset N containing U with its deterministic
regular witness h, carrying the diagonal r-matrix, the Lagrangian
subspace, the (n, B) pair, and a digest of every verification oracle.
Generation is deterministic, so two runs produce identical files.
"""

from dataclasses import dataclass

from .algebra import Subspace, subspace_intersect
from .dualnum import (build_root_space_lagrangian, coboundary_pair,
                      embed_g, is_lagrangian_subalgebra,
                      lagrangian_from_bivector, pair_to_lagrangian)
from .rmatrix import (build_diagonal, classify_coefficients,
                      coefficients_from_tensor, in_moduli)
from .reductive import (RootSubset, enumerate_reductive, regular_element,
                        subalgebra_from_subset)
from . import serialize


@dataclass(frozen=True)
class CatalogEntry:
    subset_n: RootSubset
    h: object
    candidate: object
    lagrangian: Subspace
    pair: object
    digest: dict


def build_entry(g, u_set, n_set, h):
    cand = build_diagonal(n_set, h, u_set)
    lag = build_root_space_lagrangian(n_set, h, u_set, sign=-1)
    pair = coboundary_pair(g, subalgebra_from_subset(n_set), -h)
    lag_pair = pair_to_lagrangian(g, pair)
    lag_biv = lagrangian_from_bivector(u_set, cand.tensor)
    verdict = is_lagrangian_subalgebra(g, lag)
    cls = classify_coefficients(
        g, coefficients_from_tensor(cand.tensor, u_set), u_set)
    u_sub = subalgebra_from_subset(u_set)
    digest = {
        "inModuli": in_moduli(cand),
        "lagrangianIsotropic": verdict.isotropic,
        "lagrangianDimension": verdict.dimension_ok,
        "lagrangianSubalgebra": verdict.subalgebra,
        "constructionsAgree": lag == lag_pair == lag_biv,
        "gIntersectionIsU": subspace_intersect(
            lag, embed_g(g, _full(g))) == embed_g(g, u_sub),
        "classificationRoundtrip": _roundtrip_ok(g, cls, n_set, h),
    }
    return CatalogEntry(n_set, h, cand, lag, pair, digest)


def _full(g):
    from .algebra import span, LieElement
    return span(g.dim, [LieElement.basis(i).to_vector(g.dim)
                        for i in range(g.dim)])


def _roundtrip_ok(g, cls, n_set, h):
    if not cls.accepted or cls.subset_n != n_set:
        return False
    return all(g.root_value(r, cls.h) == g.root_value(r, h)
               for r in n_set.roots)


def build_catalog(g, u_set):
    entries = []
    for n_set in enumerate_reductive(g, u_set):
        h = regular_element(n_set, u_set)
        if h is None:
            continue
        entries.append(build_entry(g, u_set, n_set, h))
    return entries


def catalog_to_json(g, u_set, entries):
    return {
        "algebra": serialize.algebra_to_json(g),
        "U": serialize.root_subset_to_json(u_set),
        "entries": [
            {
                "N": serialize.root_subset_to_json(e.subset_n),
                "h": serialize.element_to_json(e.h),
                "tensor": serialize.tensor2_to_json(e.candidate.tensor),
                "lagrangian": serialize.dual_subspace_to_json(g, e.lagrangian),
                "pair": serialize.pair_to_json(g, e.pair),
                "digest": dict(sorted(e.digest.items())),
            }
            for e in entries
        ],
    }


def verify_catalog_json(doc):
    """Re-run every oracle on a serialized catalog; returns (ok, report)."""
    from .rmatrix import RMatrixCandidate
    g = serialize.algebra_from_json(doc["algebra"])
    u_set = serialize.root_subset_from_json(g, doc["U"])
    lines = []
    ok = True
    for idx, entry in enumerate(doc.get("entries", [])):
        n_set = serialize.root_subset_from_json(g, entry["N"])
        h = serialize.element_from_json(entry["h"])
        tensor = serialize.tensor2_from_json(g, entry["tensor"])
        lag = serialize.dual_subspace_from_json(g, entry["lagrangian"])
        pair = serialize.pair_from_json(g, entry["pair"])
        rebuilt = build_entry(g, u_set, n_set, h)
        checks = {
            "tensorMatches": rebuilt.candidate.tensor == tensor,
            "lagrangianMatches": rebuilt.lagrangian == lag,
            "pairMatches": (rebuilt.pair.n == pair.n
                            and rebuilt.pair.b == pair.b),
            "inModuli": in_moduli(RMatrixCandidate(tensor, u_set)),
        }
        checks.update(rebuilt.digest)
        for name, value in sorted(checks.items()):
            lines.append("entry %d %s: %s" % (idx, name,
                                              "ok" if value else "FAIL"))
            ok = ok and bool(value)
    return ok, lines
