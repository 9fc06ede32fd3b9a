"""JSON encoding for all library objects.

Rationals are strings "p/q" (the "/q" omitted when q = 1); elements are
{basisIndex: rational}; subspaces are row-major RREF matrices; tensors
are lists of [i, j(, k), rational] entries sorted lexicographically;
roots travel in simple-root coordinates.
"""

from fractions import Fraction

from .algebra import (DomainError, LieElement, Subspace, build_algebra, span)
from .reductive import RootSubset
from .tensor import Tensor2, Tensor3


def rational_to_json(v):
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return "%d/%d" % (v.numerator, v.denominator)


def rational_from_json(s):
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError):
        raise DomainError("bad rational: %r" % (s,))


def algebra_to_json(g):
    return g.name


def algebra_from_json(name):
    name = str(name)
    if len(name) < 2 or not name[1:].isdigit():
        raise DomainError("bad algebra id: %r" % (name,))
    return build_algebra(name[0], int(name[1:]))


def element_to_json(x):
    return {str(i): rational_to_json(v) for i, v in sorted(x.coords.items())}


def element_from_json(obj):
    return LieElement({int(i): rational_from_json(v) for i, v in obj.items()})


def subspace_to_json(s):
    return [[rational_to_json(v) for v in row] for row in s.rows]


def subspace_from_json(rows, ambient_dim):
    return span(ambient_dim,
                [[rational_from_json(v) for v in row] for row in rows])


def tensor2_to_json(t):
    return [[i, j, rational_to_json(v)] for (i, j), v in t.items_sorted()]


def tensor2_from_json(g, entries):
    coeffs = {}
    for e in entries:
        if len(e) != 3:
            raise DomainError("tensor entry must be [i, j, rational]")
        coeffs[(int(e[0]), int(e[1]))] = rational_from_json(e[2])
    return Tensor2(g, coeffs)


def tensor3_to_json(t):
    return [[i, j, k, rational_to_json(v)] for (i, j, k), v in t.items_sorted()]


def root_to_json(g, root):
    return [int(c) for c in g.root_to_simple(root)]


def root_from_json(g, coords):
    return g.simple_to_root(tuple(int(c) for c in coords))


def root_subset_to_json(s):
    return [root_to_json(s.algebra, r) for r in s.roots]


def root_subset_from_json(g, items):
    return RootSubset(g, [root_from_json(g, c) for c in items])


def dual_subspace_to_json(g, l):
    return {"gDim": g.dim, "matrix": subspace_to_json(l)}


def dual_subspace_from_json(g, obj):
    if int(obj.get("gDim", -1)) != g.dim:
        raise DomainError("dual subspace gDim does not match the algebra")
    return subspace_from_json(obj["matrix"], 2 * g.dim)


def pair_to_json(g, pair):
    return {
        "n": subspace_to_json(pair.n),
        "basis": [element_to_json(x) for x in pair.basis],
        "B": [[rational_to_json(v) for v in row] for row in pair.b],
    }


def pair_from_json(g, obj):
    from .dualnum import SubalgebraPair
    n = subspace_from_json(obj["n"], g.dim)
    basis = [element_from_json(x) for x in obj["basis"]]
    b = [[rational_from_json(v) for v in row] for row in obj["B"]]
    return SubalgebraPair(g, n, b, basis=basis)
