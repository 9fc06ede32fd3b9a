"""The dual-number double g[eps] and its Lagrangian subalgebras.

g[eps] = g + g*eps with eps^2 = 0 carries the split invariant form
<a + b eps, c + d eps> = <a, d> + <b, c>.  Subspaces live in the
2*dim(g)-dimensional ambient with g-coordinates first, eps-coordinates
second, always in canonical RREF.  The module realizes the bijection
between Lagrangian subalgebras and pairs (n, B) of a subalgebra with a
skew 2-cocycle, the explicit root-space Lagrangians, and the base-point
subspace attached to a bivector on g/u.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import (DomainError, LieElement, StructuralError, Subspace,
                      is_subalgebra, perp, span, subspace_intersect,
                      subspace_sum)
from .linalg import ZERO, nullspace, solve
from .reductive import (RootSubset, complement_from_subset, is_reductive,
                        subalgebra_from_subset, verify_regular)
from .tensor import Tensor2, is_skew


@dataclass(frozen=True)
class DualElement:
    """a + b*eps with a, b in g."""
    a: LieElement
    b: LieElement

    def to_vector(self, g):
        return self.a.to_vector(g.dim) + self.b.to_vector(g.dim)

    @staticmethod
    def from_vector(g, vec):
        return DualElement(LieElement.from_vector(vec[:g.dim]),
                           LieElement.from_vector(vec[g.dim:]))


def dual_bracket(g, x, y):
    """[a + b eps, c + d eps] = [a,c] + ([a,d] + [b,c]) eps."""
    return DualElement(g.bracket(x.a, y.a),
                       g.bracket(x.a, y.b) + g.bracket(x.b, y.a))


def dual_form(g, x, y):
    return g.form(x.a, y.b) + g.form(x.b, y.a)


def dual_span(g, elements):
    return span(2 * g.dim, [e.to_vector(g) for e in elements])


def g_part_subspace(g, l):
    """Projection of l onto g along g*eps, as a subspace of g."""
    return span(g.dim, [row[:g.dim] for row in l.rows])


def eps_lines(g, s):
    """The subspace s*eps of g[eps] for a subspace s of g."""
    zero = [ZERO] * g.dim
    return span(2 * g.dim, [zero + list(row) for row in s.rows])


def embed_g(g, s):
    """A subspace s of g viewed inside g[eps] with zero eps-part."""
    zero = [ZERO] * g.dim
    return span(2 * g.dim, [list(row) + zero for row in s.rows])


@dataclass(frozen=True)
class LagrangianVerdict:
    isotropic: bool
    dimension_ok: bool
    subalgebra: bool

    @property
    def all_true(self):
        return self.isotropic and self.dimension_ok and self.subalgebra


def is_lagrangian_subalgebra(g, l):
    """Three independent checks: isotropy, dimension, bracket closure."""
    if l.ambient_dim != 2 * g.dim:
        raise StructuralError("subspace does not live in g[eps]")
    elems = [DualElement.from_vector(g, row) for row in l.rows]
    isotropic = all(dual_form(g, x, y) == 0
                    for i, x in enumerate(elems) for y in elems[i:])
    dimension_ok = l.dim == g.dim
    subalgebra = all(
        l.contains(dual_bracket(g, x, y).to_vector(g))
        for i, x in enumerate(elems) for y in elems[i:])
    return LagrangianVerdict(isotropic, dimension_ok, subalgebra)


class SubalgebraPair:
    """(n, B): a subalgebra of g with a skew 2-cocycle matrix on it.

    B is stored relative to the explicit ordered basis recorded in the
    pair (the RREF rows of n unless another basis is supplied).
    """

    def __init__(self, g, n, b_matrix, basis=None, check=True):
        self.algebra = g
        self.n = n
        self.basis = ([LieElement.from_vector(r) for r in n.rows]
                      if basis is None else list(basis))
        self.b = [[Fraction(v) for v in row] for row in b_matrix]
        if len(self.basis) != n.dim or len(self.b) != n.dim:
            raise StructuralError("B size does not match dim n")
        self._coord_cache = {}
        if check:
            self.validate()

    def validate(self):
        g = self.algebra
        if not is_subalgebra(g, self.n):
            raise DomainError("n is not a subalgebra")
        k = self.n.dim
        for i in range(k):
            for j in range(k):
                if self.b[i][j] != -self.b[j][i]:
                    raise DomainError("B is not skew")
        # coordinates of [basis_i, basis_j], solved once per pair; the
        # cocycle sum then reduces to lookups in the stored matrix
        br = {}
        for i in range(k):
            for j in range(i + 1, k):
                c = self.coords(g.bracket(self.basis[i], self.basis[j]))
                br[(i, j)] = c
                br[(j, i)] = [-v for v in c]
        zero = [ZERO] * k
        rows = {}
        for i in range(k):
            rows[(i, i)] = zero
            for j in range(i + 1, k):
                c = br[(i, j)]
                row = [sum(c[m] * self.b[m][l]
                           for m in range(k) if c[m] != 0)
                       for l in range(k)]
                rows[(i, j)] = row
                rows[(j, i)] = [-v for v in row]
        for i in range(k):
            for j in range(i + 1, k):
                for l in range(k):
                    s = rows[(i, j)][l] + rows[(j, l)][i] + rows[(l, i)][j]
                    if s != 0:
                        raise DomainError("B is not a 2-cocycle")

    def coords(self, x):
        c = self._coords_in_basis(x)
        if c is None:
            raise DomainError("element outside n")
        return c

    def _coords_in_basis(self, x):
        cached = self._coord_cache.get(x)
        if cached is not None:
            return list(cached)
        g = self.algebra
        rows = [b.to_vector(g.dim) for b in self.basis]
        cols = [[rows[r][c] for r in range(len(rows))] for c in range(g.dim)]
        out = solve(cols, x.to_vector(g.dim))
        if out is not None:
            self._coord_cache[x] = tuple(out)
        return out

    def b_value(self, x, y):
        cx = self.coords(x)
        cy = self.coords(y)
        total = ZERO
        for i, a in enumerate(cx):
            if a == 0:
                continue
            for j, c in enumerate(cy):
                total += a * c * self.b[i][j]
        return total

    def kernel(self):
        """Ker B as a subspace of g."""
        g = self.algebra
        ker_coords = nullspace(self.b, self.n.dim) if self.n.dim else []
        vecs = []
        for k in ker_coords:
            v = [ZERO] * g.dim
            for i, c in enumerate(k):
                if c != 0:
                    bv = self.basis[i].to_vector(g.dim)
                    v = [a + c * b for a, b in zip(v, bv)]
            vecs.append(v)
        return span(g.dim, vecs)


def coboundary_pair(g, n, h):
    """The pair (n, B) with B(x, y) = <h, [x, y]>."""
    basis = [LieElement.from_vector(r) for r in n.rows]
    b = [[g.form(h, g.bracket(x, y)) for y in basis] for x in basis]
    return SubalgebraPair(g, n, b, basis=basis)


def pair_to_lagrangian(g, pair):
    """Graph construction: l = span{a_i + b_i eps} + (n-perp) eps.

    Each b_i is the minimal-pivot solution of <b_i, y> = B(a_i, y) over
    y in n; any other choice differs by n-perp and spans the same l.
    """
    n = pair.n
    rows = []
    gram_rows = []
    for y in n.rows:
        gram_rows.append([sum(y[j] * g.gram[j][k] for j in range(g.dim))
                          for k in range(g.dim)])
    for i, a in enumerate(pair.basis):
        rhs = [pair.b_value(a, LieElement.from_vector(y)) for y in n.rows]
        b_vec = solve(gram_rows, rhs)
        if b_vec is None:
            raise DomainError("pair invariants violated: unsolvable graph row")
        rows.append(a.to_vector(g.dim) + b_vec)
    zero = [ZERO] * g.dim
    for w in perp(g, n).rows:
        rows.append(zero + list(w))
    return span(2 * g.dim, rows)


def lagrangian_to_pair(g, l):
    """Inverse of the graph construction; requires l Lagrangian."""
    verdict = is_lagrangian_subalgebra(g, l)
    if not verdict.all_true:
        raise DomainError("input is not a Lagrangian subalgebra: %r" % (verdict,))
    n = g_part_subspace(g, l)
    n_perp_eps = eps_lines(g, perp(g, n))
    pure_eps = subspace_intersect(l, eps_lines(g, span(g.dim, _identity(g.dim))))
    if pure_eps != n_perp_eps:
        raise DomainError("corrupted input: l and g*eps intersect incorrectly")
    basis = [LieElement.from_vector(r) for r in n.rows]
    eps_parts = []
    for a in basis:
        member = _member_with_g_part(g, l, a)
        eps_parts.append(member.b)
    b = [[g.form(bi, aj) for aj in basis] for bi in eps_parts]
    return SubalgebraPair(g, n, b, basis=basis)


def _identity(dim):
    return [[Fraction(1) if i == j else ZERO for j in range(dim)]
            for i in range(dim)]


def _member_with_g_part(g, l, a):
    """Some element of l whose g-part is a (exists for a in the projection)."""
    cols = [[l.rows[r][c] for r in range(l.dim)] for c in range(g.dim)]
    coeffs = solve(cols, a.to_vector(g.dim))
    if coeffs is None:
        raise DomainError("element outside the g-projection of l")
    vec = [ZERO] * (2 * g.dim)
    for r, c in enumerate(coeffs):
        if c != 0:
            vec = [x + c * y for x, y in zip(vec, l.rows[r])]
    return DualElement.from_vector(g, vec)


def classify_pair(g, pair, u_set):
    """Match a Cartan-containing pair against the root-space normal form.

    Accepts iff n = cartan + root spaces of a reductive N containing U,
    B is the coboundary of a Cartan element h (solved exactly), h is
    (N, U)-regular, and Ker B equals u.  The returned h has its component
    in the center of n removed.
    """
    n = pair.n
    cartan_vecs = [LieElement.basis(k).to_vector(g.dim)
                   for k in g.cartan_indices]
    if not all(n.contains(v) for v in cartan_vecs):
        raise DomainError("n does not contain the Cartan subalgebra")
    roots_in = [r for r in g.roots
                if n.contains(LieElement.basis(g.root_basis_index(r))
                              .to_vector(g.dim))]
    if n.dim != g.rank + len(roots_in):
        return _reject("n is not a sum of the Cartan and root spaces")
    n_set = RootSubset(g, roots_in)
    if not is_reductive(n_set):
        return _reject("root support of n is not reductive")
    if not u_set <= n_set:
        return _reject("n does not contain u")

    # Solve <h, [x_i, x_j]> = B(x_i, x_j) for h in the Cartan.
    rows = []
    rhs = []
    for i, x in enumerate(pair.basis):
        for y in pair.basis[i + 1:]:
            br = g.bracket(x, y)
            rows.append([g.form(LieElement.basis(k), br)
                         for k in g.cartan_indices])
            rhs.append(pair.b_value(x, y))
    sol = solve(rows, rhs) if rows else [ZERO] * g.rank
    if sol is None:
        return _reject("B is not a 2-coboundary of a Cartan element")
    h = LieElement({k: c for k, c in enumerate(sol)})
    h = _remove_center_component(g, h, n_set)

    if not verify_regular(g, h, n_set, u_set):
        return _reject("recovered h is not (N, U)-regular")
    if pair.kernel() != subalgebra_from_subset(u_set):
        return _reject("Ker B differs from u")
    return (n_set, h)


def _reject(reason):
    return PairRejection(reason)


@dataclass(frozen=True)
class PairRejection:
    reason: str


def _remove_center_component(g, h, n_set):
    """Drop the part of h on which every root of N vanishes.

    The Cartan splits under the form into span{[E_a, E_-a] : a in N} and
    the center of n; only the first component is determined by B.
    """
    span_vecs = []
    for r in n_set.roots:
        i = g.root_basis_index(r)
        j = g.root_basis_index(tuple(-x for x in r))
        span_vecs.append(g.bracket_basis(i, j).to_vector(g.dim))
    coroot_span = span(g.dim, span_vecs)
    if coroot_span.dim == 0:
        return LieElement()
    cols = [[coroot_span.rows[r][c] for r in range(coroot_span.dim)]
            for c in range(g.dim)]
    # center component z satisfies alpha(z) = 0 for all alpha in N; the
    # coroot-span component is the unique part seen by those alphas.
    rows = []
    rhs = []
    for r in n_set.roots:
        rows.append([g.root_value(r, LieElement.from_vector(row))
                     for row in coroot_span.rows])
        rhs.append(g.root_value(r, h))
    coeffs = solve(rows, rhs)
    if coeffs is None:
        raise DomainError("inconsistent center decomposition")
    out = LieElement()
    for c, row in zip(coeffs, coroot_span.rows):
        if c != 0:
            out = out + LieElement.from_vector(row).scale(c)
    return out


def build_root_space_lagrangian(n_set, h, u_set, sign=1):
    """u + eps*g_alpha (alpha outside N) + (1 + sign*alpha(h)eps) g_alpha."""
    g = n_set.algebra
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if not verify_regular(g, h, n_set, u_set):
        raise DomainError("h is not (N, U)-regular")
    zero = [ZERO] * g.dim
    rows = []
    for k in g.cartan_indices:
        rows.append(LieElement.basis(k).to_vector(g.dim) + zero)
    for r in u_set.roots:
        rows.append(LieElement.basis(g.root_basis_index(r)).to_vector(g.dim)
                    + zero)
    for r in g.roots:
        if r in n_set:
            continue
        rows.append(zero
                    + LieElement.basis(g.root_basis_index(r)).to_vector(g.dim))
    for r in n_set.roots:
        if r in u_set:
            continue
        i = g.root_basis_index(r)
        vec = LieElement.basis(i).to_vector(g.dim) + \
            LieElement.basis(i).scale(sign * g.root_value(r, h)).to_vector(g.dim)
        rows.append(vec)
    return span(2 * g.dim, rows)


def lagrangian_from_bivector(u_set, b):
    """Base-point subspace of a bivector: graph of c -> (c @ 1)(b) over m.

    Spanned by u together with proj_m((E_alpha @ 1)(b)) + E_alpha eps for
    every root alpha outside U.  Always Lagrangian as a subspace; a
    subalgebra exactly when b defines a Poisson homogeneous structure.
    """
    g = b.algebra
    if not is_skew(b):
        raise DomainError("bivector must be skew")
    m_indices = {g.root_basis_index(r) for r in g.roots if r not in u_set}
    for (i, j) in b.coeffs:
        if i not in m_indices or j not in m_indices:
            raise DomainError("bivector must be supported on m @ m")
    zero = [ZERO] * g.dim
    rows = []
    for k in g.cartan_indices:
        rows.append(LieElement.basis(k).to_vector(g.dim) + zero)
    for r in u_set.roots:
        rows.append(LieElement.basis(g.root_basis_index(r)).to_vector(g.dim)
                    + zero)
    for r in g.roots:
        if r in u_set:
            continue
        idx = g.root_basis_index(r)
        c = LieElement.basis(idx)
        contracted = _contract_first_leg(g, c, b)
        rows.append(contracted.to_vector(g.dim)
                    + LieElement.basis(idx).to_vector(g.dim))
    return span(2 * g.dim, rows)


def _contract_first_leg(g, c, t):
    """(c @ 1)(t) = sum t_ij <c, e_i> e_j."""
    out = LieElement()
    for (i, j), v in t.coeffs.items():
        pairing = g.form(c, LieElement.basis(i))
        if pairing != 0:
            out = out + LieElement.basis(j).scale(v * pairing)
    return out


def is_poisson_homogeneous(u_set, b):
    """True iff the base-point subspace of b closes under the bracket."""
    g = b.algebra
    l = lagrangian_from_bivector(u_set, b)
    return is_lagrangian_subalgebra(g, l).subalgebra
