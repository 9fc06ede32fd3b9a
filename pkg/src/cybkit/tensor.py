"""Sparse exact tensor calculus on g@g and g@g@g.

Carries the Yang-Baxter operator, the mixed bracket, leg permutations and
projections, adjoint actions, and matrix conjugation.  CYB and the mixed
bracket are deliberately separate code paths so that the identity
cyb(t) == mixed_bracket(t, t) stays a meaningful cross-check.
"""

from fractions import Fraction

from .algebra import (DomainError, LieElement, StructuralError, Subspace,
                      is_direct_sum_of_ambient, subspace_sum)
from .linalg import ZERO, invert, transpose


class _SparseTensor:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs=None):
        self.algebra = algebra
        self.coeffs = {}
        if coeffs:
            for key, v in coeffs.items():
                v = Fraction(v)
                if v != 0:
                    self.coeffs[key] = v

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            w = out.get(k, ZERO) + v
            if w == 0:
                out.pop(k, None)
            else:
                out[k] = w
        return type(self)(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)(self.algebra,
                          {k: -v for k, v in self.coeffs.items()})

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return type(self)(self.algebra)
        return type(self)(self.algebra,
                          {k: c * v for k, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (type(other) is type(self)
                and self.algebra is other.algebra
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.coeffs.items())))

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise StructuralError("tensors live over different algebras")

    def items_sorted(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        return "%s(%s, %d entries)" % (type(self).__name__,
                                       self.algebra.name, len(self.coeffs))


class Tensor2(_SparseTensor):
    """Sparse element of g@g: map (i, j) -> Fraction over basis indices."""

    def transpose_legs(self):
        return Tensor2(self.algebra,
                       {(j, i): v for (i, j), v in self.coeffs.items()})


class Tensor3(_SparseTensor):
    """Sparse element of g@g@g: map (i, j, k) -> Fraction."""


def simple2(g, x, y):
    """x @ y for elements x, y."""
    out = {}
    for i, a in x.coords.items():
        for j, b in y.coords.items():
            out[(i, j)] = a * b
    return Tensor2(g, out)


def wedge(g, x, y):
    """x ^ y := x @ y - y @ x (no 1/2 factor)."""
    return simple2(g, x, y) - simple2(g, y, x)


def _acc(out, key, val):
    w = out.get(key, ZERO) + val
    if w == 0:
        out.pop(key, None)
    else:
        out[key] = w


def cyb(t):
    """CYB(t) = [t12, t13] + [t12, t23] + [t13, t23], expanded termwise."""
    g = t.algebra
    out = {}
    items = list(t.coeffs.items())
    for (i, j), c1 in items:
        for (k, l), c2 in items:
            c = c1 * c2
            for a, v in g.bracket_basis(i, k).coords.items():
                _acc(out, (a, j, l), c * v)
            for a, v in g.bracket_basis(j, k).coords.items():
                _acc(out, (i, a, l), c * v)
            for a, v in g.bracket_basis(j, l).coords.items():
                _acc(out, (i, k, a), c * v)
    return Tensor3(g, out)


def mixed_bracket(a, b):
    """[[a, b]] = [a12, b13] + [a12, b23] + [a13, b23]."""
    a._check(b)
    g = a.algebra
    out = {}
    for (i, j), c1 in a.coeffs.items():
        for (k, l), c2 in b.coeffs.items():
            c = c1 * c2
            for p, v in g.bracket_basis(i, k).coords.items():
                _acc(out, (p, j, l), c * v)
            for p, v in g.bracket_basis(j, k).coords.items():
                _acc(out, (i, p, l), c * v)
            for p, v in g.bracket_basis(j, l).coords.items():
                _acc(out, (i, k, p), c * v)
    return Tensor3(g, out)


def permute_legs(t, sigma):
    """Relabel legs by the permutation sigma of (0, 1, 2).

    sigma maps source leg position -> target position: entry (i0,i1,i2)
    moves to the key whose sigma[p]-th slot is i_p.
    """
    if sorted(sigma) != [0, 1, 2]:
        raise DomainError("sigma must be a permutation of (0, 1, 2)")
    out = {}
    for key, v in t.coeffs.items():
        new = [None, None, None]
        for p in range(3):
            new[sigma[p]] = key[p]
        out[tuple(new)] = v
    return Tensor3(t.algebra, out)


def alt3(t):
    """Alt(x) = x^{123} + x^{231} + x^{312}."""
    return (t + permute_legs(t, (1, 2, 0)) + permute_legs(t, (2, 0, 1)))


def ad_action2(g, a, t):
    """[a@1 + 1@a, t] for an element a and a Tensor2 t."""
    out = {}
    for (i, j), c in t.coeffs.items():
        for k, ca in a.coords.items():
            for p, v in g.bracket_basis(k, i).coords.items():
                _acc(out, (p, j), c * ca * v)
            for p, v in g.bracket_basis(k, j).coords.items():
                _acc(out, (i, p), c * ca * v)
    return Tensor2(g, out)


def is_invariant(t, s):
    """True iff ad_action2(b, t) = 0 for every basis vector b of s."""
    g = t.algebra
    for row in s.rows:
        if not ad_action2(g, LieElement.from_vector(row), t).is_zero():
            return False
    return True


def is_skew(t):
    return (t + t.transpose_legs()).is_zero()


def is_symmetric(t):
    return (t - t.transpose_legs()).is_zero()


def projection_columns(g, complement, along):
    """Sparse columns of the projection onto `complement` along `along`."""
    if not is_direct_sum_of_ambient(complement, along):
        raise DomainError("complement and along do not decompose the ambient")
    rows = complement.rows + along.rows
    inv = invert(transpose(rows))
    cols = []
    for k in range(complement.ambient_dim):
        col = {}
        for r in range(complement.dim):
            coeff = inv[r][k]
            if coeff == 0:
                continue
            for c, v in enumerate(complement.rows[r]):
                if v != 0:
                    _acc(col, c, coeff * v)
        cols.append(col)
    return cols


def project_legs(t, complement, along):
    """Apply the projection onto `complement` along `along` to every leg."""
    cols = projection_columns(t.algebra, complement, along)
    out = {}
    for key, c in t.coeffs.items():
        parts = [cols[i] for i in key]
        _expand(out, parts, c)
    return type(t)(t.algebra, out)


def _expand(out, parts, coeff, prefix=()):
    if not parts:
        _acc(out, prefix, coeff)
        return
    for idx, v in parts[0].items():
        _expand(out, parts[1:], coeff * v, prefix + (idx,))


def conjugate(t, mat, inverse=False):
    """Apply x -> m x m^{-1} (or m^{-1} x m when inverse=True) to each leg."""
    g = t.algebra
    if len(mat) != g.n:
        raise DomainError("conjugating matrix size does not match the algebra")
    minv = invert(mat)
    if minv is None:
        raise DomainError("conjugating matrix is singular")
    left, right = (minv, mat) if inverse else (mat, minv)
    cols = []
    for k in range(g.dim):
        bm = g.basis_matrices[k]
        conj = _mat_mul3(left, bm, right)
        cols.append(dict(g.element_from_matrix(conj).coords))
    out = {}
    for key, c in t.coeffs.items():
        parts = [cols[i] for i in key]
        _expand(out, parts, c)
    return type(t)(t.algebra, out)


def _mat_mul3(a, b, c):
    n = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    return [[sum(ab[i][k] * c[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
