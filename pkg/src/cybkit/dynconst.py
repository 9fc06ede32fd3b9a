"""Projection of an r-matrix value onto a complementary subalgebra.

Given a splitting g = u + v into subalgebras and a tensor r0 whose
symmetric part splits across (u@u) + (v@v), which is u-invariant, and
whose CYB image vanishes modulo u-legs, the projection of r0 onto v@v
along u solves the CYBE exactly.  The sl(n) parabolic instance ships
with its closed-form expected output, which the pipeline re-derives
independently.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import (DomainError, LieElement, Subspace, build_algebra,
                      is_direct_sum_of_ambient, is_subalgebra, span)
from .linalg import ZERO, ONE, invert, mat_mul
from .tensor import (Tensor2, conjugate, cyb, is_invariant, project_legs,
                     wedge)


@dataclass(frozen=True)
class Decomposition:
    u: Subspace
    v: Subspace

    def validate(self, g):
        if not (is_subalgebra(g, self.u) and is_subalgebra(g, self.v)):
            raise DomainError("u and v must both be subalgebras")
        if not is_direct_sum_of_ambient(self.u, self.v):
            raise DomainError("u and v must decompose g")


@dataclass(frozen=True)
class PreconditionVerdict:
    omega_splits: bool
    u_invariant: bool
    cyb_vanishes_mod_u: bool

    @property
    def all_true(self):
        return self.omega_splits and self.u_invariant and self.cyb_vanishes_mod_u


def check_preconditions(r0, d):
    g = r0.algebra
    d.validate(g)
    omega = r0 + r0.transpose_legs()
    omega_uu = project_legs(omega, d.u, d.v)
    omega_vv = project_legs(omega, d.v, d.u)
    omega_splits = (omega_uu + omega_vv) == omega
    u_invariant = is_invariant(r0, d.u)
    cyb_vanishes = project_legs(cyb(r0), d.v, d.u).is_zero()
    return PreconditionVerdict(omega_splits, u_invariant, cyb_vanishes)


def project_to_v(r0, d):
    """Project r0 onto v@v along u-legs; the output must solve the CYBE."""
    verdict = check_preconditions(r0, d)
    if not verdict.all_true:
        raise DomainError("precondition failed: %r" % (verdict,))
    out = project_legs(r0, d.v, d.u)
    if not cyb(out).is_zero():
        raise DomainError(
            "invariant failure: CYB of the projected tensor is nonzero")
    return out


@dataclass(frozen=True)
class ExampleInstance:
    n: int
    hvals: tuple
    algebra: object
    parabolic: Subspace
    conjugator: tuple          # rows of the gl(n) matrix used to move p
    decomposition: Decomposition
    r0: Tensor2
    expected_v: Tensor2


def build_example(n, hvals):
    """The sl(n) parabolic instance with its closed-form expected output."""
    hvals = tuple(Fraction(v) for v in hvals)
    if n < 3 or len(hvals) != n:
        raise DomainError("need n >= 3 values")
    if len(set(hvals)) != n:
        raise DomainError("the h values must be pairwise distinct")
    if sum(hvals) != 0:
        raise DomainError("the h values must sum to zero")
    g = build_algebra("A", n - 1)

    # p: last column zero above the corner entry.
    p_vecs = []
    for k in g.cartan_indices:
        p_vecs.append(LieElement.basis(k).to_vector(g.dim))
    for r in g.roots:
        i, j = g._root_pair(r)
        if j == n - 1 and i < n - 1:
            continue
        p_vecs.append(LieElement.basis(g.root_basis_index(r)).to_vector(g.dim))
    parabolic = span(g.dim, p_vecs)

    conj = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        conj[i][n - 1] = -ONE
    conj_inv = invert(conj)
    moved_vecs = []
    for row in parabolic.rows:
        mat = g.matrix_from_element(LieElement.from_vector(row))
        moved = mat_mul(mat_mul(conj, mat), conj_inv)
        moved_vecs.append(g.element_from_matrix(moved).to_vector(g.dim))
    v_space = span(g.dim, moved_vecs)

    cartan = span(g.dim, [LieElement.basis(k).to_vector(g.dim)
                          for k in g.cartan_indices])
    if not is_direct_sum_of_ambient(cartan, v_space):
        raise DomainError("moved parabolic does not complement the Cartan")
    d = Decomposition(cartan, v_space)

    r0 = Tensor2(g)
    for i in range(n):
        for j in range(i + 1, n):
            eij = g.root_vector(_root(i, j, n))
            eji = g.root_vector(_root(j, i, n))
            r0 = r0 + wedge(g, eij, eji).scale(ONE / (hvals[i] - hvals[j]))

    expected = Tensor2(g)
    for i in range(n - 1):
        for j in range(i + 1, n - 1):
            x = g.root_vector(_root(i, j, n)) - _d_element(g, i)
            y = g.root_vector(_root(j, i, n)) - _d_element(g, j)
            expected = expected + wedge(g, x, y).scale(
                ONE / (hvals[i] - hvals[j]))
    for i in range(n - 1):
        col = LieElement()
        for k in range(n):
            if k != i:
                col = col + g.root_vector(_root(k, i, n))
        expected = expected + wedge(g, _d_element(g, i), col).scale(
            ONE / (hvals[i] - hvals[n - 1]))

    return ExampleInstance(n, hvals, g, parabolic,
                           tuple(tuple(r) for r in conj), d, r0, expected)


def _root(i, j, n):
    v = [0] * n
    v[i] = 1
    v[j] = -1
    return tuple(v)


def _d_element(g, i):
    """diag(-1/n, ..., (n-1)/n, ..., -1/n) with the big entry at slot i.

    The opposite sign for these diagonal parts makes the closed form fail
    the CYBE, which the projection output provably satisfies; with this
    sign the closed form and the pipeline agree exactly.
    """
    n = g.n
    diag = [-Fraction(1, n)] * n
    diag[i] = 1 - Fraction(1, n)
    return g.cartan_element_from_diagonal(diag)


@dataclass(frozen=True)
class ExampleReport:
    preconditions: PreconditionVerdict
    projection_matches_closed_form: bool
    closed_form_solves_cybe: bool
    residual: Optional[Tensor2]

    @property
    def passed(self):
        return (self.preconditions.all_true
                and self.projection_matches_closed_form
                and self.closed_form_solves_cybe)


def verify_example(e, expected_override=None):
    """Run the full pipeline and compare against the closed form.

    `expected_override` lets callers test fault injection; the residual
    of a failed comparison is reported, never reconciled silently.
    """
    g = e.algebra
    expected = expected_override if expected_override is not None else e.expected_v
    pre = check_preconditions(e.r0, e.decomposition)
    projected = project_legs(e.r0, e.decomposition.v, e.decomposition.u)
    pulled_back = conjugate(projected, [list(r) for r in e.conjugator],
                            inverse=True)
    residual = pulled_back - expected
    matches = residual.is_zero()
    solves = cyb(expected).is_zero()
    return ExampleReport(pre, matches, solves,
                         None if matches else residual)
