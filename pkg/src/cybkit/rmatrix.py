"""Classification engine for triangular r-matrices on g/u.

The candidate tensors have the diagonal form
    sum over alpha of f(alpha) * E_alpha @ E_{-alpha},
and membership in the moduli set (skew u-invariant bivectors whose CYB
image vanishes in the quotient by u) is decided twice: once structurally
through the coefficient conditions, once at the tensor level through
projection of the CYB output.  The two implementations are kept separate
on purpose; a disagreement is a bug and raises immediately.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import DomainError, LieElement
from .linalg import ZERO, solve
from .reductive import (RootSubset, complement_from_subset, is_reductive,
                        regular_element, subalgebra_from_subset,
                        verify_regular)
from .tensor import Tensor2, cyb, is_invariant, is_skew, project_legs


class OracleDisagreement(RuntimeError):
    """The structural and tensor-level membership tests disagree."""


@dataclass(frozen=True)
class RMatrixCandidate:
    tensor: Tensor2
    subset_u: RootSubset
    omega: Optional[Tensor2] = None      # symmetric invariant part; None = 0
    provenance: Optional[tuple] = None   # (N, h) when built from them

    @property
    def algebra(self):
        return self.tensor.algebra


@dataclass(frozen=True)
class Classification:
    accepted: bool
    subset_n: Optional[RootSubset] = None
    h: Optional[LieElement] = None
    reason: str = ""
    witnesses: tuple = ()


def build_diagonal(n_set, h, u_set):
    """The tensor sum_{alpha in N \\ U} 1/alpha(h) E_alpha @ E_{-alpha}."""
    g = n_set.algebra
    if not (is_reductive(u_set) and is_reductive(n_set) and u_set <= n_set):
        raise DomainError("need reductive U contained in reductive N")
    if not verify_regular(g, h, n_set, u_set):
        for r in u_set.roots:
            if g.root_value(r, h) != 0:
                raise DomainError("regularity violated at root %r" % (r,))
        for r in n_set.roots:
            if r not in u_set and g.root_value(r, h) == 0:
                raise DomainError("regularity violated at root %r" % (r,))
    coeffs = {}
    for r in n_set.roots:
        if r in u_set:
            continue
        i = g.root_basis_index(r)
        j = g.root_basis_index(tuple(-x for x in r))
        coeffs[(i, j)] = Fraction(1) / g.root_value(r, h)
    return RMatrixCandidate(Tensor2(g, coeffs), u_set,
                            provenance=(n_set, h))


def coefficients_from_tensor(t, u_set):
    """Extract the root -> coefficient map, or None if not diagonal form.

    Diagonal form means every entry is at position (E_alpha, E_{-alpha})
    for some alpha outside U.
    """
    g = t.algebra
    out = {}
    banned = set(u_set.roots)
    for (i, j), v in t.coeffs.items():
        if i < g.rank or j < g.rank:
            return None
        a = g.root_of_index(i)
        b = g.root_of_index(j)
        if tuple(-x for x in a) != b or a in banned:
            return None
        out[a] = v
    return out


def _coefficient_conditions(g, f, u_set):
    """First violated condition among (d), (e) with witnesses, or None."""
    roots_mod_u = [r for r in g.roots if r not in u_set]
    for a in roots_mod_u:
        na = tuple(-x for x in a)
        if f.get(a, ZERO) + f.get(na, ZERO) != 0:
            return ("d", (a,))
    u_roots = set(u_set.roots)
    for a in roots_mod_u:
        for c in u_roots:
            b = tuple(-(x + y) for x, y in zip(a, c))
            if g.is_root(b) and b not in u_roots:
                if f.get(a, ZERO) + f.get(b, ZERO) != 0:
                    return ("e", (a, b, c))
    return None


def _quadratic_condition(g, f, u_set):
    """Violating triple of the quadratic relation, or None."""
    roots_mod_u = [r for r in g.roots if r not in u_set]
    mod_u = set(roots_mod_u)
    for a in roots_mod_u:
        for b in roots_mod_u:
            c = tuple(-(x + y) for x, y in zip(a, b))
            if c not in mod_u:
                continue
            xa, xb, xc = f.get(a, ZERO), f.get(b, ZERO), f.get(c, ZERO)
            if xa * xb + xb * xc + xc * xa != 0:
                return (a, b, c)
    return None


def in_invariant_wedge_structural(t, u_set):
    """Diagonal form with skew coefficients and the u-pairing relations."""
    f = coefficients_from_tensor(t, u_set)
    if f is None:
        return False
    return _coefficient_conditions(t.algebra, f, u_set) is None


def in_invariant_wedge_tensor(t, u_set):
    """Skew, supported on m @ m, and ad-invariant under u."""
    if not is_skew(t):
        return False
    g = t.algebra
    m_indices = {g.root_basis_index(r) for r in g.roots if r not in u_set}
    for (i, j) in t.coeffs:
        if i not in m_indices or j not in m_indices:
            return False
    return is_invariant(t, subalgebra_from_subset(u_set))


def in_invariant_wedge(t, u_set):
    a = in_invariant_wedge_structural(t, u_set)
    b = in_invariant_wedge_tensor(t, u_set)
    if a != b:
        raise OracleDisagreement(
            "invariant-wedge tests disagree: structural=%s tensor=%s" % (a, b))
    return a


def in_moduli_tensor(c):
    """Tensor-level test: wedge membership plus CYB vanishing mod u-legs."""
    if not in_invariant_wedge_tensor(c.tensor, c.subset_u):
        return False
    m = complement_from_subset(c.subset_u)
    u = subalgebra_from_subset(c.subset_u)
    return project_legs(cyb(c.tensor), m, u).is_zero()


def in_moduli_structural(c):
    """Coefficient-level test via the pairwise and triple relations."""
    g = c.algebra
    f = coefficients_from_tensor(c.tensor, c.subset_u)
    if f is None:
        return False
    if _coefficient_conditions(g, f, c.subset_u) is not None:
        return False
    return _quadratic_condition(g, f, c.subset_u) is None


def in_moduli(c):
    """Membership in the moduli set, cross-checked between both oracles."""
    if c.omega is not None and not c.omega.is_zero():
        raise DomainError(
            "nonzero symmetric part is accepted as data but not classified")
    tensor_verdict = in_moduli_tensor(c)
    if coefficients_from_tensor(c.tensor, c.subset_u) is not None:
        structural_verdict = in_moduli_structural(c)
        if structural_verdict != tensor_verdict:
            raise OracleDisagreement(
                "moduli tests disagree: structural=%s tensor=%s"
                % (structural_verdict, tensor_verdict))
    return tensor_verdict


def classify_coefficients(g, f, u_set):
    """Recover (N, h) from a coefficient function, or reject.

    Accepts iff the function satisfies the sign, u-pairing, and triple
    relations; then N = U union support(f) is reductive and h solves
    alpha(h) = 1/f(alpha) on N \\ U with alpha(h) = 0 on U.
    """
    f = {tuple(r): Fraction(v) for r, v in f.items() if v != 0}
    for r in f:
        if not g.is_root(r) or r in u_set:
            raise DomainError("coefficient key outside R \\ U: %r" % (r,))

    bad = _coefficient_conditions(g, f, u_set)
    if bad is not None:
        return Classification(False, reason="condition (%s) violated" % bad[0],
                              witnesses=bad[1])
    bad = _quadratic_condition(g, f, u_set)
    if bad is not None:
        return Classification(False, reason="condition (f) violated",
                              witnesses=bad)

    n_set = u_set.union(f.keys())
    if not is_reductive(n_set):
        return Classification(False,
                              reason="support union U is not reductive",
                              witnesses=tuple(f.keys()))

    rows = []
    rhs = []
    for r in u_set.roots:
        rows.append([g.root_value(r, LieElement.basis(k))
                     for k in range(g.rank)])
        rhs.append(ZERO)
    for r, v in sorted(f.items()):
        rows.append([g.root_value(r, LieElement.basis(k))
                     for k in range(g.rank)])
        rhs.append(Fraction(1) / v)
    sol = solve(rows, rhs) if rows else [ZERO] * g.rank
    if sol is None:
        return Classification(False, reason="condition (f) violated",
                              witnesses=tuple(sorted(f.keys())))
    h = LieElement({k: c for k, c in enumerate(sol)})
    if not verify_regular(g, h, n_set, u_set):
        return Classification(False, reason="recovered h is not regular")
    return Classification(True, n_set, h)


def default_candidate(g, u_set, n_set):
    """Deterministic candidate for (U, N): the canonical regular witness."""
    h = regular_element(n_set, u_set)
    if h is None:
        return None
    return build_diagonal(n_set, h, u_set)
