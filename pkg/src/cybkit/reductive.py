"""Root-subset combinatorics: reductivity, enumeration, regular elements.

A subset U of the root system is reductive when -U = U and
(U + U) intersected with R lies in U.  Enumeration runs a backtracking
search over symmetric root pairs with closure pruning; desk-scale ranks
keep even the plain brute force cheap, and the tests compare against it.
"""

from fractions import Fraction

from .algebra import (DomainError, LieElement, Subspace, span)
from .linalg import ZERO, nullspace


class RootSubset:
    """A set of roots of a fixed algebra, kept sorted in the root order."""

    __slots__ = ("algebra", "roots")

    def __init__(self, algebra, roots=()):
        self.algebra = algebra
        seen = set()
        for r in roots:
            r = tuple(r)
            if not algebra.is_root(r):
                raise DomainError("not a root of %s: %r" % (algebra.name, r))
            seen.add(r)
        self.roots = tuple(sorted(seen, key=algebra.root_basis_index))

    def __contains__(self, root):
        return tuple(root) in set(self.roots)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __eq__(self, other):
        return (isinstance(other, RootSubset)
                and self.algebra is other.algebra
                and self.roots == other.roots)

    def __hash__(self):
        return hash((id(self.algebra), self.roots))

    def __le__(self, other):
        return set(self.roots) <= set(other.roots)

    def union(self, roots):
        return RootSubset(self.algebra, self.roots + tuple(roots))

    def __repr__(self):
        return "RootSubset(%s, %d roots)" % (self.algebra.name, len(self.roots))


def is_reductive(s):
    roots = set(s.roots)
    for a in roots:
        if tuple(-x for x in a) not in roots:
            return False
    for a in roots:
        for b in roots:
            c = tuple(x + y for x, y in zip(a, b))
            if s.algebra.is_root(c) and c not in roots:
                return False
    return True


def enumerate_reductive(g, contains):
    """All reductive subsets N with contains <= N <= R, deterministically."""
    if contains.algebra is not g:
        raise DomainError("subset belongs to a different algebra")
    if not is_reductive(contains):
        raise DomainError("`contains` is not reductive")
    base = set(contains.roots)
    pairs = [r for r in g.positive_roots if r not in base]
    results = []

    def neg(r):
        return tuple(-x for x in r)

    def closure_ok(current, excluded):
        for a in current:
            for b in current:
                c = tuple(x + y for x, y in zip(a, b))
                if g.is_root(c) and c not in current and c in excluded:
                    return False
        return True

    def backtrack(idx, current, excluded):
        if idx == len(pairs):
            cand = RootSubset(g, current)
            if is_reductive(cand):
                results.append(cand)
            return
        p = pairs[idx]
        # include the pair
        nxt = current | {p, neg(p)}
        if closure_ok(nxt, excluded):
            backtrack(idx + 1, nxt, excluded)
        # exclude the pair
        nxt_ex = excluded | {p, neg(p)}
        if closure_ok(current, nxt_ex):
            backtrack(idx + 1, current, nxt_ex)

    backtrack(0, set(base), set())
    results.sort(key=lambda s: (len(s.roots),
                                tuple(g.root_basis_index(r) for r in s.roots)))
    return results


def enumerate_reductive_bruteforce(g, contains):
    """Independent oracle: filter every symmetric subset over root pairs."""
    if not is_reductive(contains):
        raise DomainError("`contains` is not reductive")
    base = set(contains.roots)
    pairs = [r for r in g.positive_roots if r not in base]
    out = []
    for mask in range(1 << len(pairs)):
        roots = set(base)
        for i, p in enumerate(pairs):
            if mask >> i & 1:
                roots.add(p)
                roots.add(tuple(-x for x in p))
        cand = RootSubset(g, roots)
        if is_reductive(cand):
            out.append(cand)
    out.sort(key=lambda s: (len(s.roots),
                            tuple(g.root_basis_index(r) for r in s.roots)))
    return out


def regular_element(n_set, u_set):
    """A Cartan element h with alpha(h) = 0 on U and != 0 on N \\ U.

    Deterministic: takes the canonical nullspace basis of the U-constraints
    and tries h = sum_j t^(j-1) v_j for t = 1, 2, ...  Returns None when
    some root of N \\ U vanishes on the whole constraint nullspace.
    """
    g = n_set.algebra
    if u_set.algebra is not g:
        raise DomainError("subsets belong to different algebras")
    if not (is_reductive(u_set) and is_reductive(n_set)):
        raise DomainError("N and U must be reductive")
    if not u_set <= n_set:
        raise DomainError("U must be contained in N")

    rows = [[_root_on_cartan_basis(g, r, k) for k in range(g.rank)]
            for r in u_set.roots]
    basis = nullspace(rows, g.rank) if rows else \
        [[Fraction(1) if i == k else ZERO for i in range(g.rank)]
         for k in range(g.rank)]
    rest = [r for r in n_set.roots if r not in u_set]
    if not rest:
        return LieElement()
    for r in rest:
        if all(_eval_root(g, r, v) == 0 for v in basis):
            return None
    t = 1
    while True:
        coords = [ZERO] * g.rank
        w = Fraction(1)
        for v in basis:
            for k in range(g.rank):
                coords[k] += w * v[k]
            w *= t
        h = LieElement({k: c for k, c in enumerate(coords)})
        if all(g.root_value(r, h) != 0 for r in rest):
            return h
        t += 1


def verify_regular(g, h, n_set, u_set):
    """Independent check of (N, U)-regularity by direct evaluation."""
    for r in u_set.roots:
        if g.root_value(r, h) != 0:
            return False
    for r in n_set.roots:
        if r not in u_set and g.root_value(r, h) == 0:
            return False
    return True


def _root_on_cartan_basis(g, root, k):
    return g.root_value(root, LieElement.basis(k))


def _eval_root(g, root, coords):
    h = LieElement({k: c for k, c in enumerate(coords)})
    return g.root_value(root, h)


def subalgebra_from_subset(u_set):
    """u = cartan + root spaces of U; requires U reductive."""
    g = u_set.algebra
    if not is_reductive(u_set):
        raise DomainError("subset is not reductive")
    indices = list(g.cartan_indices)
    indices += [g.root_basis_index(r) for r in u_set.roots]
    return span(g.dim, [LieElement.basis(i).to_vector(g.dim) for i in indices])


def complement_from_subset(u_set):
    """m = direct sum of the root spaces outside U."""
    g = u_set.algebra
    if not is_reductive(u_set):
        raise DomainError("subset is not reductive")
    indices = [g.root_basis_index(r) for r in g.roots if r not in u_set]
    return span(g.dim, [LieElement.basis(i).to_vector(g.dim) for i in indices])
