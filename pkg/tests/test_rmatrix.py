"""Diagonal r-matrix candidates and moduli membership."""

from fractions import Fraction

import pytest

from cybkit import (DomainError, build_algebra, enumerate_reductive,
                    regular_element)
from cybkit.reductive import RootSubset
from cybkit.rmatrix import (RMatrixCandidate, build_diagonal,
                            classify_coefficients, coefficients_from_tensor,
                            default_candidate, in_invariant_wedge,
                            in_invariant_wedge_structural,
                            in_invariant_wedge_tensor, in_moduli,
                            in_moduli_structural, in_moduli_tensor)
from cybkit.tensor import Tensor2, simple2


ALPHA1 = (1, -1, 0)
ALPHA2 = (0, 1, -1)
THETA = (1, 0, -1)


def sym(g, *roots):
    full = list(roots) + [tuple(-x for x in r) for r in roots]
    return RootSubset(g, full)


def diagonal_tensor(g, f):
    """Tensor with entry f(alpha) at (E_alpha, E_{-alpha}) for each key."""
    coeffs = {}
    for r, v in f.items():
        i = g.root_basis_index(r)
        j = g.root_basis_index(tuple(-x for x in r))
        coeffs[(i, j)] = Fraction(v)
    return Tensor2(g, coeffs)


class TestBuildDiagonal:
    def test_n_equals_u_gives_zero(self, a1):
        from cybkit import LieElement
        n = RootSubset(a1, a1.roots)
        cand = build_diagonal(n, LieElement(), n)
        assert cand.tensor.is_zero()

    def test_sl2_coefficients(self, a1):
        n = RootSubset(a1, a1.roots)
        u = RootSubset(a1)
        h = a1.cartan_element_from_diagonal([1, -1])  # alpha(h) = 2
        cand = build_diagonal(n, h, u)
        expected = diagonal_tensor(a1, {(1, -1): Fraction(1, 2),
                                        (-1, 1): Fraction(-1, 2)})
        assert cand.tensor == expected

    def test_a2_coefficients(self, a2):
        n = RootSubset(a2, a2.roots)
        u = RootSubset(a2)
        h = a2.cartan_element_from_diagonal([2, 0, -2])
        cand = build_diagonal(n, h, u)
        # alpha values: alpha1 -> 2, alpha2 -> 2, theta -> 4
        expected = diagonal_tensor(a2, {
            ALPHA1: Fraction(1, 2), tuple(-x for x in ALPHA1): Fraction(-1, 2),
            ALPHA2: Fraction(1, 2), tuple(-x for x in ALPHA2): Fraction(-1, 2),
            THETA: Fraction(1, 4), tuple(-x for x in THETA): Fraction(-1, 4),
        })
        assert cand.tensor == expected

    def test_regularity_violation_raises(self, a2):
        n = RootSubset(a2, a2.roots)
        u = RootSubset(a2)
        h = a2.cartan_element_from_diagonal([1, 1, -2])  # alpha1(h) = 0
        with pytest.raises(DomainError):
            build_diagonal(n, h, u)


class TestInvariantWedge:
    def test_built_candidates_pass(self, a2):
        u = RootSubset(a2)
        for n in enumerate_reductive(a2, u):
            h = regular_element(n, u)
            cand = build_diagonal(n, h, u)
            assert in_invariant_wedge(cand.tensor, u)

    def test_symmetric_tensor_fails(self, a1):
        e = a1.root_vector((1, -1))
        f = a1.root_vector((-1, 1))
        t = simple2(a1, e, f) + simple2(a1, f, e)
        u = RootSubset(a1)
        assert not in_invariant_wedge_structural(t, u)
        assert not in_invariant_wedge_tensor(t, u)
        assert not in_invariant_wedge(t, u)

    def test_u_pairing_violation_both_paths(self, a2):
        # with U = {+-alpha1}, condition (e) links alpha2 with -(theta):
        # their coefficients must cancel; choose them so they do not
        u = sym(a2, ALPHA1)
        f = {ALPHA2: 1, tuple(-x for x in ALPHA2): -1,
             THETA: -1, tuple(-x for x in THETA): 1}
        t = diagonal_tensor(a2, f)
        assert not in_invariant_wedge_structural(t, u)
        assert not in_invariant_wedge_tensor(t, u)

    def test_u_pairing_satisfied_both_paths(self, a2):
        u = sym(a2, ALPHA1)
        f = {ALPHA2: 1, tuple(-x for x in ALPHA2): -1,
             THETA: 1, tuple(-x for x in THETA): -1}
        t = diagonal_tensor(a2, f)
        assert in_invariant_wedge_structural(t, u)
        assert in_invariant_wedge_tensor(t, u)


class TestInModuli:
    def test_zero_tensor(self, a2):
        cand = RMatrixCandidate(Tensor2(a2), RootSubset(a2))
        assert in_moduli(cand)

    def test_all_built_candidates(self, a2):
        u = RootSubset(a2)
        for n in enumerate_reductive(a2, u):
            h = regular_element(n, u)
            cand = build_diagonal(n, h, u)
            assert in_moduli_structural(cand)
            assert in_moduli_tensor(cand)
            assert in_moduli(cand)

    def test_quadratic_violation(self, a2):
        # constant coefficient 1 on all positive roots: the triple
        # (alpha1, alpha2, -theta) gives 1*1 + 1*(-1) + (-1)*1 = -1
        f = {}
        for r in a2.positive_roots:
            f[r] = 1
            f[tuple(-x for x in r)] = -1
        t = diagonal_tensor(a2, f)
        u = RootSubset(a2)
        cand = RMatrixCandidate(t, u)
        assert not in_moduli_structural(cand)
        assert not in_moduli_tensor(cand)
        assert not in_moduli(cand)

    def test_nonzero_omega_rejected(self, a1):
        e = a1.root_vector((1, -1))
        f = a1.root_vector((-1, 1))
        omega = simple2(a1, e, f) + simple2(a1, f, e)
        cand = RMatrixCandidate(Tensor2(a1), RootSubset(a1), omega=omega)
        with pytest.raises(DomainError):
            in_moduli(cand)

    def test_form_rescale_invariance(self):
        # the verdicts do not depend on the normalization of the form
        for scale in (1, 2):
            g = build_algebra("A", 2, form_scale=scale)
            u = RootSubset(g)
            for n in enumerate_reductive(g, u):
                h = regular_element(n, u)
                assert in_moduli(build_diagonal(n, h, u))


class TestClassifyCoefficients:
    def test_roundtrip_from_built(self, a2):
        u = RootSubset(a2)
        for n in enumerate_reductive(a2, u):
            h = regular_element(n, u)
            cand = build_diagonal(n, h, u)
            f = coefficients_from_tensor(cand.tensor, u)
            cls = classify_coefficients(a2, f, u)
            assert cls.accepted
            assert cls.subset_n == n
            for r in n.roots:
                assert a2.root_value(r, cls.h) == a2.root_value(r, h)

    def test_zero_function(self, a2):
        u = RootSubset(a2)
        cls = classify_coefficients(a2, {}, u)
        assert cls.accepted
        assert cls.subset_n == u
        assert cls.h.is_zero()

    def test_support_not_reductive(self, a2):
        # {+-alpha1, +-alpha2} is not closed; the quadratic relation on
        # the triple (alpha1, alpha2, -theta) already catches this
        f = {ALPHA1: 1, tuple(-x for x in ALPHA1): -1,
             ALPHA2: 1, tuple(-x for x in ALPHA2): -1}
        cls = classify_coefficients(a2, f, RootSubset(a2))
        assert not cls.accepted
        assert cls.witnesses

    def test_sign_violation_witnessed(self, a2):
        f = {ALPHA1: 1, tuple(-x for x in ALPHA1): 1}
        cls = classify_coefficients(a2, f, RootSubset(a2))
        assert not cls.accepted
        assert cls.witnesses

    def test_key_inside_u_rejected(self, a2):
        u = sym(a2, ALPHA1)
        with pytest.raises(DomainError):
            classify_coefficients(a2, {ALPHA1: 1}, u)


class TestCoefficientsFromTensor:
    def test_diagonal_extraction(self, a1):
        t = diagonal_tensor(a1, {(1, -1): Fraction(1, 2),
                                 (-1, 1): Fraction(-1, 2)})
        f = coefficients_from_tensor(t, RootSubset(a1))
        assert f == {(1, -1): Fraction(1, 2), (-1, 1): Fraction(-1, 2)}

    def test_off_diagonal_rejected(self, a2):
        e12 = a2.root_vector(ALPHA1)
        e13 = a2.root_vector(THETA)
        t = simple2(a2, e12, e13)
        assert coefficients_from_tensor(t, RootSubset(a2)) is None

    def test_cartan_leg_rejected(self, a1):
        t = Tensor2(a1, {(0, 1): Fraction(1)})
        assert coefficients_from_tensor(t, RootSubset(a1)) is None


class TestDefaultCandidate:
    def test_deterministic(self, a2):
        u = RootSubset(a2)
        n = RootSubset(a2, a2.roots)
        first = default_candidate(a2, u, n)
        second = default_candidate(a2, u, n)
        assert first.tensor == second.tensor
