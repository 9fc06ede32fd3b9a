"""Splitting-projection pipeline and its sl(n) parabolic instance."""

from fractions import Fraction

import pytest

from cybkit import (DomainError, LieElement, build_example, check_preconditions,
                    cyb, project_to_v, verify_example, wedge)
from cybkit.dynconst import Decomposition
from cybkit.tensor import Tensor2, conjugate, simple2

from conftest import sl2_basis


@pytest.fixture(scope="module")
def inst3():
    return build_example(3, [1, 0, -1])


class TestBuildExample:
    def test_r0_coefficients(self, inst3):
        g = inst3.algebra
        # 1/(h_i - h_j) over the positive pairs of (1, 0, -1)
        expected = {(0, 1): Fraction(1), (0, 2): Fraction(1, 2),
                    (1, 2): Fraction(1)}
        for (i, j), c in expected.items():
            root = [0, 0, 0]
            root[i], root[j] = 1, -1
            a = g.root_basis_index(tuple(root))
            root[i], root[j] = -1, 1
            b = g.root_basis_index(tuple(root))
            assert inst3.r0.coeffs[(a, b)] == c
            assert inst3.r0.coeffs[(b, a)] == -c

    def test_decomposition_dimensions(self, inst3):
        d = inst3.decomposition
        assert d.u.dim == 2
        assert d.v.dim == 6
        assert d.u.dim + d.v.dim == inst3.algebra.dim

    def test_input_validation(self):
        with pytest.raises(DomainError):
            build_example(2, [1, -1])
        with pytest.raises(DomainError):
            build_example(3, [1, 1, -2])
        with pytest.raises(DomainError):
            build_example(3, [1, 0, 0])
        with pytest.raises(DomainError):
            build_example(3, [2, 0, -1])


class TestPreconditions:
    def test_zero_tensor(self, inst3):
        verdict = check_preconditions(Tensor2(inst3.algebra),
                                      inst3.decomposition)
        assert verdict.all_true

    def test_example_r0(self, inst3):
        assert check_preconditions(inst3.r0, inst3.decomposition).all_true

    def test_invariance_failure_detected(self, inst3):
        g = inst3.algebra
        t = simple2(g, g.root_vector((1, -1, 0)), g.root_vector((1, 0, -1)))
        verdict = check_preconditions(t, inst3.decomposition)
        assert not verdict.u_invariant
        assert not verdict.all_true
        with pytest.raises(DomainError):
            project_to_v(t, inst3.decomposition)

    def test_invalid_decomposition(self, a1):
        _, e, f = sl2_basis(a1)
        from cybkit import span_elements
        bad = Decomposition(span_elements(a1, [e]), span_elements(a1, [f]))
        with pytest.raises(DomainError):
            bad.validate(a1)


class TestProjection:
    def test_fixed_point_in_v(self, inst3):
        # the projected output itself lies in v@v, so projecting is a no-op
        from cybkit import project_legs
        d = inst3.decomposition
        projected = project_to_v(inst3.r0, d)
        assert project_legs(projected, d.v, d.u) == projected

    def test_u_supported_tensor_projects_to_zero(self, inst3):
        g = inst3.algebra
        t = wedge(g, LieElement.basis(0), LieElement.basis(1))
        assert check_preconditions(t, inst3.decomposition).all_true
        assert project_to_v(t, inst3.decomposition).is_zero()

    def test_zero(self, inst3):
        assert project_to_v(Tensor2(inst3.algebra),
                            inst3.decomposition).is_zero()


class TestClosedForm:
    def test_n3_pipeline(self, inst3):
        report = verify_example(inst3)
        assert report.preconditions.all_true
        assert report.projection_matches_closed_form
        assert report.closed_form_solves_cybe
        assert report.residual is None
        assert report.passed

    def test_n4_pipeline(self):
        e = build_example(4, [3, 1, -1, -3])
        report = verify_example(e)
        assert report.passed
        assert cyb(e.expected_v).is_zero()

    def test_projection_equals_conjugated_closed_form(self, inst3):
        projected = project_to_v(inst3.r0, inst3.decomposition)
        moved = conjugate(inst3.expected_v,
                          [list(r) for r in inst3.conjugator])
        assert projected == moved

    def test_tampered_expected_fails_with_local_residual(self, inst3):
        g = inst3.algebra
        key = sorted(inst3.expected_v.coeffs)[0]
        bump = Tensor2(g, {key: Fraction(1, 7)})
        report = verify_example(inst3, expected_override=inst3.expected_v + bump)
        assert not report.projection_matches_closed_form
        assert report.residual == -bump
        assert not report.passed
