"""Root-subset combinatorics and regular Cartan elements."""

import pytest

from cybkit import (DomainError, LieElement, build_algebra,
                    complement_from_subset, enumerate_reductive,
                    enumerate_reductive_bruteforce, is_reductive, is_subalgebra,
                    regular_element, subalgebra_from_subset, verify_regular)
from cybkit.reductive import RootSubset


ALPHA1 = (1, -1, 0)
ALPHA2 = (0, 1, -1)
THETA = (1, 0, -1)


def sym(g, *roots):
    full = list(roots) + [tuple(-x for x in r) for r in roots]
    return RootSubset(g, full)


class TestIsReductive:
    def test_empty(self, a2):
        assert is_reductive(RootSubset(a2))

    def test_simple_pair_not_closed(self, a2):
        # alpha1 + alpha2 is a root but is missing from the set
        assert not is_reductive(sym(a2, ALPHA1, ALPHA2))

    def test_full_root_system(self, a2):
        assert is_reductive(RootSubset(a2, a2.roots))

    def test_asymmetric_set(self, a2):
        assert not is_reductive(RootSubset(a2, [ALPHA1]))

    def test_single_pair(self, a2):
        assert is_reductive(sym(a2, ALPHA1))


class TestEnumeration:
    def test_a1_empty_base(self, a1):
        subsets = enumerate_reductive(a1, RootSubset(a1))
        assert len(subsets) == 2
        assert subsets[0].roots == ()
        assert set(subsets[1].roots) == set(a1.roots)

    def test_a2_empty_base(self, a2):
        subsets = enumerate_reductive(a2, RootSubset(a2))
        assert len(subsets) == 5
        sizes = sorted(len(s) for s in subsets)
        assert sizes == [0, 2, 2, 2, 6]

    def test_a2_with_base_pair(self, a2):
        subsets = enumerate_reductive(a2, sym(a2, ALPHA1))
        assert len(subsets) == 2
        assert subsets[0] == sym(a2, ALPHA1)
        assert set(subsets[1].roots) == set(a2.roots)

    @pytest.mark.parametrize("rank", [1, 2, 3])
    def test_matches_bruteforce(self, rank):
        g = build_algebra("A", rank)
        assert (enumerate_reductive(g, RootSubset(g))
                == enumerate_reductive_bruteforce(g, RootSubset(g)))

    def test_matches_bruteforce_nonempty_base(self, a2):
        base = sym(a2, THETA)
        assert (enumerate_reductive(a2, base)
                == enumerate_reductive_bruteforce(a2, base))

    def test_deterministic(self, a2):
        first = enumerate_reductive(a2, RootSubset(a2))
        second = enumerate_reductive(a2, RootSubset(a2))
        assert [s.roots for s in first] == [s.roots for s in second]

    def test_non_reductive_base_rejected(self, a2):
        with pytest.raises(DomainError):
            enumerate_reductive(a2, RootSubset(a2, [ALPHA1]))


class TestRegularElement:
    def test_a1_full(self, a1):
        n = RootSubset(a1, a1.roots)
        u = RootSubset(a1)
        h = regular_element(n, u)
        assert h is not None
        assert a1.root_value((1, -1), h) != 0
        assert verify_regular(a1, h, n, u)

    def test_a2_highest_root_kernel(self, a2):
        n = RootSubset(a2, a2.roots)
        u = sym(a2, THETA)
        h = regular_element(n, u)
        assert h is not None
        assert a2.root_value(THETA, h) == 0
        assert a2.root_value(ALPHA1, h) != 0
        assert a2.root_value(ALPHA2, h) != 0
        assert verify_regular(a2, h, n, u)

    def test_n_equals_u(self, a2):
        n = sym(a2, ALPHA1)
        h = regular_element(n, n)
        assert h is not None and h.is_zero()
        assert verify_regular(a2, h, n, n)

    @pytest.mark.parametrize("rank", [2, 3])
    def test_exhaustive_scan_no_failures(self, rank):
        # every reductive (N, U) pair at these ranks admits a witness
        g = build_algebra("A", rank)
        none_count = 0
        total = 0
        for u in enumerate_reductive(g, RootSubset(g)):
            for n in enumerate_reductive(g, u):
                total += 1
                h = regular_element(n, u)
                if h is None:
                    none_count += 1
                else:
                    assert verify_regular(g, h, n, u)
        assert total > 0
        assert none_count == 0

    def test_u_not_contained_rejected(self, a2):
        with pytest.raises(DomainError):
            regular_element(sym(a2, ALPHA1), sym(a2, ALPHA2))


class TestSubalgebraFromSubset:
    def test_empty_subset(self, a2):
        u = subalgebra_from_subset(RootSubset(a2))
        m = complement_from_subset(RootSubset(a2))
        assert u.dim == a2.rank
        assert m.dim == len(a2.roots)

    def test_full_subset(self, a2):
        u = subalgebra_from_subset(RootSubset(a2, a2.roots))
        m = complement_from_subset(RootSubset(a2, a2.roots))
        assert u.dim == a2.dim
        assert m.dim == 0

    def test_single_pair_subalgebra_and_stable_complement(self, a2):
        u_set = sym(a2, ALPHA1)
        u = subalgebra_from_subset(u_set)
        m = complement_from_subset(u_set)
        assert is_subalgebra(a2, u)
        # [u, m] stays inside m, checked vector by vector
        for urow in u.rows:
            x = LieElement.from_vector(urow)
            for mrow in m.rows:
                y = LieElement.from_vector(mrow)
                assert m.contains(a2.bracket(x, y).to_vector(a2.dim))

    def test_non_reductive_rejected(self, a2):
        with pytest.raises(DomainError):
            subalgebra_from_subset(sym(a2, ALPHA1, ALPHA2))
