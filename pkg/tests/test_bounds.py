import pytest
from hypothesis import given
from hypothesis import strategies as st

from bvlattice.bounds import BoundReport, approx_root, bound_report, bv_box_radius, integer_root, siegel_floor
from bvlattice.errors import DegenerateInputError, EmptyKernelError, RankError
from bvlattice.kernel import ndet_sq
from bvlattice.linalg import IntMatrix
from helpers import random_family


def brute_root(x, r):
    m = 0
    while (m + 1) ** r <= x:
        m += 1
    return m


class TestIntegerRoot:
    @pytest.mark.parametrize("x, r, expected", [(6, 2, 2), (9, 4, 1), (10**18, 3, 10**6), (0, 5, 0), (1, 7, 1)])
    def test_examples(self, x, r, expected):
        assert integer_root(x, r) == expected

    def test_brute_force_small(self):
        for r in range(1, 7):
            for x in range(0, 3000):
                assert integer_root(x, r) == brute_root(x, r)

    def test_floor_contract_up_to_a_million(self):
        for r in (2, 3, 4, 5):
            for x in range(0, 10**6 + 1, 997):
                m = integer_root(x, r)
                assert m**r <= x < (m + 1) ** r

    @given(st.integers(0, 10**300), st.integers(1, 40))
    def test_floor_contract_big(self, x, r):
        m = integer_root(x, r)
        assert m**r <= x < (m + 1) ** r

    @given(st.integers(0, 10**60), st.integers(1, 12))
    def test_exact_powers(self, m, r):
        assert integer_root(m**r, r) == m
        if m:
            assert integer_root(m**r - 1, r) == m - 1

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            integer_root(5, 0)
        with pytest.raises(ValueError):
            integer_root(-1, 2)


def test_approx_root():
    assert approx_root(6, 2) == "2.4494897427831780982"
    assert approx_root(9, 2) == "3.0000000000000000000"
    assert approx_root(0, 3) == "0"
    assert approx_root(8, 3).startswith("2.000000000000000000")


class TestBvBoxRadius:
    def test_worked_example(self):
        assert bv_box_radius([[1, 2, 3], [4, 5, 6]]) == 2

    def test_two_dimensional_kernel(self):
        assert bv_box_radius([[2, 4, 4]]) == 1

    def test_unit(self):
        assert bv_box_radius([[1, 0]]) == 1

    def test_errors(self):
        with pytest.raises(RankError):
            bv_box_radius([[1, 2], [2, 4]])
        with pytest.raises(EmptyKernelError):
            bv_box_radius(IntMatrix.identity(2))


class TestSiegel:
    def test_worked_example(self):
        assert siegel_floor([[1, 2, 3], [4, 5, 6]]) == 325

    def test_unit(self):
        assert siegel_floor([[1, 0]]) == 3

    def test_irrational_exponent(self):
        # 1 + floor(sqrt(12)); 3^2 = 9 <= 12 < 16
        assert siegel_floor([[2, 4, 4]]) == 4

    def test_zero_matrix(self):
        with pytest.raises(DegenerateInputError):
            siegel_floor([[0, 0, 0]])

    def test_square(self):
        with pytest.raises(EmptyKernelError):
            siegel_floor([[1, 2], [3, 4]])

    def test_largest_m(self):
        for A in random_family(31, 100, 6, -9, 9):
            k, n = A.shape
            base = (n * A.max_abs()) ** k
            s = siegel_floor(A)
            assert (s - 1) ** (n - k) <= base < s ** (n - k)


class TestBoundReport:
    @pytest.mark.parametrize(
        "A, expected",
        [
            ([[1, 2, 3], [4, 5, 6]], (6, 1, 2, 325, 6)),
            ([[2, 4, 4]], (9, 2, 1, 4, 4)),
            ([[1, 0]], (1, 1, 1, 3, 1)),
        ],
    )
    def test_examples(self, A, expected):
        br = bound_report(A)
        assert (br.ndet_sq, br.codim, br.bv_box_radius, br.siegel_floor, br.a_max) == expected

    def test_invariants_random(self):
        for A in random_family(32, 300, 7, -9, 9):
            br = bound_report(A)
            assert isinstance(br, BoundReport)
            c = br.codim
            assert br.bv_box_radius ** (2 * c) <= br.ndet_sq < (br.bv_box_radius + 1) ** (2 * c)
            assert br.bv_box_radius <= br.siegel_floor
            assert br.ndet_sq == ndet_sq(A)

    def test_approx_labels(self):
        br = bound_report([[1, 2, 3], [4, 5, 6]])
        assert br.ndet_approx == "2.4494897427831780982"
        assert br.bv_approx == "2.4494897427831780982"
