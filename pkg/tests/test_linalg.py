from fractions import Fraction

from hypothesis import given, settings, strategies as st

from qehrhart.linalg import Echelon, Mat, nullspace, rank, rref, solve


def test_rref_identity():
    ech, piv = rref(Mat([[1, 0], [0, 1]]))
    assert piv == [0, 1]
    assert ech.entries == [[1, 0], [0, 1]]


def test_rref_rank_one():
    ech, piv = rref(Mat([[1, 1], [1, 1]]))
    assert piv == [0]
    assert rank(Mat([[1, 1], [1, 1]])) == 1


def test_vandermonde_rank():
    # determinant is the product of differences, 2 for {0,1,2}
    M = Mat([[z ** i for i in range(3)] for z in (0, 1, 2)])
    assert rank(M) == 3


def test_nullspace_zero_matrix():
    ns = nullspace(Mat([[0, 0, 0]]))
    assert len(ns) == 3


def test_nullspace_line():
    ns = nullspace(Mat([[1, 1]]))
    assert len(ns) == 1
    v = ns[0]
    assert v[0] + v[1] == 0 and any(v)


def test_solve_inconsistent():
    assert solve(Mat([[1], [1]]), [1, 2]) is None


def test_solve_unique():
    x = solve(Mat([[2, 0], [0, 4]]), [1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 4)]


small = st.integers(-6, 6)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows):
    M = Mat(rows)
    ns = nullspace(M)
    assert rank(M) + len(ns) == M.cols
    for v in ns:
        assert all(x == 0 for x in M.mul_vec(v))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=2, max_size=4))
@settings(max_examples=40, deadline=None)
def test_rref_preserves_row_space(rows):
    M = Mat(rows)
    ech, piv = rref(M)
    before = Echelon()
    for r in M.entries:
        before.add(r)
    after = Echelon()
    for r in ech.entries:
        if any(r):
            after.add(r)
    assert before.dim == after.dim == len(piv)
    for r in ech.entries:
        assert before.contains(r)
    for r in M.entries:
        assert after.contains(r)


@given(st.fractions(min_value=-50, max_value=50, max_denominator=10),
       st.fractions(min_value=-50, max_value=50, max_denominator=10))
@settings(max_examples=60, deadline=None)
def test_exact_arithmetic_round_trip(a, b):
    assert (a + b) - b == a
