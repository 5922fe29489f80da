from fractions import Fraction
from itertools import combinations
from math import gcd

from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from prymatroid.linalg import (
    det,
    hnf,
    hnf_basis,
    identity,
    int_kernel,
    is_unimodular,
    lattice_index,
    matmul,
    matvec,
    rank,
    same_lattice,
    snf,
    solve_in_lattice,
)


def matrices(max_rows=4, max_cols=4, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def square(n_max=4, lo=-5, hi=5):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def is_hnf(h):
    last = -1
    seen_zero = False
    for row in h:
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        if seen_zero:
            return False
        p = nz[0]
        if p <= last or row[p] <= 0:
            return False
        last = p
    for i, row in enumerate(h):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        p = nz[0]
        for k in range(i):
            if not 0 <= h[k][p] < row[p]:
                return False
    return True


def test_hnf_identity():
    h, u = hnf(identity(2))
    assert h == identity(2) and u == identity(2)


def test_hnf_small_example():
    m = [[2, 4], [1, 1]]
    h, u = hnf(m)
    assert matmul(u, m) == h
    assert abs(det(u)) == 1
    assert is_hnf(h)
    assert abs(det(h)) == abs(det(m))


def test_hnf_zero_matrix():
    h, u = hnf([[0, 0], [0, 0]])
    assert h == [[0, 0], [0, 0]]
    assert is_unimodular(u)


@given(matrices())
def test_hnf_transform_and_shape(m):
    h, u = hnf(m)
    assert matmul(u, m, len(m[0])) == h
    assert abs(det(u)) == 1
    assert is_hnf(h)


@given(matrices())
def test_hnf_canonical_under_row_operations(m):
    # any unimodular row operation leaves the HNF unchanged
    n = len(m[0])
    mixed = [list(r) for r in m]
    if len(mixed) > 1:
        mixed[0] = [a + 3 * b for a, b in zip(mixed[0], mixed[1])]
        mixed[0], mixed[-1] = mixed[-1], mixed[0]
    assert hnf_basis(mixed, n) == hnf_basis(m, n)


def test_snf_examples():
    assert snf([[2, 0], [0, 1]]) == [1, 2]
    assert snf([[2, 0], [0, 2]]) == [2, 2]
    assert snf([[0, 0], [0, 0]]) == [0, 0]


def determinantal_divisors(m):
    rows, cols = len(m), len(m[0])
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, int(det([[m[i][j] for j in cs] for i in rs])))
        out.append(g)
    return out


@given(matrices(lo=-4, hi=4))
def test_snf_matches_determinantal_divisors(m):
    f = snf(m)
    dd = determinantal_divisors(m)
    prod = 1
    for k, d in enumerate(dd):
        if d == 0:
            assert all(x == 0 for x in f[k:])
            break
        assert prod * f[k] == d
        prod *= f[k]


@given(matrices())
def test_snf_divisibility_chain(m):
    f = [x for x in snf(m) if x]
    for a, b in zip(f, f[1:]):
        assert b % a == 0


def test_int_kernel_examples():
    assert int_kernel(identity(3)) == []
    assert int_kernel([[1, 1]]) == [[1, -1]]


def test_int_kernel_type_two_circuit():
    # closedness conditions of an odd loop, a bridge and an odd loop
    m = [[-2, -1, 0], [0, 1, -2]]
    ker = int_kernel(m)
    assert len(ker) == 1
    assert ker[0] in ([-1, 2, 1], [1, -2, -1])


def saturated_rowspace_oracle(vectors, n):
    # row space over Q intersected with Z^n, via a sympy Smith decomposition
    if not vectors:
        return []
    b = Matrix(vectors)
    k = b.rank()
    s, u, v = smith_normal_decomp(b)
    vinv = v.inv()
    rows = [[int(vinv[i, j]) for j in range(n)] for i in range(k)]
    return hnf_basis(rows, n)


def rational_kernel_oracle(m, n):
    ns = Matrix(m).nullspace()
    vecs = []
    for v in ns:
        den = 1
        for x in v:
            den = den * x.q // gcd(den, x.q)
        vecs.append([int(x * den) for x in v])
    return saturated_rowspace_oracle(vecs, n)


@given(matrices(max_rows=3, max_cols=5))
def test_int_kernel_against_rational_oracle(m):
    n = len(m[0])
    ker = int_kernel(m, n)
    for v in ker:
        assert not any(matvec(m, v))
    assert ker == rational_kernel_oracle(m, n)


@given(matrices(max_rows=3, max_cols=5))
def test_int_kernel_is_normalized(m):
    for v in int_kernel(m, len(m[0])):
        first = next(x for x in v if x)
        assert first > 0


def test_det_examples():
    assert det([[3, 3], [3, 7]]) == 12
    assert det(identity(4)) == 1
    assert det([[1, 1], [1, 1]]) == 0


@given(square(), square())
def test_det_multiplicative(a, b):
    n = min(len(a), len(b))
    a = [r[:n] for r in a[:n]]
    b = [r[:n] for r in b[:n]]
    assert det(matmul(a, b)) == det(a) * det(b)


@given(square())
def test_det_matches_sympy(a):
    assert det(a) == int(Matrix(a).det())


@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == Matrix(m).rank()


def test_det_of_fractions():
    assert det([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)


def test_lattice_helpers():
    full = identity(2)
    sub = [[1, 1], [1, -1]]
    assert lattice_index(sub, full, 2) == 2
    assert lattice_index(full, full, 2) == 1
    assert not same_lattice(sub, full, 2)
    assert solve_in_lattice(sub, [2, 0]) == [1, 1]
    assert solve_in_lattice(sub, [1, 0]) is None
