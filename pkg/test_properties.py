"""
Randomized property suites over small matrices and seeded random complexes.

Run with `pytest -m property`; HOMEOLOGY_HYPOTHESIS_PROFILE=thorough raises the example count.
"""

from itertools import product
from math import gcd, prod

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import Matrix

from src.abelian_groups import AbelianGroup, Subquotient, group_tensor, subquotient_group
from src.bigraded_table import nonzero_graded
from src.chain_complexes import boundary_matrix, coboundary_matrix, cohomology
from src.homeology import build_N, diagonal_class, total_cohomology
from src.integer_matrix import IntMatrix, invariant_factors, smith_normal_form, unimodular_inverse
from src.simplicial_complex import random_complex
from src.structure_checks import check_euler

pytestmark = pytest.mark.property

entries = st.integers(min_value=-6, max_value=6)


@st.composite
def matrices(draw, max_size=4, square=False):
    rows = draw(st.integers(min_value=1, max_value=max_size))
    cols = rows if square else draw(st.integers(min_value=1, max_value=max_size))
    values = draw(st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return IntMatrix.from_rows(values)


@st.composite
def complexes(draw, max_vertices=5):
    n = draw(st.integers(min_value=3, max_value=max_vertices))
    dim = draw(st.integers(min_value=1, max_value=2))
    density = draw(st.floats(min_value=0.2, max_value=0.9))
    seed = draw(st.integers(min_value=0, max_value=10_000))
    return random_complex(n, dim, density=density, seed=seed)


@given(matrices())
def test_smith_normal_form_is_a_unimodular_diagonalization(M):
    U, D, V = smith_normal_form(M)
    assert U @ M @ V == D
    unimodular_inverse(U)
    unimodular_inverse(V)
    diagonal = [D[i, i] for i in range(min(D.shape))]
    assert all(D[i, j] == 0 for (i, j), _ in D.items() if i != j)
    nonzero = [d for d in diagonal if d]
    assert all(d > 0 for d in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert len(nonzero) == Matrix(M.to_rows()).rank()


@given(matrices(square=True))
def test_quotient_of_the_full_lattice_matches_determinant(A):
    n = A.shape[0]
    group = subquotient_group(Subquotient(n, IntMatrix.identity(n), A)).group
    oracle = Matrix(A.to_rows())
    assert group.rank == n - oracle.rank()
    if oracle.det() != 0:
        assert prod(group.torsion) == abs(int(oracle.det()))


@given(st.data())
def test_invariant_factors_survive_permutations_and_unimodular_operations(data):
    M = data.draw(matrices())
    rows = M.to_rows()
    row_order = data.draw(st.permutations(range(M.rows)))
    col_order = data.draw(st.permutations(range(M.cols)))
    shuffled = [[rows[i][j] for j in col_order] for i in row_order]
    assert invariant_factors(IntMatrix.from_rows(shuffled)) == invariant_factors(M)

    factor = data.draw(st.integers(min_value=-3, max_value=3))
    if M.rows > 1:
        i, j = data.draw(st.permutations(range(M.rows)))[:2]
        shuffled[i] = [a + factor * b for a, b in zip(shuffled[i], shuffled[j])]
    if M.cols > 1:
        i, j = data.draw(st.permutations(range(M.cols)))[:2]
        for row in shuffled:
            row[i] += factor * row[j]
    assert invariant_factors(IntMatrix.from_rows(shuffled)) == invariant_factors(M)


@st.composite
def finite_subquotients(draw):
    """Z = span(A) in Z^d and B = span(A·C) with C nonsingular, so Z/B ≅ Z^k / C·Z^k"""
    k = draw(st.integers(min_value=1, max_value=3))
    d = draw(st.integers(min_value=k, max_value=4))
    A = draw(st.lists(st.lists(entries, min_size=k, max_size=k), min_size=d, max_size=d))
    assume(Matrix(A).rank() == k)
    small = st.integers(min_value=-3, max_value=3)
    C = draw(st.lists(st.lists(small, min_size=k, max_size=k), min_size=k, max_size=k))
    order = abs(int(Matrix(C).det()))
    assume(order != 0 and order ** k <= 4096)
    return A, C


def coset_keys(C):
    """
    One key per coset of Z^k / C·Z^k: x and y share a coset exactly when adj(C)(x - y) ≡ 0 mod |det C|.
    Every coset has a member in the box [0, |det C|)^k.
    """
    adjugate = [[int(v) for v in row] for row in Matrix(C).adjugate().tolist()]
    order = abs(int(Matrix(C).det()))
    keys = set()
    for point in product(range(order), repeat=len(C)):
        keys.add(tuple(sum(a * x for a, x in zip(row, point)) % order for row in adjugate))
    return keys, order


@given(finite_subquotients())
def test_subquotient_matches_coset_enumeration(case):
    A, C = case
    d = len(A)
    numerator = IntMatrix.from_rows(A)
    denominator = numerator @ IntMatrix.from_rows(C)
    group = subquotient_group(Subquotient(d, numerator, denominator)).group
    keys, order = coset_keys(C)

    assert group.rank == 0
    assert prod(group.torsion) == len(keys)
    # the number of cosets killed by m fixes the group up to isomorphism
    for m in range(1, order + 1):
        if order % m == 0:
            killed = sum(1 for key in keys if all(m * v % order == 0 for v in key))
            assert killed == prod(gcd(m, t) for t in group.torsion)


@given(st.lists(st.integers(min_value=0, max_value=60), max_size=5))
def test_from_orders_keeps_rank_and_order(orders):
    group = AbelianGroup.from_orders(orders)
    assert group.rank == orders.count(0)
    assert prod(group.torsion) == prod(o for o in orders if o > 1)


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=1, max_value=40))
def test_tensor_of_cyclic_groups(a, b):
    assert group_tensor(AbelianGroup.cyclic(a), AbelianGroup.cyclic(b)) == AbelianGroup.cyclic(gcd(a, b))


@given(complexes(), st.booleans())
def test_simplicial_boundaries(K, reduced):
    low = -1 if reduced else 0
    for k in range(low + 1, K.dim + 1):
        assert coboundary_matrix(K, k - 1, reduced) == boundary_matrix(K, k, reduced).T
        if k - 1 > low:
            assert (boundary_matrix(K, k - 1, reduced) @ boundary_matrix(K, k, reduced)).is_zero()


@given(complexes(), st.booleans())
def test_n_differential_squares_to_zero(K, reduced):
    F = build_N(K, reduced)
    F.check_square()
    if not reduced:
        assert not any(F.matrix(0).apply(diagonal_class(K, F)))


@settings(max_examples=25)
@given(complexes(max_vertices=4))
def test_total_complex_computes_cohomology(K):
    assert nonzero_graded(total_cohomology(build_N(K))) == nonzero_graded(cohomology(K))


@settings(max_examples=25)
@given(complexes(max_vertices=4))
def test_euler_identity(K):
    assert check_euler(K).passed
