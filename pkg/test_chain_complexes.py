"""
Tests for simplicial chain complexes, (co)homology and link cohomology
"""

import pytest

from src.abelian_groups import AbelianGroup
from src.errors import ChainComplexError, ComplexError, DegreeOutOfRangeError
from src.chain_complexes import (
    ChainBasis,
    IntChainComplex,
    boundary_matrix,
    coboundary_matrix,
    cohomology,
    homology,
    link_cohomology,
    reduced_link_cohomology,
    simplicial_chain_complex,
)
from src.integer_matrix import IntMatrix
from src.simplicial_complex import EMPTY_SIMPLEX, Simplex, SimplicialComplex, simplex_boundary, standard_simplex

Z = AbelianGroup.free(1)
TRIVIAL = AbelianGroup()


def projective_plane() -> SimplicialComplex:
    """Six-vertex real projective plane"""
    facets = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
    ]
    return SimplicialComplex.from_facets(range(1, 7), facets)


def test_boundary_of_triangle():
    K = standard_simplex(2)
    d = boundary_matrix(K, 2)
    # (0,1,2) -> (1,2) - (0,2) + (0,1); edges ordered (0,1), (0,2), (1,2)
    assert d.to_rows() == [[1], [-1], [1]]


def test_reduced_boundary_in_degree_zero():
    K = standard_simplex(1)
    assert boundary_matrix(K, 0, reduced=True).to_rows() == [[1, 1]]
    assert boundary_matrix(K, 0).shape == (0, 2)


def test_boundary_squares_to_zero(sphere):
    for k in range(1, sphere.dim + 1):
        assert (boundary_matrix(sphere, k - 1) @ boundary_matrix(sphere, k)).is_zero()


@pytest.mark.parametrize("reduced", [False, True])
def test_coboundary_is_transpose(sphere, reduced):
    low = -1 if reduced else 0
    for k in range(low, sphere.dim):
        assert coboundary_matrix(sphere, k, reduced) == boundary_matrix(sphere, k + 1, reduced).T


def test_degree_out_of_range(triangle):
    with pytest.raises(DegreeOutOfRangeError):
        boundary_matrix(triangle, 3)
    with pytest.raises(DegreeOutOfRangeError):
        boundary_matrix(triangle, -1)


def test_sphere_homology(sphere):
    assert homology(sphere) == {0: Z, 1: TRIVIAL, 2: Z}
    assert cohomology(sphere) == {0: Z, 1: TRIVIAL, 2: Z}
    assert homology(sphere, reduced=True) == {-1: TRIVIAL, 0: TRIVIAL, 1: TRIVIAL, 2: Z}


def test_disk_is_acyclic():
    assert all(g.is_trivial for g in homology(standard_simplex(3), reduced=True).values())


def test_empty_complex_reduced_homology():
    empty = SimplicialComplex([], [])
    assert homology(empty, reduced=True) == {-1: Z}


def test_projective_plane_torsion():
    P = projective_plane()
    assert homology(P) == {0: Z, 1: AbelianGroup.cyclic(2), 2: TRIVIAL}
    assert cohomology(P) == {0: Z, 1: TRIVIAL, 2: AbelianGroup.cyclic(2)}


def test_projective_plane_with_field_coefficients():
    P = projective_plane()
    assert homology(P, "q") == {0: Z, 1: TRIVIAL, 2: TRIVIAL}
    assert homology(P, "zp:2") == {0: AbelianGroup.cyclic(2), 1: AbelianGroup.cyclic(2),
                                   2: AbelianGroup.cyclic(2)}
    assert cohomology(P, "zp:3") == {0: AbelianGroup.cyclic(3), 1: TRIVIAL, 2: TRIVIAL}


def test_cycle_homology_over_prime_field(circle):
    assert homology(circle, "zp:3") == {0: AbelianGroup.cyclic(3), 1: AbelianGroup.cyclic(3)}


def test_chain_complex_rejects_nonzero_square():
    basis = ChainBasis({0: ("a",), 1: ("e",), 2: ("f",)})
    boundary = {1: IntMatrix.from_rows([[1]]), 2: IntMatrix.from_rows([[1]])}
    with pytest.raises(ChainComplexError):
        IntChainComplex(basis, boundary)


def test_chain_complex_rejects_bad_shape():
    basis = ChainBasis({0: ("a", "b"), 1: ("e",)})
    with pytest.raises(ChainComplexError):
        IntChainComplex(basis, {1: IntMatrix.zeros(1, 1)})


def test_homology_presentation_generators(circle):
    chain = simplicial_chain_complex(circle)
    presentation = chain.homology_presentation(1)
    assert presentation.group == Z
    (cycle,) = presentation.lifts()
    assert chain.boundary_matrix(1).apply(cycle) == [0, 0, 0]


class TestLinkCohomology:
    def test_vertex_link_in_sphere(self, sphere):
        result = link_cohomology(sphere, Simplex(("0",)), 1)
        assert result.group == Z
        assert result.link.f_vector() == [3, 3]

    def test_facet_link_is_empty_complex(self, sphere):
        result = link_cohomology(sphere, Simplex(("0", "1", "2")), -1)
        assert result.group == Z
        assert result.cells == (EMPTY_SIMPLEX,)

    def test_empty_simplex_gives_the_complex(self, sphere):
        assert link_cohomology(sphere, EMPTY_SIMPLEX, 2).group == Z

    def test_row_indexing(self, sphere):
        # q = 2 with |σ| = 1 reads H̃^1 of the vertex link
        assert reduced_link_cohomology(sphere, Simplex(("0",)), 2).group == Z
        assert reduced_link_cohomology(sphere, Simplex(("0", "1")), 2).group == Z
        assert reduced_link_cohomology(sphere, Simplex(("0", "1")), 1).group.is_trivial

    def test_summands_need_a_nonempty_simplex(self, sphere):
        with pytest.raises(ComplexError):
            reduced_link_cohomology(sphere, EMPTY_SIMPLEX, 0)

    def test_boundary_face_of_disk_has_acyclic_link(self):
        D = standard_simplex(2)
        for degree in range(-1, 2):
            assert link_cohomology(D, Simplex(("0",)), degree).group.is_trivial


def test_boundary_of_simplex_homology():
    assert homology(simplex_boundary(4), reduced=True)[3] == Z
