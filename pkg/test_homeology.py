"""
Tests for the N double complexes and the spectral sequence engine
"""

import pytest

from src.abelian_groups import AbelianGroup, GroupHomomorphism
from src.bigraded_table import nonzero_graded
from src.chain_complexes import cohomology, homology
from src.errors import SpectralSequenceError
from src.homeology import (
    COHOMEOLOGY,
    HOMEOLOGY,
    SpectralSequence,
    all_tables,
    build_N,
    build_N_dual,
    cohomeology,
    diagonal_class,
    e1_via_links,
    e_infinity,
    homeology,
    spectral_page,
    total_cohomology,
)
from src.integer_matrix import IntMatrix
from src.simplicial_complex import (
    completely_connected_components,
    cone_points,
    disjoint_union,
    simplex_boundary,
    skeleton,
    standard_simplex,
    subcomplex,
    suspension,
    wedge,
)
from src.simplicial_maps import SimplicialMap, induced_on_cohomeology

Z = AbelianGroup.free(1)


class TestNComplex:
    def test_basis_of_an_edge(self, edge):
        F = build_N(edge)
        assert F.degrees == [0, 1]
        # v⊗v for 2 vertices, e⊗e, and v⊗e for both endpoints
        assert F.size(0) == 3
        assert F.size(1) == 2

    def test_reduced_adds_empty_simplex_rows(self, edge):
        F = build_N(edge, reduced=True)
        assert F.min_level == -1
        assert F.size(1) == 2 + 2
        assert F.size(2) == 1

    def test_differential_squares_to_zero(self, corpus):
        for K in corpus:
            build_N(K).check_square()
            build_N_dual(K, reduced=True).check_square()

    def test_dual_is_transpose(self, sphere):
        F = build_N(sphere)
        D = build_N_dual(sphere)
        assert D.kind == HOMEOLOGY
        for n in F.degrees:
            assert D.matrix(n + 1) == F.matrix(n).T

    def test_diagonal_class_is_a_cocycle(self, corpus):
        for K in corpus:
            F = build_N(K)
            assert not any(F.matrix(0).apply(diagonal_class(K, F)))

    def test_diagonal_class_signs(self, sphere):
        vector = diagonal_class(sphere)
        # vertices and edges count +1, triangles -1
        assert len(vector) == build_N(sphere).size(0)
        assert sorted(vector) == [-1] * 4 + [1] * 10


class TestTables:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_simplex(self, n):
        assert cohomeology(standard_simplex(n)) == {(n, n): Z}
        assert homeology(standard_simplex(n)) == {(n, n): Z}

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_sphere(self, n):
        K = simplex_boundary(n + 1)
        assert cohomeology(K) == {(0, n): Z, (n, n): Z}
        assert homeology(K) == {(0, n): Z, (n, n): Z}

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_reduced_sphere(self, n):
        assert cohomeology(simplex_boundary(n + 1), reduced=True) == {(n, n): Z}
        assert homeology(simplex_boundary(n + 1), reduced=True) == {(n, n): Z}

    def test_all_tables_keys(self, circle):
        tables = all_tables(circle)
        assert set(tables) == {"cohomeology", "reduced cohomeology", "homeology", "reduced homeology"}
        assert tables["cohomeology"] == cohomeology(circle)

    def test_not_a_homotopy_invariant(self, circle):
        # both are homotopy equivalent to a wedge of two 2-spheres
        three_cones = cone_points(circle, 3)
        two_suspensions = wedge(suspension(circle), suspension(circle))
        assert cohomeology(three_cones, reduced=True)[(2, 2)] == Z
        assert cohomeology(two_suspensions, reduced=True)[(2, 2)] == AbelianGroup.free(2)

    def test_field_coefficients(self, sphere):
        assert cohomeology(sphere, "q") == {(0, 2): Z, (2, 2): Z}
        assert cohomeology(sphere, "zp:2") == {(0, 2): AbelianGroup.cyclic(2), (2, 2): AbelianGroup.cyclic(2)}


class TestTotalCohomology:
    def test_matches_simplicial_cohomology(self, corpus):
        for K in corpus:
            assert nonzero_graded(total_cohomology(build_N(K))) == nonzero_graded(cohomology(K))

    def test_dual_matches_simplicial_homology(self, sphere, circle, triangle_wedge):
        for K in (sphere, circle, triangle_wedge):
            assert nonzero_graded(total_cohomology(build_N_dual(K))) == nonzero_graded(homology(K))

    def test_reduced_total(self, sphere):
        assert nonzero_graded(total_cohomology(build_N(sphere, reduced=True))) == {0: Z}


class TestSpectralSequence:
    def test_pages_start_at_one(self, circle):
        with pytest.raises(SpectralSequenceError):
            spectral_page(build_N(circle), 0)
        with pytest.raises(SpectralSequenceError):
            SpectralSequence(build_N(circle)).page(-1)

    def test_page_one_of_sphere(self, sphere):
        page = spectral_page(build_N(sphere), 1)
        # one row: vertex, edge and triangle links of the 2-sphere
        assert page.table() == {(0, 2): AbelianGroup.free(4), (1, 2): AbelianGroup.free(6),
                                (2, 2): AbelianGroup.free(4)}
        assert page.target((1, 2)) == (0, 2)

    def test_dual_page_targets(self, sphere):
        page = spectral_page(build_N_dual(sphere), 1)
        assert page.kind == HOMEOLOGY
        assert page.target((1, 2)) == (2, 2)

    def test_differentials_square_to_zero(self, sphere):
        sequence = SpectralSequence(build_N(sphere))
        page = sequence.page(1)
        for bidegree in page.cells:
            after = page.differential(page.target(bidegree))
            assert (after @ page.differential(bidegree)).is_zero()

    def test_cell_lifts_have_their_own_coordinates(self, circle):
        page = spectral_page(build_N(circle), 2)
        for cell in page.cells.values():
            for k, lift in enumerate(cell.lifts):
                expected = [0] * len(cell.orders)
                expected[k] = 1
                assert cell.coordinates(list(lift)) == tuple(expected)

    def test_e_infinity_over_rationals(self, sphere):
        assert e_infinity(build_N(sphere), "q") == {(0, 2): Z, (2, 2): Z}

    def test_e_infinity_of_dual(self, circle):
        assert e_infinity(build_N_dual(circle)) == homeology(circle)

    def test_unknown_kind(self, circle):
        F = build_N(circle)
        with pytest.raises(SpectralSequenceError):
            type(F)(kind="other", reduced=False, basis=F.basis, differential=F.differential)


class TestLinkPage:
    @pytest.mark.parametrize("reduced", [False, True])
    def test_matches_page_one(self, sphere, reduced):
        engine = spectral_page(build_N(sphere, reduced), 1)
        assert e1_via_links(sphere, reduced=reduced).table() == engine.table()

    def test_matches_page_one_on_corpus(self, corpus):
        for K in corpus:
            assert e1_via_links(K).table() == spectral_page(build_N(K), 1).table()

    def test_lifts_represent_engine_generators(self, sphere):
        F = build_N(sphere)
        engine = spectral_page(F, 1)
        links = e1_via_links(sphere, complex_=F)
        assert links.kind == COHOMEOLOGY
        for bidegree, cell in links.cells.items():
            target = engine.cells[bidegree]
            columns = [target.coordinates(list(lift)) for lift in cell.lifts]
            change = GroupHomomorphism(cell.orders, target.orders,
                                       IntMatrix.from_columns(columns, len(target.orders)))
            assert change.is_isomorphism()

    def test_link_differentials_square_to_zero(self, sphere):
        page = e1_via_links(sphere)
        for (p, q) in page.cells:
            if (p - 1, q) in page.differentials and (p, q) in page.differentials:
                assert (page.differential((p - 1, q)) @ page.differential((p, q))).is_zero()


class TestConvergence:
    def test_e_infinity_sums_to_total_cohomology(self, corpus):
        for K in corpus:
            F = build_N(K)
            stable = e_infinity(F, "q")
            total = total_cohomology(F, "q")
            for n in F.degrees:
                assert sum(g.rank for _, g in stable.total_degree(n)) == total[n].rank, (K, n)

    def test_connected_complex_keeps_one_diagonal_class(self, triangle_wedge):
        assert e_infinity(build_N(triangle_wedge), "q").total_degree(0) == [((2, 2), Z)]


class TestDisjointUnion:
    def test_tables_add_cellwise(self, corpus):
        for K, L in zip(corpus, corpus[1:] + corpus[:1]):
            union = disjoint_union(K, L)
            assert cohomeology(union) == cohomeology(K) + cohomeology(L)
            assert homeology(union) == homeology(K) + homeology(L)

    def test_sphere_and_wedge(self, sphere, triangle_wedge):
        union = disjoint_union(sphere, triangle_wedge)
        assert cohomeology(union) == {(0, 2): Z, (0, 1): Z, (2, 2): AbelianGroup.free(3)}


def skeleton_cases(corpus, triangle_wedge):
    return corpus + [standard_simplex(3), simplex_boundary(4), disjoint_union(triangle_wedge, standard_simplex(3))]


class TestSkeletonComparison:
    def test_low_rows_match(self, corpus, triangle_wedge):
        for K in skeleton_cases(corpus, triangle_wedge):
            table = cohomeology(K)
            for n in range(1, K.dim):
                low = cohomeology(skeleton(K, n))
                for q in range(n):
                    for p in range(q + 1):
                        assert table[(p, q)] == low[(p, q)], (K, n, p, q)

    @pytest.mark.parametrize("r, coeffs", [(2, "z"), (3, "q")])
    def test_diagonal_of_later_pages(self, corpus, triangle_wedge, r, coeffs):
        for K in skeleton_cases(corpus, triangle_wedge):
            page = spectral_page(build_N(K), r, coeffs)
            for n in range(1, K.dim):
                low = spectral_page(build_N(skeleton(K, n)), r, coeffs)
                for p in range(n):
                    assert page.group((p, p)) == low.group((p, p)), (K, n, p)

    def test_inclusion_induces_the_isomorphisms(self, corpus, triangle_wedge):
        for K in skeleton_cases(corpus, triangle_wedge):
            for n in range(1, K.dim):
                inclusion = SimplicialMap.inclusion(skeleton(K, n), K)
                for (p, q), homomorphism in induced_on_cohomeology(inclusion).items():
                    if q < n:
                        assert homomorphism.is_isomorphism(), (K, n, p, q)
                for (p, q), homomorphism in induced_on_cohomeology(inclusion, "q", page=3).items():
                    if p == q < n:
                        assert homomorphism.is_isomorphism(), (K, n, p)

    def test_wedge_row_survives_in_the_skeleton(self, triangle_wedge):
        K = disjoint_union(triangle_wedge, standard_simplex(3))
        maps = induced_on_cohomeology(SimplicialMap.inclusion(skeleton(K, 2), K))
        assert maps[(0, 1)].source == Z
        assert maps[(0, 1)].is_isomorphism()


def union_of_components_above(K, n):
    """Union of the completely connected components of dimension > n"""
    faces = [face for C in completely_connected_components(K) if C.dim > n for face in C.all_faces()]
    return subcomplex(K, faces)


class TestTopRows:
    def test_next_to_top_row_is_free(self, corpus):
        for K in corpus:
            table = cohomeology(K)
            for n in range(1, K.dim + 1):
                assert table[(n - 1, n)].is_free, (K, n)

    def test_rank_bound_over_higher_components(self, corpus):
        for K in corpus:
            for n in range(1, K.dim):
                L = union_of_components_above(K, n)
                if L.dim <= n:
                    continue
                m1 = len(completely_connected_components(L))
                m2 = len(completely_connected_components(skeleton(L, n)))
                assert cohomeology(L)[(n - 1, n)].rank >= m1 - m2, (K, n)

    def test_wedge_of_triangles_meets_the_bound(self, triangle_wedge):
        L = union_of_components_above(triangle_wedge, 1)
        assert L == triangle_wedge
        m1 = len(completely_connected_components(L))
        m2 = len(completely_connected_components(skeleton(L, 1)))
        assert (m1, m2) == (2, 1)
        assert cohomeology(L)[(0, 1)] == Z
