"""
Tests for complexes, constructions and completely connected components
"""

from itertools import combinations

import pytest

from src.errors import (
    ComplexError,
    ComplexTooLargeError,
    DuplicateVertexError,
    GlueError,
    SimplexNotInComplexError,
    UnknownVertexError,
    VertexLabelCollisionError,
)
from src.simplicial_complex import (
    EMPTY_SIMPLEX,
    Simplex,
    SimplicialComplex,
    VertexId,
    cartesian_product,
    component_dimensions_containing,
    component_forest,
    completely_connected_components,
    cone_points,
    count_top_components,
    cylinder,
    disjoint_union,
    euler_characteristic,
    glue,
    is_completely_connected,
    join,
    link,
    permutation_sign,
    point,
    random_complex,
    simplex_boundary,
    skeleton,
    standard_simplex,
    star,
    staircase_chains,
    stellar_subdivide,
    subcomplex,
    suspension,
    wedge,
)


class TestConstruction:
    def test_closure_of_facets(self, triangle):
        assert triangle.f_vector() == [3, 3, 1]
        assert triangle.n_faces == 7
        assert EMPTY_SIMPLEX in triangle
        assert triangle.facets == (Simplex(("0", "1", "2")),)

    def test_facets_follow_vertex_order(self):
        K = SimplicialComplex.from_facets(["c", "a", "b"], [["a", "c"], ["b"]])
        assert K.simplex(["a", "c"]) == Simplex(("c", "a"))
        assert Simplex(("c", "a")) in K
        assert Simplex(("b",)) in K.facets

    def test_vertex_ids_carry_the_order(self):
        K = SimplicialComplex.from_facets(["c", "a", "b"], [["a", "c"], ["b"]])
        assert K.vertex_ids[0] == VertexId("c", 0)
        assert [v.ord for v in K.vertex_ids] == [0, 1, 2]

    def test_duplicate_vertex(self):
        with pytest.raises(DuplicateVertexError):
            SimplicialComplex.from_facets(["a", "a"], [["a"]])

    def test_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            SimplicialComplex.from_facets(["a", "b"], [["a", "z"]])

    def test_repeated_vertex_in_facet(self):
        with pytest.raises(ComplexError):
            SimplicialComplex.from_facets(["a", "b"], [["a", "a"]])

    def test_isolated_vertices_from_order(self):
        K = SimplicialComplex.from_facets(["a", "b", "c"], [["a", "b"]])
        assert Simplex(("c",)) in K.facets
        assert K.dim == 1

    def test_equality_and_hash(self):
        first = SimplicialComplex.from_facets("abc", [["a", "b"], ["b", "c"]])
        second = SimplicialComplex.from_facets("abc", [["b", "c"], ["a", "b"]])
        assert first == second
        assert hash(first) == hash(second)

    def test_require_face(self, circle):
        with pytest.raises(SimplexNotInComplexError):
            circle.require_face(Simplex(("0", "1", "2")))

    def test_permutation_sign(self):
        assert permutation_sign([0, 1, 2]) == 1
        assert permutation_sign([1, 0, 2]) == -1
        assert permutation_sign([2, 0, 1]) == 1
        assert permutation_sign([0, 0]) == 0


class TestLinksAndStars:
    def test_link_of_vertex_in_sphere(self, sphere):
        L = link(sphere, Simplex(("0",)))
        assert L.f_vector() == [3, 3]
        assert euler_characteristic(L) == 0

    def test_link_of_empty_simplex(self, sphere):
        assert link(sphere, EMPTY_SIMPLEX) == sphere

    def test_link_of_facet_is_empty(self, triangle):
        L = link(triangle, Simplex(("0", "1", "2")))
        assert L.dim == -1
        assert L.n_faces == 0

    def test_star_of_vertex(self, triangle_wedge):
        S = star(triangle_wedge, Simplex(("a",)))
        assert S.f_vector() == [3, 3, 1]

    def test_skeleton(self):
        assert skeleton(standard_simplex(3), 1).f_vector() == [4, 6]
        with pytest.raises(ComplexError):
            skeleton(standard_simplex(3), -2)


class TestSubdivision:
    def test_subdivide_edge_of_triangle(self, triangle):
        K = stellar_subdivide(triangle, Simplex(("0", "1")))
        assert K.vertices == ("0", "1", "2", "w0")
        assert K.f_vector() == [4, 5, 2]
        assert Simplex(("0", "1")) not in K
        assert Simplex(("0", "2", "w0")) in K

    def test_subdivide_triangle(self, triangle):
        K = stellar_subdivide(triangle, Simplex(("0", "1", "2")), "m")
        assert K.f_vector() == [4, 6, 3]
        assert euler_characteristic(K) == 1

    def test_subdivide_vertex_is_identity(self, triangle):
        assert stellar_subdivide(triangle, Simplex(("0",))) == triangle

    def test_subdivide_empty_simplex(self, triangle):
        with pytest.raises(ComplexError):
            stellar_subdivide(triangle, EMPTY_SIMPLEX)

    def test_label_collision(self, triangle):
        with pytest.raises(VertexLabelCollisionError):
            stellar_subdivide(triangle, Simplex(("0", "1")), "2")

    def test_not_a_face(self, circle):
        with pytest.raises(SimplexNotInComplexError):
            stellar_subdivide(circle, Simplex(("0", "1", "2")))


class TestJoinsAndProducts:
    def test_join_of_two_point_pairs_is_a_square(self, two_points):
        K = join(two_points, two_points)
        assert K.vertices == ("n", "s", "n'", "s'")
        assert K.f_vector() == [4, 4]
        assert euler_characteristic(K) == 0

    def test_disjoint_union_of_points(self):
        K = disjoint_union(point(), point())
        assert K.vertices == ("0", "0'")
        assert K.f_vector() == [2]
        assert euler_characteristic(K) == 2

    def test_cone_is_contractible(self, circle):
        cone = cone_points(circle, 1)
        assert euler_characteristic(cone) == 1
        assert cone.f_vector() == [4, 6, 3]

    def test_cone_points_rejects_negative(self, circle):
        with pytest.raises(ComplexError):
            cone_points(circle, -1)

    def test_suspension_of_circle(self, circle):
        assert euler_characteristic(suspension(circle)) == 2

    def test_staircase_chains(self):
        chains = list(staircase_chains(Simplex(("a", "b")), Simplex(("x", "y", "z"))))
        assert len(chains) == 3
        assert chains[0][0] == ("a", "x")
        assert all(chain[-1] == ("b", "z") for chain in chains)

    def test_square_of_an_edge(self, edge):
        P = cartesian_product(edge, edge)
        assert P.f_vector() == [4, 5, 2]

    def test_torus(self, circle):
        torus = cartesian_product(circle, circle)
        assert torus.f_vector() == [9, 27, 18]
        assert euler_characteristic(torus) == 0

    def test_cylinder(self, circle):
        C = cylinder(circle)
        assert C.f_vector() == [6, 12, 6]
        assert euler_characteristic(C) == 0


class TestGlue:
    def test_wedge_of_triangles(self, triangle):
        K = wedge(triangle, triangle)
        assert K.f_vector() == [5, 6, 2]

    def test_glue_along_edge(self, triangle):
        result = glue(triangle, triangle, {"0": "0", "1": "1"})
        assert result.complex.f_vector() == [4, 5, 2]
        assert result.intersection.facets == (Simplex(("0", "1")),)
        assert result.relabeling["2"] == "2'"

    def test_non_injective_identification(self, triangle):
        with pytest.raises(GlueError):
            glue(triangle, triangle, {"0": "0", "1": "0"})

    def test_unknown_identification_vertex(self, triangle):
        with pytest.raises(GlueError):
            glue(triangle, triangle, {"9": "0"})

    def test_identification_must_preserve_faces(self):
        K = SimplicialComplex.from_facets("ab", [["a"], ["b"]])
        L = SimplicialComplex.from_facets("xy", [["x", "y"]])
        with pytest.raises(GlueError):
            glue(K, L, {"x": "a", "y": "b"})


def shared_dimension(first, second):
    return max(face.dim for face in set(first.all_faces()) & set(second.all_faces()))


class TestComponents:
    def test_euler_characteristic(self, sphere, triangle, circle):
        assert euler_characteristic(sphere) == 2
        assert euler_characteristic(triangle) == 1
        assert euler_characteristic(circle) == 0

    def test_wedge_has_two_top_components(self, triangle_wedge):
        assert count_top_components(triangle_wedge, 2) == 2
        assert count_top_components(triangle_wedge, 1) == 0
        assert count_top_components(triangle_wedge, 0) == 0

    def test_isolated_vertex_is_a_component(self):
        K = SimplicialComplex.from_facets("abc", [["a", "b"], ["c"]])
        assert count_top_components(K, 0) == 1
        assert count_top_components(K, 1) == 1
        assert count_top_components(K, 5) == 0

    def test_exhaustive_search_agrees(self, triangle_wedge):
        components = completely_connected_components(triangle_wedge)
        assert sorted(c.dim for c in components) == [2, 2]
        assert all(is_completely_connected(c) for c in components)

    def test_exhaustive_search_with_isolated_vertex(self):
        K = SimplicialComplex.from_facets("abc", [["a", "b"], ["c"]])
        components = completely_connected_components(K)
        assert sorted(c.dim for c in components) == [0, 1]

    def test_components_meet_below_their_dimensions(self, corpus, triangle, sphere):
        glued = [
            glue(triangle, triangle, {"0": "0"}).complex,
            glue(triangle, triangle, {"0": "0", "1": "1"}).complex,
            glue(sphere, triangle, {"0": "0"}).complex,
            glue(standard_simplex(3), triangle, {"0": "0"}).complex,
            glue(standard_simplex(3), simplex_boundary(2), {"0": "0", "1": "1"}).complex,
        ]
        for K in corpus + glued:
            for first, second in combinations(completely_connected_components(K), 2):
                assert shared_dimension(first, second) < min(first.dim, second.dim), K

    def test_wedge_components_share_both_boundaries(self, triangle_wedge):
        first, second = completely_connected_components(triangle_wedge)
        shared = set(first.all_faces()) & set(second.all_faces())
        assert subcomplex(triangle_wedge, shared).f_vector() == [5, 6]

    def test_tetrahedron_with_a_triangle_at_a_vertex(self):
        K = glue(standard_simplex(3), standard_simplex(2), {"0": "0"}).complex
        components = sorted(completely_connected_components(K), key=lambda c: c.dim)
        assert [c.dim for c in components] == [2, 3]
        assert shared_dimension(*components) == 1

    def test_exhaustive_search_budget(self, sphere):
        with pytest.raises(ComplexTooLargeError):
            completely_connected_components(sphere, face_budget=5)

    def test_sphere_is_completely_connected(self, sphere):
        assert is_completely_connected(sphere)

    def test_wedge_is_not_completely_connected(self, triangle_wedge):
        assert not is_completely_connected(triangle_wedge)

    def test_component_dimensions(self, triangle_wedge):
        assert component_dimensions_containing(triangle_wedge, Simplex(("c",))) == [2]
        K = SimplicialComplex.from_facets("abc", [["a", "b"], ["c"]])
        assert component_dimensions_containing(K, Simplex(("c",))) == [0]
        assert component_dimensions_containing(K, Simplex(("a",))) == [1]

    def test_component_forest(self, triangle_wedge):
        forest = component_forest(triangle_wedge)
        assert {d: len(level) for d, level in forest.levels.items()} == {0: 1, 1: 1, 2: 2}
        assert sorted(forest.leaves()) == [(2, 0), (2, 1)]
        assert [cls.dim for cls in forest.chain(2, 1)] == [2, 1, 0]
        assert sorted(c.dim for c in forest.components()) == [2, 2]

    def test_forest_of_edge_and_point(self):
        forest = component_forest(SimplicialComplex.from_facets("abc", [["a", "b"], ["c"]]))
        assert len(forest.levels[0]) == 2
        assert forest.levels[1][0].parent == forest.class_of(Simplex(("a",)))[1]
        assert sorted(c.dim for c in forest.components()) == [0, 1]


class TestRandomComplexes:
    def test_seeded_complexes_repeat(self):
        assert random_complex(6, 2, density=0.5, seed=11) == random_complex(6, 2, density=0.5, seed=11)

    def test_random_complex_is_nonempty(self):
        K = random_complex(4, 2, density=0.01, seed=3)
        assert K.dim == 2

    def test_invalid_parameters(self):
        with pytest.raises(ComplexError):
            random_complex(3, 3)

    def test_boundary_needs_positive_dimension(self):
        with pytest.raises(ComplexError):
            simplex_boundary(0)
