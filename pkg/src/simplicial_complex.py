"""
Finite abstract simplicial complexes and their combinatorial constructions
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import numpy as np

from src.config import config
from src.errors import (
    ComplexError,
    ComplexTooLargeError,
    DuplicateVertexError,
    GlueError,
    SimplexNotInComplexError,
    UnknownVertexError,
    VertexLabelCollisionError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexId:
    """A vertex label together with its rank in the vertex order"""
    name: str
    ord: int


@dataclass(frozen=True)
class Simplex:
    """A simplex stored as its vertex labels, sorted by the owning complex's vertex order"""
    vertices: Tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def __contains__(self, label: str) -> bool:
        return label in self.vertices

    def issubset(self, other: "Simplex") -> bool:
        return set(self.vertices) <= set(other.vertices)

    def without(self, label: str) -> "Simplex":
        return Simplex(tuple(v for v in self.vertices if v != label))

    def facets(self) -> List["Simplex"]:
        """Codimension-one faces, in order of the deleted vertex position"""
        return [Simplex(self.vertices[:i] + self.vertices[i + 1:]) for i in range(len(self.vertices))]

    def subsets(self) -> Iterator["Simplex"]:
        """All faces of this simplex, the empty one included"""
        for size in range(len(self.vertices) + 1):
            for combo in itertools.combinations(self.vertices, size):
                yield Simplex(combo)

    def __str__(self) -> str:
        if not self.vertices:
            return "∅"
        return "(" + ",".join(self.vertices) + ")"


EMPTY_SIMPLEX = Simplex()


class SimplicialComplex:
    """Immutable finite abstract simplicial complex over an ordered vertex set"""

    __slots__ = ("_vertices", "_ord", "_faces", "_by_dim", "_facets")

    def __init__(self, vertices: Sequence[str], faces: Iterable[Simplex]):
        # Trusted constructor: faces must already be closed and canonically sorted.
        self._vertices = tuple(vertices)
        self._ord = {v: i for i, v in enumerate(self._vertices)}
        face_set = set(faces)
        face_set.add(EMPTY_SIMPLEX)
        by_dim: Dict[int, List[Simplex]] = {}
        for face in face_set:
            by_dim.setdefault(face.dim, []).append(face)
        self._by_dim = {d: tuple(sorted(fs, key=self.sort_key)) for d, fs in by_dim.items()}
        self._faces = frozenset(face_set)
        self._facets = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_facets(cls, vertex_order: Sequence, facets: Iterable[Iterable]) -> "SimplicialComplex":
        """Build the downward closure of the given facets over the given vertex order"""
        labels = [str(v) for v in vertex_order]
        seen: Set[str] = set()
        for label in labels:
            if label in seen:
                raise DuplicateVertexError(f"Duplicate vertex label '{label}'")
            seen.add(label)

        order = {v: i for i, v in enumerate(labels)}
        generators = []
        for index, facet in enumerate(facets):
            facet_labels = [str(v) for v in facet]
            for label in facet_labels:
                if label not in order:
                    raise UnknownVertexError(f"Facet {index} references unknown vertex '{label}'")
            if len(set(facet_labels)) != len(facet_labels):
                raise ComplexError(f"Facet {index} repeats a vertex")
            generators.append(Simplex(tuple(sorted(facet_labels, key=order.__getitem__))))

        return _closure(labels, generators)

    # -- basic queries ----------------------------------------------------

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def vertex_ids(self) -> Tuple[VertexId, ...]:
        return tuple(VertexId(name, i) for i, name in enumerate(self._vertices))

    def ord(self, label: str) -> int:
        try:
            return self._ord[label]
        except KeyError:
            raise UnknownVertexError(f"Unknown vertex '{label}'") from None

    def sort_key(self, simplex: Simplex) -> Tuple[int, ...]:
        return tuple(self._ord[v] for v in simplex.vertices)

    @property
    def dim(self) -> int:
        return max(self._by_dim)

    def faces(self, k: int) -> Tuple[Simplex, ...]:
        return self._by_dim.get(k, ())

    def all_faces(self) -> Tuple[Simplex, ...]:
        """Every face including the empty simplex, by dimension then lexicographically"""
        return tuple(f for d in sorted(self._by_dim) for f in self._by_dim[d])

    def nonempty_faces(self) -> Tuple[Simplex, ...]:
        return tuple(f for d in sorted(self._by_dim) if d >= 0 for f in self._by_dim[d])

    @property
    def n_faces(self) -> int:
        """Number of nonempty faces"""
        return len(self._faces) - 1

    def f_vector(self) -> List[int]:
        return [len(self.faces(d)) for d in range(self.dim + 1)]

    @property
    def facets(self) -> Tuple[Simplex, ...]:
        if self._facets is None:
            maximal = []
            for face in self.all_faces():
                if not any(self._extends(face, v) for v in self._vertices if v not in face):
                    maximal.append(face)
            self._facets = tuple(maximal)
        return self._facets

    def _extends(self, face: Simplex, label: str) -> bool:
        return self.union(face, Simplex((label,))) in self._faces

    def is_pure(self) -> bool:
        return all(f.dim == self.dim for f in self.facets)

    def __contains__(self, simplex: object) -> bool:
        return simplex in self._faces

    def simplex(self, labels: Iterable) -> Simplex:
        """Canonical simplex on the given labels (not necessarily a face)"""
        names = {str(v) for v in labels}
        for name in names:
            if name not in self._ord:
                raise UnknownVertexError(f"Unknown vertex '{name}'")
        return Simplex(tuple(sorted(names, key=self._ord.__getitem__)))

    def union(self, first: Simplex, second: Simplex) -> Simplex:
        return Simplex(tuple(sorted(set(first.vertices) | set(second.vertices), key=self._ord.__getitem__)))

    def require_face(self, simplex: Simplex) -> Simplex:
        if simplex not in self._faces:
            raise SimplexNotInComplexError(f"{simplex} is not a face of the complex")
        return simplex

    def orientation_sign(self, labels: Sequence[str]) -> int:
        """Sign of the permutation sorting an ordered vertex tuple; 0 on a repeated vertex"""
        return permutation_sign([self.ord(v) for v in labels])

    def to_dict(self) -> Dict[str, list]:
        return {
            "vertices": list(self._vertices),
            "facets": [list(f.vertices) for f in self.facets],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._vertices == other._vertices and self._faces == other._faces

    def __hash__(self) -> int:
        return hash((self._vertices, self._faces))

    def __repr__(self) -> str:
        facets = ", ".join(str(f) for f in self.facets)
        return f"SimplicialComplex(vertices={list(self._vertices)}, facets=[{facets}])"


def permutation_sign(keys: Sequence[int]) -> int:
    """Parity of the permutation sorting keys; 0 when a key repeats"""
    if len(set(keys)) != len(keys):
        return 0
    inversions = sum(1 for i, j in itertools.combinations(range(len(keys)), 2) if keys[i] > keys[j])
    return -1 if inversions % 2 else 1


def _closure(vertices: Sequence[str], generators: Iterable[Simplex]) -> SimplicialComplex:
    """Downward closure over the given (already canonical) simplices; every vertex becomes a face"""
    faces: Set[Simplex] = {Simplex((v,)) for v in vertices}
    for generator in generators:
        if generator in faces:
            continue
        faces.update(generator.subsets())
    return SimplicialComplex(vertices, faces)


def subcomplex(K: SimplicialComplex, faces: Iterable[Simplex]) -> SimplicialComplex:
    """Closure of faces of K, keeping K's order restricted to the vertices used"""
    closed: Set[Simplex] = set()
    for face in faces:
        if face not in closed:
            closed.update(face.subsets())
    used = {v for face in closed for v in face.vertices}
    return SimplicialComplex([v for v in K.vertices if v in used], closed)


def full_subcomplex(K: SimplicialComplex, labels: Iterable[str]) -> SimplicialComplex:
    """Faces of K spanned by the given vertices"""
    keep = set(labels)
    for label in keep:
        K.ord(label)
    return subcomplex(K, [f for f in K.all_faces() if set(f.vertices) <= keep])


# -- links, stars, skeletons -----------------------------------------------

def link(K: SimplicialComplex, sigma: Simplex) -> SimplicialComplex:
    """{τ : σ∪τ ∈ K, σ∩τ = ∅}; link(K, ∅) = K"""
    K.require_face(sigma)
    if not sigma.vertices:
        return K
    base = set(sigma.vertices)
    faces = [Simplex(tuple(v for v in rho.vertices if v not in base))
             for rho in K.all_faces() if base <= set(rho.vertices)]
    return subcomplex(K, faces)


def star(K: SimplicialComplex, sigma: Simplex) -> SimplicialComplex:
    """{τ ∈ K : σ∪τ ∈ K}"""
    K.require_face(sigma)
    return subcomplex(K, [tau for tau in K.all_faces() if K.union(sigma, tau) in K])


def skeleton(K: SimplicialComplex, n: int) -> SimplicialComplex:
    """Faces of dimension at most n"""
    if n < -1:
        raise ComplexError(f"Skeleton dimension must be at least -1, got {n}")
    if n >= K.dim:
        return K
    return subcomplex(K, [f for f in K.all_faces() if f.dim <= n])


# -- subdivision -----------------------------------------------------------

def fresh_label(K: SimplicialComplex, prefix: str = "w") -> str:
    """Smallest unused label of the form <prefix><k>"""
    k = 0
    while f"{prefix}{k}" in K.vertices:
        k += 1
    return f"{prefix}{k}"


def stellar_subdivide(K: SimplicialComplex, sigma: Simplex, new_vertex_label: Optional[str] = None) -> SimplicialComplex:
    """Replace the star of σ by the cone over ∂σ * link σ; the apex is appended to the vertex order"""
    K.require_face(sigma)
    if not sigma.vertices:
        raise ComplexError("Cannot subdivide at the empty simplex")
    if sigma.dim == 0:
        return K

    label = new_vertex_label if new_vertex_label is not None else fresh_label(K)
    if label in K.vertices:
        raise VertexLabelCollisionError(f"Vertex label '{label}' is already used")

    kept = [tau for tau in K.all_faces() if not sigma.issubset(tau)]
    apex = (label,)
    coned = []
    for beta in link(K, sigma).all_faces():
        for alpha in sigma.subsets():
            if alpha == sigma:
                continue
            coned.append(Simplex(K.union(alpha, beta).vertices + apex))

    logger.debug(f"Stellar subdivision at {sigma} with apex '{label}'")
    return SimplicialComplex(K.vertices + apex, kept + coned)


# -- joins, unions, gluing -------------------------------------------------

def _renaming(taken: Iterable[str], labels: Sequence[str]) -> Dict[str, str]:
    """Rename labels that collide with taken ones by appending primes"""
    used = set(taken)
    mapping = {}
    for label in labels:
        new = label
        while new in used:
            new += "'"
        used.add(new)
        mapping[label] = new
    return mapping


def _relabel(L: SimplicialComplex, mapping: Mapping[str, str]) -> List[Simplex]:
    return [Simplex(tuple(mapping[v] for v in f.vertices)) for f in L.all_faces()]


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """K * L = {σ ∪ τ}; L's labels are renamed on collision and ordered after K's"""
    mapping = _renaming(K.vertices, L.vertices)
    vertices = K.vertices + tuple(mapping[v] for v in L.vertices)
    faces = [Simplex(s.vertices + t.vertices) for s in K.all_faces() for t in _relabel(L, mapping)]
    return SimplicialComplex(vertices, faces)


def disjoint_union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    mapping = _renaming(K.vertices, L.vertices)
    vertices = K.vertices + tuple(mapping[v] for v in L.vertices)
    return SimplicialComplex(vertices, list(K.all_faces()) + _relabel(L, mapping))


def cone_points(K: SimplicialComplex, n: int) -> SimplicialComplex:
    """Join of K with n isolated vertices; n = 1 gives the cone"""
    if n < 0:
        raise ComplexError(f"Number of cone points must be non-negative, got {n}")
    points = SimplicialComplex.from_facets([f"c{i}" for i in range(n)], [])
    return join(K, points)


@dataclass(frozen=True)
class GlueResult:
    """Union of two complexes along a vertex identification"""
    complex: SimplicialComplex
    intersection: SimplicialComplex
    relabeling: Mapping[str, str]  # labels of L -> labels in the glued complex


def glue(K: SimplicialComplex, L: SimplicialComplex, identification: Mapping[str, str]) -> GlueResult:
    """Identify vertices of L (keys) with vertices of K (values) and take the union"""
    for source, target in identification.items():
        if source not in L.vertices:
            raise GlueError(f"Identification source '{source}' is not a vertex of the second complex")
        if target not in K.vertices:
            raise GlueError(f"Identification target '{target}' is not a vertex of the first complex")
    if len(set(identification.values())) != len(identification):
        raise GlueError("Vertex identification is not injective")

    left = full_subcomplex(L, identification.keys())
    right = full_subcomplex(K, identification.values())
    mapped = {K.simplex(identification[v] for v in f.vertices) for f in left.all_faces()}
    if mapped != set(right.all_faces()):
        raise GlueError("Vertex identification does not match the identified full subcomplexes")

    rest = [v for v in L.vertices if v not in identification]
    mapping = dict(identification)
    mapping.update(_renaming(K.vertices, rest))
    vertices = K.vertices + tuple(mapping[v] for v in rest)
    order = {v: i for i, v in enumerate(vertices)}
    faces = list(K.all_faces())
    for face in L.all_faces():
        faces.append(Simplex(tuple(sorted((mapping[v] for v in face.vertices), key=order.__getitem__))))

    glued = SimplicialComplex(vertices, faces)
    logger.debug(f"Glued complexes along {len(identification)} vertices; intersection dim {right.dim}")
    return GlueResult(glued, right, mapping)


# -- products --------------------------------------------------------------

def product_label(a: str, b: str) -> str:
    return f"({a},{b})"


def staircase_chains(first: Simplex, second: Simplex) -> Iterator[Tuple[Tuple[str, str], ...]]:
    """Maximal monotone chains in first × second, as sequences of vertex pairs"""
    k, l = first.dim, second.dim
    for positions in itertools.combinations(range(k + l), k):
        i = j = 0
        chain = [(first.vertices[0], second.vertices[0])]
        steps = set(positions)
        for step in range(k + l):
            if step in steps:
                i += 1
            else:
                j += 1
            chain.append((first.vertices[i], second.vertices[j]))
        yield tuple(chain)


def cartesian_product(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of |K1| × |K2| on vertex pairs ordered lexicographically"""
    vertices = [product_label(a, b) for a in K1.vertices for b in K2.vertices]
    generators = []
    for first in K1.facets:
        if not first.vertices:
            continue
        for second in K2.facets:
            if not second.vertices:
                continue
            for chain in staircase_chains(first, second):
                generators.append(Simplex(tuple(product_label(a, b) for a, b in chain)))
    return _closure(vertices, generators)


# -- Euler characteristic --------------------------------------------------

def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** d * len(K.faces(d)) for d in range(K.dim + 1))


# -- completely connected components ---------------------------------------

class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {item: item for item in items}

    def find(self, item):
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def adjacency_classes(K: SimplicialComplex, simplices: Sequence[Simplex], dim: int,
                      edges: Optional[Iterable[Simplex]] = None) -> List[Tuple[Simplex, ...]]:
    """Classes of equal-dimensional simplices under adjacency

    Vertices are adjacent when joined by one of the given edges (K's edges by default);
    d-simplices with d >= 1 are adjacent when they share a (d-1)-face.
    """
    members = list(simplices)
    finder = _UnionFind(members)
    if dim == 0:
        present = set(members)
        for edge in (K.faces(1) if edges is None else edges):
            a, b = Simplex((edge.vertices[0],)), Simplex((edge.vertices[1],))
            if a in present and b in present:
                finder.union(a, b)
    else:
        owner: Dict[Simplex, Simplex] = {}
        for simplex in members:
            for face in simplex.facets():
                if face in owner:
                    finder.union(owner[face], simplex)
                else:
                    owner[face] = simplex

    grouped: Dict[Simplex, List[Simplex]] = {}
    for simplex in members:
        grouped.setdefault(finder.find(simplex), []).append(simplex)
    classes = [tuple(sorted(group, key=K.sort_key)) for group in grouped.values()]
    return sorted(classes, key=lambda c: K.sort_key(c[0]))


def count_top_components(K: SimplicialComplex, n: int) -> int:
    """Adjacency classes of n-simplices whose members all have empty link"""
    if n < 0 or n > K.dim:
        return 0
    facets = set(K.facets)
    classes = adjacency_classes(K, K.faces(n), n)
    return sum(1 for cls in classes if all(s in facets for s in cls))


def is_completely_connected(L: SimplicialComplex) -> bool:
    """Every two simplices of equal dimension are joined by an adjacency chain inside L"""
    for d in range(L.dim + 1):
        if len(adjacency_classes(L, L.faces(d), d)) > 1:
            return False
    return True


@dataclass(frozen=True)
class ComponentClass:
    """One adjacency class of d-simplices and the index of its parent class at d - 1"""
    dim: int
    members: Tuple[Simplex, ...]
    parent: Optional[int]


class ComponentForest:
    """Adjacency classes of every dimension, linked to the class below them"""

    def __init__(self, K: SimplicialComplex):
        self.complex = K
        self.levels: Dict[int, List[ComponentClass]] = {}
        self._class_of: Dict[Simplex, Tuple[int, int]] = {}

        for d in range(K.dim + 1):
            level = []
            for index, members in enumerate(adjacency_classes(K, K.faces(d), d)):
                parent = None
                if d > 0:
                    below = members[0].facets()[0] if d > 1 else Simplex((members[0].vertices[0],))
                    parent = self._class_of[below][1]
                level.append(ComponentClass(d, members, parent))
                for member in members:
                    self._class_of[member] = (d, index)
            self.levels[d] = level

        self._children: Dict[Tuple[int, int], List[int]] = {}
        for d, level in self.levels.items():
            for index, cls in enumerate(level):
                if cls.parent is not None:
                    self._children.setdefault((d - 1, cls.parent), []).append(index)

    def class_of(self, simplex: Simplex) -> Tuple[int, int]:
        self.complex.require_face(simplex)
        return self._class_of[simplex]

    def leaves(self) -> List[Tuple[int, int]]:
        return [(d, i) for d, level in self.levels.items() for i in range(len(level))
                if (d, i) not in self._children]

    def chain(self, dim: int, index: int) -> List[ComponentClass]:
        """The class and all its ancestors, top first"""
        chain = []
        while index is not None:
            cls = self.levels[dim][index]
            chain.append(cls)
            index, dim = cls.parent, dim - 1
        return chain

    def component(self, dim: int, index: int) -> SimplicialComplex:
        faces = [s for cls in self.chain(dim, index) for s in cls.members]
        return subcomplex(self.complex, faces)

    def components(self) -> List[SimplicialComplex]:
        return [self.component(d, i) for d, i in self.leaves()]

    def dimensions_containing(self, simplex: Simplex) -> List[int]:
        """Dimensions of the maximal completely connected subcomplexes that contain simplex"""
        target = self.class_of(simplex)
        dims = set()
        for d, i in self.leaves():
            if d < target[0]:
                continue
            index, dim = i, d
            while dim > target[0]:
                index, dim = self.levels[dim][index].parent, dim - 1
            if (dim, index) == target:
                dims.add(d)
        return sorted(dims)


def component_forest(K: SimplicialComplex) -> ComponentForest:
    return ComponentForest(K)


def component_dimensions_containing(K: SimplicialComplex, sigma: Simplex) -> List[int]:
    return ComponentForest(K).dimensions_containing(sigma)


def completely_connected_components(K: SimplicialComplex, face_budget: Optional[int] = None) -> List[SimplicialComplex]:
    """Maximal completely connected subcomplexes by memoized exhaustive search

    Level by level, each branch picks one adjacency class among the simplices whose
    boundary lies in the previous level's choice; every candidate is then checked
    against the definition and non-maximal candidates are dropped.
    """
    budget = face_budget if face_budget is not None else config.COMPONENT_FACE_BUDGET
    if K.n_faces > budget:
        raise ComplexTooLargeError(
            f"Exhaustive component search needs at most {budget} faces, complex has {K.n_faces}"
        )

    memo: Dict[Tuple[int, FrozenSet[Simplex]], List[FrozenSet[Simplex]]] = {}

    def extensions(level: int, previous: FrozenSet[Simplex]) -> List[FrozenSet[Simplex]]:
        key = (level, previous)
        if key in memo:
            return memo[key]
        if level == 0:
            available = list(K.faces(0))
        else:
            available = [s for s in K.faces(level) if all(f in previous for f in s.facets())]
        result = [frozenset()]
        if available:
            for cls in adjacency_classes(K, available, level):
                chosen = frozenset(cls)
                result.extend(chosen | upper for upper in extensions(level + 1, chosen))
        memo[key] = result
        return result

    candidates = [c for c in dict.fromkeys(extensions(0, frozenset())) if c]
    candidates = [c for c in candidates if is_completely_connected(subcomplex(K, c))]
    maximal = [c for c in candidates if not any(c < other for other in candidates)]
    components = [subcomplex(K, faces) for faces in maximal]

    logger.debug(f"Found {len(components)} completely connected components by exhaustive search")
    return components


# -- random and named complexes --------------------------------------------

def random_complex(n_vertices: int, dim: int, density: Optional[float] = None, seed: int = 0) -> SimplicialComplex:
    """Sample dim-dimensional facets independently with the given density, then close downward"""
    if n_vertices < 1 or dim < 0 or dim >= n_vertices:
        raise ComplexError(f"Cannot sample {dim}-dimensional facets on {n_vertices} vertices")
    density = config.RANDOM_DENSITY if density is None else density
    rng = np.random.default_rng(seed)
    candidates = list(itertools.combinations(range(n_vertices), dim + 1))
    picks = rng.random(len(candidates)) < density
    facets = [c for c, keep in zip(candidates, picks) if keep]
    if not facets:
        facets = [candidates[int(rng.integers(len(candidates)))]]
    return SimplicialComplex.from_facets(range(n_vertices), facets)


def point(label: str = "0") -> SimplicialComplex:
    return SimplicialComplex.from_facets([label], [[label]])


def standard_simplex(n: int) -> SimplicialComplex:
    """Δ^n on vertices 0..n"""
    return SimplicialComplex.from_facets(range(n + 1), [range(n + 1)])


def simplex_boundary(n: int) -> SimplicialComplex:
    """∂Δ^n, an (n-1)-sphere"""
    if n < 1:
        raise ComplexError("The boundary of a simplex needs n >= 1")
    return SimplicialComplex.from_facets(range(n + 1), itertools.combinations(range(n + 1), n))


def interval(n: int) -> SimplicialComplex:
    """I_n: a path with n edges"""
    return SimplicialComplex.from_facets(range(n + 1), [(i, i + 1) for i in range(n)] or [[0]])


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ComplexError("A cycle needs at least 3 vertices")
    return SimplicialComplex.from_facets(range(n), [(i, (i + 1) % n) for i in range(n)])


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    return join(K, SimplicialComplex.from_facets(["n", "s"], [["n"], ["s"]]))


def wedge(K: SimplicialComplex, L: SimplicialComplex, at: Tuple[str, str] = None) -> SimplicialComplex:
    """Glue L to K at one vertex (the first vertices by default)"""
    k_vertex, l_vertex = at if at is not None else (K.vertices[0], L.vertices[0])
    return glue(K, L, {l_vertex: k_vertex}).complex


def cylinder(K: SimplicialComplex) -> SimplicialComplex:
    """I_1 × K with the staircase triangulation"""
    return cartesian_product(interval(1), K)
