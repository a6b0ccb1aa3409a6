"""
Non-degenerate simplicial maps and the homomorphisms they induce on N-complexes and on
cohomeology and homeology tables
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.abelian_groups import INTEGERS, Coefficients, GroupHomomorphism
from src.bigraded_table import Bidegree
from src.errors import DegenerateMapError, SimplicialMapError
from src.homeology import FilteredComplex, SpectralSequence, build_N, build_N_dual
from src.integer_matrix import IntMatrix
from src.simplicial_complex import Simplex, SimplicialComplex

logger = logging.getLogger(__name__)


class SimplicialMap:
    """Vertex map K -> L sending every face of K to a face of L"""

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex, vertex_map: Mapping[str, str]):
        self.source = source
        self.target = target
        self.vertex_map = {str(k): str(v) for k, v in vertex_map.items()}
        missing = [v for v in source.vertices if v not in self.vertex_map]
        if missing:
            raise SimplicialMapError(f"Vertex map is undefined on {missing}")
        extra = [v for v in self.vertex_map if v not in source.vertices]
        if extra:
            raise SimplicialMapError(f"Vertex map mentions unknown source vertices {extra}")
        for label, image in self.vertex_map.items():
            if image not in target.vertices:
                raise SimplicialMapError(f"Vertex '{label}' maps to '{image}', which is not a target vertex")
        for face in source.facets:
            if self.image(face) not in target:
                raise SimplicialMapError(f"Image of {face} is not a face of the target")

    @classmethod
    def identity(cls, K: SimplicialComplex) -> "SimplicialMap":
        return cls(K, K, {v: v for v in K.vertices})

    @classmethod
    def inclusion(cls, sub: SimplicialComplex, K: SimplicialComplex) -> "SimplicialMap":
        return cls(sub, K, {v: v for v in sub.vertices})

    def image(self, sigma: Simplex) -> Simplex:
        return self.target.simplex(self.vertex_map[v] for v in sigma.vertices)

    def signed_image(self, sigma: Simplex) -> Tuple[Simplex, int]:
        """(f(σ), sign of the permutation sorting the images); sign 0 when f collapses σ"""
        images = [self.vertex_map[v] for v in sigma.vertices]
        if len(set(images)) != len(images):
            return self.image(sigma), 0
        return self.image(sigma), self.target.orientation_sign(images)

    def __call__(self, sigma: Simplex) -> Simplex:
        return self.image(sigma)

    def __matmul__(self, other: "SimplicialMap") -> "SimplicialMap":
        """self ∘ other"""
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (self.source, self.target, self.vertex_map) == (other.source, other.target, other.vertex_map)

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.vertex_map.items()))))

    def __repr__(self) -> str:
        return f"SimplicialMap({self.vertex_map})"


def compose(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """f ∘ g"""
    if g.target != f.source:
        raise SimplicialMapError("Maps are not composable: the inner map's target is not the outer map's source")
    return SimplicialMap(g.source, f.target, {v: f.vertex_map[g.vertex_map[v]] for v in g.source.vertices})


def is_non_degenerate(f: SimplicialMap) -> bool:
    """|f(σ)| = |σ| for every face"""
    return all(len(f.image(face)) == len(face) for face in f.source.facets)


def _require_non_degenerate(f: SimplicialMap):
    if not is_non_degenerate(f):
        raise DegenerateMapError(f"{f} collapses a simplex; only non-degenerate maps act on N")


@dataclass
class NChainMap:
    """Degree-preserving matrices between two filtered complexes"""
    source: FilteredComplex
    target: FilteredComplex
    matrices: Dict[int, IntMatrix]

    def matrix(self, n: int) -> IntMatrix:
        if n in self.matrices:
            return self.matrices[n]
        return IntMatrix.zeros(self.target.size(n), self.source.size(n))

    def apply(self, n: int, vector: Sequence[int]) -> List[int]:
        return self.matrix(n).apply(list(vector))

    def commutes(self) -> bool:
        step = self.source.step
        for n in sorted(set(self.source.degrees) | set(self.target.degrees)):
            left = self.target.matrix(n) @ self.matrix(n)
            right = self.matrix(n + step) @ self.source.matrix(n)
            if left != right:
                logger.debug(f"Chain map fails to commute with the differential in degree {n}")
                return False
        return True

    def preserves_filtration(self) -> bool:
        for n, matrix in self.matrices.items():
            for (i, j), _ in matrix.items():
                if self.target.basis[n][i].p != self.source.basis[n][j].p:
                    return False
        return True

    def __matmul__(self, other: "NChainMap") -> "NChainMap":
        degrees = set(self.matrices) | set(other.matrices)
        return NChainMap(other.source, self.target, {n: self.matrix(n) @ other.matrix(n) for n in degrees})


def pushforward_on_N(f: SimplicialMap, reduced: bool = False,
                     source: Optional[FilteredComplex] = None,
                     target: Optional[FilteredComplex] = None) -> NChainMap:
    """f_*(σ⊗τ) = ±f(σ)⊗f(τ) on the dual complexes N_{*,*}(K) -> N_{*,*}(L)"""
    _require_non_degenerate(f)
    source = source if source is not None else build_N_dual(f.source, reduced)
    target = target if target is not None else build_N_dual(f.target, reduced)
    matrices = {}
    for n in source.degrees:
        entries = {}
        for j, e in enumerate(source.basis[n]):
            sigma, sigma_sign = f.signed_image(e.sigma)
            tau, tau_sign = f.signed_image(e.tau)
            entries[(target.index(n, sigma, tau), j)] = sigma_sign * tau_sign
        matrices[n] = IntMatrix(target.size(n), source.size(n), entries)
    return NChainMap(source, target, matrices)


def pullback_on_N(f: SimplicialMap, reduced: bool = False,
                  source: Optional[FilteredComplex] = None,
                  target: Optional[FilteredComplex] = None) -> NChainMap:
    """
    f^*(σ'⊗τ') = Σ ±σ⊗τ over σ ⊆ τ in K with f(σ) = σ', f(τ) = τ'.

    The map runs N^{*,*}(L) -> N^{*,*}(K): source is the complex of f.target.
    """
    _require_non_degenerate(f)
    source = source if source is not None else build_N(f.target, reduced)
    target = target if target is not None else build_N(f.source, reduced)

    preimages: Dict[Simplex, List[Simplex]] = defaultdict(list)
    for tau in (f.source.all_faces() if reduced else f.source.nonempty_faces()):
        preimages[f.image(tau)].append(tau)

    matrices = {}
    for n in source.degrees:
        entries = {}
        for j, e in enumerate(source.basis[n]):
            wanted = set(e.sigma.vertices)
            for tau in preimages.get(e.tau, ()):
                sigma = Simplex(tuple(v for v in tau.vertices if f.vertex_map[v] in wanted))
                _, sigma_sign = f.signed_image(sigma)
                _, tau_sign = f.signed_image(tau)
                entries[(target.index(n, sigma, tau), j)] = sigma_sign * tau_sign
        matrices[n] = IntMatrix(target.size(n), source.size(n), entries)
    return NChainMap(source, target, matrices)


def _induced(chain_map: NChainMap, source: SpectralSequence, target: SpectralSequence,
             page: int) -> Dict[Bidegree, GroupHomomorphism]:
    source_page = source.page(page)
    target_page = target.page(page)
    maps = {}
    for bidegree, cell in source_page.cells.items():
        target_cell = target_page.cells.get(bidegree)
        target_orders = target_cell.orders if target_cell else ()
        columns = []
        for lift in cell.lifts:
            image = chain_map.apply(cell.degree, lift)
            columns.append(target_cell.coordinates(image) if target_cell else ())
        matrix = IntMatrix.from_columns(columns, len(target_orders)) if columns \
            else IntMatrix.zeros(len(target_orders), 0)
        maps[bidegree] = GroupHomomorphism(cell.orders, target_orders, matrix)
    return maps


def induced_on_cohomeology(f: SimplicialMap, coeffs: Coefficients = INTEGERS, reduced: bool = False,
                           source_sequence: Optional[SpectralSequence] = None,
                           target_sequence: Optional[SpectralSequence] = None,
                           page: int = 2) -> Dict[Bidegree, GroupHomomorphism]:
    """
    f^*: ℋ^{p,q}(L) -> ℋ^{p,q}(K) per nonzero cell of ℋ(L), on the computed generators.

    source_sequence is the spectral sequence of N(L), target_sequence that of N(K); passing them
    keeps generator choices shared across several maps.
    """
    coeffs = Coefficients.parse(coeffs)
    source_sequence = source_sequence or SpectralSequence(build_N(f.target, reduced), coeffs)
    target_sequence = target_sequence or SpectralSequence(build_N(f.source, reduced), coeffs)
    chain_map = pullback_on_N(f, reduced, source_sequence.complex, target_sequence.complex)
    return _induced(chain_map, source_sequence, target_sequence, page)


def induced_on_homeology(f: SimplicialMap, coeffs: Coefficients = INTEGERS, reduced: bool = False,
                         source_sequence: Optional[SpectralSequence] = None,
                         target_sequence: Optional[SpectralSequence] = None,
                         page: int = 2) -> Dict[Bidegree, GroupHomomorphism]:
    """f_*: ℋ_{p,q}(K) -> ℋ_{p,q}(L) per nonzero cell of ℋ(K)"""
    coeffs = Coefficients.parse(coeffs)
    source_sequence = source_sequence or SpectralSequence(build_N_dual(f.source, reduced), coeffs)
    target_sequence = target_sequence or SpectralSequence(build_N_dual(f.target, reduced), coeffs)
    chain_map = pushforward_on_N(f, reduced, source_sequence.complex, target_sequence.complex)
    return _induced(chain_map, source_sequence, target_sequence, page)
