"""
Oriented simplicial chain and cochain complexes, reduced and unreduced, and their (co)homology
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Mapping, Tuple

from src.abelian_groups import (
    INTEGERS,
    AbelianGroup,
    Coefficients,
    GroupPresentation,
    Subquotient,
    subquotient_group,
    trivial_presentation,
)
from src.errors import ChainComplexError, ComplexError, DegreeOutOfRangeError
from src.integer_matrix import IntMatrix
from src.simplicial_complex import EMPTY_SIMPLEX, Simplex, SimplicialComplex, link

logger = logging.getLogger(__name__)

Cell = Hashable


@dataclass(frozen=True)
class ChainBasis:
    """Ordered cells per degree; the index of a cell is its basis position"""
    cells: Mapping[int, Tuple[Cell, ...]]
    _index: Dict[int, Dict[Cell, int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cells = {k: tuple(v) for k, v in self.cells.items()}
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "_index", {k: {c: i for i, c in enumerate(v)} for k, v in cells.items()})

    @property
    def degrees(self) -> List[int]:
        return sorted(self.cells)

    def __getitem__(self, k: int) -> Tuple[Cell, ...]:
        return self.cells.get(k, ())

    def size(self, k: int) -> int:
        return len(self.cells.get(k, ()))

    def index(self, k: int, cell: Cell) -> int:
        return self._index[k][cell]

    def find(self, k: int, cell: Cell):
        return self._index.get(k, {}).get(cell)


class IntChainComplex:
    """Cells per degree with integer boundary matrices d_k: C_k -> C_{k-1}"""

    def __init__(self, basis: ChainBasis, boundary: Mapping[int, IntMatrix], reduced: bool = False,
                 check: bool = True):
        self.basis = basis
        self.reduced = reduced
        self.boundary: Dict[int, IntMatrix] = {}
        for k in basis.degrees:
            matrix = boundary.get(k, IntMatrix.zeros(basis.size(k - 1), basis.size(k)))
            if matrix.shape != (basis.size(k - 1), basis.size(k)):
                raise ChainComplexError(f"Boundary d_{k} has shape {matrix.shape}, expected "
                                        f"{(basis.size(k - 1), basis.size(k))}")
            self.boundary[k] = matrix
        if check:
            self.check_boundary_squared()

    @property
    def degrees(self) -> List[int]:
        return self.basis.degrees

    def boundary_matrix(self, k: int) -> IntMatrix:
        if k in self.boundary:
            return self.boundary[k]
        return IntMatrix.zeros(self.basis.size(k - 1), self.basis.size(k))

    def coboundary_matrix(self, k: int) -> IntMatrix:
        """δ_k: C^k -> C^{k+1}, the transpose of d_{k+1}"""
        return self.boundary_matrix(k + 1).T

    def check_boundary_squared(self):
        for k in self.degrees:
            if not (self.boundary_matrix(k - 1) @ self.boundary_matrix(k)).is_zero():
                raise ChainComplexError(f"d_{k - 1}·d_{k} is not zero")

    def homology_presentation(self, k: int, coeffs: Coefficients = INTEGERS) -> GroupPresentation:
        """ker d_k / im d_{k+1} with generators in the chain basis of degree k"""
        if self.basis.size(k) == 0:
            return trivial_presentation(0)
        cycles = coeffs.kernel(self.boundary_matrix(k))
        boundaries = coeffs.close(self.boundary_matrix(k + 1))
        return subquotient_group(Subquotient(self.basis.size(k), cycles, boundaries))

    def cohomology_presentation(self, k: int, coeffs: Coefficients = INTEGERS) -> GroupPresentation:
        """ker δ_k / im δ_{k-1} with generators in the cochain basis of degree k"""
        if self.basis.size(k) == 0:
            return trivial_presentation(0)
        cocycles = coeffs.kernel(self.coboundary_matrix(k))
        coboundaries = coeffs.close(self.coboundary_matrix(k - 1))
        return subquotient_group(Subquotient(self.basis.size(k), cocycles, coboundaries))

    def homology(self, coeffs: Coefficients = INTEGERS) -> Dict[int, AbelianGroup]:
        return {k: self.homology_presentation(k, coeffs).group for k in self.degrees}

    def cohomology(self, coeffs: Coefficients = INTEGERS) -> Dict[int, AbelianGroup]:
        return {k: self.cohomology_presentation(k, coeffs).group for k in self.degrees}


def chain_basis(K: SimplicialComplex, reduced: bool = False) -> ChainBasis:
    cells = {k: K.faces(k) for k in range(K.dim + 1)}
    if reduced:
        cells[-1] = (EMPTY_SIMPLEX,)
    return ChainBasis(cells)


def _check_degree(K: SimplicialComplex, k: int, reduced: bool):
    low = -1 if reduced else 0
    if not low <= k <= K.dim:
        raise DegreeOutOfRangeError(f"Degree {k} outside [{low}, {K.dim}]")


def boundary_matrix(K: SimplicialComplex, k: int, reduced: bool = False) -> IntMatrix:
    """d(v0..vk) = Σ_i (-1)^i (v0..v̂i..vk) in canonical bases; reduced adds d(v) = ∅"""
    _check_degree(K, k, reduced)
    basis = chain_basis(K, reduced)
    entries = {}
    if k >= 1 or (k == 0 and reduced):
        for j, simplex in enumerate(basis[k]):
            for i, face in enumerate(simplex.facets()):
                entries[(basis.index(k - 1, face), j)] = (-1) ** i
    return IntMatrix(basis.size(k - 1), basis.size(k), entries)


def coboundary_matrix(K: SimplicialComplex, k: int, reduced: bool = False) -> IntMatrix:
    """δ(v0..vk) = Σ_v (v, v0..vk), normalized to sorted representatives"""
    _check_degree(K, k, reduced)
    basis = chain_basis(K, reduced)
    entries = {}
    for j, simplex in enumerate(basis[k]):
        for v in K.vertices:
            if v in simplex:
                continue
            coface = K.union(simplex, Simplex((v,)))
            if coface not in K:
                continue
            earlier = sum(1 for u in simplex.vertices if K.ord(u) < K.ord(v))
            entries[(basis.index(k + 1, coface), j)] = (-1) ** earlier
    return IntMatrix(basis.size(k + 1), basis.size(k), entries)


def simplicial_chain_complex(K: SimplicialComplex, reduced: bool = False) -> IntChainComplex:
    basis = chain_basis(K, reduced)
    boundary = {k: boundary_matrix(K, k, reduced) for k in basis.degrees}
    return IntChainComplex(basis, boundary, reduced=reduced)


def homology(K: SimplicialComplex, coeffs: Coefficients = INTEGERS, reduced: bool = False) -> Dict[int, AbelianGroup]:
    return simplicial_chain_complex(K, reduced).homology(Coefficients.parse(coeffs))


def cohomology(K: SimplicialComplex, coeffs: Coefficients = INTEGERS, reduced: bool = False) -> Dict[int, AbelianGroup]:
    return simplicial_chain_complex(K, reduced).cohomology(Coefficients.parse(coeffs))


@dataclass
class LinkCohomology:
    """H̃^degree(link σ) with its cochain complex kept for lifting generators"""
    simplex: Simplex
    link: SimplicialComplex
    degree: int
    chain_complex: IntChainComplex
    presentation: GroupPresentation

    @property
    def group(self) -> AbelianGroup:
        return self.presentation.group

    @property
    def cells(self) -> Tuple[Simplex, ...]:
        return self.chain_complex.basis[self.degree]


def link_cohomology(K: SimplicialComplex, sigma: Simplex, degree: int,
                    coeffs: Coefficients = INTEGERS) -> LinkCohomology:
    """Reduced cohomology of link σ in the given degree; σ = ∅ gives K itself"""
    L = link(K, sigma)
    complex_ = simplicial_chain_complex(L, reduced=True)
    presentation = complex_.cohomology_presentation(degree, Coefficients.parse(coeffs))
    return LinkCohomology(sigma, L, degree, complex_, presentation)


def reduced_link_cohomology(K: SimplicialComplex, sigma: Simplex, q: int,
                            coeffs: Coefficients = INTEGERS) -> LinkCohomology:
    """H̃^{q-|σ|}(link σ), the summand of E_1 in row q belonging to σ"""
    K.require_face(sigma)
    if not sigma.vertices:
        raise ComplexError("Link cohomology summands are indexed by nonempty simplices")
    return link_cohomology(K, sigma, q - len(sigma), coeffs)
