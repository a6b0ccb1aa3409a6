"""
Block complexes: disk-like pure subcomplexes covering a simplicial complex, their block chain
complexes and double complexes, and the subdivision and product constructions
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.abelian_groups import INTEGERS, Coefficients
from src.bigraded_table import BigradedGroupTable
from src.chain_complexes import ChainBasis, IntChainComplex, homology
from src.errors import (
    BlockComplexError,
    BlockHomologyError,
    BlockOrientationError,
    BlockPartitionError,
    BlockSubcomplexError,
    ChainComplexError,
)
from src.homeology import FilteredComplex, SpectralSequence, build_bicomplex, dualize
from src.integer_matrix import IntMatrix
from src.simplicial_complex import (
    Simplex,
    SimplicialComplex,
    cartesian_product,
    full_subcomplex,
    product_label,
    stellar_subdivide,
    subcomplex,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Block:
    """A pure subcomplex with one ordered top simplex marked positive"""
    complex: SimplicialComplex
    dim: int
    positive: Tuple[str, ...]
    label: str = field(default="", compare=False)

    @classmethod
    def from_faces(cls, K: SimplicialComplex, generators: Iterable[Simplex], label: str = "",
                   positive: Optional[Sequence[str]] = None) -> "Block":
        """Closure of the generators inside K; the lexicographically least top simplex is positive by default"""
        closed = subcomplex(K, list(generators))
        if not closed.nonempty_faces():
            raise BlockComplexError("A block needs at least one simplex")
        top = closed.faces(closed.dim)
        if positive is None:
            positive = min(top, key=K.sort_key).vertices
        return cls(closed, closed.dim, tuple(str(v) for v in positive), label)

    @property
    def faces(self) -> Tuple[Simplex, ...]:
        return self.complex.nonempty_faces()

    @property
    def top_simplices(self) -> Tuple[Simplex, ...]:
        return self.complex.faces(self.dim) if self.dim >= 0 else ()

    def is_face_of(self, other: "Block") -> bool:
        return all(face in other.complex for face in self.faces)

    def reversed(self) -> "Block":
        """The same block with the opposite orientation"""
        if self.dim < 1:
            raise BlockOrientationError("Blocks of dimension below one carry no orientation choice")
        swapped = (self.positive[1], self.positive[0]) + self.positive[2:]
        return Block(self.complex, self.dim, swapped, self.label)

    def __str__(self) -> str:
        if self.label:
            return self.label
        if self.dim < 0:
            return "∅"
        return "⟨" + " ".join(str(f) for f in self.complex.facets) + "⟩"


EMPTY_BLOCK = Block(SimplicialComplex([], []), -1, (), "∅")


def trivial_block(K: SimplicialComplex, sigma: Simplex) -> Block:
    """2^σ"""
    return Block.from_faces(K, [sigma], label=str(sigma), positive=sigma.vertices)


class BlockComplex:
    """A validated block decomposition with coherent block orientations"""

    def __init__(self, ambient: SimplicialComplex, blocks: Sequence[Block],
                 owner: Dict[Simplex, Block], orientations: Dict[Block, Dict[Simplex, int]]):
        self.ambient = ambient
        self.blocks = tuple(sorted(blocks, key=lambda b: b.dim))
        self.owner = owner
        self.orientations = orientations
        self._below = {b: tuple(a for a in self.blocks if a.is_face_of(b)) for b in self.blocks}

    @property
    def dim(self) -> int:
        return max((b.dim for b in self.blocks), default=-1)

    def blocks_of_dim(self, n: int) -> Tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.dim == n)

    def faces_of(self, block: Block) -> Tuple[Block, ...]:
        """Blocks contained in the given one, itself included"""
        if block == EMPTY_BLOCK:
            return (EMPTY_BLOCK,)
        return self._below[block]

    def connecting_coefficient(self, larger: Block, smaller: Block) -> int:
        return connecting_coefficient(self, larger, smaller)

    def __len__(self) -> int:
        return len(self.blocks)

    def __repr__(self) -> str:
        counts = [len(self.blocks_of_dim(n)) for n in range(self.dim + 1)]
        return f"BlockComplex(blocks per dimension={counts})"


# -- validation ---------------------------------------------------------------------

def _orient(block: Block) -> Dict[Simplex, int]:
    """Coherent signs on the top simplices, propagated across interior codimension-one faces"""
    K = block.complex
    if block.dim < 0:
        return {}
    start = K.simplex(block.positive)
    if start not in K or start.dim != block.dim:
        raise BlockOrientationError(f"Positive simplex {block.positive} is not a top simplex of block {block}")
    signs = {start: K.orientation_sign(block.positive)}
    if block.dim == 0:
        return signs

    cofaces: Dict[Simplex, List[Tuple[Simplex, int]]] = {}
    for top in block.top_simplices:
        for i, facet in enumerate(top.facets()):
            cofaces.setdefault(facet, []).append((top, i))

    queue = deque([start])
    while queue:
        s = queue.popleft()
        for i, facet in enumerate(s.facets()):
            for other, j in cofaces[facet]:
                if other == s:
                    continue
                sign = -signs[s] * (-1) ** (i + j)
                if other not in signs:
                    signs[other] = sign
                    queue.append(other)
                elif signs[other] != sign:
                    raise BlockOrientationError(f"Block {block} is not orientable")
    if len(signs) != len(block.top_simplices):
        raise BlockOrientationError(f"Top simplices of block {block} are not connected through interior faces")
    return signs


def _reduced_homology_is(K: SimplicialComplex, degree: Optional[int]) -> bool:
    """Reduced homology is Z in the given degree and zero elsewhere (None: zero everywhere)"""
    groups = homology(K, INTEGERS, reduced=True)
    for k, group in groups.items():
        expected_rank = 1 if k == degree else 0
        if group.torsion or group.rank != expected_rank:
            return False
    return degree is None or degree in groups


def validate_block_complex(K: SimplicialComplex, blocks: Sequence[Block]) -> BlockComplex:
    """
    Check the combinatorial block conditions and return the validated complex.

    Every block must be a pure subcomplex of K with vanishing reduced homology, the union of
    its proper sub-blocks must have the homology of a sphere one dimension lower, and every
    simplex of K must have exactly one smallest block containing it.
    """
    if not blocks:
        raise BlockPartitionError("A block complex needs at least one block")
    for block in blocks:
        for face in block.faces:
            if face not in K:
                raise BlockSubcomplexError(f"Block {block} contains {face}, which is not a face of the complex")
        if block.dim < 0 or not block.complex.is_pure():
            raise BlockHomologyError(f"Block {block} is not a pure nonempty subcomplex")

    owner: Dict[Simplex, Block] = {}
    for face in K.nonempty_faces():
        containing = [b for b in blocks if face in b.complex]
        minimal = [b for b in containing if not any(a is not b and a.is_face_of(b) for a in containing)]
        if len(minimal) != 1:
            reason = "no block" if not minimal else f"{len(minimal)} smallest blocks"
            raise BlockPartitionError(f"Simplex {face} lies in {reason}; interiors must partition the complex")
        owner[face] = minimal[0]

    for block in blocks:
        if not _reduced_homology_is(block.complex, None):
            raise BlockHomologyError(f"Block {block} has nonzero reduced homology")
        proper = [a for a in blocks if a is not block and a.is_face_of(block)]
        rim = subcomplex(K, [face for a in proper for face in a.faces])
        if not _reduced_homology_is(rim, block.dim - 1):
            raise BlockHomologyError(f"The proper faces of block {block} do not form a homology {block.dim - 1}-sphere")

    orientations = {block: _orient(block) for block in blocks}
    logger.debug(f"Validated {len(blocks)} blocks on a complex with {K.n_faces} faces")
    return BlockComplex(K, blocks, owner, orientations)


# -- incidence ------------------------------------------------------------------------

def connecting_coefficient(B: BlockComplex, larger: Block, smaller: Block) -> int:
    """
    [b^n, b^{n-1}]: a positive chain simplex (v0, ..., vn) of the larger block whose tail lies in
    the smaller block, compared with the smaller block's orientation. Every admissible choice
    must agree.
    """
    if smaller == EMPTY_BLOCK:
        return 1 if larger.dim == 0 else 0
    if smaller.dim != larger.dim - 1 or not smaller.is_face_of(larger):
        return 0
    outer = B.orientations[larger]
    inner = B.orientations[smaller]
    values = set()
    for tail in smaller.top_simplices:
        for top in larger.top_simplices:
            if not tail.issubset(top):
                continue
            (head,) = set(top.vertices) - set(tail.vertices)
            position = top.vertices.index(head)
            values.add(outer[top] * (-1) ** position * inner[tail])
    if not values:
        raise BlockComplexError(f"No chain simplex of {larger} has its tail in {smaller}")
    if len(values) > 1:
        raise BlockOrientationError(f"Connecting coefficient [{larger}, {smaller}] depends on the chain simplex")
    return values.pop()


def block_chain_complex(B: BlockComplex, reduced: bool = False) -> IntChainComplex:
    """Blocks as cells with d(b^n) = Σ [b^n, b^{n-1}] b^{n-1}; reduced adds the empty block"""
    cells = {n: B.blocks_of_dim(n) for n in range(B.dim + 1)}
    if reduced:
        cells[-1] = (EMPTY_BLOCK,)
    basis = ChainBasis(cells)
    boundary = {}
    for n in basis.degrees:
        entries = {}
        for j, larger in enumerate(basis[n]):
            for i, smaller in enumerate(basis[n - 1]):
                value = connecting_coefficient(B, larger, smaller)
                if value:
                    entries[(i, j)] = value
        boundary[n] = IntMatrix(basis.size(n - 1), basis.size(n), entries)
    try:
        return IntChainComplex(basis, boundary, reduced=reduced)
    except ChainComplexError as e:
        raise BlockComplexError(f"Block boundary does not square to zero: {e}") from e


def block_N(B: BlockComplex, reduced: bool = False) -> FilteredComplex:
    """Double complex on b⊗b' with b ⊆ b', filtered by the dimension of b"""
    chain = block_chain_complex(B, reduced)

    def faces_of(block: Block):
        below = B.faces_of(block)
        if reduced and block != EMPTY_BLOCK:
            below = (EMPTY_BLOCK,) + below
        return ((a.dim, a) for a in below)

    return build_bicomplex(chain, faces_of)


def block_N_dual(B: BlockComplex, reduced: bool = False) -> FilteredComplex:
    return dualize(block_N(B, reduced))


def block_cohomeology(B: BlockComplex, coeffs: Coefficients = INTEGERS, reduced: bool = False) -> BigradedGroupTable:
    return SpectralSequence(block_N(B, reduced), coeffs).page(2).table()


def block_homeology(B: BlockComplex, coeffs: Coefficients = INTEGERS, reduced: bool = False) -> BigradedGroupTable:
    return SpectralSequence(block_N_dual(B, reduced), coeffs).page(2).table()


# -- canonical block complexes -----------------------------------------------------

def trivial_block_complex(K: SimplicialComplex) -> BlockComplex:
    """{2^σ : σ ∈ K}"""
    return validate_block_complex(K, [trivial_block(K, sigma) for sigma in K.nonempty_faces()])


def subdivision_block_complex(K: SimplicialComplex, sigma: Simplex,
                              new_vertex_label: Optional[str] = None) -> Tuple[SimplicialComplex, BlockComplex]:
    """The subdivided complex with one block per face of K: the part of K' covering that face"""
    subdivided = stellar_subdivide(K, sigma, new_vertex_label)
    apex = [v for v in subdivided.vertices if v not in K.vertices]
    blocks = []
    for rho in K.nonempty_faces():
        if not apex or not sigma.issubset(rho):
            blocks.append(Block.from_faces(subdivided, [rho], label=str(rho)))
            continue
        rest = tuple(v for v in rho.vertices if v not in sigma.vertices)
        generators = [subdivided.simplex(facet.vertices + rest + (apex[0],)) for facet in sigma.facets()]
        blocks.append(Block.from_faces(subdivided, generators, label=str(rho)))
    logger.info(f"Subdivision block complex at {sigma}: {len(blocks)} blocks")
    return subdivided, validate_block_complex(subdivided, blocks)


def product_block(product: SimplicialComplex, first: Simplex, second: Simplex) -> Block:
    """b_{σ1,σ2}: the full subcomplex on σ1 × σ2, oriented from the factor orientations"""
    labels = [product_label(a, b) for a in first.vertices for b in second.vertices]
    region = full_subcomplex(product, labels)
    path = [product_label(first.vertices[0], b) for b in second.vertices]
    path += [product_label(a, second.vertices[-1]) for a in first.vertices[1:]]
    if (first.dim * second.dim) % 2:
        path[0], path[1] = path[1], path[0]
    return Block.from_faces(product, region.facets, label=f"{first}×{second}", positive=path)


def product_block_complex(K1: SimplicialComplex, K2: SimplicialComplex) -> Tuple[SimplicialComplex, BlockComplex]:
    """The staircase triangulation of K1 × K2 with the blocks b_{σ1,σ2}"""
    product = cartesian_product(K1, K2)
    blocks = [product_block(product, first, second)
              for first in K1.nonempty_faces() for second in K2.nonempty_faces()]
    logger.info(f"Product block complex: {len(blocks)} blocks on {product.n_faces} faces")
    return product, validate_block_complex(product, blocks)
