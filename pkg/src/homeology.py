"""
Simplicial cohomeology and homeology: the N double complexes, their σ-filtrations and the
spectral sequence engine that produces E_r pages, E_2 tables, E_∞ and total (co)homology.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from src.abelian_groups import (
    INTEGERS,
    AbelianGroup,
    Coefficients,
    GroupHomomorphism,
    GroupPresentation,
    Subquotient,
    presentation_homology,
    subquotient_group,
)
from src.bigraded_table import Bidegree, BigradedGroupTable
from src.chain_complexes import IntChainComplex, LinkCohomology, simplicial_chain_complex
from src.config import config
from src.errors import ContainmentError, SpectralSequenceError
from src.integer_matrix import IntMatrix
from src.simplicial_complex import Simplex, SimplicialComplex, link, permutation_sign

logger = logging.getLogger(__name__)

COHOMEOLOGY = "cohomeology"
HOMEOLOGY = "homeology"


@dataclass(frozen=True)
class NBasisElement:
    """σ⊗τ with σ ⊆ τ; p = dim σ, q = dim τ, total degree q - p"""
    sigma: Hashable
    tau: Hashable
    p: int
    q: int

    @property
    def degree(self) -> int:
        return self.q - self.p

    @property
    def bidegree(self) -> Bidegree:
        return self.p, self.q

    def __str__(self) -> str:
        return f"{self.sigma}⊗{self.tau}"


@dataclass
class FilteredComplex:
    """
    Free graded module with an integer differential and a filtration level per basis element.

    The differential maps degree n to n + step and never raises the level, so the same engine
    serves the decreasing σ-filtration of N^{*,*} (level p, step +1) and the increasing one of
    the dual N_{*,*} (level -p, step -1).
    """
    kind: str
    reduced: bool
    basis: Dict[int, Tuple[NBasisElement, ...]]
    differential: Dict[int, IntMatrix]
    step: int = 1
    levels: Dict[int, Tuple[int, ...]] = field(init=False, repr=False)
    _index: Dict[int, Dict[Tuple[Hashable, Hashable], int]] = field(init=False, repr=False)

    def __post_init__(self):
        if self.kind not in (COHOMEOLOGY, HOMEOLOGY):
            raise SpectralSequenceError(f"Unknown filtered complex kind '{self.kind}'")
        sign = 1 if self.kind == COHOMEOLOGY else -1
        self.basis = {n: tuple(elements) for n, elements in self.basis.items() if elements}
        self.levels = {n: tuple(sign * e.p for e in elements) for n, elements in self.basis.items()}
        self._index = {n: {(e.sigma, e.tau): j for j, e in enumerate(elements)}
                       for n, elements in self.basis.items()}
        for n in self.degrees:
            matrix = self.matrix(n)
            if matrix.shape != (self.size(n + self.step), self.size(n)):
                raise SpectralSequenceError(f"Differential in degree {n} has shape {matrix.shape}")

    @property
    def degrees(self) -> List[int]:
        return sorted(self.basis)

    def size(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def index(self, n: int, sigma: Hashable, tau: Hashable) -> int:
        try:
            return self._index[n][(sigma, tau)]
        except KeyError:
            raise SpectralSequenceError(f"{sigma}⊗{tau} is not a basis element in degree {n}") from None

    def find(self, n: int, sigma: Hashable, tau: Hashable) -> Optional[int]:
        return self._index.get(n, {}).get((sigma, tau))

    def matrix(self, n: int) -> IntMatrix:
        """Differential out of degree n"""
        if n in self.differential:
            return self.differential[n]
        return IntMatrix.zeros(self.size(n + self.step), self.size(n))

    def support(self, level: int, n: int) -> List[int]:
        """Indices in degree n whose filtration level is at most the given level"""
        return [j for j, value in enumerate(self.levels.get(n, ())) if value <= level]

    @property
    def min_level(self) -> int:
        return min((min(v) for v in self.levels.values()), default=0)

    @property
    def max_level(self) -> int:
        return max((max(v) for v in self.levels.values()), default=0)

    @property
    def width(self) -> int:
        return self.max_level - self.min_level

    def level_range(self) -> range:
        if not self.levels:
            return range(0)
        return range(self.min_level, self.max_level + 1)

    def bidegree(self, level: int, n: int) -> Bidegree:
        p = level if self.kind == COHOMEOLOGY else -level
        return p, p + n

    def check_square(self):
        for n in self.degrees:
            if not (self.matrix(n + self.step) @ self.matrix(n)).is_zero():
                raise SpectralSequenceError(f"Differential squared is not zero out of degree {n}")

    def vector(self, n: int, terms: Iterable[Tuple[Hashable, Hashable, int]]) -> List[int]:
        """Coordinate vector in degree n of Σ c·(σ⊗τ)"""
        result = [0] * self.size(n)
        for sigma, tau, coefficient in terms:
            result[self.index(n, sigma, tau)] += coefficient
        return result


# -- construction -------------------------------------------------------------------

def build_bicomplex(chain: IntChainComplex,
                    faces_of: Callable[[Hashable], Iterable[Tuple[int, Hashable]]],
                    kind: str = COHOMEOLOGY) -> FilteredComplex:
    """
    Double complex on a ⊗ b with a ⊆ b over a chain complex of cells.

    Δ(a⊗b) = da⊗b + (-1)^{deg a + 1} a⊗δb. faces_of(b) yields (degree, a) for every cell a
    contained in b, b itself included.
    """
    basis = chain.basis
    grouped: Dict[int, List[Tuple[Tuple[int, int, int], NBasisElement]]] = defaultdict(list)
    for q in basis.degrees:
        for tau in basis[q]:
            for p, sigma in faces_of(tau):
                position = basis.find(p, sigma)
                if position is None:
                    continue
                element = NBasisElement(sigma, tau, p, q)
                grouped[q - p].append(((p, position, basis.index(q, tau)), element))
    elements = {n: tuple(e for _, e in sorted(items, key=lambda item: item[0])) for n, items in grouped.items()}

    boundary = {k: chain.boundary_matrix(k).column_entries() for k in basis.degrees}
    coboundary = {k: chain.coboundary_matrix(k).column_entries() for k in basis.degrees}
    index = {n: {(e.sigma, e.tau): j for j, e in enumerate(row)} for n, row in elements.items()}

    differential: Dict[int, IntMatrix] = {}
    for n, row in elements.items():
        target = index.get(n + 1, {})
        entries: Dict[Tuple[int, int], int] = defaultdict(int)
        for j, e in enumerate(row):
            for i, value in boundary[e.p].get(basis.index(e.p, e.sigma), {}).items():
                face = basis[e.p - 1][i]
                entries[(_target_index(target, face, e.tau, n + 1), j)] += value
            sign = -1 if (e.p + 1) % 2 else 1
            for i, value in coboundary[e.q].get(basis.index(e.q, e.tau), {}).items():
                coface = basis[e.q + 1][i]
                entries[(_target_index(target, e.sigma, coface, n + 1), j)] += sign * value
        differential[n] = IntMatrix(len(elements.get(n + 1, ())), len(row), entries)

    F = FilteredComplex(kind=COHOMEOLOGY, reduced=chain.reduced, basis=elements, differential=differential)
    F.check_square()
    logger.debug(f"Built double complex with {sum(F.size(n) for n in F.degrees)} basis elements")
    return dualize(F) if kind == HOMEOLOGY else F


def _target_index(index: Dict[Tuple[Hashable, Hashable], int], sigma, tau, n: int) -> int:
    try:
        return index[(sigma, tau)]
    except KeyError:
        raise SpectralSequenceError(f"{sigma}⊗{tau} is missing from degree {n}; cells are not closed") from None


def dualize(F: FilteredComplex) -> FilteredComplex:
    """Same basis, differential D = Δ^T of degree -1, increasing filtration"""
    if F.kind != COHOMEOLOGY:
        raise SpectralSequenceError("Only a cohomeology complex can be dualized")
    differential = {n: F.matrix(n - 1).T for n in F.degrees}
    return FilteredComplex(kind=HOMEOLOGY, reduced=F.reduced, basis=dict(F.basis),
                           differential=differential, step=-1)


def _simplex_faces(reduced: bool) -> Callable[[Simplex], Iterable[Tuple[int, Simplex]]]:
    def faces_of(tau: Simplex):
        for sigma in tau.subsets():
            if sigma.vertices or reduced:
                yield sigma.dim, sigma
    return faces_of


def build_N(K: SimplicialComplex, reduced: bool = False) -> FilteredComplex:
    """N^{*,*}(K), or Ñ^{*,*}(K) when reduced, with the σ-filtration"""
    F = build_bicomplex(simplicial_chain_complex(K, reduced), _simplex_faces(reduced))
    logger.info(f"Built {'reduced ' if reduced else ''}N complex: "
                f"{sum(F.size(n) for n in F.degrees)} elements in degrees {F.degrees}")
    return F


def build_N_dual(K: SimplicialComplex, reduced: bool = False) -> FilteredComplex:
    return dualize(build_N(K, reduced))


def diagonal_class(K: SimplicialComplex, complex_: Optional[FilteredComplex] = None) -> List[int]:
    """
    Σ_σ (-1)^{⌊(|σ|-1)/2⌋} σ⊗σ over nonempty σ, a degree-0 cocycle of N(K).

    Coordinates are on the degree-0 basis of complex_ when given, of build_N(K) otherwise.
    """
    F = complex_ if complex_ is not None else build_N(K)
    vector = [0] * F.size(0)
    for j, e in enumerate(F.basis.get(0, ())):
        if e.p >= 0:
            vector[j] = -1 if (e.p // 2) % 2 else 1
    return vector


# -- pages ----------------------------------------------------------------------------

@dataclass(frozen=True)
class PageCell:
    """One E_r cell: generator orders, generator lifts into the complex and a coordinate map"""
    page: int
    bidegree: Bidegree
    degree: int
    orders: Tuple[int, ...]
    lifts: Tuple[Tuple[int, ...], ...]
    coordinate_map: Callable[[Sequence[int]], Tuple[int, ...]] = field(repr=False, compare=False)

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup.from_orders(self.orders)

    @property
    def is_trivial(self) -> bool:
        return not self.orders

    def coordinates(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Class of a representative vector (degree-n coordinates) on this cell's generators"""
        return self.coordinate_map(vector)

    def lift(self, coords: Sequence[int]) -> List[int]:
        size = len(self.lifts[0]) if self.lifts else 0
        result = [0] * size
        for c, lift in zip(coords, self.lifts):
            for i, value in enumerate(lift):
                result[i] += c * value
        return result


def _empty_cell(page: int, bidegree: Bidegree, n: int) -> PageCell:
    return PageCell(page, bidegree, n, (), (), lambda vector: ())


@dataclass
class SpectralPage:
    """E_r with its differentials, keyed by source bidegree"""
    r: int
    kind: str
    cells: Dict[Bidegree, PageCell]
    differentials: Dict[Bidegree, GroupHomomorphism]

    def target(self, bidegree: Bidegree) -> Bidegree:
        p, q = bidegree
        if self.kind == COHOMEOLOGY:
            return p - self.r, q - self.r + 1
        return p + self.r, q + self.r - 1

    def group(self, bidegree: Bidegree) -> AbelianGroup:
        cell = self.cells.get(tuple(bidegree))
        return cell.group if cell else AbelianGroup()

    def differential(self, bidegree: Bidegree) -> GroupHomomorphism:
        bidegree = tuple(bidegree)
        if bidegree in self.differentials:
            return self.differentials[bidegree]
        source = self.cells.get(bidegree)
        target = self.cells.get(self.target(bidegree))
        return GroupHomomorphism.zero(source.orders if source else (), target.orders if target else ())

    def table(self) -> BigradedGroupTable:
        return BigradedGroupTable({b: c.group for b, c in self.cells.items()})

    def to_json(self) -> Dict[str, object]:
        return self.table().to_json(page=self.r)


class SpectralSequence:
    """
    Pages of a FilteredComplex computed with exact lattice arithmetic.

    With level f and degree n the cell is Z_r / (Z_{r-1}^{f-1} + B_{r-1}) where
    Z_r = {x ∈ F_f : dx ∈ F_{f-r}} and B_{r-1} = d(Z_{r-1}^{f+r-1}) ∩ F_f.
    """

    def __init__(self, complex_: FilteredComplex, coeffs: Coefficients = INTEGERS):
        self.complex = complex_
        self.coeffs = Coefficients.parse(coeffs)
        self._cells: Dict[Tuple[int, int, int], PageCell] = {}
        self._maps: Dict[Tuple[int, int, int], GroupHomomorphism] = {}
        self._pages: Dict[int, SpectralPage] = {}

    def cell(self, r: int, level: int, n: int) -> PageCell:
        key = (r, level, n)
        if key not in self._cells:
            self._cells[key] = self._compute_cell(r, level, n)
        return self._cells[key]

    def _compute_cell(self, r: int, level: int, n: int) -> PageCell:
        F = self.complex
        coeffs = self.coeffs
        bidegree = F.bidegree(level, n)
        support = F.support(level, n)
        if not support:
            return _empty_cell(r, bidegree, n)

        outgoing = F.matrix(n)
        high_rows = [i for i, value in enumerate(F.levels.get(n + F.step, ())) if value > level - r]
        cycles = coeffs.kernel(outgoing.select(rows=high_rows, cols=support))

        lower = [k for k, j in enumerate(support) if F.levels[n][j] <= level - 1]
        previous = coeffs.kernel(outgoing.select(rows=high_rows, cols=[support[k] for k in lower]))
        previous = IntMatrix(len(support), previous.cols, {(lower[i], j): v for (i, j), v in previous.items()})

        incoming = F.matrix(n - F.step)
        sources = F.support(level + r - 1, n - F.step)
        outside = [i for i, value in enumerate(F.levels[n]) if value > level]
        reachable = coeffs.kernel(incoming.select(rows=outside, cols=sources))
        boundaries = incoming.select(rows=support, cols=sources) @ reachable

        denominator = coeffs.close(IntMatrix.hstack([previous, boundaries], rows=len(support)))
        presentation = subquotient_group(Subquotient(len(support), cycles, denominator))
        logger.debug(f"E_{r}{bidegree} = {presentation.group}")
        return PageCell(
            page=r,
            bidegree=bidegree,
            degree=n,
            orders=presentation.orders,
            lifts=tuple(tuple(_embed(column, support, F.size(n))) for column in presentation.lifts()),
            coordinate_map=_restricted_coordinates(presentation, support, F.size(n), coeffs),
        )

    def differential(self, r: int, level: int, n: int) -> GroupHomomorphism:
        """d_r out of the cell (level, n), on the computed generators"""
        key = (r, level, n)
        if key not in self._maps:
            source = self.cell(r, level, n)
            target = self.cell(r, level - r, n + self.complex.step)
            outgoing = self.complex.matrix(n)
            columns = [target.coordinates(outgoing.apply(list(lift))) for lift in source.lifts]
            matrix = IntMatrix.from_columns(columns, len(target.orders)) if columns \
                else IntMatrix.zeros(len(target.orders), 0)
            self._maps[key] = GroupHomomorphism(source.orders, target.orders, matrix)
        return self._maps[key]

    def page(self, r: int) -> SpectralPage:
        if r < 1:
            raise SpectralSequenceError(f"Pages start at r = 1, got r = {r}")
        if r in self._pages:
            return self._pages[r]
        F = self.complex
        cells: Dict[Bidegree, PageCell] = {}
        differentials: Dict[Bidegree, GroupHomomorphism] = {}
        for n in F.degrees:
            for level in F.level_range():
                cell = self.cell(r, level, n)
                if cell.is_trivial:
                    continue
                cells[cell.bidegree] = cell
                differential = self.differential(r, level, n)
                if differential.target_orders:
                    differentials[cell.bidegree] = differential
        page = SpectralPage(r, F.kind, cells, differentials)
        if config.CHECK_PAGES:
            self._check_page(r)
        logger.debug(f"Page E_{r} ({F.kind}) has {len(cells)} nonzero cells")
        self._pages[r] = page
        return page

    def _check_page(self, r: int):
        F = self.complex
        for n in F.degrees:
            for level in F.level_range():
                if self.cell(r, level, n).is_trivial:
                    continue
                after = self.differential(r, level - r, n + F.step)
                if not (after @ self.differential(r, level, n)).is_zero():
                    raise SpectralSequenceError(f"d_{r}∘d_{r} is not zero at {F.bidegree(level, n)}")
        if r == 1:
            return
        for n in F.degrees:
            for level in F.level_range():
                previous = self.cell(r - 1, level, n)
                expected = presentation_homology(
                    previous.orders,
                    self.differential(r - 1, level + r - 1, n - F.step),
                    self.differential(r - 1, level, n),
                )
                actual = self.cell(r, level, n).group
                if not _same_group(expected, actual, self.coeffs):
                    raise SpectralSequenceError(
                        f"E_{r}{F.bidegree(level, n)} = {actual} but the homology of E_{r - 1} there is {expected}"
                    )


def _same_group(expected: AbelianGroup, actual: AbelianGroup, coeffs: Coefficients) -> bool:
    # Over Q the integer presentations only determine the rank.
    if coeffs.kind == "q":
        return expected.rank == actual.rank
    return expected == actual


def _embed(column: Sequence[int], support: Sequence[int], size: int) -> List[int]:
    vector = [0] * size
    for value, j in zip(column, support):
        vector[j] = int(value)
    return vector


def _restricted_coordinates(presentation: GroupPresentation, support: Sequence[int], size: int,
                            coeffs: Coefficients) -> Callable[[Sequence[int]], Tuple[int, ...]]:
    inside = set(support)
    modulus = coeffs.prime if coeffs.kind == "zp" else 0

    def coordinates(vector: Sequence[int]) -> Tuple[int, ...]:
        if len(vector) != size:
            raise ContainmentError(f"Vector of length {len(vector)} does not fit a degree of size {size}")
        for j, value in enumerate(vector):
            if j not in inside and value and (not modulus or value % modulus):
                raise ContainmentError("Vector has entries above the filtration level of the cell")
        return presentation.coordinates([vector[j] for j in support])

    return coordinates


def spectral_page(F: FilteredComplex, r: int, coeffs: Coefficients = INTEGERS) -> SpectralPage:
    if r < 1:
        raise SpectralSequenceError(f"Pages start at r = 1, got r = {r}")
    return SpectralSequence(F, coeffs).page(r)


# -- the invariants -----------------------------------------------------------------

def cohomeology(K: SimplicialComplex, coeffs: Coefficients = INTEGERS, reduced: bool = False) -> BigradedGroupTable:
    """E_2 of N^{*,*}(K), the cohomeology table"""
    table = SpectralSequence(build_N(K, reduced), Coefficients.parse(coeffs)).page(2).table()
    logger.info(f"Computed {'reduced ' if reduced else ''}cohomeology: {len(table)} nonzero cells")
    return table


def homeology(K: SimplicialComplex, coeffs: Coefficients = INTEGERS, reduced: bool = False) -> BigradedGroupTable:
    """E^2 of the dual N_{*,*}(K), the homeology table"""
    table = SpectralSequence(build_N_dual(K, reduced), Coefficients.parse(coeffs)).page(2).table()
    logger.info(f"Computed {'reduced ' if reduced else ''}homeology: {len(table)} nonzero cells")
    return table


def all_tables(K: SimplicialComplex, coeffs: Coefficients = INTEGERS) -> Dict[str, BigradedGroupTable]:
    """The four tables keyed 'cohomeology', 'reduced cohomeology', 'homeology', 'reduced homeology'"""
    coeffs = Coefficients.parse(coeffs)
    tables = {}
    for reduced in (False, True):
        prefix = "reduced " if reduced else ""
        F = build_N(K, reduced)
        tables[prefix + COHOMEOLOGY] = SpectralSequence(F, coeffs).page(2).table()
        tables[prefix + HOMEOLOGY] = SpectralSequence(dualize(F), coeffs).page(2).table()
    return tables


def total_cohomology(F: FilteredComplex, coeffs: Coefficients = INTEGERS) -> Dict[int, AbelianGroup]:
    """Homology of the total complex in every degree (cohomology for N, homology for the dual)"""
    coeffs = Coefficients.parse(coeffs)
    groups = {}
    for n in F.degrees:
        cycles = coeffs.kernel(F.matrix(n))
        boundaries = coeffs.close(F.matrix(n - F.step))
        groups[n] = subquotient_group(Subquotient(F.size(n), cycles, boundaries)).group
    return groups


def e_infinity(F: FilteredComplex, coeffs: Coefficients = INTEGERS) -> BigradedGroupTable:
    """The stable page, reached once r exceeds the filtration width"""
    sequence = SpectralSequence(F, coeffs)
    r_max = F.width + 2
    last = sequence.page(r_max).table()
    before = sequence.page(r_max - 1).table()
    if last != before:
        raise SpectralSequenceError(f"Pages {r_max - 1} and {r_max} differ; the sequence has not stabilized")
    return last


# -- E_1 from links -----------------------------------------------------------------

@dataclass
class _LinkSummand:
    sigma: Simplex
    cohomology: LinkCohomology
    offset: int


def _lift_sign(K: SimplicialComplex, sigma: Simplex, face: Simplex, p: int, q: int) -> int:
    """Sign identifying a link cochain τ' with ±σ⊗(σ∪τ') in N"""
    sign = permutation_sign([K.ord(v) for v in face.vertices + sigma.vertices])
    return -sign if (p * q) % 2 else sign


def e1_via_links(K: SimplicialComplex, coeffs: Coefficients = INTEGERS, reduced: bool = False,
                 complex_: Optional[FilteredComplex] = None) -> SpectralPage:
    """
    Page 1 as ⊕_{|σ|=p+1} H̃^{q-p-1}(link σ) with d_1[c] = (-1)^q Σ_{v∈σ} [φ_v(c)],
    φ_v(τ') = τ' joined with v in link(σ - v). Lifts land in build_N(K, reduced).
    """
    coeffs = Coefficients.parse(coeffs)
    F = complex_ if complex_ is not None else build_N(K, reduced)
    summands: Dict[Bidegree, List[_LinkSummand]] = defaultdict(list)
    sizes: Dict[Bidegree, int] = defaultdict(int)
    for sigma in (K.all_faces() if reduced else K.nonempty_faces()):
        L = link(K, sigma)
        chain = simplicial_chain_complex(L, reduced=True)
        p = sigma.dim
        for d in chain.degrees:
            presentation = chain.cohomology_presentation(d, coeffs)
            if not presentation.orders:
                continue
            bidegree = (p, p + d + 1)
            summands[bidegree].append(
                _LinkSummand(sigma, LinkCohomology(sigma, L, d, chain, presentation), sizes[bidegree]))
            sizes[bidegree] += len(presentation.orders)

    cells = {b: _link_cell(K, F, b, parts) for b, parts in summands.items()}
    differentials = {}
    for (p, q), parts in summands.items():
        target = summands.get((p - 1, q))
        if not target:
            continue
        by_sigma = {part.sigma: part for part in target}
        sign = -1 if q % 2 else 1
        columns = []
        for part in parts:
            cells_d = part.cohomology.cells
            for generator in part.cohomology.presentation.lifts():
                column = [0] * sizes[(p - 1, q)]
                for i, v in enumerate(part.sigma.vertices):
                    face_part = by_sigma.get(part.sigma.without(v))
                    if face_part is None:
                        continue
                    image = _join_vertex(K, generator, cells_d, v, face_part.cohomology)
                    coords = face_part.cohomology.presentation.coordinates(image)
                    for k, c in enumerate(coords):
                        column[face_part.offset + k] += sign * c
                columns.append(column)
        target_orders = cells[(p - 1, q)].orders
        matrix = IntMatrix.from_columns(columns, len(target_orders))
        differentials[(p, q)] = GroupHomomorphism(cells[(p, q)].orders, target_orders, matrix)
    return SpectralPage(1, COHOMEOLOGY, cells, differentials)


def _join_vertex(K: SimplicialComplex, cochain: Sequence[int], cells: Sequence[Simplex], v: str,
                 target: LinkCohomology) -> List[int]:
    """φ_v: τ' ↦ (-1)^{#vertices of τ' after v} (τ' ∪ v) into the link of σ - v"""
    basis = target.chain_complex.basis
    image = [0] * basis.size(target.degree)
    for value, face in zip(cochain, cells):
        if not value:
            continue
        after = sum(1 for u in face.vertices if K.ord(u) > K.ord(v))
        joined = K.union(face, Simplex((v,)))
        image[basis.index(target.degree, joined)] += (-1) ** after * value
    return image


def _link_cell(K: SimplicialComplex, F: FilteredComplex, bidegree: Bidegree,
               parts: List[_LinkSummand]) -> PageCell:
    p, q = bidegree
    n = q - p
    orders: List[int] = []
    lifts: List[Tuple[int, ...]] = []
    for part in parts:
        orders.extend(part.cohomology.presentation.orders)
        for generator in part.cohomology.presentation.lifts():
            terms = []
            for value, face in zip(generator, part.cohomology.cells):
                if value:
                    tau = K.union(part.sigma, face)
                    terms.append((part.sigma, tau, _lift_sign(K, part.sigma, face, p, q) * value))
            lifts.append(tuple(F.vector(n, terms)))

    def coordinates(vector: Sequence[int]) -> Tuple[int, ...]:
        result: List[int] = []
        for part in parts:
            cochain = []
            for face in part.cohomology.cells:
                tau = K.union(part.sigma, face)
                cochain.append(_lift_sign(K, part.sigma, face, p, q) * vector[F.index(n, part.sigma, tau)])
            result.extend(part.cohomology.presentation.coordinates(cochain))
        return tuple(result)

    return PageCell(1, bidegree, n, tuple(orders), tuple(lifts), coordinates)
