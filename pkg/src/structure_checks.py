"""
Structural identities of cohomeology evaluated exactly: Euler characteristic, component counts,
Künneth formulas for joins and products, gluing along a simplex and collapse for manifolds
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Union

from src.abelian_groups import INTEGERS, AbelianGroup, Coefficients
from src.bigraded_table import BigradedGroupTable, graded_to_json
from src.block_complex import block_cohomeology, product_block_complex
from src.chain_complexes import cohomology, link_cohomology
from src.config import config
from src.errors import ComplexTooLargeError, HypothesisViolation
from src.homeology import cohomeology
from src.simplicial_complex import (
    Simplex,
    SimplicialComplex,
    component_dimensions_containing,
    completely_connected_components,
    count_top_components,
    euler_characteristic,
    glue,
    join,
)

logger = logging.getLogger(__name__)

Side = Union[int, BigradedGroupTable, Dict[int, AbelianGroup], Dict[str, object]]


@dataclass
class CheckReport:
    """Both sides of an identity and whether they agree"""
    name: str
    passed: bool
    left: Side
    right: Side
    details: List[str] = field(default_factory=list)

    def to_json(self) -> Dict[str, object]:
        return {
            "check": self.name,
            "passed": self.passed,
            "left": _side_to_json(self.left),
            "right": _side_to_json(self.right),
            "details": list(self.details),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status}"


def _side_to_json(side: Side):
    if isinstance(side, BigradedGroupTable):
        return side.to_json()
    if isinstance(side, dict) and all(isinstance(v, AbelianGroup) for v in side.values()):
        return graded_to_json(side)
    return side


def _table_details(left: BigradedGroupTable, right: BigradedGroupTable) -> List[str]:
    return [f"({p},{q}): {a} vs {b}" for (p, q), a, b in left.differences(right)]


def _require_torsion_free(table: BigradedGroupTable, what: str):
    torsion = [(cell, group) for cell, group in table.items() if not group.is_free]
    if torsion:
        cell, group = torsion[0]
        raise HypothesisViolation(f"{what} has torsion at {cell} ({group}); the Künneth formula needs torsion-free tables")


# -- Euler and components ----------------------------------------------------------

def check_euler(K: SimplicialComplex, table: Optional[BigradedGroupTable] = None) -> CheckReport:
    """Σ_{0<=p<=q} (-1)^{q-p} rank ℋ^{p,q}(K) = χ(K)"""
    table = table if table is not None else cohomeology(K)
    left, right = table.euler_sum(), euler_characteristic(K)
    return CheckReport("euler", left == right, left, right)


def check_components(K: SimplicialComplex, table: Optional[BigradedGroupTable] = None,
                     face_budget: Optional[int] = None) -> CheckReport:
    """
    rank ℋ^{n,n}(K) equals the number of n-dimensional completely connected components and
    ℋ^{n,n} is torsion-free; the exhaustive search must agree when the complex is small enough.
    """
    table = table if table is not None else cohomeology(K)
    ranks = {n: table[(n, n)].rank for n in range(K.dim + 1)}
    counts = {n: count_top_components(K, n) for n in range(K.dim + 1)}
    details = []
    passed = ranks == counts
    for n in range(K.dim + 1):
        if table[(n, n)].torsion:
            passed = False
            details.append(f"({n},{n}) has torsion {table[(n, n)]}")

    budget = face_budget if face_budget is not None else config.COMPONENT_FACE_BUDGET
    try:
        components = completely_connected_components(K, budget)
    except ComplexTooLargeError:
        details.append(f"exhaustive search skipped: more than {budget} faces")
    else:
        searched = {n: sum(1 for c in components if c.dim == n) for n in range(K.dim + 1)}
        if searched != counts:
            passed = False
            details.append(f"exhaustive search found {searched}, fast count gives {counts}")
    return CheckReport("components", passed, {str(n): r for n, r in ranks.items()},
                       {str(n): c for n, c in counts.items()}, details)


# -- Künneth --------------------------------------------------------------------------

def check_kunneth_join(K: SimplicialComplex, L: SimplicialComplex,
                       coeffs: Coefficients = INTEGERS) -> CheckReport:
    """Reduced ℋ(K * L) equals ℋ(K) ⊗ ℋ(L) with bidegrees raised by (1, 1)"""
    first = cohomeology(K, coeffs, reduced=True)
    second = cohomeology(L, coeffs, reduced=True)
    _require_torsion_free(first, "the first factor")
    _require_torsion_free(second, "the second factor")
    predicted = first.tensor(second).shift(1, 1)
    computed = cohomeology(join(K, L), coeffs, reduced=True)
    return CheckReport("kunneth-join", computed == predicted, computed, predicted,
                       _table_details(computed, predicted))


def check_kunneth_product(K: SimplicialComplex, L: SimplicialComplex,
                          coeffs: Coefficients = INTEGERS) -> CheckReport:
    """ℋ(K × L) from the product block complex equals ℋ(K) ⊗ ℋ(L)"""
    first = cohomeology(K, coeffs)
    second = cohomeology(L, coeffs)
    _require_torsion_free(first, "the first factor")
    _require_torsion_free(second, "the second factor")
    predicted = first.tensor(second)
    _, blocks = product_block_complex(K, L)
    computed = block_cohomeology(blocks, coeffs)
    return CheckReport("kunneth-product", computed == predicted, computed, predicted,
                       _table_details(computed, predicted))


# -- gluing along a simplex -----------------------------------------------------------

@dataclass
class GluePrediction:
    table: BigradedGroupTable
    case: str
    simplex: Simplex
    glued: SimplicialComplex


def _shared_simplex(intersection: SimplicialComplex) -> Simplex:
    facets = [f for f in intersection.facets if f.vertices]
    if len(facets) != 1:
        raise HypothesisViolation(
            f"The complexes must meet in a single closed simplex, they meet in {len(facets)} facets")
    return facets[0]


def predict_glued_cohomeology(K: SimplicialComplex, L: SimplicialComplex,
                              identification: Mapping[str, str]) -> GluePrediction:
    """
    ℋ(K ∪ L) from ℋ(K) ⊕ ℋ(L) when K ∩ L is a closed simplex σ of dimension n.

    Components through σ of dimension n remove a Z at (n, n). Otherwise components of dimension
    n + 1 add a Z at (n-1, n) when σ is a facet and remove one at (n+1, n+1) when it is not.
    Otherwise a facet σ adds Z at (n-1, n) and a non-facet σ adds Z at (n, n+1).
    """
    result = glue(K, L, identification)
    sigma = _shared_simplex(result.intersection)
    inverse = {target: source for source, target in identification.items()}
    sigma_in_L = L.simplex(inverse[v] for v in sigma.vertices)
    n = sigma.dim

    dims = component_dimensions_containing(K, sigma) + component_dimensions_containing(L, sigma_in_L)
    is_facet = sigma in K.facets or sigma_in_L in L.facets
    table = cohomeology(K).direct_sum(cohomeology(L))

    def add(cell):
        return table.with_cell(cell, table[cell] + AbelianGroup.free(1))

    def remove(cell):
        if table[cell].rank < 1:
            raise HypothesisViolation(f"Cannot split a Z off the cell {cell} ({table[cell]})")
        return table.with_cell(cell, table[cell].quotient_by_free(1))

    if n in dims:
        case, table = "a", remove((n, n))
    elif n + 1 in dims:
        case, table = ("b(i)", add((n - 1, n))) if is_facet else ("b(ii)", remove((n + 1, n + 1)))
    else:
        case, table = ("c(i)", add((n - 1, n))) if is_facet else ("c(ii)", add((n, n + 1)))
    logger.debug(f"Gluing along {sigma}: component dimensions {dims}, facet={is_facet}, case {case}")
    return GluePrediction(table, case, sigma, result.complex)


def check_glue(K: SimplicialComplex, L: SimplicialComplex, identification: Mapping[str, str]) -> CheckReport:
    prediction = predict_glued_cohomeology(K, L, identification)
    computed = cohomeology(prediction.glued)
    details = [f"case {prediction.case} at {prediction.simplex}"] + _table_details(computed, prediction.table)
    return CheckReport("glue", computed == prediction.table, computed, prediction.table, details)


# -- collapse -------------------------------------------------------------------------

def links_concentrated(K: SimplicialComplex, n: int) -> bool:
    """Every nonempty σ has H̃^k(link σ) = 0 for k != n - |σ|"""
    for sigma in K.nonempty_faces():
        for degree in range(-1, K.dim + 1):
            if degree == n - len(sigma):
                continue
            if not link_cohomology(K, sigma, degree).group.is_trivial:
                return False
    return True


def check_collapse(K: SimplicialComplex, n: Optional[int] = None,
                   table: Optional[BigradedGroupTable] = None) -> CheckReport:
    """For links concentrated in degree n - |σ|: ℋ^{p,q} = 0 for q < n and ℋ^{p,n} ≅ H^{n-p}(K)"""
    n = K.dim if n is None else n
    if not links_concentrated(K, n):
        raise HypothesisViolation(f"Some link has reduced cohomology outside degree {n} - |σ|")
    table = table if table is not None else cohomeology(K)
    groups = cohomology(K)
    left = BigradedGroupTable({cell: g for cell, g in table.items() if cell[1] <= n})
    right = BigradedGroupTable({(p, n): groups.get(n - p, AbelianGroup()) for p in range(n + 1)})
    return CheckReport("collapse", left == right, left, right, _table_details(left, right))
