"""
Seeded stellar-subdivision harness: the four (co)homeology tables must not change
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from src.abelian_groups import INTEGERS, AbelianGroup, Coefficients
from src.bigraded_table import Bidegree, BigradedGroupTable
from src.config import config
from src.errors import ComplexTooLargeError
from src.homeology import all_tables
from src.simplicial_complex import Simplex, SimplicialComplex, stellar_subdivide

logger = logging.getLogger(__name__)

TableFunction = Callable[[SimplicialComplex], Dict[str, BigradedGroupTable]]


@dataclass
class SubdivisionStep:
    index: int
    simplex: Simplex
    apex: str
    n_faces: int


@dataclass
class Mismatch:
    step: int
    table: str
    cell: Bidegree
    expected: AbelianGroup
    actual: AbelianGroup

    def __str__(self) -> str:
        return (f"step {self.step}: {self.table} at {self.cell} changed "
                f"from {self.expected} to {self.actual}")


@dataclass
class InvarianceReport:
    seed: int
    requested: int
    steps: List[SubdivisionStep] = field(default_factory=list)
    baseline: Dict[str, BigradedGroupTable] = field(default_factory=dict)
    mismatch: Optional[Mismatch] = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def to_json(self) -> Dict[str, object]:
        return {
            "passed": self.passed,
            "seed": self.seed,
            "requested": self.requested,
            "performed": len(self.steps),
            "subdivisions": [
                {"simplex": list(s.simplex.vertices), "apex": s.apex, "faces": s.n_faces} for s in self.steps
            ],
            "tables": {name: table.to_json() for name, table in self.baseline.items()},
            "mismatch": None if self.mismatch is None else {
                "step": self.mismatch.step,
                "table": self.mismatch.table,
                "cell": list(self.mismatch.cell),
                "expected": self.mismatch.expected.to_json(),
                "actual": self.mismatch.actual.to_json(),
            },
        }


def verify_invariance(K: SimplicialComplex, count: int, seed: int, coeffs: Coefficients = INTEGERS,
                      budget: Optional[int] = None,
                      table_function: Optional[TableFunction] = None) -> InvarianceReport:
    """
    Apply count stellar subdivisions at uniformly chosen simplices of dimension >= 1 and
    recompute all tables after each; stop at the first changed cell.
    """
    if count < 0:
        raise ValueError(f"Subdivision count must be non-negative, got {count}")
    budget = budget if budget is not None else config.SUBDIVISION_FACE_BUDGET
    compute = table_function or (lambda complex_: all_tables(complex_, coeffs))
    rng = np.random.default_rng(seed)

    report = InvarianceReport(seed=seed, requested=count, baseline=compute(K))
    current = K
    for index in range(1, count + 1):
        candidates = [face for face in current.nonempty_faces() if face.dim >= 1]
        if not candidates:
            logger.info("No simplex of dimension >= 1 left to subdivide")
            break
        sigma = candidates[int(rng.integers(len(candidates)))]
        current = stellar_subdivide(current, sigma)
        if current.n_faces > budget:
            raise ComplexTooLargeError(
                f"Subdivision {index} produced {current.n_faces} faces, budget is {budget}")
        apex = current.vertices[-1]
        report.steps.append(SubdivisionStep(index, sigma, apex, current.n_faces))
        logger.info(f"🔄 Subdivision {index}/{count} at {sigma} ({current.n_faces} faces)")

        tables = compute(current)
        for name, expected in report.baseline.items():
            actual = tables[name]
            differences = expected.differences(actual)
            if differences:
                cell, before, after = differences[0]
                report.mismatch = Mismatch(index, name, cell, before, after)
                logger.warning(f"Invariance broken: {report.mismatch}")
                return report
    return report
