"""
Finitely generated abelian groups, subquotient presentations and coefficient choices
"""

import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import factorint, isprime

from src.errors import AlgebraError, CoefficientError, ContainmentError
from src.integer_matrix import (
    IntMatrix,
    LatticeSolver,
    image_basis,
    invariant_factors,
    kernel_basis,
    saturate,
    smith_normal_form,
    unimodular_inverse,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk with d1 | d2 | ... | dk, each di >= 2"""
    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise AlgebraError(f"Free rank must be non-negative, got {self.rank}")
        for d in self.torsion:
            if d < 2:
                raise AlgebraError(f"Invariant factors must be at least 2, got {d}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise AlgebraError(f"Invariant factors {self.torsion} do not form a divisibility chain")

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls()

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank=rank)

    @classmethod
    def cyclic(cls, order: int) -> "AbelianGroup":
        """Z/order; order 0 gives Z and order 1 the trivial group"""
        return cls.from_orders([order])

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Canonical form of a direct sum of cyclic groups (0 meaning Z)"""
        rank = 0
        prime_powers: Dict[int, List[int]] = defaultdict(list)
        for order in orders:
            order = abs(int(order))
            if order == 0:
                rank += 1
            elif order > 1:
                for prime, exponent in factorint(order).items():
                    prime_powers[prime].append(prime ** exponent)
        length = max((len(p) for p in prime_powers.values()), default=0)
        for powers in prime_powers.values():
            powers.sort(reverse=True)
        factors = [math.prod(p[k] for p in prime_powers.values() if len(p) > k) for k in range(length)]
        return cls(rank=rank, torsion=tuple(sorted(factors)))

    @property
    def free_rank(self) -> int:
        return self.rank

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def orders(self) -> Tuple[int, ...]:
        """Generator orders in canonical generator order: torsion first, then 0 for each free summand"""
        return self.torsion + (0,) * self.rank

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_orders(self.orders + other.orders)

    def quotient_by_free(self, count: int = 1) -> "AbelianGroup":
        """Quotient by a free direct summand of the given rank"""
        if count > self.rank:
            raise AlgebraError(f"Cannot split Z^{count} off {self}")
        return AbelianGroup(self.rank - count, self.torsion)

    def to_json(self) -> Dict[str, object]:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "AbelianGroup":
        return cls.from_orders([0] * int(data.get("rank", 0)) + [int(d) for d in data.get("torsion", [])])

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts)


def group_tensor(A: AbelianGroup, B: AbelianGroup) -> AbelianGroup:
    """A ⊗ B via bilinearity over the cyclic summands"""
    orders = []
    for a in A.orders:
        for b in B.orders:
            orders.append(math.gcd(a, b))
    return AbelianGroup.from_orders(orders)


# -- coefficients -----------------------------------------------------------------

@dataclass(frozen=True)
class Coefficients:
    """Coefficient choice for every group computation: Z, Q or Z/p"""
    kind: str = "z"
    prime: int = 0

    def __post_init__(self):
        if self.kind not in ("z", "q", "zp"):
            raise CoefficientError(f"Unknown coefficient kind '{self.kind}'")
        if self.kind == "zp" and not isprime(self.prime):
            raise CoefficientError(f"Z/p coefficients need a prime, got {self.prime}")

    @classmethod
    def parse(cls, spec) -> "Coefficients":
        """Parse 'z', 'q' or 'zp:<prime>'"""
        if isinstance(spec, Coefficients):
            return spec
        text = str(spec).strip().lower()
        if text in ("z", "q"):
            return cls(text)
        if text.startswith("zp:"):
            try:
                prime = int(text[3:])
            except ValueError:
                raise CoefficientError(f"Invalid modulus in coefficient spec '{spec}'") from None
            return cls("zp", prime)
        raise CoefficientError(f"Unknown coefficient spec '{spec}' (expected z, q or zp:<prime>)")

    @property
    def label(self) -> str:
        return {"z": "Z", "q": "Q"}.get(self.kind, f"Z/{self.prime}")

    def __str__(self) -> str:
        return self.kind if self.kind != "zp" else f"zp:{self.prime}"

    def kernel(self, M: IntMatrix) -> IntMatrix:
        """Lattice of integer vectors whose image vanishes in these coefficients"""
        if self.kind != "zp" or M.rows == 0:
            kernel = kernel_basis(M)
            return self.close(kernel) if self.kind == "zp" else kernel
        widened = IntMatrix.hstack([M, IntMatrix.identity(M.rows).scale(self.prime)])
        solutions = kernel_basis(widened)
        return image_basis(solutions.select(rows=range(M.cols)))

    def close(self, L: IntMatrix) -> IntMatrix:
        """Canonical lattice representing the span of L in these coefficients"""
        if self.kind == "q":
            return saturate(L)
        if self.kind == "zp":
            return image_basis(IntMatrix.hstack([L, IntMatrix.identity(L.rows).scale(self.prime)]))
        return image_basis(L)


INTEGERS = Coefficients("z")
RATIONALS = Coefficients("q")


def field_rank(M: IntMatrix, field: Coefficients) -> int:
    """Rank of M over Q or Z/p"""
    field = Coefficients.parse(field)
    factors = invariant_factors(M)
    if field.kind == "zp":
        return sum(1 for d in factors if d % field.prime)
    return len(factors)


# -- subquotients -----------------------------------------------------------------

@dataclass(frozen=True)
class Subquotient:
    """Numerator lattice modulo a sublattice, both given by generator columns in Z^ambient_dim"""
    ambient_dim: int
    numerator_gens: IntMatrix
    denominator_gens: IntMatrix


class GroupPresentation:
    """A computed subquotient with chosen generators and a coordinate map"""

    def __init__(self, group: AbelianGroup, orders: Tuple[int, ...], generators: IntMatrix,
                 solver: LatticeSolver, transform: IntMatrix, kept: Sequence[int]):
        self.group = group
        self.orders = orders
        self.generators = generators
        self._solver = solver
        self._transform = transform
        self._kept = list(kept)

    @property
    def ambient_dim(self) -> int:
        return self.generators.rows

    def coordinates(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Coordinates of a numerator element on the generators, torsion entries reduced"""
        x = self._solver.solve(vector)
        if x is None:
            raise ContainmentError("Vector is not in the numerator lattice")
        y = self._transform.apply(x)
        coords = []
        for order, index in zip(self.orders, self._kept):
            coords.append(y[index] % order if order else y[index])
        return tuple(coords)

    def lift(self, coords: Sequence[int]) -> List[int]:
        return self.generators.apply(list(coords))

    def lifts(self) -> List[List[int]]:
        return self.generators.columns()

    def __repr__(self) -> str:
        return f"GroupPresentation({self.group}, ambient={self.ambient_dim})"


def subquotient_group(S: Subquotient) -> GroupPresentation:
    """Numerator/denominator as a canonical group with generator lifts"""
    numerator = image_basis(S.numerator_gens) if S.numerator_gens.cols else IntMatrix.zeros(S.ambient_dim, 0)
    solver = LatticeSolver(numerator)
    columns = []
    for j, column in enumerate(S.denominator_gens.columns()):
        x = solver.solve(column)
        if x is None:
            raise ContainmentError(f"Denominator generator {j} is not in the numerator lattice")
        columns.append(x)
    a = numerator.cols
    inclusion = IntMatrix.from_columns(columns, a) if columns else IntMatrix.zeros(a, 0)

    U, D, _ = smith_normal_form(inclusion)
    diagonal = [D[i, i] if i < D.cols else 0 for i in range(a)]
    kept = [i for i, d in enumerate(diagonal) if d != 1]
    orders = tuple(diagonal[i] for i in kept)
    generators = (numerator @ unimodular_inverse(U)).select(cols=kept)
    group = AbelianGroup(rank=sum(1 for d in orders if d == 0), torsion=tuple(d for d in orders if d))
    return GroupPresentation(group, orders, generators, solver, U, kept)


def trivial_presentation(ambient_dim: int = 0) -> GroupPresentation:
    return subquotient_group(Subquotient(ambient_dim, IntMatrix.zeros(ambient_dim, 0),
                                         IntMatrix.zeros(ambient_dim, 0)))


# -- homomorphisms between presented groups ----------------------------------------

def relation_matrix(orders: Sequence[int]) -> IntMatrix:
    """Columns order_i · e_i for the torsion generators"""
    torsion = [i for i, o in enumerate(orders) if o]
    return IntMatrix(len(orders), len(torsion), {(i, k): orders[i] for k, i in enumerate(torsion)})


@dataclass(frozen=True)
class GroupHomomorphism:
    """Homomorphism ⊕Z/source_orders → ⊕Z/target_orders given on generators (0 order = Z)"""
    source_orders: Tuple[int, ...]
    target_orders: Tuple[int, ...]
    matrix: IntMatrix = field(compare=False)
    _key: Tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "source_orders", tuple(self.source_orders))
        object.__setattr__(self, "target_orders", tuple(self.target_orders))
        if self.matrix.shape != (len(self.target_orders), len(self.source_orders)):
            raise AlgebraError(
                f"Homomorphism matrix {self.matrix.shape} does not fit "
                f"{len(self.source_orders)} -> {len(self.target_orders)} generators"
            )
        reduced = self.matrix.reduce_rows(self.target_orders)
        object.__setattr__(self, "matrix", reduced)
        object.__setattr__(self, "_key", tuple(reduced.items()))

    @classmethod
    def identity(cls, orders: Sequence[int]) -> "GroupHomomorphism":
        return cls(tuple(orders), tuple(orders), IntMatrix.identity(len(orders)))

    @classmethod
    def zero(cls, source_orders: Sequence[int], target_orders: Sequence[int]) -> "GroupHomomorphism":
        return cls(tuple(source_orders), tuple(target_orders), IntMatrix.zeros(len(target_orders), len(source_orders)))

    @property
    def source(self) -> AbelianGroup:
        return AbelianGroup.from_orders(self.source_orders)

    @property
    def target(self) -> AbelianGroup:
        return AbelianGroup.from_orders(self.target_orders)

    def __matmul__(self, other: "GroupHomomorphism") -> "GroupHomomorphism":
        """self ∘ other"""
        if other.target_orders != self.source_orders:
            raise AlgebraError("Cannot compose homomorphisms with mismatched generator orders")
        return GroupHomomorphism(other.source_orders, self.target_orders, self.matrix @ other.matrix)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_identity(self) -> bool:
        return self.source_orders == self.target_orders and self == GroupHomomorphism.identity(self.source_orders)

    def kernel_lattice(self) -> IntMatrix:
        """Basis of {x ∈ Z^k : f(x) = 0 in the target}"""
        k = len(self.source_orders)
        widened = IntMatrix.hstack([self.matrix, relation_matrix(self.target_orders).scale(-1)])
        return image_basis(kernel_basis(widened).select(rows=range(k)))

    def is_surjective(self) -> bool:
        n = len(self.target_orders)
        image = image_basis(IntMatrix.hstack([self.matrix, relation_matrix(self.target_orders)]))
        return image == IntMatrix.identity(n)

    def is_injective(self) -> bool:
        relations = LatticeSolver(relation_matrix(self.source_orders))
        return all(relations.contains(column) for column in self.kernel_lattice().columns())

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()


def presentation_homology(orders: Sequence[int],
                          incoming: Optional[GroupHomomorphism],
                          outgoing: Optional[GroupHomomorphism]) -> AbelianGroup:
    """ker(outgoing) / im(incoming) on the group with the given generator orders"""
    k = len(orders)
    if outgoing is not None:
        if outgoing.source_orders != tuple(orders):
            raise AlgebraError("Outgoing map does not start at this group")
        cycles = outgoing.kernel_lattice()
    else:
        cycles = IntMatrix.identity(k)
    pieces = [relation_matrix(orders)]
    if incoming is not None:
        if incoming.target_orders != tuple(orders):
            raise AlgebraError("Incoming map does not end at this group")
        pieces.insert(0, incoming.matrix)
    boundaries = IntMatrix.hstack(pieces, rows=k)
    return subquotient_group(Subquotient(k, cycles, boundaries)).group
