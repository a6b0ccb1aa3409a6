"""
Exact integer matrices: Hermite and Smith normal forms, kernels, images and lattice membership
"""

import logging
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.config import config
from src.errors import AlgebraError

logger = logging.getLogger(__name__)


class IntMatrix:
    """Sparse integer matrix with arbitrary-precision entries"""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], int]] = None):
        if rows < 0 or cols < 0:
            raise ValueError(f"Matrix dimensions must be non-negative, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        clean: Dict[Tuple[int, int], int] = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"Entry ({i}, {j}) outside a {rows}x{cols} matrix")
            value = int(value)
            if value:
                clean[(i, j)] = value
        self._entries = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int = None, cols: int = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        return cls(rows, cols, {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"Row {i} has {len(row)} entries, expected {cols}")
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = value
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        entries = {}
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ValueError(f"Column {j} has {len(column)} entries, expected {rows}")
            for i, value in enumerate(column):
                if value:
                    entries[(i, j)] = value
        return cls(rows, len(columns), entries)

    @classmethod
    def from_dense(cls, array: np.ndarray) -> "IntMatrix":
        array = np.asarray(array, dtype=object)
        if array.ndim != 2:
            raise ValueError("Expected a two-dimensional array")
        rows, cols = array.shape
        entries = {(int(i), int(j)): int(array[i, j]) for i, j in zip(*np.nonzero(array))}
        return cls(rows, cols, entries)

    @staticmethod
    def hstack(matrices: Sequence["IntMatrix"], rows: int = None) -> "IntMatrix":
        if rows is None:
            if not matrices:
                raise ValueError("hstack of no matrices needs an explicit row count")
            rows = matrices[0].rows
        entries = {}
        offset = 0
        for matrix in matrices:
            if matrix.rows != rows:
                raise ValueError(f"hstack: {matrix.rows} rows, expected {rows}")
            for (i, j), value in matrix._entries.items():
                entries[(i, j + offset)] = value
            offset += matrix.cols
        return IntMatrix(rows, offset, entries)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        return self._entries.get(index, 0)

    def items(self) -> Iterator[Tuple[Tuple[int, int], int]]:
        return iter(sorted(self._entries.items()))

    def to_dense(self) -> np.ndarray:
        array = np.zeros((self.rows, self.cols), dtype=object)
        for (i, j), value in self._entries.items():
            array[i, j] = value
        return array

    def to_rows(self) -> List[List[int]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def column(self, j: int) -> List[int]:
        return [self[i, j] for i in range(self.rows)]

    def columns(self) -> List[List[int]]:
        dense = self.to_dense()
        return [[int(x) for x in dense[:, j]] for j in range(self.cols)]

    def column_entries(self) -> Dict[int, Dict[int, int]]:
        """Nonzero entries grouped by column"""
        grouped: Dict[int, Dict[int, int]] = {}
        for (i, j), value in self._entries.items():
            grouped.setdefault(j, {})[i] = value
        return grouped

    # -- arithmetic -------------------------------------------------------

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    def transpose(self) -> "IntMatrix":
        return self.T

    def __matmul__(self, other: Union["IntMatrix", Sequence[int]]):
        if not isinstance(other, IntMatrix):
            return self.apply(other)
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: Dict[int, List[Tuple[int, int]]] = {}
        for (k, j), value in other._entries.items():
            by_row.setdefault(k, []).append((j, value))
        product: Dict[Tuple[int, int], int] = {}
        for (i, k), a in self._entries.items():
            for j, b in by_row.get(k, ()):
                product[(i, j)] = product.get((i, j), 0) + a * b
        return IntMatrix(self.rows, other.cols, product)

    def apply(self, vector: Sequence[int]) -> List[int]:
        if len(vector) != self.cols:
            raise ValueError(f"Vector of length {len(vector)} does not fit {self.cols} columns")
        result = [0] * self.rows
        for (i, j), value in self._entries.items():
            if vector[j]:
                result[i] += value * vector[j]
        return result

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("Cannot add matrices of different shapes")
        entries = dict(self._entries)
        for key, value in other._entries.items():
            entries[key] = entries.get(key, 0) + value
        return IntMatrix(self.rows, self.cols, entries)

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def scale(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, {k: v * factor for k, v in self._entries.items()})

    def select(self, rows: Sequence[int] = None, cols: Sequence[int] = None) -> "IntMatrix":
        """Submatrix on the given row and column indices, in the given order"""
        row_map = {r: a for a, r in enumerate(rows)} if rows is not None else None
        col_map = {c: b for b, c in enumerate(cols)} if cols is not None else None
        entries = {}
        for (i, j), value in self._entries.items():
            a = row_map.get(i) if row_map is not None else i
            b = col_map.get(j) if col_map is not None else j
            if a is not None and b is not None:
                entries[(a, b)] = value
        return IntMatrix(len(rows) if rows is not None else self.rows,
                         len(cols) if cols is not None else self.cols, entries)

    def reduce_rows(self, moduli: Sequence[int]) -> "IntMatrix":
        """Reduce row i modulo moduli[i] (0 leaves the row alone)"""
        entries = {}
        for (i, j), value in self._entries.items():
            modulus = moduli[i]
            entries[(i, j)] = value % modulus if modulus else value
        return IntMatrix(self.rows, self.cols, entries)

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    __hash__ = None

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, {self.to_rows()})"


# -- dense kernels ------------------------------------------------------------

def _identity(n: int) -> np.ndarray:
    array = np.zeros((n, n), dtype=object)
    for i in range(n):
        array[i, i] = 1
    return array


def _swap_rows(array: np.ndarray, a: int, b: int):
    if a != b:
        array[[a, b]] = array[[b, a]]


def _swap_cols(array: np.ndarray, a: int, b: int):
    if a != b:
        array[:, [a, b]] = array[:, [b, a]]


def _hermite(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray, List[int]]:
    """Row-style Hermite form: returns (H, U, pivot columns) with U·A = H, U unimodular"""
    H = np.array(matrix, dtype=object, copy=True)
    m, n = H.shape
    U = _identity(m)
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            below = np.flatnonzero(H[r:, c]) + r
            if not len(below):
                break
            best = min(below, key=lambda i: abs(H[i, c]))
            _swap_rows(H, r, int(best))
            _swap_rows(U, r, int(best))
            pivot = H[r, c]
            clean = True
            for i in np.flatnonzero(H[r + 1:, c]) + r + 1:
                q = H[i, c] // pivot
                H[i] -= q * H[r]
                U[i] -= q * U[r]
                if H[i, c] != 0:
                    clean = False
            if clean:
                break
        if H[r, c] == 0:
            continue
        if H[r, c] < 0:
            H[r] = -H[r]
            U[r] = -U[r]
        pivot = H[r, c]
        for i in range(r):
            q = H[i, c] // pivot
            if q:
                H[i] -= q * H[r]
                U[i] -= q * U[r]
        pivots.append(c)
        r += 1
    return H, U, pivots


def _smith(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Smith form with minimal-absolute-value pivoting: returns (U, D, V) with U·A·V = D"""
    D = np.array(matrix, dtype=object, copy=True)
    m, n = D.shape
    U, V = _identity(m), _identity(n)
    for t in range(min(m, n)):
        nonzero = np.argwhere(D[t:, t:] != 0)
        if not len(nonzero):
            break
        i, j = min(((int(a) + t, int(b) + t) for a, b in nonzero), key=lambda ij: abs(D[ij]))
        _swap_rows(D, t, i)
        _swap_rows(U, t, i)
        _swap_cols(D, t, j)
        _swap_cols(V, t, j)

        while True:
            pivot = D[t, t]
            dirty = False
            for i in np.flatnonzero(D[t + 1:, t]) + t + 1:
                q = D[i, t] // pivot
                D[i] -= q * D[t]
                U[i] -= q * U[t]
                dirty = dirty or D[i, t] != 0
            for j in np.flatnonzero(D[t, t + 1:]) + t + 1:
                q = D[t, j] // pivot
                D[:, j] -= q * D[:, t]
                V[:, j] -= q * V[:, t]
                dirty = dirty or D[t, j] != 0
            if dirty:
                candidates = [(abs(D[i, t]), i, t) for i in range(t, m) if D[i, t] != 0]
                candidates += [(abs(D[t, j]), t, j) for j in range(t + 1, n) if D[t, j] != 0]
                _, i, j = min(candidates)
                _swap_rows(D, t, i)
                _swap_rows(U, t, i)
                _swap_cols(D, t, j)
                _swap_cols(V, t, j)
                continue
            rest = D[t + 1:, t + 1:]
            offenders = np.argwhere(rest % pivot != 0) if rest.size else []
            if not len(offenders):
                break
            row = int(offenders[0][0]) + t + 1
            D[t] += D[row]
            U[t] += U[row]

        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
    return U, D, V


# -- public normal forms --------------------------------------------------------

def hermite_normal_form(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """(H, U) with U·M = H in row echelon form, positive pivots, reduced entries above pivots"""
    H, U, _ = _hermite(M.to_dense())
    return IntMatrix.from_dense(H), IntMatrix.from_dense(U)


def smith_normal_form(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """(U, D, V) with U·M·V = D diagonal, d1 | d2 | ..., U and V unimodular"""
    A = M.to_dense()
    U, D, V = _smith(A)
    if config.CHECK_NORMAL_FORMS and M.rows and M.cols:
        if not np.array_equal(U.dot(A).dot(V), D):
            raise AlgebraError(f"Smith normal form check U·M·V = D failed on a {M.rows}x{M.cols} matrix")
    return IntMatrix.from_dense(U), IntMatrix.from_dense(D), IntMatrix.from_dense(V)


def invariant_factors(M: IntMatrix) -> List[int]:
    """Nonzero diagonal entries of the Smith form"""
    _, D, _ = _smith(M.to_dense())
    return [int(D[i, i]) for i in range(min(M.rows, M.cols)) if D[i, i] != 0]


def rank(M: IntMatrix) -> int:
    return len(_hermite(M.to_dense())[2])


def unimodular_inverse(U: IntMatrix) -> IntMatrix:
    if U.rows != U.cols:
        raise AlgebraError("Only square matrices can be unimodular")
    H, T, _ = _hermite(U.to_dense())
    if not np.array_equal(H, _identity(U.rows)):
        raise AlgebraError("Matrix is not unimodular")
    return IntMatrix.from_dense(T)


# -- lattices ---------------------------------------------------------------------

def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Columns form a basis of {x ∈ Z^cols : M·x = 0}, in Hermite-reduced form"""
    H, U, pivots = _hermite(M.to_dense().T)
    null = U[len(pivots):]
    if null.shape[0]:
        null, _, reduced_pivots = _hermite(null)
        null = null[:len(reduced_pivots)]
    return IntMatrix.from_dense(null.T) if null.shape[0] else IntMatrix.zeros(M.cols, 0)


def image_basis(M: IntMatrix) -> IntMatrix:
    """Columns form the Hermite basis of the lattice spanned by the columns of M"""
    H, _, pivots = _hermite(M.to_dense().T)
    if not pivots:
        return IntMatrix.zeros(M.rows, 0)
    return IntMatrix.from_dense(H[:len(pivots)].T)


def saturate(L: IntMatrix) -> IntMatrix:
    """Smallest saturated lattice containing the column span: (L ⊗ Q) ∩ Z^n"""
    if L.cols == 0:
        return IntMatrix.zeros(L.rows, 0)
    annihilator = kernel_basis(L.T)
    if annihilator.cols == 0:
        return IntMatrix.identity(L.rows)
    return kernel_basis(annihilator.T)


class LatticeSolver:
    """Solves L·x = v for many right-hand sides against fixed generators L"""

    def __init__(self, generators: IntMatrix):
        self.generators = generators
        self._H, self._U, self._pivots = _hermite(generators.to_dense().T)

    def solve(self, vector: Sequence[int]) -> Optional[List[int]]:
        if len(vector) != self.generators.rows:
            raise ValueError(f"Vector of length {len(vector)} does not live in Z^{self.generators.rows}")
        residual = np.array([int(x) for x in vector], dtype=object)
        y = np.zeros(len(self._pivots), dtype=object)
        for index, c in enumerate(self._pivots):
            pivot = self._H[index, c]
            if residual[c] % pivot:
                return None
            y[index] = residual[c] // pivot
            if y[index]:
                residual = residual - y[index] * self._H[index]
        if any(residual):
            return None
        if not len(self._pivots):
            return [0] * self.generators.cols
        x = self._U[:len(self._pivots)].T.dot(y)
        return [int(v) for v in x]

    def contains(self, vector: Sequence[int]) -> bool:
        return self.solve(vector) is not None


def lattice_member(L: IntMatrix, vector: Sequence[int]) -> Optional[List[int]]:
    """Integer coefficients x with L·x = vector, or None when vector is not in the lattice"""
    return LatticeSolver(L).solve(vector)


def lattice_contains(L: IntMatrix, M: IntMatrix) -> bool:
    """Whether every column of M lies in the column lattice of L"""
    solver = LatticeSolver(L)
    return all(solver.contains(column) for column in M.columns())
