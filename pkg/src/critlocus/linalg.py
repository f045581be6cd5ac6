"""Exact linear algebra over the rationals, plus polynomial matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomials import ArityError, MultiPoly

Vector = dict[int, Fraction]  # sparse, index -> nonzero coefficient
Matrix = list[list[Fraction]]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns; deterministic pivoting
    (first row with a nonzero entry in the current column)."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of the kernel of the matrix (rows act on column vectors)."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(v)
    return basis


def invert(matrix: Matrix) -> Matrix | None:
    """Exact inverse, or None if the matrix is singular."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in reduced[:n]]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return [
        [sum((ra[k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for ra in a
    ]


class EchelonAccumulator:
    """Incrementally reduced row space of sparse rational vectors.

    Supports streaming rank computation and reduction of vectors against
    the accumulated space.  Pivot rule: smallest index, kept fully reduced.
    """

    def __init__(self) -> None:
        self.rows: dict[int, Vector] = {}  # pivot index -> row with lead 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Vector) -> Vector:
        v = dict(vector)
        while v:
            lead = min(v)
            row = self.rows.get(lead)
            if row is None:
                return v
            coeff = v[lead]
            for idx, val in row.items():
                s = v.get(idx, Fraction(0)) - coeff * val
                if s == 0:
                    v.pop(idx, None)
                else:
                    v[idx] = s
        return v

    def insert(self, vector: Vector) -> bool:
        """Add a vector to the space; True if it increased the rank."""
        v = self.reduce(vector)
        if not v:
            return False
        lead = min(v)
        lv = v[lead]
        v = {i: c / lv for i, c in v.items()}
        for pivot, row in self.rows.items():
            coeff = row.get(lead)
            if coeff:
                for idx, val in v.items():
                    s = row.get(idx, Fraction(0)) - coeff * val
                    if s == 0:
                        row.pop(idx, None)
                    else:
                        row[idx] = s
        self.rows[lead] = v
        return True


class KernelTracker:
    """Echelon accumulator that reports kernel combinations.

    ``insert`` returns None when the column was independent, otherwise the
    combination of previously inserted columns (by insertion index, with
    coefficient 1 on the new column) that witnesses the dependency.
    """

    def __init__(self) -> None:
        self.acc = EchelonAccumulator()
        self.combos: dict[int, Vector] = {}  # pivot index -> combination
        self.count = 0

    def insert(self, vector: Vector) -> Vector | None:
        tag = self.count
        self.count += 1
        v = dict(vector)
        combo: Vector = {tag: Fraction(1)}
        while v:
            lead = min(v)
            row = self.acc.rows.get(lead)
            if row is None:
                break
            coeff = v[lead]
            for idx, val in row.items():
                s = v.get(idx, Fraction(0)) - coeff * val
                if s == 0:
                    v.pop(idx, None)
                else:
                    v[idx] = s
            for idx, val in self.combos[lead].items():
                s = combo.get(idx, Fraction(0)) - coeff * val
                if s == 0:
                    combo.pop(idx, None)
                else:
                    combo[idx] = s
        if not v:
            return combo
        lead = min(v)
        lv = v[lead]
        v = {i: c / lv for i, c in v.items()}
        combo = {i: c / lv for i, c in combo.items()}
        self.acc.rows[lead] = v
        self.combos[lead] = combo
        return None


@dataclass(frozen=True)
class PolyMatrix:
    """Rectangular grid of polynomials sharing one ambient ring."""

    entries: tuple[tuple[MultiPoly, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged polynomial matrix")
        arities = {p.arity for row in self.entries for p in row}
        if len(arities) > 1:
            raise ArityError("matrix entries do not share an arity")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def arity(self) -> int:
        for row in self.entries:
            for p in row:
                return p.arity
        return 0

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(tuple(zip(*self.entries)))

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def evaluate(self, point: Sequence) -> Matrix:
        return [[p.evaluate(point) for p in row] for row in self.entries]

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(fn(p) for p in row) for row in self.entries))

    def det(self) -> MultiPoly:
        """Determinant by cofactor expansion; fine for small matrices."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return MultiPoly.one(self.arity)

        def expand(rows: tuple[int, ...], cols: tuple[int, ...]) -> MultiPoly:
            if len(rows) == 1:
                return self.entries[rows[0]][cols[0]]
            total = MultiPoly.zero(self.arity)
            r = rows[0]
            rest = rows[1:]
            for pos, c in enumerate(cols):
                minor = expand(rest, cols[:pos] + cols[pos + 1 :])
                term = self.entries[r][c] * minor
                total = total + (term if pos % 2 == 0 else -term)
            return total

        return expand(tuple(range(n)), tuple(range(n)))
