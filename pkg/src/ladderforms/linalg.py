"""Exact rational linear algebra used as the independent oracle.

Everything here works over :class:`fractions.Fraction`; no floating point is
ever touched. Matrices carry row and column labels so results can be compared
and exported without losing track of which vertex or edge an entry belongs to.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

__all__ = [
    "ConformabilityError",
    "ConnectivityError",
    "PathOrientationError",
    "PenroseReport",
    "RationalMatrix",
    "SingularMatrixError",
    "bareiss_determinant",
    "cofactor_determinant",
    "gauss_jordan_inverse",
    "matrix_tree_count",
    "path_sum_resistance",
    "penrose_check",
    "pinv_incidence",
    "pinv_laplacian",
    "resistance_from_lplus",
    "resistance_matrix_from_lplus",
]


class ConformabilityError(ValueError):
    """Raised when matrix shapes do not fit the requested operation."""


class SingularMatrixError(ArithmeticError):
    def __init__(self, column: int):
        super().__init__(f"matrix is singular: no pivot in column {column}")
        self.column = column


class ConnectivityError(ValueError):
    """Raised when a Laplacian belongs to a disconnected graph."""


class PathOrientationError(ValueError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RationalMatrix:
    """Dense row-major matrix of ``Fraction`` entries with row/column labels.

    Instances are treated as immutable: every operation returns a new matrix.
    """

    __slots__ = ("entries", "row_labels", "col_labels")

    def __init__(self, entries, row_labels=None, col_labels=None):
        rows = [tuple(_frac(x) for x in row) for row in entries]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ConformabilityError("ragged rows")
        if not rows and col_labels is not None:
            ncols = len(col_labels)
        self.entries: tuple[tuple[Fraction, ...], ...] = tuple(rows)
        self.row_labels = tuple(row_labels) if row_labels is not None else tuple(range(len(rows)))
        self.col_labels = tuple(col_labels) if col_labels is not None else tuple(range(ncols))
        if len(self.row_labels) != len(rows) or (rows and len(self.col_labels) != ncols):
            raise ConformabilityError("label lists do not match the matrix shape")

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int, labels: Sequence | None = None) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], labels, labels)

    @classmethod
    def ones(cls, rows: int, cols: int | None = None, row_labels=None, col_labels=None) -> "RationalMatrix":
        """The all-ones matrix ``J`` (a column vector ``1`` when ``cols == 1``)."""
        cols = rows if cols is None else cols
        return cls([[Fraction(1)] * cols for _ in range(rows)], row_labels, col_labels)

    @classmethod
    def zeros(cls, rows: int, cols: int, row_labels=None, col_labels=None) -> "RationalMatrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], row_labels, col_labels)

    # -- basic protocol ---------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @property
    def nrows(self) -> int:
        return len(self.row_labels)

    @property
    def ncols(self) -> int:
        return len(self.col_labels)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def at(self, row_label, col_label) -> Fraction:
        """Entry addressed by labels rather than positions."""
        try:
            i = self.row_labels.index(row_label)
            j = self.col_labels.index(col_label)
        except ValueError:
            raise KeyError((row_label, col_label)) from None
        return self.entries[i][j]

    def row_index(self, label) -> int:
        try:
            return self.row_labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def col_index(self, label) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols})"

    def relabel(self, row_labels=None, col_labels=None) -> "RationalMatrix":
        return RationalMatrix(
            self.entries,
            self.row_labels if row_labels is None else row_labels,
            self.col_labels if col_labels is None else col_labels,
        )

    # -- arithmetic -------------------------------------------------------

    @property
    def T(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.entries)) if self.entries else [],
                              self.col_labels, self.row_labels)

    def _check_same_shape(self, other: "RationalMatrix") -> None:
        if self.shape != other.shape:
            raise ConformabilityError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.row_labels, self.col_labels,
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.row_labels, self.col_labels,
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in r] for r in self.entries], self.row_labels, self.col_labels)

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix([[c * a for a in r] for r in self.entries], self.row_labels, self.col_labels)

    def _integer_form(self) -> tuple[list[list[int]], int]:
        den = 1
        for r in self.entries:
            for x in r:
                den = lcm(den, x.denominator)
        return [[x.numerator * (den // x.denominator) for x in r] for r in self.entries], den

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ConformabilityError(f"cannot multiply {self.shape} by {other.shape}")
        # Scale both operands to integers, multiply exactly, divide once at the end.
        a, da = self._integer_form()
        b, db = other._integer_form()
        den = da * db
        b_sparse = [[(j, v) for j, v in enumerate(row) if v] for row in b]
        ncols = other.ncols
        out = []
        for arow in a:
            acc = [0] * ncols
            for k, x in enumerate(arow):
                if x:
                    for j, v in b_sparse[k]:
                        acc[j] += x * v
            out.append([Fraction(v, den) for v in acc])
        return RationalMatrix(out, self.row_labels, other.col_labels)

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.nrows) for j in range(i))

    def row_sums(self) -> list[Fraction]:
        return [sum(r, Fraction(0)) for r in self.entries]

    def col_sums(self) -> list[Fraction]:
        return [sum(c, Fraction(0)) for c in zip(*self.entries)] if self.entries else [Fraction(0)] * self.ncols

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(min(self.shape))), Fraction(0))

    def grand_sum(self) -> Fraction:
        return sum(self.row_sums(), Fraction(0))

    def delete(self, row: int, col: int) -> "RationalMatrix":
        """Minor with one row and one column removed (by position)."""
        return RationalMatrix(
            [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(self.entries) if i != row],
            [lab for i, lab in enumerate(self.row_labels) if i != row],
            [lab for j, lab in enumerate(self.col_labels) if j != col],
        )

    def first_difference(self, other: "RationalMatrix"):
        """``(row_label, col_label, self_value, other_value)`` of the first mismatch, or None."""
        self._check_same_shape(other)
        for i, (r, s) in enumerate(zip(self.entries, other.entries)):
            for j, (x, y) in enumerate(zip(r, s)):
                if x != y:
                    return self.row_labels[i], self.col_labels[j], x, y
        return None


# -- elimination ---------------------------------------------------------


def gauss_jordan_inverse(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan elimination.

    The pivot is the first nonzero entry at or below the diagonal; exact
    arithmetic needs no magnitude-based pivoting. Raises
    :class:`SingularMatrixError` naming the column without a pivot.
    """
    n, cols = m.shape
    if n != cols:
        raise ConformabilityError(f"inverse of non-square {m.shape} matrix")
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.entries)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise SingularMatrixError(c)
        if p != c:
            a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        row = [x / piv for x in a[c]]
        a[c] = row
        for r in range(n):
            if r != c:
                f = a[r][c]
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], row)]
    return RationalMatrix([r[n:] for r in a], m.col_labels, m.row_labels)


def bareiss_determinant(m: RationalMatrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Rational input is first cleared to integers by the common denominator,
    so every intermediate value is an integer and each division is exact.
    """
    n, cols = m.shape
    if n != cols:
        raise ConformabilityError(f"determinant of non-square {m.shape} matrix")
    if n == 0:
        return Fraction(1)
    a, den = m._integer_form()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                q, rem = divmod(akk * ri[j] - aik * rk[j], prev)
                assert rem == 0
                ri[j] = q
            ri[k] = 0
        prev = akk
    return Fraction(sign * a[n - 1][n - 1], den ** n)


def cofactor_determinant(m: RationalMatrix) -> Fraction:
    """Laplace expansion along the first row. Brute force; small matrices only."""
    e = m.tolist()

    def det(rows: list[list[Fraction]]) -> Fraction:
        if not rows:
            return Fraction(1)
        total = Fraction(0)
        for j, x in enumerate(rows[0]):
            if x:
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                total += (-1) ** j * x * det(minor)
        return total

    return det(e)


# -- pseudoinverses ------------------------------------------------------


def pinv_laplacian(lap: RationalMatrix) -> RationalMatrix:
    """Moore-Penrose inverse of a connected graph's Laplacian: ``(L + J/N)^-1 - J/N``."""
    n, cols = lap.shape
    if n != cols:
        raise ConformabilityError("Laplacian must be square")
    if not lap.is_symmetric() or any(lap.row_sums()):
        raise ValueError("input is not a Laplacian (asymmetric or nonzero row sums)")
    j_over_n = RationalMatrix.ones(n).scale(Fraction(1, n)).relabel(lap.row_labels, lap.col_labels)
    try:
        inv = gauss_jordan_inverse(lap + j_over_n)
    except SingularMatrixError as exc:
        raise ConnectivityError("Laplacian has rank below N-1; graph is disconnected") from exc
    return inv - j_over_n.relabel(inv.row_labels, inv.col_labels)


def pinv_incidence(q: RationalMatrix, lplus: RationalMatrix) -> RationalMatrix:
    """``Q^+ = Q^T L^+`` given ``L^+`` of ``L = Q Q^T``."""
    if q.nrows != lplus.nrows or lplus.nrows != lplus.ncols:
        raise ConformabilityError(f"incidence {q.shape} does not fit L+ {lplus.shape}")
    return q.T @ lplus


@dataclass(frozen=True)
class PenroseReport:
    axa: bool
    xax: bool
    ax_symmetric: bool
    xa_symmetric: bool

    def __bool__(self) -> bool:
        return self.axa and self.xax and self.ax_symmetric and self.xa_symmetric

    def failed(self) -> list[str]:
        names = ("AXA=A", "XAX=X", "(AX)'=AX", "(XA)'=XA")
        flags = (self.axa, self.xax, self.ax_symmetric, self.xa_symmetric)
        return [name for name, ok in zip(names, flags) if not ok]


def penrose_check(a: RationalMatrix, x: RationalMatrix) -> PenroseReport:
    """Evaluate the four Moore-Penrose conditions for ``x`` as the inverse of ``a``."""
    if x.shape != (a.ncols, a.nrows):
        raise ConformabilityError(f"X must be {a.ncols}x{a.nrows}, got {x.shape}")
    ax = a @ x
    xa = x @ a
    return PenroseReport(
        axa=(ax @ a).entries == a.entries,
        xax=(x @ ax).entries == x.entries,
        ax_symmetric=ax.is_symmetric(),
        xa_symmetric=xa.is_symmetric(),
    )


# -- graph quantities ----------------------------------------------------


def matrix_tree_count(g, deleted: int = -1) -> int:
    """Number of spanning trees of ``g`` via Kirchhoff's Matrix-Tree theorem.

    ``g`` is anything with ``vertices`` and ``edges`` (``(id, tail, head)``
    triples). The Laplacian is assembled straight from the edge list, so
    parallel edges count with multiplicity and loops are ignored. The cofactor
    of vertex position ``deleted`` (default: the last vertex) is returned.
    """
    vertices = list(g.vertices)
    if not vertices:
        raise ValueError("matrix_tree_count needs at least one vertex")
    n = len(vertices)
    pos = {v: i for i, v in enumerate(vertices)}
    lap = [[0] * n for _ in range(n)]
    for _, tail, head in g.edges:
        i, j = pos[tail], pos[head]
        if i == j:
            continue
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    k = deleted % n
    reduced = RationalMatrix([[x for c, x in enumerate(r) if c != k] for i, r in enumerate(lap) if i != k]) \
        if n > 1 else RationalMatrix([])
    det = bareiss_determinant(reduced)
    assert det.denominator == 1
    return int(det)


def resistance_from_lplus(lplus: RationalMatrix, u, v) -> Fraction:
    """``L+_uu + L+_vv - L+_uv - L+_vu`` looked up by vertex label."""
    return lplus.at(u, u) + lplus.at(v, v) - lplus.at(u, v) - lplus.at(v, u)


def resistance_matrix_from_lplus(lplus: RationalMatrix) -> RationalMatrix:
    e = lplus.entries
    n = lplus.nrows
    return RationalMatrix(
        [[e[i][i] + e[j][j] - e[i][j] - e[j][i] for j in range(n)] for i in range(n)],
        lplus.row_labels, lplus.col_labels,
    )


def path_sum_resistance(qplus: RationalMatrix, path: Iterable, u, v) -> Fraction:
    """Resistance between ``u`` and ``v`` as a sum of ``Q^+`` entries along a path.

    ``path`` is a sequence of ``(edge_id, tail, head)`` triples forming a
    walk from ``u`` to ``v`` with every edge pointing forward; anything else
    raises :class:`PathOrientationError`.
    """
    at = u
    total = Fraction(0)
    for edge, tail, head in path:
        if tail != at:
            raise PathOrientationError(f"edge {edge} starts at {tail}, expected {at}")
        total += qplus.at(edge, u) - qplus.at(edge, v)
        at = head
    if at != v:
        raise PathOrientationError(f"path ends at {at}, expected {v}")
    return total
