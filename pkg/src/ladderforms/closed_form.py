"""Explicit formulas for ladder, circular ladder and Moebius ladder graphs.

Nothing in this module performs elimination: every entry is written down
directly from the two (4,1)-sequences ``a`` and ``s``. The functions in
:mod:`ladderforms.linalg` provide the independent check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Family, FamilySpec, build_graph
from .linalg import RationalMatrix
from .sequences import a, s

__all__ = [
    "ClosedFormResult",
    "LadderBlocks",
    "MatrixKind",
    "cl_qplus",
    "cl_resistance",
    "contracted_tree_count",
    "kirchhoff_index",
    "ladder_blocks",
    "ladder_qplus",
    "ladder_resistance",
    "lplus",
    "mobius_qplus",
    "mobius_resistance",
    "qplus",
    "resistance",
    "tree_count",
]


class MatrixKind(enum.Enum):
    QPLUS = "qplus"
    LPLUS = "lplus"
    RESISTANCE = "resistance"


@dataclass(frozen=True)
class ClosedFormResult:
    spec: FamilySpec
    kind: MatrixKind
    matrix: RationalMatrix


def _nonzero(value: int, what: str) -> int:
    if value == 0:
        raise ZeroDivisionError(f"{what} vanished")
    return value


def _labels(spec: FamilySpec) -> tuple[list[str], list[str]]:
    g = build_graph(spec)
    return g.vertex_labels, g.edge_labels


def _cl_ratio(n: int) -> Fraction:
    # equals the spoke resistance r(u_i^+, u_i^-) of CL_n
    return Fraction(a(n + 1) - a(n), _nonzero(a(n + 1) + a(n) - 2, "a_{n+1}+a_n-2"))


def _mobius_ratio(n: int) -> Fraction:
    # spoke resistance r(u_i, v_i) of M_n
    return Fraction(a(n + 1) - a(n), _nonzero(a(n + 1) + a(n) + 2, "a_{n+1}+a_n+2"))


# -- ladder --------------------------------------------------------------


@dataclass(frozen=True)
class LadderBlocks:
    """The three blocks of the ladder pseudoinverse ``H = [[B, -B], [C, D], [D, C]]``."""

    n: int
    B: RationalMatrix
    C: RationalMatrix
    D: RationalMatrix

    @property
    def scaled_B(self) -> RationalMatrix:
        """``2 s_n B``; integral, with constant row sums ``s_n``."""
        return self.B.scale(2 * s(self.n))


def ladder_blocks(n: int) -> LadderBlocks:
    if n < 1:
        raise ValueError(f"ladder needs n >= 1, got n={n}")
    two_s = 2 * _nonzero(s(n), "s_n")
    # The entry rule a_i a_{n-j+1} is the upper triangle; symmetry supplies the rest.
    b = [[Fraction(a(min(i, j)) * a(n - max(i, j) + 1), two_s) for j in range(1, n + 1)]
         for i in range(1, n + 1)]
    c, d = [], []
    for i in range(1, n):
        crow, drow = [], []
        for j in range(1, n + 1):
            if i <= j:
                mix = Fraction(a(n - j + 1) * s(i), two_s)
                crow.append(int(i == j) - Fraction(i, 2 * n) - mix)
                drow.append(-Fraction(i, 2 * n) + mix)
            else:
                mix = Fraction(a(j) * s(n - i), two_s)
                crow.append(Fraction(1, 2) - Fraction(i, 2 * n) + mix)
                drow.append(Fraction(1, 2) - Fraction(i, 2 * n) - mix)
        c.append(crow)
        d.append(drow)
    cols = list(range(1, n + 1))
    return LadderBlocks(
        n,
        RationalMatrix(b, cols, cols),
        RationalMatrix(c, list(range(1, n)), cols),
        RationalMatrix(d, list(range(1, n)), cols),
    )


def ladder_qplus(n: int) -> ClosedFormResult:
    blocks = ladder_blocks(n)
    B, C, D = blocks.B.entries, blocks.C.entries, blocks.D.entries
    rows = [list(r) + [-x for x in r] for r in B]
    rows += [list(cr) + list(dr) for cr, dr in zip(C, D)]
    rows += [list(dr) + list(cr) for cr, dr in zip(C, D)]
    spec = FamilySpec(Family.LADDER, n)
    vlabels, elabels = _labels(spec)
    return ClosedFormResult(spec, MatrixKind.QPLUS, RationalMatrix(rows, elabels, vlabels))


def ladder_resistance(n: int) -> ClosedFormResult:
    spec = FamilySpec(Family.LADDER, n)
    sn = s(n)

    def contracted(i: int) -> int:
        return a(i) * a(n - i + 1)

    def r(i: int, ei: int, j: int, ej: int) -> Fraction:
        if i > j:
            i, j = j, i
        if i == j and ei == ej:
            return Fraction(0)
        alpha = Fraction(contracted(i) + contracted(j), 4 * sn)
        return Fraction(j - i, 2) - ei * ej * Fraction(a(i) * a(n - j + 1), 2 * sn) + alpha

    verts = [(i, 1) for i in range(1, n + 1)] + [(i, -1) for i in range(1, n + 1)]
    rows = [[r(i, ei, j, ej) for j, ej in verts] for i, ei in verts]
    vlabels, _ = _labels(spec)
    return ClosedFormResult(spec, MatrixKind.RESISTANCE, RationalMatrix(rows, vlabels, vlabels))


# -- circular ladder -----------------------------------------------------


def _check_cyclic(n: int) -> None:
    if n < 3:
        raise ValueError(f"circular and Moebius ladders need n >= 3, got n={n}")


def cl_qplus(n: int) -> ClosedFormResult:
    """Pseudoinverse of the circular ladder incidence matrix.

    Column ``u_i^eps`` and row ``e_{i+t}^{eps'}`` (or ``f_{i+t}``) depend only
    on the cyclic offset ``t`` and the product ``eps * eps'``.
    """
    _check_cyclic(n)
    k = _cl_ratio(n)
    four_n = 4 * n

    def rail(t: int, ee: int) -> Fraction:
        return (-ee * Fraction(2 * a(t + 1) - a(t), 4) * k
                + ee * Fraction(a(t + 1) + ee, 4)
                - Fraction(2 * t + 1, four_n))

    def spoke(t: int) -> Fraction:
        return Fraction(a(t + 1) + a(t), 4) * k - Fraction(a(t + 1) - a(t), 4)

    rail_vals = {(t, ee): rail(t, ee) for t in range(n) for ee in (1, -1)}
    spoke_vals = [spoke(t) for t in range(n)]
    verts = [(i, 1) for i in range(1, n + 1)] + [(i, -1) for i in range(1, n + 1)]
    rows = []
    for side in (1, -1):
        for j in range(1, n + 1):
            rows.append([rail_vals[(j - i) % n, side * eps] for i, eps in verts])
    for j in range(1, n + 1):
        rows.append([eps * spoke_vals[(j - i) % n] for i, eps in verts])
    spec = FamilySpec(Family.CIRCULAR_LADDER, n)
    vlabels, elabels = _labels(spec)
    return ClosedFormResult(spec, MatrixKind.QPLUS, RationalMatrix(rows, elabels, vlabels))


def _cl_lplus_entry(n: int, t: int, ee: int) -> Fraction:
    k = _cl_ratio(n)
    return (ee * Fraction(a(t + 1) + a(t), 8) * k
            - ee * Fraction(a(t + 1) - a(t), 8)
            - Fraction(t, 4) + Fraction(t * t, 4 * n)
            + Fraction(n * n - 1, 24 * n))


def _cl_resistance_entry(n: int, t: int, ee: int) -> Fraction:
    k = _cl_ratio(n)
    return (-ee * Fraction(a(t + 1) + a(t) - 2 * ee, 4) * k
            + ee * Fraction(a(t + 1) - a(t), 4)
            + Fraction(t, 2) - Fraction(t * t, 2 * n))


def _cl_matrix(n: int, entry) -> list[list[Fraction]]:
    verts = [(i, 1) for i in range(1, n + 1)] + [(i, -1) for i in range(1, n + 1)]
    table = {(t, ee): entry(n, t, ee) for t in range(n) for ee in (1, -1)}
    return [[table[(j - i) % n, ei * ej] for j, ej in verts] for i, ei in verts]


def cl_resistance(n: int) -> ClosedFormResult:
    _check_cyclic(n)
    spec = FamilySpec(Family.CIRCULAR_LADDER, n)
    vlabels, _ = _labels(spec)
    m = RationalMatrix(_cl_matrix(n, _cl_resistance_entry), vlabels, vlabels)
    return ClosedFormResult(spec, MatrixKind.RESISTANCE, m)


# -- Moebius ladder ------------------------------------------------------


def _cycle_sign(j: int, n: int) -> int:
    """+1 on the first half of the 2n-cycle, -1 on the second (1-based ``j``)."""
    return -1 if ((j - 1) % (2 * n)) // n else 1


def mobius_qplus(n: int) -> ClosedFormResult:
    """Pseudoinverse of the Moebius ladder incidence matrix.

    Rows are ``e_1 .. e_2n, f_1 .. f_n``; columns ``u_1 .. u_2n``. Spoke
    ``f_j`` is oriented ``u_j -> u_{j+n}``, so seen from the second half of
    the cycle it points backwards, hence the sign flip.
    """
    _check_cyclic(n)
    k = _mobius_ratio(n)
    four_n = 4 * n
    near = [-Fraction(2 * a(t + 1) - a(t), 4) * k + Fraction(a(t + 1) + 1, 4) - Fraction(2 * t + 1, four_n)
            for t in range(n)]
    far = [Fraction(2 * a(t + 1) - a(t), 4) * k - Fraction(a(t + 1) - 1, 4) - Fraction(2 * t + 1, four_n)
           for t in range(n)]
    spoke = [Fraction(a(t + 1) + a(t), 4) * k - Fraction(a(t + 1) - a(t), 4) for t in range(n)]

    m = 2 * n
    rows = [[Fraction(0)] * m for _ in range(3 * n)]
    for i in range(1, m + 1):
        col = i - 1
        for t in range(n):
            rows[(i + t - 1) % m][col] = near[t]
            rows[(i + n + t - 1) % m][col] = far[t]
            j = i + t
            rows[m + (j - 1) % n][col] = _cycle_sign(j, n) * spoke[t]
    spec = FamilySpec(Family.MOBIUS, n)
    vlabels, elabels = _labels(spec)
    return ClosedFormResult(spec, MatrixKind.QPLUS, RationalMatrix(rows, elabels, vlabels))


def _mobius_gap(i: int, j: int, n: int) -> int:
    t = (j - i) % (2 * n)
    return min(t, 2 * n - t)


def _mobius_lplus_entry(n: int, t: int) -> Fraction:
    k = _mobius_ratio(n)
    return (Fraction(a(t + 1) + a(t), 8) * k - Fraction(a(t + 1) - a(t), 8)
            - Fraction(t, 4) + Fraction(t * t, 4 * n) + Fraction(n * n - 1, 24 * n))


def _mobius_resistance_entry(n: int, t: int) -> Fraction:
    k = _mobius_ratio(n)
    return (-Fraction(a(t + 1) + a(t) - 2, 4) * k + Fraction(a(t + 1) - a(t), 4)
            + Fraction(t, 2) - Fraction(t * t, 2 * n))


def _mobius_matrix(n: int, entry) -> list[list[Fraction]]:
    table = [entry(n, t) for t in range(n + 1)]
    m = 2 * n
    return [[table[_mobius_gap(i, j, n)] for j in range(m)] for i in range(m)]


def mobius_resistance(n: int) -> ClosedFormResult:
    _check_cyclic(n)
    spec = FamilySpec(Family.MOBIUS, n)
    vlabels, _ = _labels(spec)
    m = RationalMatrix(_mobius_matrix(n, _mobius_resistance_entry), vlabels, vlabels)
    return ClosedFormResult(spec, MatrixKind.RESISTANCE, m)


# -- dispatch ------------------------------------------------------------


def qplus(spec: FamilySpec) -> ClosedFormResult:
    return {
        Family.LADDER: ladder_qplus,
        Family.CIRCULAR_LADDER: cl_qplus,
        Family.MOBIUS: mobius_qplus,
    }[spec.family](spec.n)


def resistance(spec: FamilySpec) -> ClosedFormResult:
    return {
        Family.LADDER: ladder_resistance,
        Family.CIRCULAR_LADDER: cl_resistance,
        Family.MOBIUS: mobius_resistance,
    }[spec.family](spec.n)


def lplus(spec: FamilySpec) -> ClosedFormResult:
    """Pseudoinverse of the Laplacian.

    The ladder has no entrywise formula; there ``L^+ = H^T H`` with ``H`` the
    closed-form incidence pseudoinverse, which holds because ``L = Q Q^T``.
    """
    n = spec.n
    vlabels, _ = _labels(spec)
    if spec.family is Family.LADDER:
        h = ladder_qplus(n).matrix
        m = h.T @ h
    elif spec.family is Family.CIRCULAR_LADDER:
        m = RationalMatrix(_cl_matrix(n, _cl_lplus_entry), vlabels, vlabels)
    else:
        m = RationalMatrix(_mobius_matrix(n, _mobius_lplus_entry), vlabels, vlabels)
    return ClosedFormResult(spec, MatrixKind.LPLUS, m)


def kirchhoff_index(spec: FamilySpec) -> Fraction:
    n = spec.n
    if spec.family is Family.LADDER:
        return Fraction(n * n, 3) * (n + 1 + Fraction(a(n), s(n)))
    ratio = _cl_ratio(n) if spec.family is Family.CIRCULAR_LADDER else _mobius_ratio(n)
    return n * n * ratio + Fraction(n * (n * n - 1), 6)


def tree_count(spec: FamilySpec) -> int:
    n = spec.n
    if spec.family is Family.LADDER:
        return s(n)
    shift = -2 if spec.family is Family.CIRCULAR_LADDER else 2
    twice = n * (a(n + 1) + a(n) + shift)
    assert twice % 2 == 0
    return twice // 2


def contracted_tree_count(spec: FamilySpec, spoke_index: int) -> int:
    """Spanning trees of the graph with spoke ``f_i`` contracted."""
    n = spec.n
    if not 1 <= spoke_index <= n:
        raise ValueError(f"spoke index must lie in [1, {n}], got {spoke_index}")
    if spec.family is Family.LADDER:
        return a(spoke_index) * a(n - spoke_index + 1)
    return n * s(n)
