"""Acceptance suite: one exact check per criterion, one PASS/FAIL line each.

Run under pytest (lines are printed even with capture on) or directly with
``python3 tests/test_acceptance.py``.
"""

import io
import sys
import time
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from functools import lru_cache

import pytest

from ladderforms import cli
from ladderforms import closed_form as cf
from ladderforms.graphs import FamilySpec, build_graph, contract_edge, incidence_matrix, laplacian_matrix
from ladderforms.linalg import (
    RationalMatrix,
    matrix_tree_count,
    path_sum_resistance,
    penrose_check,
    pinv_incidence,
    pinv_laplacian,
    resistance_matrix_from_lplus,
)
from ladderforms.sequences import IdentityId, SeqKind, binet_value, check_identity, seq_value
from ladderforms.verify import short_paths

F = Fraction
FAMILIES = ("ladder", "cl", "mobius")


def specs(max_n):
    for family in FAMILIES:
        lo = 1 if family == "ladder" else 3
        for n in range(lo, max_n + 1):
            yield FamilySpec(family, n)


@lru_cache(maxsize=None)
def oracle(spec):
    g = build_graph(spec)
    q = incidence_matrix(g)
    lp = pinv_laplacian(laplacian_matrix(g))
    return g, q, lp


def first_bad(items):
    """First failing label from ``(label, ok)`` pairs, or None."""
    return next((label for label, ok in items if not ok), None)


# -- criteria --------------------------------------------------------------


def criterion_1():
    start = time.perf_counter()
    bad = first_bad((f"{s.family.value}{s.n}",
                     bool(penrose_check(incidence_matrix(build_graph(s)), cf.qplus(s).matrix)))
                    for s in specs(24))
    elapsed = time.perf_counter() - start
    if bad:
        return False, f"Penrose fails for {bad}"
    return elapsed < 60, f"n<=24, {elapsed:.1f}s"


def criterion_2():
    def ok(s):
        _, q, lp = oracle(s)
        return cf.qplus(s).matrix == pinv_incidence(q, lp) and cf.lplus(s).matrix == lp

    bad = first_bad((f"{s.family.value}{s.n}", ok(s)) for s in specs(24))
    return bad is None, bad or "Q+ and L+ equal the oracle for n<=24"


def criterion_3():
    def ok(n):
        _, q, _ = oracle(FamilySpec("ladder", n))
        h = cf.ladder_qplus(n).matrix
        ident = RationalMatrix.identity(2 * n) - RationalMatrix.ones(2 * n).scale(F(1, 2 * n))
        return not any(h.row_sums()) and (q @ h).entries == ident.entries and (h @ q).is_symmetric()

    bad = first_bad((f"ladder{n}", ok(n)) for n in range(1, 25))
    return bad is None, bad or "H1=0, QH=I-J/2n, HQ symmetric for n<=24"


def criterion_4():
    anchors = {("ladder", 3): 15, ("cl", 3): 75, ("cl", 4): 384, ("mobius", 3): 81, ("mobius", 4): 392}
    for (family, n), expected in anchors.items():
        if cf.tree_count(FamilySpec(family, n)) != expected:
            return False, f"anchor {family}{n}"

    def ok(s):
        g = oracle(s)[0]
        if cf.tree_count(s) != matrix_tree_count(g):
            return False
        return all(cf.contracted_tree_count(s, i) == matrix_tree_count(contract_edge(g, f"f{i}"))
                   for i in range(1, s.n + 1))

    bad = first_bad((f"{s.family.value}{s.n}", ok(s)) for s in specs(24))
    return bad is None, bad or "totals and every spoke contraction match for n<=24"


def criterion_5():
    def ok(s):
        g, q, lp = oracle(s)
        r = cf.resistance(s).matrix
        if r != resistance_matrix_from_lplus(lp):
            return False
        total = cf.tree_count(s)
        for i in range(1, s.n + 1):
            spoke = g.edge(f"f{i}")
            if F(cf.contracted_tree_count(s, i), total) != r.at(spoke.tail.label, spoke.head.label):
                return False
        qp = cf.qplus(s).matrix
        for u, v, path in short_paths(g):
            labelled = [(e.id.label, e.tail.label, e.head.label) for e in path]
            if path_sum_resistance(qp, labelled, u.label, v.label) != r.at(u.label, v.label):
                return False
        return True

    bad = first_bad((f"{s.family.value}{s.n}", ok(s)) for s in specs(16))
    return bad is None, bad or "resistance, spoke ratios and path sums for n<=16"


def criterion_6():
    anchors = [(("ladder", 2), F(5)), (("cl", 3), F(47, 5)), (("mobius", 3), F(9))]
    for (family, n), expected in anchors:
        if cf.kirchhoff_index(FamilySpec(family, n)) != expected:
            return False, f"anchor {family}{n}"

    def ok(s):
        kf = cf.kirchhoff_index(s)
        return kf == cf.resistance(s).matrix.grand_sum() / 2 == 2 * s.n * oracle(s)[2].trace()

    bad = first_bad((f"{s.family.value}{s.n}", ok(s)) for s in specs(16))
    return bad is None, bad or "Kf = sum/2 = 2n tr(L+) for n<=16"


def criterion_7():
    if [seq_value(SeqKind.A, i) for i in range(6)] != [1, 1, 3, 11, 41, 153]:
        return False, "a prefix"
    if [seq_value(SeqKind.S, i) for i in range(6)] != [0, 1, 4, 15, 56, 209]:
        return False, "s prefix"
    for kind in SeqKind:
        for n in range(201):
            b = binet_value(kind, n)
            if not b.is_integral() or b.rational != seq_value(kind, n):
                return False, f"Binet {kind.name} n={n}"
    for identity in IdentityId:
        bad = first_bad(((n, k), check_identity(identity, n, k)) for n, k in cli.identity_cases(identity, None))
        if bad:
            return False, f"{identity.value} at {bad}"
    return True, "identities, factorisations, Binet n<=200, prefixes"


def criterion_8():
    def once():
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = cli.main(["verify", "--family", "all", "--n", "3..16"])
        return code, out.getvalue()

    (c1, r1), (c2, r2) = once(), once()
    if c1 != 0 or c2 != 0:
        return False, f"exit codes {c1}, {c2}"
    return r1 == r2 and bool(r1), f"{len(r1.encode())} bytes, identical"


CRITERIA = [
    (1, "Penrose certification", criterion_1),
    (2, "oracle equality", criterion_2),
    (3, "ladder lemmas", criterion_3),
    (4, "spanning-tree table", criterion_4),
    (5, "resistance consistency", criterion_5),
    (6, "Kirchhoff index", criterion_6),
    (7, "sequence suite", criterion_7),
    (8, "determinism", criterion_8),
]


def line(num, name, ok, detail):
    return f"criterion {num} {name}: {'PASS' if ok else 'FAIL'} ({detail})"


@pytest.mark.parametrize("num, name, fn", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, name, fn in CRITERIA:
        ok, detail = fn()
        print(line(num, name, ok, detail))
        results.append(ok)
    sys.exit(0 if all(results) else 1)
