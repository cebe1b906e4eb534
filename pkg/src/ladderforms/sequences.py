"""The two (4,1)-recurrences behind every ladder formula.

``a_n`` runs 1, 1, 3, 11, 41, 153, ... and ``s_n`` runs 0, 1, 4, 15, 56,
209, ...; both satisfy ``x_n = 4 x_{n-1} - x_{n-2}``. ``s_n`` is also the
number of spanning trees of the ladder on ``2n`` vertices.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "IdentityId",
    "QuadExt",
    "SeqKind",
    "a",
    "binet_value",
    "check_identity",
    "s",
    "seq_value",
]


class SeqKind(enum.Enum):
    A = "a"
    S = "s"


_INITIAL = {SeqKind.A: (1, 1), SeqKind.S: (0, 1)}


_TERMS: dict[SeqKind, list[int]] = {kind: list(init) for kind, init in _INITIAL.items()}
_GROW_LOCK = threading.Lock()


def seq_value(kind: SeqKind, n: int) -> int:
    if n < 0:
        raise ValueError(f"sequence index must be non-negative, got {n}")
    terms = _TERMS[kind]
    if len(terms) <= n:
        with _GROW_LOCK:
            while len(terms) <= n:
                terms.append(4 * terms[-1] - terms[-2])
    return terms[n]


def a(n: int) -> int:
    return seq_value(SeqKind.A, n)


def s(n: int) -> int:
    return seq_value(SeqKind.S, n)


@dataclass(frozen=True)
class QuadExt:
    """``rational + root3 * sqrt(3)`` with exact rational parts."""

    rational: Fraction = Fraction(0)
    root3: Fraction = Fraction(0)

    def __post_init__(self):
        # Fraction is always reduced with a positive denominator, so equality is structural
        object.__setattr__(self, "rational", Fraction(self.rational))
        object.__setattr__(self, "root3", Fraction(self.root3))

    def __add__(self, other: "QuadExt") -> "QuadExt":
        other = _lift(other)
        return QuadExt(self.rational + other.rational, self.root3 + other.root3)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.rational, -self.root3)

    def __sub__(self, other: "QuadExt") -> "QuadExt":
        return self + (-_lift(other))

    def __mul__(self, other: "QuadExt") -> "QuadExt":
        other = _lift(other)
        p, q = self.rational, self.root3
        r, t = other.rational, other.root3
        return QuadExt(p * r + 3 * q * t, p * t + q * r)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.rational, -self.root3)

    def norm(self) -> Fraction:
        return self.rational ** 2 - 3 * self.root3 ** 2

    def inverse(self) -> "QuadExt":
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("zero has no inverse in Q(sqrt 3)")
        c = self.conjugate()
        return QuadExt(c.rational / nm, c.root3 / nm)

    def __pow__(self, k: int) -> "QuadExt":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = QuadExt(Fraction(1))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_integral(self) -> bool:
        return self.root3 == 0 and self.rational.denominator == 1

    def __str__(self) -> str:
        return f"{self.rational} + {self.root3}*sqrt(3)"


def _lift(x) -> QuadExt:
    return x if isinstance(x, QuadExt) else QuadExt(Fraction(x))


LAMBDA = QuadExt(Fraction(2), Fraction(1))
_BINET = {
    SeqKind.A: (QuadExt(Fraction(1, 2), Fraction(-1, 6)), QuadExt(Fraction(1, 2), Fraction(1, 6))),
    SeqKind.S: (QuadExt(Fraction(0), Fraction(1, 6)), QuadExt(Fraction(0), Fraction(-1, 6))),
}


def binet_value(kind: SeqKind, n: int) -> QuadExt:
    """``alpha * lambda**n + beta * lambda**-n`` in Q(sqrt 3), with lambda = 2 + sqrt 3."""
    if n < 0:
        raise ValueError(f"sequence index must be non-negative, got {n}")
    alpha, beta = _BINET[kind]
    return alpha * LAMBDA ** n + beta * LAMBDA ** (-n)


class IdentityId(enum.Enum):
    SUM = "sum"                   # s_n = a_1 + ... + a_n
    DOUBLE_S = "double_s"         # 2 s_n = a_{n+1} - a_n
    CONVOLUTION = "convolution"   # a_{n+1} - a_n = a_{k+1} a_{n-k+1} - a_k a_{n-k}
    SPLIT = "split"               # s_n = a_k s_{n-k} + a_{n-k+1} s_k
    SQUARE = "square"             # (a_{n+1} + a_n)^2 = 3 (a_{n+1} - a_n)^2 + 4
    WEIGHTED_SUM = "weighted_sum"  # sum_{i+j=n+1} a_i a_j, two closed forms
    FACTOR_ODD = "factor_odd"     # n = 2k+1
    FACTOR_EVEN = "factor_even"   # n = 2k, k >= 1

    @property
    def needs_k(self) -> bool:
        return self in (IdentityId.CONVOLUTION, IdentityId.SPLIT,
                        IdentityId.FACTOR_ODD, IdentityId.FACTOR_EVEN)


def check_identity(identity: IdentityId, n: int, k: int | None = None) -> bool:
    """Evaluate both sides of ``identity`` exactly and report whether they agree.

    For the factorisation identities ``k`` may be omitted; it is then derived
    from ``n``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if identity is IdentityId.FACTOR_ODD:
        if n % 2 != 1:
            raise ValueError(f"factor_odd needs odd n = 2k+1, got n={n}")
        k = (n - 1) // 2 if k is None else k
        if n != 2 * k + 1:
            raise ValueError(f"factor_odd needs n = 2k+1, got n={n}, k={k}")
    elif identity is IdentityId.FACTOR_EVEN:
        if n % 2 != 0 or n < 2:
            raise ValueError(f"factor_even needs even n = 2k with k >= 1, got n={n}")
        k = n // 2 if k is None else k
        if n != 2 * k:
            raise ValueError(f"factor_even needs n = 2k, got n={n}, k={k}")
    elif identity.needs_k:
        if k is None:
            raise ValueError(f"{identity.value} needs k")
        if k < 0:
            raise ValueError(f"k must be >= 0, got {k}")
        if k > n:
            raise ValueError(f"k must be <= n, got k={k} > n={n}")

    if identity is IdentityId.SUM:
        return s(n) == sum(a(i) for i in range(1, n + 1))
    if identity is IdentityId.DOUBLE_S:
        return 2 * s(n) == a(n + 1) - a(n)
    if identity is IdentityId.CONVOLUTION:
        return a(n + 1) - a(n) == a(k + 1) * a(n - k + 1) - a(k) * a(n - k)
    if identity is IdentityId.SPLIT:
        return s(n) == a(k) * s(n - k) + a(n - k + 1) * s(k)
    if identity is IdentityId.SQUARE:
        return (a(n + 1) + a(n)) ** 2 == 3 * (a(n + 1) - a(n)) ** 2 + 4
    if identity is IdentityId.WEIGHTED_SUM:
        conv = sum(a(i) * a(n + 1 - i) for i in range(1, n + 1))
        first = Fraction(n * (a(n + 1) + a(n)) + (a(n + 1) - a(n)), 6)
        second = Fraction((n + 1) * s(n) + n * a(n), 3)
        return conv == first == second
    lhs = Fraction(a(n + 1) + a(n) - 2, a(n + 1) - a(n))
    if identity is IdentityId.FACTOR_ODD:
        return lhs == Fraction(s(k + 1) + s(k), s(k + 1) - s(k))
    return lhs == Fraction(s(k + 1) + 2 * s(k) + s(k - 1), s(k + 1) - s(k - 1))
