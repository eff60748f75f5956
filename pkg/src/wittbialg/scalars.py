"""Exact scalars, lattice points, torus vectors and the pairing between them.

Scalars are ``gmpy2.mpq`` rationals (always in lowest terms, denominator
positive); ints, :class:`fractions.Fraction` and ``p/q`` literals coerce.
A lattice point ``x = x_1 e_1 + ... + x_n e_n`` and a torus vector
``d = a_1 d_1 + ... + a_n d_n`` are both plain tuples of scalars, stored in
dual bases so that the pairing is the dot product.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from gmpy2 import mpq as Q

Scalar = type(Q())
LatticePoint = Tuple[Scalar, ...]
TorusVector = Tuple[Scalar, ...]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?\Z")


class DimensionError(ValueError):
    """Two objects of different rank were combined."""


def scalar(value) -> Scalar:
    """Coerce an int, Fraction, mpq or rational literal to an exact scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, (int, Fraction)):
        return Q(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def parse_rational(text: str) -> Scalar:
    """Parse an ASCII literal ``p`` or ``p/q``."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Q(int(num), int(den) if den else 1)


def format_rational(q) -> str:
    return str(q)


def vec(values: Iterable) -> tuple[Scalar, ...]:
    return tuple(scalar(v) for v in values)


def zero_vec(n: int) -> tuple[Scalar, ...]:
    return (Q(0),) * n


def unit_vec(n: int, i: int) -> tuple[Scalar, ...]:
    """The i-th basis vector (0-based)."""
    return tuple(Q(int(k == i)) for k in range(n))


def is_zero(v: Sequence[Scalar]) -> bool:
    return not any(v)


def _check_same(u: Sequence, w: Sequence) -> None:
    if len(u) != len(w):
        raise DimensionError(f"rank mismatch: {len(u)} != {len(w)}")


def add(u: Sequence[Scalar], w: Sequence[Scalar]) -> tuple[Scalar, ...]:
    _check_same(u, w)
    return tuple(a + b for a, b in zip(u, w))


def neg(u: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(-a for a in u)


def sub(u: Sequence[Scalar], w: Sequence[Scalar]) -> tuple[Scalar, ...]:
    _check_same(u, w)
    return tuple(a - b for a, b in zip(u, w))


def smul(c, u: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(c * a for a in u)


def pair(d: Sequence[Scalar], x: Sequence[Scalar]) -> Scalar:
    """``<d, x> = sum_i a_i x_i`` for ``d = sum a_i d_i``."""
    _check_same(d, x)
    return sum((a * b for a, b in zip(d, x)), Q(0))


def compare(x: Sequence[Scalar], y: Sequence[Scalar]) -> int:
    """Lexicographic total order; returns -1, 0 or 1.

    Compatible with addition: ``compare(x, y) == compare(x + z, y + z)``.
    """
    _check_same(x, y)
    for a, b in zip(x, y):
        if a != b:
            return -1 if a < b else 1
    return 0


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    m = [list(map(scalar, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        for i in range(r + 1, len(m)):
            f = m[i][col] / p
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def check_spanning(points: Sequence[Sequence[Scalar]]) -> bool:
    """True iff the points span the whole coordinate space over Q."""
    if not points:
        raise ValueError("need at least one point")
    n = len(points[0])
    for p in points:
        if len(p) != n:
            raise DimensionError(f"rank mismatch: {len(p)} != {n}")
    return rank(points) == n


@dataclass(frozen=True)
class AlgebraConfig:
    """Rank of the algebra plus the knobs used by sampling and witness search.

    ``sample_window`` bounds numerators of generated coordinates (denominators
    are 1 or 2); ``cap`` is the escalation cap for witness search.
    """

    n: int
    sample_window: int = 3
    seed: int = 0
    cap: int = 8

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank n must be >= 1")
        if self.sample_window < 1:
            raise ValueError("sample_window must be >= 1")
        if self.cap < 1:
            raise ValueError("cap must be >= 1")
