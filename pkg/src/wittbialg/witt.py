"""The generalized Witt algebra W = F[A] (x) T.

An element is a finite map ``x -> d`` meaning ``sum t^x d``.  The bracket is

    [t^x d, t^y d'] = t^(x+y) (d(y) d' - d'(x) d)

extended bilinearly.
"""
from __future__ import annotations

from typing import Iterator, Mapping

from . import scalars as sc
from .scalars import DimensionError, LatticePoint, Q, TorusVector

# a basis monomial t^x d_i, with i 0-based
Monomial = tuple  # (LatticePoint, int)


class WittElement:
    """Immutable element of W in canonical sparse form.

    Terms are kept sorted by degree (lexicographic), zero torus vectors are
    dropped, so ``==`` is structural equality.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        acc: dict = {}
        for x, d in (terms or {}).items():
            x = sc.vec(x)
            d = sc.vec(d)
            if len(x) != n or len(d) != n:
                raise DimensionError(f"term of rank {len(x)}/{len(d)} in rank-{n} element")
            if x in acc:
                acc[x] = sc.add(acc[x], d)
            else:
                acc[x] = d
        self._terms = {x: acc[x] for x in sorted(acc) if not sc.is_zero(acc[x])}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "WittElement":
        # terms already Q tuples; prune and sort only
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = {x: terms[x] for x in sorted(terms) if any(terms[x])}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int) -> "WittElement":
        return cls(n)

    @classmethod
    def monomial(cls, x, d) -> "WittElement":
        """``t^x d``."""
        return cls(len(x), {tuple(x): d})

    @classmethod
    def torus(cls, d) -> "WittElement":
        n = len(d)
        return cls(n, {sc.zero_vec(n): d})

    @classmethod
    def basis(cls, x, i: int) -> "WittElement":
        """``t^x d_i`` (i is 0-based)."""
        n = len(x)
        return cls(n, {tuple(x): sc.unit_vec(n, i)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def degrees(self) -> list:
        return list(self._terms)

    def component(self, x) -> TorusVector:
        return self._terms.get(sc.vec(x), sc.zero_vec(self.n))

    def monomials(self) -> Iterator[tuple[Monomial, Q]]:
        """Expand into basis monomials ``((x, i), coeff)`` with nonzero coeff."""
        for x, d in self._terms.items():
            for i, c in enumerate(d):
                if c:
                    yield (x, i), c

    def degree(self):
        """The degree of a nonzero homogeneous element, else None."""
        if len(self._terms) == 1:
            return next(iter(self._terms))
        return None

    def is_homogeneous(self) -> bool:
        return len(self._terms) <= 1

    def _check(self, other: "WittElement") -> None:
        if not isinstance(other, WittElement):
            raise TypeError(f"expected WittElement, got {type(other).__name__}")
        if other.n != self.n:
            raise DimensionError(f"rank mismatch: {self.n} != {other.n}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self._terms)
        for x, d in other._terms.items():
            acc[x] = sc.add(acc[x], d) if x in acc else d
        return WittElement._raw(self.n, acc)

    def __neg__(self):
        return WittElement._raw(self.n, {x: sc.neg(d) for x, d in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = sc.scalar(c)
        if not c:
            return WittElement(self.n)
        return WittElement._raw(self.n, {x: sc.smul(c, d) for x, d in self._terms.items()})

    __mul__ = __rmul__

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .textio import format_element

        return f"WittElement({format_element(self)!r})"


def add(u: WittElement, w: WittElement) -> WittElement:
    return u + w


def scale(c, u: WittElement) -> WittElement:
    return sc.scalar(c) * u


def bracket_terms(x, d, y, e) -> tuple:
    """``[t^x d, t^y e] = t^(x+y) (d(y) e - e(x) d)`` as ``(x+y, vector)``."""
    dy = sc.pair(d, y)
    ex = sc.pair(e, x)
    return sc.add(x, y), tuple(dy * b - ex * a for a, b in zip(d, e))


def bracket(u: WittElement, w: WittElement) -> WittElement:
    u._check(w)
    acc: dict = {}
    for x, d in u.items():
        for y, e in w.items():
            z, v = bracket_terms(x, d, y, e)
            acc[z] = sc.add(acc[z], v) if z in acc else v
    return WittElement._raw(u.n, acc)


def grade(u: WittElement) -> dict:
    """Homogeneous components keyed by degree."""
    return {x: WittElement._raw(u.n, {x: d}) for x, d in u.items()}


def jacobi_defect(u: WittElement, v: WittElement, w: WittElement) -> WittElement:
    """``[[u,v],w] + [[v,w],u] + [[w,u],v]``; zero in any Lie algebra."""
    return bracket(bracket(u, v), w) + bracket(bracket(v, w), u) + bracket(bracket(w, u), v)
