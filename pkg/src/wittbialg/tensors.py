"""Tensor powers W(x)W and W(x)W(x)W with the diagonal adjoint action.

A tensor is stored sparsely on basis tensors
``t^x1 d_i1 (x) ... (x) t^xk d_ik``: a map from the label tuple
``((x1, i1), ..., (xk, ik))`` to a nonzero Q.  The block view
``blocks`` groups labels by their degree key ``(x1, ..., xk)`` into dense
row-major grids of ``n**k`` coefficients.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Mapping

from . import scalars as sc
from .scalars import DimensionError, Q
from .witt import WittElement

HALF = Q(1, 2)


class Tensor:
    """Immutable element of the k-fold tensor power of W (k = ``arity``)."""

    __slots__ = ("n", "arity", "_terms", "_hash")

    def __init__(self, n: int, arity: int, terms: Mapping | None = None):
        self.n = n
        self.arity = arity
        acc: dict = defaultdict(Q)
        for labels, c in (terms or {}).items():
            labels = tuple((sc.vec(x), int(i)) for x, i in labels)
            if len(labels) != arity:
                raise ValueError(f"label of arity {len(labels)} in arity-{arity} tensor")
            for x, i in labels:
                if len(x) != n or not 0 <= i < n:
                    raise DimensionError(f"label {labels} does not fit rank {n}")
            acc[labels] += sc.scalar(c)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, arity: int, terms: dict) -> "Tensor":
        obj = cls.__new__(cls)
        obj.n = n
        obj.arity = arity
        obj._terms = {k: terms[k] for k in sorted(terms) if terms[k]}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n: int, arity: int) -> "Tensor":
        return cls._raw(n, arity, {})

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def blocks(self) -> dict:
        """Degree key -> flattened ``n**arity`` coefficient grid (row-major)."""
        grids: dict = {}
        n, k = self.n, self.arity
        for labels, c in self._terms.items():
            key = tuple(x for x, _ in labels)
            grid = grids.setdefault(key, [Q(0)] * n**k)
            pos = 0
            for _, i in labels:
                pos = pos * n + i
            grid[pos] = c
        return {key: tuple(g) for key, g in grids.items()}

    def degree_of(self, labels) -> tuple:
        out = sc.zero_vec(self.n)
        for x, _ in labels:
            out = sc.add(out, x)
        return out

    def _check(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor):
            raise TypeError(f"expected Tensor, got {type(other).__name__}")
        if (other.n, other.arity) != (self.n, self.arity):
            raise DimensionError(
                f"shape mismatch: rank {self.n}/arity {self.arity} vs rank {other.n}/arity {other.arity}"
            )

    def __add__(self, other):
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return Tensor._raw(self.n, self.arity, acc)

    def __neg__(self):
        return Tensor._raw(self.n, self.arity, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = sc.scalar(c)
        return Tensor._raw(self.n, self.arity, {k: c * v for k, v in self._terms.items()})

    __mul__ = __rmul__

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.n, self.arity, self._terms) == (other.n, other.arity, other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.arity, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .textio import format_tensor

        return f"Tensor({format_tensor(self)!r})"


# aliases for the two tensor powers in use
Tensor2 = Tensor3 = Tensor


def tensor_of(*elems: WittElement) -> Tensor:
    """Outer product of Witt elements, expanded on basis tensors."""
    if not elems:
        raise ValueError("need at least one factor")
    n = elems[0].n
    for e in elems:
        if e.n != n:
            raise DimensionError(f"rank mismatch: {n} != {e.n}")
    acc: dict = {}
    for combo in itertools.product(*(list(e.monomials()) for e in elems)):
        labels = tuple(lab for lab, _ in combo)
        c = Q(1)
        for _, ci in combo:
            c *= ci
        acc[labels] = acc.get(labels, 0) + c
    return Tensor._raw(n, len(elems), acc)


def tensor2_of(u: WittElement, w: WittElement) -> Tensor:
    return tensor_of(u, w)


def tensor3_of(u: WittElement, v: WittElement, w: WittElement) -> Tensor:
    return tensor_of(u, v, w)


def permute(t: Tensor, order) -> Tensor:
    """Reorder tensor slots: new slot s holds old slot ``order[s]``."""
    return Tensor._raw(
        t.n, t.arity, {tuple(labels[j] for j in order): c for labels, c in t.items()}
    )


def twist(t: Tensor) -> Tensor:
    """``x (x) y -> y (x) x``."""
    if t.arity != 2:
        raise ValueError("twist needs a 2-tensor")
    return permute(t, (1, 0))


def cycle(t: Tensor) -> Tensor:
    """``x1 (x) x2 (x) x3 -> x2 (x) x3 (x) x1``."""
    if t.arity != 3:
        raise ValueError("cycle needs a 3-tensor")
    return permute(t, (1, 2, 0))


def cyclic_sum(t: Tensor) -> Tensor:
    """``(1 + cycle + cycle^2) t``."""
    c1 = cycle(t)
    return t + c1 + cycle(c1)


def diag_act(a: WittElement, t: Tensor) -> Tensor:
    """Adjoint diagonal action: bracket ``a`` into every slot (Leibniz rule)."""
    if a.n != t.n:
        raise DimensionError(f"rank mismatch: {a.n} != {t.n}")
    n = t.n
    acc: dict = defaultdict(Q)
    for z, dv in a.items():
        for labels, c in t.items():
            for s, (x, i) in enumerate(labels):
                # [t^z dv, t^x d_i] = t^(z+x) (dv(x) d_i - z_i dv)
                p = sc.pair(dv, x)
                zi = z[i]
                zx = sc.add(z, x)
                head, tail = labels[:s], labels[s + 1:]
                for j in range(n):
                    coef = -zi * dv[j]
                    if j == i:
                        coef += p
                    if coef:
                        acc[head + ((zx, j),) + tail] += c * coef
    return Tensor._raw(n, t.arity, acc)


def diag_act2(a: WittElement, t: Tensor) -> Tensor:
    return diag_act(a, t)


def diag_act3(a: WittElement, t: Tensor) -> Tensor:
    return diag_act(a, t)


def grade_tensor(t: Tensor) -> dict:
    """Split into homogeneous components keyed by total degree ``x1 + ... + xk``."""
    parts: dict = defaultdict(dict)
    for labels, c in t.items():
        parts[t.degree_of(labels)][labels] = c
    return {d: Tensor._raw(t.n, t.arity, parts[d]) for d in sorted(parts)}


grade2 = grade3 = grade_tensor


def sym_split(t: Tensor) -> tuple[Tensor, Tensor]:
    """``(1/2 (t - twist t), 1/2 (t + twist t))``; t is alternating iff the second is 0."""
    tw = twist(t)
    return HALF * (t - tw), HALF * (t + tw)


def is_alternating(t: Tensor) -> bool:
    return not sym_split(t)[1]


def decomposables(t: Tensor):
    """Yield ``(coeff, factors)`` with each factor a basis monomial element."""
    for labels, c in t.items():
        yield c, tuple(WittElement.basis(x, i) for x, i in labels)
