"""Seeded pseudorandom generators for elements, tensors and r-matrices.

Coordinates are rationals ``p/q`` with ``|p| <= sample_window`` and ``q in {1, 2}``.
Everything is driven by one :class:`random.Random`, so a seed fixes the stream.
"""
from __future__ import annotations

import random

from . import scalars as sc
from .scalars import AlgebraConfig, Q
from .tensors import Tensor, tensor_of, twist as _twist
from .witt import WittElement


class Sampler:
    def __init__(self, config: AlgebraConfig, seed: int | None = None):
        self.config = config
        self.n = config.n
        self.rng = random.Random(config.seed if seed is None else seed)

    def rational(self, nonzero: bool = False) -> Q:
        w = self.config.sample_window
        while True:
            q = Q(self.rng.randint(-w, w), self.rng.choice((1, 2)))
            if q or not nonzero:
                return q

    def point(self, integral: bool = False) -> tuple:
        if integral:
            w = self.config.sample_window
            return tuple(Q(self.rng.randint(-w, w)) for _ in range(self.n))
        return tuple(self.rational() for _ in range(self.n))

    def nonzero_point(self) -> tuple:
        while True:
            x = self.point()
            if any(x):
                return x

    def torus_vector(self) -> tuple:
        """A nonzero vector with roughly half its entries zero."""
        while True:
            v = tuple(self.rational() if self.rng.random() < 0.6 else Q(0) for _ in range(self.n))
            if any(v):
                return v

    def monomial(self, x=None) -> WittElement:
        x = self.point() if x is None else x
        return WittElement(self.n, {x: self.torus_vector()})

    def element(self, max_terms: int = 2) -> WittElement:
        """Nonzero element with 1..max_terms homogeneous terms."""
        while True:
            k = self.rng.randint(1, max_terms)
            terms = {self.point(): self.torus_vector() for _ in range(k)}
            u = WittElement(self.n, terms)
            if u:
                return u

    def torus(self) -> WittElement:
        return WittElement.torus(self.torus_vector())

    def tensor(self, arity: int, max_terms: int = 2) -> Tensor:
        """Sum of up to ``max_terms`` decomposable tensors of monomials."""
        out = Tensor.zero(self.n, arity)
        for _ in range(self.rng.randint(1, max_terms)):
            out = out + self.rational(nonzero=True) * tensor_of(*(self.monomial() for _ in range(arity)))
        return out

    def nonzero_tensor(self, arity: int, max_terms: int = 2, degree_zero: bool | None = None) -> Tensor:
        """Nonzero tensor; ``degree_zero=True`` forces every term to total degree 0."""
        if degree_zero is None:
            degree_zero = self.rng.random() < 0.5
        while True:
            out = Tensor.zero(self.n, arity)
            for _ in range(self.rng.randint(1, max_terms)):
                pts = [self.point() for _ in range(arity - 1)]
                last = sc.neg(_sum(pts, self.n)) if degree_zero else self.point()
                factors = [self.monomial(p) for p in pts + [last]]
                out = out + self.rational(nonzero=True) * tensor_of(*factors)
            if out:
                return out

    def alternating_r(self, pairs: int = 1, max_terms: int = 1) -> Tensor:
        """``sum (a_i (x) b_i - b_i (x) a_i)``."""
        out = Tensor.zero(self.n, 2)
        for _ in range(pairs):
            a, b = self.element(max_terms), self.element(max_terms)
            out = out + tensor_of(a, b) - tensor_of(b, a)
        return out

    def non_alternating(self) -> Tensor:
        while True:
            t = self.tensor(2)
            if t - _twist(t):
                return t

    def homogeneous(self, x, terms: int = 2) -> Tensor:
        """Nonzero 2-tensor homogeneous of total degree x."""
        while True:
            out = Tensor.zero(self.n, 2)
            for _ in range(self.rng.randint(1, terms)):
                y = self.point()
                out = out + self.rational(nonzero=True) * tensor_of(
                    self.monomial(y), self.monomial(sc.sub(x, y))
                )
            if out:
                return out

    def michaelis_pair(self):
        """``(a, b, k)`` with ``[a, b] = k b``, ``k != 0``, a and b independent.

        ``b = t^x d'`` is an eigenvector of the torus element ``d`` with
        eigenvalue ``d(x)``; adding a multiple of b to a keeps the relation.
        """
        while True:
            x = self.nonzero_point()
            d = self.torus_vector()
            k = sc.pair(d, x)
            if k:
                break
        b = self.monomial(x)
        a = WittElement.torus(d)
        if self.rng.random() < 0.5:
            a = a + self.rational() * b
        return a, b, k


def _sum(points, n):
    out = sc.zero_vec(n)
    for p in points:
        out = sc.add(out, p)
    return out

