"""Derivations W -> W(x)W on finite windows, and the witness searches.

A derivation is known only on a finite window of basis monomials
``t^x d_i``; everything here is checked on that window.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from . import scalars as sc
from .scalars import Q
from .tensors import Tensor, diag_act, grade_tensor, sym_split
from .witt import WittElement, bracket


class CoverageError(ValueError):
    def __init__(self, missing):
        self.missing = sorted(missing)
        super().__init__(f"monomials outside the window: {self.missing}")


class NotADerivationError(ValueError):
    def __init__(self, index: int, detail: str = ""):
        self.index = index
        super().__init__(f"torus values are inconsistent at d_{index + 1}{': ' + detail if detail else ''}")


class UnsupportedDegreeError(ValueError):
    pass


class NoWitnessError(ValueError):
    """Raised for a zero input: nothing can witness that it is nonzero."""


class WitnessCapError(RuntimeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"no witness among t^(N e_m) d_j for N <= {cap}")


def _mono(m):
    x, i = m
    return sc.vec(x), int(i)


@dataclass
class DerivationTable:
    """A linear map ``W -> W(x)W`` given on basis monomials ``(x, i)``."""

    window: tuple
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        self.window = tuple(_mono(m) for m in self.window)
        self.values = {_mono(m): t for m, t in self.values.items()}
        missing = [m for m in self.window if m not in self.values]
        if missing:
            raise CoverageError(missing)

    @property
    def n(self) -> int:
        return len(self.window[0][0])

    def apply(self, u: WittElement) -> Tensor:
        """Extend by linearity to the span of the window."""
        missing = [m for m, _ in u.monomials() if m not in self.values]
        if missing:
            raise CoverageError(missing)
        out = Tensor.zero(u.n, 2)
        for m, c in u.monomials():
            out = out + c * self.values[m]
        return out

    def __add__(self, other: "DerivationTable") -> "DerivationTable":
        return DerivationTable(self.window, {m: self.values[m] + other.values[m] for m in self.window})


def inner_from(v: Tensor, window) -> DerivationTable:
    """The inner derivation ``u -> u . v`` on the window."""
    window = tuple(_mono(m) for m in window)
    return DerivationTable(window, {m: diag_act(WittElement.basis(*m), v) for m in window})


def _as_element(u, n=None) -> WittElement:
    if isinstance(u, WittElement):
        return u
    x, i = _mono(u)
    return WittElement.basis(x, i)


def derivation_defect(D: DerivationTable, u, w) -> Tensor:
    """``D([u,w]) - u.D(w) + w.D(u)`` for monomials (or window-spanned elements)."""
    u, w = _as_element(u), _as_element(w)
    missing = {m for m, _ in u.monomials() if m not in D.values}
    missing |= {m for m, _ in w.monomials() if m not in D.values}
    missing |= {m for m, _ in bracket(u, w).monomials() if m not in D.values}
    if missing:
        raise CoverageError(missing)
    return D.apply(bracket(u, w)) - diag_act(u, D.apply(w)) + diag_act(w, D.apply(u))


def homog_decompose(D: DerivationTable) -> dict:
    """Split D into components ``D_z`` mapping degree-y monomials into degree y+z."""
    parts: dict = defaultdict(dict)
    for m in D.window:
        for deg, piece in grade_tensor(D.values[m]).items():
            parts[sc.sub(deg, m[0])][m] = piece
    out = {}
    for z in sorted(parts):
        zero = Tensor.zero(D.n, 2)
        out[z] = DerivationTable(D.window, {m: parts[z].get(m, zero) for m in D.window})
    return out


def solve_inner(d_torus: dict, x, choice: int | None = None) -> Tensor:
    """Recover ``w`` with ``D(d) = d . w`` from the values of D on ``d_1..d_n``.

    ``d_torus`` maps torus vectors (or basis indices) to 2-tensors homogeneous
    of degree ``x != 0``.  The pivot is the first ``d_i`` with ``x_i != 0``
    unless ``choice`` names another valid index; the answer does not depend on it.
    """
    x = sc.vec(x)
    n = len(x)
    if sc.is_zero(x):
        raise UnsupportedDegreeError("degree 0 is not handled by the torus solver")
    vals = {}
    for key, t in d_torus.items():
        i = key if isinstance(key, int) else _basis_index(sc.vec(key))
        vals[i] = t
    for i in range(n):
        if i not in vals:
            raise NotADerivationError(i, "value missing")
        for deg in grade_tensor(vals[i]):
            if deg != x:
                raise NotADerivationError(i, f"value not homogeneous of degree {list(map(str, x))}")
    if choice is None:
        choice = next(i for i in range(n) if x[i])
    elif not x[choice]:
        raise ValueError(f"d_{choice + 1}(x) = 0; not a valid pivot")
    w = (Q(1) / x[choice]) * vals[choice]
    for i in range(n):
        if vals[i] != x[i] * w:
            raise NotADerivationError(i)
    return w


def _basis_index(d) -> int:
    nz = [i for i, a in enumerate(d) if a]
    if len(nz) != 1 or d[nz[0]] != 1:
        raise ValueError(f"{d} is not a basis torus vector")
    return nz[0]


def torus_restriction(v: Tensor) -> dict:
    """``{i: d_i . v}``, the inner derivation of v on the torus basis."""
    return {i: diag_act(WittElement.torus(sc.unit_vec(v.n, i)), v) for i in range(v.n)}


def _candidates(n: int, cap: int):
    for N in range(1, cap + 1):
        for m in range(n):
            z = tuple(Q(N) if k == m else Q(0) for k in range(n))
            for j in range(n):
                yield WittElement.basis(z, j)


def _search(t: Tensor, acts, cap: int) -> WittElement:
    """First verified witness: a torus vector if t has a nonzero-degree part,
    else ``t^(N e_m) d_j`` in order of N, m, j."""
    if not t:
        raise NoWitnessError("zero input has no witness")
    n = t.n
    for deg in grade_tensor(t):
        if any(deg):
            i = next(k for k, a in enumerate(deg) if a)
            a = WittElement.torus(sc.unit_vec(n, i))
            if acts(a):
                return a
    for a in _candidates(n, cap):
        if acts(a):
            return a
    raise WitnessCapError(cap)


def annihilator_witness(c: Tensor, cap: int = 8) -> WittElement:
    """Some ``a`` in W with ``a . c != 0`` (exists for every nonzero c)."""
    return _search(c, lambda a: bool(diag_act(a, c)), cap)


def alternating_witness(r: Tensor, cap: int = 8) -> WittElement | None:
    """None if r is alternating, else ``a`` with ``a . r`` not alternating."""
    sym = sym_split(r)[1]
    if not sym:
        return None
    return _search(sym, lambda a: bool(sym_split(diag_act(a, r))[1]), cap)
