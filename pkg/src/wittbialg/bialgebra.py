"""Coboundary cobrackets, the classical Yang-Baxter element and axiom defects."""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field

from . import scalars as sc
from .scalars import AlgebraConfig, Q
from .tensors import Tensor, cyclic_sum, diag_act, sym_split, tensor_of
from .witt import WittElement, bracket

# An r-matrix is just a 2-tensor; alternation is checked where it matters.
RMatrix = Tensor

TRIANGULAR = "triangular-coboundary"
NOT_TRIANGULAR = "coboundary-not-triangular"
NOT_CANDIDATE = "not-coboundary-candidate"


class NotAlternatingError(ValueError):
    def __init__(self, residue: Tensor):
        from .textio import format_tensor

        self.residue = residue
        super().__init__(f"r is not alternating; symmetric residue: {format_tensor(residue)}")


class PremiseError(ValueError):
    def __init__(self, check: str, detail: str):
        self.check = check
        super().__init__(f"{check}: {detail}")


def _basis_bracket(p, q):
    # [t^x d_i, t^y d_j] = t^(x+y) (y_i d_j - x_j d_i)
    (x, i), (y, j) = p, q
    z = sc.add(x, y)
    if i == j:
        c = y[i] - x[i]
        return [((z, i), c)] if c else []
    out = []
    if y[i]:
        out.append(((z, j), y[i]))
    if x[j]:
        out.append(((z, i), -x[j]))
    return out


def cobracket(r: Tensor, x: WittElement) -> Tensor:
    """``Delta_r(x) = x . r``."""
    return diag_act(x, r)


def cybe_c(r: Tensor) -> Tensor:
    """``c(r) = [r12, r13] + [r12, r23] + [r13, r23]`` evaluated in W(x)W(x)W.

    With ``r = sum_i a_i (x) b_i`` over basis tensors:
    ``[r12,r13] = sum [a_i,a_j] (x) b_i (x) b_j``,
    ``[r12,r23] = sum a_i (x) [b_i,a_j] (x) b_j``,
    ``[r13,r23] = sum a_i (x) a_j (x) [b_i,b_j]``.
    """
    if r.arity != 2:
        raise ValueError("r must be a 2-tensor")
    terms = list(r.items())
    acc: dict = defaultdict(Q)
    for (ai, bi), ci in terms:
        for (aj, bj), cj in terms:
            cc = ci * cj
            for lab, v in _basis_bracket(ai, aj):
                acc[(lab, bi, bj)] += cc * v
            for lab, v in _basis_bracket(bi, aj):
                acc[(ai, lab, bj)] += cc * v
            for lab, v in _basis_bracket(bi, bj):
                acc[(ai, aj, lab)] += cc * v
    return Tensor._raw(r.n, 3, acc)


def mybe_defect(r: Tensor, x: WittElement) -> Tensor:
    """``x . c(r)``; zero for every x iff Delta_r is a Lie bialgebra structure."""
    return diag_act(x, cybe_c(r))


def cojacobi_defect(r: Tensor, x: WittElement) -> Tensor:
    """``(1 + xi + xi^2)(1 (x) Delta)Delta(x)`` for ``Delta = Delta_r``."""
    first = cobracket(r, x)
    cache: dict = {}
    acc: dict = defaultdict(Q)
    for (p, q), c in first.items():
        dq = cache.get(q)
        if dq is None:
            dq = cache[q] = cobracket(r, WittElement.basis(*q))
        for (q1, q2), c2 in dq.items():
            acc[(p, q1, q2)] += c * c2
    return cyclic_sum(Tensor._raw(r.n, 3, acc))


def ng_taft_defect(r: Tensor, x: WittElement) -> Tensor:
    """Co-Jacobi defect minus ``x . c(r)``; must vanish for alternating r."""
    sym = sym_split(r)[1]
    if sym:
        raise NotAlternatingError(sym)
    return cojacobi_defect(r, x) - mybe_defect(r, x)


def cocycle_defect(r: Tensor, x: WittElement, y: WittElement) -> Tensor:
    """``Delta[x,y] - x.Delta(y) + y.Delta(x)``; zero for every r."""
    return (
        cobracket(r, bracket(x, y))
        - diag_act(x, cobracket(r, y))
        + diag_act(y, cobracket(r, x))
    )


def _independent(a: WittElement, b: WittElement) -> bool:
    labels = sorted({lab for lab, _ in a.monomials()} | {lab for lab, _ in b.monomials()})
    ca, cb = dict(a.monomials()), dict(b.monomials())
    rows = [[ca.get(l, 0) for l in labels], [cb.get(l, 0) for l in labels]]
    return bool(labels) and sc.rank(rows) == 2


def michaelis_r(a: WittElement, b: WittElement, k) -> Tensor:
    """``r = a (x) b - b (x) a`` for independent a, b with ``[a, b] = k b``, k != 0."""
    k = sc.scalar(k)
    if k == 0:
        raise PremiseError("k-nonzero", "k must be nonzero")
    if a.n != b.n:
        raise sc.DimensionError(f"rank mismatch: {a.n} != {b.n}")
    if not _independent(a, b):
        raise PremiseError("independence", "a and b are linearly dependent")
    if bracket(a, b) != k * b:
        from .textio import format_element

        raise PremiseError(
            "bracket-relation", f"[a, b] = {format_element(bracket(a, b))} is not {k} * b"
        )
    return tensor_of(a, b) - tensor_of(b, a)


@dataclass
class DefectSample:
    """Outcome of a sampled defect check: all zero, or the first failing input."""

    samples: int
    zero: bool = True
    witness: dict | None = None

    def to_dict(self):
        return {"samples": self.samples, "witness": self.witness, "zero": self.zero}


@dataclass
class ClassificationReport:
    alternating: bool
    symmetric_residue: Tensor
    cybe_value: Tensor
    verdict: str
    sampled_defects: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        from .textio import format_tensor

        return {
            "alternating": self.alternating,
            "cybe_value": format_tensor(self.cybe_value),
            "rank": self.cybe_value.n,
            "sampled_defects": {k: v.to_dict() for k, v in sorted(self.sampled_defects.items())},
            "symmetric_residue": format_tensor(self.symmetric_residue),
            "verdict": self.verdict,
        }

    def render_doc(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def render_text(self) -> str:
        d = self.to_dict()
        lines = [
            f"verdict: {d['verdict']}",
            f"rank: {d['rank']}",
            f"alternating: {str(d['alternating']).lower()}",
            f"symmetric_residue: {d['symmetric_residue']}",
            f"cybe_value: {d['cybe_value']}",
        ]
        for name, s in d["sampled_defects"].items():
            status = "zero" if s["zero"] else "NONZERO"
            lines.append(f"{name}_defect: {status} over {s['samples']} samples")
            if s["witness"]:
                for key, val in sorted(s["witness"].items()):
                    lines.append(f"  {key} = {val}")
        return "\n".join(lines)


def classify(r: Tensor, sample_count: int, config: AlgebraConfig | None = None) -> ClassificationReport:
    """Decide alternation and c(r) = 0 exactly; corroborate by sampled defects."""
    from .sampling import Sampler
    from .textio import format_element

    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    config = config or AlgebraConfig(r.n)
    if config.n != r.n:
        raise sc.DimensionError(f"rank mismatch: config {config.n} != r {r.n}")
    _, sym = sym_split(r)
    alternating = not sym
    c = cybe_c(r)
    if not alternating:
        verdict = NOT_CANDIDATE
    elif c:
        verdict = NOT_TRIANGULAR
    else:
        verdict = TRIANGULAR

    rng = Sampler(config)
    cocycle = DefectSample(sample_count)
    cojac = DefectSample(sample_count)
    for _ in range(sample_count):
        x, y = rng.element(), rng.element()
        if cocycle.zero and cocycle_defect(r, x, y):
            cocycle.zero = False
            cocycle.witness = {"x": format_element(x), "y": format_element(y)}
        if cojac.zero and cojacobi_defect(r, x):
            cojac.zero = False
            cojac.witness = {"x": format_element(x)}
    return ClassificationReport(
        alternating=alternating,
        symmetric_residue=sym,
        cybe_value=c,
        verdict=verdict,
        sampled_defects={"cocycle": cocycle, "cojacobi": cojac},
    )
