"""Seeded property suites; each check is an exact equality, no tolerances."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import scalars as sc
from .bialgebra import (
    TRIANGULAR,
    classify,
    cobracket,
    cocycle_defect,
    cybe_c,
    michaelis_r,
    ng_taft_defect,
)
from .cohomology import (
    WitnessCapError,
    alternating_witness,
    annihilator_witness,
    solve_inner,
    torus_restriction,
)
from .sampling import Sampler
from .scalars import AlgebraConfig
from .tensors import Tensor, diag_act, grade_tensor, sym_split, twist
from .textio import format_any
from .witt import WittElement, bracket, jacobi_defect


@dataclass
class SuiteResult:
    name: str
    rank: int
    samples: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check: str, **inputs):
        self.failures.append({"check": check, "inputs": {k: format_any(v) for k, v in sorted(inputs.items())}})

    def to_dict(self):
        return {
            "failures": self.failures,
            "name": self.name,
            "passed": self.passed,
            "rank": self.rank,
            "samples": self.samples,
        }

    def render_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.name} rank={self.rank} samples={self.samples} failures={len(self.failures)}"]
        for f in self.failures:
            lines.append(f"  {f['check']}:")
            for k, v in f["inputs"].items():
                lines.append(f"    {k} = {v}")
        return "\n".join(lines)


def jacobi(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("jacobi", cfg.n, samples)
    s = Sampler(cfg)
    for _ in range(samples):
        u, v, w = s.element(), s.element(), s.element()
        if jacobi_defect(u, v, w):
            res.fail("jacobi", u=u, v=v, w=w)
        if bracket(u, u) or bracket(u, v) != -bracket(v, u):
            res.fail("antisymmetry", u=u, v=v)
    return res


def torus(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("torus", cfg.n, samples)
    s = Sampler(cfg)
    for _ in range(samples):
        d = s.torus_vector()
        x = s.point()
        m = WittElement(cfg.n, {x: s.torus_vector()})
        if bracket(WittElement.torus(d), m) != sc.pair(d, x) * m:
            res.fail("torus-action", d=WittElement.torus(d), u=m)
    return res


def module_law(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("module-law", cfg.n, samples)
    s = Sampler(cfg)
    for _ in range(samples):
        a, b = s.element(), s.element()
        for arity in (2, 3):
            t = s.tensor(arity)
            lhs = diag_act(bracket(a, b), t)
            rhs = diag_act(a, diag_act(b, t)) - diag_act(b, diag_act(a, t))
            if lhs != rhs:
                res.fail(f"module-law-{arity}", a=a, b=b, t=t)
        # degree shift for a homogeneous acting element
        m = s.monomial()
        t = s.tensor(2)
        shifted = {sc.add(m.degree(), y) for y in grade_tensor(t)}
        if not set(grade_tensor(diag_act(m, t))) <= shifted:
            res.fail("degree-shift", a=m, t=t)
    return res


def ng_taft(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("ng-taft", cfg.n, samples)
    s = Sampler(cfg)
    for _ in range(samples):
        r = s.alternating_r(pairs=s.rng.randint(1, 2))
        x = s.element()
        if ng_taft_defect(r, x):
            res.fail("ng-taft", r=r, x=x)
    return res


def cocycle(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("cocycle", cfg.n, samples)
    s = Sampler(cfg)
    for k in range(samples):
        r = s.alternating_r() if k % 2 else s.tensor(2)
        x, y = s.element(), s.element()
        if cocycle_defect(r, x, y):
            res.fail("cocycle", r=r, x=x, y=y)
    return res


def anticocommutativity(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("anticocommutativity", cfg.n, samples)
    s = Sampler(cfg)
    for _ in range(samples):
        r = s.alternating_r(pairs=s.rng.randint(1, 2))
        x = s.element()
        d = cobracket(r, x)
        if twist(d) != -d or sym_split(d)[1]:
            res.fail("anticocommutativity", r=r, x=x)
    return res


def michaelis(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("michaelis", cfg.n, samples)
    s = Sampler(cfg)
    for _ in range(samples):
        a, b, k = s.michaelis_pair()
        r = michaelis_r(a, b, k)
        if cybe_c(r):
            res.fail("cybe", a=a, b=b)
        if cobracket(r, a) != k * r:
            res.fail("delta-a", a=a, b=b)
        if cobracket(r, b):
            res.fail("delta-b", a=a, b=b)
        if classify(r, 2, cfg).verdict != TRIANGULAR:
            res.fail("verdict", a=a, b=b)
    return res


def inner_roundtrip(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("inner-roundtrip", cfg.n, samples)
    s = Sampler(cfg)
    for _ in range(samples):
        x = s.nonzero_point()
        v = s.homogeneous(x)
        table = torus_restriction(v)
        for i in range(cfg.n):
            if x[i] and solve_inner(table, x, choice=i) != v:
                res.fail(f"roundtrip-pivot-{i + 1}", v=v)
    return res


def witness(cfg: AlgebraConfig, samples: int) -> SuiteResult:
    res = SuiteResult("witness", cfg.n, samples)
    s = Sampler(cfg)
    for _ in range(samples):
        c = s.nonzero_tensor(3)
        try:
            a = annihilator_witness(c, cfg.cap)
        except WitnessCapError:
            res.fail("annihilator-cap", c=c)
        else:
            if not diag_act(a, c):
                res.fail("annihilator", c=c, a=a)
        r = s.non_alternating()
        try:
            a = alternating_witness(r, cfg.cap)
        except WitnessCapError:
            res.fail("alternating-cap", r=r)
        else:
            if a is None or not sym_split(diag_act(a, r))[1]:
                res.fail("alternating", r=r)
    if alternating_witness(Tensor.zero(cfg.n, 2), cfg.cap) is not None:
        res.fail("zero-alternating")
    return res


SUITES = {
    "jacobi": jacobi,
    "torus": torus,
    "module-law": module_law,
    "ng-taft": ng_taft,
    "cocycle": cocycle,
    "anticocommutativity": anticocommutativity,
    "michaelis": michaelis,
    "inner-roundtrip": inner_roundtrip,
    "witness": witness,
}


def run_suite(name: str, cfg: AlgebraConfig, samples: int) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    return fn(cfg, samples)
