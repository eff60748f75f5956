import json

import pytest
from hypothesis import given

from conftest import F, alternating, elements, rank_and, tensors
from wittbialg.bialgebra import (
    NOT_CANDIDATE,
    NOT_TRIANGULAR,
    TRIANGULAR,
    NotAlternatingError,
    PremiseError,
    classify,
    cobracket,
    cocycle_defect,
    cojacobi_defect,
    cybe_c,
    michaelis_r,
    mybe_defect,
    ng_taft_defect,
)
from wittbialg.scalars import AlgebraConfig, Q
from wittbialg.tensors import Tensor, cyclic_sum, decomposables, diag_act, grade_tensor, sym_split, tensor_of, twist
from wittbialg.witt import WittElement as W, bracket

d1 = W.torus(F(1))
e1 = W.basis(F(1), 0)


def naive_cybe(r):
    """The three displayed double sums, term by term with the generic bracket."""
    pieces = [(c, a, b) for c, (a, b) in decomposables(r)]
    out = Tensor.zero(r.n, 3)
    for ci, ai, bi in pieces:
        for cj, aj, bj in pieces:
            cc = ci * cj
            out = out + cc * tensor_of(bracket(ai, aj), bi, bj)
            out = out + cc * tensor_of(ai, bracket(bi, aj), bj)
            out = out + cc * tensor_of(ai, aj, bracket(bi, bj))
    return out


def naive_cojacobi(r, x):
    out = Tensor.zero(r.n, 3)
    for c, (p, q) in decomposables(diag_act(x, r)):
        for c2, (q1, q2) in decomposables(diag_act(q, r)):
            out = out + (c * c2) * tensor_of(p, q1, q2)
    return cyclic_sum(out)


def michaelis_example():
    return michaelis_r(d1, e1, 1)


def test_cobracket_examples():
    r = tensor_of(d1, e1) - tensor_of(e1, d1)
    for dv in (F(1), F(-2), F("3/2")):
        assert cobracket(r, W.torus(dv)) == dv[0] * r
    # [a, b] = k b with r = a(x)b - b(x)a
    a, b = W.torus(F(2, 1)), W.basis(F(1, 1), 1)
    k = Q(3)
    assert bracket(a, b) == k * b
    r = tensor_of(a, b) - tensor_of(b, a)
    assert not cobracket(r, b)
    assert cobracket(r, a) == k * r


@given(rank_and(lambda n: tensors(n, 2, 3)))
def test_cybe_matches_naive(data):
    _, r = data
    assert cybe_c(r) == naive_cybe(r)


def test_cybe_examples():
    assert not cybe_c(michaelis_example())
    assert not cybe_c(Tensor.zero(2, 2))
    a, b = W.torus(F(1, 0)), W.torus(F(0, 1))
    assert not cybe_c(tensor_of(a, b) - tensor_of(b, a))


@given(rank_and(alternating))
def test_cybe_quadratic_scaling(data):
    _, r = data
    lam = Q(-3, 2)
    assert cybe_c(lam * r) == lam * lam * cybe_c(r)


def test_mybe_examples():
    r = michaelis_example()
    assert not mybe_defect(r, W.basis(F(5), 0))
    sym = tensor_of(d1, e1) + tensor_of(e1, d1)
    # c(sym) = 2 (e(x)e(x)d - d(x)e(x)e), which t^e d happens to annihilate
    assert cybe_c(sym) == 2 * (tensor_of(e1, e1, d1) - tensor_of(d1, e1, e1))
    assert not mybe_defect(sym, e1)
    f = W.basis(F(-1), 0)
    assert mybe_defect(sym, f) == diag_act(f, naive_cybe(sym))
    assert mybe_defect(sym, f)


@given(rank_and(alternating, lambda n: elements(n, 1)))
def test_mybe_torus_scales_blocks(data):
    n, r, m = data
    d = W.torus(m.terms[m.degrees()[0]])
    dv = d.terms[d.degrees()[0]]
    from wittbialg import scalars as sc

    c = cybe_c(r)
    defect = grade_tensor(mybe_defect(r, d))
    for x, part in grade_tensor(c).items():
        assert defect.get(x, Tensor.zero(n, 3)) == sc.pair(dv, x) * part


@given(rank_and(lambda n: tensors(n, 2), lambda n: elements(n, 1)))
def test_cojacobi_matches_naive(data):
    _, r, x = data
    assert cojacobi_defect(r, x) == naive_cojacobi(r, x)


def test_cojacobi_examples():
    r = michaelis_example()
    for x in (e1, W.basis(F(-2), 0), d1 + W.basis(F("1/2"), 0)):
        assert not cojacobi_defect(r, x)
    assert not cojacobi_defect(r, W.zero(1))


@given(rank_and(alternating, elements))
def test_ng_taft_identity(data):
    _, r, x = data
    assert cojacobi_defect(r, x) == mybe_defect(r, x)
    assert not ng_taft_defect(r, x)


def test_ng_taft_rejects_symmetric():
    with pytest.raises(NotAlternatingError) as info:
        ng_taft_defect(tensor_of(d1, d1), e1)
    assert info.value.residue == tensor_of(d1, d1)
    assert not ng_taft_defect(michaelis_example(), W.basis(F(2), 0))
    assert not ng_taft_defect(Tensor.zero(1, 2), e1)


@given(rank_and(lambda n: tensors(n, 2), elements, elements))
def test_cocycle_identity_any_r(data):
    _, r, x, y = data
    assert not cocycle_defect(r, x, y)
    assert not cocycle_defect(r, x, x)


def test_cocycle_michaelis_closed_form():
    r = michaelis_example()
    assert not cocycle_defect(r, d1, e1)
    assert not diag_act(e1, r)


@given(rank_and(alternating, elements))
def test_image_alternating(data):
    _, r, x = data
    dx = cobracket(r, x)
    assert not sym_split(dx)[1]
    assert twist(dx) == -dx


def test_michaelis_premises():
    r = michaelis_r(W.torus(F(1, 0)), W.basis(F(1, 0), 1), 1)
    assert not sym_split(r)[1]
    with pytest.raises(PremiseError) as info:
        michaelis_r(e1, e1, 1)
    assert info.value.check == "independence"
    with pytest.raises(PremiseError) as info:
        michaelis_r(d1, e1, 0)
    assert info.value.check == "k-nonzero"
    with pytest.raises(PremiseError) as info:
        michaelis_r(d1, e1, 2)
    assert info.value.check == "bracket-relation"


def test_classify_examples():
    rep = classify(michaelis_example(), 10)
    assert rep.verdict == TRIANGULAR
    assert all(s.zero for s in rep.sampled_defects.values())

    rep = classify(tensor_of(d1, d1), 5)
    assert not rep.alternating and rep.verdict == NOT_CANDIDATE
    assert rep.symmetric_residue == tensor_of(d1, d1)

    a, b = W.torus(F(1, 0)), W.torus(F(0, 1))
    rep = classify(tensor_of(a, b) - tensor_of(b, a), 5)
    assert rep.alternating and not rep.cybe_value and rep.verdict == TRIANGULAR

    # alternating but c(r) != 0
    e2 = W.basis(F(2), 0)
    r = tensor_of(e1, e2) - tensor_of(e2, e1)
    rep = classify(r, 5)
    assert rep.alternating and rep.cybe_value and rep.verdict == NOT_TRIANGULAR


def test_classify_report_renders_deterministically():
    r = tensor_of(d1, d1)
    cfg = AlgebraConfig(1, seed=7)
    a, b = classify(r, 20, cfg), classify(r, 20, cfg)
    assert a.render_text() == b.render_text()
    assert a.render_doc() == b.render_doc()
    doc = json.loads(a.render_doc())
    assert list(doc) == sorted(doc)
    assert doc["verdict"] == NOT_CANDIDATE


def test_classify_requires_samples():
    with pytest.raises(ValueError):
        classify(michaelis_example(), 0)
