from hypothesis import given

from conftest import F, elements, rank_and, tensors
from wittbialg import scalars as sc
from wittbialg.scalars import Q
from wittbialg.tensors import (
    Tensor,
    cycle,
    cyclic_sum,
    decomposables,
    diag_act,
    diag_act2,
    diag_act3,
    grade2,
    grade_tensor,
    sym_split,
    tensor2_of,
    tensor3_of,
    tensor_of,
    twist,
)
from wittbialg.witt import WittElement as W, bracket

d1 = W.torus(F(1))
e1 = W.basis(F(1), 0)


def naive_act(a, t):
    out = Tensor.zero(t.n, t.arity)
    for c, fs in decomposables(t):
        for s in range(len(fs)):
            g = list(fs)
            g[s] = bracket(a, fs[s])
            out = out + c * tensor_of(*g)
    return out


def test_tensor_of_examples():
    assert not tensor2_of(e1, W.zero(1))
    t = tensor2_of(W.torus(F(1, 0)), W.basis(F(1, 0), 1))
    assert t.blocks == {(F(0, 0), F(1, 0)): (0, 1, 0, 0)}


@given(rank_and(elements, elements, elements))
def test_tensor_of_bilinear(data):
    _, u, v, w = data
    assert tensor2_of(u + v, w) == tensor2_of(u, w) + tensor2_of(v, w)


@given(rank_and(lambda n: tensors(n, 2), elements, elements))
def test_twist(data):
    _, t, a, b = data
    assert twist(twist(t)) == t
    assert twist(tensor2_of(a, b)) == tensor2_of(b, a)
    # block (x, y) with grid M goes to block (y, x) with M transposed
    n = t.n
    tb = twist(t).blocks
    for (x, y), g in t.blocks.items():
        gt = tb[(y, x)]
        assert all(gt[l * n + k] == g[k * n + l] for k in range(n) for l in range(n))


def test_twist_alternating_example():
    a, b = W.torus(F(1, 0)), W.basis(F(1, 0), 1)
    t = tensor2_of(a, b) - tensor2_of(b, a)
    assert twist(t) == -t


@given(rank_and(lambda n: tensors(n, 3), elements, elements, elements))
def test_cycle(data):
    _, t, a, b, c = data
    assert cycle(cycle(cycle(t))) == t
    assert cycle(tensor3_of(a, b, c)) == tensor3_of(b, c, a)
    assert set(grade_tensor(cycle(t))) == set(grade_tensor(t))


def test_cyclic_sum_blocks():
    a, b, c = W.torus(F(1, 0)), W.basis(F(1, 0), 0), W.basis(F(0, 2), 1)
    s = cyclic_sum(tensor3_of(a, b, c))
    assert len(s.blocks) == 3
    assert cycle(s) == s


@given(rank_and(elements, lambda n: tensors(n, 2), lambda n: tensors(n, 3)))
def test_diag_act_matches_naive(data):
    _, a, t2, t3 = data
    assert diag_act(a, t2) == naive_act(a, t2)
    assert diag_act(a, t3) == naive_act(a, t3)


@given(rank_and(elements, elements, lambda n: tensors(n, 2), lambda n: tensors(n, 3)))
def test_module_law(data):
    _, a, b, t2, t3 = data
    for t in (t2, t3):
        assert diag_act(bracket(a, b), t) == diag_act(a, diag_act(b, t)) - diag_act(b, diag_act(a, t))


@given(rank_and(elements, lambda n: tensors(n, 2), lambda n: tensors(n, 3)))
def test_action_commutes_with_twist_and_cycle(data):
    _, a, t2, t3 = data
    assert diag_act2(a, twist(t2)) == twist(diag_act2(a, t2))
    assert diag_act3(a, cycle(t3)) == cycle(diag_act3(a, t3))


@given(rank_and(lambda n: elements(n, 1), lambda n: tensors(n, 2)))
def test_action_shifts_degree(data):
    _, a, t = data
    z = a.degree()
    out = grade2(diag_act(a, t))
    assert set(out) <= {sc.add(z, y) for y in grade2(t)}


@given(rank_and(lambda n: elements(n, 1).map(lambda u: W.torus(u.terms[u.degrees()[0]])), lambda n: tensors(n, 2)))
def test_torus_scales_graded_parts(data):
    _, d, t = data
    dv = d.terms[d.degrees()[0]]
    acted = grade2(diag_act(d, t))
    for x, part in grade2(t).items():
        expect = sc.pair(dv, x) * part
        assert acted.get(x, Tensor.zero(t.n, 2)) == expect


def test_torus_action_on_block():
    d = W.torus(F(2, "1/2"))
    t = tensor2_of(W.basis(F(1, 0), 0), W.basis(F(0, 2), 1))
    # degree (1, 2): pair = 2*1 + 1/2*2 = 3
    assert diag_act2(d, t) == 3 * t
    assert not diag_act2(d, Tensor.zero(2, 2))


def test_diag_act3_example():
    # [t^e d, d] = -t^e d in every slot
    got = diag_act3(e1, tensor3_of(d1, d1, d1))
    want = -(tensor3_of(e1, d1, d1) + tensor3_of(d1, e1, d1) + tensor3_of(d1, d1, e1))
    assert got == want


def test_grade2_examples():
    x, y = F(1, "-1/2"), F(2, 3)
    t = tensor2_of(W.basis(x, 0), W.basis(y, 1))
    assert list(grade2(t)) == [sc.add(x, y)]
    assert grade2(Tensor.zero(2, 2)) == {}


def test_sym_split_examples():
    a, b = W.torus(F(1, 0)), W.basis(F(1, 0), 1)
    alt = tensor2_of(a, b) - tensor2_of(b, a)
    assert sym_split(alt) == (alt, Tensor.zero(2, 2))
    dd = tensor2_of(d1, d1)
    assert sym_split(dd) == (Tensor.zero(1, 2), dd)


@given(rank_and(lambda n: tensors(n, 2), elements))
def test_sym_split_properties(data):
    _, t, a = data
    alt, sym = sym_split(t)
    assert alt + sym == t
    assert twist(alt) == -alt and twist(sym) == sym
    # the alternating part is (1 - twist) applied to t/2
    assert alt == Q(1, 2) * (t - twist(t))
    alt_a, sym_a = sym_split(diag_act(a, t))
    assert alt_a == diag_act(a, alt) and sym_a == diag_act(a, sym)
