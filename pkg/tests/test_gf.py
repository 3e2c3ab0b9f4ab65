import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liecensus import fpoly
from liecensus.gf import (
    FieldError,
    extension,
    field_arith,
    frobenius_q,
    gf,
    make_field,
    make_tower,
    primitive_element,
)


def brute_order(F, a):
    """Multiplicative order by repeated multiplication, without log tables."""
    k, x = 1, a
    while x != 1:
        x = F._slow_mul(x, a)
        k += 1
    return k


SMALL = [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4)]


def test_prime_field_gf2():
    F = make_field(2, 1)
    assert list(F.elements()) == [0, 1]


def test_gf9_has_four_generators_of_order_8():
    F = make_field(3, 2)
    assert F.order == 9
    orders = [brute_order(F, a) for a in range(1, 9)]
    assert max(orders) == 8
    assert orders.count(8) == 4


@pytest.mark.parametrize("p,e", [(4, 1), (1, 1), (6, 2)])
def test_make_field_rejects_non_prime(p, e):
    with pytest.raises(FieldError):
        make_field(p, e)


def test_make_field_rejects_degree_zero():
    with pytest.raises(FieldError):
        make_field(3, 0)


def test_arith_gf3():
    F = make_field(3, 1)
    s, p, inv = field_arith(F.elem(2), F.elem(2))
    assert (s.code, p.code, inv.code) == (1, 1, 2)


def test_arith_gf4():
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)  # X^2 + X + 1
    w = F.elem(2)  # the class of X
    s, p, inv = field_arith(w, w)
    assert s.code == 0
    assert p == w * w
    assert p.code == 3  # w^2 = w + 1
    assert inv.code == 3


@pytest.mark.parametrize("p,e", SMALL)
def test_field_axioms_exhaustive(p, e):
    F = make_field(p, e)
    els = list(F.elements())
    for a in els:
        if a:
            assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
    for a, b in itertools.product(els, repeat=2):
        assert F.mul(a, b) == F._slow_mul(a, b)
        assert F.add(a, b) == F._slow_add(a, b)


@pytest.mark.parametrize("p,e", SMALL)
def test_defining_poly_irreducible_by_trial_division(p, e):
    F = make_field(p, e)
    if e == 1:
        return
    base = F.base
    f = F.modulus
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(base.order), repeat=d):
            assert fpoly.mod(base, f, low + (1,)), f"{low + (1,)} divides {f}"


@pytest.mark.parametrize("p,e", SMALL)
def test_defining_poly_is_lexicographically_least(p, e):
    F = make_field(p, e)
    if e == 1:
        return
    for low in itertools.product(range(p), repeat=e):
        f = low + (1,)
        if f == F.modulus:
            break
        assert low[0] == 0 or not fpoly.is_irreducible(F.base, f)


@pytest.mark.parametrize("p,e", SMALL)
def test_cyclic_root_counts(p, e):
    F = make_field(p, e)
    n = F.order - 1
    for d in range(1, n + 1):
        if n % d == 0:
            assert sum(1 for a in range(1, F.order) if F._slow_pow(a, d) == 1) == d


def test_primitive_elements():
    assert primitive_element(make_field(2, 1)).code == 1
    assert primitive_element(make_field(5, 1)).code == 2
    F = make_field(3, 2)
    least = min(a for a in range(1, 9) if brute_order(F, a) == 8)
    assert primitive_element(F).code == least


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_tower_frobenius(q):
    t = make_tower(q)
    E = t.ext
    assert E.order == q * q
    fixed = {a for a in E.elements() if t.frobenius(a) == a}
    assert fixed == set(range(q))  # the embedded base
    for a in E.elements():
        assert t.frobenius(t.frobenius(a)) == a
    if q <= 5:
        for a, b in itertools.product(E.elements(), repeat=2):
            assert t.frobenius(E.add(a, b)) == E.add(t.frobenius(a), t.frobenius(b))
            assert t.frobenius(E.mul(a, b)) == E.mul(t.frobenius(a), t.frobenius(b))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_embedding_is_homomorphism(q):
    t = make_tower(q)
    B = t.base
    for a, b in itertools.product(B.elements(), repeat=2):
        ea, eb = t.embed(B.elem(a)), t.embed(B.elem(b))
        assert t.embed(B.elem(B.add(a, b))) == ea + eb
        assert t.embed(B.elem(B.mul(a, b))) == ea * eb


def test_frobenius_gf9_generator_cubes():
    t = make_tower(3)
    E = t.ext
    g = next(a for a in range(1, 9) if brute_order(E, a) == 8)
    cube = E._slow_mul(E._slow_mul(g, g), g)
    assert frobenius_q(t, E.elem(g)).code == cube


def test_frobenius_rejects_base_element():
    t = make_tower(3)
    with pytest.raises(FieldError):
        frobenius_q(t, t.base.elem(1))


@given(st.data())
def test_frobenius_involution_gf25(data):
    t = make_tower(5)
    a = data.draw(st.integers(0, 24))
    assert frobenius_q(t, frobenius_q(t, t.ext.elem(a))).code == a


def test_context_mismatch_and_zero_inverse():
    a = gf(4).elem(1)
    with pytest.raises(FieldError):
        a + gf(8).elem(1)
    with pytest.raises(ZeroDivisionError):
        gf(4).elem(0).inverse()


def test_extension_of_extension():
    F = extension(gf(4), 2)
    assert F.order == 16 and F.base is gf(4)
    assert all(brute_order(F, a) <= 15 for a in range(1, 16))
