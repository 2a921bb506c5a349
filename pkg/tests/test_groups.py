from __future__ import annotations

import itertools
import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lovasz_cx.errors import (
    IndexOutOfRange,
    NoIdentity,
    NotAssociative,
    NotLatinSquare,
    OrderTooLarge,
    UnboundGenerator,
    UnknownDescriptor,
)
from lovasz_cx.groups import (
    builtin_group,
    cyclic,
    dihedral,
    direct_product,
    element_order,
    element_orders,
    evaluate_word,
    from_table,
    gl2_3,
    read_bindings,
    read_table_file,
    symmetric,
    write_table_file,
)

DESCRIPTORS = ["cyclic:1", "cyclic:6", "cyclic:35", "dihedral:3", "dihedral:7", "symmetric:3",
               "symmetric:4", "gl2_3", "cyclic:7 x symmetric:3", "cyclic:3 x dihedral:7", "cyclic:2 x gl2_3"]


def _check_axioms(g):
    n = g.order
    e = g.identity
    for x in range(n):
        assert sorted(g.table[x]) == list(range(n))
        assert sorted(g.table[y][x] for y in range(n)) == list(range(n))
        assert g.mul(e, x) == x == g.mul(x, e)
        assert g.mul(x, g.inv(x)) == e
    for x, y, z in itertools.product(range(n), repeat=3) if n <= 24 else []:
        assert g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_builtin_groups_satisfy_axioms(desc):
    _check_axioms(builtin_group(desc))


def test_builtin_examples():
    z35 = builtin_group("cyclic:35")
    assert z35.order == 35 and element_order(z35, 1) == 35
    assert gl2_3().order == 48
    d7 = builtin_group("dihedral:7")
    assert d7.order == 14 and not d7.is_abelian


def test_direct_products():
    assert builtin_group("cyclic:7 x symmetric:3").order == 42
    assert builtin_group("cyclic:3 x dihedral:7").order == 42
    g = builtin_group("cyclic:2 x gl2_3")
    assert g.order == 96 and not g.is_abelian


def test_product_index_convention():
    a, b = cyclic(3), symmetric(3)
    p = direct_product(a, b)
    for x, y, u, v in itertools.product(range(3), range(6), range(3), range(6)):
        assert p.mul(x * 6 + y, u * 6 + v) == a.mul(x, u) * 6 + b.mul(y, v)


@pytest.mark.parametrize("pair", [("cyclic:4", "dihedral:3"), ("cyclic:2", "gl2_3"), ("symmetric:3", "cyclic:5")])
def test_product_order_lcm_law(pair):
    a, b = builtin_group(pair[0]), builtin_group(pair[1])
    p = direct_product(a, b)
    for x in range(a.order):
        for y in range(b.order):
            assert element_order(p, x * b.order + y) == math.lcm(element_order(a, x), element_order(b, y))


def test_gl2_3_orders_brute_force():
    mats = [m for m in itertools.product(range(3), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % 3]
    assert len(mats) == 48

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3, (c * e + d * g) % 3, (c * f + d * h) % 3)

    def order(m):
        t, cur = 1, m
        while cur != (1, 0, 0, 1):
            cur, t = mul(cur, m), t + 1
        return t

    assert Counter(element_orders(gl2_3())) == Counter(order(m) for m in mats)


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_order_of_inverse(desc):
    g = builtin_group(desc)
    for x in range(g.order):
        assert element_order(g, x) == element_order(g, g.inv(x))
        assert g.order % element_order(g, x) == 0


def test_element_order_examples():
    assert element_order(cyclic(35), 5) == 7
    g = gl2_3()
    assert element_order(g, g.identity) == 1
    d7 = dihedral(7)
    reflections = [x for x in range(14) if x >= 7]
    assert all(element_order(d7, x) == 2 for x in reflections)


def test_mul_inv_word_examples():
    z5 = cyclic(5)
    assert z5.mul(2, 4) == 1
    assert evaluate_word(z5, "") == z5.identity
    assert cyclic(35).inv(15) == 20


def test_word_evaluation():
    g = symmetric(3)
    b = {"f1": 1, "f2": 3}
    expect = g.mul(g.mul(1, g.power(3, 2)), 1)
    assert evaluate_word(g, "f1 f2^2 f1", b) == expect
    assert evaluate_word(g, "f_1 f_2^{2} f_1", b) == expect
    assert evaluate_word(g, "1", b) == g.identity
    with pytest.raises(UnboundGenerator):
        evaluate_word(g, "f3", b)
    z = cyclic(35)
    assert evaluate_word(z, "15") == 15
    assert evaluate_word(z, "-5") == 30


def test_from_table_examples():
    t = from_table([[0]])
    assert t.order == 1
    klein = from_table([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
    assert all(klein.inv(x) == x for x in range(4))
    c6 = from_table(cyclic(6).table)
    assert Counter(element_orders(c6)) == Counter(element_orders(cyclic(6)))


def test_from_table_errors():
    with pytest.raises(NotLatinSquare):
        from_table([[0, 1], [0, 1]])
    with pytest.raises(NotLatinSquare):
        from_table([[0, 1], [1]])
    with pytest.raises(NoIdentity):
        from_table([[0, 2, 1], [2, 1, 0], [1, 0, 2]])  # x*y = -x-y mod 3
    # Latin square with identity 0 that is not associative
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative):
        from_table(bad)


def test_descriptor_errors():
    with pytest.raises(UnknownDescriptor):
        builtin_group("alternating:4")
    with pytest.raises(OrderTooLarge):
        builtin_group("cyclic:500")
    with pytest.raises(IndexOutOfRange):
        cyclic(5).mul(1, 7)


def test_table_and_binding_files(tmp_path):
    g = builtin_group("cyclic:3 x symmetric:3")
    p = tmp_path / "g.tbl"
    write_table_file(g, p)
    h = read_table_file(p)
    assert h.table == g.table
    assert builtin_group(f"table:{p.name}", base_dir=tmp_path).order == 18
    bp = tmp_path / "b.txt"
    bp.write_text("f_1 = 3\nf2 = 7  # comment\n")
    assert read_bindings(bp) == {"f1": 3, "f2": 7}


@given(st.integers(1, 60), st.integers(0, 200), st.integers(0, 200))
def test_cyclic_is_addition(n, x, y):
    g = cyclic(n)
    assert g.mul(x % n, y % n) == (x + y) % n
