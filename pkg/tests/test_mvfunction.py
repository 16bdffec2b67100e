import random

import pytest

from vcbent.cyclotomic import CycInt, xi
from vcbent.mvfunction import (
    GF3Polynomial,
    MvFunction,
    NotASign,
    add_constant,
    digits_of,
    eval_polynomial,
    index_of,
    scalar_product,
    sign_of,
    tensor_sum,
    try_from_sign,
    un_vec,
    vec_columns,
)

X1X2 = MvFunction.from_digits(3, 2, "000012021")


def test_index_convention_x1_most_significant():
    # f = x1·x2 pinned to [000 012 021] fixes the digit order
    assert [digits_of(x, 3, 2) for x in range(4)] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert index_of((1, 2), 3) == 5
    values = [(digits_of(x, 3, 2)[0] * digits_of(x, 3, 2)[1]) % 3 for x in range(9)]
    assert MvFunction(3, 2, values) == X1X2


def test_scalar_product():
    assert scalar_product(4, 4, 3, 2) == 2  # (1,1)·(1,1)
    assert scalar_product(5, 7, 3, 2) == (1 * 2 + 2 * 1) % 3


def test_sign_of_examples():
    w = xi(3)
    one = CycInt.one(3)
    assert list(sign_of(X1X2).entries) == [one, one, one, one, w, w * w, one, w * w, w]
    assert all(e == one for e in sign_of(MvFunction.constant(3, 0, 2)).entries)
    f = MvFunction.from_digits(3, 2, "001010022")
    assert list(sign_of(f).entries) == [one, one, w, one, w, one, one, w * w, w * w]


def test_try_from_sign_inverse_and_failures():
    rng = random.Random(11)
    for _ in range(25):
        f = MvFunction(3, 2, [rng.randrange(3) for _ in range(9)])
        assert try_from_sign(sign_of(f)) == f
    bad = [CycInt.zero(3)] * 8 + [3 * xi(3)]
    with pytest.raises(NotASign) as err:
        try_from_sign(bad)
    assert err.value.index == 0
    with pytest.raises(NotASign) as err:
        try_from_sign([-CycInt.one(3), CycInt.one(3), CycInt.one(3)])
    assert err.value.index == 0 and err.value.value == -CycInt.one(3)


def test_add_constant_examples():
    assert add_constant(X1X2, 1) == MvFunction.from_digits(3, 2, "111120102")
    assert add_constant(X1X2, 0) == X1X2
    assert add_constant(X1X2, 2) == MvFunction.from_digits(3, 2, "222201210")


def test_add_constant_rotates_sign_vector():
    rng = random.Random(21)
    for _ in range(10):
        f = MvFunction(3, 2, [rng.randrange(3) for _ in range(9)])
        for c in (1, 2):
            rotated = [e.mul_root(c) for e in sign_of(f).entries]
            assert list(sign_of(add_constant(f, c)).entries) == rotated


def test_tensor_sum_against_double_loop():
    got = tensor_sum(X1X2, X1X2)
    assert got.n == 4 and len(got.values) == 81
    for x in range(9):
        for y in range(9):
            assert got.values[x * 9 + y] == (X1X2.values[x] + X1X2.values[y]) % 3


def test_tensor_sum_neutral_and_1place():
    neutral = MvFunction.constant(3, 0)
    f2 = MvFunction.from_digits(3, 2, "021201111")
    assert tensor_sum(neutral, f2) == f2
    line = MvFunction.from_digits(3, 1, "012")
    assert tensor_sum(line, line) == MvFunction.from_digits(3, 2, "012120201")


def test_tensor_sum_associative():
    rng = random.Random(5)
    fs = [MvFunction(3, 1, [rng.randrange(3) for _ in range(3)]) for _ in range(3)]
    assert tensor_sum(tensor_sum(fs[0], fs[1]), fs[2]) == tensor_sum(fs[0], tensor_sum(fs[1], fs[2]))


def test_eval_polynomial_table_class_examples():
    assert eval_polynomial(GF3Polynomial.parse("x1*x2"), 2) == X1X2
    assert eval_polynomial(GF3Polynomial.parse("x1*x2 + x2 + 2*x2^2"), 2) == MvFunction.from_digits(
        3, 2, "001010022"
    )
    assert eval_polynomial(
        GF3Polynomial.parse("2*x1*x2 + 2*x1 + 2*x2^2 + 1"), 2
    ) == MvFunction.from_digits(3, 2, "100010220")


def test_polynomial_rejects_malformed_terms():
    with pytest.raises(ValueError):
        GF3Polynomial.parse("x1^3")
    with pytest.raises(ValueError):
        GF3Polynomial.parse("5*x1")
    with pytest.raises(ValueError):
        GF3Polynomial.parse("x1 * + x2")
    with pytest.raises(ValueError):
        eval_polynomial(GF3Polynomial.parse("x3"), 2)


def test_polynomial_str_round_trip():
    poly = GF3Polynomial.parse("2*x1*x2^2 + x2 + 1")
    again = GF3Polynomial.parse(str(poly))
    assert eval_polynomial(poly, 2) == eval_polynomial(again, 2)


def test_vec_columns_and_unvec():
    m = [["a", "b"], ["c", "d"]]
    assert vec_columns(m) == ["a", "c", "b", "d"]
    assert un_vec(vec_columns(m), 2) == m
    exponents = [[(i * j) % 3 for j in range(3)] for i in range(3)]
    assert vec_columns(exponents) == list(X1X2.values)
    with pytest.raises(ValueError):
        vec_columns([[1, 2], [3]])
    with pytest.raises(ValueError):
        un_vec([1, 2, 3], 2)


def test_function_line_round_trip():
    line = X1X2.to_line()
    assert line == "3 2 000012021"
    assert MvFunction.from_line(line) == X1X2
    with pytest.raises(ValueError):
        MvFunction.from_line("3 2")


def test_value_validation():
    with pytest.raises(ValueError):
        MvFunction(3, 1, (0, 1, 3))
    with pytest.raises(ValueError):
        MvFunction(3, 2, (0,) * 8)
