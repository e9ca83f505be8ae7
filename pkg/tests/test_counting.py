"""Product counting: closed formula, exhaustive enumeration, fiber census."""

import itertools
import random

import pytest

from matspan import (
    BudgetExceeded,
    DimensionMismatch,
    InvalidOrder,
    Mat,
    Poly,
    cardinality_formula,
    companion,
    enumerate_products,
    make_prime_field,
    outer_product_fibers,
    spans_full,
)

F2 = make_prime_field(2)
F3 = make_prime_field(3)


def shift_pair(field, m, n):
    a = Mat.zeros(field, m, m)
    ae = list(a.entries)
    for i in range(1, m):
        ae[i * m + (i - 1)] = field.one
    b = Mat.zeros(field, n, n)
    be = list(b.entries)
    for j in range(1, n):
        be[(j - 1) * n + j] = field.one
    return Mat(field, m, m, tuple(ae)), Mat(field, n, n, tuple(be))


# -- closed formula ------------------------------------------------------------


def test_formula_values():
    assert cardinality_formula(2, 0, 5) == 1
    assert cardinality_formula(2, 1, 1) == 2
    assert cardinality_formula(2, 2, 2) == 10
    assert cardinality_formula(2, 2, 3) == 22
    assert cardinality_formula(3, 2, 2) == 33
    assert cardinality_formula(4, 1, 1) == 4
    assert cardinality_formula(9, 1, 2) == 81


def test_formula_rejects_bad_orders():
    for q in (0, 1, 6, 12):
        with pytest.raises(InvalidOrder):
            cardinality_formula(q, 2, 2)
    with pytest.raises(ValueError):
        cardinality_formula(2, -1, 2)


# -- exhaustive enumeration ------------------------------------------------------


def test_enumerate_degenerate_degrees():
    a, b = shift_pair(F2, 2, 2)
    s = Mat.unit(F2, 2, 2, 0, 0)
    # one side identically zero leaves only the zero product
    assert enumerate_products(a, b, s, 0, 2) == 1
    assert enumerate_products(a, b, s, 2, 0) == 1
    assert enumerate_products(a, b, s, 0, 0) == 1


def test_enumerate_matches_formula_on_spanning_triples():
    a, b = shift_pair(F2, 2, 2)
    s = Mat.unit(F2, 2, 2, 0, 0)
    assert spans_full(a, b, s)
    assert enumerate_products(a, b, s, 2, 2) == 10

    a, b = shift_pair(F2, 2, 3)
    s = Mat.unit(F2, 2, 3, 0, 0)
    assert spans_full(a, b, s)
    assert enumerate_products(a, b, s, 2, 3) == 22

    a, b = shift_pair(F3, 2, 2)
    s = Mat.unit(F3, 2, 2, 0, 0)
    assert enumerate_products(a, b, s, 2, 2) == cardinality_formula(3, 2, 2)


def _mul2(x, y):
    # 2x2 matrices over the integers mod 2, row-major 4-tuples
    return (
        (x[0] * y[0] + x[1] * y[2]) % 2,
        (x[0] * y[1] + x[1] * y[3]) % 2,
        (x[2] * y[0] + x[3] * y[2]) % 2,
        (x[2] * y[1] + x[3] * y[3]) % 2,
    )


def test_enumerate_non_spanning_count_against_reference():
    # both factors the same companion matrix and S = I: the products live
    # in the commutative algebra generated by A, which has only 4 elements
    comp_tuple = (0, 1, 1, 1)
    ident = (1, 0, 0, 1)

    def poly_val(c0, c1):
        base = ident if c0 else (0, 0, 0, 0)
        if c1:
            base = tuple((u + v) % 2 for u, v in zip(base, comp_tuple))
        return base

    reference = {
        _mul2(poly_val(x0, x1), poly_val(y0, y1))
        for x0, x1, y0, y1 in itertools.product((0, 1), repeat=4)
    }
    assert len(reference) == 4

    a = companion(Poly.from_ints(F2, [1, 1, 1]))
    s = Mat.identity(F2, 2)
    assert not spans_full(a, a, s)
    assert enumerate_products(a, a, s, 2, 2) == 4
    assert cardinality_formula(2, 2, 2) != 4  # the count detects the failure


def test_enumerate_clamps_high_degrees():
    a, b = shift_pair(F2, 2, 2)
    s = Mat.unit(F2, 2, 2, 0, 0)
    assert enumerate_products(a, b, s, 10, 10) == enumerate_products(a, b, s, 2, 2)


def test_enumerate_monotone_in_degrees():
    a, b = shift_pair(F3, 2, 2)
    s = Mat.unit(F3, 2, 2, 0, 0)
    grid = {
        (h, k): enumerate_products(a, b, s, h, k)
        for h in range(4) for k in range(4)
    }
    for h in range(3):
        for k in range(3):
            assert grid[(h, k)] <= grid[(h + 1, k)]
            assert grid[(h, k)] <= grid[(h, k + 1)]


def test_enumerate_count_same_for_all_spanning_triples():
    # the distinct-product count only depends on (q, h, k) once the span
    # is everything, so two unrelated spanning triples must agree
    rng = random.Random(0xC0047)
    found = []
    while len(found) < 2:
        ents = tuple(F3.elem(rng.randrange(3)) for _ in range(4))
        a = Mat(F3, 2, 2, ents)
        b = Mat(F3, 2, 2, tuple(F3.elem(rng.randrange(3)) for _ in range(4)))
        s = Mat(F3, 2, 2, tuple(F3.elem(rng.randrange(3)) for _ in range(4)))
        if spans_full(a, b, s):
            found.append((a, b, s))
    counts = {enumerate_products(a, b, s, 2, 2) for a, b, s in found}
    assert counts == {cardinality_formula(3, 2, 2)}


def test_enumerate_budget():
    a, b = shift_pair(F3, 2, 2)
    s = Mat.unit(F3, 2, 2, 0, 0)
    with pytest.raises(BudgetExceeded) as exc:
        enumerate_products(a, b, s, 2, 2, budget=10)
    assert exc.value.required == 81
    with pytest.raises(ValueError):
        enumerate_products(a, b, s, -1, 2)
    with pytest.raises(DimensionMismatch):
        enumerate_products(Mat.zeros(F3, 0, 0), b, Mat.zeros(F3, 0, 2), 1, 1)


# -- outer product fibers ----------------------------------------------------------


def test_fiber_sizes_examples():
    assert outer_product_fibers(1, 1, 2) == (3, 1)
    assert outer_product_fibers(2, 2, 3) == (17, 2)
    assert outer_product_fibers(2, 2, 2) == (7, 1)
    assert outer_product_fibers(3, 0, 5) == (125, 0)
    assert outer_product_fibers(0, 2, 3) == (9, 0)


def test_fiber_sizes_extension_field():
    assert outer_product_fibers(1, 1, 4) == (7, 3)
    assert outer_product_fibers(2, 1, 4) == (19, 3)
    assert outer_product_fibers(1, 1, 9) == (17, 8)


def test_fiber_partition_identity():
    for h, k, q in ((1, 1, 2), (2, 2, 2), (2, 2, 3), (1, 2, 5), (2, 1, 4)):
        zero_fiber, nonzero_fiber = outer_product_fibers(h, k, q)
        rank_one = (q ** h - 1) * (q ** k - 1) // (q - 1)
        assert zero_fiber + rank_one * nonzero_fiber == q ** (h + k)


def test_fiber_errors():
    with pytest.raises(InvalidOrder):
        outer_product_fibers(1, 1, 6)
    with pytest.raises(ValueError):
        outer_product_fibers(-1, 1, 2)
    with pytest.raises(BudgetExceeded) as exc:
        outer_product_fibers(30, 1, 2)
    assert exc.value.required == 2 ** 31
    with pytest.raises(BudgetExceeded):
        outer_product_fibers(2, 2, 3, budget=10)
