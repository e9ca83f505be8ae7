import random

import pytest

from matspan import (
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    Overflow,
    canonical_field,
    make_prime_field,
)


def test_characteristic_two_identity():
    f2 = make_prime_field(2)
    assert (f2.one + f2.one).is_zero()


def test_prime_field_inverse():
    f7 = make_prime_field(7)
    assert f7.elem(3).inv() == f7.elem(5)
    f5 = make_prime_field(5)
    assert f5.elem(2).inv() == f5.elem(3)


def test_composite_rejected():
    with pytest.raises(NotPrime):
        make_prime_field(6)
    with pytest.raises(NotPrime):
        make_prime_field(1)


def test_order_bound():
    # 2147483659 is the first prime above 2^31
    with pytest.raises(Overflow):
        make_prime_field(2147483659)
    with pytest.raises(Overflow):
        canonical_field(2, 32)


def test_extension_generator_relation():
    f4 = canonical_field(2, 2)
    g = f4.gen()
    assert g * g == g + f4.one
    f9 = canonical_field(3, 2)
    h = f9.gen()
    assert h * h == f9.elem(2)  # modulus x^2 + 1 forces h^2 = -1


def test_element_constructor_and_order():
    f9 = canonical_field(3, 2)
    els = list(f9.elements())
    assert len(els) == 9
    assert len(set(els)) == 9
    # lexicographic by coefficient vector, constant term compared first
    assert els[0].is_zero()
    assert [e.coeffs for e in els[:4]] == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert els[3] == f9.one


def test_elem_accepts_int_and_sequence():
    f9 = canonical_field(3, 2)
    assert f9.elem(4) == f9.elem(1)
    assert f9.elem([1, 2]).coeffs == (1, 2)
    assert f9.elem([2]).coeffs == (2, 0)
    with pytest.raises(ValueError):
        f9.elem([1, 2, 1])


def test_multiplicative_group_order():
    rng = random.Random(101)
    for p, d in ((2, 1), (3, 1), (5, 1), (2, 3), (3, 2), (5, 2)):
        field = canonical_field(p, d)
        q = field.order
        count = 0
        while count < 500:
            a = field.random_elem(rng)
            if a.is_zero():
                continue
            assert a ** (q - 1) == field.one
            count += 1


def test_negative_exponent():
    f7 = make_prime_field(7)
    a = f7.elem(3)
    assert a ** -1 == a.inv()
    assert a ** -2 == (a * a).inv()


def test_division_by_zero():
    f5 = make_prime_field(5)
    with pytest.raises(DivisionByZero):
        f5.elem(3) / f5.elem(0)
    with pytest.raises(DivisionByZero):
        f5.zero.inv()
    # DivisionByZero doubles as the builtin for generic handlers
    assert issubclass(DivisionByZero, ZeroDivisionError)


def test_field_mismatch():
    # structurally identical fields with distinct identities never mix
    a = make_prime_field(5)
    b = make_prime_field(5)
    with pytest.raises(FieldMismatch):
        a.elem(1) + b.elem(1)
    assert a.elem(1) != b.elem(1)


def test_canonical_registry_is_shared():
    assert canonical_field(3, 2) is canonical_field(3, 2)
    assert canonical_field(2, 1) is canonical_field(2, 1)


def test_arithmetic_laws_random():
    rng = random.Random(77)
    for p, d in ((3, 1), (2, 2), (5, 2)):
        field = canonical_field(p, d)
        for _ in range(200):
            a = field.random_elem(rng)
            b = field.random_elem(rng)
            c = field.random_elem(rng)
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a - a == field.zero
            if not b.is_zero():
                assert (a / b) * b == a
