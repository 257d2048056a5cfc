import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.cyclo import CycloSyntaxError, CycloValue, add, format_value, mul, parse_value, root_of_unity
from core.utils import euler_phi


def _value(draw, n: int) -> CycloValue:
    exponents = draw(st.lists(st.integers(min_value=0, max_value=n - 1), max_size=4))
    terms = {}
    for k in exponents:
        num = draw(st.integers(min_value=-5, max_value=5))
        den = draw(st.integers(min_value=1, max_value=3))
        terms[k] = terms.get(k, 0) + Fraction(num, den)
    return CycloValue.from_terms(n, terms)


@st.composite
def same_field(draw, count: int, max_conductor: int = 60):
    """count values of one field Q(E(n)), n <= max_conductor."""
    n = draw(st.integers(min_value=1, max_value=max_conductor))
    return tuple(_value(draw, n) for _ in range(count))


values = same_field(1).map(lambda t: t[0])
triples = same_field(3)


@settings(max_examples=2500, deadline=None)
@given(triples)
def test_ring_axioms(abc):
    a, b, c = abc
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=1000, deadline=None)
@given(triples)
def test_multiplication_is_associative(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)


@settings(max_examples=1000, deadline=None)
@given(values)
def test_inverse(a):
    if not a:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    assert a * a.inverse() == 1
    assert a / a == 1


@settings(max_examples=1500, deadline=None)
@given(values)
def test_canonical_form_is_minimal_and_reduced(a):
    assert len(a.coefficients) == euler_phi(a.conductor)
    assert a.conductor % 4 != 2
    assert a - a == 0
    assert (a - a).conductor == 1


@settings(max_examples=1000, deadline=None)
@given(values)
def test_print_parse_round_trip(a):
    assert parse_value(format_value(a)) == a
    assert hash(parse_value(str(a))) == hash(a)


@settings(max_examples=1000, deadline=None)
@given(values)
def test_conjugation_is_an_involution(a):
    assert a.conjugate().conjugate() == a
    norm = a * a.conjugate()
    assert norm == norm.conjugate()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("E(4)^2+1", CycloValue(0)),
        ("2*E(7)^3-1/2", CycloValue.from_terms(7, {3: 2, 0: Fraction(-1, 2)})),
        ("E(3)+E(3)^2", CycloValue(-1)),
        ("E(4)^2", CycloValue(-1)),
        ("-E(5)-E(5)^4+E(5)^2+E(5)^3", CycloValue.parse("-2*E(5)-2*E(5)^4-1")),
        (" 3 / 4 ", CycloValue(Fraction(3, 4))),
    ],
)
def test_parse_values(text, expected):
    assert parse_value(text) == expected


def test_identification_across_conductors():
    # ζ_3 = ζ_6^2 = ζ_12^4
    assert root_of_unity(6, 2) == root_of_unity(3)
    assert root_of_unity(12, 4) == root_of_unity(3)
    assert root_of_unity(6, 2).conductor == 3
    # ζ_10 = -ζ_5^3
    assert root_of_unity(10) == -root_of_unity(5, 3)
    assert root_of_unity(10).conductor == 5


def test_square_roots():
    i = root_of_unity(4)
    sqrt2 = root_of_unity(8) + root_of_unity(8, 7)
    assert i * i == -1
    assert sqrt2 * sqrt2 == 2
    b11 = parse_value("E(11)+E(11)^3+E(11)^4+E(11)^5+E(11)^9")
    assert b11 * b11.conjugate() == 3
    assert b11 + b11.conjugate() == -1


def test_add_and_mul_across_fields():
    assert add(root_of_unity(3), root_of_unity(3, 2)) == -1
    assert mul(root_of_unity(4), root_of_unity(4)) == -1
    assert mul(root_of_unity(3), root_of_unity(4)) == root_of_unity(12, 7)
    assert add(root_of_unity(3), root_of_unity(4)).conductor == 12
    assert add(root_of_unity(5), -root_of_unity(5)) == 0
    assert add(root_of_unity(5), -root_of_unity(5)).conductor == 1
    assert mul(CycloValue(Fraction(1, 2)), CycloValue(4)) == 2


@settings(max_examples=1000, deadline=None)
@given(values, values)
def test_add_and_mul_mixed_conductors(a, b):
    s, p = add(a, b), mul(a, b)
    assert s - b == a
    assert p == mul(b, a)
    assert mul(a, add(b, b)) == add(p, p)
    assert math.lcm(a.conductor, b.conductor) % s.conductor == 0
    assert math.lcm(a.conductor, b.conductor) % p.conductor == 0


def test_galois_requires_coprime_exponent():
    z = root_of_unity(5)
    assert z.galois(2) == root_of_unity(5, 2)
    with pytest.raises(ValueError):
        z.galois(5)


@pytest.mark.parametrize("text", ["", "E(0)", "E(5", "1/0", "2**E(3)", "E(3)^", "1 2"])
def test_syntax_errors(text):
    with pytest.raises(CycloSyntaxError) as excinfo:
        parse_value(text)
    assert excinfo.value.position >= 0


def test_rational_helpers():
    assert CycloValue(Fraction(3, 2)).to_rational() == Fraction(3, 2)
    assert root_of_unity(3).to_rational() is None
    assert CycloValue(2).is_positive()
    assert not CycloValue(-2).is_positive()
    assert not (root_of_unity(8) + root_of_unity(8, 7)).is_positive()
    assert format_value(CycloValue(Fraction(-1, 2))) == "-1/2"
