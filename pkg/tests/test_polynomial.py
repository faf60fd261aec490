from arrangelab.polynomial import IntPolynomial, integer_roots


def poly(*ascending):
    return IntPolynomial.from_coefficients(ascending)


def test_normalization_strips_trailing_zeros():
    assert poly(1, 2, 0, 0) == poly(1, 2)
    assert poly() == IntPolynomial.zero()
    assert not IntPolynomial.zero()


def test_arithmetic():
    p = poly(1, 1)  # 1 + t
    q = poly(-1, 1)  # t - 1
    assert p * q == poly(-1, 0, 1)
    assert p + q == poly(0, 2)
    assert p - p == IntPolynomial.zero()
    assert (p * q).evaluate(3) == 8


def test_monomial_and_linear_root():
    assert IntPolynomial.monomial(2, 3) == poly(0, 0, 0, 2)
    assert IntPolynomial.linear_root(4) == poly(-4, 1)
    assert IntPolynomial.monomial(0, 5) == IntPolynomial.zero()


def test_text_rendering():
    assert poly(0, 2, -4, 1).text() == "t^3 - 4t^2 + 2t"
    assert poly(0, -3, 6, -4, 1).text() == "t^4 - 4t^3 + 6t^2 - 3t"
    assert poly(1,).text() == "1"
    assert poly(-1, 1).text() == "t - 1"
    assert IntPolynomial.zero().text() == "0"


def test_integer_roots_split():
    # t(t-1)(t-2)(t-3)^2
    p = IntPolynomial.monomial(1, 1)
    for r in (1, 2, 3, 3):
        p = p * IntPolynomial.linear_root(r)
    assert integer_roots(p) == (0, 1, 2, 3, 3)
    assert p == poly(0, 18, -39, 29, -9, 1)


def test_integer_roots_irreducible():
    assert integer_roots(poly(1, 1, 1)) is None  # t^2 + t + 1
    assert integer_roots(poly(2, 0, 1)) is None  # t^2 + 2
    assert integer_roots(poly(1, 2)) is None  # not monic


def test_integer_roots_negative():
    p = IntPolynomial.linear_root(-2) * IntPolynomial.linear_root(5)
    assert integer_roots(p) == (-2, 5)
