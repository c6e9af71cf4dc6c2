import random
from fractions import Fraction

import pytest

from qq22.polynomials import UniPoly, poly_gcd, squarefree


def test_basic_arithmetic():
    x = UniPoly.x()
    p = (x - 1) * (x + 2)
    assert p.coeffs == (-2, 1, 1)
    assert p(1) == 0 and p(-2) == 0
    assert (p - p).is_zero()
    assert p.degree == 2
    assert (x**5).coeffs == (0, 0, 0, 0, 0, 1)


def test_trailing_zeros_stripped():
    assert UniPoly((1, 0, 0)).coeffs == (1,)
    assert UniPoly((0, 0)).is_zero()
    assert UniPoly(()).degree == -1


def test_divmod_and_gcd():
    x = UniPoly.x()
    p = (x - 1) * (x - 2) * (x + 3)
    q, r = p.divmod(x - 2)
    assert r.is_zero()
    assert q == (x - 1) * (x + 3)
    g = poly_gcd(p, (x - 2) * (x + 5))
    assert g == (x - 2).monic()


def test_squarefree_examples():
    x = UniPoly.x()
    assert not squarefree(x * x)
    assert squarefree(x**3 - UniPoly.constant(Fraction(4, 3)) * x + 1)
    assert not squarefree((x - 1) * (x - 1) * (x + 2))
    with pytest.raises(ValueError):
        squarefree(UniPoly.zero())


def test_derivative_and_eval():
    x = UniPoly.x()
    p = 3 * x**4 - x + 7
    assert p.derivative() == 12 * x**3 - 1
    assert p(Fraction(1, 2)) == Fraction(3, 16) - Fraction(1, 2) + 7


def test_random_ring_axioms():
    rng = random.Random(3)

    def rand_poly():
        return UniPoly([Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(0, 5))])

    for _ in range(40):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        if not b.is_zero():
            q, r = a.divmod(b)
            assert q * b + r == a
            assert r.degree < b.degree
