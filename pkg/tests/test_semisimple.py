from fractions import Fraction

import pytest

from qq22.matrices import mat_charpoly
from qq22.polynomials import UniPoly, squarefree
from qq22.semisimple import (
    branch_discriminant,
    closed_form_charpoly,
    cutoff_matrix,
    point_is_degenerate,
    sample_point,
    semisimple_scan,
    zn_minus_az_plus_1_squarefree,
)


def test_cutoff_entries_n4():
    n = 4
    taus = [Fraction(k + 1, 2) for k in range(n + 3)]
    m = cutoff_matrix(n, taus)
    s = sum(v * v for v in taus)
    # spot entries from the five block families
    assert m[0, 1] == n - 1
    assert m[2, 3] == n - 1  # superdiagonal of the middle block
    assert m[n - 1, 0] == -2 * (n - 1) * s
    assert m[n, 1] == (-2 * n - 6) * s
    assert m[n, 2] == 16 * (n - 1)
    assert m[n - 1, n] == n - 1
    j, k = n + 2, n + 4  # two distinct primitive slots
    assert m[j, k] == taus[j - n - 1] * taus[k - n - 1]
    assert m[j, j] == s / 2
    assert m[0, k] == Fraction(2 - n, 2) * taus[k - n - 1]
    assert m[n - 1, k] == -4 * (n - 1) * taus[k - n - 1]
    assert m[j, 1] == (n - 3) * taus[j - n - 1]
    assert m[j, n] == Fraction(2 - n, 8) * taus[j - n - 1]


def test_closed_form_at_zero():
    for n in (4, 6):
        p = closed_form_charpoly(n, [0] * (n + 3))
        expected = [Fraction(0)] * (n + 5)
        expected.append(Fraction(-16 * (n - 1) ** (n - 1)))
        expected.extend([Fraction(0)] * (n - 2))
        expected.append(Fraction(1))
        assert list(p.coeffs) == expected
        assert mat_charpoly(cutoff_matrix(n, [0] * (n + 3))) == p
        assert not squarefree(p)
    # n = 4: z^9 (z^3 - 432)
    p4 = closed_form_charpoly(4, [0] * 7)
    z = UniPoly.x()
    assert p4 == z**9 * (z**3 - 432)


def test_agreement_at_random_points():
    for n, count in ((4, 6), (6, 3)):
        rows = semisimple_scan(n, count, seed=42)
        accepted = [r for r in rows if not r.rejected]
        assert len(accepted) == count
        assert all(r.agrees for r in accepted)
        assert all(r.degree == 2 * n + 4 for r in accepted)


def test_branch_structure_at_zero_cluster():
    # the n+5 branches leaving the zero eigenvalue: the half-order Puiseux
    # coefficient dies because the leading quadratic is nondegenerate, and
    # its discriminant is exactly the closed-form product
    from qq22.semisimple import branch_quadratic

    for n in (4, 6, 8):
        a2, a1, a0 = branch_quadratic(n)
        assert a2 != 0
        assert a1 * a1 - 4 * a2 * a0 == branch_discriminant(n)


def test_seed_reproducibility():
    a = semisimple_scan(4, 5, seed=9)
    b = semisimple_scan(4, 5, seed=9)
    assert [r.as_dict() for r in a] == [r.as_dict() for r in b]


def test_degenerate_point_rejected():
    assert point_is_degenerate([Fraction(1), Fraction(-1)] + [Fraction(k + 2) for k in range(5)])
    assert not point_is_degenerate([Fraction(k + 1) for k in range(7)])


def test_branch_discriminant():
    assert branch_discriminant(4) == 64 * 3 * 6 * 49 == 56448
    assert branch_discriminant(6) == 64 * 5 * 8 * 81 == 207360
    for n in range(4, 20, 2):
        assert branch_discriminant(n) > 0


def test_simple_roots_family():
    assert zn_minus_az_plus_1_squarefree(3, 0)
    assert zn_minus_az_plus_1_squarefree(7, Fraction(5, 3))
    # the branch polynomial from the discriminant analysis at n = 6
    a = Fraction(6 * 6 - 12 - 15, 6 * 6 - 12 - 11)
    assert zn_minus_az_plus_1_squarefree(9, a)
    with pytest.raises(ValueError):
        zn_minus_az_plus_1_squarefree(2, 1)
