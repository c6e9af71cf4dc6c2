import itertools
import random
from fractions import Fraction

import pytest

from qq22 import geometry as geo
from qq22.matrices import ExactMatrix, mat_nullspace, mat_rank


def test_flip_set_combinatorics():
    n = 4
    rng = random.Random(15)
    for _ in range(30):
        i_set = frozenset(v for v in range(n + 3) if rng.random() < 0.4)
        j_set = frozenset(v for v in range(n + 3) if rng.random() < 0.4)
        assert geo.flip_mismatch_count(i_set, j_set, n) == geo.flip_mismatch_count(j_set, i_set, n)
        assert geo.flip_mismatch_count(i_set, i_set, n) == 0
        canon = geo.canonical_flip_set(i_set, n)
        assert geo.canonical_flip_set(canon, n) == canon
        comp = frozenset(range(n + 3)) - i_set
        assert geo.canonical_flip_set(comp, n) == canon


def test_intersection_dims():
    n = 4
    assert geo.intersection_dim(set(), set(), n) == 2
    assert geo.intersection_dim(set(), {0, 1}, n) == 0
    assert geo.intersection_dim(set(), {0, 1, 2}, n) == -1
    assert geo.intersection_dim(set(), {0, 1, 2, 3, 4}, n) == 0
    # dimension is insensitive to complementing either argument
    assert geo.intersection_dim({0}, {1}, n) == geo.intersection_dim(
        frozenset(range(7)) - frozenset({0}), {1}, n
    )


def test_intersection_numbers_spot():
    n = 4
    assert geo.intersection_number({0}, {1}, n) == 1
    assert geo.intersection_number({0}, {0}, n) == 2
    assert geo.intersection_number(set(), {0, 1, 2}, n) == 0


def test_epsilon_gram_signed_identity():
    for n in (4, 6, 8):
        gram = geo.epsilon_gram(n)
        sign = (-1) ** (n // 2)
        for i in range(n + 3):
            for j in range(n + 3):
                assert gram.data[i][j] == (sign if i == j else 0)
        assert set(geo.epsilon_h_pairings(n)) == {Fraction(0)}


def test_plane_class_roundtrip():
    for n in (4, 6):
        assert geo.plane_class_roundtrip(n)


def test_window_class_coefficients_n4():
    hcoef, eps = geo.window_class_h_eps(0, 4)
    assert hcoef == Fraction(1, 4)
    assert eps[0] == eps[1] == Fraction(-1, 2)
    assert all(c == Fraction(1, 2) for c in eps[2:])
    vec = geo.sigma_interval_class(0, 4)
    assert vec[2].re == Fraction(1, 4)
    assert vec[5].re == Fraction(-1, 2) and vec[5].im == 0


def test_window_class_normalization_n6():
    # n = 2 mod 4: the h coefficient stays rational, the primitive
    # coefficients are purely imaginary; window 0 covers slots 0..2
    vec = geo.sigma_interval_class(0, 6)
    assert vec[3].re == Fraction(1, 4) and vec[3].im == 0
    assert vec[8].re == 0 and vec[8].im == Fraction(-1, 2)
    assert vec[11].re == 0 and vec[11].im == Fraction(1, 2)


def test_window_self_intersection_two_routes():
    for n in (4, 6):
        direct, via_basis = geo.window_class_self_check(n)
        assert direct == via_basis


def test_unique_meeting_plane():
    assert geo.only_base_plane_meets_all_windows(4)
    assert geo.only_base_plane_meets_all_windows(6)
    # explicit witness: the single flip {0} misses some window
    assert any(
        geo.intersection_dim({0}, geo.window(i, 4), 4) < 0 for i in range(7)
    )


def test_window_sum_inequality():
    for n in range(4, 66, 2):
        assert geo.window_sum_inequality(n)


def test_plucker_relations_on_spanning_planes():
    rng = random.Random(8)
    rels = geo.plucker_relations()
    for _ in range(5):
        m = ExactMatrix([[Fraction(rng.randint(-4, 4)) for _ in range(7)] for _ in range(3)])
        if mat_rank(m) < 3:
            continue
        p = geo.spanning_pluckers(m)
        assert all(geo.evaluate_relation(r, p) == 0 for r in rels)


def test_spanning_and_cutting_conventions_agree():
    rng = random.Random(80)
    for _ in range(5):
        m = ExactMatrix([[Fraction(rng.randint(-4, 4)) for _ in range(7)] for _ in range(3)])
        if mat_rank(m) < 3:
            continue
        ann = mat_nullspace(m.transpose())
        if len(ann) != 4:
            continue
        b = ExactMatrix([[row[k] for k in range(7)] for row in ann])
        p_cut = geo.cutting_pluckers(b)
        p_span = geo.spanning_pluckers(m)
        scale = None
        for u, v in zip(p_cut, p_span):
            if (u == 0) != (v == 0):
                pytest.fail("support mismatch between conventions")
            if v:
                r = u / v
                if scale is None:
                    scale = r
                assert r == scale


def test_meeting_system_shape_and_solutions():
    ec = geo.plane_meeting_system(range(1, 8))
    assert ec.rows == 28 and ec.cols == 35
    assert len(mat_nullspace(ec)) == 7
    for table in (geo.PLANE_SOLUTION_MAIN, geo.PLANE_SOLUTION_BASE):
        assert all(v == 0 for v in ec.matvec(list(table)))
    # leading coefficient pinned by the displayed first row family
    lams = [Fraction(v) for v in range(1, 8)]
    expect = (
        lams[0]
        * lams[1]
        * lams[2]
        * (lams[0] - lams[1])
        * (lams[1] - lams[2])
        * (lams[2] - lams[0])
    )
    assert ec.data[3][0] == expect
    with pytest.raises(ValueError):
        geo.plane_meeting_system([1, 1, 2, 3, 4, 5, 6])


def test_q_substitution_structure():
    # dividing column I by the cyclic difference product turns the
    # powers-(0,1,2) row of each block into +-1 entries and the
    # powers-(1,2,3) row into +- products of three parameters
    lams = [Fraction(v) for v in range(1, 8)]
    ec = geo.plane_meeting_system(lams)
    signs = []
    for pos, tri in enumerate(geo.TRIPLES[:4]):
        a, b, c = (lams[i] for i in tri)
        q = (a - b) * (b - c) * (c - a)
        unit = ec.data[0][pos] / q
        assert unit in (1, -1)
        signs.append(unit)
        assert ec.data[3][pos] / q == unit * a * b * c
    assert signs == [1, -1, -1, 1]


def test_tables_satisfy_relations():
    rels = geo.plucker_relations()
    for table in (geo.PLANE_SOLUTION_MAIN, geo.PLANE_SOLUTION_BASE):
        assert all(geo.evaluate_relation(r, table) == 0 for r in rels)


def test_base_table_is_base_plane():
    base = geo.cutting_pluckers(geo.base_plane_cut_matrix(range(1, 8)))
    scale = Fraction(base[0]) / geo.PLANE_SOLUTION_BASE[0]
    assert scale != 0
    for u, v in zip(base, geo.PLANE_SOLUTION_BASE):
        assert u == scale * v


def test_conic_pipeline_all_stages():
    report = geo.conic_pipeline()
    failures = [s.name for s in report.stages if not s.ok]
    assert report.ok, failures
    assert len(report.stages) >= 30


def test_pipeline_rejects_other_parameters():
    with pytest.raises(ValueError):
        geo.conic_pipeline([1, 2, 3, 4, 5, 6, 8])


def test_dual_uniqueness():
    report = geo.dual_uniqueness()
    failures = [s.name for s in report.stages if not s.ok]
    assert report.ok, failures


def test_no_conic_through_meeting_points():
    assert geo.no_conic_through_meeting_points(range(1, 8))
    m_rows = 7
    lams = [Fraction(v) for v in range(1, 8)]
    rows = []
    for i in range(m_rows):
        a, b = lams[i], lams[(i + 1) % 7]
        x, y = a * b, -a - b
        rows.append([x * x, y * y, 1, x * y, x, y])
    assert mat_rank(ExactMatrix(rows)) == 6


def test_conjectural_quadric_contains_plane():
    assert geo.conic_plane_in_conjectural_quadric()


def test_quadric_scalings():
    q1, q2 = geo.rescaled_quadric_coeffs(range(1, 8))
    assert [v / 12 for v in q1] == [Fraction(v) for v in geo.QUADRIC_1_SCALED]
    assert [v / 48 for v in q2] == [Fraction(v) for v in geo.QUADRIC_2_SCALED]


def test_dual_number_system_dimension():
    # eliminating the meeting system over the dual numbers leaves seven free
    # parameters, and the constant parts match the rational kernel
    from qq22.matrices import dual_solve
    from qq22.scalars import DualNumber

    ec = geo.plane_meeting_system(range(1, 8))
    dm = ExactMatrix([[DualNumber(v) for v in row] for row in ec.data])
    sol = dual_solve(dm, [DualNumber(0)] * 28)
    assert sol.status == "parametrized"
    assert len(sol.basis) == 7
    rational = mat_nullspace(ec)
    span = {tuple(v) for v in rational}
    for vec in sol.basis:
        consts = [v.a for v in vec]
        assert all(x == 0 for x in ec.matvec(consts))
    assert len(span) == 7
