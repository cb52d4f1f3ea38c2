from fractions import Fraction

import mpmath as mp
import pytest

from src.bbs.spectral import (
    _within,
    build_curve_combinatorial,
    build_curve_recurrence,
    combinatorial_polynomials,
    continuant,
    curve_polynomials,
    cyclic_bracket,
    enumerate_A,
    enumerate_A_prime,
    extrapolate,
    find_roots,
    period_asymptotics,
    required_prec,
    sigma_branch,
    sigma_consistent,
    verify_renkon,
    xi_closed_form,
    xi_estimate,
    xi_identity,
)
from src.bbs.state import parse_state, to_blocks
from src.bbs.tropical import ultra_invariants
from src.core.errors import EnumerationBoundError, PrecisionError, RangeError
from src.models.combinatorics import UltraInvariants

LADDER = (0.1, 0.05, 0.02)


def test_two_site_curve_by_hand():
    # a_1 = I_0 + V_1 = 6, a_2 = I_1 + V_0 = 5, b_1 = I_1 V_1 = 10, b_2 = I_0 V_0 = 3
    I, V = [1, 2], [3, 5]
    delta, yN1, m2 = curve_polynomials(I, V)
    assert delta == [17, -11, 1]
    assert yN1 == [50, -10]
    assert m2 == 30
    assert combinatorial_polynomials(I, V) == (delta, yN1, m2)
    assert cyclic_bracket(I, V) == delta


@pytest.mark.parametrize("N", range(1, 8))
def test_expansions_agree_exactly(N):
    I = [Fraction(k + 2, 3) for k in range(N)]
    V = [Fraction(2, k + 5) for k in range(N)]
    delta, yN1, m2 = curve_polynomials(I, V)
    assert combinatorial_polynomials(I, V) == (delta, yN1, m2)
    bracket = cyclic_bracket(I, V)
    assert bracket + [0] * (len(delta) - len(bracket)) == delta


def test_continuant_is_the_linear_recurrence():
    I, V = [1, 2, 4], [3, 5, 7]
    # ((1..1)) = lambda - a_1 with a_1 = I_2 + V_1 = 9
    assert continuant(I, V, 1, 1) == [-9, 1]
    assert continuant(I, V, 2, 1) == [1]


@pytest.mark.parametrize("N, count", [(3, 4), (4, 7), (5, 11), (10, 123)])
def test_covering_counts(N, count):
    assert len(enumerate_A(N)) == count


def test_linear_coverings():
    assert enumerate_A_prime(4) == [(), (3,), (4,)]


def test_required_prec():
    assert required_prec(29, 0.1) == 901
    assert required_prec(29, 0.1, factor=1.0, guard=0) == 419


def test_low_precision_is_refused(graph_blocks):
    with pytest.raises(PrecisionError) as info:
        build_curve_recurrence(graph_blocks, 0.1, prec=100)
    assert info.value.suggested_prec == 901


def test_enumeration_bound(graph_blocks):
    with pytest.raises(EnumerationBoundError):
        build_curve_combinatorial(graph_blocks, 0.1, bound=2)


def test_recurrence_and_coverings_agree_numerically(graph_blocks):
    rec = build_curve_recurrence(graph_blocks, 0.1)
    comb = build_curve_combinatorial(graph_blocks, 0.1)
    with mp.workprec(rec.prec):
        tol = mp.ldexp(1, -(rec.prec // 2))
        for x, y in zip(rec.delta + rec.yN1, comb.delta + comb.yN1):
            assert abs(x - y) <= tol * max(abs(x), abs(y))


def test_roots_interlace(graph_blocks):
    c = build_curve_recurrence(graph_blocks, 0.1)
    roots = find_roots(c, hint=ultra_invariants(graph_blocks))
    assert len(roots.lam) == 3 and len(roots.lamPM) == 6 and len(roots.mu) == 2
    assert all(x > 0 for x in roots.lamPM)
    assert list(roots.lamPM) == sorted(roots.lamPM)
    for j, lam in enumerate(roots.lam):
        assert roots.lamPM[2 * j] < lam < roots.lamPM[2 * j + 1]
    assert roots.lam[0] < roots.mu[0] < roots.lam[1] < roots.mu[1] < roots.lam[2]
    assert sigma_consistent(roots)


def test_sigma_branch():
    assert [sigma_branch(j, 2) for j in range(3)] == ["-", "+", "-"]


def test_renkon_graph_example(graph_blocks):
    report = verify_renkon(graph_blocks, LADDER)
    assert report.ok
    assert report.rows == (7, 4, 1)
    for series in (report.limit_minus, report.limit_plus, report.limit_lam):
        assert series == pytest.approx((7, 4, 1), rel=0.02)
    assert report.u_limit == pytest.approx((12, 5, 1), abs=0.1)
    assert report.v_limit == pytest.approx((6, 1), abs=0.1)
    assert report.m_valuation[0] == pytest.approx(14.5)


def test_extrapolate_removes_linear_term():
    assert extrapolate([0.1, 0.05, 0.02], [3.2, 3.1, 3.04]) == pytest.approx(3.0)
    assert extrapolate([0.1], [2.5]) == 2.5


def test_period_asymptotics_graph_example(graph_blocks):
    asym = period_asymptotics(ultra_invariants(graph_blocks))
    half = Fraction(1, 2)
    assert asym.Bhat == ((-11, -11 * half), (-11 * half, -20))
    assert asym.rhat == (11 * half, 17 * half)
    assert asym.nuhat == (3 * half, 3)
    assert asym.bk == (3, 9)
    assert asym.ck == (11 * half, 23 * half)
    assert asym.sigma == (Fraction(-36, 253), Fraction(-6, 23))


def test_period_matrix_row_sums(graph_blocks):
    asym = period_asymptotics(ultra_invariants(graph_blocks))
    for j, r in enumerate(asym.rhat):
        assert r == -sum(row[j] for row in asym.Bhat) / 3
    assert abs(asym.Bhat[0][0]) > abs(asym.Bhat[1][0])


def test_period_asymptotics_needs_two_solitons():
    with pytest.raises(RangeError):
        period_asymptotics(UltraInvariants(U=(3,), P=(), M=Fraction(-5), L=10))


def test_xi_two_solitons(two_soliton_blocks):
    assert xi_closed_form(two_soliton_blocks, 1) == -6
    est = xi_estimate(two_soliton_blocks, 1, LADDER)
    assert est.closed_form == -6
    assert est.limit == pytest.approx(-6, rel=0.05)
    assert est.identity_error < 1e-20


def test_xi_identity_three_solitons(graph_blocks):
    c = build_curve_recurrence(graph_blocks, 0.1)
    roots = find_roots(c)
    with mp.workprec(c.prec):
        for product, quotient in xi_identity(c, roots):
            assert abs(product - quotient) <= mp.mpf("1e-12") * abs(quotient)
    assert xi_closed_form(graph_blocks, 1) == -5
    assert xi_closed_form(graph_blocks, 2) is None


def test_xi_index_range(graph_blocks):
    with pytest.raises(RangeError):
        xi_estimate(graph_blocks, 3, LADDER)


@pytest.mark.parametrize(
    "text, j, expected",
    [
        ("Q=2,3,1;W=4,6,2", 1, -3),
        ("Q=2,3,1;W=4,6,2", 2, -3),
        ("Q=1,2,1;W=3,5,3", 1, -2),
        ("Q=1,2,1;W=3,5,3", 2, -4),
    ],
)
def test_xi_three_solitons_closed_form(text, j, expected):
    b = to_blocks(parse_state(text))
    assert xi_closed_form(b, j) == expected
    est = xi_estimate(b, j, LADDER)
    assert est.closed_form == expected
    assert est.limit == pytest.approx(expected, rel=0.05)


def test_xi_closed_form_out_of_range(graph_blocks):
    assert xi_closed_form(graph_blocks, 0) is None
    assert xi_closed_form(graph_blocks, 3) is None


def test_renkon_checks_invariants_and_branches(graph_blocks, two_soliton_blocks):
    for b in (graph_blocks, two_soliton_blocks):
        report = verify_renkon(b, LADDER)
        assert report.invariants_ok
        assert report.branches_ok
        assert report.ok


def test_within_is_relative_to_exact_value():
    assert _within((12.1, 1.005), (12, 1), 0.01)
    assert not _within((12.5, 1.0), (12, 1), 0.02)
    assert not _within((0.05,), (0,), 0.02)
    assert not _within((1.0,), (1, 2), 0.5)
