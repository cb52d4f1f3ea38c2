"""Verification suites behind `pbbs verify --suite NAME`.

Each suite is a list of named checks. A check returns how many cases it
looked at and the failures it found; it never raises. Every check draws
from its own generator seeded with the suite seed, so results do not
depend on check order. `quick=True` shrinks every sweep so the suites
can run inside the test run.
"""

import logging
import traceback
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

import mpmath as mp
import numpy as np

from src.bbs.elimination import evolve_marked, same_rotation_class, ten_eliminate, young_diagram
from src.bbs.graph import build_graph, heights, under_sums
from src.bbs.periods import analyze_periods, orbit_table, relative_period_of_eliminated
from src.bbs.spectral import (
    build_curve_combinatorial,
    build_curve_recurrence,
    combinatorial_polynomials,
    curve_polynomials,
    cyclic_bracket,
    enumerate_A,
    period_asymptotics,
    verify_renkon,
    xi_estimate,
)
from src.bbs.state import (
    canonical_rotation,
    enumerate_states,
    evolve_balls,
    evolve_balls_literal,
    evolve_blocks,
    parse_state,
    random_state,
    to_blocks,
)
from src.bbs.toda import bridge_check
from src.bbs.tropical import (
    P_from_young_limit,
    P_min,
    U_from_young,
    U_min,
    brute_force_min,
    interleave,
    p_path,
    ultra_invariants,
)
from src.core.constants import Constants
from src.core.errors import PBBSError
from src.models.api import CheckResult, SuiteReport
from src.models.state import BlockState, BoxString, MarkedState

logger = logging.getLogger(__name__)

Outcome = Tuple[int, List[str]]
Check = Callable[[np.random.Generator, bool], Outcome]

EPS_LADDER = (0.1, 0.05, 0.02)
MAX_REPORTED = 5


def _random_blocks(rng: np.random.Generator, N: int, q_max: int = 4, w_max: int = 7) -> BlockState:
    while True:
        Q = tuple(int(v) for v in rng.integers(1, q_max + 1, N))
        W = tuple(int(v) for v in rng.integers(1, w_max + 1, N))
        if sum(Q) < sum(W):
            return BlockState(Q=Q, W=W)


def _random_states(rng: np.random.Generator, count: int, L_max: int, L_min: int = 3) -> List[BoxString]:
    return [random_state(rng, int(rng.integers(L_min, L_max + 1))) for _ in range(count)]


def _class_representatives(L_max: int, L_min: int = 3):
    for L in range(L_min, L_max + 1):
        for text in enumerate_states(L):
            if canonical_rotation(text) == text:
                yield BoxString(bits=text)


# ---------------------------------------------------------------------------
# combinatorics
# ---------------------------------------------------------------------------


def _lucas(N: int) -> int:
    # trace of the Fibonacci matrix power counts matchings of the N-cycle
    return int(np.trace(np.linalg.matrix_power(np.array([[1, 1], [1, 0]], dtype=np.int64), N)))


def check_covering_count(rng: np.random.Generator, quick: bool) -> Outcome:
    sizes = range(3, 11 if quick else 16)
    failures = [
        f"N={N}: {len(enumerate_A(N))} sets, expected {_lucas(N)}"
        for N in sizes
        if len(enumerate_A(N)) != _lucas(N)
    ]
    return len(sizes), failures


def check_exact_expansions(rng: np.random.Generator, quick: bool) -> Outcome:
    """Recurrence, domino coverings and the bracket form agree exactly over the rationals."""
    failures = []
    sizes = range(1, 7 if quick else 10)
    for N in sizes:
        I = [Fraction(int(p), int(q)) for p, q in zip(rng.integers(1, 9, N), rng.integers(1, 9, N))]
        V = [Fraction(int(p), int(q)) for p, q in zip(rng.integers(1, 9, N), rng.integers(1, 9, N))]
        delta, yN1, m2 = curve_polynomials(I, V)
        delta_c, yN1_c, m2_c = combinatorial_polynomials(I, V)
        bracket = cyclic_bracket(I, V)
        bracket = bracket + [0] * (len(delta) - len(bracket))
        if delta != delta_c or yN1 != yN1_c or m2 != m2_c:
            failures.append(f"N={N}: recurrence and covering sums differ")
        if delta != bracket:
            failures.append(f"N={N}: bracket form differs from Delta")
    return len(sizes), failures


def check_polynomial_equivalence(rng: np.random.Generator, quick: bool) -> Outcome:
    failures = []
    eps = 0.1
    sizes = range(1, 7 if quick else 13)
    for N in sizes:
        b = _random_blocks(rng, N)
        rec = build_curve_recurrence(b, eps)
        comb = build_curve_combinatorial(b, eps, prec=rec.prec, bound=max(N, 1))
        with mp.workprec(rec.prec):
            tol = mp.ldexp(mp.mpf(1), -(rec.prec // 2))
            for name, p, q in (("Delta", rec.delta, comb.delta), ("y", rec.yN1, comb.yN1)):
                for k, (x, y) in enumerate(zip(p, q)):
                    if abs(x - y) > tol * max(abs(x), abs(y)):
                        failures.append(f"N={N} {b.text()}: {name} coefficient {k} differs")
    return len(sizes), failures


def check_minplus_vs_bruteforce(rng: np.random.Generator, quick: bool) -> Outcome:
    failures = []
    cases = 0
    for N in range(1, 7):
        for _ in range(3 if quick else 20):
            b = _random_blocks(rng, N)
            for k in range(N):
                cases += 1
                if U_min(b, k) != brute_force_min(interleave(b), N - k, cyclic=True):
                    failures.append(f"{b.text()}: U_{k}")
            for k in range(N - 1):
                cases += 1
                if P_min(b, k) != brute_force_min(p_path(b), N - 1 - k, cyclic=False):
                    failures.append(f"{b.text()}: P_{k}")
    return cases, failures


def check_graph_heights(rng: np.random.Generator, quick: bool) -> Outcome:
    """H_1 + ... + H_k = U_{N-k} and the N lowest trees carry the Young rows."""
    failures = []
    cases = 0
    for x in _class_representatives(10 if quick else 16):
        cases += 1
        b = to_blocks(x)
        d = young_diagram(x)
        U = U_from_young(d)
        H = heights(build_graph(b))
        if H[: b.N] != tuple(reversed(d.rows)):
            failures.append(f"{x.bits}: heights {H} vs rows {d.rows}")
            continue
        prefix = np.cumsum(H[: b.N]).tolist()
        if prefix != [U[b.N - k] for k in range(1, b.N + 1)]:
            failures.append(f"{x.bits}: height sums {prefix} vs U {U}")
    return cases, failures


def check_graph_trees(rng: np.random.Generator, quick: bool) -> Outcome:
    """Every tree has one star, links equal to its foot values, and balanced Und(t) sums."""
    failures = []
    states = _random_states(rng, 100 if quick else 1000, 30)
    for x in states:
        g = build_graph(to_blocks(x))
        for t in g.trees:
            if t.stars != 1:
                failures.append(f"{x.bits}: tree {t.id} has {t.stars} stars")
            if t.links != sum(t.foot_values):
                failures.append(f"{x.bits}: tree {t.id} links {t.links} vs feet {sum(t.foot_values)}")
        for tree_id, (height_sum, foot_sum) in under_sums(g).items():
            if height_sum != foot_sum:
                failures.append(f"{x.bits}: Und({tree_id}) heights {height_sum} vs feet {foot_sum}")
    return len(states), failures


# ---------------------------------------------------------------------------
# evolution
# ---------------------------------------------------------------------------


def _blocks_agree(x: BoxString) -> bool:
    return evolve_blocks(to_blocks(x)) == to_blocks(evolve_balls(x))


def check_blocks_exhaustive(rng: np.random.Generator, quick: bool) -> Outcome:
    cases = 0
    failures = []
    for L in range(3, (10 if quick else 18) + 1):
        for text in enumerate_states(L):
            cases += 1
            if not _blocks_agree(BoxString(bits=text)):
                failures.append(text)
    return cases, failures


def check_blocks_random(rng: np.random.Generator, quick: bool) -> Outcome:
    states = _random_states(rng, 200 if quick else 10000, 60 if quick else 200)
    return len(states), [x.bits for x in states if not _blocks_agree(x)]


def check_literal_rule(rng: np.random.Generator, quick: bool) -> Outcome:
    states = _random_states(rng, 50 if quick else 500, 40)
    failures = []
    for x in states:
        expected = evolve_balls(x)
        for order in ("ltr", "rtl"):
            if evolve_balls_literal(x, order) != expected:
                failures.append(f"{x.bits} ({order})")
    return len(states), failures


def check_young_conservation(rng: np.random.Generator, quick: bool) -> Outcome:
    states = _random_states(rng, 30 if quick else 1000, 60)
    steps = 20 if quick else 100
    failures = []
    for x in states:
        d = young_diagram(x)
        current = x
        for t in range(1, steps + 1):
            current = evolve_balls(current)
            if young_diagram(current) != d:
                failures.append(f"{x.bits} at t={t}")
                break
    return len(states), failures


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def _young_vs_minplus(quick: bool, which: str) -> Outcome:
    cases = 0
    failures = []
    for L in range(3, (10 if quick else 18) + 1):
        for text in enumerate_states(L):
            cases += 1
            x = BoxString(bits=text)
            b = to_blocks(x)
            if which == "U":
                young, minplus = U_from_young(young_diagram(x)), ultra_invariants(b).U
            else:
                young, minplus = P_from_young_limit(b), ultra_invariants(b).P
            if young != minplus:
                failures.append(f"{text}: Young {young} vs min-plus {minplus}")
    return cases, failures


def check_U_identity(rng: np.random.Generator, quick: bool) -> Outcome:
    return _young_vs_minplus(quick, "U")


def check_P_identity(rng: np.random.Generator, quick: bool) -> Outcome:
    return _young_vs_minplus(quick, "P")


# ---------------------------------------------------------------------------
# renkon / toda
# ---------------------------------------------------------------------------


def check_renkon(rng: np.random.Generator, quick: bool) -> Outcome:
    states = [parse_state(Constants.GRAPH_EXAMPLE)]
    states += _random_states(rng, 2 if quick else 20, 14 if quick else 40, L_min=6)
    failures = []
    for x in states:
        report = verify_renkon(to_blocks(x), EPS_LADDER)
        if not report.ok:
            failures.append(f"{x.bits}: rows {report.rows}, relative error {report.max_relative_error:.3e}")
    return len(states), failures


def check_toda_bridge(rng: np.random.Generator, quick: bool) -> Outcome:
    states = _random_states(rng, 3 if quick else 20, 30, L_min=6)
    failures = []
    for x in states:
        report = bridge_check(to_blocks(x), EPS_LADDER, steps=10)
        worst = max(report.max_error_Q[-1], report.max_error_W[-1])
        if not report.monotone or worst >= 0.5:
            failures.append(
                f"{x.bits}: monotone={report.monotone}, error at eps={EPS_LADDER[-1]} is {worst:.3f}"
            )
    return len(states), failures


# ---------------------------------------------------------------------------
# periods
# ---------------------------------------------------------------------------


def check_period_formulas(rng: np.random.Generator, quick: bool) -> Outcome:
    cases = 0
    failures = []
    for L in range(3, (10 if quick else 16) + 1):
        for key, report in orbit_table(L).items():
            if report.internal_symmetry:
                continue
            cases += 1
            found = (report.f_formula, report.r_formula, report.r_sigma)
            expected = (report.f_brute, report.r_brute, report.r_brute)
            if found != expected:
                failures.append(f"{key}: (f, r, r_sigma) {found} vs brute force {expected}")
    return cases, failures


def check_r_divides_f(rng: np.random.Generator, quick: bool) -> Outcome:
    cases = 0
    failures = []
    for L in range(3, (10 if quick else 14) + 1):
        for key, report in orbit_table(L).items():
            cases += 1
            if report.f_brute % report.r_brute:
                failures.append(f"{key}: r={report.r_brute} does not divide f={report.f_brute}")
    return cases, failures


def check_graph_example(rng: np.random.Generator, quick: bool) -> Outcome:
    report = analyze_periods(parse_state(Constants.GRAPH_EXAMPLE))
    found = (report.f_brute, report.r_brute, report.f_formula, report.r_formula, report.r_sigma)
    if found != (7337, 253, 7337, 253, 253):
        return 1, [f"graph example gave (f, r, f_formula, r_formula, r_sigma) = {found}"]
    return 1, []


def check_eliminated_period(rng: np.random.Generator, quick: bool) -> Outcome:
    cases = 0
    failures = []
    for x in _class_representatives(10 if quick else 14):
        pair = relative_period_of_eliminated(x)
        if pair is None:
            continue
        cases += 1
        if pair[0] != pair[1]:
            failures.append(f"{x.bits}: r={pair[0]} but f(El x)={pair[1]}")
    return cases, failures


ELIMINATION_COMMUTE_STEPS = 10


def check_elimination_commutes(rng: np.random.Generator, quick: bool) -> Outcome:
    states = _random_states(rng, 20 if quick else 300, 30)
    failures = []
    for x in states:
        current = x
        marked = ten_eliminate(MarkedState(state=x))
        for n in range(1, ELIMINATION_COMMUTE_STEPS + 1):
            current = evolve_balls(current)
            marked = evolve_marked(marked)
            if not same_rotation_class(ten_eliminate(MarkedState(state=current)), marked):
                failures.append(f"{x.bits} at n={n}")
                break
    return len(states), failures


# ---------------------------------------------------------------------------
# sigma
# ---------------------------------------------------------------------------


def _sigma_states(rng: np.random.Generator, quick: bool) -> List[BoxString]:
    states = _random_states(rng, 50 if quick else 1000, 40, L_min=6)
    return [x for x in states if len(young_diagram(x).rows) >= 2]


def check_equal_rows(rng: np.random.Generator, quick: bool) -> Outcome:
    """varsigma_k = varsigma_{k+1} exactly when the matching adjacent rows are equal."""
    failures = []
    states = _sigma_states(rng, quick)
    for x in states:
        rows = young_diagram(x).rows
        sigma = period_asymptotics(ultra_invariants(to_blocks(x))).sigma
        for k in range(len(sigma) - 1):
            if (sigma[k] == sigma[k + 1]) != (rows[k + 1] == rows[k + 2]):
                failures.append(f"{x.bits}: rows {rows}, sigma {[str(s) for s in sigma]}")
                break
    return len(states), failures


def check_period_matrix(rng: np.random.Generator, quick: bool) -> Outcome:
    """B symmetric, r = -(1/N) column sums of B, and |B_jj| > |B_ij| below the diagonal."""
    failures = []
    states = _sigma_states(rng, quick)
    for x in states:
        u = ultra_invariants(to_blocks(x))
        asym = period_asymptotics(u)
        B = asym.Bhat
        g = u.g
        if any(B[i][j] != B[j][i] for i in range(g) for j in range(g)):
            failures.append(f"{x.bits}: B not symmetric")
        sums = tuple(-sum(B[i][j] for i in range(g)) / (g + 1) for j in range(g))
        if sums != asym.rhat:
            failures.append(
                f"{x.bits}: r {[str(v) for v in asym.rhat]} vs column sums {[str(v) for v in sums]}"
            )
        if any(abs(B[j][j]) <= abs(B[i][j]) for j in range(g) for i in range(j + 1, g)):
            failures.append(f"{x.bits}: diagonal does not dominate")
    return len(states), failures


# ---------------------------------------------------------------------------
# xi
# ---------------------------------------------------------------------------

XI_TWO_SOLITONS = "Q=3,1;W=5,6"
XI_THREE_SOLITONS = "Q=2,1,1;W=3,4,6"
# (state, j) pairs covering the two-block, three-block and generic closed forms
XI_CLOSED_FORM_CASES = [
    (XI_TWO_SOLITONS, 1),
    ("Q=2,3,1;W=4,6,2", 2),
    ("Q=1,2,1;W=3,5,3", 2),
    ("Q=2,3,1;W=4,6,2", 1),
    (Constants.GRAPH_EXAMPLE, 1),
]


def check_xi_closed_form(rng: np.random.Generator, quick: bool) -> Outcome:
    cases = XI_CLOSED_FORM_CASES[:2] if quick else XI_CLOSED_FORM_CASES
    failures = []
    for text, j in cases:
        b = to_blocks(parse_state(text))
        est = xi_estimate(b, j, EPS_LADDER)
        if est.closed_form is None or abs(est.limit - est.closed_form) > 0.05 * abs(est.closed_form):
            failures.append(f"{b.text()}: Xi_{j} limit {est.limit:.4f} vs closed form {est.closed_form}")
    return len(cases), failures


def check_xi_identity(rng: np.random.Generator, quick: bool) -> Outcome:
    b = to_blocks(parse_state(XI_THREE_SOLITONS))
    failures = []
    for j in (1, 2):
        est = xi_estimate(b, j, EPS_LADDER)
        if est.identity_error > 1e-10:
            failures.append(f"{b.text()}: Xi_{j} identity off by {est.identity_error:.3e}")
        if not est.converged:
            logger.info(f"xi: {b.text()} Xi_{j} values {est.values} have no clear integer limit")
    return 2, failures


SUITE_CHECKS: Dict[str, List[Tuple[str, Check]]] = {
    Constants.SUITE_COMBINATORICS: [
        ("covering_count", check_covering_count),
        ("exact_expansions", check_exact_expansions),
        ("polynomial_equivalence", check_polynomial_equivalence),
        ("minplus_vs_bruteforce", check_minplus_vs_bruteforce),
        ("graph_heights", check_graph_heights),
        ("graph_trees", check_graph_trees),
    ],
    Constants.SUITE_EVOLUTION: [
        ("blocks_exhaustive", check_blocks_exhaustive),
        ("blocks_random", check_blocks_random),
        ("literal_rule", check_literal_rule),
        ("young_conservation", check_young_conservation),
    ],
    Constants.SUITE_INVARIANTS: [
        ("U_young_vs_minplus", check_U_identity),
        ("P_young_vs_minplus", check_P_identity),
    ],
    Constants.SUITE_RENKON: [("root_valuations", check_renkon)],
    Constants.SUITE_TODA: [("bridge", check_toda_bridge)],
    Constants.SUITE_PERIODS: [
        ("graph_example", check_graph_example),
        ("closed_forms", check_period_formulas),
        ("r_divides_f", check_r_divides_f),
        ("eliminated_period", check_eliminated_period),
        ("elimination_commutes", check_elimination_commutes),
    ],
    Constants.SUITE_SIGMA: [
        ("equal_rows", check_equal_rows),
        ("period_matrix", check_period_matrix),
    ],
    Constants.SUITE_XI: [
        ("closed_form", check_xi_closed_form),
        ("identity", check_xi_identity),
    ],
}


def _run_check(name: str, check: Check, seed: int, quick: bool) -> CheckResult:
    try:
        cases, failures = check(np.random.default_rng(seed), quick)
    except PBBSError as e:
        logger.error(f"check {name} raised {type(e).__name__}: {e}")
        return CheckResult(name=name, passed=False, detail=f"{type(e).__name__}: {e}")
    except Exception as e:
        logger.error(f"check {name} crashed: {e}")
        logger.error(traceback.format_exc())
        return CheckResult(name=name, passed=False, detail=f"{type(e).__name__}: {e}")
    detail = "; ".join(failures[:MAX_REPORTED])
    if len(failures) > MAX_REPORTED:
        detail += f"; ... {len(failures) - MAX_REPORTED} more"
    logger.info(f"check {name}: {cases} cases, {len(failures)} failures")
    return CheckResult(name=name, passed=not failures, cases=cases, detail=detail)


def run_suite(name: str, seed: int, quick: bool = False) -> SuiteReport:
    if name not in SUITE_CHECKS:
        raise ValueError(f"unknown suite {name!r}, expected one of {sorted(SUITE_CHECKS)}")
    checks = [_run_check(check_name, check, seed, quick) for check_name, check in SUITE_CHECKS[name]]
    passed = all(c.passed for c in checks)
    return SuiteReport(suite=name, seed=seed, quick=quick, passed=passed, checks=checks)
