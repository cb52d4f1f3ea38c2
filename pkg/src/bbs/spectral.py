"""Spectral curve of the Toda data attached to a block state.

Delta(lambda) and y_{N+1}(lambda) come from the three-term recurrence or,
equivalently, from a sum over domino coverings of the N-cycle. Their
roots live on scales exp(-k/eps), so everything numeric here runs in
mpmath at a precision proportional to L/eps. The polynomial helpers
only use ring operations and work just as well on Fractions.
"""

import logging
import math
from fractions import Fraction
from itertools import combinations
from typing import Any, List, Optional, Sequence, Tuple

import mpmath as mp
import numpy as np

from src.bbs.elimination import young_diagram
from src.bbs.state import from_blocks
from src.bbs.tropical import mu_valuations, root_valuations, ultra_invariants
from src.core.config import config
from src.core.errors import EnumerationBoundError, InvariantError, PrecisionError, RangeError
from src.models.combinatorics import UltraInvariants
from src.models.numeric import PeriodAsymptotics, RenkonReport, RootSet, SpectralCurve, XiEstimate
from src.models.state import BlockState

logger = logging.getLogger(__name__)

Poly = List[Any]


# ---------------------------------------------------------------------------
# Polynomial helpers, coefficients lowest degree first
# ---------------------------------------------------------------------------


def _add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _scale(p: Poly, s: Any) -> Poly:
    return [s * c for c in p]


def _times_linear(p: Poly, a: Any) -> Poly:
    """(lambda - a) * p"""
    out = [0] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i + 1] += c
        out[i] -= a * c
    return out


def _trim(p: Poly, degree: int) -> Poly:
    return p[: degree + 1] + [0] * (degree + 1 - len(p))


def _derivative(p: Poly) -> Poly:
    return [k * p[k] for k in range(1, len(p))]


def _evaluate(p: Poly, x: Any) -> Any:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _recurrence_terms(I: Sequence[Any], V: Sequence[Any]) -> Tuple[List[Any], List[Any]]:
    """a_n = I_{n+1} + V_n and b_n = I_n V_n for n = 1..N, indices mod N; entry 0 unused."""
    N = len(I)
    a = [None] + [I[(n + 1) % N] + V[n % N] for n in range(1, N + 1)]
    b = [None] + [I[n % N] * V[n % N] for n in range(1, N + 1)]
    return a, b


def curve_polynomials(I: Sequence[Any], V: Sequence[Any]) -> Tuple[Poly, Poly, Any]:
    """(Delta, y_{N+1}, m^2) from x_{n+1} = (lambda - a_n) x_n - b_n x_{n-1}."""
    N = len(I)
    a, b = _recurrence_terms(I, V)
    x_prev, x = [0], [1]
    y_prev, y = [1], [0]
    y_N = y
    for n in range(1, N + 1):
        if n == N:
            y_N = y
        x_prev, x = x, _add(_times_linear(x, a[n]), _scale(x_prev, -b[n]))
        y_prev, y = y, _add(_times_linear(y, a[n]), _scale(y_prev, -b[n]))
    delta = _trim(_add(x, y_N), N)
    yN1 = _trim(y, N - 1)
    m2 = 1
    for i, v in zip(I, V):
        m2 = m2 * i * v
    return delta, yN1, m2


def continuant(I: Sequence[Any], V: Sequence[Any], j: int, k: int) -> Poly:
    """((j, j+1, ..., k)): X_n = lambda - a_n on every index, Y_n = -b_n on every pair (n-1, n)."""
    a, b = _recurrence_terms(I, V)
    N = len(I)
    prev, cur = [0], [1]
    for n in range(j, k + 1):
        idx = (n - 1) % N + 1
        prev, cur = cur, _add(_times_linear(cur, a[idx]), _scale(prev, -b[idx]))
    return cur


def cyclic_bracket(I: Sequence[Any], V: Sequence[Any]) -> Poly:
    """((1..N)) + (N,1)((2..N-1)), which is Delta."""
    N = len(I)
    if N == 1:
        return continuant(I, V, 1, 1)
    _, b = _recurrence_terms(I, V)
    return _add(continuant(I, V, 1, N), _scale(continuant(I, V, 2, N - 1), -b[1]))


def enumerate_A(N: int) -> List[Tuple[int, ...]]:
    """Sets of pair right-ends a in 1..N, pair {a-1, a} taken cyclically, pairwise disjoint."""
    out = []
    for size in range(N // 2 + 1):
        for A in combinations(range(1, N + 1), size):
            members = set(A)
            if all(((a - 2) % N) + 1 not in members for a in A):
                out.append(A)
    return out


def enumerate_A_prime(N: int) -> List[Tuple[int, ...]]:
    """Disjoint linear pairs {a-1, a} inside 2..N."""
    out = []
    for size in range(N // 2 + 1):
        for A in combinations(range(3, N + 1), size):
            members = set(A)
            if all(a - 1 not in members for a in A):
                out.append(A)
    return out


def _covering_sum(
    a: List[Any], b: List[Any], sets: List[Tuple[int, ...]], sites: Sequence[int], N: int
) -> Poly:
    total: Poly = [0]
    for A in sets:
        covered = set()
        weight = 1
        for r in A:
            covered.update({((r - 2) % N) + 1, r})
            weight = weight * -b[r]
        term: Poly = [weight]
        for i in sites:
            if i not in covered:
                term = _times_linear(term, a[i])
        total = _add(total, term)
    return total


def combinatorial_polynomials(I: Sequence[Any], V: Sequence[Any]) -> Tuple[Poly, Poly, Any]:
    N = len(I)
    a, b = _recurrence_terms(I, V)
    delta = _covering_sum(a, b, enumerate_A(N), range(1, N + 1), N)
    yN1 = _scale(_covering_sum(a, b, enumerate_A_prime(N), range(2, N + 1), N), -b[1])
    m2 = 1
    for i, v in zip(I, V):
        m2 = m2 * i * v
    return _trim(delta, N), _trim(yN1, N - 1), m2


# ---------------------------------------------------------------------------
# Curves at finite eps
# ---------------------------------------------------------------------------


def required_prec(L: int, eps: float, factor: Optional[float] = None, guard: Optional[int] = None) -> int:
    factor = config.precision_factor if factor is None else factor
    guard = config.guard_bits if guard is None else guard
    return int(math.ceil(factor * L / (eps * math.log(2)))) + guard


def _resolve_prec(b: BlockState, eps: float, prec: Optional[int]) -> int:
    prec = prec or config.default_prec or required_prec(b.L, eps)
    floor = required_prec(b.L, eps, factor=1.0, guard=0)
    if prec < floor:
        raise PrecisionError(
            f"{prec} bits cannot hold exp(-L/eps) for L={b.L}, eps={eps}",
            suggested_prec=required_prec(b.L, eps),
        )
    return prec


def _toda_values(b: BlockState, eps: float) -> Tuple[List[Any], List[Any]]:
    e = mp.mpf(eps)
    I = [mp.exp(-mp.mpf(q) / e) for q in b.Q]
    V = [mp.exp(-mp.mpf(w) / e) for w in b.W]
    return I, V


def _build(b: BlockState, eps: float, prec: Optional[int], method) -> SpectralCurve:
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    prec = _resolve_prec(b, eps, prec)
    with mp.workprec(prec):
        I, V = _toda_values(b, eps)
        delta, yN1, m2 = method(I, V)
        delta = [mp.mpf(c) for c in delta]
        yN1 = [mp.mpf(c) for c in yN1]
    logger.debug(f"curve: N={b.N}, L={b.L}, eps={eps}, prec={prec}, via {method.__name__}")
    return SpectralCurve(
        eps=eps, prec=prec, N=b.N, delta=tuple(delta), m2=m2, yN1=tuple(yN1), I=tuple(I), V=tuple(V)
    )


def build_curve_recurrence(b: BlockState, eps: float, prec: Optional[int] = None) -> SpectralCurve:
    return _build(b, eps, prec, curve_polynomials)


def build_curve_combinatorial(
    b: BlockState, eps: float, prec: Optional[int] = None, bound: Optional[int] = None
) -> SpectralCurve:
    bound = config.enum_bound if bound is None else bound
    if b.N > bound:
        raise EnumerationBoundError(f"N={b.N} exceeds the enumeration bound {bound}")
    return _build(b, eps, prec, combinatorial_polynomials)


# ---------------------------------------------------------------------------
# Root isolation
# ---------------------------------------------------------------------------


def _lower_bound(p: Poly) -> Any:
    c0 = abs(p[0])
    if not c0:
        raise PrecisionError("zero constant coefficient, roots are not separated from 0")
    return c0 / (c0 + max(abs(c) for c in p[1:]))


def _upper_bound(p: Poly) -> Any:
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead


def _mid(lo: Any, hi: Any) -> Any:
    return mp.sqrt(lo * hi) if lo > 0 else (lo + hi) / 2


def _refine(desc: Poly, lo: Any, hi: Any, tol: Any, maxiter: int) -> Any:
    """Safeguarded Newton inside a sign-change bracket, geometric bisection as fallback."""
    f_lo = mp.polyval(desc, lo)
    f_hi = mp.polyval(desc, hi)
    if not f_lo:
        return lo
    if not f_hi:
        return hi
    if mp.sign(f_lo) == mp.sign(f_hi):
        raise PrecisionError(f"no sign change on [{mp.nstr(lo, 8)}, {mp.nstr(hi, 8)}]")
    s_lo = mp.sign(f_lo)
    x = _mid(lo, hi)
    for it in range(maxiter):
        fx, dfx = mp.polyval(desc, x, derivative=True)
        if not fx:
            return x
        if mp.sign(fx) == s_lo:
            lo = x
        else:
            hi = x
        if hi - lo <= tol * max(abs(lo), abs(hi)):
            return _mid(lo, hi)
        candidate = None
        if dfx:
            step = fx / dfx
            if abs(step) <= tol * abs(x):
                return x - step
            candidate = x - step
        # every third step bisects so the bracket keeps shrinking
        if candidate is not None and it % 3 != 2 and lo < candidate < hi:
            x = candidate
        else:
            x = _mid(lo, hi)
    raise PrecisionError(f"root refinement did not converge in {maxiter} steps")


def _roots_between(p: Poly, points: List[Any], tol: Any, maxiter: int) -> List[Any]:
    desc = list(reversed(p))
    return [_refine(desc, lo, hi, tol, maxiter) for lo, hi in zip(points, points[1:])]


def real_roots(p: Poly, lo: Any, hi: Any, tol: Any, maxiter: int) -> List[Any]:
    """All roots of a polynomial whose roots are real and simple, ascending.

    The critical points (roots of p', found recursively) separate the roots
    of p, so each gap holds exactly one.
    """
    degree = len(p) - 1
    if degree < 1:
        return []
    if degree == 1:
        return [-p[0] / p[1]]
    critical = real_roots(_derivative(p), lo, hi, tol, maxiter)
    return _roots_between(p, [lo] + critical + [hi], tol, maxiter)


def _settings(c: SpectralCurve, root_bits: Optional[int]) -> Tuple[Any, int]:
    bits = root_bits or config.root_bits or c.prec // 2
    return mp.ldexp(mp.mpf(1), -bits), 3 * (bits + 64) + 100


def sigma_branch(j: int, g: int) -> str:
    """Which of lambda_j^-, lambda_j^+ is a root of Delta + 2m."""
    return "-" if (g - j) % 2 == 0 else "+"


def find_roots(
    c: SpectralCurve, hint: Optional[UltraInvariants] = None, root_bits: Optional[int] = None
) -> RootSet:
    with mp.workprec(c.prec):
        tol, maxiter = _settings(c, root_bits)
        delta = list(c.delta)
        m = mp.sqrt(c.m2)
        minus_poly = _add(delta, [-2 * m])
        plus_poly = _add(delta, [2 * m])
        polys = [delta, minus_poly, plus_poly]
        lo = min(_lower_bound(p) for p in polys) / 2
        hi = max(_upper_bound(p) for p in polys) * 2
        if hint is not None:
            # tropical estimate of the smallest root; only used to widen the bracket
            lo = min(lo, mp.exp(-mp.mpf(hint.U[0] + 1) / mp.mpf(c.eps)))

        critical = real_roots(_derivative(delta), lo, hi, tol, maxiter)
        lam = _roots_between(delta, [lo] + critical + [hi], tol, maxiter)
        roots_minus = _roots_between(minus_poly, [lo] + critical + [hi], tol, maxiter)
        roots_plus = _roots_between(plus_poly, [lo] + critical + [hi], tol, maxiter)
        lamPM = sorted(roots_minus + roots_plus)

        mu: List[Any] = []
        if c.N > 1:
            y = list(c.yN1)
            y_lo = _lower_bound(y) / 2
            y_hi = _upper_bound(y) * 2
            mu = real_roots(y, min(lo, y_lo), max(hi, y_hi), tol, maxiter)

    _check_roots(lam, lamPM, mu)
    logger.debug(f"find_roots: N={c.N}, eps={c.eps}, prec={c.prec}, smallest root {mp.nstr(lamPM[0], 6)}")
    return RootSet(
        lam=tuple(lam), lamPM=tuple(lamPM), mu=tuple(mu), minus=tuple(roots_minus), plus=tuple(roots_plus)
    )


def _check_roots(lam: List[Any], lamPM: List[Any], mu: List[Any]) -> None:
    if lamPM[0] <= 0 or (mu and mu[0] <= 0):
        raise InvariantError("spectral roots must be positive")
    if any(x >= y for x, y in zip(lamPM, lamPM[1:])):
        raise InvariantError("roots of Delta^2 - 4m^2 are not simple")
    for j, root in enumerate(lam):
        if not lamPM[2 * j] < root < lamPM[2 * j + 1]:
            raise InvariantError(f"lambda_{j} does not sit between lambda_{j}^- and lambda_{j}^+")
    for j, root in enumerate(mu, start=1):
        if not lam[j - 1] < root < lam[j]:
            raise InvariantError(f"mu_{j} does not sit between lambda_{j - 1} and lambda_{j}")


def sigma_consistent(roots: RootSet) -> bool:
    """Roots of Delta + 2m are lambda_g^-, lambda_{g-1}^+, lambda_{g-2}^-, ..."""
    g = len(roots.lam) - 1
    plus = set(roots.plus)
    for j in range(g + 1):
        pick = roots.lamPM[2 * j] if sigma_branch(j, g) == "-" else roots.lamPM[2 * j + 1]
        if pick not in plus:
            return False
    return True


# ---------------------------------------------------------------------------
# Valuations
# ---------------------------------------------------------------------------


def valuation(x: Any, eps: float) -> float:
    return float(-mp.mpf(eps) * mp.log(abs(x)))


def extrapolate(eps_list: Sequence[float], values: Sequence[float]) -> float:
    """Intercept of the least-squares line value = a + b*eps."""
    if len(eps_list) == 1:
        return float(values[0])
    _, intercept = np.polyfit(np.asarray(eps_list, dtype=float), np.asarray(values, dtype=float), 1)
    return float(intercept)


def u_coefficients(c: SpectralCurve) -> List[Any]:
    """u_j = (-1)^{N-j} [lambda^j] Delta, j = 0..g."""
    return [(-1) ** (c.N - j) * c.delta[j] for j in range(c.N)]


def v_coefficients(c: SpectralCurve) -> List[Any]:
    """v_k = (-1)^{g-k} [lambda^k] y_{N+1} / (-I_1 V_1), k = 0..g-1."""
    g = c.N - 1
    lead = -(c.I[1 % c.N] * c.V[1 % c.N])
    return [(-1) ** (g - k) * c.yN1[k] / lead for k in range(g)]


def u_valuations(c: SpectralCurve) -> List[float]:
    with mp.workprec(c.prec):
        return [valuation(u, c.eps) for u in u_coefficients(c)]


def v_valuations(c: SpectralCurve) -> List[float]:
    with mp.workprec(c.prec):
        return [valuation(v, c.eps) for v in v_coefficients(c)]


def _within(estimates: Sequence[float], exact: Sequence[float], tolerance: float) -> bool:
    """Entrywise agreement up to tolerance, relative to max(1, |exact|)."""
    if len(estimates) != len(exact):
        return False
    return all(abs(e - x) <= tolerance * max(1.0, abs(x)) for e, x in zip(estimates, exact))


def verify_renkon(
    b: BlockState,
    eps_list: Sequence[float],
    prec: Optional[int] = None,
    tolerance: float = 0.02,
) -> RenkonReport:
    """-eps log lambda_j^(+-) against the Young rows, extrapolated to eps = 0."""
    rows = young_diagram(from_blocks(b)).rows
    u = ultra_invariants(b)
    precs, minus, plus, lam, m_val, u_val, v_val = [], [], [], [], [], [], []
    for eps in eps_list:
        c = build_curve_recurrence(b, eps, prec)
        roots = find_roots(c, hint=u)
        with mp.workprec(c.prec):
            minus.append(tuple(valuation(x, eps) for x in roots.lamPM[0::2]))
            plus.append(tuple(valuation(x, eps) for x in roots.lamPM[1::2]))
            lam.append(tuple(valuation(x, eps) for x in roots.lam))
            m_val.append(valuation(mp.sqrt(c.m2), eps))
        u_val.append(u_valuations(c))
        v_val.append(v_valuations(c))
        precs.append(c.prec)

    def limits(table: List[Sequence[float]]) -> Tuple[float, ...]:
        return tuple(extrapolate(eps_list, [row[j] for row in table]) for j in range(len(table[0])))

    limit_minus, limit_plus, limit_lam = limits(minus), limits(plus), limits(lam)
    errors = [
        abs(est - row) / row
        for series in (limit_minus, limit_plus, limit_lam)
        for est, row in zip(series, rows)
    ]
    worst = max(errors)
    m_ok = abs(extrapolate(eps_list, m_val) - b.L / 2) <= tolerance * b.L / 2
    u_limit, v_limit = limits(u_val), limits(v_val)
    invariants_ok = _within(u_limit, u.U, tolerance) and _within(v_limit, u.P, tolerance)
    # lambda_j must sit between lambda_j^- and lambda_j^+ on the same scale
    branches_ok = _within(limit_minus, limit_lam, tolerance) and _within(limit_plus, limit_lam, tolerance)
    ok = worst <= tolerance and m_ok and invariants_ok and branches_ok
    if not ok:
        logger.warning(
            f"verify_renkon: {b.text()} rows_ok={worst <= tolerance} m_ok={m_ok} "
            f"invariants_ok={invariants_ok} branches_ok={branches_ok}"
        )
    logger.info(f"verify_renkon: {b.text()} rows={rows}, max relative error {worst:.3e}")
    return RenkonReport(
        state=b.text(),
        eps=tuple(eps_list),
        prec=tuple(precs),
        rows=rows,
        lam_minus=tuple(minus),
        lam_plus=tuple(plus),
        lam=tuple(lam),
        limit_minus=limit_minus,
        limit_plus=limit_plus,
        limit_lam=limit_lam,
        max_relative_error=worst,
        m_valuation=tuple(m_val),
        u_limit=u_limit,
        v_limit=v_limit,
        U=u.U,
        P=u.P,
        invariants_ok=invariants_ok,
        branches_ok=branches_ok,
        ok=ok,
    )


# ---------------------------------------------------------------------------
# Period matrix asymptotics
# ---------------------------------------------------------------------------


def period_asymptotics(u: UltraInvariants) -> PeriodAsymptotics:
    """Leading coefficients of B, nu, r and the ratios varsigma, all exact."""
    g = u.g
    if g < 1:
        raise RangeError("period data needs at least two solitons (g >= 1)")
    M = u.M
    U = [Fraction(u.U_ext(k)) for k in range(g + 2)]
    idx = range(1, g + 1)

    def B(i: int, j: int) -> Fraction:
        if i == j:
            return 2 * M - (j + 1) * U[j + 1] + (j + 2) * U[j] + U[1]
        low = min(i, j)
        return M - U[low + 1] + U[low] + U[1]

    Bhat = tuple(tuple(B(i, j) for j in idx) for i in idx)
    nuhat = tuple(Fraction(1, 2) * (U[j + 1] - U[j] - (U[1] - U[0])) for j in idx)
    rhat = tuple(-(M - U[j + 1] + U[j] + U[1]) for j in idx)
    bk = tuple(U[0] - (k + 1) * U[k] + k * U[k + 1] for k in idx)
    ck = tuple(-M - (k + 1) * U[k] + k * U[k + 1] for k in idx)
    if any(c == 0 for c in ck):
        raise InvariantError(f"degenerate period data, c_k = 0 for U={u.U}")
    ratio = [bb / cc for bb, cc in zip(bk, ck)]

    sigma = []
    for k in idx:
        tail = sum((ratio[i - 1] / (i * (i + 1)) for i in range(k + 1, g + 1)), Fraction(0))
        sigma.append(-ratio[k - 1] / (k + 1) + tail)
    return PeriodAsymptotics(Bhat=Bhat, nuhat=nuhat, rhat=rhat, sigma=tuple(sigma), bk=bk, ck=ck)


# ---------------------------------------------------------------------------
# Xi_j
# ---------------------------------------------------------------------------


def xi_identity(c: SpectralCurve, roots: RootSet) -> List[Tuple[Any, Any]]:
    """For each mu_j: (prod_{i>=1} (mu_j - lambda_i), Delta(mu_j) / (mu_j - lambda_0))."""
    out = []
    with mp.workprec(c.prec):
        for mu in roots.mu:
            product = mp.mpf(1)
            for lam in roots.lam[1:]:
                product *= mu - lam
            out.append((product, _evaluate(list(c.delta), mu) / (mu - roots.lam[0])))
    return out


def _xi_generic(rows: Sequence[int], mus: Sequence[int], j: int) -> Optional[int]:
    """-sum_i min(-eps log mu_j, row_i) over i >= 1, valid when no lambda_i shares mu_j's scale."""
    if any(a <= b for a, b in zip(mus, mus[1:])):
        return None
    m = mus[j - 1]
    if m in rows[1:]:
        return None
    return -sum(min(m, r) for r in rows[1:])


def _xi_two_blocks(b: BlockState, u: UltraInvariants) -> Optional[int]:
    if not u.U[0] - u.U[1] > u.P[0]:
        return None
    return -min(b.Q[0] + b.W[0], b.Q[1] + b.W[1]) + u.P[0]


def _xi_three_blocks(b: BlockState, rows: Sequence[int], m: int) -> Optional[int]:
    """Three blocks, mu_j above both I_1 + V_0 and lambda_0.

    The product is [-I_2 V_2 (mu - I_1 - V_0) - I_1 V_1 (mu - I_0 - V_2)] / (mu - lambda_0).
    With the first term dominant and mu - lambda_0 ~ mu only I_2 V_2 survives.
    """
    Q, W = b.Q, b.W
    if not m < min(Q[1], W[0]):
        return None
    if not Q[2] + W[2] + m < Q[1] + W[1] + min(m, Q[0], W[2]):
        return None
    if not m < rows[0]:
        return None
    return -(Q[2] + W[2])


def xi_closed_form(b: BlockState, j: int) -> Optional[int]:
    """Exact limit of Xi_j where one is known, else None.

    Generic case: mu_j shares its scale with no lambda_i, i >= 1, so every
    factor is dominated by its larger root. Otherwise the two- and
    three-block expansions apply under their own inequalities.
    """
    g = b.N - 1
    if not 1 <= j <= g:
        return None
    u = ultra_invariants(b)
    rows = root_valuations(u)
    mus = mu_valuations(u)
    generic = _xi_generic(rows, mus, j)
    if generic is not None:
        return generic
    if b.N == 2:
        return _xi_two_blocks(b, u)
    if b.N == 3 and all(a > c for a, c in zip(mus, mus[1:])):
        return _xi_three_blocks(b, rows, mus[j - 1])
    return None


def xi_estimate(b: BlockState, j: int, eps_list: Sequence[float], prec: Optional[int] = None) -> XiEstimate:
    """eps log |prod_i (mu_j - lambda_i)|, i = 1..g, extrapolated to eps = 0."""
    g = b.N - 1
    if g < 1:
        raise RangeError("Xi_j is undefined for a single soliton")
    if not 1 <= j <= g:
        raise RangeError(f"Xi_j needs 1 <= j <= {g}, got j={j}")
    u = ultra_invariants(b)
    values, identity_error = [], 0.0
    for eps in eps_list:
        c = build_curve_recurrence(b, eps, prec)
        roots = find_roots(c, hint=u)
        product, quotient = xi_identity(c, roots)[j - 1]
        with mp.workprec(c.prec):
            values.append(float(mp.mpf(eps) * mp.log(abs(product))))
            identity_error = max(identity_error, float(abs(product - quotient) / abs(quotient)))
    limit = extrapolate(eps_list, values)
    converged = abs(limit - round(limit)) <= 0.05 * max(1.0, abs(limit))
    if not converged:
        logger.warning(f"xi_estimate: no clear limit for Xi_{j} of {b.text()}: {values}")
    return XiEstimate(
        j=j,
        eps=tuple(eps_list),
        values=tuple(values),
        limit=limit,
        identity_error=identity_error,
        converged=converged,
        closed_form=xi_closed_form(b, j),
    )
