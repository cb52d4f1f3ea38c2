"""Fundamental cycle f(x) and relative period r(x): closed forms and brute force."""

import logging
import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Optional, Tuple

from src.bbs.elimination import elimination_chain, ten_eliminate, young_diagram
from src.bbs.spectral import period_asymptotics
from src.bbs.state import canonical_rotation, enumerate_states, evolve_bits
from src.bbs.tropical import U_from_young
from src.core.config import config
from src.core.errors import BoundedSearchError, InternalSymmetryError, InvariantError
from src.models.combinatorics import UltraInvariants, YoungDiagram
from src.models.numeric import PeriodReport
from src.models.state import BoxString, MarkedState

logger = logging.getLogger(__name__)


def lcm_rationals(values: Iterable[Fraction]) -> int:
    """Least positive integer that is an integer multiple of every given positive rational."""
    # z * q / p is an integer iff p | z when p/q is reduced
    return reduce(lambda acc, v: acc * v.numerator // math.gcd(acc, v.numerator), values, 1)


def period_data(d: YoungDiagram, L: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """l_0..l_s and N_0..N_s over the distinct row lengths L_1 > ... > L_s."""
    lengths = d.distinct
    counts = d.multiplicity
    s = len(lengths)
    ext = list(lengths) + [0]
    l0 = L - 2 * d.total
    l = [l0] + [ext[j - 1] - ext[j] for j in range(1, s + 1)]
    Nj = [l0 + sum(2 * counts[i] * (ext[i] - ext[j]) for i in range(j)) for j in range(s + 1)]
    if Nj[-1] != L:
        raise InvariantError(f"N_s = {Nj[-1]} does not close the ring of length {L}")
    return tuple(l), tuple(Nj)


def _ratios(d: YoungDiagram, L: int) -> List[Fraction]:
    l, Nj = period_data(d, L)
    return [Fraction(Nj[j] * Nj[j - 1], l[j] * l[0]) for j in range(len(l) - 1, 0, -1)]


def fundamental_cycle_formula(d: YoungDiagram, L: int) -> int:
    return lcm_rationals(_ratios(d, L))


def relative_period(d: YoungDiagram, L: int) -> int:
    """Same lcm with the j = s factor left out."""
    return lcm_rationals(_ratios(d, L)[1:])


def relative_period_sigma(u: UltraInvariants) -> int:
    """r from the linear-flow ratios: lcm of 2/(s_1 + sum s) and 2/(s_k - s_{k+1})."""
    if u.g < 1:
        return 1
    sigma = period_asymptotics(u).sigma
    terms = [sigma[0] + sum(sigma)] + [a - b for a, b in zip(sigma, sigma[1:])]
    return lcm_rationals(abs(2 / t) for t in terms if t != 0)


def relative_period_sigma_termwise(u: UltraInvariants) -> int:
    """lcm(|2/s_k|, 1) taken term by term; differs from the relative period in general."""
    if u.g < 1:
        return 1
    return lcm_rationals(abs(2 / s) for s in period_asymptotics(u).sigma if s != 0)


def brute_force_periods(x: BoxString, cap: Optional[int] = None) -> Tuple[int, int]:
    """(f, r) by iterating T: r at the first rotation of x, f at the first exact return."""
    cap = config.cap if cap is None else cap
    bits = x.bits
    doubled = bits + bits
    r = None
    current = bits
    for step in range(1, cap + 1):
        current = evolve_bits(current)
        if r is None and current in doubled:
            r = step
        if current == bits:
            return step, r
    raise BoundedSearchError(f"no return to {bits!r}", cap)


def _marker_symmetric(m: MarkedState) -> bool:
    L = m.state.L
    if len(m.zero_solitons) < 2 or L < 2:
        return False
    markers = sorted(m.zero_solitons)
    return any(sorted((k + shift) % L for k in markers) == markers for shift in range(1, L))


def _fresh_markers(m: MarkedState) -> MarkedState:
    """Markers created by the next elimination alone, ignoring inherited ones."""
    return ten_eliminate(MarkedState(state=m.state))


def detect_internal_symmetry(x: BoxString) -> bool:
    """Some elimination stage carries >= 2 zero-solitons fixed by a nontrivial rotation.

    Both the accumulated markers and the markers freshly created at each
    step are tested; inherited coincident markers can hide a symmetric
    fresh set.
    """
    chain = elimination_chain(x)
    if any(_marker_symmetric(stage) for stage in chain):
        return True
    return any(_marker_symmetric(_fresh_markers(stage)) for stage in chain[:-1])


def _sigma_invariants(d: YoungDiagram, L: int) -> UltraInvariants:
    return UltraInvariants(U=U_from_young(d), P=(), M=Fraction(-L, 2), L=L)


def analyze_periods(x: BoxString, cap: Optional[int] = None, brute: bool = True) -> PeriodReport:
    d = young_diagram(x)
    l, Nj = period_data(d, x.L)
    symmetric = detect_internal_symmetry(x)
    f_brute = r_brute = None
    if brute:
        f_brute, r_brute = brute_force_periods(x, cap)
    report = PeriodReport(
        state=x.bits,
        L=x.L,
        rows=d.rows,
        l=l,
        Nj=Nj,
        f_brute=f_brute,
        r_brute=r_brute,
        internal_symmetry=symmetric,
    )
    if symmetric:
        logger.info(f"analyze_periods: {x.bits} has internal symmetry, closed forms skipped")
        return report
    u = _sigma_invariants(d, x.L)
    return report.model_copy(
        update={
            "f_formula": fundamental_cycle_formula(d, x.L),
            "r_formula": relative_period(d, x.L),
            "r_sigma": relative_period_sigma(u),
            "r_sigma_termwise": relative_period_sigma_termwise(u),
        }
    )


def cycle_formulas(x: BoxString) -> Tuple[int, int]:
    """(f, r) from the Young diagram; refuses internally symmetric states."""
    if detect_internal_symmetry(x):
        raise InternalSymmetryError(f"{x.bits!r} has internal symmetry, closed forms do not apply")
    d = young_diagram(x)
    return fundamental_cycle_formula(d, x.L), relative_period(d, x.L)


def relative_period_of_eliminated(x: BoxString, cap: Optional[int] = None) -> Optional[Tuple[int, int]]:
    """(r(x), f(El x)) when El x has exactly one zero-soliton, else None."""
    eliminated = ten_eliminate(MarkedState(state=x))
    if len(eliminated.zero_solitons) != 1:
        return None
    r = brute_force_periods(x, cap)[1]
    f = brute_force_periods(eliminated.state, cap)[0] if eliminated.state.balls else 1
    return r, f


def orbit_table(L: int, cap: Optional[int] = None) -> Dict[str, PeriodReport]:
    """Period reports for every rotation class of length L; one brute-force run per T-orbit."""
    table: Dict[str, PeriodReport] = {}
    for text in enumerate_states(L):
        key = canonical_rotation(text)
        if key in table:
            continue
        report = analyze_periods(BoxString(bits=key), cap)
        # every state on the T-orbit shares f, r and the diagram
        current = key
        for _ in range(report.f_brute):
            table.setdefault(canonical_rotation(current), report)
            current = evolve_bits(current)
    logger.debug(f"orbit_table: L={L}, {len(table)} rotation classes")
    return table

