import json
from typing import Any, Dict, List

import mpmath as mp

from src.bbs.elimination import young_diagram
from src.bbs.spectral import find_roots, valuation
from src.bbs.state import to_blocks
from src.bbs.tropical import P_from_young_limit, U_from_young, root_valuations, ultra_invariants
from src.core.constants import Constants
from src.models.numeric import ErrorReport, PeriodReport, RootSet, SpectralCurve
from src.models.state import BlockState, BoxString

DIGITS = 20


def convert_evolve_response(rows: List[BoxString]) -> Dict[str, Any]:
    final = rows[-1]
    return {
        "L": final.L,
        "steps": len(rows) - 1,
        "rows": [row.bits for row in rows],
        "blocks": to_blocks(final).text(),
    }


def convert_young_response(x: BoxString, b: BlockState) -> Dict[str, Any]:
    d = young_diagram(x)
    return {
        **d.to_json(),
        "U": list(U_from_young(d)),
        "P": list(P_from_young_limit(b)),
        "M": -x.L / 2,
    }


def convert_invariants_response(x: BoxString, b: BlockState) -> Dict[str, Any]:
    u = ultra_invariants(b)
    d = young_diagram(x)
    U_young = U_from_young(d)
    P_young = P_from_young_limit(b)
    return {
        "U": list(u.U),
        "P": list(u.P),
        "M": float(u.M),
        "young": {"U": list(U_young), "P": list(P_young)},
        "agree": list(U_young) == list(u.U) and list(P_young) == list(u.P),
    }


def _numbers(values) -> List[str]:
    return [mp.nstr(v, DIGITS) for v in values]


def convert_spectrum_response(c: SpectralCurve, b: BlockState) -> Dict[str, Any]:
    u = ultra_invariants(b)
    roots: RootSet = find_roots(c, hint=u)
    with mp.workprec(c.prec):
        valuations = {
            "lambda": [valuation(v, c.eps) for v in roots.lam],
            "lambdaPM": [valuation(v, c.eps) for v in roots.lamPM],
            "mu": [valuation(v, c.eps) for v in roots.mu],
            "m": valuation(mp.sqrt(c.m2), c.eps),
            "predicted": list(root_valuations(u)),
        }
        return {
            "eps": c.eps,
            "prec": c.prec,
            "lambda": _numbers(roots.lam),
            "lambdaPM": _numbers(roots.lamPM),
            "mu": _numbers(roots.mu),
            "valuations": valuations,
        }


def convert_cycle_response(report: PeriodReport) -> Dict[str, Any]:
    return {
        "f": report.f_brute,
        "r": report.r_brute,
        "f_formula": report.f_formula,
        "r_formula": report.r_formula,
        "r_sigma": report.r_sigma,
        "r_sigma_termwise": report.r_sigma_termwise,
        "internal_symmetry": report.internal_symmetry,
        "rows": list(report.rows),
        "l": list(report.l),
        "N": list(report.Nj),
    }


def convert_toda_response(report: ErrorReport) -> Dict[str, Any]:
    return report.model_dump()


def render_ascii(command: str, payload: Dict[str, Any]) -> str:
    """Plain-text rendering for --format ascii."""
    if command == Constants.CMD_EVOLVE:
        return "\n".join(payload["rows"])
    if command == Constants.CMD_YOUNG:
        lines = ["#" * length for length in payload["rows"]]
        lines.append(f"U = {payload['U']}  P = {payload['P']}  M = {payload['M']}")
        return "\n".join(lines)
    return "\n".join(f"{key}: {json.dumps(value)}" for key, value in payload.items())


def render(command: str, payload: Dict[str, Any], fmt: str) -> str:
    if fmt == Constants.FORMAT_ASCII:
        return render_ascii(command, payload)
    return json.dumps(payload, sort_keys=True)
