"""
Command implementations behind run.py.

Every command takes the parsed argparse namespace and returns a
CommandResult: an exit code and a JSON-serializable report.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

import numpy as np

from braid import (
    FINGERPRINT_LABEL,
    character,
    character_fingerprint,
    parse_word,
)
from classify2d import NoCandidateMatchedError, classify_dim2, no_hecke_pi3_dim2
from config import config
from gaussian import gaussian
from hecke import (
    ClassLabel,
    InvolutiveError,
    WrongSpectrumCountError,
    admissible,
    classify_hecke,
    eta_wenzl,
    flip,
    format_label,
    markov_partial_trace_defect,
    normalize_to_hecke,
    opposite_eigenvalues,
    wenzl_table,
)
from rmatrix import RMatrix, boxtimes, identity_rmatrix, validate, ybe_residual
from search import SearchConfig, certify, minimize, provenance
from tensorlinalg import frobenius, partial_trace_first, partial_trace_last, unitarity_residual
from tools import read_matrix_file, write_matrix_file

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

SHORT_FINGERPRINT = (3, 3)


class UsageError(ValueError):
    """Raised for flag values that are well-formed but not usable together."""


@dataclass
class CommandResult:
    code: int
    report: Dict[str, Any] = field(default_factory=dict)


def to_jsonable(value):
    """Complex numbers become [re, im]; Fractions become "p/q" strings."""
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def _format_scalar(value) -> str:
    if isinstance(value, (complex, np.complexfloating)):
        return f"{value.real:+.12g}{value.imag:+.12g}i"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _render_value(value, indent: str) -> List[str]:
    """Lines for one report value; nested dicts become indented "key : value" rows."""
    if isinstance(value, dict):
        width = max((len(str(k)) for k in value), default=0)
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list, tuple)) and any(isinstance(x, dict) for x in _children(v)):
                lines.append(f"{indent}{str(k).ljust(width)} :")
                lines.extend(_render_value(v, indent + "  "))
            else:
                lines.append(f"{indent}{str(k).ljust(width)} : {_inline(v)}")
        return lines
    if isinstance(value, (list, tuple)):
        lines = []
        for item in value:
            if isinstance(item, dict):
                rows = _render_value(item, indent + "  ")
                lines.extend([indent + "- " + rows[0].lstrip()] + rows[1:] if rows else [indent + "-"])
            else:
                lines.append(f"{indent}- {_inline(item)}")
        return lines
    return [indent + _format_scalar(value)]


def _children(value):
    return value.values() if isinstance(value, dict) else value


def _inline(value) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_format_scalar(v) for v in value)
    if isinstance(value, dict):
        return "; ".join(f"{k}={_format_scalar(v)}" for k, v in value.items())
    return _format_scalar(value)


def render(report: Dict[str, Any], as_json: bool) -> str:
    if as_json:
        return json.dumps(to_jsonable(report), sort_keys=True, indent=2)
    width = max((len(k) for k in report), default=0)
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, (dict, list, tuple)) and any(isinstance(x, dict) for x in _children(value)):
            lines.append(f"{key.ljust(width)} :")
            lines.extend(_render_value(value, "  "))
        else:
            lines.append(f"{key.ljust(width)} : {_inline(value)}")
    return "\n".join(lines)


_UNIMODULAR_TOL = 1e-6
_EXP_PATTERN = re.compile(r"^exp\((-?)(?:(\d+)\*)?i\*pi(?:/(\d+))?\)$")


def parse_q(text: str) -> complex:
    """
    Parse a unimodular parameter: "i", "-i", "exp(i*pi/3)", "exp(-2*i*pi/5)",
    or a Python complex literal such as "0.5+0.8660254j".

    Raises:
        UsageError: if the text does not parse or |q| differs from 1
    """
    text = text.strip().replace(" ", "")
    if text in ("i", "+i"):
        return 1j
    if text == "-i":
        return -1j
    match = _EXP_PATTERN.match(text)
    if match:
        sign, num, den = match.groups()
        turns = Fraction(int(num or 1), int(den or 1)) * (-1 if sign else 1)
        return complex(np.exp(1j * np.pi * float(turns)))
    try:
        q = complex(text)
    except ValueError as e:
        raise UsageError(f"cannot parse q={text!r}") from e
    if not np.isfinite(q) or abs(abs(q) - 1) > _UNIMODULAR_TOL:
        raise UsageError(f"q={text!r} is not on the unit circle (|q|={abs(q):.6g})")
    return q / abs(q)


def load_rmatrix(path: str) -> RMatrix:
    mf = read_matrix_file(path)
    return validate(mf.to_matrix(), mf.dim)


def _spectrum_report(R: RMatrix) -> Dict[str, Any]:
    spectrum = R.spectrum()
    return {"eigenvalues": list(spectrum.eigenvalues), "multiplicities": list(spectrum.multiplicities)}


def cmd_gaussian(args) -> CommandResult:
    if args.dim < 2:
        raise UsageError(f"--dim must be at least 2, got {args.dim}")
    if args.tensor_id < 1:
        raise UsageError(f"--tensor-id must be at least 1, got {args.tensor_id}")
    R = gaussian(args.dim).G
    scale = 1 + 0j
    if args.normalize == "hecke":
        scale, R, _ = normalize_to_hecke(R)
    if args.tensor_id > 1:
        R = boxtimes(R, identity_rmatrix(args.tensor_id, R.tol))
    report = {"dim": R.d, "scale": scale, "tensor_id": args.tensor_id, **_spectrum_report(R)}
    if args.out:
        write_matrix_file(args.out, R.M, R.d)
        report["out"] = args.out
    return CommandResult(EXIT_PASS, report)


def cmd_verify(args) -> CommandResult:
    mf = read_matrix_file(args.file)
    M = mf.to_matrix()
    report = {
        "dim": mf.dim,
        "unitarity_residual": unitarity_residual(M),
        "ybe_residual": ybe_residual(M, mf.dim),
    }
    try:
        validate(M, mf.dim)
    except ValueError as e:
        report.update(status="fail", reason=str(e))
        return CommandResult(EXIT_FAIL, report)
    report["status"] = "pass"
    return CommandResult(EXIT_PASS, report)


def cmd_classify(args) -> CommandResult:
    R = load_rmatrix(args.file)
    try:
        label = classify_hecke(R)
        verdict = admissible(label)
        return CommandResult(EXIT_PASS, {
            "kind": "hecke",
            "class": format_label(label),
            "q": label.q,
            "eta": label.eta,
            "dim": label.d,
            "admissible": verdict.ok,
            "admissibility": f"{verdict.gate}: {verdict.reason}",
        })
    except (WrongSpectrumCountError, InvolutiveError) as e:
        logger.info("not a two-eigenvalue class: %s", e)

    if R.d == 2:
        try:
            form = classify_dim2(R)
            return CommandResult(EXIT_PASS, {"kind": "dim2", "family": form.family.value, "class": str(form),
                                             **form.params()})
        except NoCandidateMatchedError as e:
            logger.warning("%s", e)

    length, strands = SHORT_FINGERPRINT
    fp = character_fingerprint(R, length, strands)
    return CommandResult(EXIT_PASS, {
        "kind": "unclassified",
        "fingerprint_label": FINGERPRINT_LABEL,
        "fingerprint": fp.as_dict(),
        **_spectrum_report(R),
    })


def cmd_character(args) -> CommandResult:
    R = load_rmatrix(args.file)
    w = parse_word(args.word)
    report = character(R, w)
    return CommandResult(EXIT_PASS, {
        "word": str(w),
        "value": report.value,
        "strands_used": report.strands_used,
        "stabilization_defect": report.stabilization_defect,
    })


def cmd_invariants(args) -> CommandResult:
    R = load_rmatrix(args.file)
    left = partial_trace_first(R.M, R.d)
    right = partial_trace_last(R.M, R.d)
    return CommandResult(EXIT_PASS, {
        "dim": R.d,
        "trace": R.trace(),
        "markov_partial_trace_defect": markov_partial_trace_defect(R),
        "partial_trace_asymmetry": frobenius(left - right),
        "opposite_eigenvalues": opposite_eigenvalues(R),
        **_spectrum_report(R),
    })


def cmd_search(args) -> CommandResult:
    try:
        eta = Fraction(args.eta)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"cannot parse --eta {args.eta!r}") from e
    target = ClassLabel(parse_q(args.q), eta, args.dim)
    cfg = SearchConfig.from_config(
        target,
        restarts=args.restarts,
        seed=args.seed,
        max_iters=args.max_iters,
        workers=args.workers,
        gradient=args.gradient,
        progress=not args.json,
    )
    result = minimize(cfg)
    report = {
        "target": format_label(target),
        "best_residual": result.best_residual,
        "best_restart": result.best_index,
        "converged": result.converged,
        "restart_log": [
            {"seed_index": r.seed_index, "final_residual": r.final_residual, "iterations": r.iterations}
            for r in result.restart_log
        ],
    }
    if result.converged:
        report["class"] = format_label(result.label)
        report["certified"] = certify(result.best_matrix, target.d).passes
        report["provenance"] = provenance(result.best_matrix, target.d)
    else:
        report["note"] = "no R-matrix found within the search budget; this is not evidence of emptiness"
    if args.out:
        write_matrix_file(args.out, result.best_matrix, target.d)
        report["out"] = args.out
    return CommandResult(EXIT_PASS, report)


def cmd_boxtimes(args) -> CommandResult:
    R = load_rmatrix(args.file_a)
    S = load_rmatrix(args.file_b)
    T = boxtimes(R, S)
    write_matrix_file(args.out, T.M, T.d)
    return CommandResult(EXIT_PASS, {"dim": T.d, "out": args.out, **_spectrum_report(T)})


def cmd_flip(args) -> CommandResult:
    R = load_rmatrix(args.file)
    _, scaled, _ = normalize_to_hecke(R)
    F = flip(scaled)
    report = {"dim": F.d, "class": format_label(classify_hecke(F))}
    if args.out:
        write_matrix_file(args.out, F.M, F.d)
        report["out"] = args.out
    return CommandResult(EXIT_PASS, report)


def cmd_wenzl(args) -> CommandResult:
    params = [eta_wenzl(args.ell, args.k)] if args.k is not None else wenzl_table(args.ell)
    return CommandResult(EXIT_PASS, {
        "ell": args.ell,
        "alphas": list(params[0].alphas),
        "eta": {str(p.k): (str(p.eta_exact) if p.eta_exact is not None else p.eta_lk) for p in params},
    })


def cmd_certify(args) -> CommandResult:
    mf = read_matrix_file(args.file)
    report = certify(mf.to_matrix(), mf.dim)
    out = {
        "dim": report.d,
        "unitarity_residual": report.unitarity_residual,
        "ybe_residual": report.ybe_residual,
        "eigenvalues": list(report.eigenvalues),
        "multiplicities": list(report.ranks),
        "passes": report.passes,
        "failures": list(report.failures),
    }
    if report.label is not None:
        out["class"] = format_label(report.label)
    if report.markov_defect is not None:
        out["markov_partial_trace_defect"] = report.markov_defect
    if report.hecke_residual is not None:
        out["hecke_residual"] = report.hecke_residual
    if report.tl is not None:
        out["temperley_lieb"] = {
            "tl_residual": report.tl.tl_residual,
            "trace_gap": report.tl.trace_gap,
            "wedge_norm": report.tl.wedge_norm,
            "geometric_fit_residual": report.tl.geometric_fit_residual,
            "closed_form_defect": report.tl.closed_form_defect,
        }
    if report.frs:
        out["frs_traces"] = [s.trace_recursion for s in report.frs]
        out["frs_integer_defects"] = [s.integer_defect for s in report.frs]
    return CommandResult(EXIT_PASS if report.passes else EXIT_FAIL, out)


def cmd_dim2_empty(args) -> CommandResult:
    rng = np.random.default_rng(args.seed if args.seed is not None else config.search_seed)
    cert = no_hecke_pi3_dim2(rng, args.draws)
    return CommandResult(EXIT_PASS if cert.verdict == "empty" else EXIT_FAIL, {
        "verdict": cert.verdict,
        "checks": [
            {"family": c.family.value if c.family else "all", "claim": c.claim, "passed": c.passed, "detail": c.detail}
            for c in cert.checks
        ],
    })


COMMANDS = {
    "gaussian": cmd_gaussian,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "character": cmd_character,
    "invariants": cmd_invariants,
    "search": cmd_search,
    "boxtimes": cmd_boxtimes,
    "flip": cmd_flip,
    "wenzl": cmd_wenzl,
    "certify": cmd_certify,
    "dim2-empty": cmd_dim2_empty,
}
