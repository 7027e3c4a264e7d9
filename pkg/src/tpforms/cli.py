"""Command-line interface: JSON reports with deterministic bytes.

Every report echoes the input form, serializes rationals as 'p' or 'p/q'
strings, and builds its dictionaries in a fixed key order, so identical
requests produce byte-identical output.  Exit codes: 0 when the run checked
equivalences and they all agree (or nothing was checked), 1 when a checked
equivalence disagrees or an anomaly shows up, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import perm

from .apolarity import (
    check_mixed_hrr,
    check_ordinary_hrr,
    hilbert_function,
    toeplitz,
)
from .equivalence import (
    EquivalenceReport,
    GENERATOR_FAMILIES,
    generate_forms,
    shift_path_experiment,
    verify_equivalence,
)
from .forms import (
    BivariateForm,
    LinearForm,
    ZeroFormError,
    format_rational,
    parse_rational,
)
from .hessian import hessian_polynomial, plucker_terms, positive_on_quadrant
from .linalg import RatMatrix
from .totalpos import MinorWitness, TPReport, scan_all_minors


def _matrix_json(M: RatMatrix) -> list[list[str]]:
    return [
        [format_rational(M.at(r, c)) for c in range(M.cols)]
        for r in range(M.rows)
    ]


def _witness_json(w: MinorWitness | None) -> dict | None:
    if w is None:
        return None
    return {
        "rows": [r + 1 for r in w.rows],
        "cols": [c + 1 for c in w.cols],
        "value": format_rational(w.value),
    }


def _report_json(rep: TPReport) -> dict:
    return {
        "is_tnn": rep.is_tnn,
        "is_tp": rep.is_tp,
        "tp_order": rep.tp_order,
        "rank": rep.rank,
        "witness": _witness_json(rep.witness),
    }


def _equivalence_json(rep: EquivalenceReport) -> dict:
    return {
        "form": rep.form.to_json_dict(),
        "sperner": rep.sperner,
        "hessian_closed": rep.hessian_closed,
        "hessian_open": rep.hessian_open,
        "toeplitz_closed": rep.toeplitz_closed,
        "toeplitz_open": rep.toeplitz_open,
        "agree": rep.agree,
        "cross_consistent": rep.cross_consistent,
        "per_index_hessian": [
            {"index": i, "positive_closed": c, "positive_open": o}
            for i, c, o in rep.per_index_hessian
        ],
        "tp_witness": _witness_json(rep.tp_witness),
    }


def _load_form(args) -> BivariateForm:
    if args.form is not None:
        text = args.form
    else:
        with open(args.form_file, "r", encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    return BivariateForm.from_json_dict(data)


def _parse_pair(text: str) -> LinearForm:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'a,b', got {text!r}")
    return LinearForm(parse_rational(parts[0]), parse_rational(parts[1]))


def _parse_grid(text: str) -> list[Fraction]:
    return [parse_rational(piece) for piece in text.split(",") if piece.strip()]


def _cmd_analyze(args) -> tuple[dict, int]:
    F = _load_form(args)
    hd = hilbert_function(F)
    i_max = F.degree // 2
    T = toeplitz(F, i_max)
    report = {
        "command": "analyze",
        "form": F.to_json_dict(),
        "monomial_coeffs": [format_rational(c) for c in F.monomial_coeffs()],
        "hilbert_function": list(hd.h),
        "sperner": hd.sperner,
        "max_toeplitz": {
            "index": i_max,
            "matrix": _matrix_json(T),
            "report": _report_json(scan_all_minors(T)),
        },
    }
    return report, 0


def _cmd_hessians(args) -> tuple[dict, int]:
    F = _load_form(args)
    hd = hilbert_function(F)
    variant = "closed" if args.closed else "open" if args.open else "both"
    entries = []
    for i in range(F.degree // 2 + 1):
        poly = hessian_polynomial(F, i).poly
        entry = {
            "index": i,
            "degree": poly.degree,
            "monomial_coeffs": [
                format_rational(c) for c in poly.monomial_coeffs()
            ],
            "identically_zero": poly.is_zero,
        }
        if variant in ("both", "closed"):
            entry["positive_closed"] = positive_on_quadrant(poly, True)
        if variant in ("both", "open"):
            entry["positive_open"] = positive_on_quadrant(poly, False)
        entries.append(entry)
    report = {
        "command": "hessians",
        "form": F.to_json_dict(),
        "sperner": hd.sperner,
        "variant": variant,
        "hessians": entries,
    }
    return report, 0


def _cmd_toeplitz(args) -> tuple[dict, int]:
    F = _load_form(args)
    hd = hilbert_function(F)
    indices = [args.i] if args.i is not None else list(range(F.degree // 2 + 1))
    matrices = []
    for i in indices:
        T = toeplitz(F, i)
        matrices.append(
            {
                "index": i,
                "rows": T.rows,
                "cols": T.cols,
                "matrix": _matrix_json(T),
                "report": _report_json(scan_all_minors(T)),
            }
        )
    report = {
        "command": "toeplitz",
        "form": F.to_json_dict(),
        "sperner": hd.sperner,
        "matrices": matrices,
    }
    return report, 0


def _cmd_plucker(args) -> tuple[dict, int]:
    F = _load_form(args)
    i = args.i if args.i is not None else 0
    terms = plucker_terms(F, i)
    d = F.degree
    big_d = (i + 1) * (d - 2 * i)
    prefactor = Fraction(perm(d, 2 * i)) ** (i + 1)
    total = [Fraction(0)] * (big_d + 1)
    rows = []
    for term in terms:
        part = term["partition"]
        total[term["x_exponent"]] += prefactor * part.ssyt * term["minor"]
        rows.append(
            {
                "subset": list(term["subset"]),
                "shape": list(part.shape),
                "conjugate": list(part.conjugate),
                "ssyt": part.ssyt,
                "minor": format_rational(term["minor"]),
                "x_exponent": term["x_exponent"],
                "y_exponent": term["y_exponent"],
            }
        )
    direct = hessian_polynomial(F, i).poly.monomial_coeffs()
    match = tuple(total) == tuple(direct)
    report = {
        "command": "plucker",
        "form": F.to_json_dict(),
        "i": i,
        "prefactor": format_rational(prefactor),
        "terms": rows,
        "expansion_monomial_coeffs": [format_rational(c) for c in total],
        "hessian_monomial_coeffs": [format_rational(c) for c in direct],
        "match": match,
    }
    return report, 0 if match else 1


def _cmd_hrr(args) -> tuple[dict, int]:
    F = _load_form(args)
    i = args.i if args.i is not None else F.degree // 2
    if (args.ell is None) == (args.tuple is None):
        raise ValueError("provide exactly one of --ell or --tuple")
    if args.ell is not None:
        ell = _parse_pair(args.ell)
        satisfied = check_ordinary_hrr(F, ell, i)
        report = {
            "command": "hrr",
            "form": F.to_json_dict(),
            "i": i,
            "mode": "ordinary",
            "ell": [format_rational(ell.a), format_rational(ell.b)],
            "satisfied": satisfied,
        }
    else:
        with open(args.tuple, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        ells = [
            LinearForm(parse_rational(str(a)), parse_rational(str(b)))
            for a, b in raw
        ]
        satisfied = check_mixed_hrr(F, ells, i)
        report = {
            "command": "hrr",
            "form": F.to_json_dict(),
            "i": i,
            "mode": "mixed",
            "tuple": [
                [format_rational(e.a), format_rational(e.b)] for e in ells
            ],
            "satisfied": satisfied,
        }
    return report, 0


def _cmd_verify(args) -> tuple[dict, int]:
    F = _load_form(args)
    rep = verify_equivalence(F)
    report = {"command": "verify"}
    report.update(_equivalence_json(rep))
    if args.t_grid is not None and rep.hessian_closed:
        path = shift_path_experiment(F, _parse_grid(args.t_grid))
        report["path"] = {
            "t_samples": [format_rational(t) for t in path.t_samples],
            "in_stratum": list(path.in_stratum_flags),
            "tp_at_large_t": path.tp_at_large_t,
            "t_found": None
            if path.t_found is None
            else format_rational(path.t_found),
        }
    return report, 0 if not rep.anomalous else 1


def _cmd_fuzz(args) -> tuple[dict, int]:
    forms = generate_forms(args.family, args.degree, args.count, args.seed)
    anomalies = []
    closed_true = 0
    open_true = 0
    for F in forms:
        rep = verify_equivalence(F)
        closed_true += rep.hessian_closed
        open_true += rep.hessian_open
        if rep.anomalous:
            anomalies.append(_equivalence_json(rep))
    report = {
        "command": "fuzz",
        "family": args.family,
        "degree": args.degree,
        "count": args.count,
        "seed": args.seed,
        "checked": len(forms),
        "closed_true": closed_true,
        "open_true": open_true,
        "anomalies": len(anomalies),
        "anomaly_reports": anomalies,
    }
    return report, 0 if not anomalies else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpforms",
        description=(
            "Exact positivity invariants of bivariate homogeneous forms:"
            " Hessian determinants, coefficient Toeplitz matrices, and the"
            " equivalence between their positivity conditions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_form_args(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--form", help="inline JSON form encoding")
        src.add_argument("--form-file", help="path to a JSON form encoding")

    p_analyze = sub.add_parser("analyze", help="Hilbert data and the maximal Toeplitz report")
    add_form_args(p_analyze)
    p_analyze.set_defaults(func=_cmd_analyze)

    p_hess = sub.add_parser("hessians", help="all signed Hessians with positivity verdicts")
    add_form_args(p_hess)
    side = p_hess.add_mutually_exclusive_group()
    side.add_argument("--closed", action="store_true", help="closed-quadrant verdicts only")
    side.add_argument("--open", action="store_true", help="open-quadrant verdicts only")
    p_hess.set_defaults(func=_cmd_hessians)

    p_toep = sub.add_parser("toeplitz", help="coefficient Toeplitz matrices and minor reports")
    add_form_args(p_toep)
    p_toep.add_argument("--i", type=int, default=None, help="single degree index")
    p_toep.set_defaults(func=_cmd_toeplitz)

    p_pl = sub.add_parser("plucker", help="minor/tableau expansion of one signed Hessian")
    add_form_args(p_pl)
    p_pl.add_argument("--i", type=int, default=None, help="Hessian index (default 0)")
    p_pl.set_defaults(func=_cmd_plucker)

    p_hrr = sub.add_parser("hrr", help="ordinary or mixed Hodge-Riemann check")
    add_form_args(p_hrr)
    p_hrr.add_argument("--i", type=int, default=None, help="check degrees up to i")
    p_hrr.add_argument("--ell", help="linear form 'a,b' for the ordinary check")
    p_hrr.add_argument("--tuple", help="JSON file with d+1 pairs for the mixed check")
    p_hrr.set_defaults(func=_cmd_hrr)

    p_ver = sub.add_parser("verify", help="decide both sides of the equivalence")
    add_form_args(p_ver)
    p_ver.add_argument("--t-grid", help="comma list of shear parameters to sample")
    p_ver.set_defaults(func=_cmd_verify)

    p_fuzz = sub.add_parser("fuzz", help="verify a generated corpus")
    p_fuzz.add_argument("--family", required=True, choices=GENERATOR_FAMILIES)
    p_fuzz.add_argument("--degree", type=int, required=True)
    p_fuzz.add_argument("--count", type=int, required=True)
    p_fuzz.add_argument("--seed", type=int, required=True)
    p_fuzz.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except (ValueError, ZeroFormError, IndexError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
