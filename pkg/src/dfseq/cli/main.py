"""``dfseq`` command: invariants, mu-gamma, sequence, numeric.

Exit status is 0 on success, 2 for invalid input and 3 when an internal
certificate (flatness, quadrature convergence) fails.
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..errors import CertificateError, InputError
from ..invariants import InvariantBundle, analyze, lam
from ..numeric import (
    A_series,
    CurveScene,
    I_s,
    QuadratureError,
    bergman_deviation,
    f_dot_series,
    product_slope,
)
from ..sequences import default_window, mu_gamma_from_row, proposition_report, sequence_terms
from . import io as rio

DEFAULT_GAMMA_MAX = 30
NUMERIC_DEFAULTS = {
    "epsilon": 0.0,
    "gammas": [4, 8, 16],
    "sValues": [-2.0, -1.0, 0.0],
    "tValues": [0.4, 0.7, 1.0],
    "bergmanK": [3, 8],
}


def _threads() -> int:
    raw = os.environ.get("DFSEQ_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"DFSEQ_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise InputError(f"DFSEQ_THREADS must be a positive integer, got {raw!r}")
    return n


def _gamma_max(args, doc: Dict[str, Any], dim: int) -> int:
    g = args.gamma_max if args.gamma_max is not None else doc.get("gammaMax", DEFAULT_GAMMA_MAX)
    if g < dim + 4:
        raise InputError(f"gammaMax = {g} is too small; fitting needs at least dim + 4 = {dim + 4}")
    return g


def _analyze(doc: Dict[str, Any], args, where: str = ""):
    tc = rio.build_configuration(doc, where)
    return tc, analyze(tc, _gamma_max(args, doc, tc.dim), order=args.order)


def cmd_invariants(args, doc) -> Tuple[Dict[str, Any], Tuple[List[str], List[list]]]:
    rio.validate(doc, "input.schema.json", "configuration")
    tc, b = _analyze(doc, args)
    v = tc.variety
    report = {
        "command": "invariants",
        "source": rio.source_of(doc),
        "variety": {
            "dimension": v.dim,
            "degree": v.degree,
            "c1n": v.c1n,
            "hilbertPolynomial": rio.qs(v.hilbert_poly),
        },
        "centralFiber": [str(g) for g in tc.central_fiber],
        "flatness": {"gammas": list(tc.flatness_checked), "dims": list(tc.flatness_dims)},
        "table": [{"gamma": r.gamma, "k": r.k, "N": r.N, "w": r.w} for r in b.table.rows],
        "fit": {
            "Npoly": rio.qs(b.fit.n_poly),
            "wpoly": rio.qs(b.fit.w_poly),
            "fitWindow": list(b.fit.fit_window),
            "verified": list(b.fit.verified),
        },
        "F": rio.qs(b.expansion.F),
        "rFirst": rio.r_index(b.expansion.r_first),
        "norms": _norms_json(b),
        "lambda": rio.pi_value(lam(tc)),
        "f0Check": {
            "fromExpansion": rio.q(b.f0.from_expansion),
            "fromLeading": rio.q(b.f0.from_leading),
            "agree": b.f0.agree,
            "literalFormulaDiverges": b.f0.literal_formula_diverges,
        },
    }
    rows = [[r.gamma, r.k, r.N, r.w, Fraction(r.w, r.k * r.N)] for r in b.table.rows]
    return report, (["gamma", "k", "N_k", "w_k", "w_k/(k N_k)"], rows)


def _norms_json(b: InvariantBundle) -> Dict[str, Any]:
    n = b.norms
    return {
        "cbar": rio.q(n.cbar),
        "b": rio.qs(n.b),
        "norm1": rio.q(n.norm1),
        "normInf": rio.q(n.norm_inf),
        "delta": rio.q(n.delta),
    }


def cmd_mu_gamma(args, doc):
    rio.validate(doc, "input.schema.json", "configuration")
    tc, b = _analyze(doc, args)
    rep = proposition_report(tc, b, args.tail_window)
    rows_json = []
    rows_csv = []
    for row, trow in zip(rep.rows, b.table.rows):
        nd = mu_gamma_from_row(trow, tc.dim).norms
        rows_json.append(
            {
                "gamma": row.gamma,
                "k": row.k,
                "N": trow.N,
                "w": trow.w,
                "norm1": rio.q(nd.norm1),
                "normInf": rio.q(nd.norm_inf),
                "delta": rio.q(nd.delta),
                "T": rio.pi_value(row.T),
                "closedForm": rio.pi_value(row.closed_form),
                "growthRatio": rio.q(row.growth_ratio),
            }
        )
        rows_csv.append(
            [
                row.gamma, row.k, trow.N, trow.w, nd.norm1, nd.norm_inf, nd.delta,
                str(row.T), repr(row.T.value), str(row.closed_form), repr(row.closed_form.value),
                row.growth_ratio,
            ]
        )
    report = {
        "command": "mu-gamma",
        "source": rio.source_of(doc),
        "rFirst": rio.r_index(rep.r_first),
        "Fr": rio.q(rep.F_r),
        "branch": rep.branch,
        "rows": rows_json,
        "decayExponent": rep.decay_exponent,
        "growthConstant": None if rep.growth_constant is None else rio.q(rep.growth_constant),
        "growthBoundHolds": rep.growth_bound_holds,
        "tailInf": {
            "window": args.tail_window if args.tail_window else default_window(len(rep.rows)),
            "T": rio.pi_value(rep.tail_inf_T),
            "closedForm": rio.pi_value(rep.tail_inf_closed),
        },
        "warnings": list(rep.warnings),
    }
    header = [
        "gamma", "k", "N_k", "w_k", "norm1", "normInf", "delta",
        "T", "T_float", "closed_form", "closed_form_float", "growth_ratio",
    ]
    return report, (header, rows_csv)


def cmd_sequence(args, doc):
    rio.validate(doc, "input.schema.json", "sequence")
    items = doc["items"]
    top_gamma = doc.get("gammaMax")

    def work(j_item):
        j, item = j_item
        if "gammaMax" not in item and top_gamma is not None:
            item = {**item, "gammaMax": top_gamma}
        return _analyze(item, args, where=f"items[{j}].")

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        configs = list(pool.map(work, enumerate(items)))  # map keeps input order
    window = args.tail_window or doc.get("tailWindow")
    rep = sequence_terms(configs, window)
    out_items = []
    rows = []
    for j, rec in enumerate(rep.records):
        it = rec.item
        entry = {
            "index": j,
            "exponent": it.exponent,
            "N": it.N,
            "w": it.w,
            "F0": rio.q(it.F0),
            "norm1": rio.q(it.norm1),
            "T": rio.pi_value(rec.T),
        }
        if "name" in items[j]:
            entry["name"] = items[j]["name"]
        out_items.append(entry)
        rows.append([j, items[j].get("name", ""), it.exponent, it.N, it.w, it.F0, it.norm1, str(rec.T), repr(rec.T.value)])
    report = {
        "command": "sequence",
        "c1n": rep.c1n,
        "items": out_items,
        "tailInf": rio.pi_value(rep.tail_inf),
        "window": rep.window,
    }
    if "name" in doc:
        report = {"command": "sequence", "name": doc["name"], **{k: v for k, v in report.items() if k != "command"}}
    header = ["index", "name", "exponent", "N", "w", "F0", "norm1", "T", "T_float"]
    return report, (header, rows)


def cmd_numeric(args, doc):
    rio.validate(doc, "input.schema.json", "configuration")
    tc, b = _analyze(doc, args)
    opts = {**NUMERIC_DEFAULTS, **doc.get("numeric", {})}
    scene_kw = {"epsilon": float(opts["epsilon"])}
    if args.nodes is not None:
        if args.nodes < 2:
            raise InputError("--nodes must be at least 2")
        scene_kw["radial_nodes"] = args.nodes
    scene = CurveScene(**scene_kw)
    product = product_slope(tc) is not None

    fdot = []
    kis = []
    for g in opts["gammas"]:
        for p in f_dot_series(scene, tc, g, opts["sValues"]):
            fdot.append({"gamma": g, "x": p.x, "value": p.value, "error": p.error})
        if product:
            for s in opts["sValues"]:
                k = g * tc.exponent
                kis.append({"gamma": g, "x": float(s), "value": k * I_s(scene, tc, g, s), "error": 0.0})
    A = []
    if product:
        A = [{"x": p.x, "value": p.value, "error": p.error} for p in A_series(scene, tc, opts["tValues"])]
    berg = [{"k": k, "deviation": bergman_deviation(scene, k)} for k in opts["bergmanK"]]
    report = {
        "command": "numeric",
        "source": rio.source_of(doc),
        "scene": {
            "epsilon": scene.epsilon,
            "radialNodes": scene.radial_nodes,
            "angularNodes": scene.angular_nodes,
            "tol": scene.tol,
        },
        "productType": product,
        "F0": rio.q(b.expansion.F0),
        "fDot": fdot,
        "A": A,
        "bergman": berg,
        "kIs": kis,
    }
    rows = [["fdot", p["gamma"], p["x"], p["value"], p["error"]] for p in fdot]
    rows += [["A", "", p["x"], p["value"], p["error"]] for p in A]
    rows += [["bergman", p["k"], "", p["deviation"], ""] for p in berg]
    rows += [["kIs", p["gamma"], p["x"], p["value"], ""] for p in kis]
    return report, (["series", "gamma_or_k", "x", "value", "error"], rows)


COMMANDS = {
    "invariants": cmd_invariants,
    "mu-gamma": cmd_mu_gamma,
    "sequence": cmd_sequence,
    "numeric": cmd_numeric,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dfseq", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("input", help="JSON input file")
    p.add_argument("--gamma-max", type=int, default=None, help="largest gamma in the weight table")
    p.add_argument("--order", type=int, default=5, help="expansion order r (default 5)")
    p.add_argument("--tail-window", type=int, default=None, help="items in the trailing liminf window")
    p.add_argument("--nodes", type=int, default=None, help="radial quadrature nodes (numeric)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    return p


def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, str]:
    """Execute a command; returns the exit status and the rendered report."""
    args = build_parser().parse_args(argv)
    try:
        if args.order < 1:
            raise InputError("--order must be at least 1")
        if args.tail_window is not None and args.tail_window < 1:
            raise InputError("--tail-window must be at least 1")
        doc = rio.read_json(args.input)
        report, (header, rows) = COMMANDS[args.command](args, doc)
    except InputError as exc:
        print(f"dfseq: error: {exc}", file=sys.stderr)
        return 2, ""
    except (CertificateError, QuadratureError) as exc:
        print(f"dfseq: certificate failure: {exc}", file=sys.stderr)
        return 3, ""
    text = rio.dumps_json(report) if args.format == "json" else rio.dumps_csv(header, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
