"""Command line front end.

    seqcm-engine <command> <file> [--seed N] [--mode generic|as-given]
                 [--degree-bound D] [--self-check] [--json out.json]

A human-readable summary goes to stdout; ``--json PATH`` also writes the
machine report (``--json -`` prints it to stdout instead of the summary).
Exit codes: 0 success, 2 criteria not applicable, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, checks
from .algebra import format_vector
from .document import DocumentError, load
from .ext import ext_profile
from .genericity import GenericityFailure, gin_revlex, is_filter_regular_sequence
from .groebner import InternalInconsistency, buchberger, initial_module
from .hilbert import dim_mult, quotient_series
from .seqcm import GENERIC, MODES, adeg, seqcm_verdict

COMMANDS = ("gb", "hilbert", "ext", "adeg", "gin", "filter-regular", "seqcm")

EXIT_OK, EXIT_ERROR, EXIT_NOT_APPLICABLE = 0, 1, 2


def _vectors(vs) -> list:
    return [format_vector(v) for v in vs]


def _series_block(H) -> dict:
    dm = dim_mult(H)
    return {"series": H.to_json(), "dim": dm.dim, "multiplicity": dm.e if dm.e is not None else 0}


def _gb(U, args):
    G = buchberger(U)
    return {
        "order": G.order,
        "groebner_basis": _vectors(G.elements),
        "minimal_generators": _vectors(G.minimal_generators),
        "initial_module": _vectors(initial_module(G).generators),
    }, []


def _hilbert(U, args):
    H = quotient_series(U)
    out = _series_block(H)
    out["hilbert_function"] = [[j, H(j)] for j in range(min(0, *U.module.twists), args.degree_bound + 1)]
    return out, []


def _ext(U, args):
    prof = ext_profile(U)
    rows = []
    for r in range(U.n, -1, -1):
        e = prof[r]
        rows.append({"j": e.ext_index, "r": r, **_series_block(e.series), "adeg_r": e.adeg})
    return {"ext": rows, "betti": prof.resolution.betti()}, []


def _adeg(U, args):
    a = adeg(U)
    return {"adeg": a.total, "per_r": list(a.per_r)}, []


def _gin(U, args):
    g = gin_revlex(U, args.seed)
    return {
        "gin": _vectors(g.module.generators),
        "stable": g.stable,
        "seeds_tried": list(g.seeds_tried),
        "change": [list(r) for r in g.change.matrix],
    }, []


def _filter_regular(U, args):
    if args.mode == GENERIC:
        g = gin_revlex(U, args.seed)
        rep = is_filter_regular_sequence(g.transformed)
        return {"coordinates": "generic", "seeds_tried": list(g.seeds_tried), **rep.to_json()}, []
    return {"coordinates": "as-given", **is_filter_regular_sequence(U).to_json()}, []


def _seqcm(U, args):
    rep = seqcm_verdict(U, args.mode, args.seed)
    out = {
        "sequentially_cohen_macaulay": rep.sequentially_cm,
        "criteria_applicable": rep.applicable,
        "peskine": rep.peskine.to_json(),
        "herzog_sbarra": rep.herzog_sbarra.to_json() if rep.herzog_sbarra else "not applicable",
        "adeg_criterion": rep.adeg.to_json() if rep.adeg else "not applicable",
        "filter_regular": rep.filter_regular.to_json(),
        "initial_module": _vectors(rep.initial_module.generators),
    }
    if args.mode == GENERIC:
        out["gin_stable"] = rep.gin_stable
        out["seeds_tried"] = list(rep.seeds_tried)
    notes = [] if rep.applicable else ["not-applicable"]
    return out, notes


_HANDLERS = {
    "gb": _gb,
    "hilbert": _hilbert,
    "ext": _ext,
    "adeg": _adeg,
    "gin": _gin,
    "filter-regular": _filter_regular,
    "seqcm": _seqcm,
}


def _self_check(U, bound: int) -> dict:
    hf = checks.hilbert_oracle(U, bound)
    out = {"degree_bound": bound, "hilbert_mismatches": [m.__dict__ for m in hf]}
    ext = checks.ext_oracle(U, min(bound, 6)) if U.n <= 3 else []
    out["ext_checked"] = U.n <= 3
    out["ext_mismatches"] = [m.__dict__ for m in ext]
    out["passed"] = not hf and not ext
    return out


def run(command: str, doc, seed: int = 0, mode: str = GENERIC, degree_bound: int = 8,
        self_check: bool = False) -> tuple:
    """Execute a command; returns (report dict, exit code)."""
    args = argparse.Namespace(seed=seed, mode=mode, degree_bound=degree_bound)
    U = doc.submodule
    report = {
        "engine": "seqcm-engine",
        "version": __version__,
        "command": command,
        "p": doc.ring.p,
        "n": doc.ring.n,
        "twists": list(doc.module.twists),
        "generators": _vectors(U.generators),
        "seed": seed,
        "mode": mode,
    }
    result, notes = _HANDLERS[command](U, args)
    report["result"] = result
    code = EXIT_NOT_APPLICABLE if "not-applicable" in notes else EXIT_OK
    if self_check:
        sc = _self_check(U, degree_bound)
        report["self_check"] = sc
        if not sc["passed"]:
            code = EXIT_ERROR
    return report, code


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def summary(report: dict) -> str:
    r = report["result"]
    cmd = report["command"]
    head = f"{cmd}: n={report['n']} p={report['p']} twists={report['twists']} seed={report['seed']} mode={report['mode']}"
    lines = [head]
    if cmd == "gb":
        lines += ["Groebner basis:"] + [f"  {v}" for v in r["groebner_basis"]]
        lines += ["initial module:"] + [f"  {v}" for v in r["initial_module"]]
    elif cmd == "hilbert":
        lines.append(f"dim {r['dim']}, multiplicity {r['multiplicity']}")
        lines.append("HF: " + " ".join(f"{j}:{v}" for j, v in r["hilbert_function"]))
    elif cmd == "ext":
        for row in r["ext"]:
            lines.append(f"  Ext^{row['j']}: dim {row['dim']}, e {row['multiplicity']}, adeg_{row['r']} = {row['adeg_r']}")
    elif cmd == "adeg":
        lines.append(f"adeg = {r['adeg']}  per r: {r['per_r']}")
    elif cmd == "gin":
        lines += ["gin_revlex:"] + [f"  {v}" for v in r["gin"]]
    elif cmd == "filter-regular":
        lines.append(f"filter regular sequence x{report['n']}..x1: {r['overall']}")
        for e in r["per_variable"]:
            flag = "ok" if e["filter_regular"] else "FAILS"
            lines.append(f"  {e['variable']}: colon dim {e['colon_dim']} {flag}")
    elif cmd == "seqcm":
        lines.append(f"sequentially Cohen-Macaulay: {r['sequentially_cohen_macaulay']}")
        lines.append(f"  Ext test: {r['peskine']['verdict']}")
        hs, ad = r["herzog_sbarra"], r["adeg_criterion"]
        lines.append(f"  Hilbert functions of Ext: {hs if isinstance(hs, str) else hs['verdict']}")
        if isinstance(ad, str):
            lines.append(f"  arithmetic degree: {ad}")
        else:
            lines.append(f"  arithmetic degree: {ad['verdict']} ({ad['adeg_U']} vs {ad['adeg_V']})")
        if not r["filter_regular"]["overall"]:
            bad = [e["variable"] for e in r["filter_regular"]["per_variable"] if not e["filter_regular"]]
            lines.append(f"  not filter regular: {', '.join(bad)}")
    if "self_check" in report:
        lines.append(f"self-check: {'passed' if report['self_check']['passed'] else 'FAILED'}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="seqcm-engine", description="Sequential Cohen-Macaulay tests for graded modules.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("file")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--mode", choices=MODES, default=GENERIC)
    ap.add_argument("--degree-bound", type=int, default=8)
    ap.add_argument("--self-check", action="store_true")
    ap.add_argument("--json", metavar="PATH")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = load(args.file)
        report, code = run(args.command, doc, args.seed, args.mode, args.degree_bound, args.self_check)
    except DocumentError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except GenericityFailure as exc:
        print(f"error: {exc}; seeds tried: {exc.seeds}", file=sys.stderr)
        return EXIT_ERROR
    except (InternalInconsistency, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    text = dumps(report)
    if args.json == "-":
        sys.stdout.write(text)
    else:
        sys.stdout.write(summary(report))
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
