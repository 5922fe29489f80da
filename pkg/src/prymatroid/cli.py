"""Command line interface.

Exit codes: 0 success, 1 validation error, 2 property or assertion
failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

import sympy

from . import __version__
from .checks import run_suite
from .cover import CoverError
from .cycles import CycleError, all_fundamental_cycles
from .document import DocumentError, cover_to_dict, dumps, load
from .generate import random_cover
from .linalg import det
from .matroid import ClassificationError, MatroidError, SignedMatroidView, simplify
from .prym import (
    PrymError,
    compare_pryms,
    gram_matrix,
    prym_data,
    prym_volume_det,
    prym_volume_ogod,
    symbols_for,
    verify_simplification_invariance,
)

EXIT_OK, EXIT_INVALID, EXIT_PROPERTY, EXIT_IO = 0, 1, 2, 3


class PropertyFailure(Exception):
    pass


def _q(x):
    return str(Fraction(x)) if isinstance(x, (int, Fraction)) else str(x)


def _matrix(m):
    return [[_q(x) for x in row] for row in m]


def _chain(ground, v):
    return {str(e): x for e, x in zip(ground, v) if x}


def _edges(es):
    return [str(e) for e in es]


def report_validate(c, warnings):
    view = SignedMatroidView(c)
    return {
        "valid": True,
        "g": c.genus,
        "g_total": c.total_genus,
        "h": view.rank,
        "d": view.dilation_index,
        "free": c.is_free,
        "normalized_signs": {str(e): s for e, s in c.sign.items()},
    }


def report_analyze(c):
    view = SignedMatroidView(c)
    ones, twos, mult = view.circuits_dual_small()
    return {
        "rank_dual": view.rank,
        "rank": view.rank_M,
        "dilation_index": view.dilation_index,
        "ground_set": _edges(view.ground),
        "ogods": [{"edges": _edges(o.edges), "index": o.index} for o in view.ogods],
        "circuits": [
            {"edges": _edges(fc.circuit.edges), "type": fc.circuit.type, "cycle": _chain(view.ground, fc.coefficients)}
            for fc in all_fundamental_cycles(view)
        ],
        "dual_1_circuits": [_edges(x.edges) for x in ones],
        "dual_2_circuits": [_edges(x.edges) for x in twos],
        "multiplicities": {str(e): m for e, m in mult.items()},
        "simple": not ones and not twos,
    }


def report_gram(c, symbolic=False, ogod=None):
    view = SignedMatroidView(c)
    p = prym_data(c, ogod)
    vol_ogod, poly = prym_volume_ogod(view)
    out = {
        "ground_set": _edges(view.ground),
        "dimension": p.dimension,
        "basis_source": p.provenance,
        "ogod": _edges(p.ogod) if p.ogod is not None else None,
        "kernel_basis": [_chain(view.ground, v) for v in p.basis],
        "gram": _matrix(p.gram),
        "gram_halved": _matrix([[x / 2 for x in row] for row in p.gram]),
        "gram_det": _q(det(p.gram)),
        "volume_squared_det": _q(prym_volume_det(p)),
        "volume_squared_ogod": _q(vol_ogod),
        "volume_polynomial": poly.as_dict(),
        "polarization_type": p.polarization,
        "dilation_index": p.dilation_index,
    }
    if p.polarization is None:
        out["warnings"] = ["basis spans a proper sublattice; polarization not computed"]
    if symbolic:
        syms = symbols_for(view.ground)
        g = gram_matrix(p.basis, syms)
        out["gram_symbolic"] = [[str(sympy.expand(x)) for x in row] for row in g]
        out["gram_symbolic_halved"] = [[str(sympy.expand(x / 2)) for x in row] for row in g]
        out["volume_polynomial_symbolic"] = str(poly.to_sympy())
    if prym_volume_det(p) != vol_ogod:
        raise PropertyFailure(f"volume routes disagree: {prym_volume_det(p)} vs {vol_ogod}")
    return out


def report_simplify(c):
    new, emap, transcript = simplify(c)
    rep = verify_simplification_invariance(c)
    out = {
        "transcript": [s.as_dict() for s in transcript],
        "edge_map": {str(e): {"edge": str(t), "factor": s} for e, (t, s) in emap.items() if e in set(c.undilated_edges)},
        "invariant": rep.ok,
        "gram_before": _matrix(rep.original.gram),
        "gram_after": _matrix(rep.simplified.gram),
        "gram_mapped": _matrix(rep.mapped_gram),
        "document": cover_to_dict(new),
    }
    if not rep.ok:
        out["failure"] = rep.message
    return new, out


def report_compare(a, b, bound):
    pa, pb = prym_data(a), prym_data(b)
    v = compare_pryms(pa, pb, bound)
    witness = {}
    for k, val in v.witness.items():
        if k in ("gram",):
            witness[k] = _matrix(val)
        elif k == "U":
            witness[k] = val
        elif k == "det":
            witness[k] = [_q(x) for x in val] if isinstance(val, list) else _q(val)
        elif k == "norms":
            witness[k] = [[_q(x) for x in n] for n in val]
        else:
            witness[k] = _q(val) if isinstance(val, Fraction) else val
    return {
        "verdict": v.kind,
        "witness": witness,
        "gram_a": _matrix(pa.gram),
        "gram_b": _matrix(pb.gram),
    }


def report_fuzz(seed, trials, max_edges, max_vertices=6):
    rng = random.Random(seed)
    failures = []
    counts = {}
    for t in range(trials):
        c = random_cover(rng, max_vertices=max_vertices, max_edges=max_edges)
        results = run_suite(c)
        for name, msgs in results.items():
            counts.setdefault(name, [0, 0])
            counts[name][0 if not msgs else 1] += 1
            if msgs:
                failures.append({"trial": t, "check": name, "messages": msgs, "document": cover_to_dict(c)})
    return {
        "seed": seed,
        "trials": trials,
        "max_edges": max_edges,
        "checks": {k: {"passed": v[0], "failed": v[1]} for k, v in counts.items()},
        "failures": failures,
    }


def _table(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_table(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(pad + _inline(obj))
    return lines


def _flat(v):
    if isinstance(v, dict):
        return all(not isinstance(x, (dict, list)) for x in v.values())
    return all(not isinstance(x, dict) and (not isinstance(x, list) or _flat(x)) for x in v)


def _inline(v):
    if isinstance(v, dict):
        return ", ".join(f"{k}={_inline(x)}" for k, x in v.items())
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    return str(v)


def emit(report, fmt, stream):
    if fmt == "table":
        stream.write("\n".join(_table(report)) + "\n")
    else:
        stream.write(json.dumps(report, indent=2) + "\n")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    p = argparse.ArgumentParser(
        prog="prymatroid",
        description="Signed graphic matroids and principalized Pryms of double covers.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("validate", parents=[common], help="check a cover document")
    s.add_argument("file")
    s = sub.add_parser("analyze", parents=[common], help="ogods, circuits, multiplicities")
    s.add_argument("file")
    s = sub.add_parser("gram", parents=[common], help="kernel basis, Gram matrix, volumes, polarization")
    s.add_argument("file")
    s.add_argument("--symbolic", action="store_true", help="also print the Gram matrix in edge-length symbols")
    s.add_argument("--ogod", help="comma-separated ogod to build the basis from")
    s = sub.add_parser("simplify", parents=[common], help="simplify and check Prym invariance")
    s.add_argument("file")
    s.add_argument("--out", help="write the simplified document here")
    s = sub.add_parser("compare", parents=[common], help="compare two Pryms")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--congruence-bound", type=int, default=3)
    s = sub.add_parser("fuzz", parents=[common], help="random covers through the invariant suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--max-edges", type=int, default=10)
    return p


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    echo = {"command": args.command}
    try:
        if args.command == "validate":
            c, warnings = load(args.file)
            echo.update(file=args.file)
            result = report_validate(c, warnings)
        elif args.command == "analyze":
            c, warnings = load(args.file)
            echo.update(file=args.file)
            result = report_analyze(c)
        elif args.command == "gram":
            c, warnings = load(args.file)
            echo.update(file=args.file, symbolic=args.symbolic, ogod=args.ogod)
            ogod = [x.strip() for x in args.ogod.split(",") if x.strip()] if args.ogod else None
            result = report_gram(c, args.symbolic, ogod)
        elif args.command == "simplify":
            c, warnings = load(args.file)
            echo.update(file=args.file, out=args.out)
            new, result = report_simplify(c)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    fh.write(dumps(new))
            if not result["invariant"]:
                raise PropertyFailure(result["failure"])
        elif args.command == "compare":
            a, wa = load(args.file_a)
            b, wb = load(args.file_b)
            warnings = wa + wb
            echo.update(files=[args.file_a, args.file_b], congruence_bound=args.congruence_bound)
            result = report_compare(a, b, args.congruence_bound)
        else:
            warnings = []
            echo.update(seed=args.seed, trials=args.trials, max_edges=args.max_edges)
            result = report_fuzz(args.seed, args.trials, args.max_edges)
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except (DocumentError, CoverError) as exc:
        emit({**echo, "valid": False, "error": str(exc)}, args.format, stdout)
        stderr.write(f"invalid: {exc}\n")
        return EXIT_INVALID
    except (PropertyFailure, CycleError, PrymError, ClassificationError, MatroidError) as exc:
        stderr.write(f"property failure: {exc}\n")
        return EXIT_PROPERTY
    report = {**echo, "results": result, "warnings": warnings + result.pop("warnings", [])}
    emit(report, args.format, stdout)
    if args.command == "fuzz" and result["failures"]:
        return EXIT_PROPERTY
    return EXIT_OK


def main():
    sys.exit(run())
