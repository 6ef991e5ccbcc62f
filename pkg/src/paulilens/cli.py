"""Command line interface.

Subcommands: spectrum, influence, cis, cis-gaussian, classify, magic,
coherence, otoc, wigner, cost-audit.  Inputs are JSON files (see io.py
for the operator / path schemas; `otoc` takes {"od": <op>, "oa": <op>,
"u": <op, optional>}).  Exit codes: 0 success, 1 input error, 2 bound
violation from cost-audit.
"""

import argparse
import json
import sys

import numpy as np

from . import io as pio
from .coherence import cohering_power_search
from .errors import PauliLensError
from .gaussian import gaussian_circuit_sensitivity
from .magic import magic_entropy, magic_power_search
from .ops import Operator, identity
from .otoc import otoc
from .paths import classify_gate, complexity_certificate, reaudit_certificate
from .sensitivity import circuit_sensitivity
from .spectrum import influence_local, influence_total, pauli_spectrum
from .wigner import wigner_function


def _schema(kind, payload):
    return {"schema": "pauli-lens/1", "kind": kind, **payload}


def _emit(report, fmt, out=sys.stdout):
    if fmt == "json":
        pio.dump_json(report, out)
    else:
        for key, value in report.items():
            if isinstance(value, list):
                value = ";".join(str(v) for v in value)
            out.write(f"{key},{value}\n")


def _load_operator(path):
    return pio.operator_from_json_dict(pio.load_json(path))


def cmd_spectrum(args):
    spec = pauli_spectrum(_load_operator(args.input))
    _emit(_schema("spectrum", pio.spectrum_to_json_dict(spec)), args.format)
    return 0


def cmd_influence(args):
    spec = pauli_spectrum(_load_operator(args.input))
    payload = {
        "d": spec.d,
        "n": spec.n,
        "total": influence_total(spec),
        "local": [influence_local(spec, j) for j in range(spec.n)],
    }
    _emit(_schema("influence", payload), args.format)
    return 0


def cmd_cis(args):
    rep = circuit_sensitivity(_load_operator(args.input))
    payload = {"value": rep.value, "iterations": rep.iterations, "degenerate": rep.degenerate}
    _emit(_schema("cis", payload), args.format)
    return 0


def cmd_cis_gaussian(args):
    rep = gaussian_circuit_sensitivity(_load_operator(args.input))
    _emit(_schema("cis-gaussian", {"value": rep.value}), args.format)
    return 0


def cmd_classify(args):
    tax = classify_gate(_load_operator(args.input), tol=args.tol)
    _emit(tax.to_json_dict(), args.format)
    return 0


def cmd_magic(args):
    u = _load_operator(args.input)
    power = magic_power_search(u, restarts=args.restarts, seed=args.seed, threads=args.threads)
    payload = {
        "magic_entropy": magic_entropy(u),
        "magic_power_lower": power.value,
        "restarts_used": power.restarts_used,
        "converged": power.converged,
        "exact": power.exact,
    }
    _emit(_schema("magic", payload), args.format)
    return 0


def cmd_coherence(args):
    u = _load_operator(args.input)
    res = cohering_power_search(
        u, restarts=args.restarts, seed=args.seed, threads=args.threads
    )
    payload = {
        "cohering_power_lower": res.value,
        "restarts_used": res.restarts_used,
        "converged": res.converged,
    }
    _emit(_schema("coherence", payload), args.format)
    return 0


def cmd_otoc(args):
    obj = pio.load_json(args.input)
    od = pio.operator_from_json_dict(obj["od"])
    oa = pio.operator_from_json_dict(obj["oa"])
    u = pio.operator_from_json_dict(obj["u"]) if "u" in obj else identity(od.d, od.n)
    _emit(_schema("otoc", {"value": otoc(u, od, oa)}), args.format)
    return 0


def cmd_wigner(args):
    w = wigner_function(_load_operator(args.input))
    payload = {
        "n": w.n,
        "re": np.real(w.values).tolist(),
        "im": np.imag(w.values).tolist(),
    }
    _emit(_schema("wigner", payload), args.format)
    return 0


def cmd_cost_audit(args):
    obj = pio.load_json(args.input)
    if obj.get("kind") == "cost-audit" and "segments" not in obj:
        ok = reaudit_certificate(obj)
        _emit(_schema("cost-audit", {**obj, "reaudit_ok": ok}), args.format)
        return 0 if ok else 2
    path = pio.path_from_json_dict(obj)
    report = complexity_certificate(
        path, restarts=args.restarts, seed=args.seed, tol=args.tol
    )
    _emit(report.to_json_dict(), args.format)
    return 0 if report.all_bounds_hold else 2


def build_parser():
    parser = argparse.ArgumentParser(prog="pauli-lens")
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "spectrum": cmd_spectrum,
        "influence": cmd_influence,
        "cis": cmd_cis,
        "cis-gaussian": cmd_cis_gaussian,
        "classify": cmd_classify,
        "magic": cmd_magic,
        "coherence": cmd_coherence,
        "otoc": cmd_otoc,
        "wigner": cmd_wigner,
        "cost-audit": cmd_cost_audit,
    }
    for name, fn in commands.items():
        p = sub.add_parser(name)
        p.add_argument("--input", required=True)
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--restarts", type=int, default=16)
        p.add_argument("--tol", type=float, default=1e-7)
        p.add_argument("--threads", type=int, default=1)
        p.set_defaults(fn=fn)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (PauliLensError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
