"""JSON interchange: operators, named gates, spectra, Boolean functions, paths.

Operator JSON is either dense,

    {"d": 2, "n": 1, "re": [[...], ...], "im": [[...], ...]}

or the named-gate shorthand

    {"gate": "X"|"Z"|"H"|"T"|"S"|"CNOT"|"SWAP"|"GZX", "targets": [0],
     "d": 2, "n": 1}

with X and Z available for any d (shift/clock) and the rest qubit-only.
Spectra export as {"d", "n", "probs": [...]} in the little-endian
mixed-radix label order; Boolean functions as {"n", "table": [+-1, ...]}
in lexicographic input order (+1 before -1).
"""

import json

import numpy as np

from .errors import ShapeError
from .ops import Operator, embed, single_site_paulis
from .paths import make_path

_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
_S = np.diag([1, 1j]).astype(np.complex128)
_T = np.diag([1, np.exp(1j * np.pi / 4)]).astype(np.complex128)
_CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)
_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
)
_GZX = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]], dtype=np.complex128
)

QUBIT_GATES = {"H": _H, "S": _S, "T": _T, "CNOT": _CNOT, "SWAP": _SWAP, "GZX": _GZX}


def gate_matrix(name, d):
    if name == "X":
        return single_site_paulis(d)[1].copy()
    if name == "Z":
        return single_site_paulis(d)[d].copy()
    if name in QUBIT_GATES:
        if d != 2:
            raise ShapeError(f"gate {name} is qubit-only, got d={d}")
        return QUBIT_GATES[name].copy()
    raise ShapeError(f"unknown gate name {name!r}")


def operator_from_json_dict(obj):
    try:
        d = int(obj["d"])
        n = int(obj["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"operator JSON needs integer 'd' and 'n': {exc}") from exc
    if "gate" in obj:
        name = obj["gate"]
        mat = gate_matrix(name, d)
        targets = [int(t) for t in obj.get("targets", list(range(n)))]
        want = 2 if name in ("CNOT", "SWAP", "GZX") else 1
        if len(targets) != want:
            raise ShapeError(f"gate {name} needs {want} target(s), got {targets}")
        return embed(mat, targets, d, n)
    try:
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"operator JSON needs 're' and 'im' matrices: {exc}") from exc
    if re.shape != im.shape:
        raise ShapeError(f"re/im shapes differ: {re.shape} vs {im.shape}")
    return Operator(d, n, re + 1j * im)


def operator_to_json_dict(op):
    return {
        "d": op.d,
        "n": op.n,
        "re": op.mat.real.tolist(),
        "im": op.mat.imag.tolist(),
    }


def spectrum_to_json_dict(spec):
    return {"d": spec.d, "n": spec.n, "probs": spec.probs.tolist()}


def boolean_from_json_dict(obj):
    from .spectrum import BooleanFunction

    return BooleanFunction(int(obj["n"]), np.asarray(obj["table"], dtype=np.int8))


def path_from_json_dict(obj, mode="rescale"):
    try:
        d = int(obj["d"])
        n = int(obj["n"])
        raw_segments = obj["segments"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ShapeError(f"path JSON needs 'd', 'n', 'segments': {exc}") from exc
    segments = []
    for seg in raw_segments:
        terms = []
        for term in seg.get("terms", []):
            hobj = dict(term["h"])
            hobj.setdefault("d", d)
            hobj.setdefault("n", len(term["support"]))
            h = operator_from_json_dict(hobj)
            terms.append((term["support"], h.mat, float(term["r"])))
        segments.append((float(seg["duration"]), terms))
    return make_path(d, n, segments, mode=mode)


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def dump_json(obj, fh, indent=2):
    json.dump(obj, fh, indent=indent)
    fh.write("\n")
