"""Command-line harness: ``dirac4 <command> [flags]``.

Every invocation writes exactly one JSON document to standard output.
Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""

import argparse
import json
import math
import os
import sys
from enum import Enum

import numpy as np

from . import basis, factor, matgen, params, pseudo, subgroups, unitary, verify
from .errors import Dirac4Error
from .kernels import BACKEND
from .reconcile import reconciliation_report

DEFAULT_TOL = 1e-10

# library error codes that mean "the input is not in the domain"
_INPUT_CODES = {"SHAPE", "SINGULAR", "CONSTRAINT", "NORM", "NOT_UNITARY", "RANGE", "POLE", "INPUT"}


class UsageError(Dirac4Error):
    def __init__(self, message, context=None):
        super().__init__("USAGE", message, context)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- JSON

def _num(x):
    x = float(x)
    if not math.isfinite(x):
        raise Dirac4Error("NONFINITE", "result is not finite", {})
    return x + 0.0   # folds -0.0 into 0.0


def plain(obj):
    """Convert results into JSON-ready values; complex numbers become
    ``[re, im]``."""
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return plain(obj.tolist())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [_num(obj.real), _num(obj.imag)]
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    return obj


def _emit(doc, out):
    out.write(json.dumps(plain(doc), separators=(",", ":"), sort_keys=False))
    out.write("\n")


def _read_json(source, stdin):
    try:
        if source in (None, "-"):
            text = stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise Dirac4Error("INPUT", "cannot read input", {"path": source, "error": exc.strerror})
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise Dirac4Error("INPUT", "input is not valid JSON", {"line": exc.lineno, "column": exc.colno})


def _complex(z):
    if isinstance(z, (int, float)) and not isinstance(z, bool):
        return complex(z)
    if isinstance(z, list) and len(z) == 2 and all(isinstance(v, (int, float)) for v in z):
        return complex(z[0], z[1])
    raise Dirac4Error("SHAPE", "numbers must be reals or [re, im] pairs", {"value": z})


def _vec4(obj, name):
    if not isinstance(obj, list) or len(obj) != 4:
        raise Dirac4Error("SHAPE", f"{name} must hold 4 components", {"vector": name})
    return [_complex(z) for z in obj]


def _params(obj, case=None):
    """Parse one parameter object; with a case, absent vectors are zero and
    the reduced form is embedded."""
    if not isinstance(obj, dict):
        raise Dirac4Error("SHAPE", "parameters must be a JSON object", {})
    missing = [c for c in "kmnl" if c not in obj]
    if missing and case is None:
        raise Dirac4Error("SHAPE", "parameters need k, m, n and l", {"missing": missing})
    vals = {c: _vec4(obj[c], c) if c in obj else [0j] * 4 for c in "kmnl"}
    p = params.ParamsKMNL(**vals)
    return subgroups.restrict(p, case) if case else p


def _matrix(obj):
    if isinstance(obj, dict):
        obj = obj.get("matrix")
    if not isinstance(obj, list) or len(obj) != 4 or any(not isinstance(r, list) or len(r) != 4 for r in obj):
        raise Dirac4Error("SHAPE", "expected a 4x4 matrix of [re, im] entries", {})
    return np.array([[_complex(z) for z in row] for row in obj])


def _pair(doc, case):
    if isinstance(doc, dict) and "left" in doc and "right" in doc:
        return _params(doc["left"], case), _params(doc["right"], case)
    if isinstance(doc, list) and len(doc) == 2:
        return _params(doc[0], case), _params(doc[1], case)
    raise Dirac4Error("SHAPE", "compose needs {\"left\": ..., \"right\": ...} or a two-element list", {})


def _tolerance(args, default=DEFAULT_TOL):
    """``--tol``, else ``DIRAC4_TOL``, else ``default``."""
    if args.tol is not None:
        return args.tol
    env = os.environ.get("DIRAC4_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            raise Dirac4Error("INPUT", "DIRAC4_TOL is not a number", {"value": env}) from None
    return default


# ------------------------------------------------------------ commands

def cmd_compose(args, doc):
    p1, p2 = _pair(doc, args.case)
    return 0, {"params": params.compose(p1, p2).to_json()}


def cmd_invert(args, doc):
    return 0, {"params": params.inverse(_params(doc, args.case)).to_json()}


def cmd_det(args, doc):
    return 0, {"det": params.determinant(_params(doc, args.case))}


def cmd_decompose(args, doc):
    p = _params(doc, args.case)
    if args.basis == "gellmann":
        return 0, {"basis": "gellmann", "coords": basis.to_gellmann_coords(p).as_dict()}
    d = factor.dirac_coords(params.to_matrix(p))
    coords = {"gamma": d.gamma}
    for key in ("a", "b", "X", "Y", "Z"):
        for j, z in enumerate(getattr(d, key), start=1):
            coords[f"{key}{j}"] = z
    return 0, {"basis": "dirac", "coords": coords}


def cmd_check_unitary(args, doc):
    tol = _tolerance(args)
    sig = pseudo.Signature(args.signature)
    p = _params(doc, args.case)
    det_defect = abs(params.determinant(p) - 1)
    if sig is pseudo.Signature.SU4:
        res = unitary.unitarity_residual(p)
    elif sig is pseudo.Signature.SU22:
        res = pseudo.pseudo_unitarity_residual(p, sig)
    else:
        res = None
    if res is not None:
        residuals = res.magnitudes()
    else:
        # no closed-form system for (3,1): entrywise G^+ eta G - eta
        G = params.to_matrix(p)
        D = np.abs(G.conj().T @ sig.eta @ G - sig.eta)
        residuals = {f"r{i}{j}": D[i, j] for i in range(4) for j in range(4)}
    worst = max(max(residuals.values()), det_defect)
    verdict = "PASS" if worst <= tol else "FAIL"
    return (0 if verdict == "PASS" else 1), {
        "signature": sig.value, "residuals": residuals, "det_defect": det_defect,
        "max": worst, "tol": tol, "verdict": verdict}


def cmd_factorize(args, doc):
    U = _matrix(doc)
    fit = factor.fit_factorization(U, seed=args.seed, tol=_tolerance(args, 1e-8))
    return 0, fit.to_json()


def _pseudo_mult_table(gens):
    """Products of the generator set when every product is a unit multiple
    of one member or of the identity, else None."""
    mats = (np.eye(4),) + gens.generators
    out = []
    for m in range(1, 16):
        for n in range(1, 16):
            P = mats[m] @ mats[n]
            hit = None
            for r, Q in enumerate(mats):
                for c in (1, -1, 1j, -1j):
                    if np.array_equal(P, c * Q):
                        hit = (c, r)
                        break
                if hit:
                    break
            if hit is None:
                return None
            out.append({"m": m, "n": n, "coeff": complex(hit[0]), "result": "I" if hit[1] == 0 else hit[1]})
    return out


def cmd_emit_tables(args, doc):
    report = reconciliation_report(seed=args.seed)
    if args.signature is None:
        table = matgen.derive_mult_table()
        return 0, {"generators": list(matgen.GENERATOR_NAMES), "mult_table": table.records(),
                   "reconciliation": report}
    gens = pseudo.build_pseudo_generators(args.signature)
    listing = [{"index": i, "name": name, "kind": pseudo.generator_kind(L), "matrix": L}
               for i, (name, L) in enumerate(zip(gens.names, gens.generators), start=1)]
    doc = {"signature": gens.signature.value, "eta": np.diag(gens.signature.eta).real,
           "generators": listing,
           "not_eta_compatible": pseudo.eta_compatibility_failures(gens),
           "mult_table": _pseudo_mult_table(gens)}
    if gens.signature is pseudo.Signature.SU22:
        doc["commuting_triples"] = {
            name: {"members": t.names,
                   "products": {f"{a + 1}{b + 1}": c for (a, b), c in sorted(t.products.items())}}
            for name, t in pseudo.su22_klm_triples().items()}
    doc["reconciliation"] = report
    return 0, doc


def cmd_sample(args, doc):
    rng = np.random.default_rng(args.seed)
    mats = unitary.haar_su4(rng, args.count)
    return 0, {"seed": args.seed, "samples": [params.from_matrix(U).to_json() for U in mats]}


def cmd_verify_all(args, doc):
    results = verify.run_all(args.seed)
    failed = [r.name for r in results if not r.passed]
    return (1 if failed else 0), {
        "seed": args.seed, "backend": BACKEND,
        "checks": [r.to_json() for r in results],
        "passed": len(results) - len(failed), "failed": len(failed),
        "failed_checks": failed, "verdict": "FAIL" if failed else "PASS"}


COMMANDS = {
    "compose": (cmd_compose, True, "multiply two parameter sets (left, right)"),
    "invert": (cmd_invert, True, "inverse parameters"),
    "det": (cmd_det, True, "determinant"),
    "decompose": (cmd_decompose, True, "coordinates in the Gell-Mann or Dirac basis"),
    "check-unitary": (cmd_check_unitary, True, "residuals of the (pseudo-)unitarity equations"),
    "factorize": (cmd_factorize, True, "fit the five-factor exponential form to an SU(4) matrix"),
    "emit-tables": (cmd_emit_tables, False, "generator product tables and reconciliation report"),
    "sample": (cmd_sample, False, "seeded Haar-random SU(4) elements as parameters"),
    "verify-all": (cmd_verify_all, False, "run the seeded invariant suite"),
}


def build_parser():
    parser = _Parser(prog="dirac4", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, reads_input, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if reads_input:
            p.add_argument("--input", default="-", help="JSON file, or '-' for standard input")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--format", choices=["json"], default="json")
        if name in ("compose", "invert", "det", "decompose", "check-unitary"):
            p.add_argument("--case", choices=["A", "B", "C", "D"], default=None)
        if name == "check-unitary":
            p.add_argument("--signature", choices=["su4", "su22", "su31"], default="su4")
        if name == "emit-tables":
            p.add_argument("--signature", choices=["su4", "su22", "su31"], default=None)
        if name == "decompose":
            p.add_argument("--basis", choices=["gellmann", "dirac"], default="gellmann")
        if name == "sample":
            p.add_argument("--count", type=int, default=1)
    return parser


def run(argv=None, stdin=None, stdout=None):
    """Execute one command; returns the exit code."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if not 0 <= getattr(args, "seed", 0) < 2 ** 64:
            raise UsageError("--seed must be an unsigned 64-bit integer")
        if getattr(args, "count", 1) < 1:
            raise UsageError("--count must be positive")
        if args.tol is not None and not args.tol > 0:
            raise UsageError("--tol must be positive")
        fn, reads_input, _ = COMMANDS[args.command]
        doc = _read_json(args.input, stdin) if reads_input else None
        code, out = fn(args, doc)
    except Dirac4Error as exc:
        _emit(exc.to_dict(), stdout)
        return 2 if exc.code in _INPUT_CODES or isinstance(exc, UsageError) else 1
    _emit(out, stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
