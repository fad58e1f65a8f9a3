"""Command-line front end: ``tangle3 {bound,project,approx,tomo,witness,examples}``."""

import argparse
import csv
import dataclasses
import enum
import hashlib
import json
import math
import sys
from importlib.metadata import PackageNotFoundError, version

import numpy as np

from .certify import Verdict, lower_bound
from .config import TOL
from .exceptions import Tangle3Error
from .linalg import density_matrix, projector, pure_state
from .optimize import Criterion
from .states import NAMED_PURE, named_state
from .symmetric import (
    WitnessKind,
    diagonal_a,
    quantitative_tau3,
    sym_coords,
    tau3_symmetric_approx,
    tau3_symmetric_exact,
    witness_expectation,
    Y_BOTTOM,
    Y_TOP,
)
from .tomography import (
    bound_from_elements,
    ghz_elements_minimal,
    parse_record,
    pit_record,
    reconstruct,
)
from .twirl import coords, tau3_approx_rho

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


def tool_version():
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


# ---- serialisation -------------------------------------------------------

def _plain(obj):
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: _plain(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, tuple) and hasattr(obj, "_asdict"):
        return {k: _plain(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    return obj


def dumps(obj, indent=0):
    """JSON text with every float written to 17 significant digits."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return format(obj, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {dumps(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + dumps(v, indent + 1) for v in obj) + "\n" + pad + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


# ---- state files ---------------------------------------------------------

def state_to_doc(rho, name=None):
    rho = np.asarray(rho, dtype=complex)
    doc = {"name": name} if name else {}
    doc["matrix_re"] = rho.real.tolist()
    doc["matrix_im"] = rho.imag.tolist()
    return doc


def pure_to_doc(psi, name=None):
    doc = {"name": name} if name else {}
    doc["pure"] = [[float(a.real), float(a.imag)] for a in np.asarray(psi, dtype=complex)]
    return doc


def state_from_doc(doc):
    """Density matrix from a parsed state document."""
    if "pure" in doc:
        amps = np.array([complex(re, im) for re, im in doc["pure"]])
        return projector(pure_state(amps))
    if "matrix_re" in doc:
        re_part = np.array(doc["matrix_re"], dtype=float)
        im_part = np.array(doc.get("matrix_im", np.zeros_like(re_part)), dtype=float)
        return density_matrix(re_part + 1j * im_part)
    raise ValueError("state file needs 'pure' or 'matrix_re'/'matrix_im'")


def read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_state(path):
    text = read_text(path)
    rho = state_from_doc(json.loads(text))
    return rho, hashlib.sha256(text.encode()).hexdigest()


def write_text(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _r6(v):
    return f"{v:.6g}"


# ---- subcommands ---------------------------------------------------------

def _bound_state(rho, args, digest):
    rep = lower_bound(rho, Criterion(args.criterion), seed=args.seed,
                      restarts=args.restarts, jobs=args.jobs,
                      with_error_estimate=args.error_estimate)
    doc = _plain(dataclasses.replace(rep, optimized_state=None))
    doc.pop("optimized_state")
    out = {
        "tool": "tangle3",
        "version": tool_version(),
        "input_sha256": digest,
        "config": {"criterion": args.criterion, "seed": args.seed, "restarts": args.restarts,
                   "error_estimate": args.error_estimate, "tolerances": _plain(TOL)},
        "report": doc,
    }
    if args.json:
        write_text(args.json, dumps(out) + "\n")
    print(f"lower bound   {_r6(rep.lower_bound)}")
    print(f"trace(NF)     {_r6(rep.trace_nf)}")
    if rep.coords_after is not None:
        print(f"coords        ({_r6(rep.coords_after.x)}, {_r6(rep.coords_after.y)})")
    print(f"approx bound  {_r6(rep.approx_bound)}")
    print(f"spectral ub   {_r6(rep.upper_bound_spectral)}")
    if rep.error_estimate is not None:
        print(f"error est. ub {_r6(rep.error_estimate.upper_bound)} (lambda {_r6(rep.error_estimate.lam)})")
    print(f"verdict       {rep.verdict.value}")
    return EXIT_OK if rep.verdict is Verdict.GHZ_CLASS_CERTIFIED else EXIT_INCONCLUSIVE


def cmd_bound(args):
    rho, digest = load_state(args.input)
    return _bound_state(rho, args, digest)


def _project_rows(rho):
    c = sym_coords(*coords(rho))
    rows = [("x", c.x), ("y", c.y), ("tau3_exact", tau3_symmetric_exact(c)),
            ("tau3_approx", tau3_symmetric_approx(c))]
    rows += [(f"witness_{k.value}", witness_expectation(rho, k)) for k in WitnessKind]
    return rows


def cmd_project(args):
    if args.csv:
        return _write_grid(args.csv, args.grid)
    rho, _ = load_state(args.input)
    for name, v in _project_rows(rho):
        print(f"{name:<20}{_r6(v)}")
    return EXIT_OK


def _write_grid(path, n):
    rows = []
    for y in np.linspace(Y_BOTTOM, Y_TOP, n):
        a = diagonal_a(y)
        for x in np.linspace(-a, a, n):
            c = sym_coords(x, y)
            rows.append((x, y, tau3_symmetric_exact(c), tau3_symmetric_approx(c)))
    fh = sys.stdout if path == "-" else open(path, "w", newline="", encoding="utf-8")
    try:
        w = csv.writer(fh)
        w.writerow(["x", "y", "tau3_exact", "tau3_approx"])
        w.writerows([[format(v, ".17g") for v in r] for r in rows])
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_approx(args):
    rho, _ = load_state(args.input)
    print(_r6(tau3_approx_rho(rho)))
    return EXIT_OK


def cmd_witness(args):
    rho, _ = load_state(args.input)
    for k in WitnessKind:
        print(f"{k.value:<12}tr(W rho) = {_r6(witness_expectation(rho, k))}"
              f"  bound = {_r6(max(0.0, quantitative_tau3(rho, k)))}")
    return EXIT_OK


def cmd_tomo(args):
    rec = parse_record(read_text(args.record))
    if args.mode == "minimal":
        e = ghz_elements_minimal(rec, with_imag=args.with_imag)
        doc = _plain(e)
        doc["plane_bound"] = bound_from_elements(e)
        write_text(args.output, dumps(doc) + "\n")
        return EXIT_OK
    if args.mode == "pit":
        rec = pit_record(rec)
    rho, warnings = reconstruct(rec, mode="partial" if args.partial else "strict"), []
    if args.partial:
        rho, warnings = rho
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.bound:
        digest = hashlib.sha256(read_text(args.record).encode()).hexdigest()
        return _bound_state(rho, args, digest)
    write_text(args.output, dumps(state_to_doc(rho)) + "\n")
    return EXIT_OK


def cmd_examples(args):
    name = args.name
    if name in ("ghz", "w", "flipped-ghz"):
        doc = pure_to_doc(NAMED_PURE[name], name)
    else:
        rho = named_state(name, args.p)
        label = name if args.p is None else f"{name}(p={args.p!r})"
        doc = state_to_doc(rho, label)
    write_text(args.output, dumps(doc) + "\n")
    return EXIT_OK


def _add_bound_flags(p):
    p.add_argument("--criterion", choices=[c.value for c in Criterion], default="tau3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--error-estimate", action="store_true")
    p.add_argument("--json", metavar="PATH", help="write the machine-readable report here")


def build_parser():
    parser = argparse.ArgumentParser(prog="tangle3",
                                     description="Certified lower bounds on the three-tangle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="full pipeline lower bound")
    p.add_argument("input")
    _add_bound_flags(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("project", help="GHZ-symmetric projection and its tangle")
    p.add_argument("input", nargs="?")
    p.add_argument("--csv", metavar="PATH", help="dump an (x, y, tau3) grid instead")
    p.add_argument("--grid", type=int, default=101)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("approx", help="closed-form plane bound of the raw state")
    p.add_argument("input")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("witness", help="witness expectation values")
    p.add_argument("input")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("tomo", help="reconstruct from Pauli expectation values")
    p.add_argument("record")
    p.add_argument("--mode", choices=["full", "pit", "minimal"], default="full")
    p.add_argument("--with-imag", action="store_true")
    p.add_argument("--partial", action="store_true", help="treat missing labels as zero")
    p.add_argument("--bound", action="store_true", help="run the pipeline on the result")
    p.add_argument("-o", "--output", default="-")
    _add_bound_flags(p)
    p.set_defaults(func=cmd_tomo)

    p = sub.add_parser("examples", help="write a named example state")
    p.add_argument("name", choices=["rho1", "rho2", "rho3", "ghz", "w", "flipped-ghz"])
    p.add_argument("--p", type=float)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "project" and not args.csv and args.input is None:
        parser.error("project needs an input file unless --csv is given")
    try:
        return args.func(args)
    except (Tangle3Error, ValueError, OSError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
