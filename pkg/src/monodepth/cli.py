"""Command-line interface.

Exit status: 0 success, 1 verification mismatch, 2 invalid input, 3 resource
cap exceeded.  Tables go to stdout as TSV with a header row; comment lines
start with ``#``.  The lattice cap is read from MONODEPTH_LATTICE_CAP.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .betti import betti_table, default_cap, depth_table, observed_limit_and_dstab, socle_nonzero, depth_of_quotient
from .buchberger import all_checks, buchberger_graph
from .constructions import (
    WitnessRequest,
    construct_from_spec,
    example_fixtures,
    ndr_witness,
    prop_ideal,
    socle_witness,
    validate_spec,
)
from .depth_model import DepthFunction, block_g, predict_ndr, predict_spec
from .documents import load_json_arg, read_ideal, serialize_ideal
from .errors import (
    CertificateError,
    DegenerateIdealError,
    DocumentError,
    InadmissibleRequest,
    InvalidSpecError,
    LatticeCapExceeded,
    OracleCapExceeded,
)
from .linalg import GF2, GF3, FieldSpec
from .monomial import format_monomial, power
from .sampling import random_corpus
from .taylor import cross_check

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def _fields(text: str) -> list[FieldSpec]:
    if text == "both":
        return [GF2, GF3]
    return [FieldSpec.parse(text)]


def _emit_ideal(ideal, annotations: dict, out: str | None, summary: str) -> None:
    doc = serialize_ideal(ideal, annotations)
    if out:
        Path(out).write_text(doc, encoding="utf-8")
        _out(summary)
    else:
        sys.stdout.write(doc)


def _describe(f: DepthFunction) -> str:
    return f"predicted\t{f}\tlimit={f.limit}\tdstab={f.dstab}"


def cmd_construct(args) -> int:
    try:
        spec = validate_spec(load_json_arg(args.spec))
    except InvalidSpecError as exc:
        where = f" at k={exc.position}" if exc.position else ""
        print(f"invalid spec ({exc.condition}{where}): {exc}", file=sys.stderr)
        return EXIT_INVALID
    ideal = construct_from_spec(spec)
    pred = predict_spec(spec)
    notes = {"spec": spec.to_dict(), "predicted": pred.to_dict()}
    if spec.a == spec.b:
        notes["note"] = "constant spec: no blocks; principal ideal (x1) with b free variables"
    _emit_ideal(ideal, notes, args.out, _describe(pred))
    return EXIT_OK


def cmd_witness(args) -> int:
    req = WitnessRequest(args.n, args.d, args.r)
    try:
        wit = ndr_witness(req)
    except InadmissibleRequest as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    pred = predict_ndr(req)
    notes = {"case": wit.case, "limit": wit.limit, "dstab": wit.dstab, "predicted": pred.to_dict()}
    _emit_ideal(wit.ideal, notes, args.out, _describe(pred))
    return EXIT_OK


def cmd_predict(args) -> int:
    if args.spec is not None:
        try:
            pred = predict_spec(validate_spec(load_json_arg(args.spec)))
        except InvalidSpecError as exc:
            print(f"invalid spec ({exc.condition}): {exc}", file=sys.stderr)
            return EXIT_INVALID
    elif None not in (args.n, args.d, args.r):
        try:
            pred = predict_ndr(WitnessRequest(args.n, args.d, args.r))
        except InadmissibleRequest as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_INVALID
    else:
        print("predict needs --spec or all of --n --d --r", file=sys.stderr)
        return EXIT_INVALID
    _out(json.dumps({**pred.to_dict(), "limit": pred.limit, "dstab": pred.dstab}))
    return EXIT_OK


def cmd_depth(args) -> int:
    ideal = read_ideal(args.ideal)
    rows = depth_table(ideal, args.kmax, FieldSpec.parse(args.field))
    _out("k\tdepth\tpd\tgens\tlattice")
    for r in rows:
        _out(f"{r.k}\t{r.depth}\t{r.pd}\t{r.ngens}\t{'-' if r.nlattice is None else r.nlattice}")
    stab = observed_limit_and_dstab([r.depth for r in rows], args.window)
    if stab is None:
        _out(f"# observed inconclusive (no run of {args.window} equal values at the end)")
    else:
        _out(f"# observed limit={stab.limit} dstab={stab.dstab} certified=false")
    return EXIT_OK


def cmd_betti(args) -> int:
    ideal = read_ideal(args.ideal)
    table = betti_table(ideal, FieldSpec.parse(args.field))
    if args.json:
        _out(json.dumps(table.to_dict()))
        return EXIT_OK
    _out("i\tdegree\tmultidegree\tdim")
    for i, b, d in table.rows():
        _out(f"{i}\t{sum(b)}\t{format_monomial(b, ideal.ring)}\t{d}")
    _out("# totals " + " ".join(str(x) for x in table.totals()))
    _out(f"# pd(I)={table.pd} depth(S/I)={ideal.arity - 1 - table.pd}")
    return EXIT_OK


def _verify_target(args):
    """(ideal, predicted DepthFunction, kmax) for the requested family."""
    fam = args.family
    if fam == "prop":
        _require(args, "t")
        return prop_ideal(args.t), block_g(args.t - 1), args.kmax or args.t + 2
    if fam == "spec":
        _require(args, "spec")
        spec = validate_spec(load_json_arg(args.spec))
        return construct_from_spec(spec), predict_spec(spec), args.kmax or 4
    if fam == "ndr":
        _require(args, "n", "d", "r")
        req = WitnessRequest(args.n, args.d, args.r)
        return ndr_witness(req).ideal, predict_ndr(req), args.kmax or args.r + 2
    _require(args, "which")
    fx = example_fixtures()[args.which]
    return fx.ideal, DepthFunction(fx.expected_prefix, fx.expected_prefix[-1]), args.kmax or len(fx.expected_prefix)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise DocumentError(f"--family {args.family} needs {' '.join(missing)}")


def cmd_verify(args) -> int:
    try:
        ideal, pred, kmax = _verify_target(args)
    except InvalidSpecError as exc:
        print(f"invalid spec ({exc.condition}): {exc}", file=sys.stderr)
        return EXIT_INVALID
    fields = _fields(args.field)
    expected = pred.values(kmax)
    computed = {str(f): [r.depth for r in depth_table(ideal, kmax, f)] for f in fields}
    _out("k\tpredicted\t" + "\t".join(computed))
    for k in range(1, kmax + 1):
        _out(f"{k}\t{expected[k - 1]}\t" + "\t".join(str(v[k - 1]) for v in computed.values()))
    for name, values in computed.items():
        for k, (e, c) in enumerate(zip(expected, values), start=1):
            if e != c:
                _out(f"# MISMATCH over {name} at k={k}: predicted {e}, computed {c}")
                return EXIT_MISMATCH
    _out(f"# verified k=1..{kmax} over {', '.join(computed)}")
    return EXIT_OK


def cmd_buchberger(args) -> int:
    reports = all_checks(args.t, args.n)
    _out("check\tstatus\tdetail")
    for rep in reports:
        _out(rep.line())
    if args.edges:
        graph = buchberger_graph(power(prop_ideal(args.t), args.n))
        ring = graph.ideal.ring
        _out(json.dumps({"edges": [[format_monomial(u, ring), format_monomial(v, ring)] for u, v in graph.edge_list()]}))
    within = 1 <= args.n <= args.t - 1
    if within and not all(r.ok for r in reports):
        return EXIT_MISMATCH
    if not within:
        _out("# outside n <= t-1: failures are informational")
    return EXIT_OK


def cmd_socle(args) -> int:
    try:
        cert = socle_witness(args.t, args.n)
    except CertificateError as exc:
        _out(f"# certificate FAILED: {exc}")
        return EXIT_MISMATCH
    ring = prop_ideal(args.t).ring
    _out(f"u\t{format_monomial(cert.u, ring)}")
    for v, (label, w) in cert.divisors.items():
        _out(f"{v}*u\tdivisible by w{label} = {format_monomial(w, ring)}")
    _out(f"# certified: u not in I^{args.n}, x*u, y*u, z*u in I^{args.n}")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    fld = FieldSpec.parse(args.field)
    betti_bad = socle_bad = 0
    for idx, ideal in enumerate(random_corpus(args.seed, args.count)):
        result = cross_check(ideal, fld)
        if not result.ok:
            betti_bad += 1
            if betti_bad == 1:
                i, b, eng, orc = result.first_difference
                print(f"ideal #{idx} {ideal}: beta_{i},{b} engine={eng} oracle={orc}", file=sys.stderr)
        if socle_nonzero(ideal) != (depth_of_quotient(ideal, fld) == 0):
            socle_bad += 1
            if socle_bad == 1:
                print(f"ideal #{idx} {ideal}: socle test disagrees with depth", file=sys.stderr)
    _out(f"checked\t{args.count}\nbetti_disagreements\t{betti_bad}\nsocle_disagreements\t{socle_bad}")
    return EXIT_MISMATCH if betti_bad or socle_bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monodepth", description="Depth functions of powers of monomial ideals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an ideal realizing a depth spec")
    p.add_argument("--spec", required=True, help='spec file or inline JSON: {"prefix": [...], "tail": b} or {"a":, "b":, "mult": [...]}')
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("witness", help="ideal with limit depth d and dstab r in n variables")
    for name in ("n", "d", "r"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("predict", help="predicted depth function for a spec or (n, d, r)")
    p.add_argument("--spec")
    for name in ("n", "d", "r"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("depth", help="depth of S/I^k for k = 1..kmax")
    p.add_argument("--ideal", required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--field", default="gf2")
    p.add_argument("--window", type=int, default=3)
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("betti", help="multigraded Betti numbers of an ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--field", default="gf2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="compare predicted and computed depth functions")
    p.add_argument("--family", required=True, choices=["prop", "spec", "ndr", "example"])
    p.add_argument("--t", type=int)
    p.add_argument("--spec")
    for name in ("n", "d", "r"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--which", choices=["I", "J"])
    p.add_argument("--kmax", type=int)
    p.add_argument("--field", default="gf2", help="gf2, gf3, q, gf<p>, or both (gf2 and gf3)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("buchberger", help="check the two-term resolution of prop_ideal(t)^n")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--edges", action="store_true")
    p.set_defaults(func=cmd_buchberger)

    p = sub.add_parser("socle", help="certify the socle witness of prop_ideal(t)^n, n >= t")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("oracle-check", help="cross-check the Betti engine against the Taylor oracle")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--field", default="gf2")
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        default_cap()
        return args.func(args)
    except (LatticeCapExceeded, OracleCapExceeded) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DocumentError, DegenerateIdealError, InadmissibleRequest, InvalidSpecError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
