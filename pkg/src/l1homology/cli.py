"""Command-line front end.

Exit status: 0 on success, 1 for domain errors (the error class name is
printed to stderr), 2 for malformed input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import serialize
from .complex import HomologyClass, betti_numbers, fundamental_cycle, homology_basis
from .covering import build_section, verify_section
from .errors import L1HomologyError
from .lp import dump_lp
from .seminorm import solve_seminorm, dual_certificate, simplicial_volume_upper, verify_certificate
from .selftest import measure_selftest
from .serialize import MalformedInput, format_rational


class NoSuchClass(L1HomologyError):
    pass


class NoCertificate(L1HomologyError):
    pass


@dataclass
class RunReport:
    command: str
    input_digest: str
    outputs: dict = field(default_factory=dict)
    timing: float = 0.0
    pivots: int = 0


def _load_json(path: str):
    text = Path(path).read_text()
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _select_class(args, data, X) -> HomologyClass:
    """Cycle given in the input, else the requested basis class, else the fundamental class."""
    if isinstance(data, dict) and "cycle" in data:
        return serialize.class_from_json(data["cycle"], X)
    if args.degree is not None:
        basis = homology_basis(X, args.degree)
        if not 0 <= args.class_index < len(basis):
            raise NoSuchClass(
                f"H_{args.degree} has dimension {len(basis)}; no class index {args.class_index}"
            )
        return basis[args.class_index]
    return HomologyClass(X, fundamental_cycle(X))


def _write(path: str | None, payload: dict) -> None:
    if path:
        Path(path).write_text(serialize.dumps(payload))


def cmd_homology(args, data, report):
    X = serialize.complex_from_json(data)
    betti = betti_numbers(X)
    degrees = [args.degree] if args.degree is not None else range(len(betti))
    for k in degrees:
        print(f"b{k} = {betti[k]}")
    report.outputs["betti"] = betti
    if args.out:
        basis = {str(k): [serialize.chain_to_json(a.cycle) for a in homology_basis(X, k)] for k in degrees}
        _write(args.out, {"betti": betti, "basis": basis})


def cmd_l1norm(args, data, report):
    X = serialize.complex_from_json(data)
    alpha = _select_class(args, data, X)
    res = solve_seminorm(alpha)
    if args.dump_lp:
        Path(args.dump_lp).write_text(dump_lp(res.program))
    print(format_rational(res.value))
    report.outputs["l1_seminorm"] = format_rational(res.value)
    report.pivots = res.solution.pivots
    _write(args.out, {"value": format_rational(res.value), "chain": serialize.chain_to_json(res.optimal_chain)})


def cmd_certificate(args, data, report):
    X = serialize.complex_from_json(data)
    alpha = _select_class(args, data, X)
    cert = dual_certificate(alpha)
    if cert is None:
        raise NoCertificate("the class has seminorm 0; every cocycle pairs to 0 with it")
    payload = serialize.certificate_to_json(cert)
    print(f"bound {format_rational(cert.bound)}")
    report.outputs["bound"] = format_rational(cert.bound)
    if args.out:
        _write(args.out, payload)
    else:
        sys.stdout.write(serialize.dumps(payload))


def cmd_verify(args, data, report):
    X = serialize.complex_from_json(data)
    alpha = _select_class(args, data, X)
    cert_data, _ = _load_json(args.certificate)
    phi = serialize.cochain_from_json(cert_data, X)
    bound = verify_certificate(phi, alpha)
    print(format_rational(bound))
    report.outputs["bound"] = format_rational(bound)


def cmd_volume(args, data, report):
    X = serialize.complex_from_json(data)
    values = simplicial_volume_upper(X, args.subdivide)
    for i, v in enumerate(values):
        print(f"round {i}: {format_rational(v)}")
    report.outputs["values"] = [format_rational(v) for v in values]
    _write(args.out, {"values": report.outputs["values"]})


def cmd_measure_selftest(args, data, report):
    X = serialize.complex_from_json(data)
    results = measure_selftest(X, samples=args.samples, seed=args.seed)
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    report.outputs["results"] = {name: ok for name, ok in results}
    _write(args.out, {"results": [{"property": n, "passed": ok} for n, ok in results]})
    if not all(ok for _, ok in results):
        return 1


def cmd_cover_section(args, data, report):
    cover = serialize.cover_from_json(data)
    section = build_section(cover)
    ok = verify_section(cover, section)
    for entry in serialize.section_to_json(section)["assignment"]:
        print(f"{entry['base']} -> {entry['lift']}")
    print("section verified" if ok else "section FAILED verification")
    report.outputs["verified"] = ok
    _write(args.out, serialize.section_to_json(section))
    return 0 if ok else 1


COMMANDS = {
    "homology": cmd_homology,
    "l1norm": cmd_l1norm,
    "certificate": cmd_certificate,
    "verify": cmd_verify,
    "volume": cmd_volume,
    "measure-selftest": cmd_measure_selftest,
    "cover-section": cmd_cover_section,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="l1homology", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, select=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, help="JSON instance")
        p.add_argument("--out", help="write the machine-readable result here")
        p.add_argument("--report", help="write a run report (with timing) here")
        if select:
            p.add_argument("--degree", type=int, help="pick a homology basis class of this degree")
            p.add_argument("--class-index", type=int, default=0)
        return p

    p = add("homology", "Betti numbers over Q")
    p.add_argument("--degree", type=int)
    p = add("l1norm", "exact l1-seminorm of a class", select=True)
    p.add_argument("--dump-lp", help="write the LP in plain text to this path")
    add("certificate", "optimal dual cocycle certificate", select=True)
    p = add("verify", "re-check a certificate without the LP solver", select=True)
    p.add_argument("--certificate", required=True)
    p = add("volume", "upper bounds for the simplicial volume")
    p.add_argument("--subdivide", type=int, default=0)
    p = add("measure-selftest", "measure-chain property suite on a complex")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    add("cover-section", "build and verify a section of a simplicial covering")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        data, text = _load_json(args.input)
        report = RunReport(args.command, hashlib.sha256(text.encode()).hexdigest())
        status = COMMANDS[args.command](args, data, report) or 0
    except MalformedInput as exc:
        print(f"MalformedInput: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"MalformedInput: {exc}", file=sys.stderr)
        return 2
    except L1HomologyError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    report.timing = time.perf_counter() - start
    if args.report:
        Path(args.report).write_text(serialize.dumps(asdict(report)))
    return status


if __name__ == "__main__":
    sys.exit(main())
