"""Command-line front end: ``entgeo <command> ...``.

Exit codes: 0 success, 1 property failure, 2 isomorphism failure,
3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .construction import GammaChain, build, check_classical_iso
from .coordinates import coordinates_of, grid_poset, irreducibles, sup_coordinates
from .dist import parse_dist, simplex_grid, spectral_rep
from .entropy import parse_log_base, shannon
from .errors import EmptyCoreWarning, EntGeoError, IsoFailure
from .order import bottom, compare, joint_monotonization
from .poset import (
    FinitePoset,
    chain_poset,
    load_poset,
    powerset_lattice,
    to_dot,
)
from .verify import SUITES, format_result, run_suites

EXIT_OK, EXIT_PROPERTY, EXIT_ISO, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags, which is our isomorphism code
    def error(self, message):
        raise InputError(message)


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _block_text(b) -> str:
    return "{" + ",".join(str(i) for i in sorted(b)) + "}"


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def flush(self, stream) -> None:
        if self.as_json:
            stream.write(json.dumps(self.data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
        elif self.lines:
            stream.write("\n".join(self.lines) + "\n")


def cmd_order(args, out: _Out) -> int:
    x, y = parse_dist(args.x), parse_dist(args.y)
    verdict = compare(x, y)
    sigma = joint_monotonization(x, y) if verdict != "incomparable" else None
    text = {"eq": "x = y", "lt": "x ⊑ y", "gt": "y ⊑ x", "incomparable": "incomparable"}[verdict]
    out.line(text)
    if sigma is not None:
        out.line("sigma: " + " ".join(str(i) for i in sigma))
    out.data = {
        "x": str(x),
        "y": str(y),
        "verdict": text,
        "sigma": list(sigma.images) if sigma is not None else None,
    }
    return EXIT_OK


def cmd_decompose(args, out: _Out) -> int:
    x = parse_dist(args.x)
    cs = coordinates_of(x)
    coords = []
    if not len(cs):
        out.line("bottom: empty coordinate set")
    for j, c in enumerate(cs, start=1):
        kind = "irreducible" if c.is_irreducible else f"ratio {_frac_text(c.ratio)}"
        out.line(f"c({j}) = {c.dist}  axis {_block_text(c.axis)}  {kind}")
        coords.append(
            {
                "index": j,
                "coordinate": str(c.dist),
                "axis": sorted(c.axis),
                "ratio": None if c.ratio is None else _frac_text(c.ratio),
            }
        )
    out.data = {"x": str(x), "coordinates": coords}
    if args.verify_roundtrip:
        back = sup_coordinates(cs)
        ok = back == x
        out.line("roundtrip OK" if ok else f"roundtrip MISMATCH: sup = {back}")
        out.data["roundtrip"] = ok
        if not ok:
            return EXIT_PROPERTY
    return EXIT_OK


def cmd_entropy(args, out: _Out) -> int:
    base = parse_log_base(args.log_base)
    x = parse_dist(args.x)
    h = shannon(x, base=base, normalized=args.normalized)
    rep = spectral_rep(x)
    out.line(f"H = {float(h):.12g}")
    out.data = {
        "x": str(x),
        "entropy": float(h),
        "base": args.log_base,
        "normalized": args.normalized,
        "spectrum": [_frac_text(v) for v in rep.spectrum],
    }
    if args.compare is not None:
        y = parse_dist(args.compare)
        hy = shannon(y, base=base, normalized=args.normalized)
        out.line(f"H(y) = {float(hy):.12g}")
        out.line(f"order: {compare(x, y)}")
        out.data["y"] = str(y)
        out.data["entropy_y"] = float(hy)
        out.data["order"] = compare(x, y)
    return EXIT_OK


def _gamma_from_args(args) -> GammaChain:
    if args.gamma_values is not None:
        vals = tuple(Fraction(v) for v in args.gamma_values.split(","))
        if args.gamma_levels is not None and args.gamma_levels != len(vals):
            raise InputError(
                f"--gamma-levels {args.gamma_levels} but {len(vals)} values given"
            )
        return GammaChain(vals)
    return GammaChain.uniform(args.gamma_levels if args.gamma_levels is not None else 1)


def _source_poset(args) -> FinitePoset:
    chosen = [a for a in (args.poset, args.powerset, args.chain) if a is not None]
    if len(chosen) != 1:
        raise InputError("give exactly one of --poset FILE, --powerset N, --chain M")
    if args.poset is not None:
        try:
            return load_poset(args.poset)
        except OSError as exc:
            raise InputError(f"cannot read {args.poset}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.poset}: invalid JSON ({exc.msg})") from exc
    if args.powerset is not None:
        return powerset_lattice(args.powerset)
    return chain_poset(args.chain)


def cmd_construct(args, out: _Out) -> int:
    A = _source_poset(args)
    gamma = _gamma_from_args(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", EmptyCoreWarning)
        P = build(A, gamma)
    for w in caught:
        out.line(f"warning: {w.message}")
    bottoms = P.bottom_classes()
    Q = P.to_poset()
    out.line(f"{len(P)} classes")
    out.line("bottom: " + (P.labels()[bottoms[0]] if len(bottoms) == 1 else "none"))
    out.line(f"{len(Q.covers)} Hasse edges")
    out.data = {
        "classes": len(P),
        "n": P.n,
        "gamma": [_frac_text(v) for v in gamma.values],
        "bottom": P.labels()[bottoms[0]] if len(bottoms) == 1 else None,
        "hasse_edges": len(Q.covers),
    }
    if args.emit_dot is not None:
        Path(args.emit_dot).write_text(to_dot(Q, name="construction"))
        out.line(f"wrote {args.emit_dot}")
    if args.check_iso is not None:
        cert = check_classical_iso(args.check_iso, gamma, A=A)
        out.line(f"isomorphism OK: {len(cert.pairs)} classes onto grid states of Δ^{args.check_iso}")
        out.data["iso"] = {"n": args.check_iso, "classes": len(cert.pairs), "comparisons": cert.comparisons}
    return EXIT_OK


def cmd_hasse(args, out: _Out) -> int:
    kind = args.kind
    if kind == "poset":
        if args.file is None:
            raise InputError("hasse poset needs --file")
        P = load_poset(args.file)
    elif kind == "powerset":
        P = powerset_lattice(args.n)
    elif kind == "chain":
        P = chain_poset(args.n)
    elif kind == "irreducibles":
        pts = [c.dist for c in irreducibles(args.n)] + [bottom(args.n)]
        P = grid_poset(pts)
    else:
        P = grid_poset(simplex_grid(args.n, args.grid))
    dot = to_dot(P, name=kind)
    if args.out is not None:
        Path(args.out).write_text(dot)
        out.line(f"wrote {args.out}")
    else:
        out.lines.append(dot.rstrip("\n"))
    out.data = {"kind": kind, "elements": len(P), "edges": len(P.covers), "dot": dot}
    return EXIT_OK


def cmd_verify(args, out: _Out) -> int:
    if args.n < 2:
        raise InputError(f"--n must be >= 2, got {args.n}")
    if args.grid < 1:
        raise InputError(f"--grid must be positive, got {args.grid}")
    results = run_suites(args.suite, args.n, args.grid, jobs=max(1, args.jobs))
    for r in results:
        out.line(format_result(r))
    failed = [r for r in results if not r.passed and not r.exploratory]
    out.line(f"{len(results) - len(failed)}/{len(results)} properties hold")
    out.data = {
        "suite": args.suite,
        "n": args.n,
        "grid": args.grid,
        "results": [r.to_dict() for r in results],
        "passed": not failed,
    }
    return EXIT_PROPERTY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("global options")
    g.add_argument("--log-base", default=argparse.SUPPRESS, help="entropy log base: rational or 'e' (default 2)")
    g.add_argument("--normalized", action="store_true", default=argparse.SUPPRESS, help="divide entropy by log n")
    g.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    g.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for verify")

    p = _Parser(prog="entgeo", description="Bayesian order, coordinates and order-theoretic state spaces.",
                parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("order", parents=[common], help="compare two distributions")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("decompose", parents=[common], help="coordinate decomposition of a state")
    s.add_argument("x")
    s.add_argument("--verify-roundtrip", action="store_true")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("entropy", parents=[common], help="Shannon entropy of a state")
    s.add_argument("x")
    s.add_argument("--compare", metavar="Y", help="also report H(y) and the order verdict")
    s.set_defaults(func=cmd_entropy)

    s = sub.add_parser("construct", parents=[common], help="state space of a bounded poset")
    s.add_argument("--poset", metavar="FILE", help="poset JSON file")
    s.add_argument("--powerset", type=int, metavar="N", help="use P({1..N})")
    s.add_argument("--chain", type=int, metavar="M", help="use an M-element chain")
    s.add_argument("--gamma-levels", type=int, metavar="K", help="number of interior levels (default 1)")
    s.add_argument("--gamma-values", metavar="V1,..,VK", help="interior gauge values in (0,1)")
    s.add_argument("--emit-dot", metavar="FILE")
    s.add_argument("--check-iso", type=int, metavar="N", help="verify against the Δ^N grid")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("hasse", parents=[common], help="DOT Hasse diagram")
    s.add_argument("kind", choices=["poset", "powerset", "chain", "irreducibles", "grid"])
    s.add_argument("--file", help="poset JSON (kind=poset)")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--grid", type=int, default=4, help="grid denominator (kind=grid)")
    s.add_argument("--out", metavar="FILE")
    s.set_defaults(func=cmd_hasse)

    s = sub.add_parser("verify", parents=[common], help="exhaustive property sweeps")
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--grid", type=int, default=6)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        stderr.write(f"entgeo: error: {exc}\n")
        return EXIT_INPUT
    for name, default in (("log_base", "2"), ("normalized", False), ("json", False), ("jobs", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    out = _Out(args.json)
    try:
        if args.command != "entropy":
            parse_log_base(args.log_base)
        code = args.func(args, out)
    except IsoFailure as exc:
        out.flush(stdout)
        stderr.write(f"entgeo: isomorphism failure: {exc}\n")
        return EXIT_ISO
    except (InputError, EntGeoError, ValueError, KeyError, ZeroDivisionError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"entgeo: error: {type(exc).__name__}: {msg}\n")
        return EXIT_INPUT
    out.flush(stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
