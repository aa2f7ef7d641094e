"""Command-line front end.

Exit codes: 0 success, 1 domain error or mismatch, 2 usage error.
Algebra and triangulation arguments are file paths; a bare name such as
``C4.alg`` that does not exist on disk falls back to the shipped fixture.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import GentlenessError
from .ext import ext1_basis, ext_basis_strings, ext_dim, ext_sequence
from .formats import FormatError, fixture_text, format_algebra, parse_algebra, parse_triangulation
from .fuzz import CHECKS, RIGIDITY_CLASSES, run_fuzz
from .homology import gl_dim_status, resolution
from .modules import module_from_text
from .oracle import check_pair
from .report import Report, fmt_dim
from .strings import StringError
from .triangulation import TriangulationError, algebra_from_triangulation


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    p = Path(path)
    if p.exists():
        return p.read_text()
    try:
        return fixture_text(p.name)
    except (FileNotFoundError, OSError):
        raise DomainError(f"no such file: {path}")


def _algebra(path: str):
    try:
        return parse_algebra(_read(path))
    except GentlenessError as exc:
        raise DomainError(f"not a gentle algebra [{exc.clause}]: {exc}") from exc
    except FormatError as exc:
        raise DomainError(str(exc)) from exc


def _module(alg, text: str):
    try:
        return module_from_text(alg, text)
    except StringError as exc:
        raise DomainError(f"invalid string {text!r}: {exc}") from exc


def _cycles_text(alg) -> str:
    return "[" + ", ".join("(" + ",".join(c) + ")" for c in alg.relation_cycles) + "]"


def cmd_check(args) -> Report:
    alg = _algebra(args.file)
    rep = Report(f"check {args.file}: ok")
    gl = gl_dim_status(alg)
    rep.say(f"{len(alg.vertices)} vertices, {len(alg.arrows)} arrows, {len(alg.relations)} relations")
    rep.say(f"relation cycles: {_cycles_text(alg)}")
    rep.say(f"global dimension: {fmt_dim(gl)}")
    rep.put("check.valid", 1).put("check.vertices", len(alg.vertices)).put("check.arrows", len(alg.arrows))
    rep.put("check.relations", len(alg.relations)).put("check.cycles", _cycles_text(alg)).put("check.gldim", fmt_dim(gl))
    return rep


def cmd_ext(args) -> Report:
    alg = _algebra(args.file)
    m, n = _module(alg, args.source), _module(alg, args.target)
    dims = [ext_dim(alg, m, n, d) for d in range(1, args.max + 1)]
    seq = ext_sequence(alg, m, n)
    rep = Report(f"Ext^i({m}, {n}) for i = 1..{args.max}")
    rep.say(",".join(map(str, dims)))
    if seq.period:
        rep.say(f"periodic: period={seq.period} from degree {seq.tail_start}, block {list(seq.block)}")
    else:
        rep.say(f"eventually zero from degree {seq.tail_start}")
    for d, v in enumerate(dims, 1):
        rep.put(f"ext.dim.{d}", v)
    rep.put("seq.prefix", seq.prefix).put("seq.period", seq.period).put("seq.block", seq.block)
    rep.put("seq.tail_start", seq.tail_start).put("seq.class", seq.classification)
    if args.basis:
        for d in range(1, args.max + 1):
            if d == 1:
                words = [e.describe() for e in ext1_basis(alg, m, n)]
            else:
                words = [w.text for w in ext_basis_strings(alg, m, n, d)]
            if words:
                rep.say(f"basis Ext^{d}: " + "; ".join(words))
                rep.put(f"ext.basis.{d}", "; ".join(words))
    return rep


def cmd_resolve(args) -> Report:
    alg = _algebra(args.file)
    m = _module(alg, args.string)
    res = resolution(alg, m, args.depth)
    rep = Report(f"projective resolution of {m}")
    rep.say("; ".join(d.describe() for d in res.degrees))
    for d in res.degrees:
        rep.say(f"  P{d.degree} = {d.describe():<20} kernel: {d.syzygy}")
        rep.put(f"res.degree.{d.degree}", d.describe())
    if res.tail:
        rep.say(f"tail: period {res.tail[1]} from degree {res.tail[0]}")
        rep.put("res.tail.start", res.tail[0]).put("res.tail.period", res.tail[1])
    else:
        rep.say("finite resolution")
    rep.say(f"projective dimension: {fmt_dim(res.length)}")
    rep.put("res.pd", fmt_dim(res.length))
    return rep


def cmd_oracle(args) -> Report:
    alg = _algebra(args.file)
    m, n = _module(alg, args.source), _module(alg, args.target)
    pr = check_pair(alg, m, n, args.max)
    rep = Report(f"combinatorial vs oracle, Ext^i({m}, {n})")
    rep.say("degree  combinatorial  oracle")
    for d, a, b in zip(pr.degrees, pr.combinatorial, pr.oracle):
        rep.say(f"{d:>6}  {a:>13}  {b:>6}{'' if a == b else '  MISMATCH'}")
        rep.put(f"oracle.dim.{d}", f"{a}/{b}")
    rep.say(f"syzygy dims: {pr.syzygy_dims[0]} vs {pr.syzygy_dims[1]}")
    rep.say(f"cosyzygy dims: {pr.cosyzygy_dims[0]} vs {pr.cosyzygy_dims[1]}")
    rep.put("oracle.agree", int(pr.ok))
    if not pr.ok:
        rep.say(f"first mismatch: {pr.first_mismatch}")
    return rep


def cmd_fuzz(args) -> Report:
    fr = run_fuzz(args.seed, args.count, args.horizon)
    rep = Report(f"fuzz seed={args.seed} count={args.count} horizon={args.horizon}: {'pass' if fr.ok else 'FAIL'}")
    for c in CHECKS:
        nbad = len(fr.violations(c))
        rep.say(f"  {c:<14} {fr.checked[c]:>6} checked, {nbad} violations")
        rep.put(f"fuzz.{c}.checked", fr.checked[c]).put(f"fuzz.{c}.violations", nbad)
    rep.say("R(α) with nonzero self-extensions, by pd R(α) (reported, not checked):")
    for c in RIGIDITY_CLASSES:
        seen, loose = fr.rigidity[c]
        rep.say(f"  {c:<10} {loose:>5} of {seen}")
        rep.put(f"fuzz.rigidity.{c}", f"{loose}/{seen}")
    worst = fr.minimal_failure()
    if worst:
        rep.say("smallest reproducer:")
        rep.say(worst.describe().rstrip())
    rep.put("fuzz.pass", int(fr.ok))
    return rep


def cmd_tri(args) -> Report:
    try:
        tri = parse_triangulation(_read(args.file))
        alg = algebra_from_triangulation(tri)
    except (TriangulationError, FormatError) as exc:
        raise DomainError(str(exc)) from exc
    threes = sum(1 for c in alg.relation_cycles if len(c) == 3)
    rep = Report(f"triangulation {args.file}")
    rep.say(f"{len(alg.vertices)} vertices, {len(alg.arrows)} arrows, {threes} relation 3-cycles")
    rep.put("tri.vertices", len(alg.vertices)).put("tri.arrows", len(alg.arrows)).put("tri.cycles3", threes)
    if args.emit_algebra:
        Path(args.emit_algebra).write_text(format_algebra(alg))
        rep.say(f"algebra written to {args.emit_algebra}")
    else:
        rep.say(format_algebra(alg).rstrip())
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gentle-ext", description="Syzygies and Ext over gentle algebras")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate an algebra file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("ext", help="dimensions of Ext^i(M(from), M(to))")
    c.add_argument("file")
    c.add_argument("--from", dest="source", required=True)
    c.add_argument("--to", dest="target", required=True)
    c.add_argument("--max", type=int, default=12)
    c.add_argument("--basis", action="store_true")
    c.set_defaults(func=cmd_ext)

    c = sub.add_parser("resolve", help="projective resolution of a string module")
    c.add_argument("file")
    c.add_argument("--string", required=True)
    c.add_argument("--depth", type=int, default=None)
    c.set_defaults(func=cmd_resolve)

    c = sub.add_parser("oracle", help="compare with the linear-algebra oracle")
    c.add_argument("file")
    c.add_argument("--from", dest="source", required=True)
    c.add_argument("--to", dest="target", required=True)
    c.add_argument("--max", type=int, default=6)
    c.set_defaults(func=cmd_oracle)

    c = sub.add_parser("fuzz", help="random invariant checks")
    c.add_argument("--seed", type=int, default=1)
    c.add_argument("--count", type=int, default=50)
    c.add_argument("--horizon", type=int, default=6)
    c.set_defaults(func=cmd_fuzz)

    c = sub.add_parser("tri", help="algebra of a triangulation")
    c.add_argument("file")
    c.add_argument("--emit-algebra", default=None)
    c.set_defaults(func=cmd_tri)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max", 1) is not None and getattr(args, "max", 1) < 1:
        parser.error("--max must be at least 1")
    try:
        rep = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(rep.render())
    if rep.get("oracle.agree") == "0" or rep.get("fuzz.pass") == "0":
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
