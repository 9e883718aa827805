"""Command line interface.

Exit status: 0 on success, 1 on a domain error (for example a diagram that
is not taut where one is required), 2 when an input file cannot be parsed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures as fx
from .diagram import algebraic_intersection_matrix, is_filling, validate
from .invariants import build_lens, recognize_lens, smith_normal_form
from .io import ParseError, parse, parse_paths, serialize, serialize_complex, serialize_paths
from .moves import MoveError, find_problems, tautify
from .pinch import PinchError, pinch, pinch_graph_report
from .reduction import ReductionError, build_augmented, minimize_area
from .squares import DualizeError, dualize, link_report, specialness_report
from .surface import SurgeryError


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(0, 0, f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load(path: str):
    return parse(_read(path))


def _valid(d):
    rep = validate(d)
    if rep:
        raise DomainError("invalid diagram: " + "; ".join(str(i) for i in rep))
    return d


def cmd_validate(a, out) -> None:
    d = _load(a.file)
    rep = validate(d)
    if rep:
        for issue in rep:
            out.write(f"{issue}\n")
        raise DomainError("invalid diagram")
    out.write(f"valid genus={d.genus} crossings={d.n_crossings} filling={'yes' if is_filling(d) else 'no'}\n")


def cmd_tautify(a, out) -> None:
    d = _valid(_load(a.file))
    nd, trace = tautify(d)
    if a.trace:
        _write(a.trace, "".join(f"{s}\n" for s in trace), out)
    _write(a.output, serialize(nd), out)


def cmd_dualize(a, out) -> None:
    d = _valid(_load(a.file))
    sc = dualize(d)
    _write(a.output, serialize_complex(sc), out)
    if a.report:
        lr = link_report(sc)
        sp = specialness_report(sc)
        out.write(f"chi={sc.euler_characteristic} links={'surface' if lr.surface else 'singular'} npc={lr.npc}\n")
        out.write(
            f"vh={sp.vh} embedded={sp.hyperplanes_embedded} two_sided={sp.two_sided} "
            f"direct_self_osculations={len(sp.direct_self_osculation)} clean={sp.clean}\n"
        )


def cmd_pinch(a, out) -> None:
    d = _valid(_load(a.file))
    p = pinch(d)
    rep = pinch_graph_report(p)
    out.write("piece genus curves crossings\n")
    for pc in p.pieces:
        out.write(f"{pc.id} {pc.genus} {len(pc.curves)} {len(pc.crossings)}\n")
    out.write("edges " + " ".join(f"P{pc}-N{n}" for pc, n, _ in p.edges) + "\n")
    out.write(
        f"tree={rep.is_tree} spheres={rep.sphere_pieces} flags={len(rep.pseudo_manifold_flags)} "
        f"obstruction={rep.s2xs1_obstruction}\n"
    )
    if rep.s2xs1_obstruction:
        raise DomainError("S2xS1 summand: the pinch graph is not a tree of sphere-free pieces")


def cmd_area(a, out) -> None:
    d = _valid(_load(a.file))
    curves = parse_paths(_read(a.curves)) if a.curves else []
    aug = build_augmented(d, curves)
    disks = sum(x for _, x in aug.disks)
    out.write(f"sigma*={aug.pinched.area} disks={disks} total={aug.area}\n")


def cmd_minimize(a, out) -> None:
    d = _valid(_load(a.file))
    fd, aug, trace = minimize_area(d, a.max_len, jobs=a.jobs)
    out.write("round area crossings disk_area\n")
    for i, r in enumerate(trace.rounds):
        out.write(f"{i} {r.area} {r.crossings} {r.disk_area}\n")
    bound = "complete" if trace.search_complete else "budget exhausted"
    out.write(f"final area={aug.area} search={bound} max_len={a.max_len if a.max_len else 'default'}\n")
    if a.trace:
        _write(a.trace, "".join(f"{s}\n" for r in trace.rounds for s in r.steps), out)
    if a.output:
        _write(a.output, serialize(fd), out)
    if a.curves_out:
        _write(a.curves_out, serialize_paths([c for c, _ in aug.disks]), out)


def cmd_lens(a, out) -> None:
    if a.action == "build":
        if a.args is None or len(a.args) != 2:
            raise DomainError("usage: lens build <p> <q>")
        try:
            p, q = (int(x) for x in a.args)
        except ValueError:
            raise DomainError("p and q must be integers") from None
        try:
            d = build_lens(p, q)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        out.write(serialize(d))
    else:
        if a.args is None or len(a.args) != 1:
            raise DomainError("usage: lens recognize <file>")
        d = _valid(_load(a.args[0]))
        lp = recognize_lens(d)
        out.write(f"L({lp.p},{lp.q})\n")


def cmd_invariants(a, out) -> None:
    d = _valid(_load(a.file))
    m = algebraic_intersection_matrix(d)
    for row in m:
        out.write(" ".join(str(v) for v in row) + "\n")
    factors = smith_normal_form(m).factors if m else ()
    out.write("snf " + " ".join(str(f) for f in factors) + "\n")
    order = 1
    for f in factors:
        order *= f
    out.write(f"h1 {'infinite' if 0 in factors else order}\n")


def cmd_fixtures(a, out) -> None:
    root = Path(a.directory)
    root.mkdir(parents=True, exist_ok=True)
    names = []
    for name, text in fx.fixture_files(max_p=a.max_p).items():
        (root / name).write_text(text, encoding="utf-8")
        names.append(name)
    out.write("".join(f"{n}\n" for n in sorted(names)))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hdg", description="Heegaard diagrams, Stallings maps and augmented diagrams")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, "check a diagram file")
    sp.add_argument("file")
    sp = add("tautify", cmd_tautify, "remove problems by wave moves")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.add_argument("--trace")
    sp = add("dualize", cmd_dualize, "dual VH square complex")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.add_argument("--report", action="store_true")
    sp = add("pinch", cmd_pinch, "pinched surface report")
    sp.add_argument("file")
    sp = add("area", cmd_area, "area of an augmented diagram")
    sp.add_argument("file")
    sp.add_argument("--curves")
    sp = add("minimize", cmd_minimize, "minimize the augmented area")
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--trace")
    sp.add_argument("-o", "--output")
    sp.add_argument("--curves-out")
    sp = add("lens", cmd_lens, "build or recognize lens space diagrams")
    sp.add_argument("action", choices=["build", "recognize"])
    sp.add_argument("args", nargs="*")
    sp = add("invariants", cmd_invariants, "intersection matrix and Smith normal form")
    sp.add_argument("file")
    sp = add("fixtures", cmd_fixtures, "write the standard fixture set")
    sp.add_argument("directory")
    sp.add_argument("--max-p", type=int, default=12)
    return ap


def run_cli(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        a.fn(a, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except (DomainError, MoveError, PinchError, ReductionError, DualizeError, SurgeryError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
