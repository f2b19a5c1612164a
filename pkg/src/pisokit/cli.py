"""Command-line front end: ``pisokit <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import coherence as coh
from . import finite, p2matrix, selfsim
from .errors import ArrowError
from .gen import DEFAULT_SEED
from .prefix import PrefixArrow, render
from .selfsim import SS, SelfSimilarStructure
from .syntax import ParseError, load_diagram, parse, print_arrow, print_matrix, print_term
from .trees import S, show

OK, FAILED, USAGE = 0, 1, 2

NAMED = {"standard": selfsim.standard, "swap": selfsim.swap}


class UsageError(Exception):
    pass


class Report:
    def __init__(self, command: str, inputs: dict):
        self.command, self.inputs = command, inputs
        self.results: list[dict] = []
        self.lines: list[str] = []

    def add(self, name: str, ok: bool | None, text: str = "", **data) -> None:
        entry = {"name": name}
        if ok is not None:
            entry["ok"] = ok
        entry.update(data)
        self.results.append(entry)
        if ok is None:
            self.lines.append(f"{name}: {text}" if text else name)
        else:
            self.lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {text}" if text else ""))

    def say(self, line: str) -> None:
        self.lines.append(line)

    @property
    def ok(self) -> bool:
        return all(r.get("ok", True) for r in self.results)

    def emit(self, as_json: bool) -> int:
        verdict = "pass" if self.ok else "fail"
        if as_json:
            doc = {"command": self.command, "inputs": self.inputs,
                   "results": self.results, "verdict": verdict}
            print(json.dumps(doc, indent=2))
        else:
            print("\n".join(self.lines))
            print(f"verdict: {verdict}")
        return OK if self.ok else FAILED


def read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_sss(name: str) -> SelfSimilarStructure:
    """A named structure, or a file holding its code arrow ``(S S) -> S``."""
    if name in NAMED:
        return NAMED[name]()
    t = parse(read_text(name))
    if isinstance(t, (str, tuple)):
        raise UsageError(f"{name}: expected a code arrow, got a tree")
    return SelfSimilarStructure(coh.evaluate(t, selfsim.standard()))


def load_arrow(path: str, s: SelfSimilarStructure) -> PrefixArrow:
    t = parse(read_text(path))
    if isinstance(t, (str, tuple)):
        raise UsageError(f"{path}: expected a term, got the tree {show(t)}")
    return coh.evaluate(t, s)


def load_endo(path: str, s: SelfSimilarStructure) -> PrefixArrow:
    f = load_arrow(path, s)
    if (f.dom, f.cod) != (S, S):
        raise UsageError(f"{path}: expected an arrow S -> S, got {show(f.dom)} -> {show(f.cod)}")
    return f


def matrix_data(m: p2matrix.Matrix2) -> dict:
    return {"matrix": str(m), "sexp": print_matrix(m)}


# -- commands ---------------------------------------------------------------------

def cmd_eval(a) -> Report:
    r = Report("eval", {"file": a.file, "sss": a.sss})
    t = parse(read_text(a.file))
    if isinstance(t, (str, tuple)):
        r.add("tree", None, show(t), tree=show(t))
        return r
    f = coh.evaluate(t, load_sss(a.sss))
    r.add("type", None, f"{show(f.dom)} -> {show(f.cod)}", dom=show(f.dom), cod=show(f.cod))
    r.add("normal form", None, render(f), term=print_term(t), sexp=print_arrow(f))
    return r


def cmd_matrix(a) -> Report:
    r = Report("matrix", {"file": a.file, "sss": a.sss})
    s = load_sss(a.sss)
    f = load_endo(a.file, s)
    m = p2matrix.matrix_rep(f, s)
    r.add("matrix", None, str(m), **matrix_data(m))
    r.add("reconstructs", p2matrix.reconstruct(m, s) == f)
    return r


def cmd_rebase(a) -> Report:
    r = Report("rebase", {"file": a.file, "from": a.source, "to": a.target})
    src, dst = load_sss(a.source), load_sss(a.target)
    f = load_endo(a.file, src)
    direct, conjugated = p2matrix.rebase(f, src, dst)
    r.add("source matrix", None, str(p2matrix.matrix_rep(f, src)), **matrix_data(p2matrix.matrix_rep(f, src)))
    r.add("direct", None, str(direct), **matrix_data(direct))
    r.add("conjugated", None, str(conjugated), **matrix_data(conjugated))
    r.add("direct = conjugated", direct == conjugated)
    return r


def cmd_diag(a) -> Report:
    r = Report("diag", {"file": a.file, "from": a.source, "to": a.target, "search_depth": a.search_depth})
    src = load_sss(a.source)
    f = load_endo(a.file, src)
    if a.target is None:
        dst = p2matrix.find_diagonalizing(f, a.search_depth)
        if dst is None:
            r.add("diagonalizing structure", False, f"none up to depth {a.search_depth}")
            return r
        r.add("diagonalizing structure", True, render(dst.code), code=print_arrow(dst.code))
    else:
        dst = load_sss(a.target)
    m = p2matrix.matrix_rep(f, dst)
    r.add("matrix", None, str(m), **matrix_data(m))
    r.add("diagonal", m.is_diagonal)
    parts = p2matrix.diagonal_parts(f, dst)
    if parts is not None:
        x, y = parts
        r.add("X", None, render(x), sexp=print_arrow(x))
        r.add("Y", None, render(y), sexp=print_arrow(y))
        r.add("X (+) Y = f", selfsim.internalize(x, y, dst) == f)
    return r


def _verdict_lines(r: Report, v: coh.Verdict, d: coh.Diagram) -> None:
    for res in v.results:
        pa, pb = res.paths
        r.add(f"{' . '.join(pa) or 'id'} = {' . '.join(pb) or 'id'}", res.commutes, res.detail,
              mode=v.mode, paths=[list(pa), list(pb)])


def cmd_coherence(a) -> Report:
    r = Report("coherence", {"file": a.file, "mode": a.mode, "bound": a.bound, "sss": a.sss})
    d = load_diagram(read_text(a.file))
    s = load_sss(a.sss)
    if a.mode == "model":
        _verdict_lines(r, coh.check_model(d, s), d)
    elif a.mode == "free":
        if all(coh.is_canonical(e.term) for e in d.edges):
            _verdict_lines(r, coh.check_free(d), d)
        else:
            r.add("deferred", None, "diagram has non-canonical edges; deciding in the model")
            _verdict_lines(r, coh.check_model(d, s), d)
    else:
        lift = coh.lift_diagram(d, a.bound)
        r.add("lift", lift.found, lift.reason, leaves=lift.leaves)
        if lift.found:
            for e in lift.diagram.edges:
                r.add(f"edge {e.id}", None, print_term(e.term), term=print_term(e.term))
            _verdict_lines(r, coh.check_free(lift.diagram), lift.diagram)
            _verdict_lines(r, coh.check_model(d, s), d)
    return r


def cmd_oracle(a) -> Report:
    r = Report("oracle", {"max_size": a.max_size, "seed": a.seed})
    rep = finite.check_axioms(a.max_size, seed=a.seed)
    r.say(f"carrier sizes 0..{a.max_size}, {'exhaustive' if rep.exhaustive else 'sampled'}")
    for law in rep.laws:
        r.add(law.name, law.ok, f"{law.checked} instances, {len(law.counterexamples)} counterexamples",
              checked=law.checked, counterexamples=[repr(c) for c in law.counterexamples])
    return r


def cmd_laws(a) -> Report:
    r = Report("laws", {"sss": a.sss})
    s = load_sss(a.sss)
    for law in selfsim.check_lax_ah(s):
        r.add(law.name, law.holds, lhs=print_arrow(law.lhs), rhs=print_arrow(law.rhs))
    tau = selfsim.induced_tau(s)
    r.add("induced associator is not the identity", selfsim.check_strict_collapse(s), render(tau),
          tau=print_arrow(tau))
    strict = selfsim.overly_restrictive_frobenius(s)
    r.add("overly restrictive Frobenius square rejected", not strict.holds)
    return r


COMMANDS = {
    "eval": cmd_eval, "matrix": cmd_matrix, "rebase": cmd_rebase, "diag": cmd_diag,
    "coherence": cmd_coherence, "oracle": cmd_oracle, "laws": cmd_laws,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed (default %(default)s)")

    p = argparse.ArgumentParser(prog="pisokit", description="Exact workbench for prefix-rewrite partial isomorphisms.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    e = sub.add_parser("eval", parents=[common], help="print the normal form of a term")
    e.add_argument("file")
    e.add_argument("--sss", default="standard", help="structure for code/decode/p/q (default: standard)")

    m = sub.add_parser("matrix", parents=[common], help="2x2 matrix of an arrow S -> S")
    m.add_argument("file")
    m.add_argument("--sss", default="standard")

    rb = sub.add_parser("rebase", parents=[common], help="change of representation")
    rb.add_argument("file")
    rb.add_argument("--from", dest="source", required=True)
    rb.add_argument("--to", dest="target", required=True)

    dg = sub.add_parser("diag", parents=[common], help="check or search for a diagonalizing structure")
    dg.add_argument("file")
    dg.add_argument("--from", dest="source", default="standard")
    dg.add_argument("--to", dest="target", default=None, help="omit to search")
    dg.add_argument("--search-depth", type=int, default=4)

    c = sub.add_parser("coherence", parents=[common], help="decide a diagram")
    c.add_argument("file")
    c.add_argument("--mode", choices=("free", "model", "lift"), default="free")
    c.add_argument("--bound", type=int, default=4, help="leaf bound for lift mode")
    c.add_argument("--sss", default="standard")

    o = sub.add_parser("oracle", parents=[common], help="check the inverse-category laws on finite sets")
    o.add_argument("--max-size", type=int, default=3)

    lw = sub.add_parser("laws", parents=[common], help="lax classical-structure conditions")
    lw.add_argument("--sss", default="standard")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except (UsageError, ParseError, ArrowError) as exc:
        if args.json:
            print(json.dumps({"command": args.command, "inputs": {}, "results": [],
                              "verdict": "error", "error": str(exc)}, indent=2))
        print(f"pisokit {args.command}: error: {exc}", file=sys.stderr)
        return USAGE
    return report.emit(args.json)


if __name__ == "__main__":
    sys.exit(main())
