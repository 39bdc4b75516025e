"""Command-line front end.

Subcommands: validate, analyze, generate, search.  Exit codes follow
sysexits conventions: 0 success, 2 findings (invalid instance or search
hits), 64 usage error, 65 unparseable input, 66 unreadable file.  A verdict
of "unknown" is still a successful analysis.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import instio
from .cocycle import graded_radical, unit_subgroup, unit_subgroup_at, \
    validate_cocycle
from .decisions import ClassificationReport, classify, schur_index, \
    square_free_check
from .errors import CrossOrderError, HypothesisError
from .extension import validate_extension
from .forge import ForgeParams, counterexample_search, cyclic_template, \
    dvr_descriptor, example_rank2, random_instance
from .graphs import canonical_epi, graph_localized, graph_mod_ideal, \
    graph_of_table, nice_coset_reps, phi, psi

EX_OK = 0
EX_FINDINGS = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_NOINPUT = 66


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_NOINPUT)
    try:
        return instio.loads(text)
    except (json.JSONDecodeError, CrossOrderError) as exc:
        print(f"error: cannot parse {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_DATAERR)


def cmd_validate(args) -> int:
    ext, ct, _ = _load(args.path)
    findings = validate_extension(ext).failures() \
        + validate_cocycle(ct).failures()
    if findings:
        for name, detail in findings:
            print(f"FAIL {name}: {detail}")
        return EX_FINDINGS
    print("ok")
    return EX_OK


def _diagram_status(ct, m: int) -> dict:
    out = {"ideal": m, "nice_reps": nice_coset_reps(ct, m)}
    p = psi(ct, m)
    out["psi_monomorphism"] = p.is_monomorphism()
    out["psi_isomorphism"] = p.is_isomorphism()
    try:
        f = phi(ct, m)
        out["phi_defined"] = True
        out["diagram_commutes"] = \
            f.compose(p).mapping == canonical_epi(ct, m).mapping
    except HypothesisError:
        out["phi_defined"] = False
        out["diagram_commutes"] = None
    return out


def analysis_object(ext, ct, residue=None) -> dict:
    report: ClassificationReport = classify(ct, residue)
    rad = graded_radical(ct)
    sf = square_free_check(ct)
    obj = report.to_json()
    obj["unit_subgroup"] = sorted(unit_subgroup(ct))
    obj["local_unit_subgroups"] = [
        sorted(unit_subgroup_at(ct, m)) for m in range(ext.ideal_count)]
    obj["graded_radical_components"] = [
        [s for s in ext.group.elements() if rad.strict[m][s]]
        for m in range(ext.ideal_count)]
    obj["square_free"] = sf.to_json()
    obj["diagrams"] = [_diagram_status(ct, m) for m in range(ext.ideal_count)]
    try:
        obj["schur_index"] = schur_index(ct)
    except HypothesisError:
        obj["schur_index"] = None
    return obj


def _render_text(obj: dict) -> str:
    lines = []
    for name, entry in sorted(obj["verdicts"].items()):
        lines.append(f"{name}: {entry['verdict']}")
        lines.append(f"  rule: {entry['rule']}")
        lines.append(f"  because: {entry['justification']}")
    lines.append(f"unit subgroup H: {obj['unit_subgroup']}")
    lines.append(f"local unit subgroups: {obj['local_unit_subgroups']}")
    lines.append(
        f"graded radical components: {obj['graded_radical_components']}")
    lines.append(f"square-free all entries: {obj['square_free']['all_true']}")
    for d in obj["diagrams"]:
        lines.append(
            f"ideal {d['ideal']}: nice reps {d['nice_reps']}, "
            f"psi iso {d['psi_isomorphism']}, phi defined {d['phi_defined']}, "
            f"diagram commutes {d['diagram_commutes']}")
    if obj["schur_index"] is not None:
        lines.append(f"Schur index: {obj['schur_index']}")
    if obj.get("structure"):
        lines.append(f"structure: {obj['structure']}")
    for c in obj["consistency"]:
        status = "ok" if c["ok"] else "VIOLATED"
        lines.append(f"check {c['name']}: {status} {c['detail']}".rstrip())
    for k, v in sorted(obj["facts"].items()):
        lines.append(f"fact {k}: {v}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    ext, ct, residue = _load(args.path)
    findings = validate_extension(ext).failures() \
        + validate_cocycle(ct).failures()
    if findings:
        for name, detail in findings:
            print(f"FAIL {name}: {detail}")
        return EX_FINDINGS
    obj = analysis_object(ext, ct, residue)
    if args.dot:
        os.makedirs(args.dot, exist_ok=True)
        graphs = {"global": graph_of_table(ct)}
        for m in range(ext.ideal_count):
            graphs[f"ideal{m}"] = graph_mod_ideal(ct, m)
            graphs[f"local{m}"] = graph_localized(ct, m)
        for name, graph in graphs.items():
            with open(os.path.join(args.dot, f"{name}.dot"), "w",
                      encoding="utf-8") as fh:
                fh.write(graph.to_dot(name))
    if args.json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        sys.stdout.write(_render_text(obj))
    return EX_OK


def cmd_generate(args) -> int:
    if args.kind == "example-rank2":
        ext, ct = example_rank2()
    elif args.kind == "cyclic":
        if args.n is None:
            print("error: kind=cyclic needs --n", file=sys.stderr)
            return EX_USAGE
        d = dvr_descriptor(args.n)
        gs = d.gamma.ambient
        gamma = gs.element(Fraction(args.gamma))
        ct = cyclic_template(args.n, gamma, d)
        ext = d
    elif args.kind == "random":
        ext, ct = random_instance(args.seed)
    else:
        print(f"error: unknown kind {args.kind!r}", file=sys.stderr)
        return EX_USAGE
    text = instio.dumps(ext, ct)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_OK


def cmd_search(args) -> int:
    report = counterexample_search(args.budget, seed=args.seed,
                                   params=ForgeParams())
    text = json.dumps(report.to_json(), sort_keys=True, indent=2)
    print(text)
    return EX_FINDINGS if report.hits else EX_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="crossorder",
                description="Valuation-level analysis of crossed-product "
                            "orders")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check an instance file")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="classify an instance file")
    a.add_argument("path")
    a.add_argument("--json", action="store_true")
    a.add_argument("--dot", metavar="DIR",
                   help="write Hasse-diagram DOT files to DIR")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="emit an instance file")
    g.add_argument("kind", choices=["example-rank2", "cyclic", "random"])
    g.add_argument("--n", type=int, default=None)
    g.add_argument("--gamma", default="1",
                   help="cocycle value for kind=cyclic, as a fraction")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", default=None)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("search",
                       help="hunt for a semihereditary table with a "
                            "non-chain per-ideal graph")
    s.add_argument("--budget", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EX_USAGE
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 1


if __name__ == "__main__":
    sys.exit(main())
