"""Command-line surface: cf, polarize, graph, pierced, betti, invert, chordal, generate, validate."""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import warnings
from dataclasses import dataclass, field

from .betti import betti_recursive, invert_graded, invert_multigraded, multigraded_betti_closed
from .betti import BettiTable
from .codes import MAX_NEURONS, delete_neuron, parse_code, serialize_code, validate_code
from .graphs import all_elimination_orderings, chordality, parse_graph, render_dot, render_graph
from .graphs import chordless_cycle_witness, relationship_graph
from .oracle import betti_table_oracle
from .piercing import (
    PiercingOrder,
    build_code,
    is_inductively_pierced,
    is_inductively_pierced_fast,
    piercing_profile,
    random_pierced_code,
    steps_for_order,
)
from .polarization import PiercingStep, parse_ideal, polarized_ideal
from .pseudomonomials import canonical_form

OK, INPUT_ERROR, MISMATCH = 0, 2, 3


class CrossCheckMismatch(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


@dataclass
class RunReport:
    """Deterministically serializable run record for golden-file tests."""

    command: str
    input_digest: str | None = None
    output: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    timings: dict | None = None

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "input_digest": self.input_digest,
            "output": self.output,
            "warnings": self.warnings,
        }
        if self.timings is not None:
            payload["timings"] = self.timings
        return json.dumps(payload, indent=2, sort_keys=True)


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_code(args, report: RunReport):
    text = _read(args.codefile)
    report.input_digest = _digest(text)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        code = parse_code(text, max_n=args.max_n)
    report.warnings += [str(w.message) for w in caught]
    if getattr(args, "strip_silent", False):
        diag = validate_code(code)
        for i in reversed(diag.silent):
            code = delete_neuron(code, i)
        if diag.silent:
            report.warnings.append(f"stripped silent neurons {list(diag.silent)} (reindexed)")
    return code


def _emit(args, report: RunReport, human: str) -> None:
    if args.json:
        print(report.to_json())
    else:
        for w in report.warnings:
            print(f"warning: {w}", file=sys.stderr)
        print(human, end="" if human.endswith("\n") else "\n")


def cmd_cf(args) -> int:
    report = RunReport("cf")
    code = _load_code(args, report)
    cf = canonical_form(code)
    report.output = {"n": code.n, "canonical_form": [f.render() for f in cf]}
    _emit(args, report, "\n".join(f.render() for f in cf) if cf else "0")
    return OK


def cmd_polarize(args) -> int:
    report = RunReport("polarize")
    code = _load_code(args, report)
    ideal = polarized_ideal(canonical_form(code), code.n)
    report.output = {"n": ideal.n, "generators": [g.render() for g in ideal.gens]}
    _emit(args, report, ideal.render())
    return OK


def cmd_graph(args) -> int:
    report = RunReport("graph")
    code = _load_code(args, report)
    g = relationship_graph(polarized_ideal(canonical_form(code), code.n))
    report.output = {"n": g.n, "edges": sorted(list(e) for e in g.edges)}
    _emit(args, report, render_dot(g) if args.dot else render_graph(g))
    return OK


def cmd_validate(args) -> int:
    report = RunReport("validate")
    code = _load_code(args, report)
    diag = validate_code(code)
    report.output = {
        "n": code.n,
        "clean": diag.clean,
        "silent": list(diag.silent),
        "duplicate_pairs": [list(p) for p in diag.duplicate_pairs],
    }
    lines = [f"n={code.n}"]
    lines.append("silent neurons: " + (" ".join(map(str, diag.silent)) if diag.silent else "none"))
    lines.append(
        "duplicate pairs: "
        + (" ".join(f"({i},{j})" for i, j in diag.duplicate_pairs) if diag.duplicate_pairs else "none")
    )
    _emit(args, report, "\n".join(lines))
    return OK


def cmd_pierced(args) -> int:
    report = RunReport("pierced")
    code = _load_code(args, report)
    fast = is_inductively_pierced_fast(code)
    order = None
    if args.order:
        wanted = [int(tok) for tok in args.order.split(",")]
        order = steps_for_order(code, wanted)
        if order is None:
            report.output = {"pierced": fast.pierced, "order_accepted": False}
            _emit(args, report, f"order {args.order} is not a piercing order")
            return MISMATCH if fast.pierced and not args.certify else OK
    if order is None and (fast.pierced or args.certify):
        order = is_inductively_pierced(code)
    if args.certify or fast.pierced:
        definitional = order is not None
        if definitional != fast.pierced:
            print(
                "cross-check mismatch: definitional verdict "
                f"{definitional} vs quadratic+chordal verdict {fast.pierced}",
                file=sys.stderr,
            )
            return MISMATCH
    if not fast.pierced:
        report.output = {"pierced": False, "reason": fast.reason, "cf_degrees": list(fast.cf_degrees)}
        _emit(args, report, f"not inductively pierced ({fast.reason})")
        return OK
    profile = piercing_profile(order)
    report.output = {
        "pierced": True,
        "order": list(order.order),
        "jk": list(profile.jk),
        "jkl": [[k, l, c] for (k, l), c in profile.jkl],
        "steps": [s.render() for s in order.steps],
    }
    head = (
        "inductively pierced; order "
        + ",".join(map(str, order.order))
        + "; "
        + profile.render_marginals()
    )
    _emit(args, report, "\n".join([head, profile.render(), order.render()]))
    return OK


def _betti_tables(args, code, report) -> dict[str, BettiTable]:
    tables: dict[str, BettiTable] = {}
    methods = ["formula", "recursion", "oracle"] if args.method == "all" else [args.method]
    order = None
    if "formula" in methods or "recursion" in methods:
        order = is_inductively_pierced(code)
        if order is None:
            raise ValueError("the formula and recursion methods require an inductively pierced code")
    for method in methods:
        if method == "formula":
            tables[method] = multigraded_betti_closed(piercing_profile(order))
        elif method == "recursion":
            tables[method] = betti_recursive(order)
        else:
            ideal = polarized_ideal(canonical_form(code), code.n)
            tables[method] = betti_table_oracle(ideal, threads=args.threads)
    return tables


def cmd_betti(args) -> int:
    report = RunReport("betti")
    if args.ideal:
        text = _read(args.ideal)
        report.input_digest = _digest(text)
        ideal = parse_ideal(text)
        if args.method not in ("oracle",):
            raise ValueError("--ideal input supports only --method oracle")
        tables = {"oracle": betti_table_oracle(ideal, threads=args.threads)}
    else:
        code = _load_code(args, report)
        tables = _betti_tables(args, code, report)
    names = sorted(tables)
    first = tables[names[0]]
    for name in names[1:]:
        if tables[name] != first:
            print(
                f"cross-check mismatch: {names[0]} and {name} tables differ\n"
                f"{names[0]}: {first.to_json_dict()}\n{name}: {tables[name].to_json_dict()}",
                file=sys.stderr,
            )
            return MISMATCH
    report.output = dict(first.to_json_dict(), methods=names)
    human = first.render_triangle()
    if len(names) > 1:
        human += "methods agree: " + ", ".join(names) + "\n"
    _emit(args, report, human)
    return OK


def cmd_invert(args) -> int:
    report = RunReport("invert")
    text = _read(args.bettifile)
    report.input_digest = _digest(text)
    data = json.loads(text)
    n = args.n if args.n is not None else data.get("n")
    if n is None:
        raise ValueError("neuron count missing: pass --n or include \"n\" in the file")
    output: dict = {"n": n}
    lines = []
    if "multigraded" in data:
        entries = {(w, u, v): c for w, u, v, c in data["multigraded"]}
        table = BettiTable.from_dict(n, entries)
        profile = invert_multigraded(table)
        output["jkl"] = [[k, l, c] for (k, l), c in profile.jkl]
        output["jk"] = list(profile.jk)
        lines += [profile.render(), profile.render_marginals()]
    elif "graded" in data:
        graded = {(w, j): c for w, j, c in data["graded"]}
        jk = invert_graded(graded, n)
        output["jk"] = list(jk)
        lines.append(" ".join(f"j{k}={c}" for k, c in enumerate(jk)))
    else:
        raise ValueError("input file has neither a \"multigraded\" nor a \"graded\" field")
    report.output = output
    _emit(args, report, "\n".join(lines))
    return OK


def cmd_chordal(args) -> int:
    report = RunReport("chordal")
    text = _read(args.graphfile)
    report.input_digest = _digest(text)
    g = parse_graph(text)
    ordering = chordality(g)
    if ordering is None:
        cycle = chordless_cycle_witness(g)
        report.output = {"chordal": False, "witness": list(cycle) if cycle else None}
        suffix = " (chordless cycle " + "-".join(map(str, cycle)) + ")" if cycle else ""
        _emit(args, report, f"not chordal{suffix}")
        return OK
    profile = ordering.profile()
    out = {
        "chordal": True,
        "ordering": list(ordering.order),
        "profile": list(profile),
    }
    lines = [
        "chordal; elimination order " + ",".join(map(str, ordering.order)),
        "simplicial degree profile {" + ",".join(map(str, profile)) + "}",
    ]
    if g.n <= args.enumerate_up_to:
        count = 0
        for other in all_elimination_orderings(g):
            count += 1
            if other.profile() != profile:
                print(
                    f"cross-check mismatch: ordering {other.order} has profile {other.profile()}",
                    file=sys.stderr,
                )
                return MISMATCH
        out["orderings_checked"] = count
        out["profile_invariant"] = True
        lines.append(f"profile invariant across all {count} orderings")
    report.output = out
    _emit(args, report, "\n".join(lines))
    return OK


_STEP_RE = re.compile(
    r"^step\s+(\d+):\s*sigma=\{([0-9,\s]*)\}\s*tau=\{([0-9,\s]*)\}"
)


def parse_steps(text: str) -> PiercingOrder:
    """Read steps in the rendered format, e.g. "step 5: sigma={3} tau={2,3} k=1 l=1"."""
    steps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _STEP_RE.match(line)
        if m is None:
            raise ValueError(f"line {lineno}: not a piercing step: {line!r}")

        def to_mask(csv: str) -> int:
            mask = 0
            for tok in csv.split(","):
                tok = tok.strip()
                if tok:
                    mask |= 1 << (int(tok) - 1)
            return mask

        steps.append(PiercingStep(int(m.group(1)), to_mask(m.group(2)), to_mask(m.group(3))))
    return PiercingOrder(tuple(steps))


def cmd_generate(args) -> int:
    report = RunReport("generate")
    if args.steps:
        text = _read(args.steps)
        report.input_digest = _digest(text)
        order = parse_steps(text)
        code = build_code(order.steps)
    else:
        if args.n is None:
            raise ValueError("pass --n (or --steps FILE)")
        if args.n > args.max_n:
            raise ValueError(f"--n {args.n} exceeds --max-n {args.max_n}")
        order, code = random_pierced_code(args.n, kmax=args.kmax, seed=args.seed)
    body = serialize_code(code)
    trailer = "".join(f"# {s.render()}\n" for s in order.steps)
    report.output = {
        "n": code.n,
        "code": body.splitlines(),
        "order": list(order.order),
        "steps": [s.render() for s in order.steps],
    }
    _emit(args, report, body + trailer)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON run report")
    common.add_argument("--threads", type=int, default=1, help="worker count for the oracle sweep")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized subcommands")
    common.add_argument(
        "--max-n", type=int, default=MAX_NEURONS, help="cap on the neuron count accepted at parse time"
    )

    parser = argparse.ArgumentParser(
        prog="codebetti",
        description="Canonical forms, piercing structure, and Betti numbers of neural codes.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("cf", parents=[common], help="canonical form of a code")
    p.add_argument("codefile")
    p.add_argument("--strip-silent", action="store_true", help="drop silent neurons first")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("polarize", parents=[common], help="polarized ideal of a code")
    p.add_argument("codefile")
    p.add_argument("--strip-silent", action="store_true")
    p.set_defaults(func=cmd_polarize)

    p = sub.add_parser("graph", parents=[common], help="general relationship graph of a code")
    p.add_argument("codefile")
    p.add_argument("--strip-silent", action="store_true")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of an edge list")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("pierced", parents=[common], help="inductively pierced verdict and profile")
    p.add_argument("codefile")
    p.add_argument("--strip-silent", action="store_true")
    p.add_argument("--certify", action="store_true", help="run the definitional check as well and compare")
    p.add_argument("--order", help="comma-separated construction order to validate")
    p.set_defaults(func=cmd_pierced)

    p = sub.add_parser("betti", parents=[common], help="Betti table of a code or ideal")
    p.add_argument("codefile", nargs="?", help="code file (omit when using --ideal)")
    p.add_argument("--ideal", help="monomial-list file; implies --method oracle")
    p.add_argument("--strip-silent", action="store_true")
    p.add_argument(
        "--method",
        choices=["formula", "recursion", "oracle", "all"],
        default="all",
        help="computation route; 'all' cross-checks every route",
    )
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("invert", parents=[common], help="piercing counts from a Betti table")
    p.add_argument("bettifile", help="JSON file with a graded or multigraded table")
    p.add_argument("--n", type=int, help="neuron count (overrides the file)")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("chordal", parents=[common], help="chordality and elimination profile of a graph")
    p.add_argument("graphfile")
    p.add_argument(
        "--enumerate-up-to",
        type=int,
        default=8,
        help="check profile invariance over all orderings up to this many vertices",
    )
    p.set_defaults(func=cmd_chordal)

    p = sub.add_parser("generate", parents=[common], help="emit a random pierced code, or replay steps")
    p.add_argument("--n", type=int, help="number of neurons")
    p.add_argument("--kmax", type=int, help="largest interval rank a step may pierce")
    p.add_argument("--steps", help="replay a steps file instead of sampling")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", parents=[common], help="silent/duplicate diagnostics for a code")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.func is cmd_betti and not args.ideal and not args.codefile:
            raise ValueError("pass a code file or --ideal")
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
