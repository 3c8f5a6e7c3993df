"""Command-line front end.

Every subcommand writes one machine-readable certificate (atomically) and
prints a short human-readable summary.  Exit codes partition outcomes:

    0   claim verified on the grid / witness constructed
    1   counterexample found / search completed without a witness
    2   inconclusive: a resource budget ran out before a verdict
    64  usage error (bad flag, malformed input, violated precondition)
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .audit import ALL_CLAIMS, audit_coloring_claim
from .certificate import (
    Certificate,
    COUNTEREXAMPLE,
    EXHAUSTED,
    INCONCLUSIVE,
    WITNESS,
    format_certificate,
    write_certificate,
)
from .coloring import DomainError, evaluate, parse_coloring_spec
from .constructions import (
    PatternFixture,
    PipelinePreconditionError,
    PoolExhaustedError,
    baire_sumset_construct,
    fin_fin_pipeline,
    greedy_fs_basis,
    owings_pattern_construct,
    subset_sums,
)
from .delta import extract_delta_system, parse_set_family, verify_delta_system
from .exact import QVec, parse_qvec, parse_rat
from .intervals import parse_interval_set
from .search import Budget, fs_number, fu_number
from .semigroup import NatCarrier, parse_cayley_table

USAGE_ERROR = 64


@dataclass
class RunConfig:
    subcommand: str
    out: Path
    workers: int = 1
    budget: Budget = field(default_factory=Budget)
    options: dict = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(USAGE_ERROR)


def _build_parser() -> _Parser:
    p = _Parser(prog="sumcert", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, default_out):
        sp.add_argument("--out", type=Path, default=Path(default_out),
                        help="certificate output path")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--budget-nodes", type=int, default=None)
        sp.add_argument("--budget-millis", type=int, default=None)

    sp = sub.add_parser("color-eval", help="evaluate a named colouring at a point")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--point", required=True)
    common(sp, "color-eval.cert")

    sp = sub.add_parser("audit", help="run a claim suite over a grid")
    sp.add_argument("--claim", required=True, choices=ALL_CLAIMS)
    sp.add_argument("--max-den", type=int, default=4)
    sp.add_argument("--max-val", type=int, default=8)
    sp.add_argument("--dim", type=int, default=2)
    sp.add_argument("--coef-range", type=int, default=2)
    sp.add_argument("--max-support", type=int, default=64)
    common(sp, "audit.cert")

    sp = sub.add_parser("fs-number", help="least R forcing a monochromatic sum configuration")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    common(sp, "fs-number.cert")

    sp = sub.add_parser("fu-number", help="least F forcing a monochromatic union family")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    common(sp, "fu-number.cert")

    sp = sub.add_parser("delta", help="extract a Delta-system from a set family")
    sp.add_argument("--family", type=Path, required=True,
                    help="file with one member per line, whitespace-separated elements")
    sp.add_argument("--p", type=int, required=True, help="target size")
    common(sp, "delta.cert")

    sp = sub.add_parser("greedy-basis", help="greedy injective finite-sums basis")
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--table", type=Path, default=None,
                    help="Cayley table file; omit for the positive naturals")
    common(sp, "greedy-basis.cert")

    sp = sub.add_parser("pipeline", help="monochromatic finite-sums witness in a finite semigroup")
    sp.add_argument("--table", type=Path, required=True)
    sp.add_argument("--colors", type=Path, required=True,
                    help="file with one integer colour per element line")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--external-f", type=int, default=None,
                    help="stand-in union-forcing number (certificate becomes conditional)")
    common(sp, "pipeline.cert")

    sp = sub.add_parser("pullback", help="pair-Ramsey pullback to a two-term witness")
    sp.add_argument("--kappa", type=int, required=True)
    sp.add_argument("--edge-coloring", default="constant",
                    choices=("constant", "pentagon", "distance-parity"))
    common(sp, "pullback.cert")

    sp = sub.add_parser("owings-construct", help="pairwise-sum pattern construction")
    sp.add_argument("--colors", type=int, required=True)
    sp.add_argument("--i1", type=int, required=True)
    sp.add_argument("--i2", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    common(sp, "owings-construct.cert")

    sp = sub.add_parser("baire-construct", help="greedy sumset inside an interval set")
    sp.add_argument("--set", dest="region", required=True,
                    help="interval set, e.g. '(0,1) U [2,3) \\ {1/2}'")
    sp.add_argument("--n", type=int, required=True)
    common(sp, "baire-construct.cert")

    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    config = RunConfig(
        subcommand=args.subcommand,
        out=args.out,
        workers=args.workers,
        budget=Budget(nodes=args.budget_nodes, millis=args.budget_millis),
        options=vars(args),
    )
    try:
        return run(config)
    except (ValueError, OSError, DomainError, PipelinePreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def run(config: RunConfig) -> int:
    handler = _HANDLERS[config.subcommand]
    cert, exit_code = handler(config)
    write_certificate(cert, str(config.out))
    sys.stdout.write(format_certificate(cert))
    return exit_code


def _exit_for(cert: Certificate, absent_is_failure: bool = True) -> int:
    if cert.verdict == INCONCLUSIVE:
        return 2
    if cert.verdict == COUNTEREXAMPLE:
        return 1
    if cert.verdict == EXHAUSTED and absent_is_failure:
        return 1
    return 0


def _cmd_color_eval(config: RunConfig):
    opts = config.options
    spec = parse_coloring_spec(opts["coloring"])
    text = opts["point"].strip()
    point = parse_qvec(text) if text.startswith("{") else parse_rat(text)
    color = evaluate(spec, point)
    cert = Certificate.build(
        "color-eval",
        {"coloring": str(spec), "point": text},
        WITNESS,
        {"color": str(color)},
        1,
    )
    return cert, 0


def _cmd_audit(config: RunConfig):
    opts = config.options
    cert = audit_coloring_claim(
        opts["claim"],
        max_den=opts["max_den"],
        max_val=opts["max_val"],
        dim=opts["dim"],
        coef_bound=opts["coef_range"],
        max_support=opts["max_support"],
        workers=config.workers,
    )
    return cert, _exit_for(cert, absent_is_failure=False)


def _cmd_fs_number(config: RunConfig):
    cert = fs_number(config.options["k"], config.options["t"],
                     budget=config.budget, workers=config.workers)
    return cert, _exit_for(cert, absent_is_failure=False)


def _cmd_fu_number(config: RunConfig):
    cert = fu_number(config.options["k"], config.options["t"],
                     budget=config.budget, workers=config.workers)
    return cert, _exit_for(cert, absent_is_failure=False)


def _cmd_delta(config: RunConfig):
    opts = config.options
    family = parse_set_family(opts["family"].read_text())
    p = opts["p"]
    result = extract_delta_system(family, p)
    params = {"p": p, "family_size": len(family)}
    if result is None:
        cert = Certificate.build("delta", params, EXHAUSTED, {}, len(family))
        return cert, 1
    root, members = result
    if not verify_delta_system(members, root):
        raise AssertionError("extracted system failed verification")
    payload = {
        "root": " ".join(str(x) for x in sorted(root)) or "(empty)",
        "size": len(members),
        "members": "; ".join(" ".join(str(x) for x in sorted(m)) for m in members),
    }
    cert = Certificate.build("delta", params, WITNESS, payload, len(family))
    return cert, 0


def _cmd_greedy_basis(config: RunConfig):
    opts = config.options
    count = opts["count"]
    if opts["table"] is None:
        carrier = NatCarrier()
        add = NatCarrier.add
        carrier_name = "naturals"
    else:
        carrier = parse_cayley_table(opts["table"].read_text())
        add = carrier.add
        carrier_name = f"table({carrier.n})"
    params = {"count": count, "carrier": carrier_name}
    try:
        basis = greedy_fs_basis(carrier, count)
    except PoolExhaustedError as exc:
        cert = Certificate.build("greedy-basis", params, EXHAUSTED,
                                 {"reason": str(exc)}, count)
        return cert, 1
    sums = subset_sums(basis, add)
    distinct = len(set(sums.values()))
    if distinct != (1 << count) - 1:
        raise AssertionError("subset sums failed injectivity")
    payload = {
        "basis": " ".join(str(h) for h in basis),
        "distinct_subset_sums": distinct,
    }
    cert = Certificate.build("greedy-basis", params, WITNESS, payload, count)
    return cert, 0


def _cmd_pipeline(config: RunConfig):
    opts = config.options
    table = parse_cayley_table(opts["table"].read_text())
    colors = [int(x) for x in opts["colors"].read_text().split()]
    if len(colors) != table.n:
        raise ValueError(f"colour file has {len(colors)} entries for {table.n} elements")
    cert = fin_fin_pipeline(
        table, lambda x: colors[x], opts["k"], opts["t"],
        budget=config.budget, workers=config.workers,
        external_f=opts["external_f"],
    )
    return cert, _exit_for(cert)


def _edge_coloring(name: str):
    if name == "constant":
        return lambda v: 0

    def endpoints(v: QVec) -> tuple[int, int]:
        items = sorted(v.items())
        if len(items) != 2 or items[0][1] != -1 or items[1][1] != 1:
            raise ValueError(f"not a basis difference: {v}")
        return items[0][0], items[1][0]

    if name == "pentagon":
        def color(v: QVec) -> int:
            a, b = endpoints(v)
            return 1 if (b - a) % 5 in (1, 4) else 0

        return color
    if name == "distance-parity":
        def color(v: QVec) -> int:
            a, b = endpoints(v)
            return (b - a) % 2

        return color
    raise ValueError(f"unknown edge colouring {name!r}")


def _cmd_pullback(config: RunConfig):
    from .constructions import ramsey_pullback_fs

    opts = config.options
    pair, cert = ramsey_pullback_fs(opts["kappa"], _edge_coloring(opts["edge_coloring"]))
    return cert, 0 if pair is not None else 1


def _cmd_owings(config: RunConfig):
    opts = config.options
    fixture = PatternFixture.standard(opts["colors"], opts["i1"], opts["i2"], opts["count"])
    _, cert = owings_pattern_construct(opts["colors"], fixture, opts["count"])
    return cert, 0


def _cmd_baire(config: RunConfig):
    opts = config.options
    region = parse_interval_set(opts["region"])
    _, cert = baire_sumset_construct(region, opts["n"])
    return cert, 0


_HANDLERS = {
    "color-eval": _cmd_color_eval,
    "audit": _cmd_audit,
    "fs-number": _cmd_fs_number,
    "fu-number": _cmd_fu_number,
    "delta": _cmd_delta,
    "greedy-basis": _cmd_greedy_basis,
    "pipeline": _cmd_pipeline,
    "pullback": _cmd_pullback,
    "owings-construct": _cmd_owings,
    "baire-construct": _cmd_baire,
}


if __name__ == "__main__":
    sys.exit(main())
