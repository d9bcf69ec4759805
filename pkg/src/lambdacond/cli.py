"""Command line front end.

    python -m lambdacond classes 2:4
    python -m lambdacond conductor 2:2,4 --text
    python -m lambdacond verify 3:9 --out report.json
    python -m lambdacond product 2:2 3:3
    python -m lambdacond all --max-order 16
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from sympy import isprime

from .characters import classes
from .conductor import (
    DEFAULT_PRIMES,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    MAX_PRIMARY_ORDER,
    check_b_algebra,
    conductor_span,
    instability_probe,
    lambda_conductor,
    pullback_summary,
    verify_group,
    summary_json,
)
from .groups import PrimaryGroup, parse_group_spec, primary_groups_up_to
from .product import MAX_PRODUCT_ORDER, product_conductor
from .report import Report

COMMANDS = ("classes", "conductor", "lambda", "verify", "product", "all")


@dataclass
class RunConfig:
    command: str
    specs: list[str] = field(default_factory=list)
    out: str | None = None
    seed: int = DEFAULT_SEED
    max_order: int | None = None
    samples: int = DEFAULT_SAMPLES
    primes: tuple[int, ...] = DEFAULT_PRIMES
    text: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.max_order is not None and self.max_order < 1:
            raise ValueError("--max-order must be positive")
        if self.samples < 0:
            raise ValueError("--samples must be non-negative")

    @property
    def order_bound(self) -> int:
        if self.max_order is not None:
            return self.max_order
        return MAX_PRODUCT_ORDER if self.command == "product" else MAX_PRIMARY_ORDER


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambdacond",
        description="Conductors and lambda-conductors of integral group rings of finite abelian groups.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("specs", nargs="*", help="group specs 'p:c1,c2,...'")
    parser.add_argument("--out", help="write the JSON report to this path")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--max-order", type=int, default=None)
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    parser.add_argument(
        "--primes",
        default=",".join(map(str, DEFAULT_PRIMES)),
        help="comma separated primes for the psi/theta checks",
    )
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="text", action="store_false", default=False)
    fmt.add_argument("--text", dest="text", action="store_true")
    return parser


def parse_config(argv=None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    expected = {"product": 2, "all": 0}.get(args.command, 1)
    if len(args.specs) != expected:
        parser.error(f"{args.command} takes {expected} group spec(s)")
    try:
        for s in args.specs:
            parse_group_spec(s)
        primes = tuple(int(x) for x in args.primes.split(",") if x)
        if not primes or not all(isprime(x) for x in primes):
            raise ValueError(f"--primes must list primes, got {args.primes!r}")
        return RunConfig(
            command=args.command,
            specs=list(args.specs),
            out=args.out,
            seed=args.seed,
            max_order=args.max_order,
            samples=args.samples,
            primes=primes,
            text=args.text,
        )
    except ValueError as exc:
        parser.error(str(exc))


def _classes_payload(group: PrimaryGroup) -> dict:
    return {"group": group.spec_string(), "classes": [c.to_dict() for c in classes(group)]}


def _format_classes(group: PrimaryGroup) -> str:
    lines = [f"character classes of {group.spec_string()} (n={group.order})",
             "idx level representative members y parent"]
    for c in classes(group):
        lines.append(
            f"{c.index:>3} {c.level:>5} {str(c.representative.exps):>14} {len(c.members):>7} "
            f"{'-' if c.y is None else str(c.y)} {'-' if c.parent is None else c.parent}"
        )
    return "\n".join(lines)


def _format_lattice(name: str, lat) -> list[str]:
    lines = [f"{name}: rank {lat.rank} in Z^{lat.dimension}"]
    lines += ["  " + " ".join(f"{a:>4}" for a in row) for row in lat.basis]
    return lines


def _format_report(rep: Report) -> list[str]:
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}  ({c.statement})" for c in rep.checks]
    lines += [f"note: {n}" for n in rep.notes]
    lines.append(f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks passed")
    return lines


def _check_order(cfg: RunConfig, group: PrimaryGroup):
    if group.order > cfg.order_bound:
        raise ValueError(f"group order {group.order} exceeds --max-order {cfg.order_bound}")


def run(cfg: RunConfig) -> tuple[int, dict, str]:
    """Execute a command; returns ``(exit status, JSON payload, text rendering)``."""
    if cfg.command == "classes":
        group = parse_group_spec(cfg.specs[0])
        return 0, _classes_payload(group), _format_classes(group)

    if cfg.command in ("conductor", "lambda"):
        group = parse_group_spec(cfg.specs[0])
        _check_order(cfg, group)
        data = conductor_span(group)
        payload = data.to_dict()
        payload["pullback"] = summary_json(pullback_summary(data))
        text = [_format_classes(group)]
        text.append("generators b_rho:")
        text += [f"  [{c.index}] {list(b.coeffs)}" for c, b in zip(data.classes, data.generators)]
        text += _format_lattice("I", data.I)
        text += [f"{k}: {v}" for k, v in payload["pullback"].items()]
        status = 0
        if cfg.command == "lambda":
            rep = check_b_algebra(data)
            lam, info = lambda_conductor(data, cfg.primes, cfg.samples, cfg.seed)
            rep.extend(lam)
            rep.extend(instability_probe(data))
            payload["lambda"] = info
            payload["checks"] = [c.to_dict() for c in rep.checks]
            payload["notes"] = rep.notes
            text += _format_lattice("I_lambda", data.I_lambda)
            text += _format_report(rep)
            status = 0 if rep.passed else 1
        return status, payload, "\n".join(text)

    if cfg.command == "verify":
        group = parse_group_spec(cfg.specs[0])
        _check_order(cfg, group)
        rep, payload = verify_group(group, cfg.primes, cfg.samples, cfg.seed, cfg.order_bound)
        text = [f"verification of {group.spec_string()}"] + _format_report(rep)
        return (0 if rep.passed else 1), payload, "\n".join(text)

    if cfg.command == "product":
        g1, g2 = (parse_group_spec(s) for s in cfg.specs)
        rep, payload = product_conductor(g1, g2, cfg.primes, cfg.samples, cfg.seed, cfg.order_bound)
        text = [f"product {g1.spec_string()} x {g2.spec_string()}"] + _format_report(rep)
        return (0 if rep.passed else 1), payload, "\n".join(text)

    # all
    payloads, lines, ok = [], [], True
    for group in primary_groups_up_to(cfg.order_bound):
        rep, payload = verify_group(group, cfg.primes, cfg.samples, cfg.seed, cfg.order_bound)
        payloads.append(payload)
        ok = ok and rep.passed
        lines.append(
            f"{'PASS' if rep.passed else 'FAIL'}  {group.spec_string():<14} "
            f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)}"
        )
    return (0 if ok else 1), {"groups": payloads}, "\n".join(lines)


def main(argv=None) -> int:
    cfg = parse_config(argv)
    try:
        status, payload, text = run(cfg)
    except ValueError as exc:
        print(f"lambdacond: error: {exc}", file=sys.stderr)
        return 2
    dumped = json.dumps(payload, indent=2)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(dumped + "\n")
    print(text if cfg.text else dumped)
    return status


if __name__ == "__main__":
    sys.exit(main())
