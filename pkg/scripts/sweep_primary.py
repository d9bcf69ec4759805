"""Verify every primary abelian group up to an order bound and tabulate the results.

    python scripts/sweep_primary.py --max-order 32 --samples 200 --out sweep.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from lambdacond.conductor import DEFAULT_SAMPLES, DEFAULT_SEED, MAX_PRIMARY_ORDER, verify_group
from lambdacond.groups import primary_groups_up_to


@dataclass
class SweepConfig:
    max_order: int = MAX_PRIMARY_ORDER
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    out: str | None = None


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in asdict(SweepConfig()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=type(value) if value is not None else str, default=value)
    cfg = SweepConfig(**vars(parser.parse_args()))

    rows = []
    print(f"{'group':<14} {'n':>3} {'classes':>7} {'checks':>7} {'seconds':>8}  status")
    for group in primary_groups_up_to(cfg.max_order):
        start = time.perf_counter()
        rep, payload = verify_group(group, samples=cfg.samples, seed=cfg.seed, max_order=cfg.max_order)
        elapsed = time.perf_counter() - start
        status = "ok" if rep.passed else "FAIL " + ",".join(c.name for c in rep.failures()[:3])
        print(f"{group.spec_string():<14} {group.order:>3} {len(payload['classes']):>7} "
              f"{len(rep.checks):>7} {elapsed:>8.2f}  {status}")
        rows.append({"group": group.spec_string(), "passed": rep.passed, "seconds": round(elapsed, 3),
                     "indices": payload["indices"]})
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": asdict(cfg), "groups": rows}, fh, indent=2)
    return 0 if all(r["passed"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
