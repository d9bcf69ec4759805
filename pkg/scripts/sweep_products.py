"""Run the product-group suite on every coprime pair of small primary groups.

    python scripts/sweep_products.py --max-order 36
"""

import argparse
import time
from dataclasses import asdict, dataclass
from math import gcd

from lambdacond.groups import primary_groups_up_to
from lambdacond.product import MAX_PRODUCT_ORDER, product_conductor


@dataclass
class ProductSweepConfig:
    max_order: int = MAX_PRODUCT_ORDER
    samples: int = 100
    seed: int = 20240229


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, value in asdict(ProductSweepConfig()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=int, default=value)
    cfg = ProductSweepConfig(**vars(parser.parse_args()))

    groups = primary_groups_up_to(cfg.max_order // 2)
    failures = 0
    for g1 in groups:
        for g2 in groups:
            if g1.p >= g2.p or gcd(g1.order, g2.order) != 1 or g1.order * g2.order > cfg.max_order:
                continue
            start = time.perf_counter()
            rep, payload = product_conductor(g1, g2, samples=cfg.samples, seed=cfg.seed, max_order=cfg.max_order)
            failures += not rep.passed
            print(f"{g1.spec_string():>8} x {g2.spec_string():<6} n={payload['order']:>3} "
                  f"rank I_lambda={payload['ranks']['I_lambda']:>3} "
                  f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)} "
                  f"{time.perf_counter() - start:6.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
