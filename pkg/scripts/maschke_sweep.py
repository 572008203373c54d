"""Reductivity table for small constant groups: trace-form rank vs the gcd rule vs the separability solve."""
import argparse
from dataclasses import dataclass, field
from math import gcd

from hopftrace import hopf as H
from hopftrace.dual import convolution_algebra, is_linearly_reductive, separability_oracle
from hopftrace.fields import GF, QQ
from hopftrace.groups import abelian_group, symmetric_group


@dataclass
class SweepConfig:
    max_order: int = 12
    primes: list = field(default_factory=lambda: [2, 3, 5, 7])
    include_s3: bool = True


def divisor_chains(m, lo=2):
    if m == 1:
        return [[]]
    return [[d] + rest for d in range(lo, m + 1) if m % d == 0
            for rest in divisor_chains(m // d, d) if all(r % d == 0 for r in rest)]


def run(cfg: SweepConfig):
    groups = [("x".join(f"Z/{d}" for d in c) or "1", m, abelian_group(c) if c else [[0]])
              for m in range(1, cfg.max_order + 1) for c in divisor_chains(m)]
    if cfg.include_s3:
        groups.append(("S3", 6, symmetric_group(3)))
    fields = [QQ] + [GF(p) for p in cfg.primes]
    print(f"{'group':<14}" + "".join(f"{str(f):>8}" for f in fields))
    mismatches = 0
    for name, m, table in groups:
        cells = []
        for f in fields:
            A = H.constant_group_scheme(table, f)
            d = is_linearly_reductive(A)
            rule = f.characteristic == 0 or gcd(m, f.characteristic) == 1
            oracle = separability_oracle(convolution_algebra(A))
            mismatches += (d.reductive != rule) + (d.reductive != oracle)
            cells.append(f"{'R' if d.reductive else '-'}{d.gram_rank:>3}/{m:<3}")
        print(f"{name:<14}" + "".join(f"{c:>8}" for c in cells))
    print(f"cells show R (reductive) or -, then Gram rank / order; mismatches against gcd rule or oracle: {mismatches}")
    return mismatches


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=12)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    args = ap.parse_args()
    raise SystemExit(1 if run(SweepConfig(args.max_order, args.primes)) else 0)
