"""mu_p and Z/p have the same order over GF(p), but only mu_p is linearly reductive."""
import argparse
from dataclasses import dataclass, field

from hopftrace import hopf as H
from hopftrace.blocks import dual_group
from hopftrace.dual import convolution_algebra, is_linearly_reductive, trace_form_gram
from hopftrace.fields import GF
from hopftrace.groups import cyclic_group


@dataclass
class ContrastConfig:
    primes: list = field(default_factory=lambda: [2, 3, 5, 7])
    show_gram: bool = False


def run(cfg: ContrastConfig):
    for p in cfg.primes:
        f = GF(p)
        mu = H.mu_n(p, f)
        const = H.cartier_dual(mu)
        assert const == H.constant_group_scheme(cyclic_group(p), f)
        for name, A in (("mu_p", mu), ("Z/p ", const)):
            d = is_linearly_reductive(A)
            g = dual_group(A)
            print(f"p={p} {name}: reductive={d.reductive} gram_rank={d.gram_rank}/{d.dim} "
                  f"dual group discrete={g.discrete} blocks={list(g.block_dims)}")
            if cfg.show_gram:
                for row in trace_form_gram(convolution_algebra(A)).entries.rows:
                    print("    " + " ".join(str(int(x)) for x in row))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    ap.add_argument("--show-gram", action="store_true")
    args = ap.parse_args()
    run(ContrastConfig(args.primes, args.show_gram))
