"""Wall-clock cost of the Gram matrix, its rank and the separability solve as the dimension grows."""
import argparse
import time
from dataclasses import dataclass, field

from hopftrace import hopf as H
from hopftrace.dual import convolution_algebra, is_linearly_reductive, separability_oracle, trace_form_gram
from hopftrace.fields import GF, QQ
from hopftrace.groups import abelian_group, direct_product, symmetric_group


@dataclass
class TimingConfig:
    field_flag: str = "q"
    with_oracle: bool = True
    cases: list = field(default_factory=lambda: ["S3", "S3xZ2", "S3xZ4", "Z4^3", "S4", "S4xZ2"])


def table(name):
    return {
        "S3": symmetric_group(3),
        "S3xZ2": direct_product(symmetric_group(3), abelian_group([2])),
        "S3xZ4": direct_product(symmetric_group(3), abelian_group([4])),
        "Z4^3": abelian_group([4, 4, 4]),
        "S4": symmetric_group(4),
        "S4xZ2": direct_product(symmetric_group(4), abelian_group([2])),
    }[name]


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def run(cfg: TimingConfig):
    f = QQ if cfg.field_flag == "q" else GF(int(cfg.field_flag.split(":")[1]))
    print(f"{'case':<8}{'dim':>5}{'gram s':>10}{'rank s':>10}{'oracle s':>10}  reductive")
    for name in cfg.cases:
        A = H.constant_group_scheme(table(name), f)
        C = convolution_algebra(A)
        _, tg = timed(lambda: trace_form_gram(C))
        d, tr = timed(lambda: is_linearly_reductive(A))
        to = float("nan")
        if cfg.with_oracle:
            _, to = timed(lambda: separability_oracle(C))
        print(f"{name:<8}{A.dim:>5}{tg:>10.3f}{tr:>10.3f}{to:>10.3f}  {d.reductive}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="q", help="q or fp:<p>")
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args()
    run(TimingConfig(args.field, not args.no_oracle))
