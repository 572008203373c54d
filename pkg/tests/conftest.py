import hypothesis
import pytest

from hopftrace import hopf as H
from hopftrace.fields import GF, QQ
from hopftrace.groups import abelian_group, cyclic_group, symmetric_group

hypothesis.settings.register_profile("ci", max_examples=40, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=8, deadline=None)
hypothesis.settings.load_profile("ci")

FIELDS = [QQ, GF(2), GF(3), GF(5), GF(7)]


def constructor_family():
    """(name, algebra) pairs covering every constructor, over several fields."""
    out = []
    for f in [QQ, GF(2), GF(3), GF(5)]:
        out.append((f"Z1/{f}", H.constant_group_scheme(cyclic_group(1), f)))
        out.append((f"Z2/{f}", H.constant_group_scheme(cyclic_group(2), f)))
        out.append((f"Z3/{f}", H.constant_group_scheme(cyclic_group(3), f)))
        out.append((f"V4/{f}", H.constant_group_scheme(abelian_group([2, 2]), f)))
        out.append((f"S3/{f}", H.constant_group_scheme(symmetric_group(3), f)))
        out.append((f"mu2/{f}", H.mu_n(2, f)))
        out.append((f"mu3/{f}", H.mu_n(3, f)))
        out.append((f"mu2xZ2/{f}", H.product(H.mu_n(2, f), H.constant_group_scheme(cyclic_group(2), f))))
        out.append((f"D(Z3)/{f}", H.cartier_dual(H.constant_group_scheme(cyclic_group(3), f))))
    for p in (2, 3, 5):
        out.append((f"alpha{p}", H.alpha_p(GF(p))))
        out.append((f"D(alpha{p})", H.cartier_dual(H.alpha_p(GF(p)))))
    out.append(("alpha2xmu2/GF(2)", H.product(H.alpha_p(GF(2)), H.mu_n(2, GF(2)))))
    return out


FAMILY = constructor_family()


@pytest.fixture(params=FAMILY, ids=[name for name, _ in FAMILY])
def algebra(request):
    return request.param[1]


# acceptance lines, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
