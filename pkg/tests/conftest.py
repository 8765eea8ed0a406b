import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from kdegen.generators import gnp
from kdegen.graph import Graph


@st.composite
def graphs(draw, max_n=12, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def random_graphs(count, max_n, densities=(0.1, 0.3, 0.5, 0.8), seed=0, min_n=0):
    """Deterministic G(n, p) sample cycling through ``densities``."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(min_n, max_n)
        yield gnp(n, densities[i % len(densities)], seed=rng.randrange(1 << 30))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome.upper(), props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status, detail in sorted(lines, key=lambda t: int(t[0].split()[0][2:])):
            terminalreporter.write_line(f"{status:6} {name}  {detail}")
