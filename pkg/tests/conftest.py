import pytest

from cayleyaut.perm import Perm


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run stretch checks (MBS_7)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="stretch goal; pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def closure(gens):
    """Every element of <gens>, by breadth-first multiplication on image tuples."""
    n = gens[0].degree
    start = tuple(range(n))
    seen = {start}
    frontier = [start]
    raw = [g.images for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in raw:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return {Perm(t) for t in seen}


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
