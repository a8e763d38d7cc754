import random

import pytest

from rigidkit.corpus import generate_corpus


@pytest.fixture(scope="session")
def small_corpus():
    return generate_corpus(10, 3, 120, seed=7)


def random_multigraph(rng: random.Random, max_n: int = 10, loops: bool = True):
    from rigidkit.graph import Multigraph
    n = rng.randint(1, max_n)
    m = rng.randint(0, 3 * n + 2)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = u if loops and rng.random() < 0.2 else rng.randrange(n)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


_ACCEPTANCE: dict[int, str] = {}


def acceptance_line(criterion: int, ok: bool, detail: str) -> str:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
    _ACCEPTANCE[criterion] = line
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[k])
