import random

import pytest

from xagdepth.networks import maj5_xag, random_xag


def majority(bits):
    return int(sum(bits) * 2 > len(bits))


def maj_table(n):
    return sum(1 << m for m in range(1 << n) if bin(m).count("1") * 2 > n)


def random_nets(count, seed, max_inputs=10, max_gates=40, max_outputs=3):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_xag(rng.randint(1, max_inputs), rng.randint(1, max_gates),
                         rng.randint(1, max_outputs), rng)


@pytest.fixture
def maj5():
    return maj5_xag()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
