import pytest

from codebetti import NeuralCode, mask_of, parse_code

WORKED_LINES = ["0", "1", "2", "3", "4", "1 2", "1 4", "2 3", "2 4", "3 5", "1 2 4", "2 3 5"]

# CF of the worked code, in canonical output order
WORKED_CF = ["x1*x3", "x3*x4", "x5*(1-x3)", "x1*x5", "x4*x5"]


def code_of(*wordlists, n=None):
    """Code from index tuples, e.g. code_of((), (1,), (1, 2), n=2)."""
    masks = {mask_of(ws) for ws in wordlists}
    masks.add(0)
    if n is None:
        n = max((m.bit_length() for m in masks), default=0)
    return NeuralCode(n, frozenset(masks))


@pytest.fixture(scope="session")
def worked_code():
    return parse_code("\n".join(WORKED_LINES))


@pytest.fixture(scope="session")
def four_cycle_code():
    # four fields arranged in a ring: 1 and 3 disjoint, 2 and 4 disjoint
    return code_of((1,), (2,), (3,), (4,), (1, 2), (2, 3), (3, 4), (1, 4), n=4)
