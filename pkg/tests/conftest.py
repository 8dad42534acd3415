import os
import sys
from functools import lru_cache

sys.path.insert(0, os.path.dirname(__file__))

from ncinv.algebras import AlgebraSpec, hilbert_form  # noqa: E402
from ncinv.multiplicity import multiplicity_table  # noqa: E402

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def canonical_table(family, d, order):
    """Decomposition of the closed-form Hilbert series of F_d, shared across tests."""
    return multiplicity_table(hilbert_form(AlgebraSpec(family, d)).expand(order))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
