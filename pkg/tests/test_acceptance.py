"""Acceptance criteria 1-14 at their stated tolerances, one test per criterion.

Each criterion prints a single pass/fail line; the lines are also collected
and repeated in the terminal summary.  Run directly with
``python3 tests/test_acceptance.py`` for the lines alone.
"""

import pytest

from drinfeld.selftest import REGISTRY, run_criterion

LINES = {}


@pytest.mark.parametrize("cid", sorted(REGISTRY))
def test_criterion(cid):
    out = run_criterion(cid, seed=0)
    LINES[cid] = out.line()
    print(out.line())
    assert out.passed, out.line()


if __name__ == "__main__":
    for cid in sorted(REGISTRY):
        print(run_criterion(cid).line(), flush=True)
