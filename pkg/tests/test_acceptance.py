"""Acceptance criteria 1-11 at their stated tolerances, one line per criterion."""

import pytest

from conftest import ACCEPTANCE_LINES
from heattrace.acceptance import CRITERIA, AcceptanceConfig

CFG = AcceptanceConfig()
SLOW = {3, 4, 6}


@pytest.mark.parametrize(
    "cid", [pytest.param(c, marks=pytest.mark.slow) if c in SLOW else c for c in sorted(CRITERIA)]
)
def test_criterion(cid):
    res = CRITERIA[cid](CFG)
    line = res.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert res.passed, f"{line}\n{res.detail}"
