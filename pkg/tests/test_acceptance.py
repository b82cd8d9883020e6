"""One test per acceptance criterion; each prints its PASS/FAIL line.

The lines are also collected and echoed in the pytest terminal summary (see
conftest.py), and ``python tests/test_acceptance.py`` prints them directly.
"""

import pytest

from fpgroups.verify import CRITERIA

RESULTS: list[str] = []


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion):
    result = criterion()
    line = result.line()
    RESULTS.append(line)
    print(line)
    assert result.passed, line


if __name__ == "__main__":
    for crit in CRITERIA:
        print(crit().line())
