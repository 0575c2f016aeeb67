"""One PASS/FAIL line per acceptance criterion.

The lines are printed in the terminal summary ("acceptance criteria"
section) and, with ``-s``, inline as each criterion runs.
"""

import pytest

from flagaut.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA],
                         ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, acceptance_log):
    result = run_criterion(number)
    line = result.line()
    acceptance_log.append(line)
    print("\n" + line)
    assert result.passed, result.detail
