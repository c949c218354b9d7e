"""Acceptance criteria, one test per criterion.

Every record prints a ``[PASS]``/``[FAIL]`` line; the lines are also
collected into the terminal summary.  Run directly (``python3
tests/test_acceptance.py``) to print only the report.
"""

import warnings

import pytest

from cavity_eit.validation import CRITERIA, run_criterion

ACCEPTANCE_LINES = []


@pytest.mark.acceptance
@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        records = run_criterion(number)
    for rec in records:
        line = rec.line()
        ACCEPTANCE_LINES.append(line)
        print(line)
    failed = [r.name for r in records if not r.passed]
    assert not failed, f"failed: {failed}"


if __name__ == "__main__":
    from cavity_eit.validation import run_suite

    report = run_suite()
    for rec in report.records:
        print(rec.line())
    print("OVERALL:", "PASS" if report.passed else "FAIL")
