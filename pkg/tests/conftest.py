from fractions import Fraction
from pathlib import Path

import pytest

from intuitionist import creals, kernels

FIXTURES = Path(__file__).parent / "fixtures"

# every MeasurablyCert issued during the session, with the pair it was issued for
ISSUED = []


def audit_cert(beta, gamma, m, n, window=64):
    """Independent re-check of a measurably-smaller certificate.

    Direct inequality over ``[m, m + window]`` plus the margin at ``m`` that,
    by regularity of both sequences, extends it to every ``v >= m``.
    """
    eps = Fraction(1, 2**n)
    for v in range(m, m + window + 1):
        if not gamma(v) - beta(v) > eps:
            return False
    # |beta(v) - beta(m)| + |gamma(v) - gamma(m)| <= 2 * (2**-v + 2**-m) <= 4 * 2**-m
    return gamma(m) - beta(m) - 4 * Fraction(1, 2**m) > eps


@pytest.fixture(autouse=True)
def _audit_certificates(monkeypatch):
    # every certificate search goes through this kernel, whichever caller asked
    original = kernels.margin_search

    def audited(lower, upper, fuel):
        found = original(lower, upper, fuel)
        if found is not None:
            m, n = found
            ok = audit_cert(lower, upper, m, n)
            ISSUED.append((creals.MeasurablyCert(m, n), ok))
            assert ok, f"unsound certificate m={m} n={n}"
        return found

    monkeypatch.setattr(kernels, "margin_search", audited)
    yield


@pytest.fixture
def fixtures_dir():
    return FIXTURES


# PASS/FAIL lines from the acceptance suite, repeated in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
    if ISSUED:
        bad = sum(1 for _, ok in ISSUED if not ok)
        terminalreporter.write_line(f"certificate audit: {len(ISSUED)} issued, {bad} unsound")
