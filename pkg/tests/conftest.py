import pytest

import corpusgen


@pytest.fixture(scope="session")
def corpus():
    return corpusgen.corpus_entries()


@pytest.fixture(scope="session")
def gcd_closed_sets():
    return corpusgen.gcd_closed_sets()


@pytest.fixture(scope="session")
def condition_g_sets():
    return corpusgen.condition_g_sets()


@pytest.fixture(scope="session")
def non_condition_g_sets():
    return corpusgen.non_condition_g_sets()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance-criterion verdicts so they appear in every run log."""
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
