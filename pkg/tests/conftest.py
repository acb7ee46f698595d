import pytest

from pmqkit import builtins, groups
from pmqkit.pmq import from_group_subset


def perm_index(group, *cycles):
    return groups.find_permutation(group, [list(c) for c in cycles])


@pytest.fixture(scope="session")
def s3():
    return groups.symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return groups.symmetric_group(4)


@pytest.fixture(scope="session")
def s3_transpositions(s3):
    return builtins.transpositions(s3)


@pytest.fixture(scope="session")
def trivial_s3(s3, s3_transpositions):
    """Trivial-product PMQ on {1} + transpositions of S3, as a pair."""
    return from_group_subset(s3, s3_transpositions, "trivial", with_pair=True)


@pytest.fixture(scope="session")
def geodesic_s3(s3):
    return from_group_subset(s3, mode="geodesic", norm=groups.cycle_norm(s3), with_pair=True)


@pytest.fixture(scope="session")
def geodesic_s4(s4):
    return from_group_subset(s4, mode="geodesic", norm=groups.cycle_norm(s4), with_pair=True)


@pytest.fixture(scope="session")
def complete_s3(s3):
    return from_group_subset(s3, mode="complete", with_pair=True)


def pmq_element(pair, *cycles):
    """Carrier index of the permutation with the given 1-based cycles."""
    g = perm_index(pair.group, *cycles)
    return pair.e.index(g)


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion; printed in the terminal summary."""

    def record(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
