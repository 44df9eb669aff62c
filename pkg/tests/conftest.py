import pytest

from cubic_congruences.series import EXACT, TruncatedSeries


def naive_product_coeffs(m, N):
    """prod_{k>=1} (1 - q^{mk}) to order N using plain lists, no package code."""
    c = [1] + [0] * N
    for step in range(m, N + 1, m):
        c = [c[i] - (c[i - step] if i >= step else 0) for i in range(N + 1)]
    return c


def naive_mul(a, b, N):
    out = [0] * (N + 1)
    for i in range(min(len(a), N + 1)):
        for j in range(min(len(b), N + 1 - i)):
            out[i + j] += a[i] * b[j]
    return out


def series(coeffs, ring=EXACT, order=None):
    return TruncatedSeries(coeffs, ring, order)


@pytest.fixture
def f1_15():
    return series(naive_product_coeffs(1, 15))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
