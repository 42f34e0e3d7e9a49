from __future__ import annotations

import pytest

from codeloops.factor_set import solve_factor_set
from codeloops.gf2_code import span

HAMMING_ROWS = ["11110000", "00111100", "00001111", "01010101"]
K2_ROWS = ["11110000", "00111100"]


@pytest.fixture(scope="session")
def rep_code():
    return span(["1111"])


@pytest.fixture(scope="session")
def k2_code():
    return span(K2_ROWS)


@pytest.fixture(scope="session")
def hamming():
    return span(HAMMING_ROWS)


@pytest.fixture(scope="session")
def zero_code():
    return span(["0000"])


@pytest.fixture(scope="session")
def rep_phi(rep_code):
    return solve_factor_set(rep_code)


@pytest.fixture(scope="session")
def k2_phi(k2_code):
    return solve_factor_set(k2_code)


@pytest.fixture(scope="session")
def hamming_phi(hamming):
    return solve_factor_set(hamming)


# ---------------------------------------------------------------------------
# pure-Python oracles, deliberately independent of the numpy code paths

def ref_words(rows: list[str]) -> list[str]:
    """All codewords as strings, by closing the row set under XOR."""
    n = len(rows[0])
    xor = lambda a, b: "".join("1" if x != y else "0" for x, y in zip(a, b))  # noqa: E731
    seen = {"0" * n}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for r in rows:
                s = xor(w, r)
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen)


def ref_mul(phi_rows, k, x, y):
    """Product of (a, u) pairs from a list-of-lists phi, straight from the definition."""
    a, u = x
    b, v = y
    return ((a + b + phi_rows[u][v]) % 2, u ^ v)


def ref_elements(k):
    return [(a, u) for a in (0, 1) for u in range(1 << k)]


def ref_axioms_hold(words: list[int], phi_rows) -> bool:
    n = len(words)
    pc = lambda x: bin(x).count("1")  # noqa: E731
    for u in range(n):
        if phi_rows[u][u] != (pc(words[u]) // 4) % 2:
            return False
    for u in range(n):
        for v in range(n):
            if (phi_rows[u][v] + phi_rows[v][u]) % 2 != (pc(words[u] & words[v]) // 2) % 2:
                return False
    for u in range(n):
        for v in range(n):
            for w in range(n):
                lhs = phi_rows[u][v] + phi_rows[u ^ v][w] + phi_rows[v][w] + phi_rows[u][v ^ w]
                if lhs % 2 != pc(words[u] & words[v] & words[w]) % 2:
                    return False
    return True


# ---------------------------------------------------------------------------
# acceptance summary: one line per criterion at the end of the run

_CRITERIA: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = dict(report.user_properties).get("criterion")
    if label:
        _CRITERIA[report.nodeid] = (label, "PASS" if report.passed else "FAIL")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", f"{m.args[0]}: {m.args[1]}"))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_CRITERIA.values()):
        terminalreporter.write_line(f"{outcome}  criterion {label}")
