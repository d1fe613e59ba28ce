import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import GOLDEN_REGEX, AB, build_language_corpus  # noqa: E402

from quotlat import decompose, parse_regex  # noqa: E402


@pytest.fixture(scope="session")
def golden():
    """Decomposition of the running example: the empty word, a, aa, ba."""
    return decompose(parse_regex(GOLDEN_REGEX, AB))


@pytest.fixture(scope="session")
def corpus():
    """At least 200 random small non-empty languages (regexes and NFAs)."""
    return build_language_corpus(seed=20250809, regex_count=170, nfa_count=50)


@pytest.fixture(scope="session")
def corpus_decompositions(corpus):
    return [(name, decompose(machine)) for name, machine in corpus]


CRITERION_TITLES = {
    1: "golden example quotients",
    2: "golden example atoms",
    3: "golden example lattices",
    4: "golden example duality-map table",
    5: "duality theorem property suite",
    6: "quotient-atom identity suite",
    7: "pairing suite",
    8: "complexity suite",
    9: "oracle equivalence",
    10: "golden matrix audit (definition form; printed variants swapping "
        "the {a} and {eps,a} rows are wrong)",
}

_acceptance_results: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if match:
        number = int(match.group(1))
        # keep the worst outcome if parametrized
        if _acceptance_results.get(number) != "failed":
            _acceptance_results[number] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for number in sorted(_acceptance_results):
        outcome = "PASS" if _acceptance_results[number] == "passed" else "FAIL"
        title = CRITERION_TITLES.get(number, "")
        terminalreporter.write_line(f"  criterion {number:2d} ({title}): {outcome}")
