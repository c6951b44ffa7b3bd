from pathlib import Path

import pytest

from proofgrade import kernels, validate_problem

FIXTURES = Path(__file__).parent / "fixtures"

SAMPLE_RAW = {
    "blocks": ["1", "2", "3", "4", "5", "6", "7"],
    "solution_nodes": ["1", "2", "3", "4", "5", "6"],
    "edges": [["1", "2"], ["2", "3"], ["2", "4"], ["4", "6"], ["3", "5"], ["5", "6"]],
}


@pytest.fixture
def sample():
    return validate_problem(SAMPLE_RAW)


@pytest.fixture
def sample_path():
    return FIXTURES / "sample_problem.json"


@pytest.fixture
def sample_submissions_path():
    return FIXTURES / "sample_submissions.jsonl"


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    previous = kernels.backend()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


@pytest.fixture(autouse=True)
def _restore_backend():
    previous = kernels.backend()
    yield
    kernels.set_backend(previous)



ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
