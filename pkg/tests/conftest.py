import pytest

from spiralchains.genlab.corpus import corpus_entry

_CRITERIA: dict[int, str] = {}


@pytest.fixture(scope="session")
def corpus_graphs():
    return {name: corpus_entry(name).graph()
            for name in ("k4", "octahedron", "icosahedron", "errera", "kittell")}


@pytest.fixture
def k4(corpus_graphs):
    return corpus_graphs["k4"]


@pytest.fixture
def criterion():
    """Record one verdict line per acceptance criterion."""
    def record(k: int, ok: bool, detail: str):
        line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} - {detail}"
        _CRITERIA[k] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[k])
