import pytest

from g2u_tradeoff.geometry import geometry_from_params
from g2u_tradeoff.params import builtin_config


@pytest.fixture(scope="session")
def nominal():
    # gamma0 = 1e9
    return builtin_config("nominal")


@pytest.fixture(scope="session")
def reference():
    # gamma0 = 1e6
    return builtin_config("reference")


@pytest.fixture(scope="session")
def geom(nominal):
    return geometry_from_params(nominal)


_ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE] = []


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line for the acceptance summary."""

    def _report(label: str, passed: bool, detail: str) -> None:
        line = f"{'PASS' if passed else 'FAIL'}  {label}: {detail}"
        print(line)
        request.config.stash[_ACCEPTANCE].append(line)

    return _report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split("[", 1)[1].split("]", 1)[0])):
            terminalreporter.write_line(line)


def pytest_collection_modifyitems(session, config, items):
    # validators run before the code they validate
    items.sort(key=lambda item: item.path.name != "test_oracle.py")
