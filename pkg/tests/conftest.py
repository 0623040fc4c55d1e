import pytest

from fuzzylattice import BoundedFuzzyLattice, certify_lattice, direct_product, fixture, lattice_from_order

ACCEPTANCE_RESULTS = {}
# every frame that some test wrapped in a BoundedFuzzyLattice, in first-seen order
CONSTRUCTED_FRAMES = {}


def pytest_configure(config):
    init = BoundedFuzzyLattice.__init__

    def recording_init(self, *args, **kwargs):
        init(self, *args, **kwargs)
        CONSTRUCTED_FRAMES.setdefault(self.frame, None)

    BoundedFuzzyLattice.__init__ = recording_init


def pytest_collection_modifyitems(config, items):
    # acceptance checks run last so they can sweep the lattices built by the rest of the suite
    items.sort(key=lambda item: item.module.__name__.endswith("test_acceptance"))


@pytest.fixture(scope="session")
def x1():
    return certify_lattice(fixture("table1_x1"))


@pytest.fixture(scope="session")
def x2():
    return certify_lattice(fixture("table1_x2"))


@pytest.fixture(scope="session")
def min_product(x1, x2):
    return direct_product([x1, x2], "minimum")


@pytest.fixture(scope="session")
def luk_product(x1, x2):
    return direct_product([x1, x2], "lukasiewicz")


def make_m3():
    return lattice_from_order("0abc1", [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
                              grades={("0", "a"): 0.2, ("b", "1"): 0.7})


def make_n5():
    # 0 < a < b < 1, 0 < c < 1
    return lattice_from_order("0abc1", [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
                              grades={("a", "b"): 0.3, ("0", "1"): 0.9})


@pytest.fixture(scope="session")
def m3():
    return make_m3()


@pytest.fixture(scope="session")
def n5():
    return make_n5()


@pytest.fixture
def record():
    """Record one acceptance criterion's outcome for the end-of-run summary."""

    def _record(criterion, ok, detail=""):
        ACCEPTANCE_RESULTS[criterion] = (ok, detail)
        print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {k:>2}. {detail}")
