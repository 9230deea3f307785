import pytest


def fib_by_recursion(n):
    """Reference F_n: step the recursion forward, or backward for n < 0."""
    a, b = 0, 1  # F_0, F_1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a  # (F_k, F_{k+1}) -> (F_{k-1}, F_k)
    return a


def lucas_by_recursion(n):
    a, b = 2, 1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a
    return a


@pytest.fixture
def fib_ref():
    return fib_by_recursion


@pytest.fixture
def lucas_ref():
    return lucas_by_recursion


ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion under the test's docstring label."""
    label = request.function.__doc__.strip().splitlines()[0]
    ACCEPTANCE_RESULTS[label] = "FAIL"


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    doc = getattr(item.function, "__doc__", None)
    if report.when == "call" and doc and "criterion" in item.fixturenames:
        ACCEPTANCE_RESULTS[doc.strip().splitlines()[0]] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(ACCEPTANCE_RESULTS.items()):
        terminalreporter.write_line(f"{status}  {label}")
