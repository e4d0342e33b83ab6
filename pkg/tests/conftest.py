import itertools

from quatswitch.quat2 import Mat2
from quatswitch.switch import fe_residual, is_matching


def invertible_pairs(field):
    mats = [Mat2(*e) for e in itertools.product(field.elements(), repeat=4)]
    gl = [m for m in mats if m.is_invertible()]
    one = Mat2.identity(field)
    return [(a, b) for a in gl if (a - one).is_invertible() for b in gl]


def first_matching_solution(field):
    for a, b in invertible_pairs(field):
        if a * b != b * a and is_matching(a, b) and fe_residual(a, b).is_solution:
            return a, b
    raise AssertionError("no matching solution found")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    passed = call.excinfo is None
    results = item.config._criteria
    prev = results.get(number, (title, True))
    results[number] = (title, prev[1] and passed)


def pytest_terminal_summary(terminalreporter, config):
    results = config._criteria
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, passed = results[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {number}: {title}")
