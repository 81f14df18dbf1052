from fractions import Fraction

from hypothesis import strategies as st

from formal_quintic.ring.series import QSeries

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def series_st(precision=6, unit=False, zero_constant=False):
    def build(cs):
        cs = list(cs)
        if unit and cs[0] == 0:
            cs[0] = Fraction(1)
        if zero_constant:
            cs[0] = Fraction(0)
        return QSeries(cs, precision)

    return st.lists(small, min_size=precision + 1, max_size=precision + 1).map(build)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
