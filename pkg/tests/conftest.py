from fractions import Fraction

from hypothesis import strategies as st

from cochoice import Gamble, GambleSet

rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 4))


def gambles(n):
    return st.lists(rationals, min_size=n, max_size=n).map(Gamble)


def gamble_sets(n, max_size=3):
    return st.lists(gambles(n), max_size=max_size).map(GambleSet)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
