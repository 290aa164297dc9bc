import random
import time
from fractions import Fraction

import pytest

from pvlab import (
    BscParams,
    FamilySpec,
    bec_joint,
    bsc_joint,
    build_joint,
    generate_family,
    tie_report,
)

F = Fraction


def footnote_entries():
    # two-word length-2 code on the flip channel with p = 1/4, all 8 atoms
    # written out by hand
    return [
        ("00", "00", F(9, 32)),
        ("00", "01", F(3, 32)),
        ("00", "10", F(3, 32)),
        ("00", "11", F(1, 32)),
        ("11", "00", F(1, 32)),
        ("11", "01", F(3, 32)),
        ("11", "10", F(3, 32)),
        ("11", "11", F(9, 32)),
    ]


@pytest.fixture(scope="session")
def footnote_joint():
    return build_joint(footnote_entries())


@pytest.fixture(scope="session")
def noiseless3():
    return build_joint([("a", "a", F(1, 3)), ("b", "b", F(1, 3)), ("c", "c", F(1, 3))])


@pytest.fixture(scope="session")
def indep22():
    return build_joint(
        [("0", "u", F(1, 4)), ("0", "v", F(1, 4)), ("1", "u", F(1, 4)), ("1", "v", F(1, 4))]
    )


@pytest.fixture(scope="session")
def lopsided():
    # unique argmax in every column
    return build_joint(
        [
            ("a", "u", F(1, 2)),
            ("b", "u", F(1, 8)),
            ("a", "v", F(1, 8)),
            ("b", "v", F(1, 16)),
            ("c", "v", F(3, 16)),
        ]
    )


@pytest.fixture(scope="session")
def tie_mix():
    # one tied column, one clean column
    return build_joint(
        [("a", "u", F(1, 4)), ("b", "u", F(1, 4)), ("a", "v", F(3, 8)), ("b", "v", F(1, 8))]
    )


@pytest.fixture(scope="session")
def neartie():
    return build_joint([("a", "y", F(1001, 2000)), ("b", "y", F(999, 2000))])


@pytest.fixture(scope="session")
def all_fixture_joints(footnote_joint, noiseless3, indep22, lopsided, tie_mix, neartie):
    from pvlab import BlockCode

    return {
        "footnote": footnote_joint,
        "noiseless3": noiseless3,
        "indep22": indep22,
        "lopsided": lopsided,
        "tie_mix": tie_mix,
        "neartie": neartie,
        "bsc3": bsc_joint(BlockCode.from_strings(["000", "111"]), BscParams(F(1, 4))),
        "bec2": bec_joint(BlockCode.from_strings(["00", "11"]), F(1, 3)),
        "bec3": bec_joint(BlockCode.from_strings(["000", "111", "011"]), F(1, 2)),
    }


def make_random_joint(rng: random.Random, max_x: int = 4, max_y: int = 8):
    """Random exact joint: integer weights normalized by their total."""
    while True:
        nx = rng.randint(2, max_x)
        ny = rng.randint(1, max_y)
        weights = [[rng.choice([0, 0, 1, 2, 3, 5, 9]) for _ in range(ny)] for _ in range(nx)]
        total = sum(sum(row) for row in weights)
        if sum(1 for row in weights if sum(row) > 0) < 2:
            continue
        entries = []
        for xi in range(nx):
            for yi in range(ny):
                if weights[xi][yi]:
                    entries.append((f"x{xi}", f"y{yi}", F(weights[xi][yi], total)))
        return build_joint(entries)


CORPUS_P = (F(1, 10), F(1, 4), F(2, 5))


def corpus_specs(count: int = 500):
    """Deterministic (code, params) corpus: n <= 14, 2 <= M <= 8."""
    out = []
    for k in range(count):
        n = 2 + k % 13
        m = min(2 + k % 7, 1 << n)
        code = generate_family(FamilySpec("random", m=m, seed=1000 + k), n)
        out.append((code, BscParams(CORPUS_P[k % 3])))
    return out


@pytest.fixture(scope="session")
def corpus():
    return corpus_specs()


@pytest.fixture(scope="session")
def corpus_reports(corpus):
    """Tie reports for the whole corpus plus the wall time spent computing them."""
    start = time.perf_counter()
    reports = [tie_report(code, params) for code, params in corpus]
    elapsed = time.perf_counter() - start
    return reports, elapsed


# One line per acceptance criterion, echoed after the test summary so the
# verdicts stay visible without -s.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
