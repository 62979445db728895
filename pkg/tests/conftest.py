import random
import sys

import pytest
from hypothesis import settings

from dihedral_homometry import DihedralSet, ZnSet

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def zn(n, *residues):
    return ZnSet.from_residues(n, residues)


def dset(n, text):
    return DihedralSet.parse(n, text)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
