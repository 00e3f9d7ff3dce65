import itertools
import os
import random
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from lyalg import GF, QQ, from_lie, zero_algebra  # noqa: E402
from lyalg.algebra import LieYamagutiAlgebra  # noqa: E402
from lyalg.fields import PrimeField  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "src", "lyalg", "fixtures")


def fixture_path(name):
    return os.path.normpath(os.path.join(FIXTURES, name))


def lie_table(F, n, entries):
    """Antisymmetric bracket from {(i, j): [coeffs of e_k]} with i < j."""
    c = np.zeros((n, n, n), dtype=np.int64)
    for (i, j), vals in entries.items():
        c[i, j] = vals
        c[j, i] = [-v for v in vals]
    return F.array(c)


def nonabelian2(F, mode="iterated"):
    """[e1, e2] = e1."""
    return from_lie(F, lie_table(F, 2, {(0, 1): [1, 0]}), mode)


def sl2(F, mode="iterated"):
    """Basis h, e, f with [h, e] = 2e, [h, f] = -2f, [e, f] = h."""
    return from_lie(F, lie_table(F, 3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]}), mode)


def heisenberg(F, mode="iterated"):
    """[e1, e2] = e3."""
    return from_lie(F, lie_table(F, 3, {(0, 1): [0, 0, 1]}), mode)


def random_antisym(F, rng, n):
    c = np.zeros((n, n, n), dtype=object if F.char == 0 else np.int64)
    for i, j in itertools.combinations(range(n), 2):
        vals = [F.random_element(rng) for _ in range(n)]
        c[i, j] = vals
        c[j, i] = [-v for v in vals]
    return F.normalize(c)


def random_lie(F, rng, n, mode="iterated", tries=400):
    """A random Lie algebra structure of dimension n (rejection sampling on Jacobi)."""
    from lyalg.algebra import jacobi_residual

    for _ in range(tries):
        c = random_antisym(F, rng, n)
        if F.is_zero(jacobi_residual(F, c)):
            return from_lie(F, c, mode)
    return from_lie(F, F.zeros((n, n, n)), mode)


def all_maps(F: PrimeField, rows, cols):
    for vals in itertools.product(range(F.p), repeat=rows * cols):
        yield F.array(np.array(vals, dtype=np.int64).reshape(rows, cols))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
