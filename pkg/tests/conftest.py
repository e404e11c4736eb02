from __future__ import annotations

import pytest

from latgap import boolean_cube, chain, lattice_from_covers, product


@pytest.fixture
def c2():
    return chain(2)


@pytest.fixture
def c3():
    return chain(3)


@pytest.fixture
def c4():
    return chain(4)


@pytest.fixture
def square():
    return boolean_cube(2)


@pytest.fixture
def rect23():
    return product(chain(2), chain(3))


@pytest.fixture
def named_square():
    return lattice_from_covers(("0", "x", "y", "1"),
                               (("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")))
