import numpy as np
import pytest

import latshell as ls


@pytest.fixture(scope="session")
def b3():
    return ls.boolean_lattice(3)


@pytest.fixture(scope="session")
def n5():
    return ls.pentagon()


@pytest.fixture(scope="session")
def fig1():
    return ls.fig1_lattice()


@pytest.fixture(scope="session")
def pi4():
    return ls.partition_lattice(4)
