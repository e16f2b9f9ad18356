from fractions import Fraction

import pytest

from mincostflow import Network

pytest.register_assert_rewrite("tests.helpers")


@pytest.fixture
def f2_network():
    """Two vertices u=0, v=1; e0=(u,v) cap 8 cost 2; e1=(v,u) cap 6 cost 3."""
    return Network(2, [(0, 1, 8, 2), (1, 0, 6, 3)])


@pytest.fixture
def f2_flow():
    """The running example flow: 5 on e0, 4 on e1."""
    return [Fraction(5), Fraction(4)]
