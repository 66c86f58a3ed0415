import pytest

from g2u_tradeoff.errors import NumericalError
from g2u_tradeoff.points import check_lemma1, e2_grid


def test_lemma1_tolerance():
    check_lemma1(6e8 * (1 + 9e-7), 6e8)
    with pytest.raises(NumericalError):
        check_lemma1(6e8 * (1 + 2e-6), 6e8)


def test_e2_grid_endpoints_exact():
    lo, hi = 8165.29240137792, 36280.932591087454
    g = e2_grid(lo, hi, 64)
    assert len(g) == 64
    assert g[0] == lo and g[-1] == hi
    assert all(b > a for a, b in zip(g, g[1:]))
    # geometric spacing
    assert g[2] / g[1] == pytest.approx(g[1] / g[0], rel=1e-12)
    with pytest.raises(ValueError):
        e2_grid(lo, hi, 1)
