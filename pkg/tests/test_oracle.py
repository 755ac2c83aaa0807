import pytest
from hypothesis import given

from pbindex import PartialBijection, WindowTooSmall, compose, identity, shift_map, structural_bound
from pbindex.oracle import (
    check_near,
    check_partial,
    materialize,
    oracle_compose_check,
    oracle_index,
)
from pbindex.near_bijection import NearBijection

from .conftest import near_bijections, partial_bijections

u = shift_map(1)
f_k2 = PartialBijection(2, [1], {0: 0})


def test_materialize_examples():
    assert materialize(u, 4).entries == (1, 2, 3, 4)
    assert materialize(PartialBijection(0, [2], {7: 2}), 9).entries == (0, 1, None, 3, 4, 5, 6, 2, 8)
    with pytest.raises(WindowTooSmall):
        materialize(identity(), 0)


def test_oracle_index_examples():
    assert oracle_index(materialize(u, 8), 1) == -1
    assert oracle_index(materialize(identity(), 8), 0) == 0
    assert oracle_index(materialize(f_k2, 12), 2) == -2


def test_oracle_compose_examples():
    assert oracle_compose_check(identity(), f_k2, 16)
    assert oracle_compose_check(u, u, 10)
    assert oracle_compose_check(PartialBijection(0, [0, 5]), u, 16)


def test_oracle_compose_detects_wrong_order():
    g, f = PartialBijection(0, (), {0: 1, 1: 0}), u
    assert compose(g, f) != compose(f, g)
    assert oracle_compose_check(g, f, 16) and oracle_compose_check(f, g, 16)


def test_structural_bound_formula():
    assert structural_bound(identity()) == 1
    assert structural_bound(f_k2) == 1 + 1 + 4
    assert NearBijection((3,), 1).structural_bound() == 1 + 4 + 2


def test_reports():
    rep = check_partial(f_k2)
    assert rep["ok"] and rep["window"] == structural_bound(f_k2)
    assert set(rep["checks"]) == {"6", "12"}
    rep = check_near(NearBijection((0, 0), 0), 8)
    assert rep["ok"] and rep["legacy_index"] == 0


@given(partial_bijections())
def test_index_stable_under_window_growth(f):
    W = structural_bound(f)
    assert oracle_index(materialize(f, W), f.shift) == oracle_index(materialize(f, 2 * W), f.shift) == -f.shift
    assert check_partial(f)["ok"]


@given(near_bijections())
def test_near_report_ok(f):
    assert check_near(f)["ok"]
