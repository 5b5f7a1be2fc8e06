import numpy as np
import pytest

from abcspec import AbcParams, N2Variant, build_wheel, materialize_abc, wheel_adjacency
from abcspec.errors import UnsupportedOrder
from abcspec.wheel import WheelKind, to_dot, to_json_dict


def test_wheel_m6():
    w = build_wheel(AbcParams(6, 2.0, 1.0, 3.0))
    assert w.kind is WheelKind.WHEEL
    assert w.vertex_count == 7 and len(w.edges) == 12
    assert w.vertex_weights[0] == -18
    np.testing.assert_array_equal(wheel_adjacency(w), materialize_abc(AbcParams(6, 2.0, 1.0, 3.0)))


def test_star():
    p = AbcParams(4, 0.0, 1.0, 3.0)
    w = build_wheel(p)
    assert w.kind is WheelKind.STAR and len(w.edges) == 4
    expected = np.array([[-12, 1, 1, 1, 1]] + [[1] + [3 if i == j else 0 for i in range(4)] for j in range(4)])
    np.testing.assert_array_equal(wheel_adjacency(w), expected)


def test_digon():
    p = AbcParams(2, 1.0, 1.0, 1.0, N2Variant.DOUBLED)
    w = build_wheel(p)
    assert w.kind is WheelKind.DIGON
    assert [e for e in w.edges if e[:2] == (1, 2)] == [(1, 2, 1.0), (1, 2, 1.0)]
    np.testing.assert_array_equal(wheel_adjacency(w), [[-2, 1, 1], [1, 1, 2], [1, 2, 1]])


def test_triangle():
    w = build_wheel(AbcParams(2, 1.0, 1.0, 1.0, N2Variant.TILDE))
    assert w.kind is WheelKind.TRIANGLE and len(w.edges) == 3
    np.testing.assert_array_equal(wheel_adjacency(w), [[-2, 1, 1], [1, 1, 1], [1, 1, 1]])


def test_order_one_rejected():
    with pytest.raises(UnsupportedOrder):
        build_wheel(AbcParams(1, 1.0))


@pytest.mark.parametrize("n", [3, 5, 8])
def test_dihedral_symmetry(n):
    m = wheel_adjacency(build_wheel(AbcParams(n, 0.7, -1.2, 0.4)))
    rot = [0] + [j % n + 1 for j in range(1, n + 1)]
    ref = [0] + [(n - j) % n + 1 for j in range(0, n)]
    for perm in (rot, ref):
        np.testing.assert_array_equal(m[np.ix_(perm, perm)], m)


def test_vertex_weights_sum_to_zero():
    for n in (2, 3, 7):
        assert sum(build_wheel(AbcParams(n, 1.0, 1.0, 0.25)).vertex_weights) == 0


def test_dot_export_parallel_edges():
    dot = to_dot(build_wheel(AbcParams(2, 1.5, 1.0, 1.0)))
    assert dot.count("1 -- 2") == 2
    assert dot.startswith("graph ")


def test_json_export():
    d = to_json_dict(build_wheel(AbcParams(6, 2.0, 1.0, 3.0)))
    assert d["kind"] == "wheel"
    assert len(d["vertices"]) == 7 and len(d["edges"]) == 12
    assert d["vertices"][0] == {"id": 0, "weight": -18.0}
