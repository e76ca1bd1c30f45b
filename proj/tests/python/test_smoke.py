import math

import pytest

import hyperspace as hs


def test_segments_example():
    a = hs.CompactSet.segment([0, 0], [2, 0])
    b = hs.CompactSet.segment([0, 1], [1, 1])
    assert hs.directed_distance(a, b).value == pytest.approx(math.sqrt(2), abs=1e-9)
    assert hs.directed_distance(b, a).value == pytest.approx(1.0, abs=1e-9)
    assert hs.hausdorff(a, b).value == pytest.approx(math.sqrt(2), abs=1e-9)


def test_identical_sets():
    s = hs.CompactSet.box_boundary([1, 1], [4, 3])
    assert hs.hausdorff(s, s).value == 0.0


def test_nested_box_closed_form():
    inner = hs.AxisBox([0, 0], [1, 1])
    outer = hs.AxisBox([-1, -2], [1, 1])
    assert hs.nested_box_hausdorff(inner, outer) == pytest.approx(math.sqrt(5))
    with pytest.raises(hs.GeometryError):
        hs.nested_box_hausdorff(outer, inner)


def test_json_round_trip():
    s = hs.CompactSet.union_of([hs.CompactSet.points([[0.1, 1 / 3]]),
                                hs.CompactSet.box([2, 2], [1, 1])])
    assert hs.CompactSet.from_json(s.to_json()) == s
    with pytest.raises(hs.FormatError):
        hs.CompactSet.from_json('{"dim": 2, "set": {"type": "blob"}}')


def test_point_to_box_path():
    p = hs.point_to_box_path([0, 1], [-5, -2], [4, 3])
    f = p(0.25)
    assert f == hs.CompactSet.box([-1.25, 0.25], [1, 1.5])
    assert p.lipschitz == pytest.approx(5 * math.sqrt(2))
    assert hs.path_modulus_failures(p, 21) == 0


def test_connect_endpoints():
    a = hs.CompactSet.points([[0, 0]])
    b = hs.CompactSet.segment([3, 3], [4, 1])
    p = hs.connect(a, b)
    assert hs.hausdorff(p(0.0), a).value <= 1e-9
    assert hs.hausdorff(p(1.0), b).value <= 1e-9
    assert hs.path_modulus_failures(p, 11) == 0


def test_contraction():
    h = hs.contraction_gap([0, 0], [3, 4], [-10, -10], [10, 10], 0.5)
    assert h <= 0.5 * 5 + 1e-9
    with pytest.raises(hs.GeometryError):
        hs.contraction_gap([0, 0], [30, 4], [-10, -10], [10, 10], 0.5)
