import pytest

import cdesc

SQUARE = [[0, 0], [1, 0], [1, 1], [0, 1]]
A1 = [[0, 0], [1, 0], [1, 2], [0, 1]]
A3 = [[0, 0], [3, 0], [0, 3], [1, 1]]
SEGMENT = [[0], [1], [2]]


def test_gale_vector():
    assert cdesc.gale_vector(SQUARE) == ["1", "-1", "1", "-1"]
    assert cdesc.gale_vector(A3) == ["3", "3", "3", "-9"]


def test_circuit_and_volumes():
    assert cdesc.is_circuit(SQUARE)
    assert not cdesc.is_circuit([[0, 0], [1, 0], [2, 0], [0, 1]])
    vols = cdesc.normalized_volumes(A3)
    assert vols == {"vol_z": "9", "index": "3", "vol_za": "3"}


def test_max_bound():
    assert cdesc.max_bound(SQUARE) == 2
    assert cdesc.max_bound(A3) == 2
    assert cdesc.max_bound(A1) == 3


def test_bound_report():
    rep = cdesc.bound(SQUARE, [[1, -2, 1, 0], [2, -3, 0, 1]])
    assert rep["bound_new"] == 1
    assert rep["bound_old"] == 3
    assert rep["sgnvar_lambda"] == 3


def test_count():
    rep = cdesc.count(SEGMENT, [[2, -3, 1]])
    assert rep["count"] == 2
    assert not rep["infinite"]
    rep = cdesc.count(SEGMENT, [[1, -2, 1]])
    assert rep["count"] == 2
    assert rep["roots"][0]["multiplicity"] == 2


def test_sharpen():
    rep = cdesc.sharpen(A1)
    assert rep["oracle_count"] == 3
    assert rep["bound"] == 3
    assert len(rep["cells"]) == 3
    assert all(cell["decorated"] for cell in rep["cells"])


def test_sharpen_with_explicit_ordering():
    rep = cdesc.sharpen(SQUARE, ordering=[[0], [1], [3], [2]])
    assert rep["oracle_count"] == 2
    assert len(rep["cells"]) == 2


def test_classify2d():
    assert cdesc.classify2d(SQUARE)["max_positive"] == 2
    assert cdesc.classify2d(SQUARE)["exceptional"]
    assert cdesc.classify2d(A1)["max_positive"] == 3


def test_region_csv():
    csv = cdesc.region_csv(grid=5)
    lines = csv.strip().splitlines()
    assert lines[0] == "b1,b2,class"
    assert len(lines) == 26


def test_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        cdesc.check([[0, 0], [1, 0], [2, 0], [3, 0]])  # not full-dimensional
    with pytest.raises(ValueError):
        cdesc.count(SEGMENT, [[1, 1]])  # wrong shape
