import pytest

import pyuso

I2 = [["1", "0"], ["0", "1"]]
PNZ = [["1", "2"], ["0", "1"]]


def test_uniform_and_checks():
    phi = pyuso.uniform(3)
    assert phi.n == 3
    assert pyuso.is_uso(phi)
    profile = pyuso.classify(phi)
    assert all(profile.values())


def test_reverse_and_restrict():
    phi = pyuso.uniform(2)
    rev = pyuso.reverse(phi, 0b11)
    assert rev.out(0b11) == 0b11
    face = pyuso.restrict(pyuso.uniform(3), 0, 0b011)
    assert face == pyuso.uniform(2)


def test_induce_solve_walk():
    phi = pyuso.induce(I2, ["-1", "-1"])
    assert phi == pyuso.uniform(2)
    sol = pyuso.solve(I2, ["-1", "-1"])
    assert sol["basis"] == 0b11
    assert sol["z"] == ["1", "1"]
    path = pyuso.walk(I2, ["-1", "-1"], 0)
    assert path[0] == 0 and path[-1] == 0b11


def test_degenerate_raises():
    with pytest.raises(pyuso.DegenerateError):
        pyuso.induce(I2, ["0", "1"])
    with pytest.raises(pyuso.NotPMatrixError):
        pyuso.solve([["0", "1"], ["1", "0"]], ["-1", "-1"])


def test_matrix_classes():
    assert pyuso.is_k_matrix(I2)
    assert pyuso.is_p_matrix(PNZ) and not pyuso.is_z_matrix(PNZ)


def test_constructions():
    phi = pyuso.monotone_uso(2, [True, True, True, True])
    assert phi == pyuso.uniform(3)
    anti = pyuso.antichain_uso(2, [0b01, 0b10])
    assert pyuso.is_locally_uniform(anti)


def test_census_and_counts():
    rep = pyuso.census(2)
    assert rep["usos"] == 12 and rep["locally_uniform"] == 8
    fixed = pyuso.count_fixed_matrix_usos(I2, 200, 3, exact_n2=True)
    assert fixed["exact"] == 4
    ks = pyuso.sample_k_usos(2, 100, 5)
    assert len(ks["distinct"]) == 2 == pyuso.k_family_lower_bound(2)


def test_witness():
    assert pyuso.local_uniformity_witness(I2) is None
    w = pyuso.local_uniformity_witness(PNZ)
    assert (w["i"], w["j"]) == (1, 2)
    phi = pyuso.induce(PNZ, w["q"])
    assert not pyuso.is_locally_uniform(phi)


def test_json_round_trip():
    phi = pyuso.uniform(3)
    assert pyuso.Orientation.from_json(phi.to_json()) == phi
    assert "digraph" in phi.to_dot()
