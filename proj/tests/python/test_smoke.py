import json

import profin


def test_catalog_and_isomorphism():
    assert profin.group_order("S3") == 6
    assert profin.are_isomorphic("D4", "D4")
    assert not profin.are_isomorphic("C8", "D4")
    g = json.loads(profin.group_json("V4"))
    assert g["order"] == 4
    assert len(g["table"]) == 4


def test_duality():
    assert profin.dual_factors([2, 4]) == [2, 4]
    ann = profin.annihilator_exps([4], [[2]])
    assert ann == [[0], [2]]
    d, u, v = profin.smith_normal_form([[2, 0], [0, 3]])
    assert d == [[1, 0], [0, 6]]


def test_reconstruct():
    ok, b_factors = profin.reconstruct("S3", [2], [1])
    assert ok
    assert b_factors == [3]


def test_rf_map_and_separation():
    assert profin.rf_map_verdict(True, True, True, False, False, True) == (
        True,
        True,
    )
    assert profin.rf_map_verdict(True, True, False, False, False, True) == (
        False,
        False,
    )
    sc = profin.separating_character(2, [[0, 1]])
    assert sc["m"] == 1
    assert (sc["num"], sc["den"]) == (1, 2)


def test_towers_and_orbits():
    assert profin.lamp_level_orders(2, 3) == (24, 8)
    orbit_size, i_psi = profin.heisenberg_orbit("4", [0], [2])
    assert orbit_size == 2
    assert i_psi == [0, 2]


def test_low_index():
    assert profin.low_index_counts("a,b;abAB", 6) == [1, 3, 4, 7, 6, 12]


def test_abelianization():
    assert profin.abelianization_factors("Q8") == [2, 2]
