from fractions import Fraction as Fr

import pytest

from mldelab import characters as ch
from mldelab.mlde import flat_indicial_roots
from mldelab.series import Q


def test_minimal_character_weights():
    assert set(ch.MINIMAL_WEIGHTS) == {Fr(0), Fr(-1, 20), Fr(3, 4), Fr(1, 5)}
    with pytest.raises(ch.UnknownWeight):
        ch.minimal_character(Q(1, 2), 10)


def test_minimal_character_fixtures():
    mc = ch.minimal_character(Q(-1, 20), 10).series
    e0 = mc.leading()[0]
    assert e0 == Q(-1, 40)                      # h - c/24
    assert [mc.coefficient(e0 + k) for k in range(5)] == [1, 1, 1, 2, 3]
    vac = ch.minimal_character(0, 10).series
    assert vac.leading() == (Q(1, 40), 1)
    assert vac.coefficient(Q(1, 40) + 1) == 0   # no weight-1 state


def test_minimal_characters_count_states():
    for h in ch.MINIMAL_WEIGHTS:
        f = ch.minimal_character(h, 50).series
        e0 = f.leading()[0]
        for k in range(50):
            c = f.coefficient(e0 + k)
            assert c.denominator == 1 and c >= 0


def test_lattice_theta_fixtures():
    th = ch.lattice_theta(ch.lattice([[2]]), 6)
    assert [th.coefficient(k) for k in range(6)] == [1, 2, 0, 0, 2, 0]
    th6 = ch.lattice_theta(ch.lattice([[6]], [Q(1, 6)]), 3)
    assert th6.leading() == (Q(1, 12), 1)
    # diagonal rank-3 form is the cube of the rank-1 theta
    cube = ch.lattice_theta(ch.lattice([[2], ], None), 8)
    cube = cube * cube * cube
    th3 = ch.lattice_theta(ch.lattice([[2, 0, 0], [0, 2, 0], [0, 0, 2]]), 6)
    t = min(cube.truncation, th3.truncation, 6)
    assert (cube.truncate(t) - th3.truncate(t)).is_zero_to_truncation()


def test_not_positive_definite():
    with pytest.raises(ch.NotPositiveDefinite):
        ch.lattice_theta(ch.lattice([[0]]), 3)
    with pytest.raises(ch.NotPositiveDefinite):
        ch.lattice_theta(ch.lattice([[2, 3], [3, 2]]), 3)


def test_lattice_voa_character_exponents():
    chi0 = ch.lattice_voa_character(ch.lattice([[6]]), 8)
    assert chi0.leading()[0] == Q(-1, 24)
    chi3 = ch.lattice_voa_character(ch.lattice([[6]], [Q(1, 2)]), 8)
    assert chi3.leading()[0] == Q(3, 4) - Q(1, 24)


def test_assemble_fusion_pairing():
    assert ch.FUSION_WITH_3_4 == {
        Fr(0): Fr(3, 4), Fr(3, 4): Fr(0),
        Fr(-1, 20): Fr(1, 5), Fr(1, 5): Fr(-1, 20)}
    with pytest.raises(ch.UnknownWeight):
        ch.assemble_L_character(None, None, Q(1, 3))


def test_deligne_table_invariants():
    table = ch.deligne_table()
    assert [d.name for d in table] == [
        "A1", "A2", "G2", "D4", "F4", "E6", "E7", "E8",
        "formal24", "formal3/2"]
    by_name = {d.name: d for d in table}
    assert by_name["A2"].s == Q(2, 5)
    assert by_name["E8"].s == Q(32, 5)
    assert by_name["formal24"].s == 6
    assert by_name["formal3/2"].s == Q(-6, 5)
    dims = {"A1": 3, "A2": 8, "G2": 14, "D4": 28, "F4": 52,
            "E6": 78, "E7": 133, "E8": 248}
    for name, dim in dims.items():
        d = by_name[name]
        assert d.dim_g == dim
        assert d.central_charge_W == d.s
        # exponents sit among the indicial roots
        assert set(d.ramond_exponents) <= set(flat_indicial_roots(d.s))


def test_exponent_tables():
    by_name = {d.name: d for d in ch.deligne_table()}
    expect = {
        "A2": ((-1, 15), (1, 15), (4, 15), (11, 15)),
        "G2": ((-1, 10), (1, 10), (3, 10), (7, 10)),
        "D4": ((-3, 20), (3, 20), (7, 20), (13, 20)),
        "F4": ((-1, 5), (1, 5), (2, 5), (3, 5)),
        "E6": ((-7, 30), (7, 30), (13, 30), (17, 30)),
        "E7": ((-11, 40), (11, 40), (19, 40), (21, 40)),
        "E8": ((-19, 60), (29, 60)),
    }
    for name, exps in expect.items():
        assert by_name[name].ramond_exponents == tuple(Fr(*e) for e in exps)


def test_construction_unavailable_for_non_lattice_cases():
    for name in ("G2", "F4"):
        with pytest.raises(ch.CharacterConstructionUnavailable):
            ch.ramond_character_basis(name, 5)


def test_verify_all_cases(character_reports):
    for name, rep in character_reports.items():
        assert rep["status"] == "verified", (name, rep)


def test_a2_small_prefixes():
    basis = ch.ramond_character_basis("A2", 6)
    by_exp = {e: chi for e, chi in basis}
    chi = by_exp[Q(-1, 15)]
    assert [chi.coefficient(Q(-1, 15) + k) for k in range(5)] == [1, 4, 8, 20, 37]
