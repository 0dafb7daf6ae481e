from fractions import Fraction as Fr

import pytest

from mldelab.classify import (CASES, QUASIMODULAR_VALUES, classify_all,
                              enumerate_case, filter_candidates,
                              n1_polynomial_fixture, n2_polynomial_fixture,
                              strictly_modular_candidates)


def _fr(*nums):
    return {Fr(n) if isinstance(n, int) else Fr(*n) for n in nums}


#: the printed raw divisor-enumeration set for case 1 (42 values)
RAW_CASE_1 = _fr(
    (-2838, 5), (-1398, 5), (-918, 5), (-678, 5), (-534, 5), (-438, 5),
    (-318, 5), (-278, 5), (-246, 5), (-198, 5), -30, (-138, 5), (-118, 5),
    (-102, 5), (-78, 5), (-54, 5), (-48, 5), (-38, 5), -6, (-22, 5),
    (-18, 5), (-6, 5), (-3, 5), (2, 5), (6, 5), 2, (12, 5), (18, 5),
    (22, 5), (24, 5), (26, 5), (27, 5), 6, (32, 5), (33, 5), (34, 5),
    (36, 5), (37, 5), (38, 5), (39, 5), 8, (41, 5))

#: the printed raw set for case 4 (18 values)
RAW_CASE_4 = _fr(
    (-17, 5), (-16, 5), -3, (-14, 5), (-13, 5), (-12, 5), (-9, 5),
    (-8, 5), (-6, 5), (-3, 5), 0, (2, 5), (12, 5), (18, 5), (27, 5),
    (42, 5), (72, 5), (162, 5))

#: filtered sets at the per-case depths
FINAL_CASE_1 = _fr(
    (-318, 5), (-198, 5), (-138, 5), (-78, 5), (-48, 5), (-38, 5),
    (-18, 5), (-6, 5), (-3, 5), (2, 5), (6, 5), (12, 5), (18, 5),
    (22, 5), (27, 5), 6, (32, 5))
FINAL_CASE_2 = _fr((-3, 5), (6, 5), (42, 5))
FINAL_CASE_3 = _fr((-66, 5), (-18, 5), (-8, 5), (-3, 5), (6, 5))
FINAL_CASE_4 = _fr((-8, 5), (-6, 5), (-3, 5), (2, 5), (12, 5), (42, 5))

#: the 23-element combined list
FINAL_ALL = FINAL_CASE_1 | {Fr(42, 5), Fr(54, 5), Fr(18), Fr(-66, 5),
                            Fr(-6), Fr(-8, 5)}


def test_raw_sets_exact():
    assert {s for s, _ in enumerate_case(CASES[1])} == RAW_CASE_1
    assert {s for s, _ in enumerate_case(CASES[4])} == RAW_CASE_4


def test_case_finals():
    assert set(filter_candidates(CASES[1], depth=4).final) == FINAL_CASE_1
    assert set(filter_candidates(CASES[2], depth=32).final) == FINAL_CASE_2
    assert set(filter_candidates(CASES[3], depth=23).final) == FINAL_CASE_3
    assert set(filter_candidates(CASES[4], depth=3).final) == FINAL_CASE_4


def test_classify_all_23():
    final = classify_all()
    assert set(final) == FINAL_ALL
    assert len(final) == 23


def test_strictly_modular_17():
    vals = strictly_modular_candidates()
    assert len(vals) == 17
    assert set(vals) == FINAL_ALL - set(QUASIMODULAR_VALUES)


def test_excluded_linear_roots():
    assert [CASES[c].excluded_linear_root for c in (1, 2, 3, 4)] == \
        [Fr(54, 5), Fr(18), Fr(-6), Fr(-66, 5)]


def test_n1_polynomial_vanishes_on_candidates():
    for cid in (1, 2, 3, 4):
        for s, a1 in enumerate_case(CASES[cid]):
            assert n1_polynomial_fixture(cid, s, a1) == 0


def test_n2_polynomial_vanishes_with_recursion():
    from mldelab.mlde import build_flat, frobenius_solve, Resonance
    for cid in (1, 4):
        case = CASES[cid]
        for s, a1 in enumerate_case(case)[:8]:
            try:
                f = frobenius_solve(build_flat(s, 4), case.root_of_s(s), 2)
            except Resonance:
                continue
            alpha = case.root_of_s(s)
            a2 = f.coefficient(alpha + 2)
            assert n2_polynomial_fixture(cid, s, a1, a2) == 0


def test_quasimodular_values():
    assert set(QUASIMODULAR_VALUES) == _fr(
        (-318, 5), (-198, 5), (-138, 5), (-78, 5), (-18, 5), (42, 5))
