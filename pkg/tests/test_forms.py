import pytest

from mldelab import forms as F
from mldelab.series import Q


def test_eisenstein_prefixes():
    e2 = F.eisenstein_e2(4)
    assert [e2.coefficient(k) for k in range(4)] == [1, -24, -72, -96]
    e4 = F.eisenstein_e4(4)
    assert [e4.coefficient(k) for k in range(3)] == [1, 240, 2160]
    e6 = F.eisenstein_e6(3)
    assert [e6.coefficient(k) for k in range(3)] == [1, -504, -16632]


def test_e8_is_e4_squared():
    e8 = F.eisenstein_e8(20)
    sq = F.eisenstein_e4(20) * F.eisenstein_e4(20)
    assert (e8.truncate(20) - sq.truncate(20)).is_zero_to_truncation()


def test_eta_and_quotients():
    eta = F.eta(6)
    assert eta.leading() == (Q(1, 24), 1)
    assert eta.coefficient(Q(1, 24) + 1) == -1
    # 1/eta has partition-number coefficients
    inv = F.eta(8).pow(-1)
    assert [inv.coefficient(-Q(1, 24) + k) for k in range(6)] == [1, 1, 2, 3, 5, 7]


def test_level2_forms():
    h2 = F.h2(5)
    assert [h2.coefficient(k) for k in range(4)] == [1, 24, 24, 96]
    d2 = F.delta2(5)
    assert d2.leading() == (Q(1, 2), 1)


def test_level3_and_4_forms():
    assert F.i3(4).coefficient(0) == 1
    assert F.delta3(4).leading()[0] == Q(1, 3)
    th = F.theta(5)
    assert [th.coefficient(k) for k in range(5)] == [1, 2, 0, 0, 2]
    assert F.delta4(4).leading()[0] == Q(1, 4)


def test_level5_forms_integrality():
    # the forms themselves carry an eta^(2/5) factor, so integrality is
    # only expected for their fifth powers
    for name in ("psi1", "psi2"):
        f = F.form(name, 30).pow(5)
        e0 = f.leading()[0]
        for k in range(25):
            c = f.coefficient(e0 + k)
            assert c.denominator == 1
    assert F.psi1(4).leading() == (0, 1)
    assert F.psi2(4).leading() == (Q(1, 5), 1)


def test_level15_forms():
    assert F.i15(3).coefficient(0) == 1
    assert F.delta15(3).leading()[0] == 1


def test_form_lookup():
    assert F.form("theta", 5).leading() == (0, 1)
    with pytest.raises(KeyError):
        F.form("nonesuch", 5)
    assert set(F.FORM_TABLE) == {"H2", "Delta2", "I3", "Delta3", "theta",
                                 "Delta4", "psi1", "psi2", "I15", "Delta15"}


def test_form_weights_consistent():
    # each catalogued form's q-expansion grid divides 24 * level bound
    for name, (builder, weight, level) in F.FORM_TABLE.items():
        f = builder(5)
        assert f.grid >= 1
        assert weight > 0
        assert level in (2, 3, 4, 5, 15)
