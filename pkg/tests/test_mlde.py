import random

import pytest

from mldelab import forms as F
from mldelab.mlde import (SHARP_FACTORIZATIONS, MLDEOperator, NoLogNeeded,
                          NotIndicialRoot, Resonance, alphas, build_custom,
                          build_flat, build_flat_weighted, build_sharp,
                          factored_apply, flat_indicial_roots,
                          frobenius_solve, frobenius_solve_log, indicial,
                          modular_wronskian, mu, serre_derivation)
from mldelab.series import LogSeries, PuiseuxSeries, Q


def test_mu_values():
    assert mu(Q(19, 5)) == Q(551, 3600)
    assert mu(Q(1, 5)) == Q(11, 3600)
    assert mu(0) == 0


def test_alphas_special_roots():
    # the cubic coefficient vanishes at its printed roots
    assert alphas(18)[2] == 0
    assert alphas(-6)[2] == 0
    assert alphas(Q(-6, 5))[1] == 0
    assert alphas(Q(-6, 5))[2] == 0


def test_indicial_roots_fixtures():
    assert set(flat_indicial_roots(Q(6, 5))) == {Q(-1, 10), Q(7, 10), Q(3, 10), Q(1, 10)}
    assert set(flat_indicial_roots(Q(-3, 5))) == {Q(31, 40), Q(9, 40), Q(1, 40), Q(-1, 40)}


def test_indicial_root_sum_is_one():
    for s in (Q(6, 5), Q(-3, 5), Q(32, 5), Q(-8, 5), Q(17, 3)):
        assert sum(flat_indicial_roots(s)) == 1
        rep = indicial(build_flat(s, 4))
        assert sorted(rep.roots) == sorted(flat_indicial_roots(s))


def test_frobenius_fixtures():
    f = frobenius_solve(build_flat(Q(6, 5), 5), Q(-1, 10), 3)
    assert [f.coefficient(Q(-1, 10) + k) for k in range(4)] == [1, 8, 23, 68]
    g = frobenius_solve(build_flat(Q(2, 5), 6), Q(-1, 15), 4)
    assert [g.coefficient(Q(-1, 15) + k) for k in range(5)] == [1, 4, 8, 20, 37]
    h = frobenius_solve(build_flat(Q(-3, 5), 6), Q(-1, 40), 4)
    assert [h.coefficient(Q(-1, 40) + k) for k in range(5)] == [1, 1, 1, 2, 3]


def test_frobenius_errors():
    op = build_flat(Q(6, 5), 6)
    with pytest.raises(NotIndicialRoot):
        frobenius_solve(op, Q(1, 2), 4)
    # s = -6 has roots 0 and 1 differing by an integer -> resonance at n = 1
    op6 = build_flat(-6, 6)
    with pytest.raises(Resonance):
        frobenius_solve(op6, 0, 4)


def test_log_solution_s6_plain_part():
    op = build_flat(6, 10)
    sol = frobenius_solve_log(op, Q(1, 2), 6)
    assert isinstance(sol, LogSeries)
    # gauge: coefficient of the upper index in the plain part is zero
    assert sol.plain.coefficient(Q(1, 2)) == 0
    got = [sol.plain.coefficient(Q(3, 2) + k) for k in range(3)]
    assert got == [Q(-2530, 81), Q(-191600, 693), Q(-8906965, 4788)]
    # a log solution is still a solution
    res = op.apply(sol)
    assert res.plain.truncate(5).is_zero_to_truncation()
    assert res.log_part.truncate(5).is_zero_to_truncation()


def test_no_log_needed():
    op = build_flat(Q(6, 5), 6)
    with pytest.raises(NoLogNeeded):
        frobenius_solve_log(op, Q(-1, 10), 4)


def test_apply_indicial_polynomial():
    op = build_flat(Q(6, 5), 6)
    f = PuiseuxSeries.q_power(Q(1, 3), 5)
    lead = op.apply(f).leading()
    assert lead[0] == Q(1, 3)


def test_weighted_equals_plain_at_k0():
    a = build_flat(Q(6, 5), 12)
    b = build_flat_weighted(Q(6, 5), 0, 12)
    for ca, cb in zip(a.coefficients, b.coefficients):
        t = min(ca.truncation, cb.truncation)
        assert (ca.truncate(t) - cb.truncate(t)).is_zero_to_truncation()


def test_weighted_annihilates_level5_solution():
    # weight-6/5 solution psi1(psi1^5 + 2 psi2^5)
    p1, p2 = F.psi1(30), F.psi2(30)
    f = p1 * (p1.pow(5) + p2.pow(5).scale(2))
    op = build_flat_weighted(Q(6, 5), Q(6, 5), 28)
    res = op.apply(f)
    assert res.truncate(24).is_zero_to_truncation()


def test_serre_derivation_basics():
    one = PuiseuxSeries.one(10)
    assert serre_derivation(one, 0).is_zero_to_truncation()
    # theta_k(eta^2k * f) = eta^2k * theta_{k-l}... spot check l = k
    f = PuiseuxSeries.make(0, [1, 3, 1, 4, 1, 5, 9, 2, 6])
    k = Q(3, 2)
    eta2k = F.eta(12).pow(2 * k)
    lhs = serre_derivation(eta2k * f, k)
    rhs = eta2k * serre_derivation(f, 0)
    t = min(lhs.truncation, rhs.truncation)
    assert (lhs.truncate(t) - rhs.truncate(t)).is_zero_to_truncation()


def test_third_order_auxiliary():
    # the auxiliary cubic operator annihilates its closed-form solution
    from mldelab.catalog import aux_third_order
    op = aux_third_order("-6/5", 34)
    p1, p2 = F.psi1(40), F.psi2(40)
    f = (p1.pow(10) - p1.pow(5) * p2.pow(5).scale(36) - p2.pow(10)) / F.eta(40).pow(4)
    res = op.apply(f)
    assert res.truncate(f.leading()[0] + 30).is_zero_to_truncation()


def test_modular_wronskian_degenerate_cases():
    f = PuiseuxSeries.make(0, [1, 2, 3, 4, 5, 6])
    g = PuiseuxSeries.make(0, [1, 1, 2, 3, 5, 8])
    assert (modular_wronskian([f]) - f).is_zero_to_truncation()
    w = modular_wronskian([f, f])
    assert w.is_zero_to_truncation()
    assert not modular_wronskian([f, g]).is_zero_to_truncation()


def test_factored_apply_matches_flat():
    rng = random.Random(20240824)
    for s in SHARP_FACTORIZATIONS:
        op = build_flat(s, 36)
        for _ in range(3):
            f = PuiseuxSeries.make(
                Q(rng.randint(-6, 6), rng.randint(1, 10)),
                [Q(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(33)])
            a, b = op.apply(f), factored_apply(s, f)
            t = min(a.truncation, b.truncation)
            assert t - f.base >= 30
            assert (a.truncate(t) - b.truncate(t)).is_zero_to_truncation()
    with pytest.raises(KeyError):
        factored_apply(Q(6, 5), PuiseuxSeries.one(5))


def test_build_custom_monic_requirement():
    ident = PuiseuxSeries.one(8)
    op = build_custom((PuiseuxSeries.zero(8), ident))
    assert op.order == 1


def test_sharp_operator():
    # the second-order family at mu(19/5) annihilates the E8-type solution
    op = build_sharp(mu(Q(19, 5)), 30)
    f = frobenius_solve(op, Q(-19, 60), 25)
    assert [f.coefficient(Q(-19, 60) + k) for k in range(3)] == [1, 190, 2831]
