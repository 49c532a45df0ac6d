from __future__ import annotations

import pytest

from resolvent.ttp import (TwistParams, UnsupportedCharacteristic, alpha, apply_pair, g_action,
                           k_complex, k_differential, nichols_twist, phi, phi_inverse, tau, tau_i,
                           tau_i_inverse, verify_identities, y_complex, y_differential)

P3 = TwistParams(3)
P5 = TwistParams(5)


def test_tau_on_unit_of_a():
    for r in range(3):
        assert tau(r, 0, P3) == {(0, r): 1}


def test_tau_examples():
    assert tau(1, 1, P3) == {(1, 1): 1, (2, 0): 2}
    assert tau(2, 1, P5) == {(1, 2): 1, (2, 1): 1, (3, 0): 3}


def test_odd_tau_uses_shifted_rising_factorial():
    # [2]^[1] / 2 = 1 over GF(3)
    assert tau_i(1, 1, 1, P3) == {(1, 1): 1, (2, 0): 1}


def test_tau_inverse_examples():
    assert tau_i_inverse(0, 2, 0, P3) == {(0, 2): 1}
    # x (x) y  ->  y (x) x - 1 (x) x^2, and -1 = 2 in GF(3)
    assert tau_i_inverse(1, 1, 1, P3) == {(1, 1): 1, (0, 2): 2}


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("i", [0, 1, 2, 3])
def test_tau_round_trips(p, i):
    P = TwistParams(p)
    fwd = lambda r, l: tau_i(i, r, l, P)
    back = lambda l, r: tau_i_inverse(i, l, r, P)
    for a in range(p):
        for b in range(p):
            assert apply_pair(apply_pair({(b, a): 1}, 0, fwd, p), 0, back, p) == {(b, a): 1}
            assert apply_pair(apply_pair({(a, b): 1}, 0, back, p), 0, fwd, p) == {(a, b): 1}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_phi_round_trips(p):
    P = TwistParams(p)
    for i in (0, 1):
        f = lambda l, r: phi(i, l, r, P)
        g = lambda l, r: phi_inverse(i, l, r, P)
        for a in range(p):
            for b in range(p):
                assert apply_pair(apply_pair({(a, b): 1}, 0, f, p), 0, g, p) == {(a, b): 1}


def test_phi_inverse_values():
    half = (5 + 1) // 2
    assert phi_inverse(1, 0, 1, P5) == {(0, 1): 1, (1, 0): -half % 5}
    assert phi_inverse(1, 0, 4, P5) == {(0, 4): 1, (1, 3): half}
    for l in range(5):
        for r in range(5):
            assert phi_inverse(2, l, r, P5) == {(l, r): 1}


def test_p2_rejected():
    with pytest.raises(UnsupportedCharacteristic):
        TwistParams(2)
    with pytest.raises(ValueError):
        TwistParams(3, 4)


def test_k_differential_cases():
    assert k_differential(2, 2, P3) == {(1, 2): {(0, 0): 1}, (2, 1): {(1, 1): 1}}
    assert k_differential(1, 1, P3) == {(0, 1): {(0,): 1}, (1, 0): {(1,): 2, (0,): 2}}
    assert k_differential(0, 1, P3) == {(0, 0): {(1,): 1}}
    # i odd, j even: -(y^(p-1) + x y^(p-2)/2)
    assert k_differential(1, 2, P5) == {(0, 2): {(0,): 1}, (1, 1): {(1,) * 4: 4, (0, 1, 1, 1): 2}}


def test_alpha_values():
    assert alpha(P3) == {(0,): 2, (1,): 2}
    tw = nichols_twist(5)
    # (x + y) alpha = -y^4 - x y^3 / 2
    assert tw.mul({(0,): 1, (1,): 1}, alpha(P5)) == {(1,) * 4: 4, (0, 1, 1, 1): 2}


def test_g_action_cases():
    assert g_action(2, (1, 2), P3) == {(1, 2): {(): 1}}
    assert g_action(1, (2, 1), P3) == {(2, 1): {(): 1}, (3, 0): {(): 1}}
    assert g_action(1, (2, 2), P3) == {(2, 2): {(): 1}, (3, 1): alpha(P3)}
    assert g_action(-1, (0, 1), P3) == {(0, 1): {(): 1}, (1, 0): {(): 2}}


def test_g_power_q_is_identity():
    tw = nichols_twist(3)
    for n in range(9):
        for gen in tw.generators(n):
            elem = {gen: {(): 1}}
            for _ in range(3):
                elem = tw.act_element(1, elem)
            assert elem == {gen: {(): 1}}


def test_y_differential_example():
    d = y_differential(0, 1, 1, TwistParams(3, 3))
    assert d == {(0, 0, 1): {(2,): 1}, (0, 1, 0): {(0,): 2}, (1, 0, 0): {(): 1, (0,): 1}}


def test_norm_element_augments_to_zero():
    d = y_differential(1, 0, 2, TwistParams(3, 9))
    coef = d[(1, 0, 1)]
    assert coef.get((), 0) == 0
    # d_K(phi_10) = x phi_00 plus the norm term
    assert set(d) == {(0, 0, 2), (1, 0, 1)}
    assert d[(0, 0, 2)] == {(1,): 1}


def test_d_squared_zero_on_k_and_y():
    assert k_complex(7).d_squared_defects(8) == []
    assert y_complex(5, 5).d_squared_defects(8) == []


@pytest.mark.parametrize("p,q", [(3, 3), (5, 5), (3, 9)])
def test_verify_identities_all_pass(p, q):
    checks = verify_identities(TwistParams(p, q))
    families = {c.family for c in checks}
    assert {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"} <= families
    assert [c.name for c in checks if not c.passed] == []
