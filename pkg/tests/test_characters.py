import json
from fractions import Fraction

import pytest

from qbernoulli.characters import (
    CharacterError,
    beta_chi,
    character_by_name,
    enumerate_characters,
    validate,
)
from qbernoulli.cyclo import CycloElem, cyclo_as_ratfun, euler_phi
from qbernoulli.exactalg import RatFun
from qbernoulli.qbern import BetaParams, beta, q_int


def test_validate_trivial():
    chi = validate(1, 1, {0: 0})
    assert chi.values == (0,)


def test_validate_mod4():
    chi = validate(4, 2, {1: 0, 3: 1, 0: None, 2: None})
    assert chi(3) == 1 and chi(2) is None


def test_validate_zero_set_violation():
    with pytest.raises(CharacterError, match="a=2"):
        validate(4, 1, {1: 0, 3: 0, 2: 0, 0: None})


def test_validate_not_multiplicative():
    with pytest.raises(CharacterError, match="multiplicative"):
        validate(5, 4, {0: None, 1: 0, 2: 1, 3: 1, 4: 2})


def test_validate_chi1():
    with pytest.raises(CharacterError, match="chi\\(1\\)"):
        validate(3, 2, {0: None, 1: 1, 2: 0})


def test_counts_and_examples():
    assert len(enumerate_characters(1)) == 1
    c3 = enumerate_characters(3)
    assert len(c3) == 2
    assert c3[1].order == 2 and c3[1](2) == 1  # zeta_2^1 = -1
    c5 = enumerate_characters(5)
    assert len(c5) == 4
    quartic = [c for c in c5 if c.order == 4]
    assert quartic and all(c(2) in (1, 3) for c in quartic)


@pytest.mark.parametrize("d", range(1, 13))
def test_enumeration_multiplicativity_orthogonality(d):
    chars = enumerate_characters(d)
    assert len(chars) == euler_phi(d)
    assert len({c.values for c in chars}) == len(chars)
    assert chars[0].is_principal()
    for chi in chars:
        for a in range(d):
            for b in range(d):
                x, y, z = chi(a), chi(b), chi(a * b)
                if x is None or y is None:
                    assert z is None
                else:
                    assert (x + y - z) % chi.order == 0
        total = CycloElem.constant(0, chi.order)
        for a in range(d):
            total = total + chi.value(a)
        expected = euler_phi(d) if chi.is_principal() else 0
        assert total == CycloElem.constant(expected, chi.order)


def test_names_and_json():
    chi = character_by_name("chi_5_1")
    assert chi.name == "chi_5_1"
    table = json.loads(chi.to_json())
    assert table["0"] is None and table["1"] == 0
    with pytest.raises(CharacterError):
        character_by_name("chi_5_9")


@pytest.mark.parametrize("m,h,alphas", [(0, 1, (1,)), (2, 2, (1,)), (1, 3, (1, 2)), (3, 2, (2, 1))])
def test_beta_chi_trivial_mod1(m, h, alphas):
    chi = enumerate_characters(1)[0]
    assert cyclo_as_ratfun(beta_chi(m, h, alphas, chi)) == beta(BetaParams(m, h, alphas))


def test_beta_chi_mod3_hand_expansion():
    # [3]^{-1} (q chi(1) b_0(1/3, q^3) + q^2 chi(2) b_0(2/3, q^3)), b_0 = 1/[1 : q^3] = 1
    chi = enumerate_characters(3)[1]
    q = RatFun.q()
    expected = (q - q * q) / q_int(3)
    assert cyclo_as_ratfun(beta_chi(0, 1, (1,), chi)) == expected


def test_beta_chi_mod3_m1_hand_expansion():
    chi = enumerate_characters(3)[1]
    q = RatFun.q()
    b1 = beta(BetaParams(1, 1, (1,), Fraction(1, 3), 3))
    b2 = beta(BetaParams(1, 1, (1,), Fraction(2, 3), 3))
    expected = q * b1 - q ** 2 * b2
    assert cyclo_as_ratfun(beta_chi(1, 1, (1,), chi)) == expected


def test_principal_mod_d_drops_non_units():
    # principal character mod 2 keeps only i = 1; [2]^{m-r} = 1 for m = r = 1
    chi = enumerate_characters(2)[0]
    q = RatFun.q()
    expected = q * beta(BetaParams(1, 1, (1,), Fraction(1, 2), 2))
    assert cyclo_as_ratfun(beta_chi(1, 1, (1,), chi)) == expected
