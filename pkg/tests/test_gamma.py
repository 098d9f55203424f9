from math import comb

import pytest

import oracles
from semiweight.errors import ConstructionOutOfRange, NotGammaHyperelliptic
from semiweight.gamma import (
    certify,
    check_bounds,
    detect_gammas,
    make_maximizer,
    make_minimizer,
    make_mult4_member,
    mult4_spectrum,
)
from semiweight.gapset import from_generators, gaps, is_symmetric
from semiweight.tree import iter_semigroups
from semiweight.weights import k_weight, s_weight


def test_certify_examples():
    c = certify(from_generators([4, 14, 29]), 3)
    assert c.affirmative and c.even_elements_in_window == [4, 8, 12] and c.pivot_element == 14
    c = certify(from_generators([2, 11]), 0)
    assert c.affirmative and c.pivot_element == 2 and c.even_elements_in_window == []
    c = certify(from_generators([4, 5, 6]), 1)
    assert not c.affirmative and c.even_count_ok and not c.pivot_ok and c.pivot_element == 5


def test_detect_gammas_examples():
    assert detect_gammas(from_generators([4, 6, 11, 13]), 5) == [1]
    assert detect_gammas(from_generators([2, 11]), 5) == [0]
    assert detect_gammas(from_generators([5, 6, 7, 8, 9]), 5) == []


def test_make_maximizer():
    s = make_maximizer(3, 20)
    assert s == from_generators([4, 14, 29]) and k_weight(s) == 109 == comb(14, 2) + 18
    s = make_maximizer(0, 5)
    assert s == from_generators([2, 11]) and k_weight(s) == 10
    with pytest.raises(ConstructionOutOfRange):
        make_maximizer(1, 4)


def test_make_minimizer():
    s = make_minimizer(3, 20)
    assert list(gaps(s)) == sorted([2, 4, 6] + list(range(1, 34, 2)))
    assert k_weight(s) == 97 == comb(14, 2) + 6
    s = make_minimizer(1, 5)
    assert list(gaps(s)) == [1, 2, 3, 5, 7] and k_weight(s) == 5
    s = make_minimizer(0, 6)
    assert s == from_generators([2, 13]) and k_weight(s) == 15
    with pytest.raises(ConstructionOutOfRange):
        make_minimizer(3, 9)


def test_make_mult4_member():
    s = make_mult4_member(1, 4, 1)
    assert s == from_generators([4, 6, 7, 9])
    assert list(gaps(s)) == [1, 2, 3, 5] and s_weight(s) == 1 and k_weight(s) == 3
    assert make_mult4_member(3, 20, 4) == make_maximizer(3, 20)
    with pytest.raises(ConstructionOutOfRange):
        make_mult4_member(1, 4, 2)


def test_mult4_frobenius_matches_oracle():
    for gamma in (1, 2, 3):
        for g in range(4 * gamma + 1, 4 * gamma + 6):
            for k in range(1, gamma + 2):
                gens = [4, 4 * gamma + 2, 2 * g - 2 * gamma - 2 * k + 3, 2 * g - 2 * gamma + 2 * k + 1]
                gl = oracles.gaps_of(gens)
                assert len(gl) == g and gl[-1] == 2 * g - 2 * gamma + 2 * k - 3
                assert list(gaps(make_mult4_member(gamma, g, k))) == gl


def test_check_bounds_examples():
    b = check_bounds(from_generators([4, 6, 11, 13]), 1)
    assert b.lower_k == b.upper_k == b.w_k == 8 and b.within_k and b.attains_min_k and b.attains_max_k
    b = check_bounds(from_generators([4, 14, 29]), 3)
    assert b.w_k == 109 == b.upper_k and b.attains_max_k and b.within_s
    b = check_bounds(make_minimizer(3, 20), 3)
    assert b.w_k == 97 == b.lower_k and b.attains_min_k
    with pytest.raises(NotGammaHyperelliptic):
        check_bounds(from_generators([4, 5, 6]), 1)


def test_mult4_spectrum_examples():
    assert mult4_spectrum(1, 6) == [(1, 8), (2, 8)]
    assert mult4_spectrum(3, 20) == [(1, 103), (2, 103), (3, 105), (4, 109)]
    assert mult4_spectrum(2, 10) == [(1, 21), (2, 21), (3, 23)]


def test_evens_above_window_are_members():
    for gamma in range(5):
        for s in iter_semigroups(16, gamma=gamma):
            assert all(x in s for x in range(4 * gamma, 4 * gamma + 2 * s.genus + 4, 2))


def test_gamma_one_weight_is_pinned():
    for s in iter_semigroups(14, gamma=1):
        assert s.genus >= 3
        assert k_weight(s) == comb(s.genus - 2, 2) + 2


def test_maximizer_is_symmetric():
    for gamma in range(5):
        for g in range(4 * gamma + 1, 4 * gamma + 10):
            s = make_maximizer(gamma, g)
            assert is_symmetric(s) and s.frobenius == 2 * g - 1
