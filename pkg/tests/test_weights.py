import pytest

import oracles
from semiweight.errors import MalformedOddList, NotGammaHyperelliptic
from semiweight.gamma import detect_gammas
from semiweight.gapset import from_generators, gaps, is_symmetric, natural_numbers
from semiweight.weights import (
    k_ramification,
    k_weight,
    odd_tail_count,
    s_weight,
    total_ramification,
    weight_report,
)

S0 = from_generators([4, 14, 29])
HYP5 = from_generators([2, 11])
G6 = from_generators([4, 6, 11, 13])


def test_s_weight_examples():
    assert s_weight(HYP5) == 10
    assert s_weight(natural_numbers()) == 0
    assert s_weight(S0) == 109 == oracles.s_weight(oracles.gaps_of([4, 14, 29]))


def test_k_weight_examples():
    assert k_weight(HYP5) == 10
    assert k_weight(G6) == 8
    assert k_weight(from_generators([2, 3])) == 0
    assert k_weight(natural_numbers()) == 0


def test_total_ramification_examples():
    assert total_ramification(G6) == 30
    assert total_ramification(from_generators([2, 3])) == 1
    assert total_ramification(natural_numbers()) == 0


def test_odd_tail_examples():
    assert odd_tail_count(G6) == 1
    assert odd_tail_count(S0) == 0
    assert odd_tail_count(HYP5) == 0


def test_k_ramification_examples():
    assert k_ramification(G6, 1) == 22
    assert k_ramification(S0, 3) == 271 == 20 * 19 - 109
    assert k_ramification(HYP5, 0) == 10


def test_k_ramification_rejects_wrong_gamma():
    with pytest.raises(NotGammaHyperelliptic):
        k_ramification(G6, 2)


def test_malformed_odd_list_is_reported(monkeypatch):
    import semiweight.weights as w

    monkeypatch.setattr(w, "odd_members_below_2g", lambda s: [])
    with pytest.raises(MalformedOddList):
        w.k_ramification(G6, 1)


def test_weight_report_examples():
    r = weight_report(G6, 1)
    assert (r.w_s, r.w_k, r.ramification, r.k_odd_tail, r.r_k) == (6, 8, 30, 1, 22)
    assert r.even_heads == [4] and r.odd_members_below_2g == [11]
    r = weight_report(from_generators([2, 3]))
    assert (r.w_s, r.w_k, r.ramification, r.k_odd_tail, r.r_k) == (0, 0, 1, 0, None)
    r = weight_report(natural_numbers())
    assert (r.w_s, r.w_k, r.ramification, r.k_odd_tail) == (0, 0, 0, 0)


def test_weights_match_oracle(genus10):
    for s in genus10:
        gl = list(gaps(s))
        assert s_weight(s) == oracles.s_weight(gl)
        assert k_weight(s) == oracles.k_weight(gl)


def test_identities_exhaustive(genus10):
    for s in genus10:
        g = s.genus
        if g == 0:
            continue
        ws, wk = s_weight(s), k_weight(s)
        assert wk == ws + 2 * g - 1 - s.frobenius
        assert (wk == ws) == is_symmetric(s)
        assert ws + total_ramification(s) == g * g


def test_complement_area_identity(genus10):
    seen = 0
    for s in genus10:
        for c in detect_gammas(s, s.genus):
            if s.genus >= 2 * c + 1:
                assert k_weight(s) + k_ramification(s, c) == s.genus * (s.genus - 1)
                seen += 1
    assert seen == 48
