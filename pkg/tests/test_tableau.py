from pathlib import Path

import pytest

from semiweight.errors import GenusMismatch
from semiweight.gamma import make_maximizer, make_minimizer
from semiweight.gapset import from_generators
from semiweight.tableau import Step, cell_diff, path_of, render_ascii, render_svg
from semiweight.weights import k_weight, s_weight

GOLDEN = Path(__file__).parent / "golden"
U, R = Step.UP, Step.RIGHT


def test_path_2_3():
    t = path_of(from_generators([2, 3]))
    assert t.steps == (U, R) and t.rows_s == (0,) and t.rows_k == ()


def test_path_hyperelliptic():
    t = path_of(from_generators([2, 11]))
    assert t.path_string() == "UR" * 5
    assert t.rows_s == (4, 3, 2, 1, 0)


def test_path_figure_semigroup():
    t = path_of(from_generators([4, 14, 29]))
    assert sum(t.rows_s) == 109 and sum(t.rows_k) == 90


def test_tableau_consistency(genus10):
    for s in genus10:
        if s.genus == 0:
            continue
        t = path_of(s)
        assert t.steps.count(U) == t.steps.count(R) == s.genus
        assert sum(t.rows_s) == s_weight(s)
        assert sum(t.rows_k) + s.genus - 1 == k_weight(s)
        assert list(t.rows_s) == sorted(t.rows_s, reverse=True)
        assert min(t.rows_s) >= 0


def test_ascii_examples():
    assert render_ascii(path_of(from_generators([2, 3]))) == ".\n"
    text = render_ascii(path_of(from_generators([2, 11])))
    assert text.count("#") == 10
    text = render_ascii(path_of(from_generators([4, 14, 29])), "K")
    lines = text.splitlines()
    assert set(lines[0]) == {"."} and text.count("#") == 90


def test_diff_counts():
    mx = path_of(make_maximizer(3, 20))
    mn = path_of(make_minimizer(3, 20))
    d = cell_diff(mx, mn, "K")
    assert d.only_in_first == 12 and d.only_in_second == 0 and d.dominated
    assert cell_diff(mx, mx, "K").only_in_first == 0


def test_svg_counts():
    mx = path_of(make_maximizer(3, 20))
    mn = path_of(make_minimizer(3, 20))
    svg = render_svg(mx, "K", mn)
    assert svg.count('class="red"') == 12
    assert svg.count('class="red"') + svg.count('class="box"') == 90
    assert render_svg(mx, "K", mx).count('class="red"') == 0
    svg = render_svg(path_of(from_generators([2, 11])))
    assert svg.count('class="box"') == 10 and 'fill="#d3d3d3"' in svg


def test_figure_red_cells():
    # red cells as painted in the published figure, (x, y) from the bottom-left
    expected = {(0, 3), (0, 4), (0, 5), (0, 6), (1, 6), (1, 7), (11, 17), (12, 17),
                (12, 18), (13, 18), (14, 18), (15, 18)}
    mx = path_of(make_maximizer(3, 20)).cells("K")
    mn = path_of(make_minimizer(3, 20)).cells("K")
    assert mx - mn == expected


def test_svg_golden():
    mx = path_of(make_maximizer(3, 20))
    mn = path_of(make_minimizer(3, 20))
    svg = render_svg(mx, "K", mn)
    assert svg == render_svg(mx, "K", mn)
    assert svg == (GOLDEN / "figure_k_tableau.svg").read_text(encoding="utf-8")


def test_genus_mismatch():
    with pytest.raises(GenusMismatch):
        render_svg(path_of(from_generators([2, 3])), "S", path_of(from_generators([2, 5])))
    with pytest.raises(GenusMismatch):
        cell_diff(path_of(from_generators([2, 3])), path_of(from_generators([2, 5])))
