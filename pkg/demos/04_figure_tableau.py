"""
The K-tableau of the weight maximizer
=====================================

Draw the tableau of <4, 14, 29> (gamma = 3, genus 20) with its top row
removed, painting red the cells it has over the staircase minimizer.
Writes ``k_tableau.svg`` in the working directory.
"""

from pathlib import Path

from semiweight import make_maximizer, make_minimizer, path_of, render_ascii, render_svg
from semiweight.tableau import cell_diff

top = path_of(make_maximizer(3, 20))
bottom = path_of(make_minimizer(3, 20))

print(render_ascii(top, "K", bottom))
print(cell_diff(top, bottom, "K"))

Path("k_tableau.svg").write_text(render_svg(top, "K", bottom, title="K-tableau of <4,14,29>"))
