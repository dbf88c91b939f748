"""
Figures
=======

Heatmap of the Schwarzian norm bound with the regime curve, and the radial
profile of the half-plane extremal leveling off at its norm.
"""
import sys

from schwarzian_lab.cli import main

out = sys.argv[1] if len(sys.argv) > 1 else "."
main(["plot", "--kind", "surface", "--out", f"{out}/bound_surface.svg"])
main(["plot", "--kind", "profile", "--alpha", "0", "--beta", "0.75,0.25", "--out", f"{out}/profile.svg"])
print("wrote", f"{out}/bound_surface.svg", "and", f"{out}/profile.svg")
