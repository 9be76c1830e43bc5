"""
Zigzag diagrams
===============

One picture holding all four expansions of a number and its involute:
the hull chains of a cone and of its supplementary cone, joined at the
apex and connected by a zigzag of chords.
"""

from fractions import Fraction

from latticecf import zigzag

d = zigzag.build(Fraction(11, 7))
print(zigzag.render(d, "ascii"))

# The right curve carries the subtractive expansion of 11/7, the left one
# that of 11/4 = involute(11/7); alternating the edge lengths gives the
# additive expansions of both.
for which in zigzag.READINGS:
    print(f"{which:12} -> {zigzag.read(d, which)}")

# Whether the extreme left points are genuine vertices is decided by the
# weight rule; for 11/4 both extreme weights are 2, so neither is one.
print("extreme points of ZZ(11/7) are vertices:", d.extreme_is_vertex)
print("extreme points of ZZ(11/4) are vertices:", zigzag.build(Fraction(11, 4)).extreme_is_vertex)

# The rule itself: each vertex weight equals the opposite edge's length
# plus the number of that edge's endpoints away from the base points.
print("weight rule holds:", zigzag.rule_ok(d))

# An SVG rendering uses only path, circle and text elements.
svg = zigzag.render(d, "svg")
print(svg.splitlines()[1][:70] + "...")
