"""
Lattice cones, hull chains and the supplementary duality
========================================================

The geometry behind the continued fractions: the boundary of the convex
hull of the lattice points inside a plane cone.
"""

from latticecf import lattice

# A strictly convex rational cone is classified by a normal form (p, q);
# the cone spanned by (1,0) and (4,11) has type 11/7.
nf, to_nf = lattice.cone_normal_form((1, 0), (4, 11))
print("type:", nf)

# The hull chain: all lattice points on the boundary of the convex hull
# of the nonzero cone points.  Mapping back to the original frame shows the
# points drawn in any picture of this cone.
chain = lattice.polygon(nf)
back = to_nf.inverse()
print("chain in the original frame:", [back.apply(pt) for pt in chain.points])
print("weights:", chain.weights, "  vertices at:", chain.vertex_indices)

# The weights are the subtractive partial quotients of 11/7, and the chain
# can be recomputed with no continued fractions at all: the hull oracle
# agrees point for point.
print("hull oracle agrees:", lattice.hull_oracle(nf) == chain)

# Swapping the two rays inverts q modulo p.
swapped, _ = lattice.cone_normal_form((4, 11), (1, 0))
print("swapped ordering gives type:", swapped)

# The supplementary cone (same second edge, union a half-plane) has type
# p/(p-q); it is canonically the dual cone once an orientation is fixed.
print("supplementary:", lattice.supplementary(nf), " dual:", lattice.dual_cone(nf))

# Every edge of the chain, translated to the origin, lands on the
# supplementary chain: vertices of one chain answer edges of the other.
report = lattice.duality_map(nf)
for im in report.images:
    print(f"  edge {im.kind:8}", "->", im.image, "at dual position", im.image_index)
print("dual vertices covered:", report.vertices_covered)
for ex in report.exceptional:
    print(f"  extreme edge of length {ex.length}: image is vertex = {ex.is_vertex}")

# Klein's reading: the ray of slope p/q splits the quadrant in two cones,
# and the additive partial quotients are the alternating integral lengths
# of their hull edges.
print("klein_quotients(11, 7):", lattice.klein_quotients(11, 7))
print("klein_quotients(11, 4):", lattice.klein_quotients(11, 4))
