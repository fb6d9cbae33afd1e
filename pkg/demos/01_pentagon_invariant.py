"""
Ball embeddings into a blown-up product of spheres
==================================================

The Delzant polytope of S^2 x S^2 blown up once is the square [0, 2]^2 with
its corner at (2, 2) cut off. We read the embedding-count step function off
that pentagon.
"""

from fractions import Fraction

from delzant_emb import (
    all_vertex_data, emb_function, embedding_space, hull_from_vertices, plateau_thresholds,
    validate_delzant,
)

#
# Build the polytope from its vertices and check the Delzant conditions.
#
pentagon = hull_from_vertices([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
print("Delzant:", validate_delzant(pentagon).is_delzant)

#
# Each vertex contributes while a ball of size t = r^2 is strictly smaller
# than its shortest edge, measured in lattice units.
#
for vd in all_vertex_data(pentagon):
    point = tuple(str(c) for c in vd.point)
    lengths = [str(x) for x in vd.edge_lengths]
    print(f"vertex {point}: edge lengths {lengths}, weights {vd.weights}")

#
# The step function in t, and the same breakpoints written in r.
#
sf = emb_function(pentagon)
for piece in sf.to_json()["pieces"]:
    lo, hi = piece["r_interval_display"]
    print(f"r in [{lo}, {hi}): {piece['value']} components")

print("t_low, t_high =", tuple(str(t) for t in plateau_thresholds(sf)))

#
# Inside the middle plateau only the origin survives, and it gives 2! = 2
# tori, one per way of lining up the ball axes with the two edges there.
#
space = embedding_space(pentagon, Fraction(3, 2))
print(space.component_count, "copies of", space.component_type)
for perm, images in space.permutation_labels[0]:
    print("  axes ->", images)
