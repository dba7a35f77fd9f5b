"""
From a complex to its containment graph and back
================================================

Start with the hollow triangle, build the reflexive containment graph on
its simplices, and look at the complexes that graph carries: the
neighborhood complex (same homotopy type as the space) and the clique
complex (literally the barycentric subdivision).
"""

from homcx import (
    barycentric_subdivision,
    build_g_kx,
    clique_complex,
    core_fixture,
    greedy_collapse,
    homology,
    neighborhood_complex,
    render_label,
)

X = core_fixture("boundary_delta2")
print("space: hollow triangle on vertices 1, 2, 3")
print("f-vector:", X.f_vector())
print()

# The graph has one vertex per simplex, a loop everywhere, and an edge
# whenever one simplex strictly contains the other.
G = build_g_kx(X, 1)
print("containment graph vertices:", ", ".join(render_label(v) for v in G.vertices))
print("edge count (loops included):", len(G.edges), "with", G.loop_count(), "loops")
for v in G.vertices:
    others = sorted(render_label(u) for u in G.neighbors(v) if u != v)
    print(f"  {render_label(v)} touches {', '.join(others)}")
print()

# Simplices of the neighborhood complex are sets with a common neighbor.
N = neighborhood_complex(G)
print("neighborhood complex f-vector:", N.f_vector())
core, cert = greedy_collapse(N)
print("collapsed through", len(cert.steps), "free pairs to", len(core), "simplices")
print("homology of the neighborhood complex:", homology(core).betti)
print("homology of the space itself:       ", homology(X).betti)
print()

# The clique complex is exactly the first barycentric subdivision.
C = clique_complex(G)
sd = barycentric_subdivision(X, 1)
print("clique complex == subdivision:", set(C.simplex_set()) == set(sd.simplex_set()))
print("subdivision facets:")
for f in sorted([sorted(render_label(v) for v in fac) for fac in sd.facets]):
    print("  ", f)
