"""Build small (n,k)-star graphs and look at their structure.

Vertices are k-permutations of {1..n}; star edges swap position 1 with a
later position, residual edges replace the first symbol.
"""

import starcayley as sc

g = sc.build(4, 2)
print(f"S_4,2 has {g.vertex_count} vertices (P(4,2) = 12)")
print(f"every vertex meets {g.k - 1} star edge(s) and {g.n - g.k} residual edges")
print("neighbors of [1,2]:")
for u, kind in g.neighbors((1, 2)):
    print(f"  {list(u)}  ({kind.value})")

# the k = 1 graph degenerates to a complete graph
k1 = sc.build(5, 1)
print(f"\nS_5,1 is K_5: {k1.vertex_count} vertices, "
      f"all degree {len(k1.neighbors((1,)))}")

# vertex indexing is the lexicographic rank, in both directions
print("\nrank/unrank on S_5,3:")
print("  rank([1,2,3]) =", sc.rank((1, 2, 3), 5))
print("  unrank(59) =", list(sc.unrank(59, 5, 3)))

# triangles live exactly on the residual edges
g = sc.build(5, 3)
residual_edges = sum(1 for *_, kind in g.edges() if kind is sc.EdgeKind.RESIDUAL)
in_triangle = sum(1 for i, j, _ in g.edges()
                  if sc.is_edge_in_triangle(g, g.vertices[i], g.vertices[j]))
print(f"\nS_5,3: {residual_edges} residual edges, {in_triangle} edges in a "
      f"triangle (equal by the triangle criterion)")

# exports: DOT for graphviz, or a plain edge list
print("\nfirst lines of the DOT export of S_3,2:")
print("\n".join(sc.stargraph.to_dot(sc.build(3, 2)).splitlines()[:4]))
