#pragma once

#include <recolour/graph.hpp>

namespace recolour
{
    auto complete_graph(int r) -> Graph;

    /// Cycle v_0 ... v_{r-1} in natural order, r >= 3.
    auto cycle_graph(int r, bool reflexive = false) -> Graph;

    /// Path on 0..n-1. The usual 1..n labelling is shifted down by one, so
    /// layer i of a layered product is vertex i - 1 here. With reflexive set
    /// this is the reflexive path I_n; n = 1 gives the single looped vertex.
    auto path_graph(int n, bool reflexive = false) -> Graph;

    /// G_{k,q}: vertices 0..k-1, ij an edge when q <= |i - j| <= k - q.
    auto circular_clique(int k, int q) -> Graph;

    /// d-regular F_{d,q} on k = (2q-1)d + 1 vertices with
    /// N(i) = {i + q + t(2q-1) : 0 <= t < d} (mod k). A spanning subgraph of G_{k,q}.
    auto frozen_family(int d, int q) -> Graph;

    auto star_graph(int leaves) -> Graph;
    auto complete_bipartite(int a, int b) -> Graph;
    auto empty_graph(int n, bool reflexive = false) -> Graph;

    /// Categorical product: (a, b) is vertex a * |V(H)| + b, adjacent iff both
    /// coordinates are adjacent.
    auto categorical_product(const Graph & g, const Graph & h) -> Graph;

    /// Extension product G ⋈ F: (g1, f1)(g2, f2) is an edge when g1g2 is an edge
    /// of G and f1f2 is an edge of F or f1 = f2. Same indexing as the
    /// categorical product; equal to categorical_product(G, F with all loops).
    auto extension_product(const Graph & g, const Graph & f) -> Graph;

    /// Disjoint union, vertices of `b` shifted by |V(a)|.
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
}
