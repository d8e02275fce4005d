#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewcm/bitvec.hpp"
#include "skewcm/f2matrix.hpp"

namespace skewcm {

// Simple undirected graph on vertices 1..n (no loops, no multi-edges).
// Neighborhoods are per-vertex bitsets; every vertex label on this
// surface is 1-based. Values are immutable in practice: the switching
// operations below return new graphs.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }

    bool has_edge(int i, int j) const;
    void add_edge(int i, int j);
    void remove_edge(int i, int j);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const; // ascending
    bool is_isolated(int v) const;           // N(v) empty
    bool is_isolated_edge(int v, int w) const; // N(v)={w} and N(w)={v}

    std::vector<std::pair<int, int>> edges() const; // i<j, lexicographic
    std::size_t edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    void check(int v) const;

    int n_ = 0;
    std::vector<BitVec> adj_;
};

// Switching at v: complement all edges incident to v, everything else
// unchanged.
Graph switched(const Graph& g, int v);

// Relative switching at v with respect to w: v's new neighbors are the
// u with u in N(w)\N(v) or u in N(v)\N(w), u ranging over vertices
// different from v; edges away from v are unchanged. In particular the
// edge vw, when present, survives.
Graph relative_switched(const Graph& g, int v, int w);

F2Matrix adjacency_matrix(const Graph& g);

// The (n+1)x(n+1) bordered adjacency matrix: adjacency block top-left,
// last row and column all ones, zero corner.
F2Matrix delta(const Graph& g);

// A graph made of alpha disjoint edges and beta isolated vertices.
struct NormalFormShape {
    int alpha = 0;
    int beta = 0;
    std::vector<int> partner; // partner[v-1] = matched vertex, 0 when isolated
};

// Canonical labeling: edges {2i-1, 2i} for i = 1..alpha, the remaining
// beta vertices isolated. Requires 2*alpha + beta >= 1.
Graph make_normal_form(int alpha, int beta);

// Succeeds exactly when every vertex has degree 0 or 1.
std::optional<NormalFormShape> recognize_normal_form(const Graph& g);

} // namespace skewcm
