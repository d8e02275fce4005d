#include "skewcm/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewcm {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0), BitVec(static_cast<std::size_t>(n > 0 ? n : 0))) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
}

void Graph::check(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("Graph: vertex out of range");
}

bool Graph::has_edge(int i, int j) const {
    check(i);
    check(j);
    if (i == j) return false;
    return adj_[i - 1].test(static_cast<std::size_t>(j - 1));
}

void Graph::add_edge(int i, int j) {
    check(i);
    check(j);
    if (i == j) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[i - 1].set(static_cast<std::size_t>(j - 1));
    adj_[j - 1].set(static_cast<std::size_t>(i - 1));
}

void Graph::remove_edge(int i, int j) {
    check(i);
    check(j);
    if (i == j) return;
    adj_[i - 1].reset(static_cast<std::size_t>(j - 1));
    adj_[j - 1].reset(static_cast<std::size_t>(i - 1));
}

int Graph::degree(int v) const {
    check(v);
    return static_cast<int>(adj_[v - 1].count());
}

std::vector<int> Graph::neighbors(int v) const {
    check(v);
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (adj_[v - 1].test(static_cast<std::size_t>(u - 1))) out.push_back(u);
    return out;
}

bool Graph::is_isolated(int v) const {
    check(v);
    return !adj_[v - 1].any();
}

bool Graph::is_isolated_edge(int v, int w) const {
    check(v);
    check(w);
    if (v == w || !has_edge(v, w)) return false;
    return degree(v) == 1 && degree(w) == 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.count();
    return total / 2;
}

Graph switched(const Graph& g, int v) {
    if (v < 1 || v > g.vertex_count()) throw std::out_of_range("switched: vertex out of range");
    Graph out = g;
    for (int u = 1; u <= g.vertex_count(); ++u) {
        if (u == v) continue;
        if (g.has_edge(v, u)) out.remove_edge(v, u);
        else out.add_edge(v, u);
    }
    return out;
}

Graph relative_switched(const Graph& g, int v, int w) {
    if (v < 1 || v > g.vertex_count() || w < 1 || w > g.vertex_count())
        throw std::out_of_range("relative_switched: vertex out of range");
    if (v == w) throw std::invalid_argument("relative_switched: v and w must differ");

    // The two set differences of the defining formula, kept literal.
    // u never equals v: v is not in N(v), and a loop vv is excluded when
    // v lies in N(w).
    std::vector<bool> next(static_cast<std::size_t>(g.vertex_count() + 1), false);
    for (int u : g.neighbors(w))
        if (u != v && !g.has_edge(v, u)) next[static_cast<std::size_t>(u)] = true; // N(w)\N(v)
    for (int u : g.neighbors(v))
        if (u != v && !g.has_edge(w, u)) next[static_cast<std::size_t>(u)] = true; // N(v)\N(w)

    Graph out = g;
    for (int u = 1; u <= g.vertex_count(); ++u) {
        if (u == v) continue;
        if (next[static_cast<std::size_t>(u)]) out.add_edge(v, u);
        else out.remove_edge(v, u);
    }
    return out;
}

F2Matrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    F2Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (g.has_edge(i, j)) {
                m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
                m.set(static_cast<std::size_t>(j), static_cast<std::size_t>(i), true);
            }
    return m;
}

F2Matrix delta(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    F2Matrix m(n + 1, n + 1);
    for (int i = 1; i <= g.vertex_count(); ++i)
        for (int j = i + 1; j <= g.vertex_count(); ++j)
            if (g.has_edge(i, j)) {
                m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
                m.set(static_cast<std::size_t>(j), static_cast<std::size_t>(i), true);
            }
    for (std::size_t i = 1; i <= n; ++i) {
        m.set(i, n + 1, true);
        m.set(n + 1, i, true);
    }
    return m;
}

Graph make_normal_form(int alpha, int beta) {
    if (alpha < 0 || beta < 0 || 2 * alpha + beta < 1)
        throw std::invalid_argument("make_normal_form: need 2*alpha + beta >= 1");
    Graph g(2 * alpha + beta);
    for (int i = 1; i <= alpha; ++i) g.add_edge(2 * i - 1, 2 * i);
    return g;
}

std::optional<NormalFormShape> recognize_normal_form(const Graph& g) {
    NormalFormShape shape;
    shape.partner.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d > 1) return std::nullopt;
        if (d == 0) {
            ++shape.beta;
        } else {
            const int w = g.neighbors(v).front();
            shape.partner[static_cast<std::size_t>(v - 1)] = w;
            if (v < w) ++shape.alpha;
        }
    }
    return shape;
}

} // namespace skewcm
