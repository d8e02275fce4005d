#include "skewcm/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewcm {

namespace {

void push_switch(std::vector<ReductionStep>& trace, Graph& g, int v) {
    g = switched(g, v);
    trace.push_back({ReductionStep::Kind::Switch, v, 0, g});
}

void push_rswitch(std::vector<ReductionStep>& trace, Graph& g, int v, int w, int n) {
    if (v < 2 || v > n || w < 2 || w > n - 1)
        throw std::logic_error("reduction: relative switch outside the legal vertex ranges");
    g = relative_switched(g, v, w);
    trace.push_back({ReductionStep::Kind::RelativeSwitch, v, w, g});
}

// Clears vertex m's edges into {1..m-1}, assuming that range already
// induces a disjoint union of edges and isolated vertices with vertex 1
// isolated. Emits the three batches described in reduction.hpp.
void clear_level(std::vector<ReductionStep>& trace, Graph& g, int m) {
    const int n = g.vertex_count();

    // Pair up the matched vertices below m.
    std::vector<std::pair<int, int>> lone;  // (adjacent endpoint, far endpoint)
    std::vector<std::pair<int, int>> both;  // edges with both endpoints adjacent to m
    std::vector<int> iso_adj;               // isolated-below vertices adjacent to m
    for (int v = 2; v < m; ++v) {
        std::vector<int> nb;
        for (int u : g.neighbors(v))
            if (u < m) nb.push_back(u);
        const bool adj_m = g.has_edge(v, m);
        if (nb.empty()) {
            if (adj_m) iso_adj.push_back(v);
        } else {
            const int p = nb.front(); // degree is 1 within 1..m-1
            if (v < p) {
                const bool p_adj = g.has_edge(p, m);
                if (adj_m && !p_adj) lone.emplace_back(v, p);
                else if (!adj_m && p_adj) lone.emplace_back(p, v);
                else if (adj_m && p_adj) both.emplace_back(v, p);
            }
        }
    }

    // Batch 1: drop each lone edge's tie to m via the far endpoint.
    std::sort(lone.begin(), lone.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (const auto& [adj, far] : lone) push_rswitch(trace, g, m, far, n);

    // Batch 2: fully adjacent edges, smaller endpoint first.
    std::sort(both.begin(), both.end());
    for (const auto& [a, b] : both) {
        push_rswitch(trace, g, m, a, n);
        push_rswitch(trace, g, m, b, n);
    }

    // Batch 3: collapse the isolated neighbors onto the smallest one,
    // which keeps exactly the edge {m, iso_adj.front()} when nonempty.
    for (std::size_t j = 1; j < iso_adj.size(); ++j)
        push_rswitch(trace, g, iso_adj[j], iso_adj.front(), n);
}

} // namespace

PhaseResult isolate_vertex_one(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("isolate_vertex_one: need n >= 2");
    PhaseResult r{g, {}};
    for (int u : g.neighbors(1)) push_switch(r.trace, r.graph, u);
    return r;
}

PhaseResult reduce_to_normal_form(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("reduce_to_normal_form: need n >= 2");
    if (!g.is_isolated(1)) throw std::invalid_argument("reduce_to_normal_form: vertex 1 must be isolated");

    PhaseResult r{g, {}};
    for (int m = 3; m <= g.vertex_count(); ++m) clear_level(r.trace, r.graph, m);
    return r;
}

ReductionReport full_reduction(const SignMatrix& eps) {
    if (eps.size() < 2) throw std::invalid_argument("full_reduction: need n >= 2");
    const Graph original = graph_from_signs(eps);

    PhaseResult p1 = isolate_vertex_one(original);
    PhaseResult p2 = reduce_to_normal_form(p1.graph);

    ReductionReport rep{original, std::move(p1.trace), p2.graph, {}, LastVertexStatus::IsolatedVertex};
    rep.trace.insert(rep.trace.end(), p2.trace.begin(), p2.trace.end());

    auto shape = recognize_normal_form(rep.final_graph);
    if (!shape) throw std::logic_error("full_reduction: final graph is not a disjoint union of edges and vertices");
    rep.shape = std::move(*shape);
    rep.last_status = rep.final_graph.is_isolated(eps.size()) ? LastVertexStatus::IsolatedVertex
                                                              : LastVertexStatus::IsolatedEdgeEndpoint;
    return rep;
}

std::vector<std::string> replay_trace(const Graph& original, const std::vector<ReductionStep>& trace) {
    std::vector<std::string> failures;
    const int n = original.vertex_count();
    Graph g = original;
    const F2Matrix d0 = delta(original);
    const std::size_t null0 = d0.nullity();
    const bool span0 = column_in_span(d0, static_cast<std::size_t>(n)).in_span;

    for (std::size_t k = 0; k < trace.size(); ++k) {
        const ReductionStep& step = trace[k];
        const std::string tag = "step " + std::to_string(k + 1);
        if (step.kind == ReductionStep::Kind::Switch) {
            g = switched(g, step.v);
        } else {
            if (!g.is_isolated(1)) failures.push_back(tag + ": relative switch with vertex 1 not isolated");
            if (step.v < 2 || step.v > n) failures.push_back(tag + ": v out of 2..n");
            if (step.w < 2 || step.w > n - 1) failures.push_back(tag + ": w out of 2..n-1");
            if (step.v == step.w) failures.push_back(tag + ": v equals w");
            g = relative_switched(g, step.v, step.w);
        }
        if (!(g == step.graph_after)) failures.push_back(tag + ": graph_after does not match replay");

        const F2Matrix d = delta(g);
        if (d.nullity() != null0) failures.push_back(tag + ": nullity changed along the trace");
        if (column_in_span(d, static_cast<std::size_t>(n)).in_span != span0)
            failures.push_back(tag + ": column-span status changed along the trace");
    }
    return failures;
}

} // namespace skewcm
