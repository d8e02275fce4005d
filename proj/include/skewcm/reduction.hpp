#pragma once

#include <string>
#include <vector>

#include "skewcm/graph.hpp"
#include "skewcm/sign_matrix.hpp"

namespace skewcm {

struct ReductionStep {
    enum class Kind { Switch, RelativeSwitch };
    Kind kind;
    int v = 0;
    int w = 0; // RelativeSwitch only
    Graph graph_after;
};

enum class LastVertexStatus { IsolatedVertex, IsolatedEdgeEndpoint };

struct PhaseResult {
    Graph graph;
    std::vector<ReductionStep> trace;
};

struct ReductionReport {
    Graph original;
    std::vector<ReductionStep> trace;
    Graph final_graph;
    NormalFormShape shape;
    LastVertexStatus last_status; // role of vertex n in the final graph
};

// Phase 1: switch at each original neighbor of vertex 1, in ascending
// label order. Vertex 1 is isolated in the result.
PhaseResult isolate_vertex_one(const Graph& g);

// Phase 2: a deterministic sequence of relative switchings (v in 2..n,
// w in 2..n-1) driving the graph to max degree <= 1 while vertex 1
// stays isolated. Requires n >= 2 and vertex 1 isolated.
//
// Works bottom-up: once vertices 1..m-1 induce a disjoint union of
// edges and isolated vertices, vertex m's edges into them are cleared
// in three batches keyed to how each neighbor sits in that union:
//   1. lone-endpoint edges: switch m relative to the far endpoint;
//   2. fully adjacent edges: switch m relative to both endpoints,
//      smaller label first;
//   3. isolated neighbors z1 < z2 < ... < zr: switch each z_j (j >= 2)
//      relative to z1, which leaves only the edge {m, z1}.
PhaseResult reduce_to_normal_form(const Graph& g);

// Both phases composed, with the shape and the status of vertex n read
// off the final graph. Requires n >= 2.
ReductionReport full_reduction(const SignMatrix& eps);

// Re-applies every recorded step and cross-checks: each graph_after
// matches, vertex 1 is isolated when a relative switch fires, v and w
// obey the side conditions, and nullity / column-span status of the
// bordered matrix are constant along the trace. Returns failure
// descriptions, empty when the trace replays cleanly.
std::vector<std::string> replay_trace(const Graph& original, const std::vector<ReductionStep>& trace);

} // namespace skewcm
