#pragma once

#include "zxcf/open_graph.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>

namespace zxcf {

/// Correction-set map p: V\O -> P(V\I) together with a strict partial order,
/// stored as a set of forced edges (u, v) meaning u comes before v. The order
/// used for verification is the transitive closure of these edges.
struct PauliFlow {
    std::map<VertexId, VertexSet> p;
    std::set<std::pair<VertexId, VertexId>> order;

    friend bool operator==(const PauliFlow&, const PauliFlow&) = default;
};

/// Successor sets of the transitive closure of f.order.
/// Throws MalformedFlowError when the closure contains a cycle.
std::map<VertexId, VertexSet> orderClosure(const PauliFlow& f);

/// One failed condition: vertex u, condition number 1..9 and the witness v
/// (v = u for the per-vertex conditions 4..9).
struct FlowViolation {
    VertexId u = 0;
    int condition = 0;
    VertexId v = 0;

    friend bool operator==(const FlowViolation&, const FlowViolation&) = default;
};

/// Checks the nine flow conditions for every u in V\O. Returns the first
/// violation in deterministic order (ascending u, then condition number, then
/// witness v), or nothing when the flow is valid. Structural problems (domain
/// of p not V\O, p(u) not within V\I, unknown ids, cyclic order) throw
/// MalformedFlowError instead of being reported as violations.
std::optional<FlowViolation> verifyFlow(const LabelledOpenGraph& g, const PauliFlow& f);

/// Searches for a Pauli flow by reverse layering: starting from the outputs,
/// repeatedly solve a GF(2) system per unsolved vertex whose correction set
/// may only involve vertices that carry no ordering obligation toward the
/// still-unsolved part. Deterministic; the result always passes verifyFlow.
std::optional<PauliFlow> findFlow(const LabelledOpenGraph& g);

/// Exhaustive existence oracle. Enumerates per-vertex correction-set
/// candidates that pass the local conditions, dedupes them by their forced
/// order edges and searches for a globally acyclic assignment.
/// Throws SizeLimitError when |V\O| or |V\I| exceed the given limits.
bool bruteForceFlowExists(const LabelledOpenGraph& g, int maxMeasured = 5, int maxNonInput = 8);

} // namespace zxcf
