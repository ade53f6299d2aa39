#pragma once

#include "zxcf/diagram.hpp"
#include "zxcf/flow.hpp"

#include <map>
#include <utility>
#include <vector>

namespace zxcf {

/// One reversible step of a rewrite trace. LC, Pivot, ZDelete and ZInsert are
/// the graph rewrites; BendInput, SplitVertex and their inverses move
/// boundary wires around without touching the graph-state part; Relabel
/// renames vertices. Steps carry enough data to be inverted exactly.
struct RewriteStep {
    enum class Kind {
        LC,
        Pivot,
        ZDelete,
        ZInsert,
        BendInput,
        UnbendInput,
        SplitVertex,
        UnsplitVertex,
        Relabel,
    };

    Kind kind = Kind::LC;
    VertexId u = 0;
    VertexId v = 0;                         // Pivot partner / fresh id of SplitVertex
    VertexSet neighbours;                   // ZDelete / ZInsert
    Sign sign = Sign::Plus;                 // ZDelete / ZInsert
    Measurement meas;                       // BendInput: effect before the bend
    CliffordWord word;                      // BendInput: input word before the bend
    std::map<VertexId, VertexId> relabel;   // Relabel only

    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

using RewriteTrace = std::vector<RewriteStep>;

/// Local complementation about u, with the matching decoration updates so the
/// result is exactly proportional to d. Throws PreconditionError when u is a
/// Z-measured input or an unmeasured input-output vertex (those cases cannot
/// stay in MBQC+LC form, and never occur for diagrams with flow).
std::pair<Diagram, RewriteStep> lcRewrite(const Diagram& d, VertexId u);

/// Pivot about the edge (u, v): three local complementations u, v, u.
std::pair<Diagram, RewriteStep> pivotRewrite(const Diagram& d, VertexId u, VertexId v);

/// Removes the Z-measured non-input vertex u. A minus sign pushes a pi
/// Z-rotation onto every former neighbour.
std::pair<Diagram, RewriteStep> zDelete(const Diagram& d, VertexId u);

/// Inserts a fresh Z-measured vertex connected to exactly w.
std::pair<Diagram, RewriteStep> zInsert(const Diagram& d, const VertexSet& w, Sign s);

/// Turns the measured input u into an output (map-state duality): the effect
/// and input word become an output word. Requires u measured in X or Y basis.
std::pair<Diagram, RewriteStep> bendInput(const Diagram& d, VertexId u);

/// Splits the unmeasured input-output vertex u: a fresh output vertex takes
/// over the output wire (connected to u by a graph edge) and u becomes an
/// X-measured input, ready to be bent.
std::pair<Diagram, RewriteStep> splitBoundary(const Diagram& d, VertexId u);

/// The flow constructed for a z_insert of x with neighbourhood w:
/// p(x) = {x} and x ordered before all of w.
PauliFlow zInsertFlowUpdate(const PauliFlow& f, VertexId x, const VertexSet& w);

Diagram applyStep(const Diagram& d, const RewriteStep& s);
Diagram applyTrace(const Diagram& d, const RewriteTrace& t);

/// The inverse of one step as a short trace (an LC inverts to three LCs).
RewriteTrace invertStep(const RewriteStep& s);
RewriteTrace invertTrace(const RewriteTrace& t);

} // namespace zxcf
