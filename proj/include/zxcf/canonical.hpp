#pragma once

#include "zxcf/phase_poly.hpp"
#include "zxcf/rewrite.hpp"

#include <optional>

namespace zxcf {

struct StageResult {
    Diagram diagram;
    RewriteTrace trace;
};

/// Removes every measured vertex that is neither an input nor an output:
/// Z-measured vertices are deleted directly, Y-measured ones are converted
/// by a local complementation, X-measured ones by a pivot with a neighbour
/// (outputs preferred). Requires Pauli flow (throws NoFlowError).
StageResult eliminateInterior(const Diagram& d);

/// Normalizes a graph-state-with-local-Cliffords diagram (only outputs) so
/// every vertex operator lies in {Z(k)} u {X(1)Z(1), X(1)Z(3)} and no two
/// vertices of the latter kind are adjacent (clashes are removed by pivoting
/// about the offending edge).
StageResult toRgslc(const Diagram& d);

/// Local complementations about the X(1)Z(+-1) vertices, bringing every
/// vertex operator into {Z(k)} u {H, H Z(2)}. The result re-presents as a
/// phase-polynomial form diagram via presentPhasePoly.
StageResult rgslcToPhasePoly(const Diagram& d);

/// The canonicalization loop: while some red spider connects to a later
/// green spider, resolve the minimal such red against its maximal green
/// neighbour by a local complementation pair or a pivot. The count of
/// red-to-later-green connections strictly decreases every iteration
/// (asserted; an increase throws).
StageResult phasePolyToCanonical(const Diagram& d);

/// Reads a graph-state diagram whose vertices are exactly 0..n-1, all
/// outputs, with vertex operators in {Z(k)} u {H, H Z(2)}, as a
/// phase-polynomial form diagram (spider index = vertex id). Pure
/// re-presentation; throws MalformedDiagramError when the diagram does not
/// have that shape.
PhasePolyDiagram presentPhasePoly(const Diagram& d);

/// Number of plain edges from a red spider to a green spider with a higher
/// index; zero exactly when the diagram is canonical.
int laterConnectionCount(const PhasePolyDiagram& p);

struct CanonicalizeResult {
    PhasePolyDiagram canonical;
    Diagram endDiagram; // the canonical form as a graph-state diagram, ids 0..n-1
    RewriteTrace trace; // replays the input diagram to endDiagram exactly
};

/// Full pipeline: bend inputs to outputs (splitting input-output vertices),
/// eliminate the interior, relabel so vertex ids follow the original wire
/// order, then normalize down to the unique canonical diagram.
/// Throws NoFlowError when the input has no Pauli flow.
CanonicalizeResult canonicalize(const Diagram& d);

/// Decides scalar-free equality. On success the returned trace replays a
/// into b exactly; otherwise nothing.
std::optional<RewriteTrace> decideEquiv(const Diagram& a, const Diagram& b);

} // namespace zxcf
