#pragma once

#include "zxcf/exact_state.hpp"
#include "zxcf/flow.hpp"
#include "zxcf/phase_poly.hpp"
#include "zxcf/rewrite.hpp"

#include <string>

namespace zxcf {

/// On-disk diagram: either an MBQC+LC diagram or a phase-polynomial form
/// one. kind "canonical" is a phase_poly that additionally satisfies the
/// canonical ordering condition.
struct DiagramFile {
    enum class Kind { MbqcLc, PhasePoly, Canonical };

    Kind kind = Kind::MbqcLc;
    Diagram diagram;         // kind == MbqcLc
    PhasePolyDiagram poly;   // kind == PhasePoly / Canonical

    friend bool operator==(const DiagramFile&, const DiagramFile&) = default;
};

/// Parsers throw SchemaError on malformed input (messages deterministic);
/// writers emit deterministic bytes (sorted ids, canonical Clifford words,
/// two-space indent, trailing newline) so equal values serialize equally.
DiagramFile parseDiagramFile(const std::string& text);
std::string writeDiagramFile(const DiagramFile& f);

std::string writeDiagram(const Diagram& d);
std::string writePhasePoly(const PhasePolyDiagram& p);

PauliFlow parseFlow(const std::string& text);
std::string writeFlow(const PauliFlow& f);

ExactState parseState(const std::string& text);
std::string writeState(const ExactState& s);

/// Rewrite traces as JSON lines, one step per line.
RewriteTrace parseTrace(const std::string& text);
std::string writeTrace(const RewriteTrace& t);

/// Graphviz export: green/red node fill, dashed Hadamard edges, boundary
/// roles in the node shape.
std::string exportDot(const DiagramFile& f);

std::string readFileOrThrow(const std::string& path);
void writeFileOrThrow(const std::string& path, const std::string& text);

} // namespace zxcf
