#pragma once

#include "zxcf/clifford.hpp"
#include "zxcf/open_graph.hpp"

#include <map>
#include <vector>

namespace zxcf {

/// One dangling wire of a diagram. Wires are ordered: all input wires by
/// ascending vertex id, then all output wires by ascending vertex id. This
/// order defines the qubit order everywhere (simulation, canonical form).
struct Wire {
    VertexId vertex = 0;
    bool isInput = false;

    friend auto operator<=>(const Wire&, const Wire&) = default;
};

/// MBQC+LC-form diagram: a labelled open graph whose edges are Hadamard
/// edges of the underlying graph state, a Pauli measurement effect for every
/// non-output vertex, and Clifford words on the input and output wires.
/// Non-Pauli measurement planes are representable only in a bare
/// LabelledOpenGraph; a Diagram is always in the stabilizer fragment.
struct Diagram {
    LabelledOpenGraph graph;
    std::map<VertexId, Measurement> measurements;     // exactly V \ O
    std::map<VertexId, CliffordWord> inputCliffords;  // keys subset of I, identity if absent
    std::map<VertexId, CliffordWord> outputCliffords; // keys subset of O, identity if absent

    [[nodiscard]] std::vector<Wire> wires() const;
    [[nodiscard]] int wireCount() const { return static_cast<int>(wires().size()); }

    [[nodiscard]] CliffordWord inputWord(VertexId v) const;
    [[nodiscard]] CliffordWord outputWord(VertexId v) const;
    void setInputWord(VertexId v, const CliffordWord& w);  // canonicalizes, drops identity
    void setOutputWord(VertexId v, const CliffordWord& w);

    /// Composes gate (given by matrix m, canonicalized) onto the wire-facing
    /// side of the word: new word = old word * m.
    void composeInputGate(VertexId v, const Mat2& m);
    void composeOutputGate(VertexId v, const Mat2& m);

    /// Measurement basis mirrored into the graph label.
    void setMeasurement(VertexId v, const Measurement& m);
    void clearMeasurement(VertexId v);

    /// Checks structural invariants (throws MalformedDiagramError).
    void validate() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

MeasLabel labelOfBasis(MeasBasis b);

} // namespace zxcf
