#pragma once

#include "zxcf/diagram.hpp"
#include "zxcf/gaussian.hpp"

#include <vector>

namespace zxcf {

struct PhasePolyDiagram; // phase_poly.hpp

/// Dense amplitude vector with exact entries: amplitude j is
/// amps[j] * (sqrt 2)^sqrt2Exp. Qubit 0 is the most significant index bit,
/// matching the left-to-right bitstring convention |x_1 x_2 ... x_n>.
struct ExactState {
    int numQubits = 0;
    std::vector<Gaussian> amps;
    int sqrt2Exp = 0;

    [[nodiscard]] bool isZero() const;
};

/// t == z*s for some non-zero complex z; exact.
bool proportional(const ExactState& s, const ExactState& t);

/// Intermediate form shared by the two evaluators: a network of green
/// spiders with quarter-turn phases, Hadamard edges, Pauli effect covectors
/// on measured vertices, and matrix-decorated dangling legs in wire order.
struct GreenNetwork {
    std::vector<VertexId> verts;
    std::map<VertexId, int> phase; // quarter turns, default 0
    std::vector<std::pair<VertexId, VertexId>> hEdges;
    std::map<VertexId, std::array<Gaussian, 2>> effects;
    struct Leg {
        VertexId vertex;
        Mat2 op;
        bool inputSide; // factor op[y, w] instead of op[w, y]
    };
    std::vector<Leg> legs;
    int extraExp = 0;
};

ExactState evaluateNetwork(const GreenNetwork& net, int maxWires = 12, int maxVertices = 18);

/// Exact amplitudes of an MBQC+LC diagram, inputs bent to outputs
/// (wire order per Diagram::wires). Throws SizeLimitError above the limits.
ExactState evaluateDiagram(const Diagram& d, int maxWires = 12);

ExactState evaluateDiagram(const PhasePolyDiagram& d, int maxWires = 12);

} // namespace zxcf
