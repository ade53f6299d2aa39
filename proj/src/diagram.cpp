#include "zxcf/diagram.hpp"

#include "zxcf/errors.hpp"

namespace zxcf {

MeasLabel labelOfBasis(MeasBasis b) {
    switch (b) {
        case MeasBasis::X: return MeasLabel::X;
        case MeasBasis::Y: return MeasLabel::Y;
        default: return MeasLabel::Z;
    }
}

std::vector<Wire> Diagram::wires() const {
    std::vector<Wire> ws;
    for (const VertexId v : graph.inputs()) {
        ws.push_back({v, true});
    }
    for (const VertexId v : graph.outputs()) {
        ws.push_back({v, false});
    }
    return ws;
}

CliffordWord Diagram::inputWord(VertexId v) const {
    const auto it = inputCliffords.find(v);
    return it == inputCliffords.end() ? CliffordWord{} : it->second;
}

CliffordWord Diagram::outputWord(VertexId v) const {
    const auto it = outputCliffords.find(v);
    return it == outputCliffords.end() ? CliffordWord{} : it->second;
}

void Diagram::setInputWord(VertexId v, const CliffordWord& w) {
    const CliffordWord canon = canonicalWord(w);
    if (canon.empty()) {
        inputCliffords.erase(v);
    } else {
        inputCliffords[v] = canon;
    }
}

void Diagram::setOutputWord(VertexId v, const CliffordWord& w) {
    const CliffordWord canon = canonicalWord(w);
    if (canon.empty()) {
        outputCliffords.erase(v);
    } else {
        outputCliffords[v] = canon;
    }
}

void Diagram::composeInputGate(VertexId v, const Mat2& m) {
    setInputWord(v, canonicalWordOf(wordMatrix(inputWord(v)) * m));
}

void Diagram::composeOutputGate(VertexId v, const Mat2& m) {
    setOutputWord(v, canonicalWordOf(wordMatrix(outputWord(v)) * m));
}

void Diagram::setMeasurement(VertexId v, const Measurement& m) {
    if (graph.isOutput(v)) {
        throw MalformedDiagramError("cannot measure an output vertex");
    }
    measurements[v] = m;
    graph.setLabel(v, labelOfBasis(m.basis));
}

void Diagram::clearMeasurement(VertexId v) {
    measurements.erase(v);
    graph.clearLabel(v);
}

void Diagram::validate() const {
    graph.validate();
    for (const VertexId v : graph.vertices()) {
        if (graph.isOutput(v)) {
            if (measurements.count(v) > 0) {
                throw MalformedDiagramError("output vertex with measurement");
            }
        } else {
            const auto it = measurements.find(v);
            if (it == measurements.end()) {
                throw MalformedDiagramError("non-output vertex without measurement");
            }
            if (graph.label(v) != labelOfBasis(it->second.basis)) {
                throw MalformedDiagramError("graph label disagrees with measurement basis");
            }
        }
    }
    for (const auto& [v, w] : inputCliffords) {
        if (!graph.isInput(v)) {
            throw MalformedDiagramError("input Clifford on non-input vertex");
        }
    }
    for (const auto& [v, w] : outputCliffords) {
        if (!graph.isOutput(v)) {
            throw MalformedDiagramError("output Clifford on non-output vertex");
        }
    }
}

} // namespace zxcf
