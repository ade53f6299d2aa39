#include "zxcf/exact_state.hpp"

#include "zxcf/errors.hpp"
#include "zxcf/phase_poly.hpp"

#include <algorithm>

namespace zxcf {

bool ExactState::isZero() const {
    return std::all_of(amps.begin(), amps.end(), [](const Gaussian& g) { return g.isZero(); });
}

bool proportional(const ExactState& s, const ExactState& t) {
    if (s.numQubits != t.numQubits) {
        throw DimensionError("states have different qubit counts");
    }
    return proportionalVectors(s.amps, t.amps);
}

ExactState evaluateNetwork(const GreenNetwork& net, int maxWires, int maxVertices) {
    const int nv = static_cast<int>(net.verts.size());
    const int nw = static_cast<int>(net.legs.size());
    if (nw > maxWires) {
        throw SizeLimitError("wire count exceeds the evaluation limit");
    }
    if (nv > maxVertices) {
        throw SizeLimitError("vertex count exceeds the evaluation limit");
    }

    std::map<VertexId, int> pos;
    for (int j = 0; j < nv; ++j) {
        pos[net.verts[static_cast<std::size_t>(j)]] = j;
    }

    // Precompute per-edge bit pairs and per-vertex data.
    std::vector<std::pair<int, int>> edgeBits;
    edgeBits.reserve(net.hEdges.size());
    for (const auto& [a, b] : net.hEdges) {
        edgeBits.emplace_back(pos.at(a), pos.at(b));
    }

    ExactState out;
    out.numQubits = nw;
    out.amps.assign(std::size_t{1} << nw, Gaussian{});
    out.sqrt2Exp = net.extraExp - static_cast<int>(net.hEdges.size());
    for (const auto& leg : net.legs) {
        out.sqrt2Exp += leg.op.exp;
    }

    std::vector<Gaussian> expand;
    std::vector<Gaussian> next;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << nv); ++y) {
        // Spider phases + effects + edge signs.
        Gaussian coeff{1, 0};
        int quarters = 0;
        for (const auto& [v, k] : net.phase) {
            if ((y >> pos.at(v)) & 1U) {
                quarters += k;
            }
        }
        coeff = iPower(quarters);
        bool zero = false;
        for (const auto& [v, cov] : net.effects) {
            const Gaussian f = cov[(y >> pos.at(v)) & 1U];
            if (f.isZero()) {
                zero = true;
                break;
            }
            coeff *= f;
        }
        if (zero) {
            continue;
        }
        int sign = 0;
        for (const auto& [a, b] : edgeBits) {
            sign ^= static_cast<int>(((y >> a) & 1U) & ((y >> b) & 1U));
        }
        if (sign != 0) {
            coeff = Gaussian{-coeff.re, -coeff.im};
        }

        // Outer product over the dangling legs, qubit 0 most significant.
        expand.assign(1, coeff);
        for (const auto& leg : net.legs) {
            const int yv = static_cast<int>((y >> pos.at(leg.vertex)) & 1U);
            const Gaussian f0 = leg.inputSide ? leg.op.at(yv, 0) : leg.op.at(0, yv);
            const Gaussian f1 = leg.inputSide ? leg.op.at(yv, 1) : leg.op.at(1, yv);
            next.assign(expand.size() * 2, Gaussian{});
            for (std::size_t j = 0; j < expand.size(); ++j) {
                next[2 * j] = expand[j] * f0;
                next[2 * j + 1] = expand[j] * f1;
            }
            expand.swap(next);
        }
        for (std::size_t j = 0; j < expand.size(); ++j) {
            out.amps[j] += expand[j];
        }
    }
    return out;
}

ExactState evaluateDiagram(const Diagram& d, int maxWires) {
    d.validate();
    GreenNetwork net;
    for (const VertexId v : d.graph.vertices()) {
        net.verts.push_back(v);
    }
    for (const auto& [a, b] : d.graph.edges()) {
        net.hEdges.emplace_back(a, b);
    }
    for (const auto& [v, m] : d.measurements) {
        net.effects[v] = effectCovector(m);
    }
    for (const Wire& w : d.wires()) {
        GreenNetwork::Leg leg;
        leg.vertex = w.vertex;
        leg.inputSide = w.isInput;
        leg.op = wordMatrix(w.isInput ? d.inputWord(w.vertex) : d.outputWord(w.vertex));
        net.legs.push_back(leg);
    }
    return evaluateNetwork(net, maxWires);
}

ExactState evaluateDiagram(const PhasePolyDiagram& d, int maxWires) {
    d.validate();
    // Red spiders are Hadamard-conjugated green spiders: a red spider with
    // phase a*pi becomes a green spider with phase 2a, its plain edges
    // become Hadamard edges and its output leg gets an H.
    GreenNetwork net;
    const int n = d.numQubits();
    for (int j = 0; j < n; ++j) {
        net.verts.push_back(j);
        const auto& sp = d.spiders[static_cast<std::size_t>(j)];
        const int k = sp.red ? 2 * sp.phase : sp.phase;
        if (k % 4 != 0) {
            net.phase[j] = ((k % 4) + 4) % 4;
        }
    }
    for (const auto& e : d.plainEdges) {
        net.hEdges.push_back(e);
    }
    for (const auto& e : d.hEdges) {
        net.hEdges.push_back(e);
    }
    for (int j = 0; j < n; ++j) {
        GreenNetwork::Leg leg;
        leg.vertex = j;
        leg.inputSide = false;
        leg.op = d.spiders[static_cast<std::size_t>(j)].red ? hadamard() : Mat2::identity();
        net.legs.push_back(leg);
    }
    return evaluateNetwork(net, maxWires);
}

} // namespace zxcf
