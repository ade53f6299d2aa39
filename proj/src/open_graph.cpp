#include "zxcf/open_graph.hpp"

#include "zxcf/errors.hpp"

#include <algorithm>

namespace zxcf {

std::string labelToString(MeasLabel l) {
    switch (l) {
        case MeasLabel::X: return "X";
        case MeasLabel::Y: return "Y";
        case MeasLabel::Z: return "Z";
        case MeasLabel::XY: return "XY";
        case MeasLabel::XZ: return "XZ";
        default: return "YZ";
    }
}

std::optional<MeasLabel> labelFromString(const std::string& s) {
    if (s == "X") return MeasLabel::X;
    if (s == "Y") return MeasLabel::Y;
    if (s == "Z") return MeasLabel::Z;
    if (s == "XY") return MeasLabel::XY;
    if (s == "XZ") return MeasLabel::XZ;
    if (s == "YZ") return MeasLabel::YZ;
    return std::nullopt;
}

bool isPauli(MeasLabel l) {
    return l == MeasLabel::X || l == MeasLabel::Y || l == MeasLabel::Z;
}

void LabelledOpenGraph::requireVertex(VertexId v) const {
    if (!hasVertex(v)) {
        throw UnknownVertexError("unknown vertex id " + std::to_string(v));
    }
}

void LabelledOpenGraph::addVertex(VertexId v) {
    adj_.try_emplace(v);
}

void LabelledOpenGraph::addEdge(VertexId u, VertexId v) {
    requireVertex(u);
    requireVertex(v);
    if (u == v) {
        throw MalformedDiagramError("self-loops are not allowed");
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void LabelledOpenGraph::removeEdge(VertexId u, VertexId v) {
    requireVertex(u);
    requireVertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
}

void LabelledOpenGraph::toggleEdge(VertexId u, VertexId v) {
    if (hasEdge(u, v)) {
        removeEdge(u, v);
    } else {
        addEdge(u, v);
    }
}

void LabelledOpenGraph::removeVertex(VertexId v) {
    requireVertex(v);
    for (const VertexId w : adj_[v]) {
        adj_[w].erase(v);
    }
    adj_.erase(v);
    inputs_.erase(v);
    outputs_.erase(v);
    labels_.erase(v);
}

void LabelledOpenGraph::setInput(VertexId v, bool isIn) {
    requireVertex(v);
    if (isIn) {
        inputs_.insert(v);
    } else {
        inputs_.erase(v);
    }
}

void LabelledOpenGraph::setOutput(VertexId v, bool isOut) {
    requireVertex(v);
    if (isOut) {
        outputs_.insert(v);
        labels_.erase(v);
    } else {
        outputs_.erase(v);
    }
}

void LabelledOpenGraph::setLabel(VertexId v, MeasLabel l) {
    requireVertex(v);
    if (isOutput(v)) {
        throw MalformedDiagramError("output vertices carry no measurement label");
    }
    labels_[v] = l;
}

void LabelledOpenGraph::clearLabel(VertexId v) {
    labels_.erase(v);
}

bool LabelledOpenGraph::hasEdge(VertexId u, VertexId v) const {
    const auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) > 0;
}

const VertexSet& LabelledOpenGraph::neighbours(VertexId v) const {
    const auto it = adj_.find(v);
    if (it == adj_.end()) {
        throw UnknownVertexError("unknown vertex id " + std::to_string(v));
    }
    return it->second;
}

VertexSet LabelledOpenGraph::vertices() const {
    VertexSet vs;
    for (const auto& [v, nbrs] : adj_) {
        vs.insert(v);
    }
    return vs;
}

std::set<std::pair<VertexId, VertexId>> LabelledOpenGraph::edges() const {
    std::set<std::pair<VertexId, VertexId>> es;
    for (const auto& [v, nbrs] : adj_) {
        for (const VertexId w : nbrs) {
            if (v < w) {
                es.emplace(v, w);
            }
        }
    }
    return es;
}

std::optional<MeasLabel> LabelledOpenGraph::label(VertexId v) const {
    const auto it = labels_.find(v);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return it->second;
}

VertexSet LabelledOpenGraph::measuredVertices() const {
    VertexSet vs;
    for (const auto& [v, nbrs] : adj_) {
        if (!isOutput(v)) {
            vs.insert(v);
        }
    }
    return vs;
}

VertexSet LabelledOpenGraph::oddNeighbourhood(const VertexSet& s) const {
    for (const VertexId v : s) {
        requireVertex(v);
    }
    VertexSet odd;
    for (const auto& [v, nbrs] : adj_) {
        std::size_t count = 0;
        for (const VertexId w : nbrs) {
            if (s.count(w) > 0) {
                ++count;
            }
        }
        if (count % 2 == 1) {
            odd.insert(v);
        }
    }
    return odd;
}

LabelledOpenGraph LabelledOpenGraph::localComplemented(VertexId u) const {
    requireVertex(u);
    LabelledOpenGraph g = *this;
    const VertexSet& nbrs = neighbours(u);
    for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
        for (auto jt = std::next(it); jt != nbrs.end(); ++jt) {
            g.toggleEdge(*it, *jt);
        }
    }
    return g;
}

LabelledOpenGraph LabelledOpenGraph::pivoted(VertexId u, VertexId v) const {
    if (!hasEdge(u, v)) {
        throw PreconditionError("pivot requires an edge");
    }
    LabelledOpenGraph g = *this;
    const VertexSet& nu = neighbours(u);
    const VertexSet& nv = neighbours(v);
    VertexSet exclusiveU;
    VertexSet exclusiveV;
    VertexSet common;
    for (const VertexId w : nu) {
        if (w == v) {
            continue;
        }
        if (nv.count(w) > 0) {
            common.insert(w);
        } else {
            exclusiveU.insert(w);
        }
    }
    for (const VertexId w : nv) {
        if (w != u && nu.count(w) == 0) {
            exclusiveV.insert(w);
        }
    }
    auto togglePairs = [&g](const VertexSet& a, const VertexSet& b) {
        for (const VertexId x : a) {
            for (const VertexId y : b) {
                g.toggleEdge(x, y);
            }
        }
    };
    togglePairs(exclusiveU, exclusiveV);
    togglePairs(exclusiveU, common);
    togglePairs(exclusiveV, common);
    // Exchange u and v: u takes v's adjacency and vice versa (the u-v edge
    // itself is preserved).
    const VertexSet newNbrsU = [&] {
        VertexSet s = g.neighbours(v);
        s.erase(u);
        s.insert(v);
        return s;
    }();
    const VertexSet newNbrsV = [&] {
        VertexSet s = g.neighbours(u);
        s.erase(v);
        s.insert(u);
        return s;
    }();
    for (const VertexId w : VertexSet(g.neighbours(u))) {
        g.removeEdge(u, w);
    }
    for (const VertexId w : VertexSet(g.neighbours(v))) {
        g.removeEdge(v, w);
    }
    for (const VertexId w : newNbrsU) {
        if (w != u) {
            g.addEdge(u, w);
        }
    }
    for (const VertexId w : newNbrsV) {
        if (w != v) {
            g.addEdge(v, w);
        }
    }
    return g;
}

void LabelledOpenGraph::validate() const {
    for (const auto& [v, l] : labels_) {
        if (!hasVertex(v)) {
            throw MalformedDiagramError("label on unknown vertex");
        }
        if (isOutput(v)) {
            throw MalformedDiagramError("label on output vertex");
        }
    }
    for (const auto& [v, nbrs] : adj_) {
        if (!isOutput(v) && labels_.count(v) == 0) {
            throw MalformedDiagramError("non-output vertex without measurement label");
        }
    }
    for (const VertexId v : inputs_) {
        if (!hasVertex(v)) {
            throw MalformedDiagramError("unknown input vertex");
        }
    }
    for (const VertexId v : outputs_) {
        if (!hasVertex(v)) {
            throw MalformedDiagramError("unknown output vertex");
        }
    }
}

} // namespace zxcf
