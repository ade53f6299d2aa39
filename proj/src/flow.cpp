#include "zxcf/flow.hpp"

#include "zxcf/bitmatrix.hpp"
#include "zxcf/errors.hpp"

#include <algorithm>
#include <vector>

namespace zxcf {

namespace {

// Condition 1 exempts corrections on X/Y-measured vertices from ordering;
// condition 2 exempts Y/Z. Outputs carry no label and are never exempt.
bool orderedByCond1(const std::optional<MeasLabel>& l) {
    return !(l == MeasLabel::X || l == MeasLabel::Y);
}

bool orderedByCond2(const std::optional<MeasLabel>& l) {
    return !(l == MeasLabel::Y || l == MeasLabel::Z);
}

// Forced order edges implied by f.p at u: targets that every valid order
// must place after u. Condition 3 forces an edge exactly when membership in
// p(u) and in Odd(p(u)) disagree for a Y-labelled vertex.
VertexSet forcedSuccessors(const LabelledOpenGraph& g, VertexId u, const VertexSet& pu) {
    const VertexSet odd = g.oddNeighbourhood(pu);
    VertexSet out;
    for (const VertexId v : pu) {
        if (v != u && orderedByCond1(g.label(v))) {
            out.insert(v);
        }
    }
    for (const VertexId v : odd) {
        if (v != u && orderedByCond2(g.label(v))) {
            out.insert(v);
        }
    }
    for (const VertexId v : g.vertices()) {
        if (v != u && g.label(v) == MeasLabel::Y && pu.count(v) != odd.count(v)) {
            out.insert(v);
        }
    }
    return out;
}

bool localConditionsHold(const LabelledOpenGraph& g, VertexId u, const VertexSet& pu) {
    const VertexSet odd = g.oddNeighbourhood(pu);
    const bool inP = pu.count(u) > 0;
    const bool inOdd = odd.count(u) > 0;
    switch (*g.label(u)) {
        case MeasLabel::XY: return !inP && inOdd;
        case MeasLabel::XZ: return inP && inOdd;
        case MeasLabel::YZ: return inP && !inOdd;
        case MeasLabel::X: return inOdd;
        case MeasLabel::Z: return inP;
        case MeasLabel::Y: return inP != inOdd;
    }
    return false;
}

} // namespace

std::map<VertexId, VertexSet> orderClosure(const PauliFlow& f) {
    std::map<VertexId, VertexSet> adj;
    for (const auto& [a, b] : f.order) {
        if (a == b) {
            throw MalformedFlowError("order contains a self-loop");
        }
        adj[a].insert(b);
    }
    std::map<VertexId, VertexSet> closure;
    std::map<VertexId, int> state; // 0 new, 1 in progress, 2 done
    auto dfs = [&](auto&& self, VertexId v) -> const VertexSet& {
        if (state[v] == 1) {
            throw MalformedFlowError("order is cyclic");
        }
        if (state[v] == 0) {
            state[v] = 1;
            VertexSet reach;
            const auto it = adj.find(v);
            if (it != adj.end()) {
                for (const VertexId w : it->second) {
                    reach.insert(w);
                    const VertexSet& sub = self(self, w);
                    reach.insert(sub.begin(), sub.end());
                }
            }
            closure[v] = std::move(reach);
            state[v] = 2;
        }
        return closure[v];
    };
    for (const auto& [a, b] : adj) {
        dfs(dfs, a);
    }
    return closure;
}

std::optional<FlowViolation> verifyFlow(const LabelledOpenGraph& g, const PauliFlow& f) {
    const VertexSet measured = g.measuredVertices();
    VertexSet domain;
    for (const auto& [u, pu] : f.p) {
        domain.insert(u);
    }
    if (domain != measured) {
        throw MalformedFlowError("domain of p is not V minus outputs");
    }
    for (const auto& [u, pu] : f.p) {
        for (const VertexId v : pu) {
            if (!g.hasVertex(v)) {
                throw MalformedFlowError("correction set references an unknown vertex");
            }
            if (g.isInput(v)) {
                throw MalformedFlowError("correction set contains an input vertex");
            }
        }
    }
    for (const auto& [a, b] : f.order) {
        if (!g.hasVertex(a) || !g.hasVertex(b)) {
            throw MalformedFlowError("order references an unknown vertex");
        }
    }
    const auto closure = orderClosure(f);
    auto prec = [&](VertexId a, VertexId b) {
        const auto it = closure.find(a);
        return it != closure.end() && it->second.count(b) > 0;
    };

    const VertexSet allVerts = g.vertices();
    for (const auto& [u, pu] : f.p) {
        const VertexSet odd = g.oddNeighbourhood(pu);
        for (const VertexId v : pu) {
            if (v != u && orderedByCond1(g.label(v)) && !prec(u, v)) {
                return FlowViolation{u, 1, v};
            }
        }
        for (const VertexId v : odd) {
            if (v != u && orderedByCond2(g.label(v)) && !prec(u, v)) {
                return FlowViolation{u, 2, v};
            }
        }
        for (const VertexId v : allVerts) {
            if (v != u && g.label(v) == MeasLabel::Y && !prec(u, v) &&
                pu.count(v) != odd.count(v)) {
                return FlowViolation{u, 3, v};
            }
        }
        const bool inP = pu.count(u) > 0;
        const bool inOdd = odd.count(u) > 0;
        switch (*g.label(u)) {
            case MeasLabel::XY:
                if (inP || !inOdd) {
                    return FlowViolation{u, 4, u};
                }
                break;
            case MeasLabel::XZ:
                if (!inP || !inOdd) {
                    return FlowViolation{u, 5, u};
                }
                break;
            case MeasLabel::YZ:
                if (!inP || inOdd) {
                    return FlowViolation{u, 6, u};
                }
                break;
            case MeasLabel::X:
                if (!inOdd) {
                    return FlowViolation{u, 7, u};
                }
                break;
            case MeasLabel::Z:
                if (!inP) {
                    return FlowViolation{u, 8, u};
                }
                break;
            case MeasLabel::Y:
                if (inP == inOdd) {
                    return FlowViolation{u, 9, u};
                }
                break;
        }
    }
    return std::nullopt;
}

std::optional<PauliFlow> findFlow(const LabelledOpenGraph& g) {
    g.validate();
    const VertexSet measured = g.measuredVertices();
    VertexSet solved;
    PauliFlow flow;

    bool progress = true;
    while (progress && solved.size() < measured.size()) {
        progress = false;
        VertexSet newlySolved;
        for (const VertexId u : measured) {
            if (solved.count(u) > 0) {
                continue;
            }
            // Variables: vertices allowed in p(u). Anything measured X or Y
            // needs no ordering (conditions 1 and 3 handle it via linear
            // constraints); anything else must be u itself or already
            // behind us in the layering.
            std::vector<VertexId> vars;
            std::map<VertexId, int> varPos;
            for (const VertexId w : g.vertices()) {
                if (g.isInput(w)) {
                    continue;
                }
                const auto lw = g.label(w);
                if (w == u || solved.count(w) > 0 || g.isOutput(w) ||
                    lw == MeasLabel::X || lw == MeasLabel::Y) {
                    varPos[w] = static_cast<int>(vars.size());
                    vars.push_back(w);
                }
            }
            const int nv = static_cast<int>(vars.size());

            std::vector<std::pair<BitVec, bool>> rows;
            auto addRow = [&](const VertexSet& support, bool selfTerm, VertexId self, bool rhs) {
                BitVec r(static_cast<std::size_t>(nv), 0);
                for (const VertexId w : support) {
                    const auto it = varPos.find(w);
                    if (it != varPos.end()) {
                        r[static_cast<std::size_t>(it->second)] ^= 1;
                    }
                }
                if (selfTerm) {
                    const auto it = varPos.find(self);
                    if (it != varPos.end()) {
                        r[static_cast<std::size_t>(it->second)] ^= 1;
                    }
                }
                rows.emplace_back(std::move(r), rhs);
            };

            for (const VertexId v : g.vertices()) {
                if (v == u || g.isOutput(v) || solved.count(v) > 0) {
                    continue;
                }
                const MeasLabel lv = *g.label(v);
                if (lv == MeasLabel::X || lv == MeasLabel::XY || lv == MeasLabel::XZ ||
                    lv == MeasLabel::YZ) {
                    addRow(g.neighbours(v), false, v, false); // keep v out of Odd(p(u))
                } else if (lv == MeasLabel::Y) {
                    addRow(g.neighbours(v), true, v, false); // v in p(u) iff v in Odd(p(u))
                }
            }
            switch (*g.label(u)) {
                case MeasLabel::XY:
                    addRow({}, true, u, false);
                    addRow(g.neighbours(u), false, u, true);
                    break;
                case MeasLabel::XZ:
                    addRow({}, true, u, true);
                    addRow(g.neighbours(u), false, u, true);
                    break;
                case MeasLabel::YZ:
                    addRow({}, true, u, true);
                    addRow(g.neighbours(u), false, u, false);
                    break;
                case MeasLabel::X:
                    addRow(g.neighbours(u), false, u, true);
                    break;
                case MeasLabel::Z:
                    addRow({}, true, u, true);
                    break;
                case MeasLabel::Y:
                    addRow(g.neighbours(u), true, u, true);
                    break;
            }

            BitMatrix m(static_cast<int>(rows.size()), nv);
            BitVec rhs(rows.size(), 0);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                m.setRow(static_cast<int>(r), rows[r].first);
                rhs[r] = rows[r].second ? 1 : 0;
            }
            const RrefResult red = rref(m, rhs);
            if (!red.consistent) {
                continue;
            }
            VertexSet pu;
            for (std::size_t r = 0; r < red.pivots.size(); ++r) {
                if (red.augment[r] != 0) {
                    pu.insert(vars[static_cast<std::size_t>(red.pivots[r])]);
                }
            }
            flow.p[u] = pu;
            newlySolved.insert(u);
            progress = true;
        }
        solved.insert(newlySolved.begin(), newlySolved.end());
    }

    if (solved.size() < measured.size()) {
        return std::nullopt;
    }
    for (const auto& [u, pu] : flow.p) {
        for (const VertexId v : forcedSuccessors(g, u, pu)) {
            flow.order.emplace(u, v);
        }
    }
    if (verifyFlow(g, flow).has_value()) {
        throw Error("internal error: constructed flow failed verification");
    }
    return flow;
}

bool bruteForceFlowExists(const LabelledOpenGraph& g, int maxMeasured, int maxNonInput) {
    g.validate();
    std::vector<VertexId> measured;
    for (const VertexId v : g.measuredVertices()) {
        measured.push_back(v);
    }
    std::vector<VertexId> correctors;
    for (const VertexId v : g.vertices()) {
        if (!g.isInput(v)) {
            correctors.push_back(v);
        }
    }
    if (static_cast<int>(measured.size()) > maxMeasured) {
        throw SizeLimitError("too many measured vertices for the brute-force oracle");
    }
    if (static_cast<int>(correctors.size()) > maxNonInput) {
        throw SizeLimitError("too many non-input vertices for the brute-force oracle");
    }
    const int nm = static_cast<int>(measured.size());
    if (nm == 0) {
        return true;
    }
    std::map<VertexId, int> measuredPos;
    for (int j = 0; j < nm; ++j) {
        measuredPos[measured[static_cast<std::size_t>(j)]] = j;
    }

    // Per vertex: the distinct forced-successor masks (over measured
    // vertices; edges toward outputs can never close a cycle).
    std::vector<std::vector<std::uint32_t>> options(static_cast<std::size_t>(nm));
    for (int j = 0; j < nm; ++j) {
        const VertexId u = measured[static_cast<std::size_t>(j)];
        std::set<std::uint32_t> masks;
        for (std::uint32_t sel = 0; sel < (1U << correctors.size()); ++sel) {
            VertexSet pu;
            for (std::size_t c = 0; c < correctors.size(); ++c) {
                if ((sel >> c) & 1U) {
                    pu.insert(correctors[c]);
                }
            }
            if (!localConditionsHold(g, u, pu)) {
                continue;
            }
            std::uint32_t mask = 0;
            for (const VertexId v : forcedSuccessors(g, u, pu)) {
                const auto it = measuredPos.find(v);
                if (it != measuredPos.end()) {
                    mask |= 1U << it->second;
                }
            }
            masks.insert(mask);
        }
        if (masks.empty()) {
            return false;
        }
        options[static_cast<std::size_t>(j)].assign(masks.begin(), masks.end());
    }

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(nm), 0);
    auto acyclicSoFar = [&](int assigned) {
        // Reachability closure over the first `assigned` vertices' edges.
        std::vector<std::uint32_t> reach(adj.begin(), adj.end());
        for (int k = 0; k < nm; ++k) {
            for (int i = 0; i < nm; ++i) {
                std::uint32_t r = reach[static_cast<std::size_t>(i)];
                std::uint32_t add = 0;
                for (int t = 0; t < nm; ++t) {
                    if ((r >> t) & 1U) {
                        add |= reach[static_cast<std::size_t>(t)];
                    }
                }
                reach[static_cast<std::size_t>(i)] = r | add;
            }
        }
        for (int i = 0; i < assigned; ++i) {
            if ((reach[static_cast<std::size_t>(i)] >> i) & 1U) {
                return false;
            }
        }
        return true;
    };
    auto dfs = [&](auto&& self, int j) -> bool {
        if (j == nm) {
            return true;
        }
        for (const std::uint32_t mask : options[static_cast<std::size_t>(j)]) {
            adj[static_cast<std::size_t>(j)] = mask;
            if (acyclicSoFar(j + 1) && self(self, j + 1)) {
                return true;
            }
        }
        adj[static_cast<std::size_t>(j)] = 0;
        return false;
    };
    return dfs(dfs, 0);
}

} // namespace zxcf
