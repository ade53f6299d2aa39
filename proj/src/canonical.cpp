#include "zxcf/canonical.hpp"

#include "zxcf/errors.hpp"
#include "zxcf/flow.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

namespace zxcf {

namespace {

// Vertex operators are tracked modulo right multiplication by X phases: a
// self local complementation composes X(1) on the spider side, so those
// cosets are the colour of a vertex. The six cosets are represented by
// Z(0..3) (green) and X(1)Z(1), X(1)Z(3) (red) while building rGS-LC form,
// and by Z(0..3), H, H Z(2) in phase-polynomial form.
struct ClassTables {
    std::array<int, 4> green{};
    int redA = 0, redB = 0; // X(1)Z(1), X(1)Z(3)
    int had = 0, hadZ2 = 0; // H, H Z(2)
};

const ClassTables& classTables() {
    static const ClassTables t = [] {
        ClassTables c;
        for (int k = 0; k < 4; ++k) {
            c.green[k] = cliffordClassIndex(zPhase(k));
        }
        c.redA = cliffordClassIndex(xPhase(1) * zPhase(1));
        c.redB = cliffordClassIndex(xPhase(1) * zPhase(3));
        c.had = cliffordClassIndex(hadamard());
        c.hadZ2 = cliffordClassIndex(hadamard() * zPhase(2));
        return c;
    }();
    return t;
}

int outputClass(const Diagram& d, VertexId v) {
    return cliffordClassIndex(wordMatrix(d.outputWord(v)));
}

bool inSet(int cls, const std::set<int>& reps) { return reps.count(cls) > 0; }

// Each right X-coset of the Clifford group contains exactly one member of a
// full representative set, reachable by 0..3 self local complementations.
int shiftInto(const Mat2& m, const std::set<int>& reps) {
    for (int t = 0; t < 4; ++t) {
        if (inSet(cliffordClassIndex(m * xPhase(t)), reps)) {
            return t;
        }
    }
    throw Error("representative set does not cover this coset");
}

void applyLc(Diagram& cur, RewriteTrace& trace, VertexId v, int times = 1) {
    for (int i = 0; i < times; ++i) {
        auto [next, step] = lcRewrite(cur, v);
        cur = std::move(next);
        trace.push_back(step);
    }
}

void applyPivot(Diagram& cur, RewriteTrace& trace, VertexId u, VertexId v) {
    auto [next, step] = pivotRewrite(cur, u, v);
    cur = std::move(next);
    trace.push_back(step);
}

// Brings every vertex operator into the representative set by self local
// complementations. Terminates: a neighbour Z(3) composition keeps green
// cosets green and turns red cosets green, so the red count never grows and
// every round without a red-to-green flip is final.
void normalizeWords(Diagram& cur, RewriteTrace& trace, const std::set<int>& reps) {
    const int n = static_cast<int>(cur.graph.vertices().size());
    const int cap = 4 * (n + 2) * (n + 2);
    for (int round = 0; round < cap; ++round) {
        bool changed = false;
        for (const VertexId v : cur.graph.vertices()) {
            const Mat2 m = wordMatrix(cur.outputWord(v));
            const int t = shiftInto(m, reps);
            if (t != 0) {
                applyLc(cur, trace, v, t);
                changed = true;
            }
        }
        if (!changed) {
            return;
        }
    }
    throw Error("vertex operator normalization did not stabilize");
}

void requireGraphState(const Diagram& d, const char* who) {
    if (!d.graph.inputs().empty() || !d.graph.measuredVertices().empty()) {
        throw PreconditionError(std::string(who) + " expects a diagram with outputs only");
    }
}

std::set<int> rgslcReps() {
    const auto& t = classTables();
    return {t.green[0], t.green[1], t.green[2], t.green[3], t.redA, t.redB};
}

std::set<int> phasePolyReps() {
    const auto& t = classTables();
    return {t.green[0], t.green[1], t.green[2], t.green[3], t.had, t.hadZ2};
}

bool isRgslcRed(int cls) {
    const auto& t = classTables();
    return cls == t.redA || cls == t.redB;
}

void toRgslcIn(Diagram& cur, RewriteTrace& trace) {
    const std::set<int> reps = rgslcReps();
    normalizeWords(cur, trace, reps);
    // Clash removal: a pivot about a red-red edge turns both endpoints
    // green, so the number of red vertices strictly decreases.
    const int cap = static_cast<int>(cur.graph.vertices().size()) / 2 + 1;
    for (int round = 0; round < cap; ++round) {
        std::optional<std::pair<VertexId, VertexId>> clash;
        for (const auto& [a, b] : cur.graph.edges()) {
            if (isRgslcRed(outputClass(cur, a)) && isRgslcRed(outputClass(cur, b))) {
                clash = {a, b};
                break;
            }
        }
        if (!clash) {
            return;
        }
        applyPivot(cur, trace, clash->first, clash->second);
        normalizeWords(cur, trace, reps);
    }
    throw Error("clash removal did not terminate");
}

void rgslcToPhasePolyIn(Diagram& cur, RewriteTrace& trace) {
    const auto& t = classTables();
    const std::set<int> redTargets = {t.had, t.hadZ2};
    for (const VertexId v : cur.graph.vertices()) {
        const Mat2 m = wordMatrix(cur.outputWord(v));
        if (!isRgslcRed(cliffordClassIndex(m))) {
            continue;
        }
        int shift = 0;
        for (int k = 1; k < 4; ++k) {
            if (inSet(cliffordClassIndex(m * xPhase(k)), redTargets)) {
                shift = k;
                break;
            }
        }
        if (shift == 0) {
            throw Error("red vertex operator has no Hadamard-form representative");
        }
        applyLc(cur, trace, v, shift);
    }
}

void phasePolyToCanonicalIn(Diagram& cur, RewriteTrace& trace) {
    const std::set<int> reps = phasePolyReps();
    PhasePolyDiagram p = presentPhasePoly(cur);
    const int cap = laterConnectionCount(p) + 1;
    for (int round = 0; round < cap; ++round) {
        const int metric = laterConnectionCount(p);
        if (metric == 0) {
            return;
        }
        // Minimal red spider with a later green neighbour, against its
        // maximal green neighbour.
        int dk = -1;
        for (const auto& [a, b] : p.plainEdges) {
            if (p.spiders[a].red && !p.spiders[b].red) {
                dk = (dk < 0) ? a : std::min(dk, a);
            }
        }
        int fh = -1;
        for (const auto& [a, b] : p.plainEdges) {
            if (a == dk && !p.spiders[b].red) {
                fh = std::max(fh, b);
            }
            if (b == dk && !p.spiders[a].red) {
                fh = std::max(fh, a);
            }
        }
        if (dk < 0 || fh < 0) {
            throw Error("inconsistent later-connection bookkeeping");
        }
        if (p.spiders[fh].phase % 2 == 1) {
            applyLc(cur, trace, fh);
            applyLc(cur, trace, dk);
        } else {
            applyPivot(cur, trace, fh, dk);
        }
        normalizeWords(cur, trace, reps);
        p = presentPhasePoly(cur);
        if (laterConnectionCount(p) >= metric) {
            throw Error("later-connection count failed to decrease");
        }
    }
    throw Error("canonicalization loop exceeded its bound");
}

// Shared interior elimination. Z-measured interior vertices are deleted;
// a Y becomes Z after a local complementation about it; an X becomes Z
// after a pivot with a neighbour. Every two iterations remove a vertex.
void eliminateInteriorIn(Diagram& cur, RewriteTrace& trace) {
    auto interior = [&](VertexId v) {
        return !cur.graph.isInput(v) && !cur.graph.isOutput(v);
    };
    const int cap = 2 * static_cast<int>(cur.graph.measuredVertices().size()) + 8;
    for (int round = 0; round < cap; ++round) {
        std::optional<VertexId> firstZ, firstY, firstX;
        for (const VertexId v : cur.graph.measuredVertices()) {
            if (!interior(v)) {
                continue;
            }
            switch (cur.measurements.at(v).basis) {
                case MeasBasis::Z:
                    if (!firstZ) firstZ = v;
                    break;
                case MeasBasis::Y:
                    if (!firstY) firstY = v;
                    break;
                case MeasBasis::X:
                    if (!firstX) firstX = v;
                    break;
            }
        }
        if (firstZ) {
            auto [next, step] = zDelete(cur, *firstZ);
            cur = std::move(next);
            trace.push_back(step);
            continue;
        }
        if (firstY) {
            applyLc(cur, trace, *firstY);
            continue;
        }
        if (firstX) {
            const VertexId u = *firstX;
            const VertexSet& nb = cur.graph.neighbours(u);
            if (nb.empty()) {
                throw Error("isolated X-measured interior vertex (no flow)");
            }
            std::optional<VertexId> partner;
            for (const VertexId w : nb) { // outputs first
                if (cur.graph.isOutput(w)) { partner = w; break; }
            }
            if (!partner) {
                for (const VertexId w : nb) { // then non-inputs
                    if (!cur.graph.isInput(w)) { partner = w; break; }
                }
            }
            if (!partner) {
                partner = *nb.begin();
            }
            applyPivot(cur, trace, u, *partner);
            continue;
        }
        return;
    }
    throw Error("interior elimination did not terminate");
}

} // namespace

PhasePolyDiagram presentPhasePoly(const Diagram& d) {
    requireGraphState(d, "presentPhasePoly");
    const VertexSet vs = d.graph.vertices();
    const int n = static_cast<int>(vs.size());
    {
        int expect = 0;
        for (const VertexId v : vs) {
            if (v != expect++) {
                throw MalformedDiagramError("vertices must be exactly 0..n-1");
            }
        }
    }
    const auto& t = classTables();
    PhasePolyDiagram p;
    p.spiders.resize(n);
    for (const VertexId v : vs) {
        const int cls = outputClass(d, v);
        bool found = false;
        for (int k = 0; k < 4; ++k) {
            if (cls == t.green[k]) {
                p.spiders[v] = {false, k};
                found = true;
            }
        }
        if (cls == t.had) {
            p.spiders[v] = {true, 0};
            found = true;
        } else if (cls == t.hadZ2) {
            p.spiders[v] = {true, 1};
            found = true;
        }
        if (!found) {
            throw MalformedDiagramError("vertex operator outside phase-polynomial form");
        }
    }
    for (const auto& [a, b] : d.graph.edges()) {
        if (p.spiders[a].red || p.spiders[b].red) {
            p.plainEdges.emplace(a, b);
        } else {
            p.hEdges.emplace(a, b);
        }
    }
    p.validate();
    return p;
}

int laterConnectionCount(const PhasePolyDiagram& p) {
    int n = 0;
    for (const auto& [a, b] : p.plainEdges) {
        if (p.spiders[a].red && !p.spiders[b].red) {
            ++n;
        }
    }
    return n;
}

StageResult eliminateInterior(const Diagram& d) {
    d.validate();
    if (!findFlow(d.graph)) {
        throw NoFlowError("interior elimination requires Pauli flow");
    }
    StageResult r{d, {}};
    eliminateInteriorIn(r.diagram, r.trace);
    return r;
}

StageResult toRgslc(const Diagram& d) {
    d.validate();
    requireGraphState(d, "toRgslc");
    StageResult r{d, {}};
    toRgslcIn(r.diagram, r.trace);
    return r;
}

StageResult rgslcToPhasePoly(const Diagram& d) {
    d.validate();
    requireGraphState(d, "rgslcToPhasePoly");
    StageResult r{d, {}};
    rgslcToPhasePolyIn(r.diagram, r.trace);
    return r;
}

StageResult phasePolyToCanonical(const Diagram& d) {
    d.validate();
    StageResult r{d, {}};
    phasePolyToCanonicalIn(r.diagram, r.trace);
    return r;
}

CanonicalizeResult canonicalize(const Diagram& d) {
    d.validate();
    if (!findFlow(d.graph)) {
        throw NoFlowError("canonicalize requires Pauli flow");
    }
    Diagram cur = d;
    RewriteTrace trace;

    // Bend every input to an output, splitting input-output vertices first.
    // Wire positions are tracked so the canonical qubit order matches the
    // original wire order.
    std::vector<VertexId> wireVerts;
    std::vector<bool> wireIsInput;
    for (const Wire& w : cur.wires()) {
        wireVerts.push_back(w.vertex);
        wireIsInput.push_back(w.isInput);
    }
    const VertexSet inputs = cur.graph.inputs();
    for (const VertexId u : inputs) {
        if (cur.graph.isOutput(u)) {
            auto [next, step] = splitBoundary(cur, u);
            cur = std::move(next);
            for (std::size_t k = 0; k < wireVerts.size(); ++k) {
                if (wireVerts[k] == u && !wireIsInput[k]) {
                    wireVerts[k] = step.v;
                }
            }
            trace.push_back(step);
        }
        auto [next, step] = bendInput(cur, u);
        cur = std::move(next);
        trace.push_back(step);
    }

    eliminateInteriorIn(cur, trace);

    // Only the wire vertices remain; relabel them to 0..n-1 in wire order.
    RewriteStep rel;
    rel.kind = RewriteStep::Kind::Relabel;
    for (std::size_t k = 0; k < wireVerts.size(); ++k) {
        rel.relabel[wireVerts[k]] = static_cast<VertexId>(k);
    }
    cur = applyStep(cur, rel);
    trace.push_back(rel);

    toRgslcIn(cur, trace);
    rgslcToPhasePolyIn(cur, trace);
    phasePolyToCanonicalIn(cur, trace);

    CanonicalizeResult out;
    out.canonical = presentPhasePoly(cur);
    out.endDiagram = std::move(cur);
    out.trace = std::move(trace);
    return out;
}

std::optional<RewriteTrace> decideEquiv(const Diagram& a, const Diagram& b) {
    if (a.graph.inputs().size() != b.graph.inputs().size() ||
        a.wires().size() != b.wires().size()) {
        return std::nullopt;
    }
    const CanonicalizeResult ra = canonicalize(a);
    const CanonicalizeResult rb = canonicalize(b);
    if (ra.canonical != rb.canonical) {
        return std::nullopt;
    }
    RewriteTrace t = ra.trace;
    const RewriteTrace back = invertTrace(rb.trace);
    t.insert(t.end(), back.begin(), back.end());
    return t;
}

} // namespace zxcf
