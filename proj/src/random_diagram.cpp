#include "zxcf/random_diagram.hpp"

#include "zxcf/errors.hpp"
#include "zxcf/flow.hpp"

#include <vector>

namespace zxcf {

namespace {

Diagram sampleDiagram(Rng& rng, const RandomDiagramOptions& o) {
    Diagram d;
    for (int v = 0; v < o.vertices; ++v) {
        d.graph.addVertex(v);
    }
    for (int a = 0; a < o.vertices; ++a) {
        for (int b = a + 1; b < o.vertices; ++b) {
            if (rng() % 2) {
                d.graph.addEdge(a, b);
            }
        }
    }
    bool anyOutput = false;
    for (int v = 0; v < o.vertices; ++v) {
        const auto role = rng() % (o.withInputs ? 4 : 2);
        if (role == 0 || (!anyOutput && v == o.vertices - 1)) {
            d.graph.setOutput(v, true);
            anyOutput = true;
            if (rng() % 2) {
                d.setOutputWord(v, cliffordRegistry()[rng() % 24].word);
            }
        } else if (role == 2) {
            d.graph.setInput(v, true);
            d.graph.setOutput(v, true);
            anyOutput = true;
            if (rng() % 2) {
                d.setOutputWord(v, cliffordRegistry()[rng() % 24].word);
            }
            if (rng() % 2) {
                d.setInputWord(v, cliffordRegistry()[rng() % 24].word);
            }
        } else {
            if (role == 3) {
                d.graph.setInput(v, true);
                if (rng() % 2) {
                    d.setInputWord(v, cliffordRegistry()[rng() % 24].word);
                }
            }
            const auto basis = static_cast<MeasBasis>(rng() % 3);
            d.setMeasurement(v, {basis, rng() % 2 ? Sign::Plus : Sign::Minus});
        }
    }
    return d;
}

} // namespace

Diagram randomDiagram(Rng& rng, const RandomDiagramOptions& o) {
    for (int attempt = 0; attempt < o.maxAttempts; ++attempt) {
        Diagram d = sampleDiagram(rng, o);
        if (!o.ensureFlow || findFlow(d.graph)) {
            return d;
        }
    }
    throw Error("no diagram with flow found within the attempt budget");
}

LabelledOpenGraph randomLabelledGraph(Rng& rng, int vertices, bool pauliOnly) {
    LabelledOpenGraph g;
    for (int v = 0; v < vertices; ++v) {
        g.addVertex(v);
    }
    for (int a = 0; a < vertices; ++a) {
        for (int b = a + 1; b < vertices; ++b) {
            if (rng() % 2) {
                g.addEdge(a, b);
            }
        }
    }
    for (int v = 0; v < vertices; ++v) {
        const auto role = rng() % 4;
        if (role == 0) {
            g.setOutput(v, true);
            continue;
        }
        if (role == 3) {
            g.setInput(v, true);
        }
        g.setLabel(v, static_cast<MeasLabel>(rng() % (pauliOnly ? 3 : 6)));
    }
    return g;
}

std::optional<std::pair<Diagram, RewriteStep>> randomRewrite(Rng& rng, const Diagram& d) {
    const VertexSet vset = d.graph.vertices();
    const std::vector<VertexId> verts(vset.begin(), vset.end());
    if (verts.empty()) {
        return std::nullopt;
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        const VertexId u = verts[rng() % verts.size()];
        try {
            switch (rng() % 6) {
                case 0:
                    return lcRewrite(d, u);
                case 1: {
                    const VertexSet& nb = d.graph.neighbours(u);
                    if (nb.empty()) {
                        break;
                    }
                    auto it = nb.begin();
                    std::advance(it, static_cast<long>(rng() % nb.size()));
                    return pivotRewrite(d, u, *it);
                }
                case 2:
                    if (!d.graph.isInput(u) && d.measurements.count(u) &&
                        d.measurements.at(u).basis == MeasBasis::Z) {
                        return zDelete(d, u);
                    }
                    break;
                case 3: {
                    VertexSet w;
                    for (const VertexId v : verts) {
                        if (rng() % 2) {
                            w.insert(v);
                        }
                    }
                    return zInsert(d, w, rng() % 2 ? Sign::Plus : Sign::Minus);
                }
                case 4:
                    if (d.graph.isInput(u) && d.measurements.count(u) &&
                        d.measurements.at(u).basis != MeasBasis::Z) {
                        return bendInput(d, u);
                    }
                    break;
                case 5:
                    if (d.graph.isInput(u) && d.graph.isOutput(u)) {
                        return splitBoundary(d, u);
                    }
                    break;
            }
        } catch (const PreconditionError&) {
        }
    }
    return std::nullopt;
}

} // namespace zxcf
