#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zxcf/errors.hpp"
#include "zxcf/random_diagram.hpp"

#include <random>

using namespace zxcf;

namespace {

std::mt19937_64 rng(31);

} // namespace

TEST_CASE("basic graph editing") {
    LabelledOpenGraph g;
    g.addVertex(0);
    g.addVertex(1);
    g.addVertex(2);
    g.addEdge(0, 1);
    CHECK(g.hasEdge(1, 0));
    g.toggleEdge(0, 1);
    CHECK_FALSE(g.hasEdge(0, 1));
    g.toggleEdge(0, 1);
    g.addEdge(1, 2);
    CHECK(g.neighbours(1) == VertexSet{0, 2});
    g.removeVertex(1);
    CHECK(g.vertices() == VertexSet{0, 2});
    CHECK(g.neighbours(0).empty());
    CHECK_THROWS_AS(static_cast<void>(g.neighbours(1)), UnknownVertexError);
}

TEST_CASE("odd neighbourhood is linear over symmetric difference") {
    for (int trial = 0; trial < 200; ++trial) {
        const LabelledOpenGraph g = randomLabelledGraph(rng, 2 + static_cast<int>(rng() % 6));
        const VertexSet vs = g.vertices();
        VertexSet a, b;
        for (const VertexId v : vs) {
            if (rng() % 2) {
                a.insert(v);
            }
            if (rng() % 2) {
                b.insert(v);
            }
        }
        VertexSet symDiff;
        for (const VertexId v : vs) {
            if (a.count(v) != b.count(v)) {
                symDiff.insert(v);
            }
        }
        const VertexSet oddA = g.oddNeighbourhood(a);
        const VertexSet oddB = g.oddNeighbourhood(b);
        VertexSet expected;
        for (const VertexId v : vs) {
            if (oddA.count(v) != oddB.count(v)) {
                expected.insert(v);
            }
        }
        CHECK(g.oddNeighbourhood(symDiff) == expected);
    }
}

TEST_CASE("odd neighbourhood by direct count") {
    for (int trial = 0; trial < 200; ++trial) {
        const LabelledOpenGraph g = randomLabelledGraph(rng, 1 + static_cast<int>(rng() % 6));
        VertexSet s;
        for (const VertexId v : g.vertices()) {
            if (rng() % 2) {
                s.insert(v);
            }
        }
        const VertexSet odd = g.oddNeighbourhood(s);
        for (const VertexId v : g.vertices()) {
            int count = 0;
            for (const VertexId w : g.neighbours(v)) {
                count += s.count(w) ? 1 : 0;
            }
            CHECK((count % 2 == 1) == (odd.count(v) > 0));
        }
    }
}

TEST_CASE("local complementation is an involution and only touches N(u)") {
    for (int trial = 0; trial < 200; ++trial) {
        const LabelledOpenGraph g = randomLabelledGraph(rng, 2 + static_cast<int>(rng() % 6));
        const VertexSet vs = g.vertices();
        auto it = vs.begin();
        std::advance(it, static_cast<long>(rng() % vs.size()));
        const VertexId u = *it;
        const LabelledOpenGraph h = g.localComplemented(u);
        CHECK(h.localComplemented(u) == g);
        CHECK(h.neighbours(u) == g.neighbours(u));
        for (const auto& [a, b] : g.edges()) {
            const bool inside = g.hasEdge(u, a) && g.hasEdge(u, b);
            CHECK(h.hasEdge(a, b) == (inside ? false : true));
        }
        for (const auto& [a, b] : h.edges()) {
            const bool inside = g.hasEdge(u, a) && g.hasEdge(u, b);
            if (!inside) {
                CHECK(g.hasEdge(a, b));
            }
        }
    }
}

TEST_CASE("pivot equals the triple local complementation") {
    int done = 0;
    while (done < 200) {
        const LabelledOpenGraph g = randomLabelledGraph(rng, 2 + static_cast<int>(rng() % 6));
        const auto edges = g.edges();
        if (edges.empty()) {
            continue;
        }
        auto it = edges.begin();
        std::advance(it, static_cast<long>(rng() % edges.size()));
        const auto [u, v] = *it;
        const LabelledOpenGraph direct = g.pivoted(u, v);
        const LabelledOpenGraph triple =
            g.localComplemented(u).localComplemented(v).localComplemented(u);
        CHECK(direct == triple);
        CHECK(direct.pivoted(u, v) == g);
        ++done;
    }
}

TEST_CASE("pivot requires an edge") {
    LabelledOpenGraph g;
    g.addVertex(0);
    g.addVertex(1);
    g.setOutput(0, true);
    g.setOutput(1, true);
    CHECK_THROWS_AS(static_cast<void>(g.pivoted(0, 1)), PreconditionError);
}

TEST_CASE("validate enforces label totality") {
    LabelledOpenGraph g;
    g.addVertex(0);
    g.addVertex(1);
    g.setOutput(1, true);
    CHECK_THROWS_AS(g.validate(), MalformedDiagramError); // 0 unlabelled
    g.setLabel(0, MeasLabel::XY);
    CHECK_NOTHROW(g.validate());
    CHECK_THROWS_AS(g.setLabel(1, MeasLabel::X), MalformedDiagramError); // output
}
