#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zxcf/errors.hpp"
#include "zxcf/flow.hpp"
#include "zxcf/random_diagram.hpp"
#include "zxcf/rewrite.hpp"

#include <random>

using namespace zxcf;

namespace {

std::mt19937_64 rng(101);

// Straightforward transliteration of the nine flow conditions, written
// independently of the library verifier (naive transitive closure, direct
// set arithmetic) as a double-entry check.
bool naiveValid(const LabelledOpenGraph& g, const PauliFlow& f) {
    const VertexSet vs = g.vertices();
    const VertexSet measured = g.measuredVertices();
    // domain checks
    if (f.p.size() != measured.size()) {
        return false;
    }
    for (const auto& [u, pu] : f.p) {
        if (!measured.count(u)) {
            return false;
        }
        for (const VertexId v : pu) {
            if (!vs.count(v) || g.isInput(v)) {
                return false;
            }
        }
    }
    // transitive closure of the order; must stay irreflexive
    std::set<std::pair<VertexId, VertexId>> prec = f.order;
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& [a, b] : std::set<std::pair<VertexId, VertexId>>(prec)) {
            for (const auto& [c, d] : std::set<std::pair<VertexId, VertexId>>(prec)) {
                if (b == c && prec.emplace(a, d).second) {
                    grew = true;
                }
            }
        }
    }
    for (const VertexId v : vs) {
        if (prec.count({v, v})) {
            return false;
        }
    }
    const auto before = [&](VertexId a, VertexId b) { return prec.count({a, b}) > 0; };
    for (const VertexId u : measured) {
        const VertexSet& pu = f.p.at(u);
        const VertexSet odd = g.oddNeighbourhood(pu);
        const auto inP = [&](VertexId v) { return pu.count(v) > 0; };
        const auto inOdd = [&](VertexId v) { return odd.count(v) > 0; };
        for (const VertexId v : vs) {
            const auto l = g.label(v);
            if (inP(v) && v != u && !(l == MeasLabel::X || l == MeasLabel::Y) && !before(u, v)) {
                return false; // 1
            }
            if (inOdd(v) && v != u && !(l == MeasLabel::Y || l == MeasLabel::Z) &&
                !before(u, v)) {
                return false; // 2
            }
            if (v != u && !before(u, v) && l == MeasLabel::Y && inP(v) != inOdd(v)) {
                return false; // 3
            }
        }
        switch (*g.label(u)) {
            case MeasLabel::XY:
                if (inP(u) || !inOdd(u)) return false; // 4
                break;
            case MeasLabel::XZ:
                if (!inP(u) || !inOdd(u)) return false; // 5
                break;
            case MeasLabel::YZ:
                if (!inP(u) || inOdd(u)) return false; // 6
                break;
            case MeasLabel::X:
                if (!inOdd(u)) return false; // 7
                break;
            case MeasLabel::Z:
                if (!inP(u)) return false; // 8
                break;
            case MeasLabel::Y:
                if (inP(u) == inOdd(u)) return false; // 9
                break;
        }
    }
    return true;
}

PauliFlow tamper(const PauliFlow& f, const LabelledOpenGraph& g) {
    PauliFlow t = f;
    const VertexSet vs = g.vertices();
    if (vs.empty() || t.p.empty()) {
        return t;
    }
    const auto pick = [&](const auto& container) {
        auto it = container.begin();
        std::advance(it, static_cast<long>(rng() % container.size()));
        return *it;
    };
    switch (rng() % 3) {
        case 0: { // flip one correction-set membership
            const auto entry = pick(t.p);
            VertexSet pu = entry.second;
            const VertexId v = pick(vs);
            if (!pu.erase(v)) {
                pu.insert(v);
            }
            t.p[entry.first] = pu;
            break;
        }
        case 1: // drop one order pair
            if (!t.order.empty()) {
                t.order.erase(pick(t.order));
            }
            break;
        case 2: // add one order pair
            t.order.emplace(pick(vs), pick(vs));
            break;
    }
    return t;
}

} // namespace

TEST_CASE("a hand-built line pattern has the obvious flow") {
    LabelledOpenGraph g;
    for (int v = 0; v < 3; ++v) {
        g.addVertex(v);
    }
    g.addEdge(0, 1);
    g.addEdge(1, 2);
    g.setInput(0, true);
    g.setOutput(2, true);
    g.setLabel(0, MeasLabel::XY);
    g.setLabel(1, MeasLabel::XY);
    PauliFlow f;
    f.p[0] = {1};
    f.p[1] = {2};
    f.order = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(verifyFlow(g, f) == std::nullopt);
    CHECK(naiveValid(g, f));

    // breaking condition 4: 1 in p(1)
    PauliFlow bad = f;
    bad.p[1] = {2};
    bad.p[1].insert(1);
    const auto violation = verifyFlow(g, bad);
    REQUIRE(violation.has_value());
    CHECK(naiveValid(g, bad) == false);

    // dropping 0 < 1 breaks condition 1 (1 is in p(0) with an XY label)
    PauliFlow bad2 = f;
    bad2.order.erase({0, 1});
    const auto v2 = verifyFlow(g, bad2);
    REQUIRE(v2.has_value());
    CHECK(v2->u == 0);
    CHECK(v2->condition == 1);
    CHECK(v2->v == 1);
}

TEST_CASE("order cycles are rejected") {
    PauliFlow f;
    f.order = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(static_cast<void>(orderClosure(f)), MalformedFlowError);
    LabelledOpenGraph g;
    for (int v = 0; v < 3; ++v) {
        g.addVertex(v);
        g.setOutput(v, true);
    }
    CHECK_THROWS_AS(static_cast<void>(verifyFlow(g, f)), MalformedFlowError);
}

TEST_CASE("verifyFlow agrees with the naive verifier") {
    int validSeen = 0, invalidSeen = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const LabelledOpenGraph g = randomLabelledGraph(rng, 2 + static_cast<int>(rng() % 5));
        const auto f = findFlow(g);
        if (!f) {
            continue;
        }
        CHECK(verifyFlow(g, *f) == std::nullopt);
        REQUIRE(naiveValid(g, *f));
        ++validSeen;
        const PauliFlow bad = tamper(*f, g);
        bool naive = naiveValid(g, bad);
        bool cycle = false;
        try {
            const auto violation = verifyFlow(g, bad);
            CHECK(naive == !violation.has_value());
        } catch (const MalformedFlowError&) {
            cycle = true;
        }
        if (cycle) {
            CHECK_FALSE(naive);
        }
        if (!naive) {
            ++invalidSeen;
        }
    }
    CHECK(validSeen > 100);
    CHECK(invalidSeen > 100);
}

TEST_CASE("findFlow matches the brute-force oracle") {
    int agreeYes = 0, agreeNo = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        const LabelledOpenGraph g = randomLabelledGraph(rng, 2 + static_cast<int>(rng() % 5));
        if (g.measuredVertices().size() > 5) {
            continue;
        }
        VertexSet nonInput;
        for (const VertexId v : g.vertices()) {
            if (!g.isInput(v)) {
                nonInput.insert(v);
            }
        }
        if (nonInput.size() > 8) {
            continue;
        }
        const auto f = findFlow(g);
        const bool exists = bruteForceFlowExists(g);
        CHECK(f.has_value() == exists);
        if (f) {
            CHECK(verifyFlow(g, *f) == std::nullopt);
            ++agreeYes;
        } else {
            ++agreeNo;
        }
    }
    CHECK(agreeYes > 200);
    CHECK(agreeNo > 200);
}

TEST_CASE("brute force size limits") {
    Rng local(7);
    LabelledOpenGraph big = randomLabelledGraph(local, 12);
    bool tooManyMeasured = big.measuredVertices().size() > 5;
    VertexSet nonInput;
    for (const VertexId v : big.vertices()) {
        if (!big.isInput(v)) {
            nonInput.insert(v);
        }
    }
    if (tooManyMeasured || nonInput.size() > 8) {
        CHECK_THROWS_AS(static_cast<void>(bruteForceFlowExists(big)), SizeLimitError);
    }
}

TEST_CASE("the inserted-vertex flow update verifies") {
    for (int trial = 0; trial < 400; ++trial) {
        Rng local(rng());
        Diagram d;
        try {
            d = randomDiagram(local, {.vertices = 3 + static_cast<int>(rng() % 4),
                                      .withInputs = true,
                                      .ensureFlow = true,
                                      .maxAttempts = 5000});
        } catch (const Error&) {
            continue;
        }
        const auto f = findFlow(d.graph);
        REQUIRE(f.has_value());
        VertexSet w;
        for (const VertexId v : d.graph.vertices()) {
            if (rng() % 2) {
                w.insert(v);
            }
        }
        const auto [d2, step] = zInsert(d, w, Sign::Plus);
        const PauliFlow f2 = zInsertFlowUpdate(*f, step.u, w);
        CHECK(verifyFlow(d2.graph, f2) == std::nullopt);
    }
}
