#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zxcf/canonical.hpp"
#include "zxcf/errors.hpp"
#include "zxcf/exact_state.hpp"
#include "zxcf/flow.hpp"
#include "zxcf/random_diagram.hpp"

#include <random>

using namespace zxcf;

namespace {

std::mt19937_64 rng(99);

Diagram sampleFlowed(int n) {
    for (;;) {
        const Diagram d = randomDiagram(rng, {.vertices = n, .withInputs = true});
        if (!d.graph.outputs().empty() && findFlow(d.graph)) {
            return d;
        }
    }
}

// Independent construction of the expected canonical form: read the support
// off the state, parameterize it by the canonical free set, extract the
// phase polynomial and rebuild the diagram. No rewriting involved.
PhasePolyDiagram oracleCanonical(const ExactState& s) {
    std::vector<BitVec> support;
    for (std::size_t j = 0; j < s.amps.size(); ++j) {
        if (!(s.amps[j] == Gaussian{})) {
            BitVec x(s.numQubits);
            for (int q = 0; q < s.numQubits; ++q) {
                x[q] = (j >> (s.numQubits - 1 - q)) & 1;
            }
            support.push_back(x);
        }
    }
    const auto space = AffineSpace::fromSupport(s.numQubits, support);
    REQUIRE(space.has_value());
    const auto [sp, poly] = pairFromState(s, space->canonicalFreeVars());
    return diagramFromPair(sp, poly);
}

// A wire-preserving, flow-preserving random rewrite, or nothing.
std::optional<Diagram> wirePreservingRewrite(Diagram& cur) {
    for (int attempt = 0; attempt < 24; ++attempt) {
        const auto next = randomRewrite(rng, cur);
        if (!next) {
            return std::nullopt;
        }
        if (next->first.wires() == cur.wires() && findFlow(next->first.graph)) {
            return next->first;
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("the pipeline reproduces the state-built canonical form") {
    int done = 0, flowChecks = 0;
    while (done < 250) {
        const Diagram d = sampleFlowed(2 + static_cast<int>(rng() % 5));
        const ExactState s0 = evaluateDiagram(d);
        REQUIRE_FALSE(s0.isZero()); // flow rules out the zero map
        const CanonicalizeResult r = canonicalize(d);
        CHECK(applyTrace(d, r.trace) == r.endDiagram);
        CHECK(proportional(s0, evaluateDiagram(r.endDiagram)));
        CHECK(r.canonical.isCanonical());
        CHECK(laterConnectionCount(r.canonical) == 0);
        CHECK(r.canonical == oracleCanonical(s0));
        CHECK(proportional(s0, evaluateDiagram(r.canonical)));
        if (done % 10 == 0) {
            // flow survives every intermediate diagram of the trace
            Diagram cur = d;
            for (const RewriteStep& st : r.trace) {
                cur = applyStep(cur, st);
                REQUIRE(findFlow(cur.graph).has_value());
                ++flowChecks;
            }
        }
        ++done;
    }
    CHECK(flowChecks > 100);
}

TEST_CASE("rewriting never changes the canonical form") {
    int pairs = 0;
    while (pairs < 200) {
        const Diagram d = sampleFlowed(2 + static_cast<int>(rng() % 5));
        Diagram d2 = d;
        const int steps = 1 + static_cast<int>(rng() % 5);
        bool moved = false;
        for (int k = 0; k < steps; ++k) {
            if (const auto next = wirePreservingRewrite(d2)) {
                d2 = *next;
                moved = true;
            }
        }
        if (!moved) {
            continue;
        }
        CHECK(canonicalize(d).canonical == canonicalize(d2).canonical);
        ++pairs;
    }
}

TEST_CASE("non-proportional diagrams never collide") {
    int compared = 0;
    while (compared < 120) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const Diagram a = sampleFlowed(n);
        const Diagram b = sampleFlowed(n);
        if (a.wireCount() != b.wireCount()) {
            continue;
        }
        const ExactState sa = evaluateDiagram(a);
        const ExactState sb = evaluateDiagram(b);
        if (proportional(sa, sb)) {
            continue;
        }
        CHECK_FALSE(canonicalize(a).canonical == canonicalize(b).canonical);
        ++compared;
    }
}

TEST_CASE("decideEquiv returns an exact replay between equivalent diagrams") {
    int positives = 0;
    while (positives < 60) {
        const Diagram a = sampleFlowed(2 + static_cast<int>(rng() % 4));
        Diagram b = a;
        bool moved = false;
        for (int k = 0; k < 4; ++k) {
            if (const auto next = wirePreservingRewrite(b)) {
                b = *next;
                moved = true;
            }
        }
        if (!moved) {
            continue;
        }
        const auto t = decideEquiv(a, b);
        REQUIRE(t.has_value());
        Diagram cur = a;
        for (const RewriteStep& st : *t) {
            cur = applyStep(cur, st);
        }
        CHECK(cur == b);
        ++positives;
    }
}

TEST_CASE("decideEquiv rejects inequivalent diagrams") {
    int negatives = 0;
    while (negatives < 60) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const Diagram a = sampleFlowed(n);
        const Diagram b = sampleFlowed(n);
        if (a.wireCount() == b.wireCount() &&
            proportional(evaluateDiagram(a), evaluateDiagram(b))) {
            continue;
        }
        CHECK_FALSE(decideEquiv(a, b).has_value());
        ++negatives;
    }
}

TEST_CASE("flow intermediates along a decideEquiv replay") {
    int checked = 0;
    while (checked < 10) {
        const Diagram a = sampleFlowed(3 + static_cast<int>(rng() % 3));
        Diagram b = a;
        bool moved = false;
        for (int k = 0; k < 3; ++k) {
            if (const auto next = wirePreservingRewrite(b)) {
                b = *next;
                moved = true;
            }
        }
        if (!moved) {
            continue;
        }
        const auto t = decideEquiv(a, b);
        REQUIRE(t.has_value());
        Diagram cur = a;
        for (const RewriteStep& st : *t) {
            cur = applyStep(cur, st);
            CHECK(findFlow(cur.graph).has_value());
        }
        CHECK(cur == b);
        ++checked;
    }
}

TEST_CASE("canonicalization terminates on larger diagrams") {
    for (int trial = 0; trial < 150; ++trial) {
        const Diagram d = sampleFlowed(4 + static_cast<int>(rng() % 5));
        if (d.wireCount() > 11) {
            continue;
        }
        // the later-connection metric must strictly decrease each round;
        // canonicalize throws if it ever fails to
        const CanonicalizeResult r = canonicalize(d);
        CHECK(r.canonical.isCanonical());
    }
}

TEST_CASE("diagrams without flow are rejected") {
    // an isolated X-measured vertex next to nothing has no correction set
    Diagram d;
    d.graph.addVertex(0);
    d.graph.addVertex(1);
    d.graph.setOutput(1, true);
    d.setMeasurement(0, {MeasBasis::X, Sign::Plus});
    REQUIRE_FALSE(findFlow(d.graph).has_value());
    CHECK_THROWS_AS(static_cast<void>(canonicalize(d)), NoFlowError);
}

TEST_CASE("presentPhasePoly only accepts the presented shape") {
    Diagram d;
    d.graph.addVertex(0);
    d.graph.setOutput(0, true);
    CHECK(presentPhasePoly(d).spiders.size() == 1);
    Diagram bad = d;
    bad.graph.addVertex(2); // ids must be contiguous from 0
    bad.graph.setOutput(2, true);
    CHECK_THROWS_AS(static_cast<void>(presentPhasePoly(bad)), MalformedDiagramError);
    Diagram meas;
    meas.graph.addVertex(0);
    meas.graph.addVertex(1);
    meas.graph.setOutput(1, true);
    meas.setMeasurement(0, {MeasBasis::Z, Sign::Plus});
    CHECK_THROWS_AS(static_cast<void>(presentPhasePoly(meas)), PreconditionError);
}

TEST_CASE("mismatched boundaries are never equivalent") {
    // same number of wires, different split between inputs and outputs
    Diagram a;
    a.graph.addVertex(0);
    a.graph.setInput(0, true);
    a.graph.setOutput(0, true);
    Diagram b;
    b.graph.addVertex(0);
    b.graph.addVertex(1);
    b.graph.setOutput(0, true);
    b.graph.setOutput(1, true);
    CHECK_FALSE(decideEquiv(a, b).has_value());
}
