#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zxcf/errors.hpp"
#include "zxcf/phase_poly.hpp"

#include <random>

using namespace zxcf;

namespace {

std::mt19937_64 rng(77);

// |0010> + |0111> + i|1001> - i|1100>, qubit 0 most significant.
ExactState goldenState() {
    ExactState s;
    s.numQubits = 4;
    s.amps.assign(16, Gaussian{});
    s.amps[0b0010] = {1, 0};
    s.amps[0b0111] = {1, 0};
    s.amps[0b1001] = {0, 1};
    s.amps[0b1100] = {0, -1};
    return s;
}

PhasePolyDiagram goldenDiagram() {
    PhasePolyDiagram p;
    p.spiders = {{false, 1}, {false, 0}, {true, 1}, {true, 0}};
    p.hEdges = {{0, 1}};
    p.plainEdges = {{0, 2}, {0, 3}, {1, 3}};
    return p;
}

AffineSpace randomSpace(int n) {
    const int rows = static_cast<int>(rng() % (n + 1));
    while (true) {
        BitMatrix m(rows, n);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < n; ++c) {
                m.set(r, c, rng() % 2 != 0);
            }
        }
        BitVec b(rows);
        for (auto& x : b) {
            x = static_cast<std::uint8_t>(rng() % 2);
        }
        try {
            return AffineSpace(n, m, b);
        } catch (const InconsistentSystemError&) {
        }
    }
}

PhasePolynomial randomPoly(const std::vector<int>& freeVars) {
    PhasePolynomial p;
    p.freeVars = freeVars;
    for (const int j : freeVars) {
        if (const int r = static_cast<int>(rng() % 4); r != 0) {
            p.linear[j] = r;
        }
    }
    for (std::size_t a = 0; a < freeVars.size(); ++a) {
        for (std::size_t b = a + 1; b < freeVars.size(); ++b) {
            if (rng() % 2) {
                p.quadratic.emplace(freeVars[a], freeVars[b]);
            }
        }
    }
    return p;
}

} // namespace

TEST_CASE("single spiders") {
    {
        // lone green spider with phase k: (1, i^k)
        for (int k = 0; k < 4; ++k) {
            PhasePolyDiagram p;
            p.spiders = {{false, k}};
            const ExactState s = evaluateDiagram(p);
            REQUIRE(s.amps.size() == 2);
            CHECK(s.amps[0] == Gaussian{1, 0});
            CHECK(s.amps[1] == iPower(k));
        }
    }
    {
        // lone red spider with phase a: |a>
        for (int a = 0; a < 2; ++a) {
            PhasePolyDiagram p;
            p.spiders = {{true, a}};
            const ExactState s = evaluateDiagram(p);
            CHECK((s.amps[0].isZero()) == (a == 1));
            CHECK((s.amps[1].isZero()) == (a == 0));
        }
    }
    {
        // two greens with a Hadamard edge: graph state (1,1,1,-1)
        PhasePolyDiagram p;
        p.spiders = {{false, 0}, {false, 0}};
        p.hEdges = {{0, 1}};
        const ExactState s = evaluateDiagram(p);
        const std::vector<Gaussian> expect{{1, 0}, {1, 0}, {1, 0}, {-1, 0}};
        CHECK(proportionalVectors(expect, s.amps));
    }
}

TEST_CASE("golden four-qubit diagram evaluates to the target state") {
    const ExactState s = evaluateDiagram(goldenDiagram());
    CHECK(proportional(goldenState(), s));
}

TEST_CASE("golden state recovers the expected phase polynomials") {
    const ExactState s = goldenState();
    {
        const auto [space, p] = pairFromState(s, {0, 1});
        CHECK(space.dim() == 2);
        CHECK(p.freeVars == std::vector<int>{0, 1});
        CHECK(p.linear == std::map<int, int>{{0, 1}});
        CHECK(p.quadratic == std::set<std::pair<int, int>>{{0, 1}});
        CHECK(diagramFromPair(space, p) == goldenDiagram());
        CHECK(proportional(s, stateFromPair(space, p)));
    }
    {
        const auto [space, p] = pairFromState(s, {1, 2});
        CHECK(p.freeVars == std::vector<int>{1, 2});
        CHECK(p.linear == std::map<int, int>{{1, 2}, {2, 3}});
        CHECK(p.quadratic == std::set<std::pair<int, int>>{{1, 2}});
        CHECK(proportional(s, stateFromPair(space, p)));
    }
    std::vector<BitVec> pts;
    for (const int idx : {0b0010, 0b0111, 0b1001, 0b1100}) {
        BitVec x(4);
        for (int q = 0; q < 4; ++q) {
            x[q] = (idx >> (3 - q)) & 1;
        }
        pts.push_back(x);
    }
    const auto support = AffineSpace::fromSupport(4, pts);
    REQUIRE(support.has_value());
    CHECK(support->canonicalFreeVars() == std::vector<int>{0, 1});
}

TEST_CASE("pair and diagram representations are mutually inverse") {
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const AffineSpace space = randomSpace(n);
        const auto fv = space.canonicalFreeVars();
        const PhasePolynomial p = randomPoly(fv);
        const ExactState s = stateFromPair(space, p);

        const PhasePolyDiagram d = diagramFromPair(space, p);
        d.validate();
        CHECK(proportional(s, evaluateDiagram(d)));

        const auto [space2, p2] = pairFromDiagram(d);
        CHECK(space2.constraints() == space.constraints());
        CHECK(space2.rhs() == space.rhs());
        CHECK(p2 == p);

        const auto [space3, p3] = pairFromState(s, fv);
        CHECK(space3.constraints() == space.constraints());
        CHECK(p3 == p);
    }
}

TEST_CASE("phase polynomial coefficients are observable in the state") {
    // distinct coefficient tuples over the same space and free set give
    // non-proportional states, exhaustively for up to three free variables
    for (int n = 1; n <= 3; ++n) {
        const AffineSpace space = AffineSpace::full(n);
        std::vector<int> fv(n);
        for (int j = 0; j < n; ++j) {
            fv[j] = j;
        }
        std::vector<ExactState> states;
        const int pairs = n * (n - 1) / 2;
        for (int lin = 0; lin < 1 << (2 * n); ++lin) {
            for (int quad = 0; quad < (1 << pairs); ++quad) {
                PhasePolynomial p;
                p.freeVars = fv;
                for (int j = 0; j < n; ++j) {
                    if (const int r = (lin >> (2 * j)) & 3; r != 0) {
                        p.linear[j] = r;
                    }
                }
                int bit = 0;
                for (int a = 0; a < n; ++a) {
                    for (int b = a + 1; b < n; ++b, ++bit) {
                        if ((quad >> bit) & 1) {
                            p.quadratic.emplace(a, b);
                        }
                    }
                }
                states.push_back(stateFromPair(space, p));
            }
        }
        for (std::size_t a = 0; a < states.size(); ++a) {
            for (std::size_t b = a + 1; b < states.size(); ++b) {
                CHECK_FALSE(proportional(states[a], states[b]));
            }
        }
    }
}

TEST_CASE("mod-2 to mod-4 lifting identities") {
    // (sum d_j x_j) mod 2 equals (sum d_j x_j + 2 sum_{j<k} d_j d_k x_j x_k) mod 4,
    // and a sign-and-phase pair (l, q) lifts to r_j = d_j + 2 c_j,
    // s_jk = c_jk xor d_j d_k.
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<int> d(n), c(n);
        std::map<std::pair<int, int>, int> cq;
        for (int j = 0; j < n; ++j) {
            d[j] = static_cast<int>(rng() % 2);
            c[j] = static_cast<int>(rng() % 2);
            for (int k = j + 1; k < n; ++k) {
                cq[{j, k}] = static_cast<int>(rng() % 2);
            }
        }
        PhasePolynomial p;
        for (int j = 0; j < n; ++j) {
            p.freeVars.push_back(j);
            if (const int r = (d[j] + 2 * c[j]) % 4; r != 0) {
                p.linear[j] = r;
            }
        }
        for (const auto& [jk, cjk] : cq) {
            if ((cjk ^ (d[jk.first] & d[jk.second])) != 0) {
                p.quadratic.insert(jk);
            }
        }
        for (int mask = 0; mask < (1 << n); ++mask) {
            BitVec x(n);
            int parity = 0, q = 0, xorSum = 0;
            for (int j = 0; j < n; ++j) {
                x[j] = (mask >> j) & 1;
                parity += d[j] * x[j];
                q += c[j] * x[j];
                xorSum ^= d[j] * x[j];
            }
            for (const auto& [jk, cjk] : cq) {
                q += cjk * x[jk.first] * x[jk.second];
            }
            // i^p == (-1)^q * i^(xor of the d_j x_j)
            const Gaussian lhs = iPower(p.evaluate(x));
            const Gaussian rhs = iPower(2 * q + xorSum);
            CHECK(lhs == rhs);
            // the quadratic expansion of the parity itself
            int quadExp = parity;
            for (int j = 0; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    quadExp += 2 * d[j] * d[k] * x[j] * x[k];
                }
            }
            CHECK(iPower(xorSum) == iPower(quadExp));
        }
    }
}

TEST_CASE("proportionality is scalar-blind and exact") {
    const ExactState s = goldenState();
    ExactState t = s;
    for (auto& a : t.amps) {
        a *= Gaussian{0, 1};
    }
    t.sqrt2Exp += 5;
    CHECK(proportional(s, t));
    t.amps[2] = {1, 1};
    CHECK_FALSE(proportional(s, t));
    ExactState zero = s;
    zero.amps.assign(16, Gaussian{});
    CHECK_FALSE(proportional(s, zero));
}

TEST_CASE("free sets that do not parameterize the space are rejected") {
    const ExactState s = goldenState();
    CHECK_THROWS_AS(static_cast<void>(pairFromState(s, {0, 2})), InvalidFreeSetError);
}

TEST_CASE("non-stabilizer amplitude patterns are rejected") {
    ExactState s;
    s.numQubits = 1;
    s.amps = {{1, 0}, {2, 0}};
    CHECK_THROWS_AS(static_cast<void>(pairFromState(s, {0})), NotStabilizerError);
    ExactState t;
    t.numQubits = 2;
    t.amps = {{1, 0}, {1, 0}, {1, 0}, {0, 0}};
    CHECK_THROWS_AS(static_cast<void>(pairFromState(t, {0, 1})), NotStabilizerError);
}
