#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zxcf/clifford.hpp"

#include <random>

using namespace zxcf;

namespace {

std::mt19937_64 rng(55);

CliffordWord randomWord(int maxLen) {
    CliffordWord w;
    const int len = static_cast<int>(rng() % (maxLen + 1));
    for (int j = 0; j < len; ++j) {
        w.push_back({rng() % 2 ? Axis::X : Axis::Z, 1 + static_cast<int>(rng() % 3)});
    }
    return w;
}

} // namespace

TEST_CASE("gate matrices") {
    // Z(k) = diag(1, i^k), X = H Z H
    for (int k = 1; k < 4; ++k) {
        const Mat2 z = zPhase(k);
        CHECK(z.at(0, 0) == Gaussian{1, 0});
        CHECK(z.at(0, 1) == Gaussian{0, 0});
        CHECK(z.at(1, 0) == Gaussian{0, 0});
        CHECK(z.at(1, 1) == iPower(k));
        const Mat2 viaH = hadamard() * zPhase(k) * hadamard();
        CHECK(xPhase(k).proportionalTo(viaH));
    }
    const Mat2 h = hadamard();
    CHECK((h * h).proportionalTo(Mat2::identity()));
}

TEST_CASE("the registry has the 24 distinct classes") {
    const auto& reg = cliffordRegistry();
    REQUIRE(reg.size() == 24);
    for (std::size_t a = 0; a < reg.size(); ++a) {
        CHECK(cliffordClassIndex(reg[a].matrix) == static_cast<int>(a));
        CHECK(wordMatrix(reg[a].word).proportionalTo(reg[a].matrix));
        for (std::size_t b = a + 1; b < reg.size(); ++b) {
            CHECK_FALSE(reg[a].matrix.proportionalTo(reg[b].matrix));
        }
    }
    CHECK(cliffordClassIndex(Mat2::identity()) == 0);
}

TEST_CASE("canonical words are stable under re-canonicalization") {
    for (int trial = 0; trial < 500; ++trial) {
        const CliffordWord w = randomWord(6);
        const CliffordWord c = canonicalWord(w);
        CHECK(canonicalWord(c) == c);
        CHECK(wordMatrix(c).proportionalTo(wordMatrix(w)));
        CHECK(canonicalWordOf(wordMatrix(w)) == c);
        // scalars never matter
        Mat2 scaled = wordMatrix(w);
        scaled.exp += 3;
        CHECK(canonicalWordOf(scaled) == c);
    }
    CHECK(canonicalWord({}).empty());
    CHECK(canonicalWord({{Axis::Z, 2}, {Axis::Z, 2}}).empty());
}

TEST_CASE("word strings round-trip") {
    for (int trial = 0; trial < 200; ++trial) {
        const CliffordWord w = randomWord(5);
        const auto back = wordFromString(wordToString(w));
        REQUIRE(back.has_value());
        CHECK(*back == w);
    }
    CHECK_FALSE(wordFromString("Z0").has_value());
    CHECK_FALSE(wordFromString("Y1").has_value());
    CHECK_FALSE(wordFromString("Z").has_value());
    CHECK(wordFromString("")->empty());
}

TEST_CASE("effect covectors match the fixed table") {
    using G = Gaussian;
    const auto cov = [](MeasBasis b, Sign s) { return effectCovector({b, s}); };
    CHECK(cov(MeasBasis::X, Sign::Plus) == std::array<G, 2>{G{1, 0}, G{1, 0}});
    CHECK(cov(MeasBasis::X, Sign::Minus) == std::array<G, 2>{G{1, 0}, G{-1, 0}});
    CHECK(cov(MeasBasis::Y, Sign::Plus) == std::array<G, 2>{G{1, 0}, G{0, -1}});
    CHECK(cov(MeasBasis::Y, Sign::Minus) == std::array<G, 2>{G{1, 0}, G{0, 1}});
    CHECK(cov(MeasBasis::Z, Sign::Plus) == std::array<G, 2>{G{1, 0}, G{0, 0}});
    CHECK(cov(MeasBasis::Z, Sign::Minus) == std::array<G, 2>{G{0, 0}, G{1, 0}});
}

TEST_CASE("normalizeEffect inverts effectCovector up to scalars") {
    for (int b = 0; b < 3; ++b) {
        for (int s = 0; s < 2; ++s) {
            const Measurement m{static_cast<MeasBasis>(b), s ? Sign::Minus : Sign::Plus};
            auto cov = effectCovector(m);
            const Gaussian scale{-2, 3};
            cov[0] *= scale;
            cov[1] *= scale;
            const auto back = normalizeEffect(cov);
            REQUIRE(back.has_value());
            CHECK(*back == m);
        }
    }
    CHECK_FALSE(normalizeEffect({Gaussian{1, 0}, Gaussian{2, 0}}).has_value());
    CHECK_FALSE(normalizeEffect({Gaussian{0, 0}, Gaussian{0, 0}}).has_value());
}

TEST_CASE("effectAfterGate agrees with covector multiplication") {
    for (int trial = 0; trial < 300; ++trial) {
        const Measurement m{static_cast<MeasBasis>(rng() % 3),
                            rng() % 2 ? Sign::Plus : Sign::Minus};
        const Mat2 u = cliffordRegistry()[rng() % 24].matrix;
        const auto cov = effectCovector(m);
        const std::array<Gaussian, 2> rotated{cov[0] * u.at(0, 0) + cov[1] * u.at(1, 0),
                                              cov[0] * u.at(0, 1) + cov[1] * u.at(1, 1)};
        const auto expect = normalizeEffect(rotated);
        REQUIRE(expect.has_value());
        CHECK(effectAfterGate(m, u) == *expect);
    }
}

TEST_CASE("Clifford effects stay Pauli: full closure table") {
    for (int b = 0; b < 3; ++b) {
        for (int s = 0; s < 2; ++s) {
            for (const auto& cls : cliffordRegistry()) {
                const Measurement m{static_cast<MeasBasis>(b),
                                    s ? Sign::Minus : Sign::Plus};
                CHECK_NOTHROW(static_cast<void>(effectAfterGate(m, cls.matrix)));
            }
        }
    }
}
