#include "zxcf/clifford.hpp"

#include "zxcf/errors.hpp"

#include <algorithm>
#include <deque>

namespace zxcf {

Mat2 zPhase(int quarterTurns) {
    return {{1, 0}, {0, 0}, {0, 0}, iPower(quarterTurns), 0};
}

Mat2 hadamard() {
    return {{1, 0}, {1, 0}, {1, 0}, {-1, 0}, -1};
}

Mat2 xPhase(int quarterTurns) {
    return hadamard() * zPhase(quarterTurns) * hadamard();
}

Mat2 gateMatrix(const Gate& g) {
    return g.axis == Axis::Z ? zPhase(g.quarterTurns) : xPhase(g.quarterTurns);
}

Mat2 wordMatrix(const CliffordWord& w) {
    Mat2 m = Mat2::identity();
    for (const auto& g : w) {
        m = m * gateMatrix(g);
    }
    return m;
}

namespace {

std::vector<CliffordClass> buildRegistry() {
    std::vector<CliffordClass> reg;
    std::deque<CliffordClass> queue;
    queue.push_back({{}, Mat2::identity()});
    // Generator order fixes the tie-break among equal-length words.
    std::vector<Gate> gens;
    for (int k = 1; k <= 3; ++k) {
        gens.push_back({Axis::Z, k});
    }
    for (int k = 1; k <= 3; ++k) {
        gens.push_back({Axis::X, k});
    }
    while (!queue.empty()) {
        CliffordClass cur = queue.front();
        queue.pop_front();
        bool known = false;
        for (const auto& c : reg) {
            if (c.matrix.proportionalTo(cur.matrix)) {
                known = true;
                break;
            }
        }
        if (known) {
            continue;
        }
        reg.push_back(cur);
        for (const auto& g : gens) {
            CliffordClass next;
            next.word = cur.word;
            next.word.push_back(g);
            next.matrix = cur.matrix * gateMatrix(g);
            queue.push_back(next);
        }
    }
    return reg;
}

} // namespace

const std::vector<CliffordClass>& cliffordRegistry() {
    static const std::vector<CliffordClass> reg = buildRegistry();
    return reg;
}

int cliffordClassIndex(const Mat2& m) {
    const auto& reg = cliffordRegistry();
    for (std::size_t j = 0; j < reg.size(); ++j) {
        if (reg[j].matrix.proportionalTo(m)) {
            return static_cast<int>(j);
        }
    }
    throw Error("matrix is not a single-qubit Clifford");
}

CliffordWord canonicalWordOf(const Mat2& m) {
    return cliffordRegistry()[static_cast<std::size_t>(cliffordClassIndex(m))].word;
}

CliffordWord canonicalWord(const CliffordWord& w) {
    return canonicalWordOf(wordMatrix(w));
}

std::string wordToString(const CliffordWord& w) {
    std::string s;
    for (const auto& g : w) {
        s += (g.axis == Axis::Z ? 'Z' : 'X');
        s += static_cast<char>('0' + g.quarterTurns);
    }
    return s;
}

std::optional<CliffordWord> wordFromString(const std::string& s) {
    if (s.size() % 2 != 0) {
        return std::nullopt;
    }
    CliffordWord w;
    for (std::size_t j = 0; j < s.size(); j += 2) {
        Gate g;
        if (s[j] == 'Z') {
            g.axis = Axis::Z;
        } else if (s[j] == 'X') {
            g.axis = Axis::X;
        } else {
            return std::nullopt;
        }
        if (s[j + 1] < '1' || s[j + 1] > '3') {
            return std::nullopt;
        }
        g.quarterTurns = s[j + 1] - '0';
        w.push_back(g);
    }
    return w;
}

std::array<Gaussian, 2> effectCovector(const Measurement& m) {
    switch (m.basis) {
        case MeasBasis::X:
            return m.sign == Sign::Plus ? std::array<Gaussian, 2>{Gaussian{1, 0}, Gaussian{1, 0}}
                                        : std::array<Gaussian, 2>{Gaussian{1, 0}, Gaussian{-1, 0}};
        case MeasBasis::Y:
            return m.sign == Sign::Plus ? std::array<Gaussian, 2>{Gaussian{1, 0}, Gaussian{0, -1}}
                                        : std::array<Gaussian, 2>{Gaussian{1, 0}, Gaussian{0, 1}};
        default:
            return m.sign == Sign::Plus ? std::array<Gaussian, 2>{Gaussian{1, 0}, Gaussian{0, 0}}
                                        : std::array<Gaussian, 2>{Gaussian{0, 0}, Gaussian{1, 0}};
    }
}

std::optional<Measurement> normalizeEffect(const std::array<Gaussian, 2>& cov) {
    for (int b = 0; b < 3; ++b) {
        for (int s = 0; s < 2; ++s) {
            Measurement m{static_cast<MeasBasis>(b), static_cast<Sign>(s)};
            const auto ref = effectCovector(m);
            if (proportionalVectors({ref[0], ref[1]}, {cov[0], cov[1]})) {
                return m;
            }
        }
    }
    return std::nullopt;
}

Measurement effectAfterGate(const Measurement& m, const Mat2& u) {
    const auto e = effectCovector(m);
    const std::array<Gaussian, 2> res = {e[0] * u.at(0, 0) + e[1] * u.at(1, 0),
                                         e[0] * u.at(0, 1) + e[1] * u.at(1, 1)};
    const auto norm = normalizeEffect(res);
    if (!norm) {
        throw Error("effect composed with non-Clifford gate");
    }
    return *norm;
}

std::string basisToString(MeasBasis b) {
    switch (b) {
        case MeasBasis::X: return "X";
        case MeasBasis::Y: return "Y";
        default: return "Z";
    }
}

std::optional<MeasBasis> basisFromString(const std::string& s) {
    if (s == "X") {
        return MeasBasis::X;
    }
    if (s == "Y") {
        return MeasBasis::Y;
    }
    if (s == "Z") {
        return MeasBasis::Z;
    }
    return std::nullopt;
}

} // namespace zxcf
