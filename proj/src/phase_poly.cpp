#include "zxcf/phase_poly.hpp"

#include "zxcf/errors.hpp"

#include <algorithm>

namespace zxcf {

namespace {

std::size_t indexOfPoint(const BitVec& x) {
    std::size_t idx = 0;
    for (const std::uint8_t bit : x) {
        idx = (idx << 1) | (bit != 0 ? 1U : 0U);
    }
    return idx;
}

BitVec pointOfIndex(std::size_t idx, int n) {
    BitVec x(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c) {
        x[static_cast<std::size_t>(c)] = (idx >> (n - 1 - c)) & 1U ? 1 : 0;
    }
    return x;
}

} // namespace

int PhasePolynomial::evaluate(const BitVec& x) const {
    int acc = 0;
    for (const auto& [j, r] : linear) {
        if (x[static_cast<std::size_t>(j)] != 0) {
            acc += r;
        }
    }
    for (const auto& [j, k] : quadratic) {
        if (x[static_cast<std::size_t>(j)] != 0 && x[static_cast<std::size_t>(k)] != 0) {
            acc += 2;
        }
    }
    return ((acc % 4) + 4) % 4;
}

void PhasePolyDiagram::validate() const {
    const int n = numQubits();
    auto inRange = [n](int j) { return j >= 0 && j < n; };
    for (const auto& sp : spiders) {
        if (sp.red && (sp.phase < 0 || sp.phase > 1)) {
            throw MalformedDiagramError("red spider phase must be 0 or pi");
        }
        if (!sp.red && (sp.phase < 0 || sp.phase > 3)) {
            throw MalformedDiagramError("green spider phase must be a multiple of pi/2");
        }
    }
    for (const auto& [a, b] : plainEdges) {
        if (!inRange(a) || !inRange(b) || a >= b) {
            throw MalformedDiagramError("bad plain edge");
        }
        if (spiders[static_cast<std::size_t>(a)].red == spiders[static_cast<std::size_t>(b)].red) {
            throw MalformedDiagramError("plain edges must connect spiders of different colours");
        }
    }
    for (const auto& [a, b] : hEdges) {
        if (!inRange(a) || !inRange(b) || a >= b) {
            throw MalformedDiagramError("bad Hadamard edge");
        }
        if (spiders[static_cast<std::size_t>(a)].red || spiders[static_cast<std::size_t>(b)].red) {
            throw MalformedDiagramError("Hadamard edges must connect green spiders");
        }
    }
}

bool PhasePolyDiagram::isCanonical() const {
    for (const auto& [a, b] : plainEdges) {
        // Normalized as (min, max): the higher endpoint must be the red one.
        if (!spiders[static_cast<std::size_t>(b)].red) {
            return false;
        }
    }
    return true;
}

ExactState stateFromPair(const AffineSpace& space, const PhasePolynomial& p) {
    const int n = space.numVars();
    const DependencyTable table = space.dependencyTable(p.freeVars);
    ExactState s;
    s.numQubits = n;
    s.amps.assign(std::size_t{1} << n, Gaussian{});
    const int d = space.dim();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        BitVec freeAssign(static_cast<std::size_t>(d), 0);
        for (int j = 0; j < d; ++j) {
            freeAssign[static_cast<std::size_t>(j)] = (mask >> j) & 1U ? 1 : 0;
        }
        const BitVec x = table.inducedPoint(n, freeAssign);
        s.amps[indexOfPoint(x)] = iPower(p.evaluate(x));
    }
    return s;
}

std::pair<AffineSpace, PhasePolynomial> pairFromState(const ExactState& s,
                                                      const std::vector<int>& freeVars) {
    if (s.isZero()) {
        throw NotStabilizerError("zero state has no affine support");
    }
    const int n = s.numQubits;
    std::vector<BitVec> support;
    for (std::size_t idx = 0; idx < s.amps.size(); ++idx) {
        if (!s.amps[idx].isZero()) {
            support.push_back(pointOfIndex(idx, n));
        }
    }
    const auto space = AffineSpace::fromSupport(n, support);
    if (!space) {
        throw NotStabilizerError("state support is not an affine subspace");
    }
    const DependencyTable table = space->dependencyTable(freeVars);
    const int d = space->dim();

    auto ampAt = [&](const BitVec& freeAssign) {
        return s.amps[indexOfPoint(table.inducedPoint(n, freeAssign))];
    };
    const Gaussian base = ampAt(BitVec(static_cast<std::size_t>(d), 0));
    auto phaseOf = [&](const Gaussian& g) {
        for (int k = 0; k < 4; ++k) {
            if (g == iPower(k) * base) {
                return k;
            }
        }
        throw NotStabilizerError("amplitude ratio is not a fourth root of unity");
    };

    PhasePolynomial p;
    p.freeVars = table.freeVars;
    std::map<int, int> linear;
    for (int j = 0; j < d; ++j) {
        BitVec e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(j)] = 1;
        linear[table.freeVars[static_cast<std::size_t>(j)]] = phaseOf(ampAt(e));
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            BitVec e(static_cast<std::size_t>(d), 0);
            e[static_cast<std::size_t>(j)] = 1;
            e[static_cast<std::size_t>(k)] = 1;
            const int ph = phaseOf(ampAt(e));
            const int lin = linear[table.freeVars[static_cast<std::size_t>(j)]] +
                            linear[table.freeVars[static_cast<std::size_t>(k)]];
            const int diff = ((ph - lin) % 4 + 4) % 4;
            if (diff == 2) {
                p.quadratic.emplace(table.freeVars[static_cast<std::size_t>(j)],
                                    table.freeVars[static_cast<std::size_t>(k)]);
            } else if (diff != 0) {
                throw NotStabilizerError("amplitudes are not described by a quadratic phase polynomial");
            }
        }
    }
    for (const auto& [j, r] : linear) {
        if (r != 0) {
            p.linear[j] = r;
        }
    }
    // Full verification over every support point.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        BitVec freeAssign(static_cast<std::size_t>(d), 0);
        for (int j = 0; j < d; ++j) {
            freeAssign[static_cast<std::size_t>(j)] = (mask >> j) & 1U ? 1 : 0;
        }
        const BitVec x = table.inducedPoint(n, freeAssign);
        if (s.amps[indexOfPoint(x)] != iPower(p.evaluate(x)) * base) {
            throw NotStabilizerError("amplitudes are not described by a quadratic phase polynomial");
        }
    }
    return {*space, p};
}

PhasePolyDiagram diagramFromPair(const AffineSpace& space, const PhasePolynomial& p) {
    const DependencyTable table = space.dependencyTable(p.freeVars);
    const int n = space.numVars();
    PhasePolyDiagram d;
    d.spiders.assign(static_cast<std::size_t>(n), PhasePolySpider{});
    for (const int j : table.freeVars) {
        d.spiders[static_cast<std::size_t>(j)].red = false;
        const auto it = p.linear.find(j);
        d.spiders[static_cast<std::size_t>(j)].phase = it == p.linear.end() ? 0 : it->second;
    }
    for (const auto& row : table.rows) {
        d.spiders[static_cast<std::size_t>(row.variable)].red = true;
        d.spiders[static_cast<std::size_t>(row.variable)].phase = row.constant ? 1 : 0;
        for (const int k : row.coefficients) {
            d.plainEdges.emplace(std::min(k, row.variable), std::max(k, row.variable));
        }
    }
    d.hEdges = p.quadratic;
    d.validate();
    return d;
}

std::pair<AffineSpace, PhasePolynomial> pairFromDiagram(const PhasePolyDiagram& d) {
    d.validate();
    const int n = d.numQubits();
    std::vector<int> reds;
    PhasePolynomial p;
    for (int j = 0; j < n; ++j) {
        if (d.spiders[static_cast<std::size_t>(j)].red) {
            reds.push_back(j);
        } else {
            p.freeVars.push_back(j);
            if (d.spiders[static_cast<std::size_t>(j)].phase != 0) {
                p.linear[j] = d.spiders[static_cast<std::size_t>(j)].phase;
            }
        }
    }
    p.quadratic = d.hEdges;
    BitMatrix constraints(static_cast<int>(reds.size()), n);
    BitVec rhs(reds.size(), 0);
    for (std::size_t r = 0; r < reds.size(); ++r) {
        const int j = reds[r];
        constraints.set(static_cast<int>(r), j, true);
        rhs[r] = d.spiders[static_cast<std::size_t>(j)].phase != 0 ? 1 : 0;
        for (const auto& [a, b] : d.plainEdges) {
            if (a == j) {
                constraints.set(static_cast<int>(r), b, true);
            } else if (b == j) {
                constraints.set(static_cast<int>(r), a, true);
            }
        }
    }
    return {AffineSpace(n, constraints, rhs), p};
}

} // namespace zxcf
