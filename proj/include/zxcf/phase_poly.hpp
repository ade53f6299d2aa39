#pragma once

#include "zxcf/affine.hpp"
#include "zxcf/exact_state.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace zxcf {

/// Phase polynomial over a set of free variables, evaluated modulo 4:
/// p(x) = sum_j r_j x_j + 2 * sum_{j<k} s_jk x_j x_k, r_j in Z4, s_jk in Z2.
/// The constant term is always dropped (global scalars are ignored).
struct PhasePolynomial {
    std::vector<int> freeVars;                 // sorted, 0-based
    std::map<int, int> linear;                 // r_j in {1,2,3}; absent = 0
    std::set<std::pair<int, int>> quadratic;   // {(j,k): j<k, s_jk = 1}

    [[nodiscard]] int evaluate(const BitVec& x) const; // mod 4

    friend bool operator==(const PhasePolynomial&, const PhasePolynomial&) = default;
};

/// One spider of a phase-polynomial form diagram. Green spiders carry a
/// phase in quarter turns (Z4); red spiders a phase in half turns (Z2).
struct PhasePolySpider {
    bool red = false;
    int phase = 0;

    friend bool operator==(const PhasePolySpider&, const PhasePolySpider&) = default;
};

/// Phase-polynomial form diagram: n spiders (one output wire each, index =
/// qubit position, 0-based), plain edges only between green and red spiders,
/// Hadamard edges only between green spiders.
struct PhasePolyDiagram {
    std::vector<PhasePolySpider> spiders;
    std::set<std::pair<int, int>> plainEdges; // (min, max), green-red
    std::set<std::pair<int, int>> hEdges;     // (min, max), green-green

    [[nodiscard]] int numQubits() const { return static_cast<int>(spiders.size()); }

    /// Definition 3.6 invariants; throws MalformedDiagramError.
    void validate() const;

    /// Every red spider is connected only to lower-index spiders.
    [[nodiscard]] bool isCanonical() const;

    friend bool operator==(const PhasePolyDiagram&, const PhasePolyDiagram&) = default;
};

/// The state sum_{x in A} i^{p(x)} |x>. Throws InvalidFreeSetError when
/// p's free set does not parameterize A.
ExactState stateFromPair(const AffineSpace& space, const PhasePolynomial& p);

/// Recover (A, p) from a state for a chosen free set; unique with the
/// constant dropped. Throws NotStabilizerError / InvalidFreeSetError.
std::pair<AffineSpace, PhasePolynomial> pairFromState(const ExactState& s,
                                                      const std::vector<int>& freeVars);

/// The bijection between phase-polynomial form diagrams and pairs.
PhasePolyDiagram diagramFromPair(const AffineSpace& space, const PhasePolynomial& p);
std::pair<AffineSpace, PhasePolynomial> pairFromDiagram(const PhasePolyDiagram& d);

} // namespace zxcf
