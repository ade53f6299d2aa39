#pragma once

#include "zxcf/bitmatrix.hpp"

#include <optional>
#include <vector>

namespace zxcf {

/// Linear expression of one dependent variable over a free set F:
/// x_j = constant xor (sum of x_k over the set coefficients).
struct DependencyRow {
    int variable = 0;              // 0-based index of the dependent variable
    bool constant = false;         // a_j
    std::vector<int> coefficients; // sorted 0-based indices k in F with a_jk = 1
};

struct DependencyTable {
    std::vector<int> freeVars;       // ordered free index set F
    std::vector<DependencyRow> rows; // one per dependent variable, ascending

    /// Substitute an assignment of the free variables (by position in
    /// freeVars) and produce the full n-bit point.
    [[nodiscard]] BitVec inducedPoint(int n, const BitVec& freeAssignment) const;
};

/// Affine subspace of GF(2)^n as the solution set of Rx = b with R of full
/// row rank. Construction reduces the system; inconsistent systems are a
/// constructor error. Variable indices are 0-based here; all external IO is
/// 1-based.
class AffineSpace {
public:
    /// Throws InconsistentSystemError / DimensionError.
    AffineSpace(int n, const BitMatrix& constraints, const BitVec& rhs);

    /// The full space GF(2)^n.
    static AffineSpace full(int n);

    /// Fit the affine hull of a non-empty point set; empty result when the
    /// set is not an affine subspace (size or closure failure).
    static std::optional<AffineSpace> fromSupport(int n, const std::vector<BitVec>& points);

    [[nodiscard]] int numVars() const { return n_; }
    [[nodiscard]] int dim() const { return n_ - constraints_.rows(); }
    [[nodiscard]] const BitMatrix& constraints() const { return constraints_; }
    [[nodiscard]] const BitVec& rhs() const { return rhs_; }

    [[nodiscard]] bool contains(const BitVec& x) const;

    /// Canonical free variables: the ascending scan where x_j is dependent
    /// iff its value is fixed by the constraints given all earlier free
    /// variables.
    [[nodiscard]] std::vector<int> canonicalFreeVars() const;

    /// Throws InvalidFreeSetError when F does not parameterize the space.
    [[nodiscard]] DependencyTable dependencyTable(const std::vector<int>& freeVars) const;

    /// All 2^dim points, sorted as bitstrings (throws SizeLimitError above
    /// the limit).
    [[nodiscard]] std::vector<BitVec> enumeratePoints(int dimLimit = 20) const;

private:
    int n_ = 0;
    BitMatrix constraints_; // reduced, full row rank
    BitVec rhs_;
};

} // namespace zxcf
