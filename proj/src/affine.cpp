#include "zxcf/affine.hpp"

#include "zxcf/errors.hpp"

#include <algorithm>

namespace zxcf {

BitVec DependencyTable::inducedPoint(int n, const BitVec& freeAssignment) const {
    if (freeAssignment.size() != freeVars.size()) {
        throw DimensionError("free assignment length mismatch");
    }
    BitVec x(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < freeVars.size(); ++j) {
        x[static_cast<std::size_t>(freeVars[j])] = freeAssignment[j];
    }
    for (const auto& row : rows) {
        bool v = row.constant;
        for (const int k : row.coefficients) {
            v ^= x[static_cast<std::size_t>(k)] != 0;
        }
        x[static_cast<std::size_t>(row.variable)] = v ? 1 : 0;
    }
    return x;
}

AffineSpace::AffineSpace(int n, const BitMatrix& constraints, const BitVec& rhs) : n_(n) {
    if (constraints.cols() != n) {
        throw DimensionError("constraint matrix column count must equal the number of variables");
    }
    const RrefResult red = rref(constraints, rhs);
    if (!red.consistent) {
        throw InconsistentSystemError("affine space constraints are inconsistent");
    }
    constraints_ = red.matrix;
    rhs_ = red.augment;
}

AffineSpace AffineSpace::full(int n) {
    return AffineSpace(n, BitMatrix(0, n), {});
}

std::optional<AffineSpace> AffineSpace::fromSupport(int n, const std::vector<BitVec>& points) {
    if (points.empty()) {
        return std::nullopt;
    }
    const BitVec& x0 = points.front();
    // Incrementally build a basis of the direction space.
    std::vector<BitVec> basis;
    auto reduce = [&](BitVec v) {
        for (const auto& bv : basis) {
            int lead = -1;
            for (int c = 0; c < n; ++c) {
                if (bv[static_cast<std::size_t>(c)] != 0) {
                    lead = c;
                    break;
                }
            }
            if (lead >= 0 && v[static_cast<std::size_t>(lead)] != 0) {
                for (int c = 0; c < n; ++c) {
                    v[static_cast<std::size_t>(c)] ^= bv[static_cast<std::size_t>(c)];
                }
            }
        }
        return v;
    };
    for (const auto& pt : points) {
        BitVec diff(static_cast<std::size_t>(n), 0);
        for (int c = 0; c < n; ++c) {
            diff[static_cast<std::size_t>(c)] =
                pt[static_cast<std::size_t>(c)] ^ x0[static_cast<std::size_t>(c)];
        }
        diff = reduce(diff);
        if (std::any_of(diff.begin(), diff.end(), [](std::uint8_t b) { return b != 0; })) {
            basis.push_back(diff);
            // Keep the basis in echelon order (descending leading column not
            // required, re-sort by leading column).
            std::sort(basis.begin(), basis.end(), [n](const BitVec& a, const BitVec& b2) {
                auto lead = [n](const BitVec& v) {
                    for (int c = 0; c < n; ++c) {
                        if (v[static_cast<std::size_t>(c)] != 0) {
                            return c;
                        }
                    }
                    return n;
                };
                return lead(a) < lead(b2);
            });
        }
    }
    const int d = static_cast<int>(basis.size());
    if (d > 62 || points.size() != (std::size_t{1} << d)) {
        return std::nullopt;
    }
    // Constraints: null space of the direction-space row matrix.
    BitMatrix dirRows(d, n);
    for (int r = 0; r < d; ++r) {
        dirRows.setRow(r, basis[static_cast<std::size_t>(r)]);
    }
    const std::vector<BitVec> rowNull = nullspaceBasis(dirRows);
    const int m = static_cast<int>(rowNull.size());
    BitMatrix constraints(m, n);
    BitVec rhs(static_cast<std::size_t>(m), 0);
    for (int r = 0; r < m; ++r) {
        constraints.setRow(r, rowNull[static_cast<std::size_t>(r)]);
        rhs[static_cast<std::size_t>(r)] = constraints.rowDot(r, x0) ? 1 : 0;
    }
    AffineSpace space(n, constraints, rhs);
    for (const auto& pt : points) {
        if (!space.contains(pt)) {
            return std::nullopt;
        }
    }
    return space;
}

bool AffineSpace::contains(const BitVec& x) const {
    for (int r = 0; r < constraints_.rows(); ++r) {
        if (constraints_.rowDot(r, x) != (rhs_[static_cast<std::size_t>(r)] != 0)) {
            return false;
        }
    }
    return true;
}

std::vector<int> AffineSpace::canonicalFreeVars() const {
    // x_j is free iff the direction space contains a vector whose first set
    // bit is at position j, i.e. F is the set of pivot columns of the
    // direction-space basis in echelon form.
    const std::vector<BitVec> dirBasis = nullspaceBasis(constraints_);
    const int d = static_cast<int>(dirBasis.size());
    BitMatrix dirRows(d, n_);
    for (int r = 0; r < d; ++r) {
        dirRows.setRow(r, dirBasis[static_cast<std::size_t>(r)]);
    }
    const RrefResult red = rref(dirRows, BitVec(static_cast<std::size_t>(d), 0));
    return red.pivots;
}

DependencyTable AffineSpace::dependencyTable(const std::vector<int>& freeVars) const {
    if (static_cast<int>(freeVars.size()) != dim()) {
        throw InvalidFreeSetError("free set size must equal the space dimension");
    }
    std::vector<bool> isFree(static_cast<std::size_t>(n_), false);
    for (const int f : freeVars) {
        if (f < 0 || f >= n_ || isFree[static_cast<std::size_t>(f)]) {
            throw InvalidFreeSetError("free set contains an invalid or repeated index");
        }
        isFree[static_cast<std::size_t>(f)] = true;
    }
    std::vector<int> depVars;
    for (int j = 0; j < n_; ++j) {
        if (!isFree[static_cast<std::size_t>(j)]) {
            depVars.push_back(j);
        }
    }
    const int m = constraints_.rows();
    if (static_cast<int>(depVars.size()) != m) {
        throw InvalidFreeSetError("free set size mismatch");
    }
    // Column-permuted elimination: solve for the dependent columns.
    // Work matrix layout: [dep columns | free columns | rhs].
    BitMatrix work(m, n_ + 1);
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < m; ++j) {
            work.set(r, j, constraints_.get(r, depVars[static_cast<std::size_t>(j)]));
        }
        for (std::size_t j = 0; j < freeVars.size(); ++j) {
            work.set(r, m + static_cast<int>(j),
                     constraints_.get(r, freeVars[j]));
        }
        work.set(r, n_, rhs_[static_cast<std::size_t>(r)] != 0);
    }
    const RrefResult red = rref(work, BitVec(static_cast<std::size_t>(m), 0));
    // Every pivot must fall inside the dependent-column block.
    if (static_cast<int>(red.pivots.size()) != m ||
        (m > 0 && red.pivots.back() >= m)) {
        throw InvalidFreeSetError("free set does not parameterize the space");
    }
    DependencyTable table;
    table.freeVars = freeVars;
    std::sort(table.freeVars.begin(), table.freeVars.end());
    for (int r = 0; r < m; ++r) {
        DependencyRow row;
        row.variable = depVars[static_cast<std::size_t>(red.pivots[static_cast<std::size_t>(r)])];
        row.constant = red.matrix.get(r, n_);
        for (std::size_t j = 0; j < freeVars.size(); ++j) {
            if (red.matrix.get(r, m + static_cast<int>(j))) {
                row.coefficients.push_back(freeVars[j]);
            }
        }
        std::sort(row.coefficients.begin(), row.coefficients.end());
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const DependencyRow& a, const DependencyRow& b) { return a.variable < b.variable; });
    return table;
}

std::vector<BitVec> AffineSpace::enumeratePoints(int dimLimit) const {
    const int d = dim();
    if (d > dimLimit) {
        throw SizeLimitError("affine space dimension exceeds the enumeration limit");
    }
    const DependencyTable table = dependencyTable(canonicalFreeVars());
    std::vector<BitVec> points;
    points.reserve(std::size_t{1} << d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        BitVec freeAssign(static_cast<std::size_t>(d), 0);
        for (int j = 0; j < d; ++j) {
            freeAssign[static_cast<std::size_t>(j)] = (mask >> j) & 1U ? 1 : 0;
        }
        points.push_back(table.inducedPoint(n_, freeAssign));
    }
    std::sort(points.begin(), points.end());
    return points;
}

} // namespace zxcf
