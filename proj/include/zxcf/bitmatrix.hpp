#pragma once

#include <cstdint>
#include <vector>

namespace zxcf {

using BitVec = std::vector<std::uint8_t>; // entries 0/1

/// Dense GF(2) matrix with word-packed rows (64 columns per word).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    [[nodiscard]] bool get(int row, int col) const;
    void set(int row, int col, bool value);

    /// rows_[target] ^= rows_[source]
    void xorRow(int target, int source);
    void swapRows(int r1, int r2);

    [[nodiscard]] BitVec row(int r) const;
    void setRow(int r, const BitVec& bits);

    /// Matrix-vector product over GF(2).
    [[nodiscard]] bool rowDot(int r, const BitVec& x) const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int wordsPerRow_ = 0;
    std::vector<std::uint64_t> words_;
};

struct RrefResult {
    BitMatrix matrix;        // reduced row echelon form (zero rows dropped)
    BitVec augment;          // the reduced augment column, one entry per kept row
    std::vector<int> pivots; // pivot column per kept row, ascending
    bool consistent = true;  // false when a row 0...0 | 1 appeared
};

/// Reduced row echelon form of [M | augment] over GF(2).
/// Throws DimensionError when augment.size() != M.rows().
RrefResult rref(const BitMatrix& m, const BitVec& augment);

/// Basis of the null space {x : Mx = 0}, one BitVec per basis vector.
std::vector<BitVec> nullspaceBasis(const BitMatrix& m);

} // namespace zxcf
