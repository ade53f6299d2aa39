#include "zxcf/bitmatrix.hpp"

#include "zxcf/errors.hpp"

#include <algorithm>

namespace zxcf {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wordsPerRow_((cols + 63) / 64),
      words_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(wordsPerRow_), 0) {}

bool BitMatrix::get(int row, int col) const {
    const auto idx = static_cast<std::size_t>(row) * static_cast<std::size_t>(wordsPerRow_) +
                     static_cast<std::size_t>(col / 64);
    return ((words_[idx] >> (col % 64)) & 1U) != 0;
}

void BitMatrix::set(int row, int col, bool value) {
    const auto idx = static_cast<std::size_t>(row) * static_cast<std::size_t>(wordsPerRow_) +
                     static_cast<std::size_t>(col / 64);
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    if (value) {
        words_[idx] |= bit;
    } else {
        words_[idx] &= ~bit;
    }
}

void BitMatrix::xorRow(int target, int source) {
    const auto t = static_cast<std::size_t>(target) * static_cast<std::size_t>(wordsPerRow_);
    const auto s = static_cast<std::size_t>(source) * static_cast<std::size_t>(wordsPerRow_);
    for (int w = 0; w < wordsPerRow_; ++w) {
        words_[t + static_cast<std::size_t>(w)] ^= words_[s + static_cast<std::size_t>(w)];
    }
}

void BitMatrix::swapRows(int r1, int r2) {
    if (r1 == r2) {
        return;
    }
    const auto a = static_cast<std::size_t>(r1) * static_cast<std::size_t>(wordsPerRow_);
    const auto b = static_cast<std::size_t>(r2) * static_cast<std::size_t>(wordsPerRow_);
    for (int w = 0; w < wordsPerRow_; ++w) {
        std::swap(words_[a + static_cast<std::size_t>(w)], words_[b + static_cast<std::size_t>(w)]);
    }
}

BitVec BitMatrix::row(int r) const {
    BitVec out(static_cast<std::size_t>(cols_), 0);
    for (int c = 0; c < cols_; ++c) {
        out[static_cast<std::size_t>(c)] = get(r, c) ? 1 : 0;
    }
    return out;
}

void BitMatrix::setRow(int r, const BitVec& bits) {
    if (static_cast<int>(bits.size()) != cols_) {
        throw DimensionError("row length mismatch");
    }
    for (int c = 0; c < cols_; ++c) {
        set(r, c, bits[static_cast<std::size_t>(c)] != 0);
    }
}

bool BitMatrix::rowDot(int r, const BitVec& x) const {
    if (static_cast<int>(x.size()) != cols_) {
        throw DimensionError("vector length mismatch");
    }
    bool acc = false;
    for (int c = 0; c < cols_; ++c) {
        acc ^= get(r, c) && (x[static_cast<std::size_t>(c)] != 0);
    }
    return acc;
}

RrefResult rref(const BitMatrix& m, const BitVec& augment) {
    if (static_cast<int>(augment.size()) != m.rows()) {
        throw DimensionError("augment length must equal the number of rows");
    }
    BitMatrix work = m;
    BitVec aug = augment;
    const int rows = m.rows();
    const int cols = m.cols();

    std::vector<int> pivots;
    int nextRow = 0;
    for (int col = 0; col < cols && nextRow < rows; ++col) {
        int pivotRow = -1;
        for (int r = nextRow; r < rows; ++r) {
            if (work.get(r, col)) {
                pivotRow = r;
                break;
            }
        }
        if (pivotRow < 0) {
            continue;
        }
        work.swapRows(nextRow, pivotRow);
        std::swap(aug[static_cast<std::size_t>(nextRow)], aug[static_cast<std::size_t>(pivotRow)]);
        for (int r = 0; r < rows; ++r) {
            if (r != nextRow && work.get(r, col)) {
                work.xorRow(r, nextRow);
                aug[static_cast<std::size_t>(r)] ^= aug[static_cast<std::size_t>(nextRow)];
            }
        }
        pivots.push_back(col);
        ++nextRow;
    }

    RrefResult res;
    res.pivots = pivots;
    res.consistent = true;
    for (int r = nextRow; r < rows; ++r) {
        if (aug[static_cast<std::size_t>(r)] != 0) {
            res.consistent = false;
        }
    }
    const int rank = static_cast<int>(pivots.size());
    res.matrix = BitMatrix(rank, cols);
    res.augment.assign(static_cast<std::size_t>(rank), 0);
    for (int r = 0; r < rank; ++r) {
        res.matrix.setRow(r, work.row(r));
        res.augment[static_cast<std::size_t>(r)] = aug[static_cast<std::size_t>(r)];
    }
    return res;
}

std::vector<BitVec> nullspaceBasis(const BitMatrix& m) {
    const BitVec zero(static_cast<std::size_t>(m.rows()), 0);
    const RrefResult red = rref(m, zero);
    const int cols = m.cols();
    std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
    for (const int p : red.pivots) {
        isPivot[static_cast<std::size_t>(p)] = true;
    }
    std::vector<BitVec> basis;
    for (int freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[static_cast<std::size_t>(freeCol)]) {
            continue;
        }
        BitVec v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(freeCol)] = 1;
        for (int r = 0; r < red.matrix.rows(); ++r) {
            if (red.matrix.get(r, freeCol)) {
                v[static_cast<std::size_t>(red.pivots[static_cast<std::size_t>(r)])] = 1;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace zxcf
