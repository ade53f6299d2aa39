#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zxcf {

/// Gaussian integer a + b*i. All stabilizer arithmetic in this project is
/// exact: amplitudes are Gaussian integers times a global power of sqrt(2).
struct Gaussian {
    long long re = 0;
    long long im = 0;

    constexpr Gaussian() = default;
    constexpr Gaussian(long long r, long long i) : re(r), im(i) {}

    [[nodiscard]] constexpr bool isZero() const { return re == 0 && im == 0; }

    friend constexpr Gaussian operator+(const Gaussian& x, const Gaussian& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend constexpr Gaussian operator-(const Gaussian& x, const Gaussian& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend constexpr Gaussian operator*(const Gaussian& x, const Gaussian& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend constexpr bool operator==(const Gaussian& x, const Gaussian& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend constexpr bool operator!=(const Gaussian& x, const Gaussian& y) { return !(x == y); }

    constexpr Gaussian& operator+=(const Gaussian& y) {
        re += y.re;
        im += y.im;
        return *this;
    }
    constexpr Gaussian& operator*=(const Gaussian& y) { return *this = *this * y; }

    [[nodiscard]] std::string str() const;
};

/// i^k for k mod 4.
constexpr Gaussian iPower(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

/// 2x2 matrix with Gaussian integer entries and a shared power of sqrt(2):
/// the represented matrix is (sqrt 2)^exp * [[a, b], [c, d]].
struct Mat2 {
    Gaussian a, b, c, d;
    int exp = 0;

    static constexpr Mat2 identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}, 0}; }

    [[nodiscard]] constexpr Gaussian at(int row, int col) const {
        return row == 0 ? (col == 0 ? a : b) : (col == 0 ? c : d);
    }

    friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, x.exp + y.exp};
    }

    [[nodiscard]] constexpr Mat2 transposed() const { return {a, c, b, d, exp}; }

    /// Equality up to a non-zero complex scalar (the sqrt(2) exponents are
    /// irrelevant because the scalar is arbitrary).
    [[nodiscard]] bool proportionalTo(const Mat2& other) const;
};

/// Proportionality of Gaussian vectors: t == z*s for some non-zero complex z.
/// Decided exactly by cross-multiplication.
bool proportionalVectors(const std::vector<Gaussian>& s, const std::vector<Gaussian>& t);

} // namespace zxcf
