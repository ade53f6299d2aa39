#include "zxcf/gaussian.hpp"

namespace zxcf {

std::string Gaussian::str() const {
    std::string s = std::to_string(re);
    s += (im < 0 ? "-" : "+") + std::to_string(im < 0 ? -im : im) + "i";
    return s;
}

bool Mat2::proportionalTo(const Mat2& other) const {
    const Gaussian xs[4] = {a, b, c, d};
    const Gaussian ys[4] = {other.a, other.b, other.c, other.d};
    std::vector<Gaussian> x(xs, xs + 4);
    std::vector<Gaussian> y(ys, ys + 4);
    return proportionalVectors(x, y);
}

bool proportionalVectors(const std::vector<Gaussian>& s, const std::vector<Gaussian>& t) {
    if (s.size() != t.size()) {
        return false;
    }
    int pivot = -1;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (!s[j].isZero()) {
            pivot = static_cast<int>(j);
            break;
        }
    }
    if (pivot < 0) {
        // Zero vector is proportional only to the zero vector.
        for (const auto& v : t) {
            if (!v.isZero()) {
                return false;
            }
        }
        return true;
    }
    if (t[static_cast<std::size_t>(pivot)].isZero()) {
        return false;
    }
    const Gaussian sp = s[static_cast<std::size_t>(pivot)];
    const Gaussian tp = t[static_cast<std::size_t>(pivot)];
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] * tp != t[j] * sp) {
            return false;
        }
    }
    return true;
}

} // namespace zxcf
