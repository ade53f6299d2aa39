#pragma once

#include "zxcf/gaussian.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace zxcf {

/// Single-qubit phase gate generator: a rotation of k quarter turns about
/// the Z or the X axis. All phases in this project are exact multiples of
/// pi/2, stored as integers.
enum class Axis : std::uint8_t { Z, X };

struct Gate {
    Axis axis = Axis::Z;
    int quarterTurns = 0; // 1..3; 0 turns are never stored

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// A word of phase-gate generators. The last element of the word is the gate
/// closest to the spider; the matrix of the word is the left-to-right product
/// gates[0] * gates[1] * ... * gates.back().
using CliffordWord = std::vector<Gate>;

Mat2 gateMatrix(const Gate& g);
Mat2 wordMatrix(const CliffordWord& w);

/// Z(k) and X(k) convenience matrices.
Mat2 zPhase(int quarterTurns);
Mat2 xPhase(int quarterTurns);
Mat2 hadamard();

/// The single-qubit Clifford group modulo global phase has 24 elements.
/// Every element gets a fixed canonical word (shortest, then lexicographically
/// first in BFS order over the generators), so serialized diagrams are
/// deterministic.
struct CliffordClass {
    CliffordWord word;
    Mat2 matrix;
};

const std::vector<CliffordClass>& cliffordRegistry();

/// Index of the class proportional to m in the registry; m must be a
/// (non-zero multiple of a) Clifford matrix.
int cliffordClassIndex(const Mat2& m);

/// Canonical word for an arbitrary word / matrix.
CliffordWord canonicalWord(const CliffordWord& w);
CliffordWord canonicalWordOf(const Mat2& m);

std::string wordToString(const CliffordWord& w);
std::optional<CliffordWord> wordFromString(const std::string& s);

// --- Measurement effects ---------------------------------------------------

enum class MeasBasis : std::uint8_t { X, Y, Z };
enum class Sign : std::uint8_t { Plus, Minus };

struct Measurement {
    MeasBasis basis = MeasBasis::X;
    Sign sign = Sign::Plus;

    friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// The effect covector <e| of a Pauli measurement outcome:
///   (X,+) -> (1, 1)    (X,-) -> (1, -1)
///   (Y,+) -> (1, -i)   (Y,-) -> (1, i)
///   (Z,+) -> (1, 0)    (Z,-) -> (0, 1)
std::array<Gaussian, 2> effectCovector(const Measurement& m);

/// Re-normalizes a covector into Table-1 form (exact proportionality match
/// against the six Pauli effects). Empty when the covector is not
/// proportional to any Pauli effect.
std::optional<Measurement> normalizeEffect(const std::array<Gaussian, 2>& cov);

/// The effect obtained by applying the unitary u to the qubit before
/// measuring: <e| u, renormalized. A Clifford u always yields a Pauli effect.
Measurement effectAfterGate(const Measurement& m, const Mat2& u);

std::string basisToString(MeasBasis b);
std::optional<MeasBasis> basisFromString(const std::string& s);

} // namespace zxcf
