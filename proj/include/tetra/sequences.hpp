#pragma once

// Generalized Tetranacci sequences V_n = V_{n-1} + V_{n-2} + V_{n-3} + V_{n-4}
// over all integer indices, and their Gaussian lifts GV_n = V_n + i V_{n-1}.

#include "tetra/gaussint.hpp"

#include <array>
#include <string>
#include <vector>

namespace tetra {

// Initial values V_0..V_3 of a generalized Tetranacci sequence.
class SeqSpec {
public:
    // Throws std::invalid_argument when all four values are zero.
    SeqSpec(BigInt c0, BigInt c1, BigInt c2, BigInt c3);

    // Skips the not-all-zero check; the zero sequence is needed for linearity tests.
    static SeqSpec unchecked(BigInt c0, BigInt c1, BigInt c2, BigInt c3);

    const std::array<BigInt, 4>& initials() const { return c_; }
    const BigInt& c(std::size_t k) const { return c_.at(k); }

    friend bool operator==(const SeqSpec& a, const SeqSpec& b) { return a.c_ == b.c_; }

private:
    struct Unchecked {};
    SeqSpec(Unchecked, std::array<BigInt, 4> c) : c_(std::move(c)) {}

    std::array<BigInt, 4> c_;
};

enum class NamedSeq { M, R, U };

// M = (0,1,1,2) Tetranacci, R = (4,1,3,7) Tetranacci-Lucas, U = (0,0,1,1).
const SeqSpec& named(NamedSeq tag);
const SeqSpec& tetranacci();
const SeqSpec& tetranacci_lucas();
const SeqSpec& shifted_tetranacci();

std::string to_string(const SeqSpec& spec);

// V_n for any integer n.
BigInt term(const SeqSpec& spec, long n);

// GV_n = V_n + i V_{n-1}.
GaussianInt gterm(const SeqSpec& spec, long n);

// (GV_0, GV_1, GV_2, GV_3) in the closed form
// GV_0 = c0 + i(c3 - c2 - c1 - c0), GV_k = c_k + i c_{k-1}.
std::array<GaussianInt, 4> gaussian_initials(const SeqSpec& spec);

// V_lo..V_hi in one sweep. Throws std::invalid_argument when lo > hi.
std::vector<BigInt> term_range(const SeqSpec& spec, long lo, long hi);

// GV_lo..GV_hi in one sweep. Throws std::invalid_argument when lo > hi.
std::vector<GaussianInt> gterm_range(const SeqSpec& spec, long lo, long hi);

}  // namespace tetra
