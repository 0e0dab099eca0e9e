#pragma once

// Floating-point Binet side: the roots of x^4 - x^3 - x^2 - x - 1, the Binet
// coefficients of a sequence, and evaluation checked against exact terms.

#include "tetra/gaussint.hpp"
#include "tetra/sequences.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace tetra {

using Complex = std::complex<double>;

// Canonical labeling: alpha real > 1, beta real in (-1, 0), gamma the complex
// root with positive imaginary part, delta its conjugate.
struct QuarticRoots {
    Complex alpha, beta, gamma, delta;

    std::array<Complex, 4> as_array() const { return {alpha, beta, gamma, delta}; }
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// r^4 - r^3 - r^2 - r - 1.
Complex characteristic(Complex r);

// Simultaneous (Weierstrass) iteration followed by Newton polishing. Computed
// once; later calls return the cached value. Throws NumericError if the
// iteration fails to converge.
const QuarticRoots& roots_numeric();

// The real radical
//   w = sqrt(11/12 + cbrt(-65/54 + sqrt(563/108)) + cbrt(-65/54 - sqrt(563/108))).
double radical_omega();

// alpha, beta = 1/4 + w/2 +- sqrt(11/4 - w^2 + 13/(4w))/2,
// gamma, delta = 1/4 - w/2 +- sqrt(11/4 - w^2 - 13/(4w))/2 (complex square root).
QuarticRoots roots_radical();

// V_n = A alpha^(n-6) + B beta^(n-6) + C gamma^(n-6) + D delta^(n-6).
struct BinetCoeffs {
    Complex A, B, C, D;
};

// Each coefficient is ((r-1)/(5r-8)) (V3 r^3 + (V0+V1+V2) r^2 + (V1+V2) r + V2)
// evaluated at its own root r.
BinetCoeffs binet_coeffs(const SeqSpec& spec);

// Largest |n| for which binet_eval marks its result as validated.
inline constexpr long kBinetValidatedIndex = 64;
// Components above this are too coarse in double for the rounding distance
// to mean anything (spacing 2^-7 at 2^45).
inline constexpr double kBinetExactMagnitude = 35184372088832.0;  // 2^45
// Rounding distance must stay below 0.5 - guard.
inline constexpr double kDefaultGuardBand = 0.1;

struct BinetValue {
    long n = 0;
    Complex value;
    // |n| <= kBinetValidatedIndex, negligible imaginary residue, components
    // below kBinetExactMagnitude and rounding distance <= 0.5 - guard.
    // Otherwise the value is still returned, just unvalidated.
    bool validated = false;

    // Componentwise nearest Gaussian integer.
    GaussianInt rounded() const;
    // Largest componentwise distance to rounded().
    double rounding_error() const;
};

// Plain: the Binet sum at n. Gaussian: Binet(n) + i Binet(n-1), following
// GV_n = V_n + i V_{n-1}.
BinetValue binet_eval(const SeqSpec& spec, long n, bool gaussian, double guard = kDefaultGuardBand);

// Tetranacci closed form sum_r ((r-1)/(5r-8)) r^(n-1).
Complex tetranacci_closed_form(long n);

// Power sum alpha^n + beta^n + gamma^n + delta^n.
Complex power_sum(long n);

struct SymmetricReport {
    // e1..e4 of the computed roots; expected 1, -1, 1, -1.
    std::array<Complex, 4> e;
    bool pass = false;
    std::string detail;
};

SymmetricReport symmetric_check(const QuarticRoots& roots = roots_numeric(), double tol = 1e-10);

}  // namespace tetra
