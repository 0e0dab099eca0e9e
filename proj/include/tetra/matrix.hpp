#pragma once

// 4x4 matrices over Gaussian integers, companion-matrix powering and the
// A^n * N = E(n) relations between the companion matrix and Hankel-style
// windows of Gaussian Tetranacci terms.

#include "tetra/check.hpp"
#include "tetra/gaussint.hpp"
#include "tetra/sequences.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace tetra {

class Matrix4 {
public:
    using Row = std::array<GaussianInt, 4>;

    Matrix4() = default;
    explicit Matrix4(std::array<Row, 4> rows) : e_(std::move(rows)) {}

    static Matrix4 zero() { return {}; }
    static Matrix4 identity();
    // Rows (1,1,1,1), (1,0,0,0), (0,1,0,0), (0,0,1,0).
    static Matrix4 companion();

    const GaussianInt& operator()(std::size_t r, std::size_t c) const { return e_[r][c]; }
    GaussianInt& operator()(std::size_t r, std::size_t c) { return e_[r][c]; }
    const Row& row(std::size_t r) const { return e_[r]; }

    friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
    friend bool operator==(const Matrix4& a, const Matrix4& b) { return a.e_ == b.e_; }

    std::array<GaussianInt, 4> apply(const std::array<GaussianInt, 4>& v) const;

private:
    std::array<Row, 4> e_{};
};

class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline Matrix4 mat_mul(const Matrix4& a, const Matrix4& b) { return a * b; }

GaussianInt determinant(const Matrix4& m);

// Transposed cofactor matrix: m * adjugate(m) = det(m) * I.
Matrix4 adjugate(const Matrix4& m);

// Inverse over Z[i]; requires det(m) to be a unit. Throws NotInvertibleError.
Matrix4 inverse(const Matrix4& m);

// base^n by left-to-right square-and-multiply. Negative n powers the inverse
// and throws NotInvertibleError unless det(base) is a unit.
Matrix4 mat_pow(const Matrix4& base, long n);

// V_n as the bottom entry of A^n (V_3, V_2, V_1, V_0)^T.
BigInt term_by_power(const SeqSpec& spec, long n);

// Compares A^n entrywise with its three closed forms: in M terms, in U terms,
// and the U-difference form. n may be any integer.
CheckResult structure_check(long n);

using IntTerms = std::function<BigInt(long)>;
using GaussianTerms = std::function<GaussianInt(long)>;

// As above with M_k and U_k supplied by the caller and A^n precomputed.
CheckResult structure_check(const Matrix4& power, long n, const IntTerms& M, const IntTerms& U);

// The entries a1..a4 of the last column of N_V.
struct NVCoefficients {
    GaussianInt a1, a2, a3, a4;

    static NVCoefficients from(const SeqSpec& spec);
};

enum class NEKind { M, R, V };

// N is the constant right factor and E(n) the Hankel window
// E(n)[r][c] = GV_{n+3-r-c}, so that A^n N = E(n).
struct NEPair {
    SeqSpec spec;
    Matrix4 N;

    Matrix4 E(long n) const;
};

// N_M and N_R as tabulated constants; N_V assembled from the spec and a1..a4.
Matrix4 tabulated_N_M();
Matrix4 tabulated_N_R();
Matrix4 N_V(const SeqSpec& spec);

// kind M and R ignore spec and use the tabulated matrices.
NEPair build_NE(NEKind kind, const SeqSpec& spec = tetranacci());

// Checks mat_pow(A, n) * N == E(n) entrywise.
CheckResult ne_theorem_check(NEKind kind, long n, const SeqSpec& spec = tetranacci());

// Checks power * N == E(n) with E assembled from caller-supplied GV_k.
CheckResult ne_theorem_check(const Matrix4& power, const Matrix4& N, long n, const GaussianTerms& gv);

}  // namespace tetra
