#pragma once

// Polynomials over Z[i] and rational generating functions P(x)/Q(x):
// series expansion, even/odd bisection and cross-multiplied equality.

#include "tetra/gaussint.hpp"
#include "tetra/sequences.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tetra {

// Dense polynomial, coefficient k multiplies x^k. Trailing zeros are stripped,
// so the zero polynomial has no coefficients and degree() == -1.
class GPoly {
public:
    GPoly() = default;
    GPoly(std::initializer_list<GaussianInt> coeffs);
    explicit GPoly(std::vector<GaussianInt> coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<GaussianInt>& coeffs() const { return c_; }

    // Zero beyond the stored range.
    GaussianInt operator[](std::size_t k) const { return k < c_.size() ? c_[k] : GaussianInt{}; }

    // p(-x).
    GPoly reflect() const;

    friend GPoly operator+(const GPoly& a, const GPoly& b);
    friend GPoly operator-(const GPoly& a, const GPoly& b);
    friend GPoly operator*(const GPoly& a, const GPoly& b);
    friend GPoly operator*(const GaussianInt& s, const GPoly& p);
    friend bool operator==(const GPoly& a, const GPoly& b) { return a.c_ == b.c_; }

private:
    void normalize();

    std::vector<GaussianInt> c_;
};

// Low-to-high rendering without spaces, e.g. "(1+i)x+(1-i)x^2-ix^3"; "0" for zero.
std::string to_string(const GPoly& p, char var = 'x');

class ExpansionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// num/den with den(0) != 0, so the Maclaurin series exists. Not reduced to
// lowest terms; compare with gf_equal.
class RationalGF {
public:
    // Throws ExpansionError if den has a zero constant term.
    RationalGF(GPoly num, GPoly den);

    const GPoly& num() const { return num_; }
    const GPoly& den() const { return den_; }

private:
    GPoly num_;
    GPoly den_;
};

std::string to_string(const RationalGF& f, char var = 'x');

enum class Parity { Even, Odd };

// 1 - x - x^2 - x^3 - x^4.
GPoly tetranacci_denominator();

// 1 - 3y - 3y^2 + y^3 + y^4, the denominator of the bisected series.
GPoly bisected_denominator();

// Numerator V0 + (V1-V0)x + (V2-V1-V0)x^2 + (V3-V2-V1-V0)x^3 over
// 1 - x - x^2 - x^3 - x^4, with GV initials when gaussian is set.
RationalGF gf_for(const SeqSpec& spec, bool gaussian);

// First k series coefficients. Throws ExpansionError when a coefficient is not
// a Gaussian integer (possible only when den(0) is not a unit).
std::vector<GaussianInt> coeffs(const RationalGF& f, std::size_t k);

// Generating function of the even- or odd-indexed subsequence, in the variable
// y = x^2. Computed as [P(x)Q(-x) +- P(-x)Q(x)] / [2 Q(x)Q(-x)]. Throws
// std::logic_error if a coefficient that must vanish does not.
RationalGF bisect(const RationalGF& f, Parity parity);

// a.num * b.den == b.num * a.den.
bool gf_equal(const RationalGF& a, const RationalGF& b);

// Closed-form even/odd generating functions over 1 - 3y - 3y^2 + y^3 + y^4:
//   even: W0 + (W2 - 3W0)y + (W1 + W3 - 2W0 - 2W2)y^2 + (W3 - 2W2)y^3
//   odd:  W1 + (W3 - 3W1)y + (W0 - W1 + 2W2 - W3)y^2 + (W0 + W1 + W2 - W3)y^3
// where W = V (plain) or GV (gaussian).
RationalGF closed_even_odd(const SeqSpec& spec, Parity parity, bool gaussian);

// Tabulated generating functions for M/R and their Gaussian lifts, written out
// coefficient by coefficient. Only NamedSeq::M and NamedSeq::R are tabulated.
RationalGF tabulated_gf(NamedSeq seq, bool gaussian);
RationalGF tabulated_even_odd(NamedSeq seq, Parity parity, bool gaussian);

}  // namespace tetra
