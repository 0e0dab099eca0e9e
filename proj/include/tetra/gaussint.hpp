#pragma once

// Exact Gaussian integers a + bi over GMP integers.

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace tetra {

using BigInt = mpz_class;

class GaussianInt {
public:
    GaussianInt() = default;
    GaussianInt(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianInt(BigInt re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianInt(long re, long im) : re_(re), im_(im) {}

    static GaussianInt i() { return {0L, 1L}; }

    const BigInt& re() const { return re_; }
    const BigInt& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    // One of 1, -1, i, -i.
    bool is_unit() const;

    GaussianInt conj() const { return {re_, -im_}; }

    GaussianInt operator-() const { return {-re_, -im_}; }

    GaussianInt& operator+=(const GaussianInt& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianInt& operator-=(const GaussianInt& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianInt& operator*=(const GaussianInt& o);

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    BigInt re_{0};
    BigInt im_{0};
};

// a^2 + b^2. The Euclidean norm is the square root of this; it is never formed.
BigInt norm_sq(const GaussianInt& x);

// num / den when the quotient is a Gaussian integer, nullopt otherwise
// (including den == 0).
std::optional<GaussianInt> divide_exact(const GaussianInt& num, const GaussianInt& den);

// "a+bi", "a-bi", "bi", "i", "-i", "a"; "0" for zero. No spaces.
std::string to_string(const GaussianInt& x);

// Inverse of to_string. Throws std::invalid_argument on malformed text.
GaussianInt parse_gaussian(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianInt& x);

}  // namespace tetra
