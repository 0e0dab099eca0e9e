#include "tetra/gaussint.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tetra {

bool GaussianInt::is_unit() const {
    if (sgn(im_) == 0) return abs(re_) == 1;
    if (sgn(re_) == 0) return abs(im_) == 1;
    return false;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
    *this = *this * o;
    return *this;
}

GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    // Real operands are common (companion-matrix powers, plain sequences).
    const bool ar = a.is_real();
    const bool br = b.is_real();
    if (ar && br) return GaussianInt(BigInt(a.re_ * b.re_));
    if (ar) return {BigInt(a.re_ * b.re_), BigInt(a.re_ * b.im_)};
    if (br) return {BigInt(a.re_ * b.re_), BigInt(a.im_ * b.re_)};
    return {BigInt(a.re_ * b.re_ - a.im_ * b.im_), BigInt(a.re_ * b.im_ + a.im_ * b.re_)};
}

BigInt norm_sq(const GaussianInt& x) {
    return x.re() * x.re() + x.im() * x.im();
}

std::optional<GaussianInt> divide_exact(const GaussianInt& num, const GaussianInt& den) {
    if (den.is_zero()) return std::nullopt;
    if (den.is_unit()) return num * den.conj();
    const BigInt n = norm_sq(den);
    const GaussianInt scaled = num * den.conj();
    if (!mpz_divisible_p(scaled.re().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(scaled.im().get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
    }
    BigInt re, im;
    mpz_divexact(re.get_mpz_t(), scaled.re().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), scaled.im().get_mpz_t(), n.get_mpz_t());
    return GaussianInt(std::move(re), std::move(im));
}

std::string to_string(const GaussianInt& x) {
    const int rs = sgn(x.re());
    const int is = sgn(x.im());
    if (is == 0) return x.re().get_str();

    std::string imag;
    if (abs(x.im()) != 1) imag = BigInt(abs(x.im())).get_str();
    imag += 'i';

    if (rs == 0) return (is < 0 ? "-" : "") + imag;
    return x.re().get_str() + (is < 0 ? "-" : "+") + imag;
}

namespace {

[[noreturn]] void bad_gaussian(std::string_view text) {
    throw std::invalid_argument("malformed Gaussian integer: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

// Optional sign followed by digits.
BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) bad_gaussian(whole);
    BigInt v(std::string(digits), 10);
    return (!s.empty() && s.front() == '-') ? BigInt(-v) : v;
}

// Imaginary magnitude text before the trailing 'i': "", "+", "-", "7", "-7".
BigInt parse_imag(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_integer(s, whole);
}

}  // namespace

GaussianInt parse_gaussian(std::string_view text) {
    if (text.empty()) bad_gaussian(text);
    if (text.back() != 'i') return GaussianInt(parse_integer(text, text));

    std::string_view body = text.substr(0, text.size() - 1);
    // The split point is the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {BigInt(0), parse_imag(body, text)};
    return {parse_integer(body.substr(0, split), text), parse_imag(body.substr(split), text)};
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& x) {
    return os << to_string(x);
}

}  // namespace tetra
