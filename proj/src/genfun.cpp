#include "tetra/genfun.hpp"

#include <algorithm>

namespace tetra {

GPoly::GPoly(std::initializer_list<GaussianInt> coeffs) : c_(coeffs) { normalize(); }

GPoly::GPoly(std::vector<GaussianInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

void GPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GPoly GPoly::reflect() const {
    std::vector<GaussianInt> out = c_;
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return GPoly(std::move(out));
}

GPoly operator+(const GPoly& a, const GPoly& b) {
    std::vector<GaussianInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
    return GPoly(std::move(out));
}

GPoly operator-(const GPoly& a, const GPoly& b) {
    std::vector<GaussianInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
    return GPoly(std::move(out));
}

GPoly operator*(const GPoly& a, const GPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return GPoly(std::move(out));
}

GPoly operator*(const GaussianInt& s, const GPoly& p) {
    std::vector<GaussianInt> out = p.c_;
    for (auto& v : out) v = s * v;
    return GPoly(std::move(out));
}

namespace {

std::string monomial(char var, std::size_t k) {
    if (k == 0) return {};
    if (k == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(k);
}

}  // namespace

std::string to_string(const GPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const GaussianInt& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        const std::string mono = monomial(var, k);
        const bool first = out.empty();
        if (c.is_real() || sgn(c.re()) == 0) {
            // Single-component coefficient: sign goes in front, a unit magnitude is dropped.
            const bool neg = c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
            const GaussianInt mag = neg ? -c : c;
            std::string body = to_string(mag);
            if (!mono.empty() && body == "1") body.clear();
            out += neg ? "-" : (first ? "" : "+");
            out += body + mono;
        } else {
            if (!first) out += '+';
            out += "(" + to_string(c) + ")" + mono;
        }
    }
    return out;
}

RationalGF::RationalGF(GPoly num, GPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_[0].is_zero()) throw ExpansionError("denominator has a zero constant term");
}

std::string to_string(const RationalGF& f, char var) {
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

GPoly tetranacci_denominator() { return {1, -1, -1, -1, -1}; }

GPoly bisected_denominator() { return {1, -3, -3, 1, 1}; }

namespace {

template <class T>
GPoly initial_numerator(const std::array<T, 4>& w) {
    return {GaussianInt(w[0]), GaussianInt(w[1] - w[0]), GaussianInt(w[2] - w[1] - w[0]),
            GaussianInt(w[3] - w[2] - w[1] - w[0])};
}

template <class T>
RationalGF even_odd_form(const std::array<T, 4>& w, Parity parity) {
    const GaussianInt w0(w[0]), w1(w[1]), w2(w[2]), w3(w[3]);
    const GaussianInt two(2), three(3);
    GPoly num;
    if (parity == Parity::Even) {
        num = {w0, w2 - three * w0, w1 + w3 - two * w0 - two * w2, w3 - two * w2};
    } else {
        num = {w1, w3 - three * w1, w0 - w1 + two * w2 - w3, w0 + w1 + w2 - w3};
    }
    return {std::move(num), bisected_denominator()};
}

}  // namespace

RationalGF gf_for(const SeqSpec& spec, bool gaussian) {
    if (gaussian) return {initial_numerator(gaussian_initials(spec)), tetranacci_denominator()};
    return {initial_numerator(spec.initials()), tetranacci_denominator()};
}

std::vector<GaussianInt> coeffs(const RationalGF& f, std::size_t k) {
    const GPoly& num = f.num();
    const GPoly& den = f.den();
    const GaussianInt& d0 = den[0];
    if (d0.is_zero()) throw ExpansionError("denominator has a zero constant term");

    std::vector<GaussianInt> a;
    a.reserve(k);
    const std::size_t dlen = den.coeffs().size();
    for (std::size_t n = 0; n < k; ++n) {
        // d0 a_n = p_n - sum_{j>=1} d_j a_{n-j}
        GaussianInt rhs = num[n];
        for (std::size_t j = 1; j < dlen && j <= n; ++j) {
            if (den.coeffs()[j].is_zero()) continue;
            rhs -= den.coeffs()[j] * a[n - j];
        }
        if (d0.is_unit()) {
            a.push_back(rhs * d0.conj());
        } else {
            auto q = divide_exact(rhs, d0);
            if (!q) {
                throw ExpansionError("series coefficient " + std::to_string(n) +
                                     " is not a Gaussian integer");
            }
            a.push_back(std::move(*q));
        }
    }
    return a;
}

RationalGF bisect(const RationalGF& f, Parity parity) {
    const GPoly& p = f.num();
    const GPoly& q = f.den();
    const GPoly a = p * q.reflect();  // P(x)Q(-x)
    const GPoly b = p.reflect() * q;  // P(-x)Q(x)
    const GPoly num = parity == Parity::Even ? a + b : a - b;
    const GPoly den = GaussianInt(2) * (q * q.reflect());

    // Surviving powers: even for the denominator and the even numerator, odd for the odd numerator.
    const std::size_t num_offset = parity == Parity::Even ? 0 : 1;
    auto squeeze = [](const GPoly& poly, std::size_t offset, const char* what) {
        std::vector<GaussianInt> out;
        for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
            const GaussianInt& c = poly.coeffs()[k];
            if (k % 2 != offset) {
                if (!c.is_zero()) {
                    throw std::logic_error(std::string("bisect: ") + what + " coefficient of x^" +
                                           std::to_string(k) + " should vanish");
                }
                continue;
            }
            auto half = divide_exact(c, GaussianInt(2));
            if (!half) throw std::logic_error(std::string("bisect: ") + what + " not divisible by 2");
            out.push_back(std::move(*half));
        }
        return GPoly(std::move(out));
    };
    return {squeeze(num, num_offset, "numerator"), squeeze(den, 0, "denominator")};
}

bool gf_equal(const RationalGF& a, const RationalGF& b) {
    return a.num() * b.den() == b.num() * a.den();
}

RationalGF closed_even_odd(const SeqSpec& spec, Parity parity, bool gaussian) {
    if (gaussian) return even_odd_form(gaussian_initials(spec), parity);
    return even_odd_form(spec.initials(), parity);
}

RationalGF tabulated_gf(NamedSeq seq, bool gaussian) {
    switch (seq) {
    case NamedSeq::M:
        if (gaussian) return {{0, 1, GaussianInt::i()}, tetranacci_denominator()};
        return {{0, 1}, tetranacci_denominator()};
    case NamedSeq::R:
        if (gaussian) {
            return {{GaussianInt(4, -1), -GaussianInt(3, -5), -GaussianInt(2, 2), -GaussianInt(1, 1)},
                    tetranacci_denominator()};
        }
        return {{4, -3, -2, -1}, tetranacci_denominator()};
    case NamedSeq::U: break;
    }
    throw std::invalid_argument("no tabulated generating function for this sequence");
}

RationalGF tabulated_even_odd(NamedSeq seq, Parity parity, bool gaussian) {
    const bool even = parity == Parity::Even;
    GPoly num;
    switch (seq) {
    case NamedSeq::M:
        if (gaussian) {
            num = even ? GPoly{0, GaussianInt(1, 1), GaussianInt(1, -1), GaussianInt(0, -1)}
                       : GPoly{1, -GaussianInt(1, -1), -GaussianInt(1, -1)};
        } else {
            num = even ? GPoly{0, 1, 1} : GPoly{1, -1, -1};
        }
        break;
    case NamedSeq::R:
        if (gaussian) {
            num = even ? GPoly{GaussianInt(4, -1), -GaussianInt(9, -4), -GaussianInt(6, -7),
                               GaussianInt(1, 1)}
                       : GPoly{GaussianInt(1, 4), GaussianInt(4, -9), GaussianInt(2, -6),
                               GaussianInt(1, 1)};
        } else {
            num = even ? GPoly{4, -9, -6, 1} : GPoly{1, 4, 2, 1};
        }
        break;
    case NamedSeq::U:
        throw std::invalid_argument("no tabulated even/odd generating function for U");
    }
    return {std::move(num), bisected_denominator()};
}

}  // namespace tetra
