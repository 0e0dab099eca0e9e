#include "tetra/binet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <sstream>
#include <vector>

namespace tetra {

namespace {

Complex derivative(Complex r) { return ((4.0 * r - 3.0) * r - 2.0) * r - 1.0; }

// Integer power by squaring; negative exponents invert.
Complex ipow(Complex base, long e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    Complex result = 1.0;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

double residual_tolerance(Complex r) { return 1e-12 * std::max(1.0, std::pow(std::abs(r), 4)); }

Complex binet_sum(const BinetCoeffs& k, const QuarticRoots& r, long n) {
    return k.A * ipow(r.alpha, n - 6) + k.B * ipow(r.beta, n - 6) + k.C * ipow(r.gamma, n - 6) +
           k.D * ipow(r.delta, n - 6);
}

bool negligible_imag(Complex v) { return std::abs(v.imag()) < 1e-6 * std::max(1.0, std::abs(v)); }

QuarticRoots compute_roots() {
    std::array<Complex, 4> z{};
    const Complex seed(0.4, 0.9);
    for (std::size_t k = 0; k < 4; ++k) z[k] = ipow(seed, static_cast<long>(k));

    bool converged = false;
    for (int iter = 0; iter < 1000 && !converged; ++iter) {
        double step = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            Complex denom = 1.0;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != k) denom *= z[k] - z[j];
            const Complex delta = characteristic(z[k]) / denom;
            z[k] -= delta;
            step = std::max(step, std::abs(delta));
        }
        converged = step < 1e-15;
    }
    for (auto& r : z) {
        for (int k = 0; k < 4; ++k) r -= characteristic(r) / derivative(r);
    }

    QuarticRoots out{};
    int reals = 0, uppers = 0, lowers = 0;
    for (const Complex& r : z) {
        if (std::abs(r.imag()) < 1e-9) {
            const Complex real(r.real(), 0.0);
            (r.real() > 0 ? out.alpha : out.beta) = real;
            ++reals;
        } else if (r.imag() > 0) {
            out.gamma = r;
            ++uppers;
        } else {
            out.delta = r;
            ++lowers;
        }
    }
    const bool labeled = reals == 2 && uppers == 1 && lowers == 1 && out.alpha.real() > 1.0 &&
                         out.beta.real() > -1.0 && out.beta.real() < 0.0;
    if (!labeled) throw NumericError("quartic roots could not be labeled");
    for (const Complex& r : out.as_array()) {
        if (std::abs(characteristic(r)) > residual_tolerance(r)) {
            throw NumericError("quartic root iteration did not converge");
        }
    }
    return out;
}

}  // namespace

Complex characteristic(Complex r) { return (((r - 1.0) * r - 1.0) * r - 1.0) * r - 1.0; }

const QuarticRoots& roots_numeric() {
    static const QuarticRoots roots = compute_roots();
    return roots;
}

double radical_omega() {
    const double s = std::sqrt(563.0 / 108.0);
    const double a = -65.0 / 54.0;
    return std::sqrt(11.0 / 12.0 + std::cbrt(a + s) + std::cbrt(a - s));
}

QuarticRoots roots_radical() {
    const double w = radical_omega();
    const Complex outer = std::sqrt(Complex(11.0 / 4.0 - w * w + 13.0 / (4.0 * w)));
    const Complex inner = std::sqrt(Complex(11.0 / 4.0 - w * w - 13.0 / (4.0 * w)));
    return {
        0.25 + w / 2 + outer / 2.0,
        0.25 + w / 2 - outer / 2.0,
        0.25 - w / 2 + inner / 2.0,
        0.25 - w / 2 - inner / 2.0,
    };
}

BinetCoeffs binet_coeffs(const SeqSpec& spec) {
    const auto& c = spec.initials();
    const double v0 = c[0].get_d(), v1 = c[1].get_d(), v2 = c[2].get_d(), v3 = c[3].get_d();
    auto coeff = [&](Complex r) {
        const Complex scale = (r - 1.0) / (5.0 * r - 8.0);
        return scale * (((v3 * r + (v0 + v1 + v2)) * r + (v1 + v2)) * r + v2);
    };
    const QuarticRoots& r = roots_numeric();
    BinetCoeffs k{coeff(r.alpha), coeff(r.beta), coeff(r.gamma), coeff(r.delta)};
    for (Complex v : {k.A, k.B, k.C, k.D}) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NumericError("Binet coefficient is not finite");
        }
    }
    return k;
}

GaussianInt BinetValue::rounded() const {
    BigInt re, im;
    mpz_set_d(re.get_mpz_t(), std::round(value.real()));
    mpz_set_d(im.get_mpz_t(), std::round(value.imag()));
    return {std::move(re), std::move(im)};
}

double BinetValue::rounding_error() const {
    return std::max(std::abs(value.real() - std::round(value.real())),
                    std::abs(value.imag() - std::round(value.imag())));
}

BinetValue binet_eval(const SeqSpec& spec, long n, bool gaussian, double guard) {
    if (!(guard >= 0.0 && guard < 0.5)) throw std::invalid_argument("binet_eval: guard band must be in [0, 0.5)");
    const BinetCoeffs k = binet_coeffs(spec);
    const QuarticRoots& r = roots_numeric();
    const Complex re_part = binet_sum(k, r, n);
    BinetValue v{n, re_part, false};
    bool clean = negligible_imag(re_part);
    if (gaussian) {
        const Complex im_part = binet_sum(k, r, n - 1);
        v.value = Complex(re_part.real(), im_part.real());
        clean = clean && negligible_imag(im_part);
    }
    const bool fine = std::abs(v.value.real()) < kBinetExactMagnitude && std::abs(v.value.imag()) < kBinetExactMagnitude;
    v.validated = std::abs(n) <= kBinetValidatedIndex && clean && fine && v.rounding_error() <= 0.5 - guard;
    return v;
}

Complex tetranacci_closed_form(long n) {
    Complex sum = 0.0;
    for (Complex r : roots_numeric().as_array()) sum += (r - 1.0) / (5.0 * r - 8.0) * ipow(r, n - 1);
    return sum;
}

Complex power_sum(long n) {
    Complex sum = 0.0;
    for (Complex r : roots_numeric().as_array()) sum += ipow(r, n);
    return sum;
}

SymmetricReport symmetric_check(const QuarticRoots& roots, double tol) {
    const auto z = roots.as_array();
    SymmetricReport rep;
    rep.e = {};
    for (std::size_t a = 0; a < 4; ++a) {
        rep.e[0] += z[a];
        for (std::size_t b = a + 1; b < 4; ++b) {
            rep.e[1] += z[a] * z[b];
            for (std::size_t c = b + 1; c < 4; ++c) rep.e[2] += z[a] * z[b] * z[c];
        }
    }
    rep.e[3] = z[0] * z[1] * z[2] * z[3];

    const std::array<double, 4> expected{1.0, -1.0, 1.0, -1.0};
    std::ostringstream os;
    rep.pass = true;
    for (std::size_t k = 0; k < 4; ++k) {
        const double dev = std::abs(rep.e[k] - expected[k]);
        if (dev > tol) {
            rep.pass = false;
            os << "e" << k + 1 << " deviates by " << dev << "; ";
        }
    }
    rep.detail = rep.pass ? "pass" : os.str();
    return rep;
}

}  // namespace tetra
