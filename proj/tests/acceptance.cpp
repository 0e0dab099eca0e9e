// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "tetra/binet.hpp"
#include "tetra/genfun.hpp"
#include "tetra/identities.hpp"
#include "tetra/matrix.hpp"
#include "tetra/sequences.hpp"

#include "tables.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace tetra;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

std::vector<SeqSpec> with_named(std::vector<SeqSpec> random) {
    random.insert(random.begin(), {tetranacci(), tetranacci_lucas()});
    return random;
}

void criterion_tables(Outcome& o) {
    const auto t0 = Clock::now();
    std::size_t entries = 0;
    auto plain = [&](const SeqSpec& s, const auto& pos, const auto& neg, const char* name) {
        for (std::size_t k = 0; k < pos.size(); ++k) {
            const long n = static_cast<long>(k);
            o.require(term(s, n) == pos[k], std::string(name) + " n=" + std::to_string(n));
            o.require(term(s, -n) == neg[k], std::string(name) + " n=" + std::to_string(-n));
            entries += 2;
        }
    };
    auto gauss = [&](const SeqSpec& s, const auto& pos, const auto& neg, const char* name) {
        for (std::size_t k = 0; k < pos.size(); ++k) {
            const long n = static_cast<long>(k);
            o.require(gterm(s, n) == parse_gaussian(pos[k]), std::string(name) + " n=" + std::to_string(n));
            o.require(gterm(s, -n) == parse_gaussian(neg[k]), std::string(name) + " n=" + std::to_string(-n));
            entries += 2;
        }
    };
    plain(tetranacci(), tables::M_pos, tables::M_neg, "M");
    plain(tetranacci_lucas(), tables::R_pos, tables::R_neg, "R");
    gauss(tetranacci(), tables::GM_pos, tables::GM_neg, "GM");
    gauss(tetranacci_lucas(), tables::GR_pos, tables::GR_neg, "GR");
    plain(shifted_tetranacci(), tables::U_pos, tables::U_neg, "U");
    const double t = seconds_since(t0);
    o.require(t < 1.0, "runtime");
    o.note << entries << " entries, " << t << " s (limit 1 s)";
}

void criterion_oracle(Outcome& o) {
    std::size_t checked = 0;
    for (const auto& s : with_named(sample_specs(16, kDefaultSeed, 1'000'000))) {
        const auto v = term_range(s, -32, 512);
        for (long n = -32; n <= 512; ++n, ++checked)
            o.require(term_by_power(s, n) == v[static_cast<std::size_t>(n + 32)], to_string(s) + " n=" + std::to_string(n));
    }
    constexpr long big = 1'000'000;
    auto t0 = Clock::now();
    const BigInt powered = term_by_power(tetranacci(), big);
    const double t_mat = seconds_since(t0);
    t0 = Clock::now();
    const BigInt iterative = term(tetranacci(), big);
    const double t_iter = seconds_since(t0);
    o.require(powered == iterative, "n=10^6 values differ");
    o.require(t_mat < 10.0, "matrix path over 10 s");
    o.note << checked << " indices over -32..512; n=10^6: matrix " << t_mat << " s (limit 10 s), iterative "
           << t_iter << " s, " << iterative.get_str().size() << " digits, equal=" << (powered == iterative);
}

void criterion_genfun(Outcome& o) {
    std::size_t coeff_checks = 0, gf_checks = 0;
    const auto specs = with_named(sample_specs(16, kDefaultSeed, 1'000'000));
    for (const auto& s : specs) {
        const auto v = term_range(s, -1, 199);
        for (bool g : {false, true}) {
            const auto c = coeffs(gf_for(s, g), 200);
            for (long n = 0; n < 200; ++n, ++coeff_checks) {
                const auto k = static_cast<std::size_t>(n + 1);
                const GaussianInt want = g ? GaussianInt(v[k], v[k - 1]) : GaussianInt(v[k]);
                o.require(c[static_cast<std::size_t>(n)] == want, to_string(s) + " coefficient " + std::to_string(n));
            }
            for (Parity p : {Parity::Even, Parity::Odd}) {
                o.require(gf_equal(bisect(gf_for(s, g), p), closed_even_odd(s, p, g)), to_string(s) + " bisection");
                ++gf_checks;
            }
        }
    }
    std::size_t displayed = 0;
    for (NamedSeq s : {NamedSeq::M, NamedSeq::R})
        for (bool g : {false, true})
            for (Parity p : {Parity::Even, Parity::Odd}) {
                ++displayed;
                const RationalGF tab = tabulated_even_odd(s, p, g);
                o.require(gf_equal(bisect(gf_for(named(s), g), p), tab), "displayed even/odd form");
                o.require(gf_equal(closed_even_odd(named(s), p, g), tab), "displayed even/odd form (closed)");
            }
    o.note << coeff_checks << " coefficients, " << gf_checks << " random/named bisections, " << displayed
           << " displayed even/odd forms";
}

void criterion_suite(Outcome& o) {
    const auto t0 = Clock::now();
    SuiteOptions opt;  // window -32..128, 16 random specs, default seed
    const auto reports = run_suite(opt);
    const double t = seconds_since(t0);
    std::size_t checked = 0, passed = 0;
    for (const auto& r : reports) {
        checked += r.checked;
        if (r.pass()) ++passed;
        o.require(r.pass(), r.id + ": " + (r.failures.empty() ? "" : r.failures.front().inputs));
    }
    o.require(t < 30.0, "runtime");
    o.note << passed << "/" << reports.size() << " identity families, " << checked << " assertions, " << t
           << " s (limit 30 s)";
}

bool rounds_to(Complex v, const GaussianInt& exact) {
    return std::abs(v.real() - exact.re().get_d()) < 0.5 && std::abs(v.imag() - exact.im().get_d()) < 0.5;
}

void criterion_binet(Outcome& o) {
    std::size_t checked = 0;
    std::vector<SeqSpec> specs = with_named(sample_specs(16, kDefaultSeed + 1, 100));
    for (const auto& s : specs) {
        for (long n = -40; n <= 40; ++n, ++checked) {
            o.require(binet_eval(s, n, false).rounded() == GaussianInt(term(s, n)), to_string(s) + " n=" + std::to_string(n));
            o.require(binet_eval(s, n, true).rounded() == gterm(s, n), to_string(s) + " GV n=" + std::to_string(n));
        }
    }
    const SymmetricReport sym = symmetric_check(roots_numeric(), 1e-10);
    o.require(sym.pass, "symmetric functions: " + sym.detail);
    double radical_dev = 0;
    const auto num = roots_numeric().as_array(), rad = roots_radical().as_array();
    for (std::size_t k = 0; k < 4; ++k) radical_dev = std::max(radical_dev, std::abs(num[k] - rad[k]));
    o.require(radical_dev <= 1e-9, "radical roots");

    // Correction guards: the corrected reading reproduces exact terms on
    // n = 3..20, the literal reading never does (consecutive terms differ there).
    const QuarticRoots& r = roots_numeric();
    const BinetCoeffs c = binet_coeffs(tetranacci_lucas());
    int literal_d = 0, literal_gauss = 0, literal_gr = 0;
    for (long n = 3; n <= 20; ++n) {
        const double e = static_cast<double>(n - 6);
        const Complex as_displayed = c.A * std::pow(r.alpha, e) + c.B * std::pow(r.beta, e) +
                                     2.0 * c.C * std::pow(r.gamma, e);  // D and delta replaced by C and gamma
        const GaussianInt exact_r(term(tetranacci_lucas(), n));
        if (rounds_to(as_displayed, exact_r) && std::abs(as_displayed.imag()) < 1e-6) ++literal_d;

        const GaussianInt gm = gterm(tetranacci(), n);
        const double m_re = binet_eval(tetranacci(), n, false).value.real();
        if (rounds_to(Complex(m_re, m_re), gm)) ++literal_gauss;

        const GaussianInt gr = gterm(tetranacci_lucas(), n);
        const double pn = power_sum(n).real();
        const double en = static_cast<double>(n), em = static_cast<double>(n - 1);
        const Complex gr_im = std::pow(r.alpha, em) + std::pow(r.beta, em) + std::pow(r.gamma, em) + std::pow(r.delta, en);
        if (rounds_to(Complex(pn, gr_im.real()), gr) && std::abs(gr_im.imag()) < 1e-6) ++literal_gr;
        o.require(rounds_to(Complex(pn, power_sum(n - 1).real()), gr), "corrected GR imaginary part");
    }
    o.require(literal_d == 0, "literal D reading unexpectedly matches");
    o.require(literal_gauss == 0, "literal Gaussian reading unexpectedly matches");
    o.require(literal_gr == 0, "literal GR reading unexpectedly matches");
    o.note << checked << " (spec, n) pairs with |n|<=40, symmetric max dev<=1e-10: " << (sym.pass ? "yes" : "no")
           << ", radical max dev " << radical_dev << " (limit 1e-9), literal-reading hits D/GV/GR " << literal_d << "/"
           << literal_gauss << "/" << literal_gr << " of 18 (must be 0)";
}

void criterion_recovery(Outcome& o) {
    const SeqHandle gm = gaussian_handle(tetranacci()), gr = gaussian_handle(tetranacci_lucas());
    const SeqHandle u = plain_handle(shifted_tetranacci());
    const RelationResult a = solve_linear_relation(gr, {{{gm, 3}, {gm, 2}, {gm, 1}, {gm, 0}}}, 0, 32);
    const RelationResult b = solve_linear_relation(gr, {{{u, 2}, {u, 1}, {u, 0}, {u, -2}}}, 0, 32);
    o.require(a.ok() && a.coefficients == std::array<GaussianInt, 4>{-1, 0, 6, -1}, "GR over GM: " + a.detail);
    o.require(b.ok() && b.coefficients == std::array<GaussianInt, 4>{GaussianInt(3, -2), GaussianInt(-2, 6),
                                                                     GaussianInt(-1, -1), GaussianInt(1, 1)},
              "GR over U: " + b.detail);
    auto show = [](const RelationResult& r) {
        std::string s = "(";
        for (std::size_t k = 0; k < 4; ++k) s += (k ? ", " : "") + to_string(r.coefficients[k]);
        return s + ")";
    };
    o.note << "GR over GM " << show(a) << " [" << to_string(a.status) << "], GR over U " << show(b) << " ["
           << to_string(b.status) << "], each re-verified at 32 further indices";
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"1 table reproduction", criterion_tables},
        {"2 oracle equivalence + n=10^6 benchmark", criterion_oracle},
        {"3 generating functions", criterion_genfun},
        {"4 identity suite", criterion_suite},
        {"5 Binet validation", criterion_binet},
        {"6 relation recovery", criterion_recovery},
    };
    bool all = true;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::printf("[%s] criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.note.str().c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
