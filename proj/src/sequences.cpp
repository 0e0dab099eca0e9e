#include "tetra/sequences.hpp"

#include <stdexcept>

namespace tetra {

namespace {

// Five consecutive terms V_base..V_base+4 in a ring. Five terms allow the
// order-5 form V_{n+1} = 2V_n - V_{n-4} of the recurrence (subtract the
// shifted recurrence from itself), which rewrites one slot in place with two
// big-integer passes instead of three additions. The same form runs backwards
// as V_{n-4} = 2V_n - V_{n+1}.
class Window {
public:
    explicit Window(const SeqSpec& spec) {
        const auto& c = spec.initials();
        for (std::size_t k = 0; k < 4; ++k) v_[k] = c[k];
        v_[4] = c[0] + c[1] + c[2] + c[3];
    }

    long base() const { return base_; }
    long last() const { return base_ + 4; }

    const BigInt& at(long n) const { return v_[slot(n)]; }

    void forward() {
        BigInt& s = v_[slot(base_)];  // V_base becomes V_base+5
        const BigInt& top = v_[slot(base_ + 4)];
        mpz_sub(s.get_mpz_t(), top.get_mpz_t(), s.get_mpz_t());
        s += top;
        ++base_;
    }

    void backward() {
        BigInt& s = v_[slot(base_ + 4)];  // V_base+4 becomes V_base-1
        const BigInt& top = v_[slot(base_ + 3)];
        mpz_sub(s.get_mpz_t(), top.get_mpz_t(), s.get_mpz_t());
        s += top;
        --base_;
    }

    // Moves so that n lies in the window.
    void seek(long n) {
        while (n > last()) forward();
        while (n < base_) backward();
    }

private:
    static std::size_t slot(long n) { return static_cast<std::size_t>(((n % 5) + 5) % 5); }

    std::array<BigInt, 5> v_;
    long base_ = 0;
};

}  // namespace

SeqSpec::SeqSpec(BigInt c0, BigInt c1, BigInt c2, BigInt c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    bool all_zero = true;
    for (const auto& v : c_) all_zero = all_zero && sgn(v) == 0;
    if (all_zero) throw std::invalid_argument("initial values must not all be zero");
}

SeqSpec SeqSpec::unchecked(BigInt c0, BigInt c1, BigInt c2, BigInt c3) {
    return {Unchecked{}, {std::move(c0), std::move(c1), std::move(c2), std::move(c3)}};
}

const SeqSpec& tetranacci() {
    static const SeqSpec spec(0, 1, 1, 2);
    return spec;
}

const SeqSpec& tetranacci_lucas() {
    static const SeqSpec spec(4, 1, 3, 7);
    return spec;
}

const SeqSpec& shifted_tetranacci() {
    static const SeqSpec spec(0, 0, 1, 1);
    return spec;
}

const SeqSpec& named(NamedSeq tag) {
    switch (tag) {
    case NamedSeq::M: return tetranacci();
    case NamedSeq::R: return tetranacci_lucas();
    case NamedSeq::U: return shifted_tetranacci();
    }
    throw std::invalid_argument("unknown named sequence");
}

std::string to_string(const SeqSpec& spec) {
    std::string out = "(";
    for (std::size_t k = 0; k < 4; ++k) {
        if (k) out += ',';
        out += spec.c(k).get_str();
    }
    return out + ")";
}

BigInt term(const SeqSpec& spec, long n) {
    Window w(spec);
    w.seek(n);
    return w.at(n);
}

GaussianInt gterm(const SeqSpec& spec, long n) {
    Window w(spec);
    w.seek(n - 1);
    w.seek(n);
    return {w.at(n), w.at(n - 1)};
}

std::array<GaussianInt, 4> gaussian_initials(const SeqSpec& spec) {
    const auto& c = spec.initials();
    return {GaussianInt(c[0], c[3] - c[2] - c[1] - c[0]),
            GaussianInt(c[1], c[0]),
            GaussianInt(c[2], c[1]),
            GaussianInt(c[3], c[2])};
}

std::vector<BigInt> term_range(const SeqSpec& spec, long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("range: lo must not exceed hi");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    Window w(spec);
    while (w.base() < lo) w.forward();
    while (w.base() > lo) w.backward();
    for (long n = lo; n <= hi; ++n) {
        if (n > w.last()) w.forward();
        out.push_back(w.at(n));
    }
    return out;
}

std::vector<GaussianInt> gterm_range(const SeqSpec& spec, long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("range: lo must not exceed hi");
    const auto plain = term_range(spec, lo - 1, hi);
    std::vector<GaussianInt> out;
    out.reserve(plain.size() - 1);
    for (std::size_t k = 1; k < plain.size(); ++k) out.emplace_back(plain[k], plain[k - 1]);
    return out;
}

}  // namespace tetra
