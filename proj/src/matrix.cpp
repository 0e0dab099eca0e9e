#include "tetra/matrix.hpp"

#include <string>

namespace tetra {

namespace {

std::string entry_label(const char* form, long n, std::size_t r, std::size_t c) {
    return std::string(form) + " n=" + std::to_string(n) + " entry(" + std::to_string(r + 1) +
           "," + std::to_string(c + 1) + ")";
}

// Determinant of the 3x3 minor that drops row `skip_r` and column `skip_c`.
GaussianInt minor3(const Matrix4& m, std::size_t skip_r, std::size_t skip_c) {
    std::array<std::size_t, 3> rs{}, cs{};
    for (std::size_t k = 0, j = 0; k < 4; ++k)
        if (k != skip_r) rs[j++] = k;
    for (std::size_t k = 0, j = 0; k < 4; ++k)
        if (k != skip_c) cs[j++] = k;
    auto a = [&](std::size_t r, std::size_t c) -> const GaussianInt& { return m(rs[r], cs[c]); };
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

Matrix4 Matrix4::identity() {
    Matrix4 m;
    for (std::size_t k = 0; k < 4; ++k) m(k, k) = 1;
    return m;
}

Matrix4 Matrix4::companion() {
    Matrix4 m;
    for (std::size_t c = 0; c < 4; ++c) m(0, c) = 1;
    m(1, 0) = 1;
    m(2, 1) = 1;
    m(3, 2) = 1;
    return m;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            GaussianInt sum;
            for (std::size_t k = 0; k < 4; ++k) {
                if (a.e_[r][k].is_zero() || b.e_[k][c].is_zero()) continue;
                sum += a.e_[r][k] * b.e_[k][c];
            }
            out.e_[r][c] = std::move(sum);
        }
    }
    return out;
}

std::array<GaussianInt, 4> Matrix4::apply(const std::array<GaussianInt, 4>& v) const {
    std::array<GaussianInt, 4> out{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t k = 0; k < 4; ++k) out[r] += e_[r][k] * v[k];
    return out;
}

GaussianInt determinant(const Matrix4& m) {
    GaussianInt det;
    for (std::size_t c = 0; c < 4; ++c) {
        if (m(0, c).is_zero()) continue;
        GaussianInt term = m(0, c) * minor3(m, 0, c);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

Matrix4 adjugate(const Matrix4& m) {
    Matrix4 adj;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            GaussianInt cof = minor3(m, r, c);
            adj(c, r) = ((r + c) % 2 == 0) ? std::move(cof) : -cof;
        }
    }
    return adj;
}

Matrix4 inverse(const Matrix4& m) {
    const GaussianInt det = determinant(m);
    if (!det.is_unit()) {
        throw NotInvertibleError("matrix is not invertible over Z[i]: det = " + to_string(det));
    }
    // 1/u = conj(u) for a unit u.
    const GaussianInt inv_det = det.conj();
    Matrix4 adj = adjugate(m);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) adj(r, c) = adj(r, c) * inv_det;
    return adj;
}

Matrix4 mat_pow(const Matrix4& base, long n) {
    if (n == 0) return Matrix4::identity();
    const Matrix4 b = n < 0 ? inverse(base) : base;
    unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);

    int top = 63;
    while (((e >> top) & 1UL) == 0) --top;
    Matrix4 result = b;
    for (int bit = top - 1; bit >= 0; --bit) {
        result = result * result;
        if ((e >> bit) & 1UL) result = result * b;
    }
    return result;
}

BigInt term_by_power(const SeqSpec& spec, long n) {
    const Matrix4 p = mat_pow(Matrix4::companion(), n);
    const auto& c = spec.initials();
    // Only the bottom row of A^n is needed.
    BigInt v;
    for (std::size_t k = 0; k < 4; ++k) v += p(3, k).re() * c[3 - k];
    return v;
}

CheckResult structure_check(long n) {
    const auto mv = term_range(tetranacci(), n - 5, n + 1);
    const auto uv = term_range(shifted_tetranacci(), n - 5, n + 2);
    return structure_check(
        mat_pow(Matrix4::companion(), n), n,
        [&](long k) { return mv.at(static_cast<std::size_t>(k - (n - 5))); },
        [&](long k) { return uv.at(static_cast<std::size_t>(k - (n - 5))); });
}

CheckResult structure_check(const Matrix4& p, long n, const IntTerms& M, const IntTerms& U) {
    CheckResult res;
    for (std::size_t r = 0; r < 4; ++r) {
        const long s = n - static_cast<long>(r);  // row r is row 0 shifted down by r
        const BigInt m0 = M(s + 1), m1 = M(s), m2 = M(s - 1), m3 = M(s - 2);
        const BigInt u0 = U(s + 2), u1 = U(s + 1), u2 = U(s), u3 = U(s - 1), u4 = U(s - 2);
        const std::array<BigInt, 4> m_form{m0, m1 + m2 + m3, m1 + m2, m1};
        const std::array<BigInt, 4> u_form{u0, u1 + u2 + u3, u1 + u2, u1};
        const std::array<BigInt, 4> ud_form{u0, u0 - u4, u1 + u2, u1};
        for (std::size_t c = 0; c < 4; ++c) {
            res.expect(p(r, c), m_form[c], [&] { return entry_label("M-form", n, r, c); });
            res.expect(p(r, c), u_form[c], [&] { return entry_label("U-form", n, r, c); });
            res.expect(p(r, c), ud_form[c], [&] { return entry_label("U-difference form", n, r, c); });
        }
    }
    return res;
}

NVCoefficients NVCoefficients::from(const SeqSpec& spec) {
    const auto& c = spec.initials();
    const GaussianInt i = GaussianInt::i();
    const GaussianInt one_minus_i(1, -1);
    return {
        one_minus_i * c[0] - i * c[1] - i * c[2] + i * c[3],
        one_minus_i * c[3] - c[1] - GaussianInt(1, -2) * c[2] - c[0],
        GaussianInt(0, 2) * c[1] + GaussianInt(2, -1) * c[2] - c[3],
        GaussianInt(0, 2) * c[0] + GaussianInt(2, -1) * c[1] - c[2],
    };
}

Matrix4 tabulated_N_M() {
    return Matrix4({{
        {GaussianInt(2, 1), GaussianInt(1, 1), 1, 0},
        {GaussianInt(1, 1), 1, 0, 0},
        {1, 0, 0, GaussianInt::i()},
        {0, 0, GaussianInt::i(), GaussianInt(1, -1)},
    }});
}

Matrix4 tabulated_N_R() {
    return Matrix4({{
        {GaussianInt(7, 3), GaussianInt(3, 1), GaussianInt(1, 4), GaussianInt(4, -1)},
        {GaussianInt(3, 1), GaussianInt(1, 4), GaussianInt(4, -1), GaussianInt(-1, -1)},
        {GaussianInt(1, 4), GaussianInt(4, -1), GaussianInt(-1, -1), GaussianInt(-1, -1)},
        {GaussianInt(4, -1), GaussianInt(-1, -1), GaussianInt(-1, -1), GaussianInt(-1, 7)},
    }});
}

Matrix4 N_V(const SeqSpec& spec) {
    const auto& c = spec.initials();
    const GaussianInt i = GaussianInt::i();
    const auto a = NVCoefficients::from(spec);
    const GaussianInt g3 = i * c[2] + c[3];
    const GaussianInt g2 = i * c[1] + c[2];
    const GaussianInt g1 = i * c[0] + c[1];
    const GaussianInt g0 = GaussianInt(1, -1) * c[0] - i * c[1] - i * c[2] + i * c[3];
    const GaussianInt gm1 = GaussianInt(1, -1) * c[3] - c[1] - GaussianInt(1, -2) * c[2] - c[0];
    const GaussianInt gm2 = GaussianInt(0, 2) * c[1] + GaussianInt(2, -1) * c[2] - c[3];
    return Matrix4({{
        {g3, g2, g1, a.a1},
        {g2, g1, g0, a.a2},
        {g1, g0, gm1, a.a3},
        {g0, gm1, gm2, a.a4},
    }});
}

Matrix4 NEPair::E(long n) const {
    const auto g = gterm_range(spec, n - 3, n + 3);
    Matrix4 e;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) e(r, c) = g[6 - r - c];  // GV_{n+3-r-c}
    return e;
}

NEPair build_NE(NEKind kind, const SeqSpec& spec) {
    switch (kind) {
    case NEKind::M: return {tetranacci(), tabulated_N_M()};
    case NEKind::R: return {tetranacci_lucas(), tabulated_N_R()};
    case NEKind::V: return {spec, N_V(spec)};
    }
    throw std::invalid_argument("unknown N/E kind");
}

CheckResult ne_theorem_check(NEKind kind, long n, const SeqSpec& spec) {
    const NEPair ne = build_NE(kind, spec);
    const auto g = gterm_range(ne.spec, n - 3, n + 3);
    return ne_theorem_check(mat_pow(Matrix4::companion(), n), ne.N, n,
                            [&](long k) { return g.at(static_cast<std::size_t>(k - (n - 3))); });
}

CheckResult ne_theorem_check(const Matrix4& power, const Matrix4& N, long n, const GaussianTerms& gv) {
    const Matrix4 lhs = power * N;
    CheckResult res;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            res.expect(lhs(r, c), gv(n + 3 - static_cast<long>(r + c)),
                       [&] { return entry_label("A^n N = E", n, r, c); });
        }
    }
    return res;
}

}  // namespace tetra
