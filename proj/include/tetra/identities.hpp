#pragma once

// Verification engine for the Tetranacci / Gaussian Tetranacci identities:
// point checks, the 4-term linear relation solver, and the full suite that
// produces one report per identity family.

#include "tetra/check.hpp"
#include "tetra/gaussint.hpp"
#include "tetra/sequences.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tetra {

// Where identity checks obtain V_n from: the recurrence sweep, or the
// companion-matrix power path.
enum class TermSource { Recurrence, MatrixPower };

// V_lo..V_hi of one sequence, precomputed.
class TermTable {
public:
    TermTable(const SeqSpec& spec, long lo, long hi, TermSource source = TermSource::Recurrence);

    const SeqSpec& spec() const { return spec_; }
    long lo() const { return lo_; }
    long hi() const { return hi_; }

    // Throws std::out_of_range outside [lo, hi].
    const BigInt& operator()(long n) const;
    // GV_n = V_n + i V_{n-1}; needs n-1 >= lo.
    GaussianInt gaussian(long n) const { return {(*this)(n), (*this)(n - 1)}; }
    GaussianInt at(long n, bool gaussian_lift) const {
        return gaussian_lift ? gaussian(n) : GaussianInt((*this)(n));
    }

private:
    SeqSpec spec_;
    long lo_;
    long hi_;
    std::vector<BigInt> v_;
};

// V_{m+n} = M_{m-2} V_{n+3} + (M_{m-3}+M_{m-4}+M_{m-5}) V_{n+2}
//         + (M_{m-3}+M_{m-4}) V_{n+1} + M_{m-3} V_n, or the same for GV.
CheckResult check_addition_theorem(const SeqSpec& spec, long m, long n, bool gaussian);

// V_n = M_{n-3} V0 + (M_{n-3}+M_{n-4}) V1 + (M_{n-3}+M_{n-4}+M_{n-5}) V2 + M_{n-2} V3.
CheckResult check_expansion(const SeqSpec& spec, long n);

enum class SumKind { Linear, Odd, Even };

// Sums over k = 1..n of W_k, W_{2k+1} or W_{2k} (W = V or GV) against
// (1/3)(bracket). The bracket must be divisible by 3; a failure there has
// kind "not-divisible-by-3". Linear sums are also checked against the
// alternate bracket W_{n+4} - W_{n+2} - 2W_{n+1} - W0 + W1 - W3.
CheckResult check_sums(const SeqSpec& spec, long n, SumKind which, bool gaussian);

// The specialised sum formulas for M, R and their Gaussian lifts, with the
// initial-value terms folded into tabulated constants.
CheckResult check_sum_corollary(NamedSeq seq, long n, SumKind which, bool gaussian);

// Sums starting at k = 0: sum R_k = (1/3)(R_{n+2}+2R_n+R_{n-1}+2) and
// sum M_k from 0 equals sum M_k from 1.
CheckResult check_zero_start(long n);

// GR_n = -GM_{n+3} + 6GM_{n+1} - GM_n
//      = -GM_{n+2} + 5GM_{n+1} - 2GM_n - GM_{n-1}
//      = 4GM_{n+1} - 3GM_n - 2GM_{n-1} - GM_{n-2}.
CheckResult check_gr_gm_relations(long n);

// GM_n = i U_n + U_{n+1} and
// GR_n = (3-2i)U_{n+2} - (2-6i)U_{n+1} - (1+i)U_n + (1+i)U_{n-2}.
CheckResult check_u_lifts(long n);

// One of the four even/odd cross identities between GM and GR (which = 1..4).
CheckResult check_evenodd_cross(long n, int which);

// A sequence as a function of its index.
using SeqHandle = std::function<GaussianInt(long)>;

SeqHandle plain_handle(const SeqSpec& spec);
SeqHandle gaussian_handle(const SeqSpec& spec);

struct BasisTerm {
    SeqHandle seq;
    long shift = 0;
};

enum class RelationStatus { Ok, NoSolution, NotGaussianIntegers, SpuriousSolution };

std::string to_string(RelationStatus status);

struct RelationResult {
    RelationStatus status = RelationStatus::NoSolution;
    std::array<GaussianInt, 4> coefficients{};
    std::string detail;

    bool ok() const { return status == RelationStatus::Ok; }
};

// Finds c with target(k) = sum_j c_j basis_j(k + shift_j) from the 4x4 system
// at k = anchor..anchor+3 (Cramer's rule, exact division), then confirms the
// relation at `extra_checks` further indices.
RelationResult solve_linear_relation(const SeqHandle& target, const std::array<BasisTerm, 4>& basis,
                                     long anchor, int extra_checks = 32);

struct IdentityReport {
    std::string id;
    long lo = 0;
    long hi = 0;
    // Assertions made on the stated domain.
    std::size_t checked = 0;
    std::size_t failure_count = 0;
    // First failures only.
    std::vector<Mismatch> failures;
    // Evaluations outside the stated domain; recorded, never fatal.
    std::size_t observed = 0;
    std::size_t observed_held = 0;

    bool pass() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxStoredFailures = 10;
inline constexpr std::uint64_t kDefaultSeed = 20190531;

struct SuiteOptions {
    long lo = -32;
    long hi = 128;
    std::size_t random_specs = 16;
    std::uint64_t seed = kDefaultSeed;
    TermSource source = TermSource::Recurrence;
    // Run a single identity family.
    std::optional<std::string> only;
    bool parallel = true;
};

// Every identity family, in report order.
const std::vector<std::string>& identity_ids();

// Deterministic non-zero specs with |c_i| <= bound. Throws std::invalid_argument
// unless bound >= 1.
std::vector<SeqSpec> sample_specs(std::size_t count, std::uint64_t seed, long bound);

// Throws std::invalid_argument for an empty window or an unknown `only` id.
std::vector<IdentityReport> run_suite(const SuiteOptions& options);

}  // namespace tetra
