#pragma once

#include "tetra/gaussint.hpp"

#include <string>
#include <vector>

namespace tetra {

// One failed comparison, with enough operand data to reproduce it.
struct Mismatch {
    std::string inputs;
    std::string lhs;
    std::string rhs;
    std::string kind = "mismatch";
};

// Outcome of a point check; passes iff there are no mismatches.
struct CheckResult {
    std::vector<Mismatch> mismatches;

    bool pass() const { return mismatches.empty(); }
    explicit operator bool() const { return pass(); }

    void expect_equal(const GaussianInt& lhs, const GaussianInt& rhs, std::string inputs) {
        if (!(lhs == rhs)) mismatches.push_back({std::move(inputs), to_string(lhs), to_string(rhs)});
    }
    // As expect_equal, but the description is only built on a mismatch.
    template <class Describe>
    void expect(const GaussianInt& lhs, const GaussianInt& rhs, Describe&& describe) {
        if (!(lhs == rhs)) mismatches.push_back({describe(), to_string(lhs), to_string(rhs)});
    }
    void fail(std::string inputs, std::string lhs, std::string rhs, std::string kind = "mismatch") {
        mismatches.push_back({std::move(inputs), std::move(lhs), std::move(rhs), std::move(kind)});
    }
    void merge(CheckResult other) {
        for (auto& m : other.mismatches) mismatches.push_back(std::move(m));
    }

    // "pass" or the first mismatch rendered as "<inputs>: <lhs> != <rhs>".
    std::string detail() const;
};

}  // namespace tetra
