#pragma once

#include <cstdint>
#include <string>

namespace euphi {

// Which route produced a phi value.
enum class PhiMethod { definition, mobius_sum, closed_form };

// Families of closed-form branches. Labels inside a family identify the exact
// case that fired (e.g. "a=1 r3" = the 2^1-stratum, residue class {3,7}/{3});
// together family+label key the coverage counters used by verification sweeps.
enum class BranchFamily {
    none,            // oracle routes (definition / divisor sum), no branch
    totient,         // e = 1: phi(n)
    half_totient,    // e = 2, n >= 3: phi(n)/2
    thirds,          // e = 3 closed form
    quarters,        // e = 4 closed form
    sixths,          // e = 6 closed form
    exact_quotient,  // every prime of e divides n with margin: phi(n)/e
    e8_pow2,         // e = 8, n = 2^a
    e8_split,        // e = 8, residue-class split on the odd prime divisors
    e12_small,       // e = 12, n < 12 or n in {12, 24}
    e12_smooth,      // e = 12, n = 2^a * 3^b
    e12_split,       // e = 12, residue-class split on the prime divisors > 3
    mobius_fallback, // dispatcher fell back to the divisor sum
};

const char* to_string(BranchFamily family);

struct Branch {
    BranchFamily family = BranchFamily::none;
    std::string label;

    // Stable coverage key, "family" or "family/label".
    std::string key() const;

    friend bool operator==(const Branch&, const Branch&) = default;
};

struct PhiValue {
    std::uint64_t value = 0;
    PhiMethod method = PhiMethod::definition;
    Branch branch;  // family == none unless method == closed_form
};

}  // namespace euphi
