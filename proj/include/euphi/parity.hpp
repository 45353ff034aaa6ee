#pragma once

#include <cstdint>
#include <string>

#include "euphi/arith.hpp"

namespace euphi {

enum class Parity { even, odd };

struct ParityVerdict {
    std::uint64_t n = 0;
    Parity parity = Parity::even;
    std::string rule;  // the odd-rule that fired, or "even"
};

// Parity of phi_8(n) / phi_12(n), decided purely from the shape of the
// factorization (a finite rule table); no phi value is computed. An internal
// invariant asserts at most one odd-rule matches (std::logic_error otherwise).
ParityVerdict parity_phi8(const Factorization& f);
ParityVerdict parity_phi12(const Factorization& f);

ParityVerdict parity_phi8(std::uint64_t n);
ParityVerdict parity_phi12(std::uint64_t n);

}  // namespace euphi
