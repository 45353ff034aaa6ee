#pragma once

#include <cstdint>
#include <set>

#include "euphi/arith.hpp"
#include "euphi/phi_value.hpp"

namespace euphi {

// Residue data driving the e = 8 and e = 12 closed forms: the power of 2 (and
// of 3 for modulus 12) in n, plus the set of residues of the remaining prime
// divisors modulo `modulus` (odd primes for modulus 8, primes > 3 for 12).
struct ResidueProfile {
    int modulus = 0;
    int alpha = 0;  // exponent of 2 in n
    int beta = 0;   // exponent of 3 in n
    std::set<int> residues;
};

// modulus must be 8 or 12; throws std::invalid_argument otherwise.
ResidueProfile residue_profile(const Factorization& f, int modulus);

// Closed forms for phi_3, phi_4, phi_6. Domain: n > 3 / n > 4 / n > 6
// respectively (throws std::invalid_argument below the threshold). Each
// returns the exact value with the branch that fired ("adjusted" when the
// residue condition adds a correction term to phi(n)/e, "plain" otherwise).
PhiValue phi3_closed(const Factorization& f);
PhiValue phi4_closed(const Factorization& f);
PhiValue phi6_closed(const Factorization& f);

// phi_e(n) = phi(n)/e whenever e = prod p^b over primes p | n with
// b <= (exponent of p in n) - 1. Throws std::invalid_argument when the
// exponent condition fails. e = 1 qualifies trivially.
PhiValue phi_support_divides(const Factorization& f, std::uint64_t e);
bool support_divides(const Factorization& f, std::uint64_t e);

// Total closed form for phi_8: dedicated power-of-two branch, divisor-sum
// fallback for the remaining n <= 8, residue-class split for everything else.
PhiValue phi8_closed(const Factorization& f);

// Total closed form for phi_12: 0 below 12, the n in {12, 24} special cases,
// a dedicated 2^a*3^b family, residue-class split for everything else.
PhiValue phi12_closed(const Factorization& f);

// Dispatcher over all supported e: exact for every (n, e), choosing the
// closed form when one applies and the divisor sum otherwise.
PhiValue phi_generalized(const Factorization& f, std::uint64_t e);

PhiValue phi3_closed(std::uint64_t n);
PhiValue phi4_closed(std::uint64_t n);
PhiValue phi6_closed(std::uint64_t n);
PhiValue phi_support_divides(std::uint64_t n, std::uint64_t e);
PhiValue phi8_closed(std::uint64_t n);
PhiValue phi12_closed(std::uint64_t n);
PhiValue phi_generalized(std::uint64_t n, std::uint64_t e);

}  // namespace euphi
