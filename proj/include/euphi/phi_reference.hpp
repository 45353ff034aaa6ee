#pragma once

#include <cstdint>

#include "euphi/arith.hpp"
#include "euphi/phi_value.hpp"

namespace euphi {

// phi_e(n): how many i in 1..floor(n/e) are coprime to n.
//
// Brute-force counting oracle, straight from the definition. Exact for any
// (n, e) but costs floor(n/e) gcd evaluations. Throws std::invalid_argument
// when n == 0 or e == 0.
PhiValue phi_def(std::uint64_t n, std::uint64_t e);

// Divisor-sum oracle: sum over d | n of mu(n/d) * floor(d/e). Terms with a
// non-squarefree complement vanish, so the sum runs over the squarefree
// divisors of rad(n). Independent of the counting route and cheap enough for
// sweeps well past 10^6. Throws std::invalid_argument when e == 0.
PhiValue phi_mobius(const Factorization& f, std::uint64_t e);
PhiValue phi_mobius(std::uint64_t n, std::uint64_t e);

}  // namespace euphi
