#pragma once

#include <cstdint>

#include "euphi/arith.hpp"

namespace euphi {

// floor(m/8) for odd m >= 1, computed from Jacobi symbols:
//   (m - 4 + 2*(-2|m) + (-1|m)) / 8, which is always an exact division.
// Throws std::invalid_argument when m is even or zero.
std::uint64_t floor_div8_closed(std::uint64_t m);

// floor(m/12) for m coprime to 6, computed from Jacobi symbols:
//   (m - 6 + 3*(-1|m) + 2*(-3|m)) / 12, always an exact division.
// Throws std::invalid_argument when gcd(m, 6) != 1 or m == 0.
std::uint64_t floor_div12_closed(std::uint64_t m);

// The multiplicative divisor transform
//   sum over d | n of mu(n/d) * (a|d)
//     = product over p^k || n of ((a|p)^k - (a|p)^(k-1)).
// Requires n odd and gcd(p, a) = 1 for every prime p | n; throws otherwise.
std::int64_t mobius_jacobi_sum(std::int64_t a, const Factorization& f);

}  // namespace euphi
