#include "euphi/floor_identity.hpp"

#include <stdexcept>

namespace euphi {

std::uint64_t floor_div8_closed(std::uint64_t m) {
    if (m == 0 || m % 2 == 0)
        throw std::invalid_argument("floor_div8_closed: m must be odd and positive");
    __int128 numer = static_cast<__int128>(m) - 4 + 2 * jacobi(-2, m) + jacobi(-1, m);
    if (numer < 0 || numer % 8 != 0)
        throw std::logic_error("floor_div8_closed: identity violated");
    return static_cast<std::uint64_t>(numer / 8);
}

std::uint64_t floor_div12_closed(std::uint64_t m) {
    if (m == 0 || m % 2 == 0 || m % 3 == 0)
        throw std::invalid_argument("floor_div12_closed: m must be coprime to 6");
    __int128 numer = static_cast<__int128>(m) - 6 + 3 * jacobi(-1, m) + 2 * jacobi(-3, m);
    if (numer < 0 || numer % 12 != 0)
        throw std::logic_error("floor_div12_closed: identity violated");
    return static_cast<std::uint64_t>(numer / 12);
}

std::int64_t mobius_jacobi_sum(std::int64_t a, const Factorization& f) {
    std::uint64_t mag = a >= 0 ? static_cast<std::uint64_t>(a)
                               : static_cast<std::uint64_t>(-(a + 1)) + 1;
    for (const auto& pp : f.factors) {
        if (pp.prime == 2)
            throw std::invalid_argument("mobius_jacobi_sum: n must be odd");
        if (mag % pp.prime == 0)
            throw std::invalid_argument("mobius_jacobi_sum: primes of n must not divide a");
    }
    std::int64_t result = 1;
    for (const auto& pp : f.factors) {
        int j = jacobi(a, pp.prime);
        if (j == 1) return 0;  // (1^k - 1^(k-1)) factor
        // j == -1: (-1)^k - (-1)^(k-1) = 2*(-1)^k
        result *= pp.exponent % 2 == 0 ? 2 : -2;
    }
    return result;
}

}  // namespace euphi
