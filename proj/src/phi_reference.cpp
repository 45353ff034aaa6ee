#include "euphi/phi_reference.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace euphi {

PhiValue phi_def(std::uint64_t n, std::uint64_t e) {
    if (n == 0 || e == 0) throw std::invalid_argument("phi_def: n and e must be positive");
    std::uint64_t limit = n / e;
    std::uint64_t count = 0;
    if (n <= std::numeric_limits<std::uint32_t>::max()) {
        auto n32 = static_cast<std::uint32_t>(n);
        auto limit32 = static_cast<std::uint32_t>(limit);
        for (std::uint32_t i = 1; i <= limit32; ++i)
            count += std::gcd(i, n32) == 1;
    } else {
        for (std::uint64_t i = 1; i <= limit; ++i)
            count += std::gcd(i, n) == 1;
    }
    return {count, PhiMethod::definition, {}};
}

PhiValue phi_mobius(const Factorization& f, std::uint64_t e) {
    if (e == 0) throw std::invalid_argument("phi_mobius: e must be positive");
    int k = f.distinct_primes();
    __int128 total = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::uint64_t s = 1;
        int bits = 0;
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                s *= f.factors[static_cast<std::size_t>(i)].prime;
                ++bits;
            }
        }
        std::uint64_t d = f.n / s;  // term d = n/s, mu(n/d) = mu(s) = (-1)^bits
        total += (bits % 2 == 0) ? static_cast<__int128>(d / e)
                                 : -static_cast<__int128>(d / e);
    }
    if (total < 0) throw std::logic_error("phi_mobius: negative total");
    return {static_cast<std::uint64_t>(total), PhiMethod::mobius_sum, {}};
}

PhiValue phi_mobius(std::uint64_t n, std::uint64_t e) { return phi_mobius(factorize(n), e); }

}  // namespace euphi
