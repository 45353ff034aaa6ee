#pragma once

#include <cstdint>
#include <vector>

namespace euphi {

struct PrimePower {
    std::uint64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization of a positive 64-bit integer. `factors` is sorted by
// ascending prime and is empty exactly when n == 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    int distinct_primes() const;      // omega(n): number of distinct primes
    int total_prime_factors() const;  // Omega(n): primes counted with multiplicity
    int exponent_of(std::uint64_t p) const;  // 0 when p does not divide n

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

// Throws std::invalid_argument when n == 0.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(const Factorization& f);
std::uint64_t euler_phi(std::uint64_t n);

// -1, 0, +1; 0 exactly when n has a square factor.
int mobius(const Factorization& f);
int mobius(std::uint64_t n);

// Jacobi symbol (a | m) for odd positive m; a may be negative (it is reduced
// modulo m first). Throws std::invalid_argument when m is even or zero.
int jacobi(std::int64_t a, std::uint64_t m);

}  // namespace euphi
