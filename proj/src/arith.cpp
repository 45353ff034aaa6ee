#include "euphi/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace euphi {

int Factorization::distinct_primes() const { return static_cast<int>(factors.size()); }

int Factorization::total_prime_factors() const {
    int total = 0;
    for (const auto& pp : factors) total += pp.exponent;
    return total;
}

int Factorization::exponent_of(std::uint64_t p) const {
    for (const auto& pp : factors)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool is_sprp(std::uint64_t n, std::uint64_t base) {
    base %= n;
    if (base == 0) return true;
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n.
std::uint64_t pollard_rho(std::uint64_t n, std::uint64_t c) {
    std::uint64_t x = 2, d = 1, saved = 2;
    std::uint64_t power = 1, lam = 1;
    while (d == 1) {
        if (lam == power) {
            saved = x;
            power *= 2;
            lam = 0;
        }
        x = mul_mod(x, x, n) + c;
        if (x >= n) x -= n;
        ++lam;
        std::uint64_t diff = x > saved ? x - saved : saved - x;
        d = std::gcd(diff, n);
    }
    return d;
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t d = pollard_rho(n, c);
        if (d != n) {
            factor_into(d, primes);
            factor_into(n / d, primes);
            return;
        }
    }
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // This base set is deterministic for all 64-bit integers.
    for (std::uint64_t base : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL})
        if (!is_sprp(n, base)) return false;
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL, 41ULL, 43ULL, 47ULL}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) {
        // Trial division up to a fixed cutoff, then rho on what remains.
        std::uint64_t p = 49;
        while (p * p <= n && p < (1ULL << 20)) {
            while (n % p == 0) {
                primes.push_back(p);
                n /= p;
            }
            p += 2;
        }
        if (n > 1) {
            if (p * p > n)
                primes.push_back(n);
            else
                factor_into(n, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t result = 1;
    for (const auto& pp : f.factors) {
        result *= pp.prime - 1;
        for (int i = 1; i < pp.exponent; ++i) result *= pp.prime;
    }
    return result;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

int mobius(const Factorization& f) {
    for (const auto& pp : f.factors)
        if (pp.exponent > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n) { return mobius(factorize(n)); }

int jacobi(std::int64_t a, std::uint64_t m) {
    if (m == 0 || m % 2 == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    std::uint64_t num;
    if (a >= 0) {
        num = static_cast<std::uint64_t>(a) % m;
    } else {
        // |a| without overflow at INT64_MIN, then the representative in [0, m).
        std::uint64_t mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
        std::uint64_t r = mag % m;
        num = r == 0 ? 0 : m - r;
    }
    std::uint64_t den = m;
    int sign = 1;
    while (num != 0) {
        while (num % 2 == 0) {
            num /= 2;
            std::uint64_t d8 = den % 8;
            if (d8 == 3 || d8 == 5) sign = -sign;
        }
        std::swap(num, den);
        if (num % 4 == 3 && den % 4 == 3) sign = -sign;
        num %= den;
    }
    return den == 1 ? sign : 0;
}

}  // namespace euphi
