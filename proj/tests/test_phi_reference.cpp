#include <cstdint>
#include <stdexcept>

#include "doctest.h"
#include "euphi/arith.hpp"
#include "euphi/phi_reference.hpp"

using namespace euphi;

TEST_CASE("phi_def pinned examples") {
    CHECK(phi_def(15, 8).value == 1);
    CHECK(phi_def(11, 12).value == 0);
    CHECK(phi_def(15, 8).method == PhiMethod::definition);
    CHECK_THROWS_AS(phi_def(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(phi_def(1, 0), std::invalid_argument);
}

TEST_CASE("phi_def with e = 1 is the totient") {
    for (std::uint64_t n = 1; n <= 3000; ++n) CHECK(phi_def(n, 1).value == euler_phi(n));
}

TEST_CASE("phi_def with e = 2 is half the totient for n >= 3") {
    for (std::uint64_t n = 3; n <= 3000; ++n) CHECK(phi_def(n, 2).value == euler_phi(n) / 2);
    CHECK(phi_def(1, 2).value == 0);
    CHECK(phi_def(2, 2).value == 1);
}

TEST_CASE("phi_mobius pinned examples") {
    CHECK(phi_mobius(12, 12).value == 1);
    CHECK(phi_mobius(24, 12).value == 1);
    CHECK(phi_mobius(8, 8).value == 1);
    CHECK(phi_mobius(12, 12).method == PhiMethod::mobius_sum);
    CHECK_THROWS_AS(phi_mobius(5, 0), std::invalid_argument);
}

TEST_CASE("phi_def equals phi_mobius across e") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        Factorization f = factorize(n);
        for (std::uint64_t e = 1; e <= 16; ++e)
            CHECK(phi_def(n, e).value == phi_mobius(f, e).value);
    }
}

TEST_CASE("phi_def and phi_mobius vanish when floor(n/e) underflows") {
    CHECK(phi_def(7, 8).value == 0);
    CHECK(phi_mobius(7, 8).value == 0);
    CHECK(phi_def(11, 12).value == 0);
    CHECK(phi_mobius(11, 12).value == 0);
    CHECK(phi_def(1, 5).value == 0);
    CHECK(phi_mobius(1, 5).value == 0);
}

TEST_CASE("phi_mobius handles large n cheaply") {
    // 2^62: phi = 2^61, phi_8 = 2^58.
    Factorization f = factorize(1ULL << 62);
    CHECK(phi_mobius(f, 8).value == 1ULL << 58);
    // Large semiprime: phi_e(p*q) for e = 1 equals (p-1)(q-1).
    std::uint64_t p = 2147483647ULL, q = 2147483629ULL;
    CHECK(phi_mobius(factorize(p * q), 1).value == (p - 1) * (q - 1));
}
