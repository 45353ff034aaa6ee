#include "euphi/parity.hpp"

#include <stdexcept>
#include <vector>

namespace euphi {

namespace {

struct OddPart {
    // n = 2^a2 * p1^e1 * p2^e2 (at most two odd primes matter to the tables).
    int a2 = 0;
    std::vector<PrimePower> odd;  // ascending
};

OddPart split_odd(const Factorization& f) {
    OddPart parts;
    for (const auto& pp : f.factors) {
        if (pp.prime == 2)
            parts.a2 = pp.exponent;
        else
            parts.odd.push_back(pp);
    }
    return parts;
}

ParityVerdict pick(std::uint64_t n, const std::vector<const char*>& fired) {
    if (fired.size() > 1) throw std::logic_error("parity: multiple odd rules fired");
    if (fired.empty()) return {n, Parity::even, "even"};
    return {n, Parity::odd, fired.front()};
}

bool in(std::uint64_t value, std::initializer_list<std::uint64_t> set) {
    for (std::uint64_t s : set)
        if (value == s) return true;
    return false;
}

}  // namespace

ParityVerdict parity_phi8(const Factorization& f) {
    std::uint64_t n = f.n;
    if (n == 8 || n == 16) return {n, Parity::odd, "n=8|16"};

    OddPart parts = split_odd(f);
    std::vector<const char*> fired;

    if (parts.odd.size() == 1) {
        std::uint64_t p16 = parts.odd[0].prime % 16;
        std::uint64_t p8 = parts.odd[0].prime % 8;
        bool a_even = parts.odd[0].exponent % 2 == 0;
        if (parts.a2 == 0) {
            if (in(p16, {9, 15})) fired.push_back("p^a p%16=9|15");
            if (in(p16, {3, 5}) && a_even) fired.push_back("p^a p%16=3|5 a-even");
            if (in(p16, {11, 13}) && !a_even) fired.push_back("p^a p%16=11|13 a-odd");
        } else if (parts.a2 == 1) {
            if (in(p16, {7, 9})) fired.push_back("2p^a p%16=7|9");
            if (in(p16, {3, 13}) && a_even) fired.push_back("2p^a p%16=3|13 a-even");
            if (in(p16, {5, 11}) && !a_even) fired.push_back("2p^a p%16=5|11 a-odd");
        } else if (parts.a2 == 2) {
            if (in(p8, {3, 5})) fired.push_back("4p^a p%8=3|5");
        } else if (parts.a2 == 3) {
            if (in(p8, {3, 7})) fired.push_back("8p^a p%8=3|7");
        }
    } else if (parts.odd.size() == 2 && parts.a2 <= 1) {
        bool both35 = in(parts.odd[0].prime % 8, {3, 5}) && in(parts.odd[1].prime % 8, {3, 5});
        if (both35) {
            if (parts.a2 == 0)
                fired.push_back("p1^a1*p2^a2 both-p%8=3|5");
            else
                fired.push_back("2*p1^a1*p2^a2 both-p%8=3|5");
        }
    }
    return pick(n, fired);
}

ParityVerdict parity_phi12(const Factorization& f) {
    std::uint64_t n = f.n;
    if (n < 12) return {n, Parity::even, "even"};
    if (n == 12 || n == 24) return {n, Parity::odd, "n=12|24"};

    OddPart parts = split_odd(f);
    int b3 = 0;
    std::vector<PrimePower> rest;
    for (const auto& pp : parts.odd) {
        if (pp.prime == 3)
            b3 = pp.exponent;
        else
            rest.push_back(pp);
    }
    std::vector<const char*> fired;

    if (rest.empty()) {
        if (b3 == 0 && parts.a2 >= 4) fired.push_back("2^a a>=4");
        if (b3 == 1 && parts.a2 >= 2) fired.push_back("3*2^a a>=2");
        if (b3 >= 2 && parts.a2 == 1) fired.push_back("2*3^b b>=2");
        if (b3 >= 2 && parts.a2 == 2) fired.push_back("4*3^b b>=2");
    } else if (rest.size() == 1) {
        std::uint64_t p24 = rest[0].prime % 24;
        std::uint64_t p12 = rest[0].prime % 12;
        if (parts.a2 == 0 && b3 == 0 && in(p24, {13, 17, 19, 23}))
            fired.push_back("p^a p%24=13|17|19|23");
        if (parts.a2 == 1 && b3 == 0 && in(p24, {7, 11, 13, 17}))
            fired.push_back("2p^a p%24=7|11|13|17");
        if (parts.a2 == 0 && b3 == 1 && in(p12, {5, 7})) fired.push_back("3p^a p%12=5|7");
        if (parts.a2 == 2 && b3 == 0 && in(p12, {5, 7})) fired.push_back("4p^a p%12=5|7");
        if (parts.a2 == 1 && b3 == 1 && in(p12, {5, 7})) fired.push_back("6p^a p%12=5|7");
        if (parts.a2 == 2 && b3 == 1 && in(p12, {5, 11})) fired.push_back("12p^a p%12=5|11");
    }
    return pick(n, fired);
}

ParityVerdict parity_phi8(std::uint64_t n) { return parity_phi8(factorize(n)); }
ParityVerdict parity_phi12(std::uint64_t n) { return parity_phi12(factorize(n)); }

}  // namespace euphi
