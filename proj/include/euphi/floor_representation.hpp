#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace euphi {

// Exact rational, normalized: den > 0, gcd(|num|, den) = 1, 0 stored as 0/1.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);  // throws on den == 0

// Which arguments d a representation covers.
enum class ParityClass { odd_d, even_d };

// One Jacobi-symbol term. For odd-d representations the term contributes
// coeff * (sign*q | d); for even-d representations, coeff * (sign*d | q)
// with q restricted to odd primes.
struct JacobiTerm {
    std::int64_t coeff = 0;
    int sign = 1;            // +1 or -1
    std::uint64_t q = 2;

    friend bool operator==(const JacobiTerm&, const JacobiTerm&) = default;
};

// Closed form for floor(d/e) over one parity class of d coprime to e:
//   odd d:  floor(d/e) = u * (a1*d + a2 + a3*(-1|d) + sum_j coeff_j*(sign_j*q_j | d))
//   even d: floor(d/e) = u * (a1*d + a2 +             sum_j coeff_j*(sign_j*d | q_j))
// Invariant: at least one term (a zero-coefficient placeholder term
// {0, +1, 2} stands in when no Jacobi part is needed).
struct FloorRepresentation {
    std::uint64_t e = 0;
    ParityClass parity_class = ParityClass::odd_d;
    Rational u;
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
    std::int64_t a3 = 0;  // used by odd_d only
    std::vector<JacobiTerm> terms;

    friend bool operator==(const FloorRepresentation&, const FloorRepresentation&) = default;
};

// Known-good odd-d representations for e in {2, 3, 4, 6, 8, 12};
// throws std::invalid_argument for any other e.
FloorRepresentation builtin_representation(std::uint64_t e);

// d belongs to the representation's domain: matching parity and gcd(d, e) = 1.
bool is_valid_argument(const FloorRepresentation& rep, std::uint64_t d);

// Exact rational value of the right-hand side at d (d need not be valid).
Rational eval_representation(const FloorRepresentation& rep, std::uint64_t d);

struct RepVerification {
    bool ok = true;
    std::uint64_t checked = 0;        // number of valid d examined
    std::uint64_t first_failure = 0;  // smallest failing d; meaningful when !ok
};

// Check rep against floor(d/e) for every valid d in [1, d_max].
RepVerification verify_representation(const FloorRepresentation& rep, std::uint64_t d_max);

struct SearchOptions {
    std::int64_t coeff_bound = 6;  // a1 in [1, bound]; a2, a3, coeffs in [-bound, bound]
    int max_terms = 2;
    std::vector<std::uint64_t> primes = {2, 3, 5, 7};  // candidate q values
    std::uint64_t d_max = 10000;   // verification depth for accepting a candidate
};

// Bounded deterministic search for a representation of floor(d/e) on the given
// parity class. Scale is pinned by u*a1 = 1/e; enumeration order is fixed, so
// equal inputs always return the same (canonical) representation, or nullopt.
std::optional<FloorRepresentation> search_representation(std::uint64_t e, ParityClass parity_class,
                                                         const SearchOptions& options = {});

void to_json(nlohmann::json& j, const FloorRepresentation& rep);
void from_json(const nlohmann::json& j, FloorRepresentation& rep);

}  // namespace euphi
