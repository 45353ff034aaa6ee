#include "euphi/floor_representation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "euphi/arith.hpp"

namespace euphi {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

namespace {

// Canonical "no Jacobi part" placeholders keeping the r >= 1 invariant.
const JacobiTerm placeholder_term{0, 1, 2};       // odd-d representations
const JacobiTerm even_placeholder_term{0, 1, 3};  // even-d (q must be odd)

void validate(const FloorRepresentation& rep) {
    if (rep.e == 0) throw std::invalid_argument("representation: e must be positive");
    if (rep.u.den <= 0 || rep.u.num == 0)
        throw std::invalid_argument("representation: u must be a nonzero normalized rational");
    if (rep.terms.empty())
        throw std::invalid_argument("representation: at least one Jacobi term required");
    for (const auto& term : rep.terms) {
        if (term.sign != 1 && term.sign != -1)
            throw std::invalid_argument("representation: term sign must be +1 or -1");
        if (!is_prime(term.q))
            throw std::invalid_argument("representation: term modulus must be prime");
        if (rep.parity_class == ParityClass::even_d && term.q == 2)
            throw std::invalid_argument("representation: even-d terms need odd primes");
    }
    if (rep.parity_class == ParityClass::even_d && rep.a3 != 0)
        throw std::invalid_argument("representation: a3 is an odd-d coefficient");
}

// Right-hand side numerator K with floor(d/e) = u * K.
std::int64_t combination(const FloorRepresentation& rep, std::uint64_t d) {
    __int128 total = static_cast<__int128>(rep.a1) * static_cast<std::int64_t>(d) + rep.a2;
    if (rep.parity_class == ParityClass::odd_d) {
        if (rep.a3 != 0) total += static_cast<__int128>(rep.a3) * jacobi(-1, d);
        for (const auto& term : rep.terms) {
            if (term.coeff == 0) continue;
            std::int64_t numerator = term.sign * static_cast<std::int64_t>(term.q);
            total += static_cast<__int128>(term.coeff) * jacobi(numerator, d);
        }
    } else {
        for (const auto& term : rep.terms) {
            if (term.coeff == 0) continue;
            std::int64_t numerator = term.sign > 0 ? static_cast<std::int64_t>(d)
                                                   : -static_cast<std::int64_t>(d);
            total += static_cast<__int128>(term.coeff) * jacobi(numerator, term.q);
        }
    }
    auto lo = static_cast<std::int64_t>(total);
    if (static_cast<__int128>(lo) != total)
        throw std::overflow_error("representation: combination overflows 64 bits");
    return lo;
}

}  // namespace

FloorRepresentation builtin_representation(std::uint64_t e) {
    switch (e) {
        case 2:
            return {2, ParityClass::odd_d, make_rational(1, 2), 1, -1, 0, {placeholder_term}};
        case 3:
            return {3, ParityClass::odd_d, make_rational(1, 6), 2, -3, 0, {{1, -1, 3}}};
        case 4:
            return {4, ParityClass::odd_d, make_rational(1, 4), 1, -2, 1, {placeholder_term}};
        case 6:
            return {6, ParityClass::odd_d, make_rational(1, 6), 1, -3, 0, {{2, -1, 3}}};
        case 8:
            return {8, ParityClass::odd_d, make_rational(1, 8), 1, -4, 1, {{2, -1, 2}}};
        case 12:
            return {12, ParityClass::odd_d, make_rational(1, 12), 1, -6, 3, {{2, -1, 3}}};
        default:
            throw std::invalid_argument("builtin_representation: e must be 2, 3, 4, 6, 8 or 12");
    }
}

bool is_valid_argument(const FloorRepresentation& rep, std::uint64_t d) {
    if (d <= 2) return false;  // the identity is asserted for d > 2 only
    bool odd = d % 2 == 1;
    if ((rep.parity_class == ParityClass::odd_d) != odd) return false;
    return std::gcd(d, rep.e) == 1;
}

Rational eval_representation(const FloorRepresentation& rep, std::uint64_t d) {
    validate(rep);
    std::int64_t k = combination(rep, d);
    __int128 num = static_cast<__int128>(rep.u.num) * k;
    auto lo = static_cast<std::int64_t>(num);
    if (static_cast<__int128>(lo) != num)
        throw std::overflow_error("representation: value overflows 64 bits");
    return make_rational(lo, rep.u.den);
}

RepVerification verify_representation(const FloorRepresentation& rep, std::uint64_t d_max) {
    validate(rep);
    RepVerification result;
    std::uint64_t start = rep.parity_class == ParityClass::odd_d ? 3 : 4;
    for (std::uint64_t d = start; d <= d_max; d += 2) {
        if (std::gcd(d, rep.e) != 1) continue;
        ++result.checked;
        __int128 lhs = static_cast<__int128>(rep.u.num) * combination(rep, d);
        __int128 rhs = static_cast<__int128>(d / rep.e) * rep.u.den;
        if (lhs != rhs) {
            result.ok = false;
            result.first_failure = d;
            return result;
        }
    }
    return result;
}

namespace {

// Quick-reject depth used before a full verification of a search candidate.
constexpr std::uint64_t kPrefilterDepth = 120;

bool candidate_works(FloorRepresentation& rep, std::uint64_t d_max) {
    std::uint64_t start = rep.parity_class == ParityClass::odd_d ? 3 : 4;
    for (std::uint64_t d = start; d <= kPrefilterDepth; d += 2) {
        if (std::gcd(d, rep.e) != 1) continue;
        __int128 lhs = static_cast<__int128>(rep.u.num) * combination(rep, d);
        __int128 rhs = static_cast<__int128>(d / rep.e) * rep.u.den;
        if (lhs != rhs) return false;
    }
    return verify_representation(rep, d_max).ok;
}

}  // namespace

std::optional<FloorRepresentation> search_representation(std::uint64_t e, ParityClass parity_class,
                                                         const SearchOptions& options) {
    if (e == 0) throw std::invalid_argument("search_representation: e must be positive");
    if (parity_class == ParityClass::even_d && e % 2 == 0)
        throw std::invalid_argument(
            "search_representation: no even d is coprime to an even e (empty domain)");
    std::vector<std::uint64_t> primes = options.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::erase_if(primes, [&](std::uint64_t q) {
        return !is_prime(q) || (parity_class == ParityClass::even_d && q == 2);
    });

    // (sign, q) slots in canonical order: by q ascending, +1 before -1.
    std::vector<JacobiTerm> slots;
    for (std::uint64_t q : primes) {
        slots.push_back({0, 1, q});
        slots.push_back({0, -1, q});
    }

    const std::int64_t bound = options.coeff_bound;
    FloorRepresentation rep;
    rep.e = e;
    rep.parity_class = parity_class;

    auto try_terms = [&](std::vector<JacobiTerm> terms) -> bool {
        if (terms.empty())
            terms = {parity_class == ParityClass::odd_d ? placeholder_term
                                                        : even_placeholder_term};
        rep.terms = std::move(terms);
        return candidate_works(rep, options.d_max);
    };

    for (std::int64_t a1 = 1; a1 <= bound; ++a1) {
        // The leading scale is forced: u*a1*d must track d/e as d grows.
        if (static_cast<std::uint64_t>(a1) > std::numeric_limits<std::int64_t>::max() / e) break;
        rep.u = make_rational(1, a1 * static_cast<std::int64_t>(e));
        rep.a1 = a1;
        for (std::int64_t a2 = -bound; a2 <= bound; ++a2) {
            rep.a2 = a2;
            std::int64_t a3_lo = parity_class == ParityClass::odd_d ? -bound : 0;
            std::int64_t a3_hi = parity_class == ParityClass::odd_d ? bound : 0;
            for (std::int64_t a3 = a3_lo; a3 <= a3_hi; ++a3) {
                rep.a3 = a3;
                if (try_terms({})) return rep;
                if (options.max_terms >= 1) {
                    for (std::size_t i = 0; i < slots.size(); ++i) {
                        for (std::int64_t b = -bound; b <= bound; ++b) {
                            if (b == 0) continue;
                            JacobiTerm t = slots[i];
                            t.coeff = b;
                            if (try_terms({t})) return rep;
                        }
                    }
                }
                if (options.max_terms >= 2) {
                    for (std::size_t i = 0; i < slots.size(); ++i) {
                        for (std::size_t j = i + 1; j < slots.size(); ++j) {
                            if (slots[i].q == slots[j].q) continue;  // one term per prime
                            for (std::int64_t bi = -bound; bi <= bound; ++bi) {
                                if (bi == 0) continue;
                                for (std::int64_t bj = -bound; bj <= bound; ++bj) {
                                    if (bj == 0) continue;
                                    JacobiTerm ti = slots[i], tj = slots[j];
                                    ti.coeff = bi;
                                    tj.coeff = bj;
                                    if (try_terms({ti, tj})) return rep;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

void to_json(nlohmann::json& j, const FloorRepresentation& rep) {
    j = nlohmann::json{
        {"e", rep.e},
        {"parity_class", rep.parity_class == ParityClass::odd_d ? "odd" : "even"},
        {"u", {{"num", rep.u.num}, {"den", rep.u.den}}},
        {"a1", rep.a1},
        {"a2", rep.a2},
        {"r", rep.terms.size()},
    };
    if (rep.parity_class == ParityClass::odd_d) j["a3"] = rep.a3;
    j["terms"] = nlohmann::json::array();
    for (const auto& term : rep.terms)
        j["terms"].push_back({{"b", term.coeff}, {"eps", term.sign}, {"q", term.q}});
}

void from_json(const nlohmann::json& j, FloorRepresentation& rep) {
    rep = FloorRepresentation{};
    rep.e = j.at("e").get<std::uint64_t>();
    std::string parity = j.at("parity_class").get<std::string>();
    if (parity == "odd")
        rep.parity_class = ParityClass::odd_d;
    else if (parity == "even")
        rep.parity_class = ParityClass::even_d;
    else
        throw std::invalid_argument("representation: parity_class must be \"odd\" or \"even\"");
    rep.u = make_rational(j.at("u").at("num").get<std::int64_t>(),
                          j.at("u").at("den").get<std::int64_t>());
    rep.a1 = j.at("a1").get<std::int64_t>();
    rep.a2 = j.at("a2").get<std::int64_t>();
    rep.a3 = j.value("a3", static_cast<std::int64_t>(0));
    for (const auto& jt : j.at("terms")) {
        JacobiTerm term;
        term.coeff = jt.at("b").get<std::int64_t>();
        term.sign = jt.at("eps").get<int>();
        term.q = jt.at("q").get<std::uint64_t>();
        rep.terms.push_back(term);
    }
    if (j.contains("r") && j.at("r").get<std::size_t>() != rep.terms.size())
        throw std::invalid_argument("representation: r does not match the term count");
    validate(rep);
}

}  // namespace euphi
