#include "euphi/phi_closed_form.hpp"

#include <stdexcept>
#include <string>

#include "euphi/phi_reference.hpp"

namespace euphi {

const char* to_string(BranchFamily family) {
    switch (family) {
        case BranchFamily::none: return "none";
        case BranchFamily::totient: return "totient";
        case BranchFamily::half_totient: return "half-totient";
        case BranchFamily::thirds: return "thirds";
        case BranchFamily::quarters: return "quarters";
        case BranchFamily::sixths: return "sixths";
        case BranchFamily::exact_quotient: return "exact-quotient";
        case BranchFamily::e8_pow2: return "e8-pow2";
        case BranchFamily::e8_split: return "e8-split";
        case BranchFamily::e12_small: return "e12-small";
        case BranchFamily::e12_smooth: return "e12-smooth";
        case BranchFamily::e12_split: return "e12-split";
        case BranchFamily::mobius_fallback: return "mobius-fallback";
    }
    return "?";
}

std::string Branch::key() const {
    std::string k = to_string(family);
    if (!label.empty()) {
        k += '/';
        k += label;
    }
    return k;
}

namespace {

// (phi(n) + adj) / div, checked to be an exact nonnegative division.
std::uint64_t exact_adjusted(std::uint64_t phi, std::int64_t adj, int div) {
    __int128 numer = static_cast<__int128>(phi) + adj;
    if (numer < 0 || numer % div != 0)
        throw std::logic_error("closed form: exact-division invariant violated");
    return static_cast<std::uint64_t>(numer / div);
}

std::int64_t pow2(int k) {
    if (k < 0) throw std::logic_error("closed form: negative power of two");
    return static_cast<std::int64_t>(1) << k;
}

std::uint64_t pow3(int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r *= 3;
    return r;
}

int parity_sign(int big_omega) { return big_omega % 2 == 0 ? 1 : -1; }

// Residue classes steering the e = 8 split: the set of odd-prime residues
// mod 8. r5 = {5,7} or {5}; r3 = {3,7} or {3}; r7 = {7}; mixed = the rest
// (any set containing 1, or containing both 3 and 5).
enum class Res8Class { r5, r3, r7, mixed };

Res8Class classify8(const std::set<int>& rs) {
    bool has1 = rs.count(1) != 0, has3 = rs.count(3) != 0, has5 = rs.count(5) != 0;
    if (!has1) {
        if (has5 && !has3) return Res8Class::r5;
        if (has3 && !has5) return Res8Class::r3;
        if (!has3 && !has5) return Res8Class::r7;  // nonempty here, so rs == {7}
    }
    return Res8Class::mixed;
}

const char* to_label(Res8Class c) {
    switch (c) {
        case Res8Class::r5: return "r5";
        case Res8Class::r3: return "r3";
        case Res8Class::r7: return "r7";
        case Res8Class::mixed: return "mixed";
    }
    return "?";
}

// Same idea for e = 12 on the residues mod 12 of the primes > 3:
// r7 = {7,11} or {7}; r5 = {5,11} or {5}; r11 = {11}; mixed = the rest.
enum class Res12Class { r7, r5, r11, mixed };

Res12Class classify12(const std::set<int>& rs) {
    bool has1 = rs.count(1) != 0, has5 = rs.count(5) != 0, has7 = rs.count(7) != 0;
    if (!has1) {
        if (has7 && !has5) return Res12Class::r7;
        if (has5 && !has7) return Res12Class::r5;
        if (!has5 && !has7) return Res12Class::r11;  // nonempty, so rs == {11}
    }
    return Res12Class::mixed;
}

const char* to_label(Res12Class c) {
    switch (c) {
        case Res12Class::r7: return "r7";
        case Res12Class::r5: return "r5";
        case Res12Class::r11: return "r11";
        case Res12Class::mixed: return "mixed";
    }
    return "?";
}

}  // namespace

ResidueProfile residue_profile(const Factorization& f, int modulus) {
    if (modulus != 8 && modulus != 12)
        throw std::invalid_argument("residue_profile: modulus must be 8 or 12");
    ResidueProfile profile;
    profile.modulus = modulus;
    profile.alpha = f.exponent_of(2);
    profile.beta = f.exponent_of(3);
    for (const auto& pp : f.factors) {
        if (pp.prime == 2) continue;
        if (modulus == 12 && pp.prime == 3) continue;
        profile.residues.insert(static_cast<int>(pp.prime % static_cast<unsigned>(modulus)));
    }
    return profile;
}

PhiValue phi3_closed(const Factorization& f) {
    if (f.n <= 3) throw std::invalid_argument("phi3_closed: requires n > 3");
    int alpha = f.exponent_of(3);
    bool all2mod3 = true;
    for (const auto& pp : f.factors)
        if (pp.prime != 3 && pp.prime % 3 != 2) all2mod3 = false;
    std::uint64_t phi = euler_phi(f);
    if (alpha <= 1 && all2mod3) {
        int sign = parity_sign(f.total_prime_factors());
        std::int64_t adj = sign * pow2(f.distinct_primes() - alpha - 1);
        return {exact_adjusted(phi, adj, 3), PhiMethod::closed_form,
                {BranchFamily::thirds, "adjusted"}};
    }
    return {exact_adjusted(phi, 0, 3), PhiMethod::closed_form, {BranchFamily::thirds, "plain"}};
}

PhiValue phi4_closed(const Factorization& f) {
    if (f.n <= 4) throw std::invalid_argument("phi4_closed: requires n > 4");
    int alpha = f.exponent_of(2);
    bool all3mod4 = true;
    for (const auto& pp : f.factors)
        if (pp.prime != 2 && pp.prime % 4 != 3) all3mod4 = false;
    std::uint64_t phi = euler_phi(f);
    if (alpha <= 1 && all3mod4) {
        int sign = parity_sign(f.total_prime_factors());
        std::int64_t adj = sign * pow2(f.distinct_primes() - alpha);
        return {exact_adjusted(phi, adj, 4), PhiMethod::closed_form,
                {BranchFamily::quarters, "adjusted"}};
    }
    return {exact_adjusted(phi, 0, 4), PhiMethod::closed_form, {BranchFamily::quarters, "plain"}};
}

PhiValue phi6_closed(const Factorization& f) {
    if (f.n <= 6) throw std::invalid_argument("phi6_closed: requires n > 6");
    int alpha = f.exponent_of(2);
    int beta = f.exponent_of(3);
    bool all5mod6 = true;
    for (const auto& pp : f.factors)
        if (pp.prime != 2 && pp.prime != 3 && pp.prime % 6 != 5) all5mod6 = false;
    std::uint64_t phi = euler_phi(f);
    int omega = f.distinct_primes();
    int sign = parity_sign(f.total_prime_factors());
    if (beta <= 1 && all5mod6) {
        std::int64_t adj;
        const char* label;
        if (alpha == 0) {
            adj = sign * pow2(omega + 1 - beta);
            label = "a=0 adjusted";
        } else if (alpha == 1) {
            adj = sign * pow2(omega - 1 - beta);
            label = "a=1 adjusted";
        } else {
            adj = -sign * pow2(omega - beta);
            label = "a>=2 adjusted";
        }
        return {exact_adjusted(phi, adj, 6), PhiMethod::closed_form,
                {BranchFamily::sixths, label}};
    }
    return {exact_adjusted(phi, 0, 6), PhiMethod::closed_form, {BranchFamily::sixths, "plain"}};
}

bool support_divides(const Factorization& f, std::uint64_t e) {
    if (e == 0) return false;
    Factorization fe = factorize(e);
    for (const auto& pp : fe.factors)
        if (f.exponent_of(pp.prime) < pp.exponent + 1) return false;
    return true;
}

PhiValue phi_support_divides(const Factorization& f, std::uint64_t e) {
    if (!support_divides(f, e))
        throw std::invalid_argument(
            "phi_support_divides: every prime power of e must divide n with margin");
    std::uint64_t phi = euler_phi(f);
    if (phi % e != 0) throw std::logic_error("phi_support_divides: exact division violated");
    return {phi / e, PhiMethod::closed_form, {BranchFamily::exact_quotient, ""}};
}

PhiValue phi8_closed(const Factorization& f) {
    ResidueProfile profile = residue_profile(f, 8);
    int alpha = profile.alpha;
    if (profile.residues.empty()) {  // n = 2^a (n = 1 falls through to the divisor sum)
        if (alpha >= 1) {
            if (alpha <= 2)
                return {0, PhiMethod::closed_form, {BranchFamily::e8_pow2, "a=1|2"}};
            if (alpha == 3)
                return {1, PhiMethod::closed_form, {BranchFamily::e8_pow2, "a=3"}};
            return {1ULL << (alpha - 4), PhiMethod::closed_form, {BranchFamily::e8_pow2, "a>=4"}};
        }
    }
    if (f.n <= 8) {
        PhiValue fallback = phi_mobius(f, 8);
        fallback.branch = {BranchFamily::mobius_fallback, ""};
        return fallback;
    }

    Res8Class cls = classify8(profile.residues);
    int sign = parity_sign(f.total_prime_factors());
    std::int64_t w = pow2(f.distinct_primes());  // 2^omega(n), the factor 2 included
    std::uint64_t phi = euler_phi(f);

    std::int64_t adj = 0;
    std::string label;
    if (alpha == 0) {
        switch (cls) {
            case Res8Class::r5: adj = 2 * sign * w; break;
            case Res8Class::r3: adj = sign * w; break;
            case Res8Class::r7: adj = 3 * sign * w; break;
            case Res8Class::mixed: adj = 0; break;
        }
        label = "a=0 ";
    } else if (alpha == 1) {
        switch (cls) {
            case Res8Class::r5: adj = sign * w; break;
            case Res8Class::r3: adj = -sign * (w / 2); break;
            case Res8Class::r7: adj = sign * (w / 2); break;
            case Res8Class::mixed: adj = 0; break;
        }
        label = "a=1 ";
    } else if (alpha == 2) {
        switch (cls) {
            case Res8Class::r5: adj = 0; break;
            case Res8Class::r3: adj = -sign * w; break;
            case Res8Class::r7: adj = -sign * w; break;
            case Res8Class::mixed: adj = 0; break;
        }
        label = "a=2 ";
    } else {
        adj = 0;
        label = "a>=3";
    }
    if (alpha <= 2) label += to_label(cls);
    return {exact_adjusted(phi, adj, 8), PhiMethod::closed_form, {BranchFamily::e8_split, label}};
}

PhiValue phi12_closed(const Factorization& f) {
    if (f.n < 12)
        return {0, PhiMethod::closed_form, {BranchFamily::e12_small, "n<12"}};
    if (f.n == 12 || f.n == 24)
        return {1, PhiMethod::closed_form, {BranchFamily::e12_small, "n=12|24"}};

    ResidueProfile profile = residue_profile(f, 12);
    int alpha = profile.alpha;
    int beta = profile.beta;

    if (profile.residues.empty()) {  // n = 2^a * 3^b > 12, n != 24
        std::uint64_t value;
        std::string label;
        if (alpha == 0) {  // n = 3^b, so b >= 3
            value = (pow3(beta - 2) - (beta % 2 == 0 ? 1 : -1)) / 2;
            label = "a=0";
        } else if (alpha == 1) {  // b >= 2
            value = (pow3(beta - 2) + (beta % 2 == 0 ? 1 : -1)) / 2;
            label = "a=1";
        } else if (alpha == 2) {  // b >= 2
            value = pow3(beta - 2);
            label = "a=2";
        } else if (alpha == 3) {  // b >= 2
            value = 2 * pow3(beta - 2);
            label = "a=3";
        } else if (beta == 0) {
            value = ((1ULL << (alpha - 3)) + (alpha % 2 == 0 ? 1 : -1)) / 3;
            label = "a>=4 b=0";
        } else if (beta == 1) {
            value = ((1ULL << (alpha - 2)) - (alpha % 2 == 0 ? 1 : -1)) / 3;
            label = "a>=4 b=1";
        } else {
            value = (1ULL << (alpha - 2)) * pow3(beta - 2);
            label = "a>=4 b>=2";
        }
        return {value, PhiMethod::closed_form, {BranchFamily::e12_smooth, label}};
    }

    Res12Class cls = classify12(profile.residues);
    int sign = parity_sign(f.total_prime_factors());
    std::int64_t w = pow2(f.distinct_primes());      // 2^omega(n)
    std::int64_t h = w / 2;                          // 2^(omega(n)-1)
    std::uint64_t phi = euler_phi(f);

    int astr = alpha <= 2 ? alpha : 3;  // alpha stratum: 0, 1, 2, >=3
    int bstr = beta <= 1 ? beta : 2;    // beta stratum: 0, 1, >=2

    std::int64_t adj = 0;
    switch (astr * 3 + bstr) {
        case 0:  // a=0 b=0
            adj = cls == Res12Class::r7 ? 3 * sign * w
                : cls == Res12Class::r5 ? 2 * sign * w
                : cls == Res12Class::r11 ? 5 * sign * w : 0;
            break;
        case 1:  // a=0 b=1
            adj = cls == Res12Class::r5 || cls == Res12Class::r11 ? sign * w : 0;
            break;
        case 2:  // a=0 b>=2
            adj = cls == Res12Class::r7 || cls == Res12Class::r11 ? -3 * sign * w : 0;
            break;
        case 3:  // a=1 b=0
            adj = cls == Res12Class::r7 ? 3 * sign * h
                : cls == Res12Class::r5 ? -sign * w
                : cls == Res12Class::r11 ? sign * h : 0;
            break;
        case 4:  // a=1 b=1
            adj = cls == Res12Class::r5 || cls == Res12Class::r11 ? -sign * h : 0;
            break;
        case 5:  // a=1 b>=2
            adj = cls == Res12Class::r7 || cls == Res12Class::r11 ? -3 * sign * h : 0;
            break;
        case 6:  // a=2 b=0
            adj = cls == Res12Class::r5 || cls == Res12Class::r11 ? -sign * w : 0;
            break;
        case 7:  // a=2 b=1
            adj = cls == Res12Class::r5 || cls == Res12Class::r11 ? -sign * h : 0;
            break;
        case 8:  // a=2 b>=2
            adj = 0;
            break;
        case 9:  // a>=3 b=0
            adj = cls == Res12Class::r5 || cls == Res12Class::r11 ? 2 * sign * w : 0;
            break;
        case 10:  // a>=3 b=1
            adj = cls == Res12Class::r5 || cls == Res12Class::r11 ? sign * w : 0;
            break;
        default:  // a>=3 b>=2
            adj = 0;
            break;
    }

    std::string label = "a=";
    label += astr == 3 ? ">=3" : std::to_string(astr);
    label += " b=";
    label += bstr == 2 ? ">=2" : std::to_string(bstr);
    label += " ";
    label += to_label(cls);
    return {exact_adjusted(phi, adj, 12), PhiMethod::closed_form,
            {BranchFamily::e12_split, label}};
}

PhiValue phi_generalized(const Factorization& f, std::uint64_t e) {
    if (e == 0) throw std::invalid_argument("phi_generalized: e must be positive");
    auto fallback = [&]() {
        PhiValue v = phi_mobius(f, e);
        v.branch = {BranchFamily::mobius_fallback, ""};
        return v;
    };
    switch (e) {
        case 1:
            return {euler_phi(f), PhiMethod::closed_form, {BranchFamily::totient, ""}};
        case 2:
            if (f.n >= 3) {
                std::uint64_t phi = euler_phi(f);
                return {phi / 2, PhiMethod::closed_form, {BranchFamily::half_totient, ""}};
            }
            return fallback();
        case 3:
            return f.n > 3 ? phi3_closed(f) : fallback();
        case 4:
            return f.n > 4 ? phi4_closed(f) : fallback();
        case 6:
            return f.n > 6 ? phi6_closed(f) : fallback();
        case 8:
            return phi8_closed(f);
        case 12:
            return phi12_closed(f);
        default:
            return support_divides(f, e) ? phi_support_divides(f, e) : fallback();
    }
}

PhiValue phi3_closed(std::uint64_t n) { return phi3_closed(factorize(n)); }
PhiValue phi4_closed(std::uint64_t n) { return phi4_closed(factorize(n)); }
PhiValue phi6_closed(std::uint64_t n) { return phi6_closed(factorize(n)); }
PhiValue phi_support_divides(std::uint64_t n, std::uint64_t e) {
    return phi_support_divides(factorize(n), e);
}
PhiValue phi8_closed(std::uint64_t n) { return phi8_closed(factorize(n)); }
PhiValue phi12_closed(std::uint64_t n) { return phi12_closed(factorize(n)); }
PhiValue phi_generalized(std::uint64_t n, std::uint64_t e) {
    return phi_generalized(factorize(n), e);
}

}  // namespace euphi
