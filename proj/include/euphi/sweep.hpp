#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace euphi {

struct SweepOptions {
    std::uint64_t max = 100000;    // verify n in [1, max]
    bool use_brute = true;         // compare against the counting oracle ...
    std::uint64_t brute_cap = 10000;  // ... for n up to this cap
    bool use_mobius = true;        // compare against the divisor-sum oracle (full range)
    bool check_parity = true;      // e in {8, 12}: classifier vs value parity
    int jobs = 1;                  // worker threads; output independent of this
};

struct SweepMismatch {
    std::uint64_t n = 0;
    std::uint64_t closed_value = 0;
    std::uint64_t oracle_value = 0;
    std::string oracle;  // "def" or "mobius" or "parity"
};

struct SweepReport {
    std::uint64_t e = 0;
    std::uint64_t checked = 0;
    std::vector<SweepMismatch> mismatches;              // ascending n
    std::map<std::string, std::uint64_t> branch_counts; // branch key -> hits

    bool ok() const { return mismatches.empty(); }
};

// Sweep n = 1..max comparing the closed-form dispatcher against the oracles,
// tallying which closed-form branches fire. Deterministic for fixed options;
// jobs > 1 only partitions the range (chunks are merged in order).
SweepReport verify_phi_sweep(std::uint64_t e, const SweepOptions& options);

}  // namespace euphi
