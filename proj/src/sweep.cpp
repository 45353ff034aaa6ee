#include "euphi/sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "euphi/arith.hpp"
#include "euphi/parity.hpp"
#include "euphi/phi_closed_form.hpp"
#include "euphi/phi_reference.hpp"

namespace euphi {

namespace {

SweepReport sweep_range(std::uint64_t e, std::uint64_t lo, std::uint64_t hi,
                        const SweepOptions& options) {
    SweepReport report;
    report.e = e;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        Factorization f = factorize(n);
        PhiValue closed = phi_generalized(f, e);
        ++report.branch_counts[closed.branch.key()];
        ++report.checked;
        if (options.use_mobius) {
            PhiValue oracle = phi_mobius(f, e);
            if (oracle.value != closed.value)
                report.mismatches.push_back({n, closed.value, oracle.value, "mobius"});
        }
        if (options.use_brute && n <= options.brute_cap) {
            PhiValue oracle = phi_def(n, e);
            if (oracle.value != closed.value)
                report.mismatches.push_back({n, closed.value, oracle.value, "def"});
        }
        if (options.check_parity && (e == 8 || e == 12)) {
            ParityVerdict verdict = e == 8 ? parity_phi8(f) : parity_phi12(f);
            bool value_odd = closed.value % 2 == 1;
            bool verdict_odd = verdict.parity == Parity::odd;
            if (verdict_odd != value_odd)
                report.mismatches.push_back(
                    {n, value_odd ? 1ULL : 0ULL, verdict_odd ? 1ULL : 0ULL, "parity"});
        }
    }
    return report;
}

}  // namespace

SweepReport verify_phi_sweep(std::uint64_t e, const SweepOptions& options) {
    if (e == 0) throw std::invalid_argument("verify_phi_sweep: e must be positive");
    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || options.max < 1000) return sweep_range(e, 1, options.max, options);

    std::vector<SweepReport> parts(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    std::uint64_t chunk = (options.max + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::uint64_t lo = 1 + chunk * static_cast<std::uint64_t>(w);
        std::uint64_t hi = std::min(options.max, lo + chunk - 1);
        if (lo > options.max) break;
        workers.emplace_back([&parts, w, e, lo, hi, &options] {
            parts[static_cast<std::size_t>(w)] = sweep_range(e, lo, hi, options);
        });
    }
    for (auto& t : workers) t.join();

    SweepReport merged;
    merged.e = e;
    for (const auto& part : parts) {
        merged.checked += part.checked;
        merged.mismatches.insert(merged.mismatches.end(), part.mismatches.begin(),
                                 part.mismatches.end());
        for (const auto& [key, count] : part.branch_counts) merged.branch_counts[key] += count;
    }
    std::sort(merged.mismatches.begin(), merged.mismatches.end(),
              [](const SweepMismatch& a, const SweepMismatch& b) { return a.n < b.n; });
    return merged;
}

}  // namespace euphi
