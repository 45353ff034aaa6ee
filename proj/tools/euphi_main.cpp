#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "euphi/arith.hpp"
#include "euphi/floor_representation.hpp"
#include "euphi/parity.hpp"
#include "euphi/phi_closed_form.hpp"
#include "euphi/phi_reference.hpp"
#include "euphi/sweep.hpp"
#include "json.hpp"

namespace {

using namespace euphi;

struct ComputeArgs {
    std::uint64_t e = 1;
    std::string method = "closed";
    bool all_methods = false;
    std::vector<std::uint64_t> values;
};

struct TableArgs {
    std::uint64_t e = 1;
    std::uint64_t from = 1;
    std::uint64_t to = 100;
    std::string format = "csv";
};

struct VerifyArgs {
    std::uint64_t e = 8;
    std::uint64_t max = 100000;
    std::string oracle = "both";
    std::uint64_t brute_cap = 10000;
    int jobs = 1;
};

struct ConjectureArgs {
    std::uint64_t e = 0;  // 0 = all built-ins
    std::uint64_t d_max = 1000000;
    std::string candidate_path;
    bool search = false;
    std::string parity = "odd";
    std::int64_t bound = 6;
    int max_terms = 2;
    std::vector<std::uint64_t> primes = {2, 3, 5, 7};
};

PhiValue compute_one(const Factorization& f, std::uint64_t e, const std::string& method) {
    if (method == "def") return phi_def(f.n, e);
    if (method == "mobius") return phi_mobius(f, e);
    return phi_generalized(f, e);
}

int run_compute(const ComputeArgs& args) {
    int status = 0;
    for (std::uint64_t n : args.values) {
        Factorization f = factorize(n);
        if (args.all_methods) {
            PhiValue closed = phi_generalized(f, args.e);
            PhiValue def = phi_def(n, args.e);
            PhiValue mob = phi_mobius(f, args.e);
            std::cout << "phi_" << args.e << "(" << n << ") = " << closed.value
                      << " (def " << def.value << ", mobius " << mob.value << ", branch "
                      << closed.branch.key() << ")\n";
            if (closed.value != def.value || closed.value != mob.value) {
                std::cerr << "mismatch at n=" << n << "\n";
                status = 1;
            }
        } else {
            PhiValue v = compute_one(f, args.e, args.method);
            std::cout << "phi_" << args.e << "(" << n << ") = " << v.value << "\n";
        }
    }
    return status;
}

struct TableRow {
    std::uint64_t n;
    std::uint64_t phi;
    bool odd;
    std::string rule;
    std::string branch;
};

TableRow table_row(std::uint64_t n, std::uint64_t e) {
    Factorization f = factorize(n);
    PhiValue v = phi_generalized(f, e);
    TableRow row{n, v.value, v.value % 2 == 1, "", v.branch.key()};
    if (e == 8 || e == 12) {
        ParityVerdict verdict = e == 8 ? parity_phi8(f) : parity_phi12(f);
        row.odd = verdict.parity == Parity::odd;
        row.rule = verdict.rule;
    }
    return row;
}

int run_table(const TableArgs& args) {
    if (args.to < args.from) throw std::invalid_argument("table: --to must be >= --from");
    if (args.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (std::uint64_t n = args.from; n <= args.to; ++n) {
            TableRow row = table_row(n, args.e);
            out.push_back({{"n", row.n},
                           {"phi", row.phi},
                           {"parity", row.odd ? "odd" : "even"},
                           {"rule", row.rule},
                           {"branch", row.branch}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const char sep = args.format == "tsv" ? '\t' : ',';
    std::cout << "n" << sep << "phi" << sep << "parity" << sep << "rule" << sep << "branch\n";
    for (std::uint64_t n = args.from; n <= args.to; ++n) {
        TableRow row = table_row(n, args.e);
        std::cout << row.n << sep << row.phi << sep << (row.odd ? "odd" : "even") << sep
                  << row.rule << sep << row.branch << "\n";
    }
    return 0;
}

int run_verify(const VerifyArgs& args) {
    SweepOptions options;
    options.max = args.max;
    options.use_brute = args.oracle != "mobius";
    options.use_mobius = args.oracle != "brute";
    options.brute_cap = args.brute_cap;
    options.jobs = args.jobs;
    SweepReport report = verify_phi_sweep(args.e, options);
    for (const auto& m : report.mismatches)
        std::cout << "mismatch n=" << m.n << " closed=" << m.closed_value
                  << " oracle=" << m.oracle_value << " (" << m.oracle << ")\n";
    std::cout << "e=" << report.e << " checked=" << report.checked
              << " mismatches=" << report.mismatches.size() << "\n";
    for (const auto& [key, count] : report.branch_counts)
        std::cout << "branch " << key << " " << count << "\n";
    return report.ok() ? 0 : 1;
}

const char* parity_name(ParityClass pc) { return pc == ParityClass::odd_d ? "odd-d" : "even-d"; }

int verify_builtins(std::uint64_t only_e, std::uint64_t d_max) {
    int status = 0;
    std::vector<std::uint64_t> es;
    if (only_e != 0)
        es.push_back(only_e);
    else
        es = {2, 3, 4, 6, 8, 12};
    for (std::uint64_t e : es) {
        FloorRepresentation rep = builtin_representation(e);  // throws for unsupported e
        RepVerification v = verify_representation(rep, d_max);
        std::cout << "e=" << e << " " << parity_name(rep.parity_class)
                  << " checked=" << v.checked;
        if (v.ok) {
            std::cout << " ok\n";
        } else {
            std::cout << " FAILED first_failure=" << v.first_failure << "\n";
            status = 1;
        }
    }
    return status;
}

int run_candidate(const ConjectureArgs& args) {
    std::ifstream in(args.candidate_path);
    if (!in) {
        std::cerr << "error: cannot read " << args.candidate_path << "\n";
        return 2;
    }
    FloorRepresentation rep;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        rep = j.get<FloorRepresentation>();
    } catch (const std::exception& err) {
        std::cerr << "error: bad candidate: " << err.what() << "\n";
        return 2;
    }
    RepVerification v = verify_representation(rep, args.d_max);
    std::cout << "candidate e=" << rep.e << " " << parity_name(rep.parity_class)
              << " checked=" << v.checked;
    if (v.ok) {
        std::cout << " ok\n";
        return 0;
    }
    std::cout << " FAILED first_failure=" << v.first_failure << "\n";
    return 1;
}

int run_search(const ConjectureArgs& args) {
    if (args.e == 0) throw std::invalid_argument("conjecture --search requires --e");
    ParityClass pc = args.parity == "even" ? ParityClass::even_d : ParityClass::odd_d;
    SearchOptions options;
    options.coeff_bound = args.bound;
    options.max_terms = args.max_terms;
    options.primes = args.primes;
    options.d_max = args.d_max;
    auto found = search_representation(args.e, pc, options);
    if (!found) {
        std::cout << "no representation found within bounds\n";
        return 0;
    }
    nlohmann::json j = *found;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_conjecture(const ConjectureArgs& args) {
    if (!args.candidate_path.empty()) return run_candidate(args);
    if (args.search) return run_search(args);
    return verify_builtins(args.e, args.d_max);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Euler function toolkit: closed forms, parity rules, "
                 "floor-of-quotient representations"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand("compute", "Evaluate phi_e(n)");
    compute->add_option("-e,--e", compute_args.e, "Divisor parameter e")
        ->required()
        ->check(CLI::PositiveNumber);
    compute->add_option("--method", compute_args.method, "Evaluation method")
        ->check(CLI::IsMember({"closed", "def", "mobius"}))
        ->capture_default_str();
    compute->add_flag("--all-methods", compute_args.all_methods,
                      "Evaluate every method and cross-check");
    compute->add_option("n", compute_args.values, "Arguments n")->required()->expected(-1);

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "Tabulate phi_e with parity and branch");
    table->add_option("-e,--e", table_args.e, "Divisor parameter e")
        ->required()
        ->check(CLI::PositiveNumber);
    table->add_option("--from", table_args.from, "First n")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    table->add_option("--to", table_args.to, "Last n")->required()->check(CLI::PositiveNumber);
    table->add_option("--format", table_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "tsv", "json"}))
        ->capture_default_str();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Sweep closed forms against the oracles");
    verify->add_option("-e,--e", verify_args.e, "Divisor parameter e")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--max", verify_args.max, "Verify n in [1, max]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--oracle", verify_args.oracle, "Oracle selection")
        ->check(CLI::IsMember({"brute", "mobius", "both"}))
        ->capture_default_str();
    verify->add_option("--brute-cap", verify_args.brute_cap,
                       "Counting-oracle cutoff (it is O(n) per value)")
        ->capture_default_str();
    verify->add_option("--jobs", verify_args.jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    ConjectureArgs conjecture_args;
    CLI::App* conjecture = app.add_subcommand(
        "conjecture", "Verify or search floor-of-quotient representations");
    conjecture->add_option("-e,--e", conjecture_args.e,
                           "Divisor parameter e (default: all built-ins)")
        ->check(CLI::PositiveNumber);
    conjecture->add_option("--d-max", conjecture_args.d_max, "Verification depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    conjecture->add_option("--candidate", conjecture_args.candidate_path,
                           "JSON file with a representation to verify");
    conjecture->add_flag("--search", conjecture_args.search,
                         "Search for a representation (requires --e)");
    conjecture->add_option("--parity", conjecture_args.parity, "Parity class of d for --search")
        ->check(CLI::IsMember({"odd", "even"}))
        ->capture_default_str();
    conjecture->add_option("--bound", conjecture_args.bound, "Coefficient bound for --search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    conjecture->add_option("--max-terms", conjecture_args.max_terms,
                           "Maximum Jacobi terms for --search")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    conjecture->add_option("--primes", conjecture_args.primes,
                           "Candidate term moduli for --search")
        ->delimiter(',')
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return err.get_exit_code() == 0 ? code : 2;
    }

    try {
        if (compute->parsed()) return run_compute(compute_args);
        if (table->parsed()) return run_table(table_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (conjecture->parsed()) return run_conjecture(conjecture_args);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
