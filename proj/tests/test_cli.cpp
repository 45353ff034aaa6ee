#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CommandResult {
    int status = -1;
    std::string out;
};

// Runs the binary under test (EUPHI_BIN) with the given arguments, capturing
// stdout; stderr is discarded unless the caller merges it via `args`.
CommandResult run_cli(const std::string& args, bool merge_stderr = false) {
    const char* bin = std::getenv("EUPHI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "EUPHI_BIN must point at the CLI binary");
    std::string cmd = std::string(bin) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

}  // namespace

TEST_CASE("compute prints values") {
    CommandResult r = run_cli("compute --e 8 100");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "phi_8(100) = 5"));

    r = run_cli("compute --e 1 5 10");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "phi_1(5) = 4"));
    CHECK(contains(r.out, "phi_1(10) = 4"));

    r = run_cli("compute --e 12 --method mobius 24");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "phi_12(24) = 1"));
}

TEST_CASE("compute --all-methods cross-checks") {
    CommandResult r = run_cli("compute --e 12 --all-methods 360");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "phi_12(360) = 8"));
    CHECK(contains(r.out, "branch e12-split/a=>=3 b=>=2 r5"));
}

TEST_CASE("table emits the pinned CSV layout") {
    CommandResult r = run_cli("table --e 8 --from 14 --to 16");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "n,phi,parity,rule,branch\n"));
    CHECK(contains(r.out, "14,1,odd,2p^a p%16=7|9,e8-split/a=1 r7\n"));
    CHECK(contains(r.out, "15,1,odd,p1^a1*p2^a2 both-p%8=3|5,e8-split/a=0 mixed\n"));
    CHECK(contains(r.out, "16,1,odd,n=8|16,e8-pow2/a>=4\n"));
}

TEST_CASE("table output is bit-stable across runs") {
    CommandResult first = run_cli("table --e 12 --from 1 --to 200");
    CommandResult second = run_cli("table --e 12 --from 1 --to 200");
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
}

TEST_CASE("table handles a generic e with value parity and no rule") {
    CommandResult r = run_cli("table --e 5 --from 10 --to 11");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "10,1,odd,,mobius-fallback\n"));
    CHECK(contains(r.out, "11,2,even,,mobius-fallback\n"));
}

TEST_CASE("table tsv and json formats") {
    CommandResult tsv = run_cli("table --e 8 --from 16 --to 16 --format tsv");
    CHECK(tsv.status == 0);
    CHECK(contains(tsv.out, "n\tphi\tparity\trule\tbranch\n"));
    CHECK(contains(tsv.out, "16\t1\todd\tn=8|16\te8-pow2/a>=4\n"));

    CommandResult js = run_cli("table --e 8 --from 15 --to 16 --format json");
    CHECK(js.status == 0);
    nlohmann::json parsed = nlohmann::json::parse(js.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].at("n") == 15);
    CHECK(parsed[0].at("phi") == 1);
    CHECK(parsed[0].at("parity") == "odd");
    CHECK(parsed[1].at("rule") == "n=8|16");
    CHECK(parsed[1].at("branch") == "e8-pow2/a>=4");
}

TEST_CASE("verify sweeps cleanly") {
    CommandResult r = run_cli("verify --e 8 --max 5000 --brute-cap 2000");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "e=8 checked=5000 mismatches=0"));
    CHECK(contains(r.out, "branch e8-pow2/a>=4 "));
    CHECK(contains(r.out, "branch mobius-fallback "));

    r = run_cli("verify --e 12 --max 3000 --brute-cap 1000 --oracle both");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "e=12 checked=3000 mismatches=0"));
}

TEST_CASE("conjecture verifies the built-in representations") {
    CommandResult r = run_cli("conjecture --d-max 20000");
    CHECK(r.status == 0);
    for (const char* line : {"e=2 odd-d checked=", "e=3 odd-d checked=", "e=4 odd-d checked=",
                             "e=6 odd-d checked=", "e=8 odd-d checked=", "e=12 odd-d checked="})
        CHECK(contains(r.out, line));
    CHECK(!contains(r.out, "FAILED"));

    r = run_cli("conjecture --e 8 --d-max 20000");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "e=8 odd-d checked=9999 ok"));
}

TEST_CASE("conjecture --candidate accepts a correct representation") {
    const std::string path = "/tmp/euphi_cli_candidate_good.json";
    write_file(path, R"({"e":8,"parity_class":"odd","u":{"num":1,"den":8},
        "a1":1,"a2":-4,"a3":1,"r":1,"terms":[{"b":2,"eps":-1,"q":2}]})");
    CommandResult r = run_cli("conjecture --candidate " + path + " --d-max 20000");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "candidate e=8 odd-d checked="));
    CHECK(contains(r.out, " ok"));
}

TEST_CASE("conjecture --candidate rejects a wrong representation with exit 1") {
    const std::string path = "/tmp/euphi_cli_candidate_bad.json";
    write_file(path, R"({"e":8,"parity_class":"odd","u":{"num":1,"den":8},
        "a1":1,"a2":-3,"a3":1,"r":1,"terms":[{"b":2,"eps":-1,"q":2}]})");
    CommandResult r = run_cli("conjecture --candidate " + path);
    CHECK(r.status == 1);
    CHECK(contains(r.out, "FAILED first_failure=3"));
}

TEST_CASE("conjecture --candidate usage failures exit 2") {
    const std::string malformed = "/tmp/euphi_cli_candidate_malformed.json";
    write_file(malformed, R"({"e":8)");
    CHECK(run_cli("conjecture --candidate " + malformed).status == 2);

    const std::string invalid = "/tmp/euphi_cli_candidate_invalid.json";
    write_file(invalid, R"({"e":8,"parity_class":"odd","u":{"num":1,"den":8},
        "a1":1,"a2":-4,"a3":1,"terms":[{"b":2,"eps":-1,"q":4}]})");
    CHECK(run_cli("conjecture --candidate " + invalid).status == 2);

    CHECK(run_cli("conjecture --candidate /tmp/euphi_no_such_file.json").status == 2);
}

TEST_CASE("conjecture --search emits the found representation as JSON") {
    CommandResult r = run_cli("conjecture --search --e 4 --d-max 2000");
    CHECK(r.status == 0);
    nlohmann::json rep = nlohmann::json::parse(r.out);
    CHECK(rep.at("e") == 4);
    CHECK(rep.at("parity_class") == "odd");
    CHECK(rep.at("a1") == 1);
    CHECK(rep.at("a2") == -2);
    CHECK(rep.at("a3") == 1);

    r = run_cli("conjecture --search --e 3 --parity even --d-max 2000");
    CHECK(r.status == 0);
    rep = nlohmann::json::parse(r.out);
    CHECK(rep.at("parity_class") == "even");
    CHECK(rep.at("a1") == 2);
    CHECK(rep.at("a2") == -3);
    REQUIRE(rep.at("terms").size() == 1);
    CHECK(rep.at("terms")[0].at("b") == 1);
    CHECK(rep.at("terms")[0].at("eps") == 1);
    CHECK(rep.at("terms")[0].at("q") == 3);
}

TEST_CASE("conjecture --search rejects an empty domain with exit 2") {
    CHECK(run_cli("conjecture --search --e 8 --parity even").status == 2);
}

TEST_CASE("usage errors exit 2, help exits 0") {
    CHECK(run_cli("").status == 2);                    // subcommand required
    CHECK(run_cli("frobnicate").status == 2);          // unknown subcommand
    CHECK(run_cli("compute --e 8").status == 2);       // missing n
    CHECK(run_cli("compute 5").status == 2);           // missing --e
    CHECK(run_cli("table --e 0 --to 5").status == 2);  // e must be positive
    CHECK(run_cli("table --e 8 --from 9 --to 5").status == 2);
    CHECK(run_cli("compute --e 8 0").status == 2);     // n = 0 has no factorization
    CHECK(run_cli("table --e 8 --to 5 --format yaml").status == 2);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("compute --help").status == 0);
}
