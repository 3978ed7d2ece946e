// Acceptance suite: drives every verification target end to end and prints
// one pass/fail line per criterion. Exits nonzero iff any criterion failed.
//
// Usage: zcp_acceptance --cli <path-to-zcp-binary>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "zcp/construct.hpp"
#include "zcp/corr.hpp"
#include "zcp/formats.hpp"
#include "zcp/gbf.hpp"
#include "zcp/verify.hpp"

using namespace zcp;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
    void require(bool condition, const std::string& why) {
        if (!condition) fail(why);
    }
};

int g_failures = 0;

void report(int index, const std::string& name, const Outcome& outcome, double ms,
            double budget_ms) {
    std::ostringstream line;
    line << (outcome.pass ? "[PASS] " : "[FAIL] ") << index << ". " << name << " (";
    line.setf(std::ios::fixed);
    line.precision(ms < 10 ? 3 : 1);
    line << ms << " ms";
    if (budget_ms > 0) {
        line.precision(0);
        line << ", budget " << budget_ms << " ms";
    }
    line << ")";
    if (!outcome.pass) line << " -- " << outcome.detail;
    std::cout << line.str() << "\n";
    if (!outcome.pass) ++g_failures;
}

template <typename Fn>
void criterion(int index, const std::string& name, double budget_ms, Fn&& body) {
    Outcome outcome;
    const auto t0 = Clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (budget_ms > 0 && ms >= budget_ms) {
        outcome.fail("runtime " + std::to_string(ms) + " ms exceeds budget");
    }
    report(index, name, outcome, ms, budget_ms);
}

std::vector<std::vector<int>> permutation_set(int k, long long enumerate_cap,
                                              std::size_t sample_count, std::mt19937& rng) {
    std::vector<int> image(static_cast<std::size_t>(k));
    std::iota(image.begin(), image.end(), 0);
    long long factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;

    std::vector<std::vector<int>> result;
    if (factorial <= enumerate_cap) {
        do {
            result.push_back(image);
        } while (std::next_permutation(image.begin(), image.end()));
    } else {
        for (std::size_t s = 0; s < sample_count; ++s) {
            std::shuffle(image.begin(), image.end(), rng);
            result.push_back(image);
        }
    }
    return result;
}

// Shared state crossing criteria: 7 re-checks the pairs of 4 and 6.
std::uint64_t g_floor_checked_pairs = 0;
std::uint64_t g_floor_failures = 0;
std::vector<SearchResult> g_search_results;
std::string g_cli_path;

void criterion1(Outcome& out) {
    const Gbf f(3, 2, {Term(1, {{0, false}, {1, false}}), Term(1, {{1, false}, {2, false}})});
    const PhaseSequence psi = f.to_sequence();
    out.require(sequence_to_text(psi) == "+++-++-+",
                "sequence text is " + sequence_to_text(psi));
    out.require(sequence_to_text(psi.truncated(1)) == "++-++-",
                "truncated text is " + sequence_to_text(psi.truncated(1)));
}

void criterion2(Outcome& out) {
    const ZcpParams params{.m = 6, .q = 2, .pi = {2, 0, 1, 3}};
    const SequencePair pair = zcp_pair(params);
    out.require(pair.length() == 34, "length != 34");
    const AacsProfile profile = aacs_profile(pair);
    for (std::size_t tau = 1; tau <= 24; ++tau) {
        out.require(profile.values[tau].real_integer() == 0,
                    "nonzero inside the zone at tau=" + std::to_string(tau));
    }
    for (std::size_t tau = 25; tau < profile.length(); ++tau) {
        const long long v = profile.values[tau].real_integer();
        out.require(v == 0 || v == 4 || v == -4,
                    "out-of-zone value " + std::to_string(v) + " at tau=" + std::to_string(tau));
    }
}

void criterion3(Outcome& out) {
    const ZcpParams params{.m = 5, .q = 2, .pi = {1, 2, 0}};
    const SequencePair pair = zcp_pair(params);
    out.require(pair.length() == 18, "length != 18");
    const AacsProfile profile = aacs_profile(pair);
    for (std::size_t tau = 1; tau <= 9; ++tau) {
        out.require(profile.values[tau].real_integer() == 0,
                    "nonzero inside the zone at tau=" + std::to_string(tau));
    }
}

void criterion4(Outcome& out) {
    std::mt19937 rng(20260810);
    std::uint64_t checked = 0;
    for (int m = 4; m <= 10; ++m) {
        const std::vector<std::vector<int>> perms = permutation_set(m - 2, 720, 200, rng);
        for (const std::vector<int>& pi : perms) {
            for (int q : {2, 4}) {
                std::uniform_int_distribution<int> offset(0, q - 1);
                for (int draw = 0; draw < 10; ++draw) {
                    ZcpParams params{.m = m, .q = q, .pi = pi};
                    params.e.resize(static_cast<std::size_t>(m - 2));
                    params.f.resize(static_cast<std::size_t>(m - 2));
                    for (int& v : params.e) v = offset(rng);
                    for (int& v : params.f) v = offset(rng);

                    const SequencePair pair = zcp_pair(params);
                    const int claimed = claimed_zcz_width(params);
                    ++checked;
                    if (pair.length() != (std::size_t{1} << (m - 1)) + 2) {
                        out.fail("wrong length at m=" + std::to_string(m));
                        continue;
                    }
                    const AacsProfile profile = aacs_profile(pair);
                    const int width = zcz_width(profile);
                    if (width < claimed) {
                        out.fail("zone " + std::to_string(width) + " < claimed " +
                                 std::to_string(claimed) + " at m=" + std::to_string(m) +
                                 " q=" + std::to_string(q));
                        continue;
                    }
                    if (q == 2) {
                        for (std::size_t tau = static_cast<std::size_t>(width);
                             tau < profile.length(); ++tau) {
                            const long long v = profile.values[tau].real_integer();
                            if (v != 0 && v != 4 && v != -4) {
                                out.fail("out-of-zone magnitude " + std::to_string(v) +
                                         " at m=" + std::to_string(m));
                            }
                        }
                        ++g_floor_checked_pairs;
                        if (!magnitude_floor_check(pair)) {
                            ++g_floor_failures;
                            out.fail("magnitude floor violated at m=" + std::to_string(m));
                        }
                    }
                }
            }
        }
    }
    out.require(checked > 0, "no parameter points visited");
    std::cout << "  criterion 4 visited " << checked << " parameter points\n";
}

void criterion5(Outcome& out) {
    std::mt19937 rng(826);
    for (int m = 2; m <= 10; ++m) {
        for (int q : {2, 4}) {
            std::uniform_int_distribution<int> coeff(0, q - 1);
            for (int draw = 0; draw < 20; ++draw) {
                const Permutation pi = testing::random_permutation(rng, m);
                std::vector<int> g(static_cast<std::size_t>(m));
                for (int& v : g) v = coeff(rng);
                const Gbf f = golay_gbf(m, q, pi, g, coeff(rng));
                const SequencePair gcp = gcp_pair(f, pi);
                if (!verify_gcp(gcp)) {
                    out.fail("gcp law failed at m=" + std::to_string(m) +
                             " q=" + std::to_string(q));
                    continue;
                }
                if (!verify_mates(gcp, mate_pair(f, pi))) {
                    out.fail("mate law failed at m=" + std::to_string(m) +
                             " q=" + std::to_string(q));
                }
            }
        }
    }
}

void criterion6(Outcome& out) {
    g_search_results.clear();
    for (int n : {2, 6, 10}) {
        g_search_results.push_back(exhaustive_search(n));
    }
    out.require(g_search_results[0].best_zcz == 2, "best zcz at n=2 is not 2");
    out.require(g_search_results[1].best_zcz <= 4, "best zcz at n=6 exceeds n-2");
    out.require(g_search_results[2].best_zcz == 10, "best zcz at n=10 is not 10");
    for (const SearchResult& r : g_search_results) {
        for (const SequencePair& w : r.witnesses) {
            out.require(verify_zcp(w).actual_zcz == r.best_zcz,
                        "witness does not achieve best zcz at n=" + std::to_string(r.n));
        }
    }
}

void criterion7(Outcome& out) {
    out.require(g_floor_checked_pairs > 0, "no constructed pairs were floor-checked");
    out.require(g_floor_failures == 0,
                std::to_string(g_floor_failures) + " constructed pairs violated the floor");
    out.require(!g_search_results.empty(), "searches did not run");
    std::uint64_t enumerated = 0;
    for (const SearchResult& r : g_search_results) {
        out.require(r.floor_violations == 0,
                    "floor violations among enumerated pairs at n=" + std::to_string(r.n));
        enumerated += r.pairs_examined;
    }
    std::cout << "  criterion 7 covered " << g_floor_checked_pairs
              << " constructed pairs and " << enumerated << " enumerated pairs\n";
}

void criterion8(Outcome& out) {
    for (int m = 4; m <= 20; ++m) {
        const long long length = (1LL << (m - 1)) + 2;
        const long long zone = (1LL << (m - 2)) + (1LL << (m - 3)) + 1;
        const Fraction ratio(zone, length);
        const Fraction target = Fraction(3, 4) - Fraction(1, (1LL << m) + 4);
        out.require(ratio == target, "identity fails at m=" + std::to_string(m));
    }

    // The CLI table must carry the same exact rationals.
    const fs::path csv_path = fs::temp_directory_path() /
                              ("zcp_acceptance_table_" + std::to_string(::getpid()) + ".csv");
    const std::string command = "\"" + g_cli_path +
                                "\" table --m-min 4 --m-max 20 --format csv --out " +
                                csv_path.string() + " > /dev/null 2>&1";
    const int rc = std::system(command.c_str());
    out.require(rc == 0, "CLI table command failed");
    std::ifstream csv(csv_path);
    out.require(csv.good(), "CLI table output missing");
    std::string line;
    std::getline(csv, line);  // header
    int rows = 0;
    while (std::getline(csv, line) && !line.empty()) {
        std::istringstream fields(line);
        std::string m_tok, len_tok, zcz_tok, ratio_tok, dec_tok, dev_tok;
        std::getline(fields, m_tok, ',');
        std::getline(fields, len_tok, ',');
        std::getline(fields, zcz_tok, ',');
        std::getline(fields, ratio_tok, ',');
        std::getline(fields, dec_tok, ',');
        std::getline(fields, dev_tok, ',');
        const int m = std::stoi(m_tok);
        const Fraction expect = Fraction(3, 4) - Fraction(1, (1LL << m) + 4);
        out.require(ratio_tok == expect.str(),
                    "CLI ratio mismatch at m=" + m_tok + ": " + ratio_tok);
        out.require(dev_tok == Fraction(1, (1LL << m) + 4).str(),
                    "CLI deviation mismatch at m=" + m_tok);
        ++rows;
    }
    out.require(rows == 17, "CLI table row count is " + std::to_string(rows));
    std::error_code ec;
    fs::remove(csv_path, ec);
}

void criterion9(Outcome& out) {
    std::mt19937 rng(64);
    std::uniform_int_distribution<int> len(1, 64);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = len(rng);
        const PhaseSequence a = testing::random_sequence(rng, n);
        const PhaseSequence b = testing::random_sequence(rng, n);
        const std::vector<int> pa = testing::to_pm1(a);
        const std::vector<int> pb = testing::to_pm1(b);
        for (long long tau = -n; tau <= n; ++tau) {
            if (accf(a, b, tau).real_integer() != testing::accf_pm1(pa, pb, tau)) {
                out.fail("engine/oracle mismatch at n=" + std::to_string(n) +
                         " tau=" + std::to_string(tau));
                return;
            }
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    }
    if (g_cli_path.empty()) {
        std::cerr << "usage: zcp_acceptance --cli <path-to-zcp-binary>\n";
        return 2;
    }

    criterion(1, "byte-exact m=3 sequence and truncation", 1.0, criterion1);
    criterion(2, "m=6 pair: zone 25 exact, out-of-zone values in {0,4}", 10.0, criterion2);
    criterion(3, "m=5 pair: length 18, zone 10 exact", 10.0, criterion3);
    criterion(4, "construction sweep m=4..10, q in {2,4}", 120000.0, criterion4);
    criterion(5, "golay/mate suite m=2..10, q in {2,4}", 30000.0, criterion5);
    criterion(6, "exhaustive searches at n=2,6,10", 60000.0, criterion6);
    criterion(7, "magnitude floor across constructed and enumerated pairs", 0.0, criterion7);
    criterion(8, "exact zcz-ratio law m=4..20, CLI table agrees", 0.0, criterion8);
    criterion(9, "engine matches the +-1 oracle on 1000 random pairs", 0.0, criterion9);

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
    } else {
        std::cout << g_failures << " acceptance criteria FAILED\n";
    }
    return g_failures == 0 ? 0 : 1;
}
