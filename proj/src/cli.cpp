#include "zcp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zcp/construct.hpp"
#include "zcp/corr.hpp"
#include "zcp/formats.hpp"
#include "zcp/gbf.hpp"
#include "zcp/verify.hpp"

namespace zcp {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_report_summary(std::ostream& out, const ZcpReport& r) {
    out << "length:       " << r.length << "\n";
    out << "claimed zcz:  ";
    if (r.claimed_zcz) {
        out << *r.claimed_zcz << "\n";
    } else {
        out << "(none)\n";
    }
    out << "actual zcz:   " << r.actual_zcz << "\n";
    out << "is gcp:       " << (r.is_gcp ? "yes" : "no") << "\n";
    out << "claim check:  " << (r.passes_claim ? "pass" : "FAIL") << "\n";
    if (r.magnitude_check_applicable) {
        out << "out-of-zone magnitude check (0 or exactly 4): "
            << (r.passes_magnitude_check ? "pass" : "FAIL") << "\n";
    }
}

struct GenerateArgs {
    std::string params_path;
    std::string out_prefix;
    ZcpParams params;
    bool has_m = false, has_q = false, has_pi = false, has_e = false, has_f = false;
};

ZcpParams resolve_params(const GenerateArgs& args, const ZcpParams& flags) {
    ZcpParams params;
    if (!args.params_path.empty()) {
        params = params_from_json(nlohmann::json::parse(read_file(args.params_path)));
    }
    if (args.has_m) params.m = flags.m;
    if (args.has_q) params.q = flags.q;
    if (args.has_pi) params.pi = flags.pi;
    if (args.has_e) params.e = flags.e;
    if (args.has_f) params.f = flags.f;
    params.experimental_m3 = flags.experimental_m3;
    return params;
}

int cmd_generate(const GenerateArgs& args, const ZcpParams& flag_params, std::ostream& out) {
    ZcpParams params = resolve_params(args, flag_params);
    params.validate();

    const SequencePair pair = zcp_pair(params);
    std::optional<int> claimed;
    if (params.m >= 4) claimed = claimed_zcz_width(params);
    const bool magnitude_check_applicable = (params.q == 2) && params.m >= 4;
    const ZcpReport report = verify_zcp(pair, claimed, magnitude_check_applicable);

    std::string prefix = args.out_prefix;
    if (prefix.empty()) {
        prefix = "zcp_m" + std::to_string(params.m) + "_q" + std::to_string(params.q);
    }
    write_file(prefix + ".pair.txt", pair_to_text(pair));

    std::ostringstream profile_csv;
    write_profile_csv(profile_csv, aacs_profile(pair));
    write_file(prefix + ".profile.csv", profile_csv.str());

    nlohmann::json j = report_to_json(report);
    j["params"] = params_to_json(params);
    write_file(prefix + ".report.json", j.dump(2) + "\n");

    out << "wrote " << prefix << ".pair.txt, " << prefix << ".profile.csv, " << prefix
        << ".report.json\n";
    print_report_summary(out, report);
    return report.ok() ? kExitOk : kExitClaimFailed;
}

int cmd_verify(const std::string& pair_path, std::optional<int> claimed, bool check_magnitudes,
               const std::string& out_path, std::ostream& out) {
    const SequencePair pair = parse_pair_text(read_file(pair_path));
    const ZcpReport report = verify_zcp(pair, claimed, check_magnitudes);
    nlohmann::json j = report_to_json(report);
    j["params"] = {{"input", pair_path}};
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        write_file(out_path, j.dump(2) + "\n");
        out << "wrote " << out_path << "\n";
    }
    print_report_summary(out, report);
    return report.ok() ? kExitOk : kExitClaimFailed;
}

int cmd_correlate(const std::string& pair_path, const std::string& out_path, std::ostream& out) {
    const SequencePair pair = parse_pair_text(read_file(pair_path));
    const AacsProfile profile = aacs_profile(pair);
    if (out_path.empty()) {
        write_profile_csv(out, profile);
    } else {
        std::ostringstream csv;
        write_profile_csv(csv, profile);
        write_file(out_path, csv.str());
        out << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_search(int n, int max_n, bool max_n_from_flag, int witnesses, unsigned threads,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
    SearchOptions options;
    options.max_n = max_n;
    options.max_witnesses = witnesses;
    options.threads = threads;
    options.progress = &err;
    if (const char* env = std::getenv("ZCP_SEARCH_MAX_N"); env && !max_n_from_flag) {
        options.max_n = std::atoi(env);
    }
    if (options.max_n > 12 && n > 12) {
        err << "warning: search cap raised to n<=" << options.max_n
            << "; work grows as 4^(n-1)\n";
    }
    const SearchResult result = exhaustive_search(n, options);
    const nlohmann::json j = search_to_json(result);
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        write_file(out_path, j.dump(2) + "\n");
        out << "wrote " << out_path << "\n";
    }
    err << "best zcz at n=" << n << ": " << result.best_zcz << " ("
        << result.pairs_examined << " pairs examined)\n";
    return kExitOk;
}

int cmd_table(int m_min, int m_max, const std::string& format, const std::string& out_path,
              std::ostream& out) {
    const std::vector<RatioRow> rows = ratio_table(m_min, m_max);
    const std::vector<ComparisonRow> comparison = comparison_rows();
    std::ostringstream buf;
    if (format == "csv") {
        write_ratio_table_csv(buf, rows, comparison);
    } else {
        write_ratio_table_text(buf, rows, comparison);
    }
    if (out_path.empty()) {
        out << buf.str();
    } else {
        write_file(out_path, buf.str());
        out << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

bool check_line(std::ostream& out, const std::string& label, const std::string& computed,
                const std::string& expected) {
    const bool ok = (computed == expected);
    out << label << ": " << computed << (ok ? "  [ok]" : "  [MISMATCH, expected " + expected + "]")
        << "\n";
    return ok;
}

int cmd_example(const std::string& name, std::ostream& out) {
    bool all_ok = true;
    if (name == "ex1") {
        // f = x0x1 + x1x2 over m=3, q=2; its sequence and the L=1 truncation.
        const Gbf f(3, 2, {Term(1, {{0, false}, {1, false}}), Term(1, {{1, false}, {2, false}})});
        const PhaseSequence psi = f.to_sequence();
        all_ok &= check_line(out, "psi(f)  ", sequence_to_text(psi), "+++-++-+");
        all_ok &= check_line(out, "psi_1(f)", sequence_to_text(psi.truncated(1)), "++-++-");
    } else if (name == "ex2" || name == "ex3") {
        ZcpParams params;
        if (name == "ex2") {
            params = {.m = 6, .q = 2, .pi = {2, 0, 1, 3}};
        } else {
            params = {.m = 5, .q = 2, .pi = {1, 2, 0}};
        }
        const int claimed = claimed_zcz_width(params);
        const SequencePair pair = zcp_pair(params);
        const ZcpReport report = verify_zcp(pair, claimed, true);
        out << "a: " << sequence_to_text(pair.a) << "\n";
        out << "b: " << sequence_to_text(pair.b) << "\n";
        const int expect_len = (name == "ex2") ? 34 : 18;
        const int expect_zcz = (name == "ex2") ? 25 : 10;
        all_ok &= check_line(out, "length     ", std::to_string(report.length),
                             std::to_string(expect_len));
        all_ok &= check_line(out, "claimed zcz", std::to_string(claimed),
                             std::to_string(expect_zcz));
        all_ok &= check_line(out, "zcz claim  ", report.passes_claim ? "pass" : "FAIL", "pass");
        all_ok &= check_line(out, "out-of-zone magnitudes in {0,4}",
                             report.passes_magnitude_check ? "pass" : "FAIL", "pass");
        out << "actual zcz: " << report.actual_zcz << "\n";
    } else {
        throw CLI::ValidationError("example", "unknown example '" + name +
                                   "' (choose ex1, ex2 or ex3)");
    }
    return all_ok ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Even-length Z-complementary pair construction and verification toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    ZcpParams gen_flags;
    auto* gen = app.add_subcommand(
        "generate", "Construct a pair from GBF parameters; write pair, profile and report files");
    auto* om = gen->add_option("--m", gen_flags.m, "variable count (>= 4)");
    auto* oq = gen->add_option("--q", gen_flags.q, "even phase modulus (default 2)");
    auto* opi = gen->add_option("--pi", gen_flags.pi,
                                "permutation of {0..m-3} as comma-separated image list")
                    ->delimiter(',');
    auto* oe = gen->add_option("--e", gen_flags.e, "plain-literal affine offsets in Z_q")
                   ->delimiter(',');
    auto* of = gen->add_option("--f", gen_flags.f, "complemented-literal affine offsets in Z_q")
                   ->delimiter(',');
    gen->add_option("--params", gen_args.params_path, "JSON parameter file (flags override)");
    gen->add_option("--out", gen_args.out_prefix, "output file prefix");
    gen->add_flag("--experimental-m3", gen_flags.experimental_m3,
                  "allow the degenerate m=3 object (no ZCZ-width claim)");

    std::string verify_pair_path, verify_out;
    int verify_claimed = -1;
    bool verify_check_magnitudes = false;
    auto* ver = app.add_subcommand("verify", "Verify a pair file and emit a report");
    ver->add_option("pair_file", verify_pair_path, "pair file to verify")->required();
    auto* oclaimed = ver->add_option("--claimed", verify_claimed, "claimed ZCZ width to check");
    ver->add_flag("--check-magnitudes", verify_check_magnitudes,
                  "also assert the out-of-zone magnitudes are 0 or exactly 4");
    ver->add_option("--out", verify_out, "report JSON path (default: stdout)");

    std::string corr_pair_path, corr_out;
    auto* cor = app.add_subcommand("correlate", "Emit the autocorrelation-sum profile CSV");
    cor->add_option("pair_file", corr_pair_path, "pair file to correlate")->required();
    cor->add_option("--out", corr_out, "CSV path (default: stdout)");

    int search_n = 0, search_max_n = 12, search_witnesses = 4;
    unsigned search_threads = 0;
    std::string search_out;
    auto* sea = app.add_subcommand("search", "Exhaustive binary pair search at one length");
    sea->add_option("--n", search_n, "even pair length")->required();
    auto* omax = sea->add_option("--max-n", search_max_n,
                                 "cost cap (also env ZCP_SEARCH_MAX_N; default 12)");
    sea->add_option("--witnesses", search_witnesses, "max witness pairs to keep");
    sea->add_option("--threads", search_threads, "worker threads (0 = hardware)");
    sea->add_option("--out", search_out, "result JSON path (default: stdout)");

    int table_m_min = 4, table_m_max = 12;
    std::string table_format = "text", table_out;
    auto* tab = app.add_subcommand("table", "ZCZ-ratio table plus the construction comparison");
    tab->add_option("--m-min", table_m_min, "smallest m (>= 4)");
    tab->add_option("--m-max", table_m_max, "largest m");
    tab->add_option("--format", table_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    tab->add_option("--out", table_out, "output path (default: stdout)");

    std::string example_name;
    auto* exa = app.add_subcommand("example", "Reproduce a built-in example against golden values");
    exa->add_option("name", example_name, "ex1, ex2 or ex3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        gen_args.has_m = om->count() > 0;
        gen_args.has_q = oq->count() > 0;
        gen_args.has_pi = opi->count() > 0;
        gen_args.has_e = oe->count() > 0;
        gen_args.has_f = of->count() > 0;
        if (gen->parsed()) return cmd_generate(gen_args, gen_flags, out);
        if (ver->parsed()) {
            std::optional<int> claimed;
            if (oclaimed->count() > 0) claimed = verify_claimed;
            return cmd_verify(verify_pair_path, claimed, verify_check_magnitudes, verify_out, out);
        }
        if (cor->parsed()) return cmd_correlate(corr_pair_path, corr_out, out);
        if (sea->parsed()) {
            return cmd_search(search_n, search_max_n, omax->count() > 0, search_witnesses,
                              search_threads, search_out, out, err);
        }
        if (tab->parsed()) return cmd_table(table_m_min, table_m_max, table_format, table_out, out);
        if (exa->parsed()) return cmd_example(example_name, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("zcp");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace zcp
