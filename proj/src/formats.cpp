#include "zcp/formats.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace zcp {

namespace {

struct Line {
    std::string_view text;
    int number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({line, number});
        ++number;
        if (end == text.size()) break;
        start = end + 1;
    }
    while (!lines.empty() && lines.back().text.empty()) lines.pop_back();
    return lines;
}

int parse_int(std::string_view token, const Line& line, int column) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("expected an integer, got '" + std::string(token) + "'",
                         line.number, column);
    }
    return value;
}

std::vector<int> parse_csv_ints(const Line& line) {
    std::vector<int> values;
    std::size_t start = 0;
    while (start <= line.text.size()) {
        std::size_t end = line.text.find(',', start);
        if (end == std::string_view::npos) end = line.text.size();
        std::string_view token = line.text.substr(start, end - start);
        values.push_back(parse_int(token, line, static_cast<int>(start) + 1));
        if (end == line.text.size()) break;
        start = end + 1;
    }
    return values;
}

PhaseSequence parse_sequence_line(const Line& line, int q) {
    if (line.text.empty()) throw ParseError("empty sequence line", line.number, 1);
    if (q == 2) {
        std::vector<int> phases;
        phases.reserve(line.text.size());
        for (std::size_t i = 0; i < line.text.size(); ++i) {
            const char c = line.text[i];
            if (c == '+') {
                phases.push_back(0);
            } else if (c == '-') {
                phases.push_back(1);
            } else {
                throw ParseError(std::string("invalid sequence symbol '") + c + "'",
                                 line.number, static_cast<int>(i) + 1);
            }
        }
        return PhaseSequence(2, std::move(phases));
    }
    std::vector<int> phases = parse_csv_ints(line);
    for (std::size_t i = 0; i < phases.size(); ++i) {
        if (phases[i] < 0 || phases[i] >= q) {
            throw ParseError("phase " + std::to_string(phases[i]) + " outside [0, " +
                             std::to_string(q) + ")", line.number, 1);
        }
    }
    return PhaseSequence(q, std::move(phases));
}

}  // namespace

std::string sequence_to_text(const PhaseSequence& s) {
    std::string out;
    if (s.q() == 2) {
        out.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) out += (s[i] == 0 ? '+' : '-');
        return out;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

std::string pair_to_text(const SequencePair& p) {
    std::string out;
    if (p.q() != 2) out += "q=" + std::to_string(p.q()) + "\n";
    out += sequence_to_text(p.a);
    out += '\n';
    out += sequence_to_text(p.b);
    out += '\n';
    return out;
}

SequencePair parse_pair_text(std::string_view text) {
    std::vector<Line> lines = split_lines(text);
    std::erase_if(lines, [](const Line& l) { return l.text.empty(); });
    if (lines.empty()) throw ParseError("empty pair file", 1, 1);

    int q = 2;
    std::size_t first = 0;
    if (lines[0].text.starts_with("q=")) {
        q = parse_int(lines[0].text.substr(2), lines[0], 3);
        if (q < 2 || q % 2 != 0) {
            throw ParseError("modulus q must be even and >= 2", lines[0].number, 3);
        }
        first = 1;
    }
    if (lines.size() - first != 2) {
        throw ParseError("expected exactly two sequence lines",
                         lines.empty() ? 1 : lines.back().number, 1);
    }
    PhaseSequence a = parse_sequence_line(lines[first], q);
    PhaseSequence b = parse_sequence_line(lines[first + 1], q);
    if (a.size() != b.size()) {
        throw ParseError("sequence lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()), lines[first + 1].number, 1);
    }
    return SequencePair(std::move(a), std::move(b));
}

std::string gbf_to_text(const Gbf& f) {
    std::string out = "m=" + std::to_string(f.m()) + " q=" + std::to_string(f.q()) + "\n";
    for (const Term& t : f.terms()) {
        out += std::to_string(t.coeff);
        if (!t.literals.empty()) {
            out += " *";
            for (const Literal& l : t.literals) {
                out += ' ';
                if (l.complemented) out += '~';
                out += 'x';
                out += std::to_string(l.var);
            }
        }
        out += '\n';
    }
    return out;
}

Gbf parse_gbf_text(std::string_view text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty GBF file", 1, 1);

    // Header: m=<m> q=<q>
    const Line& header = lines[0];
    std::istringstream hs{std::string(header.text)};
    std::string m_tok, q_tok;
    hs >> m_tok >> q_tok;
    if (!m_tok.starts_with("m=") || !q_tok.starts_with("q=")) {
        throw ParseError("expected header 'm=<m> q=<q>'", header.number, 1);
    }
    const int m = parse_int(std::string_view(m_tok).substr(2), header, 3);
    const int q = parse_int(std::string_view(q_tok).substr(2), header, 1);

    std::vector<Term> terms;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.text.empty()) continue;
        std::istringstream ls{std::string(line.text)};
        std::string coeff_tok;
        ls >> coeff_tok;
        const int coeff = parse_int(coeff_tok, line, 1);
        std::vector<Literal> literals;
        std::string tok;
        bool saw_star = false;
        while (ls >> tok) {
            if (tok == "*") {
                if (saw_star) throw ParseError("duplicate '*'", line.number, 1);
                saw_star = true;
                continue;
            }
            std::string_view lit = tok;
            Literal l;
            if (lit.starts_with('~')) {
                l.complemented = true;
                lit.remove_prefix(1);
            }
            if (!lit.starts_with('x')) {
                throw ParseError("expected literal x<k> or ~x<k>, got '" + tok + "'",
                                 line.number, 1);
            }
            lit.remove_prefix(1);
            l.var = parse_int(lit, line, 1);
            literals.push_back(l);
        }
        if (!literals.empty() && !saw_star) {
            throw ParseError("term with literals needs 'coeff * lit ...'", line.number, 1);
        }
        try {
            terms.emplace_back(coeff, std::move(literals));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line.number, 1);
        }
    }
    try {
        return Gbf(m, q, std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lines[0].number, 1);
    }
}

void write_profile_csv(std::ostream& out, const AacsProfile& profile) {
    out << "tau,re,im,magnitude,is_zero\n";
    for (std::size_t tau = 0; tau < profile.length(); ++tau) {
        const CorrelationValue& v = profile.values[tau];
        out << tau << ',';
        if (v.q() == 2) {
            out << v.real_integer() << ",0,";
        } else if (v.q() == 4) {
            const auto [re, im] = v.gaussian();
            out << re << ',' << im << ',';
        } else {
            const std::complex<double> z = v.to_complex();
            out << z.real() << ',' << z.imag() << ',';
        }
        out << v.magnitude() << ',' << (v.is_zero() ? 1 : 0) << '\n';
    }
}

nlohmann::json report_to_json(const ZcpReport& report) {
    nlohmann::json j;
    j["q"] = report.q;
    j["length"] = report.length;
    if (report.claimed_zcz) {
        j["claimed_zcz"] = *report.claimed_zcz;
    } else {
        j["claimed_zcz"] = nullptr;
    }
    j["actual_zcz"] = report.actual_zcz;
    j["is_gcp"] = report.is_gcp;
    j["passes_claim"] = report.passes_claim;
    j["magnitude_check_applicable"] = report.magnitude_check_applicable;
    j["passes_magnitude_check"] = report.passes_magnitude_check;
    j["magnitude_key"] = (report.q == 2) ? "abs" : "abs_squared";
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [key, count] : report.out_of_zone_magnitudes) {
        hist[std::to_string(key)] = count;
    }
    j["out_of_zone_magnitudes"] = hist;
    return j;
}

nlohmann::json search_to_json(const SearchResult& result) {
    nlohmann::json j;
    j["n"] = result.n;
    j["best_zcz"] = result.best_zcz;
    j["pairs_examined"] = result.pairs_examined;
    j["floor_violations"] = result.floor_violations;
    nlohmann::json witnesses = nlohmann::json::array();
    for (const SequencePair& p : result.witnesses) {
        witnesses.push_back({sequence_to_text(p.a), sequence_to_text(p.b)});
    }
    j["witness_pairs"] = witnesses;
    return j;
}

ZcpParams params_from_json(const nlohmann::json& j) {
    ZcpParams params;
    params.m = j.at("m").get<int>();
    params.q = j.at("q").get<int>();
    params.pi = j.at("pi").get<std::vector<int>>();
    if (j.contains("e") && !j["e"].is_null()) params.e = j["e"].get<std::vector<int>>();
    if (j.contains("f") && !j["f"].is_null()) params.f = j["f"].get<std::vector<int>>();
    return params;
}

nlohmann::json params_to_json(const ZcpParams& params) {
    nlohmann::json j;
    j["m"] = params.m;
    j["q"] = params.q;
    j["pi"] = params.pi;
    j["e"] = params.e.empty() ? std::vector<int>(static_cast<std::size_t>(params.m - 2), 0)
                              : params.e;
    j["f"] = params.f.empty() ? std::vector<int>(static_cast<std::size_t>(params.m - 2), 0)
                              : params.f;
    return j;
}

void write_ratio_table_csv(std::ostream& out, const std::vector<RatioRow>& rows,
                           const std::vector<ComparisonRow>& comparison) {
    out << "m,length,zcz,ratio,ratio_decimal,deviation_from_3_4\n";
    for (const RatioRow& r : rows) {
        out << r.m << ',' << r.length << ',' << r.zcz << ',' << r.ratio.str() << ','
            << std::setprecision(12) << r.ratio.value() << ',' << r.deviation.str() << '\n';
    }
    out << "\nmethod,construction,zcz_ratio\n";
    for (const ComparisonRow& r : comparison) {
        out << '"' << r.method << "\"," << (r.direct ? "direct" : "indirect") << ','
            << r.zcz_ratio << '\n';
    }
}

void write_ratio_table_text(std::ostream& out, const std::vector<RatioRow>& rows,
                            const std::vector<ComparisonRow>& comparison) {
    out << std::left << std::setw(4) << "m" << std::setw(10) << "length" << std::setw(10)
        << "zcz" << std::setw(16) << "ratio" << std::setw(16) << "decimal"
        << "deviation\n";
    for (const RatioRow& r : rows) {
        std::ostringstream dec;
        dec << std::setprecision(10) << r.ratio.value();
        out << std::left << std::setw(4) << r.m << std::setw(10) << r.length << std::setw(10)
            << r.zcz << std::setw(16) << r.ratio.str() << std::setw(16) << dec.str()
            << r.deviation.str() << '\n';
    }
    out << '\n'
        << std::left << std::setw(34) << "method" << std::setw(14) << "construction"
        << "zcz ratio\n";
    for (const ComparisonRow& r : comparison) {
        out << std::left << std::setw(34) << r.method << std::setw(14)
            << (r.direct ? "direct" : "indirect") << r.zcz_ratio << '\n';
    }
}

}  // namespace zcp
