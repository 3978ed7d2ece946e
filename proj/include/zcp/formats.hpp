#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "zcp/construct.hpp"
#include "zcp/verify.hpp"

// Serialization surfaces. All files are UTF-8 with LF line endings. Binary
// sequences print as +/- glyphs; other moduli as comma-separated phases.

namespace zcp {

// Parse failure with 1-based location info.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// "+-+..." for q = 2 (0 -> '+', 1 -> '-'), "0,3,1,..." otherwise.
std::string sequence_to_text(const PhaseSequence& s);

// Two sequence lines; non-binary pairs carry a leading "q=<q>" header.
std::string pair_to_text(const SequencePair& p);
SequencePair parse_pair_text(std::string_view text);

// GBF text: header "m=<m> q=<q>", then one term per line as
// "coeff * lit lit ..." with literals x<k> or ~x<k>; a bare coefficient
// line is a constant term.
std::string gbf_to_text(const Gbf& f);
Gbf parse_gbf_text(std::string_view text);

// Profile CSV: header "tau,re,im,magnitude,is_zero"; re/im are exact
// integers for q in {2, 4}.
void write_profile_csv(std::ostream& out, const AacsProfile& profile);

nlohmann::json report_to_json(const ZcpReport& report);
nlohmann::json search_to_json(const SearchResult& result);

// Parameter file: {"m": 6, "q": 2, "pi": [2,0,1,3], "e": [...], "f": [...]},
// e and f optional.
ZcpParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const ZcpParams& params);

void write_ratio_table_csv(std::ostream& out, const std::vector<RatioRow>& rows,
                           const std::vector<ComparisonRow>& comparison);
void write_ratio_table_text(std::ostream& out, const std::vector<RatioRow>& rows,
                            const std::vector<ComparisonRow>& comparison);

}  // namespace zcp
