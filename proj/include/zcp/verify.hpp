#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zcp/construct.hpp"
#include "zcp/corr.hpp"

// Property verification and reporting: ZCZ reports for arbitrary pairs,
// Golay/mate checks, exhaustive small-length search, and the exact-rational
// ZCZ ratio tables.

namespace zcp {

// Reduced rational with positive denominator. Only what the ratio table
// needs: exact construction, subtraction, comparison, printing.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d);

    Fraction operator-(const Fraction& other) const;
    friend bool operator==(const Fraction&, const Fraction&) = default;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

// Everything verify_zcp established about one pair. Histogram keys are the
// exact integer |value| at q = 2 and the squared magnitude otherwise (exact
// for q = 4, rounded for larger moduli); zeros are included.
struct ZcpReport {
    int q = 2;
    int length = 0;
    std::optional<int> claimed_zcz;
    int actual_zcz = 0;
    bool is_gcp = false;
    bool passes_claim = false;
    bool magnitude_check_applicable = false;  // the exact-magnitude-4 out-of-zone claim
    bool passes_magnitude_check = false;
    std::map<long long, long long> out_of_zone_magnitudes;

    // True iff no asserted claim failed.
    bool ok() const {
        return passes_claim && (!magnitude_check_applicable || passes_magnitude_check);
    }
};

// Computes the profile, the actual ZCZ width, and the out-of-zone magnitude
// histogram. passes_magnitude_check is true iff every nonzero out-of-zone value
// has magnitude exactly 4; it only gates ok() when magnitude_check_applicable is
// set by the caller (the magnitude-4 guarantee belongs to the q = 2 pairs
// built by zcp_pair, and provenance is not inferable from the pair itself).
ZcpReport verify_zcp(const SequencePair& p, std::optional<int> claimed = {},
                     bool magnitude_check_applicable = false);

// True iff the autocorrelation sums vanish at every out-of-phase shift.
bool verify_gcp(const SequencePair& p);

// True iff accf(a,c,tau) + accf(b,d,tau) is exactly zero for every tau in
// (-N, N), where p1 = (a,b) and p2 = (c,d).
bool verify_mates(const SequencePair& p1, const SequencePair& p2);

// True iff every nonzero autocorrelation sum of the binary even-length pair
// whose mirrored shift N-tau has a vanishing sum carries |value| >= 4. For a
// pair whose zone is wider than N/2 (all pairs built by zcp_pair) this is
// precisely "every nonzero out-of-zone value is at least 4".
bool magnitude_floor_check(const SequencePair& p);

struct SearchOptions {
    int max_n = 12;           // refusal threshold, overridable with a cost warning
    int max_witnesses = 4;
    unsigned threads = 0;     // 0 = hardware concurrency
    std::ostream* progress = nullptr;
};

struct SearchResult {
    int n = 0;
    int best_zcz = 0;
    std::uint64_t pairs_examined = 0;
    std::vector<SequencePair> witnesses;    // capped, all achieving best_zcz
    std::uint64_t floor_violations = 0;     // pairs failing magnitude_floor_check
};

// Enumerates every binary pair of even length n with a_0 = b_0 = 0 (global
// negation symmetry) and a <= b (the profile is symmetric in the pair) and
// returns the best achievable ZCZ width with witnesses. Shards the a-range
// across threads; the merge is deterministic.
SearchResult exhaustive_search(int n, const SearchOptions& options = {});

struct RatioRow {
    int m = 0;
    long long length = 0;
    long long zcz = 0;        // claimed width with pi(m-3) = m-3
    Fraction ratio;           // zcz / length
    Fraction deviation;       // 3/4 - ratio
};

// Exact ZCZ-ratio rows for the width-maximizing permutation choice,
// m = m_min..m_max (m_min >= 4).
std::vector<RatioRow> ratio_table(int m_min, int m_max);

struct ComparisonRow {
    std::string method;
    bool direct = false;
    std::string zcz_ratio;
};

// Static comparison of published constructions for lengths 2^{m-1}+2.
std::vector<ComparisonRow> comparison_rows();

}  // namespace zcp
