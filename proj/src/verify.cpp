#include "zcp/verify.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zcp {

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Fraction Fraction::operator-(const Fraction& other) const {
    return Fraction(num * other.den - other.num * den, den * other.den);
}

std::string Fraction::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

ZcpReport verify_zcp(const SequencePair& p, std::optional<int> claimed,
                     bool magnitude_check_applicable) {
    const AacsProfile profile = aacs_profile(p);
    ZcpReport r;
    r.q = p.q();
    r.length = static_cast<int>(p.length());
    r.claimed_zcz = claimed;
    r.actual_zcz = zcz_width(profile);
    r.is_gcp = (r.actual_zcz == r.length);
    r.passes_claim = !claimed.has_value() || r.actual_zcz >= *claimed;
    r.magnitude_check_applicable = magnitude_check_applicable;

    bool all_exactly_four = true;
    for (std::size_t tau = static_cast<std::size_t>(r.actual_zcz);
         tau < profile.length(); ++tau) {
        const CorrelationValue& v = profile.values[tau];
        long long key = 0;
        bool exactly_four = false;
        if (r.q == 2) {
            key = std::llabs(v.real_integer());
            exactly_four = (key == 4);
        } else if (r.q == 4) {
            key = v.magnitude_sq_exact();
            exactly_four = (key == 16);
        } else {
            const double mag = v.magnitude();
            key = std::llround(mag * mag);
            exactly_four = std::abs(mag - 4.0) < 1e-9;
        }
        ++r.out_of_zone_magnitudes[key];
        if (!v.is_zero() && !exactly_four) all_exactly_four = false;
    }
    r.passes_magnitude_check = all_exactly_four;
    return r;
}

bool verify_gcp(const SequencePair& p) {
    const AacsProfile profile = aacs_profile(p);
    return zcz_width(profile) == static_cast<int>(profile.length());
}

bool verify_mates(const SequencePair& p1, const SequencePair& p2) {
    if (p1.length() != p2.length()) {
        throw std::invalid_argument("mate check needs pairs of equal length");
    }
    if (p1.q() != p2.q()) {
        throw std::invalid_argument("mate check needs pairs with equal q");
    }
    const long long n = static_cast<long long>(p1.length());
    for (long long tau = -(n - 1); tau <= n - 1; ++tau) {
        CorrelationValue v = accf(p1.a, p2.a, tau);
        v += accf(p1.b, p2.b, tau);
        if (!v.is_zero()) return false;
    }
    return true;
}

bool magnitude_floor_check(const SequencePair& p) {
    if (p.q() != 2) throw std::invalid_argument("magnitude floor check is for binary pairs");
    if (p.length() % 2 != 0) {
        throw std::invalid_argument("magnitude floor check is for even-length pairs");
    }
    // rho(tau) + rho(N-tau) == N (mod 4) for any +-1 sequence of length N, so
    // a nonzero sum at tau must be a multiple of 4 whenever the sum at the
    // mirrored shift N-tau vanishes. A zone wider than N/2 mirrors every
    // out-of-zone shift into the zone, so for such pairs this covers all of
    // them; shifts whose mirror is also nonzero carry no floor.
    const AacsProfile profile = aacs_profile(p);
    const std::size_t n = profile.length();
    for (std::size_t tau = 1; tau < n; ++tau) {
        const long long v = profile.values[tau].real_integer();
        const long long mirrored = profile.values[n - tau].real_integer();
        if (v != 0 && mirrored == 0 && std::llabs(v) < 4) return false;
    }
    return true;
}

namespace {

// Autocorrelation of the n-bit mask at shift tau, elements (-1)^bit.
int mask_acf(std::uint32_t mask, int n, int tau) {
    const std::uint32_t window = (tau == n) ? 0u : ((1u << (n - tau)) - 1u);
    const std::uint32_t diff = (mask ^ (mask >> tau)) & window;
    return (n - tau) - 2 * std::popcount(diff);
}

PhaseSequence mask_to_sequence(std::uint32_t mask, int n) {
    std::vector<int> phases(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) phases[static_cast<std::size_t>(k)] = (mask >> k) & 1u;
    return PhaseSequence(2, std::move(phases));
}

struct ShardResult {
    int best_zcz = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> witnesses;
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
};

}  // namespace

SearchResult exhaustive_search(int n, const SearchOptions& options) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("search length must be even and >= 2");
    }
    if (n > 30) throw std::invalid_argument("search length must be <= 30");
    if (n > options.max_n) {
        std::ostringstream msg;
        msg.precision(2);
        msg << "exhaustive search at n=" << n << " would enumerate ~" << std::scientific
            << std::ldexp(1.0, 2 * (n - 1)) << " normalized pairs (cap is n<="
            << options.max_n << "); raise the cap to proceed";
        throw std::invalid_argument(msg.str());
    }

    const std::uint32_t half = 1u << (n - 1);  // sequences with first element +

    // rho[v * n + tau] = autocorrelation of sequence (v << 1) at shift tau.
    std::vector<std::int8_t> rho(static_cast<std::size_t>(half) * n);
    for (std::uint32_t v = 0; v < half; ++v) {
        const std::uint32_t mask = v << 1;
        for (int tau = 1; tau < n; ++tau) {
            rho[static_cast<std::size_t>(v) * n + tau] =
                static_cast<std::int8_t>(mask_acf(mask, n, tau));
        }
    }

    unsigned thread_count = options.threads ? options.threads
                                            : std::max(1u, std::thread::hardware_concurrency());
    const std::uint32_t shard_count =
        std::min<std::uint32_t>(half, thread_count > 1 ? thread_count * 8 : 1);
    thread_count = std::min<unsigned>(thread_count, shard_count);

    std::vector<ShardResult> shards(shard_count);
    std::atomic<std::uint32_t> next_shard{0};
    std::atomic<std::uint32_t> done_shards{0};
    std::mutex progress_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::uint32_t s = next_shard.fetch_add(1);
            if (s >= shard_count) return;
            const std::uint32_t a_begin = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(s) * half) / shard_count);
            const std::uint32_t a_end = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(s + 1) * half) / shard_count);
            ShardResult local;
            for (std::uint32_t a = a_begin; a < a_end; ++a) {
                const std::int8_t* ra = &rho[static_cast<std::size_t>(a) * n];
                for (std::uint32_t b = a; b < half; ++b) {
                    const std::int8_t* rb = &rho[static_cast<std::size_t>(b) * n];
                    int first_nonzero = n;
                    bool violated = false;
                    for (int tau = 1; tau < n; ++tau) {
                        const int s2 = int{ra[tau]} + int{rb[tau]};
                        if (s2 != 0) {
                            if (first_nonzero == n) first_nonzero = tau;
                            // magnitude floor, scoped to shifts mirrored
                            // onto a vanishing sum
                            if (s2 > -4 && s2 < 4 &&
                                int{ra[n - tau]} + int{rb[n - tau]} == 0) {
                                violated = true;
                            }
                        }
                    }
                    ++local.pairs;
                    if (violated) ++local.violations;
                    if (first_nonzero > local.best_zcz) {
                        local.best_zcz = first_nonzero;
                        local.witnesses.clear();
                    }
                    if (first_nonzero == local.best_zcz &&
                        static_cast<int>(local.witnesses.size()) < options.max_witnesses) {
                        local.witnesses.emplace_back(a << 1, b << 1);
                    }
                }
            }
            shards[s] = std::move(local);
            const std::uint32_t done = done_shards.fetch_add(1) + 1;
            if (options.progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                *options.progress << "search n=" << n << ": shard " << done << "/"
                                  << shard_count << " done\n";
            }
        }
    };

    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    SearchResult result;
    result.n = n;
    for (const ShardResult& s : shards) {
        result.pairs_examined += s.pairs;
        result.floor_violations += s.violations;
        if (s.best_zcz > result.best_zcz) result.best_zcz = s.best_zcz;
    }
    for (const ShardResult& s : shards) {
        if (s.best_zcz != result.best_zcz) continue;
        for (const auto& [a, b] : s.witnesses) {
            if (static_cast<int>(result.witnesses.size()) >= options.max_witnesses) break;
            result.witnesses.emplace_back(mask_to_sequence(a, n), mask_to_sequence(b, n));
        }
    }
    return result;
}

std::vector<RatioRow> ratio_table(int m_min, int m_max) {
    if (m_min < 4) throw std::invalid_argument("ratio table needs m >= 4");
    if (m_max < m_min) throw std::invalid_argument("empty m range");
    if (m_max > 40) throw std::invalid_argument("ratio table supports m <= 40");
    std::vector<RatioRow> rows;
    rows.reserve(static_cast<std::size_t>(m_max - m_min + 1));
    for (int m = m_min; m <= m_max; ++m) {
        RatioRow row;
        row.m = m;
        row.length = (1LL << (m - 1)) + 2;
        row.zcz = (1LL << (m - 2)) + (1LL << (m - 3)) + 1;
        row.ratio = Fraction(row.zcz, row.length);
        row.deviation = Fraction(3, 4) - row.ratio;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ComparisonRow> comparison_rows() {
    return {
        {"Truncation of certain GCPs", false, "2/3"},
        {"GBF-based (prior)", true, "2/3"},
        {"Insertion into certain GCPs", false, "3/4"},
        {"GBF-based (this tool)", true, "3/4"},
    };
}

}  // namespace zcp
