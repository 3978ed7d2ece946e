#include "zcp/construct.hpp"

#include <stdexcept>
#include <string>

namespace zcp {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    if (image_.empty()) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation image is not a bijection on {0..k-1}");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

void ZcpParams::validate() const {
    if (m < 4 && !(experimental_m3 && m == 3)) {
        throw std::invalid_argument("m must be >= 4 (m=3 only with the experimental escape hatch)");
    }
    if (q < 2 || q % 2 != 0) {
        throw std::invalid_argument("q must be even and >= 2");
    }
    if (static_cast<int>(pi.size()) != m - 2) {
        throw std::invalid_argument("permutation must have exactly m-2 entries");
    }
    Permutation check(pi);  // bijection check
    for (const auto* offs : {&e, &f}) {
        if (!offs->empty() && static_cast<int>(offs->size()) != m - 2) {
            throw std::invalid_argument("affine offset lists must have m-2 entries (or be empty)");
        }
        for (int v : *offs) {
            if (v < 0 || v >= q) throw std::invalid_argument("affine offsets must lie in [0, q)");
        }
    }
}

Gbf zcp_gbf(const ZcpParams& params, int d) {
    params.validate();
    if (d != 0 && d != 1) throw std::invalid_argument("d must be 0 or 1");

    const int m = params.m;
    const int half = params.q / 2;
    const Permutation pi = params.permutation();
    const Literal sel_lo{m - 2, false}, sel_lo_c{m - 2, true};
    const Literal sel_hi{m - 1, false}, sel_hi_c{m - 1, true};

    std::vector<Term> terms;

    // Selector x_{m-2} ~x_{m-1} gating the forward path quadratic
    // zeta^d = sum x_{pi(a)} x_{pi(a+1)} + d x_{pi(m-3)}.
    for (int alpha = 0; alpha + 1 <= m - 3; ++alpha) {
        terms.emplace_back(half, std::vector<Literal>{sel_lo, sel_hi_c,
                                                      {pi(alpha), false},
                                                      {pi(alpha + 1), false}});
    }
    if (d == 1) {
        terms.emplace_back(half, std::vector<Literal>{sel_lo, sel_hi_c, {pi(m - 3), false}});
    }

    // Selector ~x_{m-2} x_{m-1} gating the complemented path quadratic
    // eta^d = sum ~x_{pi(a)} ~x_{pi(a+1)} + (1-d) x_{pi(m-3)}.
    for (int alpha = 0; alpha + 1 <= m - 3; ++alpha) {
        terms.emplace_back(half, std::vector<Literal>{sel_lo_c, sel_hi,
                                                      {pi(alpha), true},
                                                      {pi(alpha + 1), true}});
    }
    if (d == 0) {
        terms.emplace_back(half, std::vector<Literal>{sel_lo_c, sel_hi, {pi(m - 3), false}});
    }

    if (d == 1) {
        terms.emplace_back(half, std::vector<Literal>{sel_lo_c, sel_hi_c});
    }
    terms.emplace_back(half, std::vector<Literal>{sel_lo, sel_hi});

    // Affine offsets over the low m-2 variables.
    for (int i = 0; i <= m - 3; ++i) {
        if (!params.e.empty() && params.e[static_cast<std::size_t>(i)] != 0) {
            terms.emplace_back(params.e[static_cast<std::size_t>(i)],
                               std::vector<Literal>{{i, false}});
        }
        if (!params.f.empty() && params.f[static_cast<std::size_t>(i)] != 0) {
            terms.emplace_back(params.f[static_cast<std::size_t>(i)],
                               std::vector<Literal>{{i, true}});
        }
    }

    return Gbf(m, params.q, std::move(terms));
}

SequencePair zcp_pair(const ZcpParams& params) {
    params.validate();
    const std::size_t L = (std::size_t{1} << (params.m - 2)) - 1;
    return SequencePair(zcp_gbf(params, 0).to_sequence().truncated(L),
                        zcp_gbf(params, 1).to_sequence().truncated(L));
}

int claimed_zcz_width(const ZcpParams& params) {
    params.validate();
    if (params.m == 3) {
        throw std::invalid_argument("the experimental m=3 object carries no ZCZ-width claim");
    }
    const int last = params.permutation()(params.m - 3);
    return (1 << (params.m - 2)) + (1 << last) + 1;
}

Gbf golay_gbf(int m, int q, const Permutation& pi, std::span<const int> g, int g_const) {
    if (m < 2) throw std::invalid_argument("Golay-form GBF needs m >= 2");
    if (pi.size() != m) throw std::invalid_argument("permutation must cover all m variables");
    if (!g.empty() && static_cast<int>(g.size()) != m) {
        throw std::invalid_argument("linear coefficient list must have m entries (or be empty)");
    }
    const int half = q / 2;

    std::vector<Term> terms;
    for (int alpha = 0; alpha + 1 <= m - 1; ++alpha) {
        terms.emplace_back(half, std::vector<Literal>{{pi(alpha), false},
                                                      {pi(alpha + 1), false}});
    }
    for (int i = 0; i < m; ++i) {
        if (!g.empty() && g[static_cast<std::size_t>(i)] != 0) {
            terms.emplace_back(g[static_cast<std::size_t>(i)], std::vector<Literal>{{i, false}});
        }
    }
    if (g_const != 0) terms.emplace_back(g_const, std::vector<Literal>{});
    return Gbf(m, q, std::move(terms));
}

SequencePair gcp_pair(const Gbf& f, const Permutation& pi) {
    if (pi.size() != f.m()) throw std::invalid_argument("permutation size must equal m");
    const Term flip(f.q() / 2, {{pi(f.m() - 1), false}});
    return SequencePair(f.to_sequence(), f.with_term(flip).to_sequence());
}

SequencePair mate_pair(const Gbf& f, const Permutation& pi) {
    if (pi.size() != f.m()) throw std::invalid_argument("permutation size must equal m");
    // Complementing every variable reverses the sequence; negating the
    // coefficients conjugates the phases. Reversal alone only yields a mate
    // over +-1 alphabets, where conjugation is the identity.
    const Gbf mirror = f.complement_all_vars().negated();
    const Term flip(f.q() / 2, {{pi(f.m() - 1), false}});
    return SequencePair(mirror.with_term(flip).to_sequence(), mirror.to_sequence());
}

}  // namespace zcp
