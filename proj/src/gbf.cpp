#include "zcp/gbf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zcp {

namespace {

int positive_mod(long long v, int q) {
    long long r = v % q;
    if (r < 0) r += q;
    return static_cast<int>(r);
}

}  // namespace

Term::Term(int coefficient, std::vector<Literal> lits)
    : coeff(coefficient), literals(std::move(lits)) {
    std::sort(literals.begin(), literals.end());
    for (std::size_t i = 0; i + 1 < literals.size(); ++i) {
        if (literals[i].var == literals[i + 1].var) {
            throw std::invalid_argument(
                "term has two literals on variable x" + std::to_string(literals[i].var));
        }
    }
    for (const Literal& l : literals) {
        if (l.var < 0) throw std::invalid_argument("negative variable index in term");
    }
}

PhaseSequence::PhaseSequence(int q, std::vector<int> phases)
    : q_(q), phases_(std::move(phases)) {
    if (q_ < 2 || q_ % 2 != 0) {
        throw std::invalid_argument("phase modulus q must be even and >= 2, got " +
                                    std::to_string(q_));
    }
    if (phases_.empty()) throw std::invalid_argument("empty phase sequence");
    for (int p : phases_) {
        if (p < 0 || p >= q_) {
            throw std::invalid_argument("phase " + std::to_string(p) +
                                        " outside [0, " + std::to_string(q_) + ")");
        }
    }
}

PhaseSequence PhaseSequence::truncated(std::size_t L) const {
    if (2 * L >= phases_.size()) {
        throw std::invalid_argument("cannot drop 2*" + std::to_string(L) +
                                    " entries from a length-" +
                                    std::to_string(phases_.size()) + " sequence");
    }
    std::vector<int> kept(phases_.begin() + static_cast<std::ptrdiff_t>(L),
                          phases_.end() - static_cast<std::ptrdiff_t>(L));
    return PhaseSequence(q_, std::move(kept));
}

SequencePair::SequencePair(PhaseSequence a_seq, PhaseSequence b_seq)
    : a(std::move(a_seq)), b(std::move(b_seq)) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("pair sequences differ in length: " +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
    if (a.q() != b.q()) {
        throw std::invalid_argument("pair sequences differ in modulus: q=" +
                                    std::to_string(a.q()) + " vs q=" +
                                    std::to_string(b.q()));
    }
}

Gbf::Gbf(int m, int q, std::vector<Term> terms)
    : m_(m), q_(q), terms_(std::move(terms)) {
    if (m_ < 1) throw std::invalid_argument("variable count m must be >= 1");
    if (q_ < 2 || q_ % 2 != 0) {
        throw std::invalid_argument("phase modulus q must be even and >= 2, got " +
                                    std::to_string(q_));
    }
    for (Term& t : terms_) {
        // Re-run the Term checks: aggregates built field-wise bypass them.
        t = Term(t.coeff, std::move(t.literals));
        for (const Literal& l : t.literals) {
            if (l.var >= m_) {
                throw std::invalid_argument("term uses x" + std::to_string(l.var) +
                                            " but m=" + std::to_string(m_));
            }
        }
        t.coeff = positive_mod(t.coeff, q_);
    }
    // Canonical form: merge identical literal lists, drop zero coefficients.
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
        return x.literals < y.literals;
    });
    std::vector<Term> merged;
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().literals == t.literals) {
            merged.back().coeff = positive_mod(merged.back().coeff + t.coeff, q_);
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

int Gbf::evaluate(std::span<const std::uint8_t> assignment) const {
    if (assignment.size() != static_cast<std::size_t>(m_)) {
        throw std::invalid_argument("assignment has " + std::to_string(assignment.size()) +
                                    " bits, function has m=" + std::to_string(m_));
    }
    long long acc = 0;
    for (const Term& t : terms_) {
        int prod = 1;
        for (const Literal& l : t.literals) {
            const std::uint8_t bit = assignment[static_cast<std::size_t>(l.var)];
            const int v = l.complemented ? 1 - bit : bit;
            if (v == 0) {
                prod = 0;
                break;
            }
        }
        acc += static_cast<long long>(t.coeff) * prod;
    }
    return positive_mod(acc, q_);
}

PhaseSequence Gbf::to_sequence() const {
    const std::size_t n = std::size_t{1} << m_;
    std::vector<int> phases(n);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m_));
    for (std::size_t i = 0; i < n; ++i) {
        for (int j = 0; j < m_; ++j) bits[static_cast<std::size_t>(j)] = (i >> j) & 1u;
        phases[i] = evaluate(bits);
    }
    return PhaseSequence(q_, std::move(phases));
}

Gbf Gbf::complement_all_vars() const {
    std::vector<Term> flipped = terms_;
    for (Term& t : flipped) {
        for (Literal& l : t.literals) l.complemented = !l.complemented;
    }
    return Gbf(m_, q_, std::move(flipped));
}

Gbf Gbf::negated() const {
    std::vector<Term> neg = terms_;
    for (Term& t : neg) t.coeff = positive_mod(-static_cast<long long>(t.coeff), q_);
    return Gbf(m_, q_, std::move(neg));
}

Gbf Gbf::with_term(const Term& t) const {
    std::vector<Term> ts = terms_;
    ts.push_back(t);
    return Gbf(m_, q_, std::move(ts));
}

}  // namespace zcp
