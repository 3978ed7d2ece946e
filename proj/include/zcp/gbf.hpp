#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Generalized Boolean functions Z_2^m -> Z_q represented as mod-q weighted
// sums of literal products, and the phase sequences they synthesize.
//
// Everything here is an immutable value after construction; all operations
// are pure and safe to call concurrently.

namespace zcp {

// A variable x_k or its binary complement ~x_k = 1 - x_k.
struct Literal {
    int var = 0;
    bool complemented = false;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// One product term: coeff * lit0 * lit1 * ...  An empty literal list is a
// constant term. Two literals of one term may not share a variable index,
// not even with opposite polarity (x_k * ~x_k is rejected, not simplified).
struct Term {
    Term() = default;
    Term(int coefficient, std::vector<Literal> lits);

    int coeff = 0;
    std::vector<Literal> literals;  // sorted by variable index

    friend bool operator==(const Term&, const Term&) = default;
};

// Length-N list of Z_q phases, the exponent vector of (w^p_0, ..., w^p_{N-1})
// with w = exp(2*pi*i/q). Only even q is supported, matching the rest of the
// library (odd moduli have no q/2 element and are out of scope).
class PhaseSequence {
public:
    PhaseSequence(int q, std::vector<int> phases);

    int q() const { return q_; }
    std::size_t size() const { return phases_.size(); }
    int operator[](std::size_t i) const { return phases_[i]; }
    const std::vector<int>& phases() const { return phases_; }

    // Drops the first and last L entries. Requires 2L < size().
    PhaseSequence truncated(std::size_t L) const;

    friend bool operator==(const PhaseSequence&, const PhaseSequence&) = default;

private:
    int q_;
    std::vector<int> phases_;
};

// An ordered pair of equal-length phase sequences sharing one modulus.
struct SequencePair {
    SequencePair(PhaseSequence a_seq, PhaseSequence b_seq);

    PhaseSequence a;
    PhaseSequence b;

    std::size_t length() const { return a.size(); }
    int q() const { return a.q(); }
};

// f: Z_2^m -> Z_q as a sum of literal-product terms. Canonical form: terms
// with identical literal lists are merged mod q, zero terms dropped, terms
// sorted. q must be even so that q/2 is an element of Z_q.
class Gbf {
public:
    Gbf(int m, int q, std::vector<Term> terms);

    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<Term>& terms() const { return terms_; }

    // Value at one point of Z_2^m; assignment entries must be 0 or 1.
    int evaluate(std::span<const std::uint8_t> assignment) const;

    // Psi(f): the length-2^m sequence whose i-th phase is f at the bit
    // vector of i, LSB first (i = sum_j r_j * 2^j).
    PhaseSequence to_sequence() const;

    // Flips the polarity of every literal. Evaluating the result at r gives
    // f at the bitwise complement of r.
    Gbf complement_all_vars() const;

    // Negates every coefficient mod q, i.e. -f. The sequence of -f is the
    // phase conjugate of the sequence of f.
    Gbf negated() const;

    // Canonicalized copy with one extra term added.
    Gbf with_term(const Term& t) const;

    friend bool operator==(const Gbf&, const Gbf&) = default;

private:
    int m_;
    int q_;
    std::vector<Term> terms_;
};

}  // namespace zcp
