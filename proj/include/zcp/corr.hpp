#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "zcp/gbf.hpp"

// Exact aperiodic correlation over q-th roots of unity. A correlation value
// is kept as the integer multiplicity vector c of sum_k c_k * w^k, so the
// zero test is exact: the value vanishes iff the polynomial sum_k c_k x^k is
// divisible by the q-th cyclotomic polynomial. Magnitudes are derived floats
// for reporting only; pass/fail decisions must go through is_zero() or the
// exact integer embeddings.

namespace zcp {

class CorrelationValue {
public:
    // The zero value over Z_q.
    explicit CorrelationValue(int q);
    CorrelationValue(int q, std::vector<long long> multiplicities);

    int q() const { return q_; }
    const std::vector<long long>& multiplicities() const { return mult_; }

    // Adds one root of unity w^exponent (any integer exponent).
    void add_root(long long exponent);

    CorrelationValue& operator+=(const CorrelationValue& other);
    CorrelationValue conjugate() const;

    // Exact vanishing test. Power-of-two q folds via w^{k+q/2} = -w^k;
    // other even q reduce modulo the q-th cyclotomic polynomial.
    bool is_zero() const;

    // |sum c_k w^k| in floating point. Reporting only.
    double magnitude() const;
    std::complex<double> to_complex() const;

    // Exact embeddings for small moduli.
    long long real_integer() const;                     // q == 2: c0 - c1
    std::pair<long long, long long> gaussian() const;   // q == 4: (c0-c2, c1-c3)
    long long magnitude_sq_exact() const;               // q in {2, 4}

    // Raw multiplicity-vector equality (not equality of cyclotomic values).
    friend bool operator==(const CorrelationValue&, const CorrelationValue&) = default;

private:
    int q_;
    std::vector<long long> mult_;
};

// Aperiodic cross-correlation of a against b at shift tau. |tau| >= N gives
// the exact zero value. For 0 <= tau < N this accumulates w^{a_k - b_{k+tau}}
// over k = 0..N-1-tau; negative tau uses the mirrored branch, so
// accf(a, b, -tau) == conj(accf(b, a, tau)).
CorrelationValue accf(const PhaseSequence& a, const PhaseSequence& b, long long tau);

// Aperiodic autocorrelation: accf(a, a, tau).
CorrelationValue aacf(const PhaseSequence& a, long long tau);

// Autocorrelation sums of a pair for tau = 0..N-1. values[0] is the real
// integer 2N.
struct AacsProfile {
    std::vector<CorrelationValue> values;

    std::size_t length() const { return values.size(); }
};

AacsProfile aacs_profile(const SequencePair& p);

// Largest Z such that values[tau] is exactly zero for all 1 <= tau <= Z-1;
// N when the whole out-of-phase profile vanishes (the Golay case).
int zcz_width(const AacsProfile& profile);

// Coefficient vector (index = degree) of the n-th cyclotomic polynomial,
// computed with exact integer arithmetic.
std::vector<long long> cyclotomic_polynomial(int n);

}  // namespace zcp
