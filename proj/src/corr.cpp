#include "zcp/corr.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zcp {

namespace {

// Remainder of p modulo the monic divisor d, exact over the integers.
std::vector<long long> poly_mod(std::vector<long long> p, const std::vector<long long>& d) {
    const std::size_t dd = d.size() - 1;  // degree of divisor
    while (p.size() > dd) {
        const long long lead = p.back();
        if (lead != 0) {
            const std::size_t shift = p.size() - 1 - dd;
            for (std::size_t i = 0; i <= dd; ++i) p[shift + i] -= lead * d[i];
        }
        p.pop_back();
    }
    return p;
}

// Exact quotient of p by the monic divisor d; remainder must be zero.
std::vector<long long> poly_div_exact(std::vector<long long> p, const std::vector<long long>& d) {
    const std::size_t dd = d.size() - 1;
    if (p.size() <= dd) throw std::logic_error("cyclotomic division underflow");
    std::vector<long long> quot(p.size() - dd, 0);
    for (std::size_t k = p.size(); k-- > dd;) {
        const long long lead = p[k];
        quot[k - dd] = lead;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dd; ++i) p[k - dd + i] -= lead * d[i];
        }
    }
    for (long long c : p) {
        if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
    }
    return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = poly_div_exact(std::move(p), cyclotomic_polynomial(d));
    }
    return p;
}

CorrelationValue::CorrelationValue(int q) : q_(q), mult_(static_cast<std::size_t>(q), 0) {
    if (q_ < 2 || q_ % 2 != 0) {
        throw std::invalid_argument("correlation modulus q must be even and >= 2");
    }
}

CorrelationValue::CorrelationValue(int q, std::vector<long long> multiplicities)
    : q_(q), mult_(std::move(multiplicities)) {
    if (q_ < 2 || q_ % 2 != 0) {
        throw std::invalid_argument("correlation modulus q must be even and >= 2");
    }
    if (mult_.size() != static_cast<std::size_t>(q_)) {
        throw std::invalid_argument("multiplicity vector must have length q");
    }
}

void CorrelationValue::add_root(long long exponent) {
    long long e = exponent % q_;
    if (e < 0) e += q_;
    ++mult_[static_cast<std::size_t>(e)];
}

CorrelationValue& CorrelationValue::operator+=(const CorrelationValue& other) {
    if (other.q_ != q_) throw std::invalid_argument("modulus mismatch in correlation sum");
    for (std::size_t k = 0; k < mult_.size(); ++k) mult_[k] += other.mult_[k];
    return *this;
}

CorrelationValue CorrelationValue::conjugate() const {
    std::vector<long long> c(mult_.size());
    c[0] = mult_[0];
    for (std::size_t k = 1; k < mult_.size(); ++k) c[k] = mult_[mult_.size() - k];
    return CorrelationValue(q_, std::move(c));
}

bool CorrelationValue::is_zero() const {
    if (std::has_single_bit(static_cast<unsigned>(q_))) {
        const std::size_t half = static_cast<std::size_t>(q_) / 2;
        for (std::size_t k = 0; k < half; ++k) {
            if (mult_[k] != mult_[k + half]) return false;
        }
        return true;
    }
    const std::vector<long long> rem = poly_mod(mult_, cyclotomic_polynomial(q_));
    for (long long c : rem) {
        if (c != 0) return false;
    }
    return true;
}

std::complex<double> CorrelationValue::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < mult_.size(); ++k) {
        if (mult_[k] == 0) continue;
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / q_;
        acc += static_cast<double>(mult_[k]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

double CorrelationValue::magnitude() const {
    if (q_ == 2) return static_cast<double>(std::llabs(real_integer()));
    if (q_ == 4) {
        const auto [re, im] = gaussian();
        return std::hypot(static_cast<double>(re), static_cast<double>(im));
    }
    return std::abs(to_complex());
}

long long CorrelationValue::real_integer() const {
    if (q_ != 2) throw std::logic_error("real_integer() requires q == 2");
    return mult_[0] - mult_[1];
}

std::pair<long long, long long> CorrelationValue::gaussian() const {
    if (q_ != 4) throw std::logic_error("gaussian() requires q == 4");
    return {mult_[0] - mult_[2], mult_[1] - mult_[3]};
}

long long CorrelationValue::magnitude_sq_exact() const {
    if (q_ == 2) {
        const long long r = real_integer();
        return r * r;
    }
    if (q_ == 4) {
        const auto [re, im] = gaussian();
        return re * re + im * im;
    }
    throw std::logic_error("exact squared magnitude requires q in {2, 4}");
}

CorrelationValue accf(const PhaseSequence& a, const PhaseSequence& b, long long tau) {
    if (a.q() != b.q()) throw std::invalid_argument("correlating sequences with different q");
    if (a.size() != b.size()) {
        throw std::invalid_argument("correlating sequences of different lengths");
    }
    const long long n = static_cast<long long>(a.size());
    CorrelationValue acc(a.q());
    if (tau >= n || tau <= -n) return acc;
    if (tau >= 0) {
        for (long long k = 0; k + tau < n; ++k) {
            acc.add_root(a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k + tau)]);
        }
    } else {
        const long long s = -tau;
        for (long long k = 0; k + s < n; ++k) {
            acc.add_root(a[static_cast<std::size_t>(k + s)] - b[static_cast<std::size_t>(k)]);
        }
    }
    return acc;
}

CorrelationValue aacf(const PhaseSequence& a, long long tau) { return accf(a, a, tau); }

AacsProfile aacs_profile(const SequencePair& p) {
    AacsProfile profile;
    profile.values.reserve(p.length());
    for (std::size_t tau = 0; tau < p.length(); ++tau) {
        CorrelationValue v = aacf(p.a, static_cast<long long>(tau));
        v += aacf(p.b, static_cast<long long>(tau));
        profile.values.push_back(std::move(v));
    }
    return profile;
}

int zcz_width(const AacsProfile& profile) {
    const std::size_t n = profile.length();
    for (std::size_t tau = 1; tau < n; ++tau) {
        if (!profile.values[tau].is_zero()) return static_cast<int>(tau);
    }
    return static_cast<int>(n);
}

}  // namespace zcp
