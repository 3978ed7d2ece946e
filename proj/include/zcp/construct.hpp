#pragma once

#include <span>
#include <vector>

#include "zcp/gbf.hpp"

// Builders for the sequence families this library is about: even-length
// Z-complementary pairs synthesized directly from a quadratic GBF template,
// and the classical path-quadratic Golay pairs with their complementary
// mates.

namespace zcp {

// A bijection on {0, ..., k-1}, stored as its image list.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& image() const { return image_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

// Parameters of the ZCP construction: m >= 4 variables, even modulus q, a
// permutation pi of {0, ..., m-3}, and affine offsets e, f in Z_q^{m-2}
// weighting the plain and complemented linear terms. Empty e or f means
// all-zero. experimental_m3 admits the degenerate m = 3 object, which
// carries no ZCZ-width claim.
struct ZcpParams {
    int m = 0;
    int q = 2;
    std::vector<int> pi;
    std::vector<int> e;
    std::vector<int> f;
    bool experimental_m3 = false;

    // Throws std::invalid_argument naming the violated constraint.
    void validate() const;
    Permutation permutation() const { return Permutation(pi); }
};

// The d-indexed GBF (d in {0,1}) whose truncated sequences form the pair:
// a (q/2)-weighted selector block on the two top variables gating two
// mirrored path quadratics over the remaining m-2 variables, plus the
// affine offsets.
Gbf zcp_gbf(const ZcpParams& params, int d);

// The pair (Psi_L(g^0), Psi_L(g^1)) with L = 2^{m-2}-1; both sequences have
// length 2^{m-1}+2.
SequencePair zcp_pair(const ZcpParams& params);

// The construction's guaranteed ZCZ width, 2^{m-2} + 2^{pi(m-3)} + 1.
// Undefined for the experimental m = 3 object (throws).
int claimed_zcz_width(const ZcpParams& params);

// Standard Golay-form GBF: (q/2) * sum of path products x_{pi(a)}x_{pi(a+1)}
// plus an affine part sum g_i x_i + g_const. pi permutes all m variables.
Gbf golay_gbf(int m, int q, const Permutation& pi, std::span<const int> g, int g_const);

// (Psi(f), Psi(f + (q/2) x_{pi(m-1)})). For f in Golay form this is a GCP;
// the linear term is lifted to coefficient q/2 so it flips signs at every q.
SequencePair gcp_pair(const Gbf& f, const Permutation& pi);

// A complementary mate of gcp_pair(f, pi):
// (Psi(g + (q/2) x_{pi(m-1)}), Psi(g)) with g = -fbar, fbar being f with
// every variable complemented. At q = 2 the negation is a no-op and g is
// plain fbar.
SequencePair mate_pair(const Gbf& f, const Permutation& pi);

}  // namespace zcp
