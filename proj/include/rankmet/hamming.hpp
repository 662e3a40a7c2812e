#ifndef RANKMET_HAMMING_HPP
#define RANKMET_HAMMING_HPP

#include "rankmet/geometry.hpp"

#include <map>

namespace rankmet {

// A projective multiset in PG(k-1, q^m): canonical point representatives
// with positive multiplicities, points spanning the ambient space.
struct ProjSystem {
    FieldPtr F;
    int k = 0;
    std::map<std::vector<Elem>, std::uint64_t> entries;

    std::uint64_t length() const {
        std::uint64_t N = 0;
        for (const auto& [p, mult] : entries) N += mult;
        return N;
    }
};

// Ext^H: the linear set of U with multiplicities m_U(P) = (q^{wt(P)}-1)/(q-1).
ProjSystem ext_h(const QSystem& U, const Budget& budget = Budget());

// A Hamming-metric code over F_{q^m}, generator rows independent.
struct HammingCode {
    FieldPtr F;
    int N = 0, k = 0;
    Mat G;

    FieldView full() const { return fullfield_of(*F); }
};

HammingCode make_hamming_code(FieldPtr F, Mat G);
// Reinterpret a rank-metric generator in the Hamming metric.
HammingCode as_hamming(const RankCode& C);
// Psi^H: one column per point, repeats adjacent, canonical point order.
HammingCode psi_h(const ProjSystem& P);
// The associated code Psi^H(Ext^H(Phi(C))) of a nondegenerate rank code.
HammingCode associated_code(const RankCode& C, const Budget& budget = Budget());

int hamming_weight(const std::vector<Elem>& v);
bool hamming_nondegenerate(const HammingCode& H); // no identically-zero column

struct HammingDistribution {
    std::uint64_t N = 0;
    std::map<std::uint64_t, BigInt> counts; // weight -> number of codewords

    std::uint64_t min_distance() const;
    std::uint64_t max_weight() const;
    BigInt total() const;
};

HammingDistribution hamming_weight_distribution(const HammingCode& H,
                                                const Budget& budget = Budget());

// A_j^H(C^H) = A_i^rk(C) at j = (q^n - q^{n-i})/(q-1) and 0 elsewhere.
bool verify_weight_correspondence(const RankCode& C, const Budget& budget = Budget());

struct HammingMinimalityReport {
    bool minimal = false;
    // witness: messages x, y with supp(xG) properly inside supp(yG)
    std::optional<std::pair<std::vector<Elem>, std::vector<Elem>>> witness;
};
HammingMinimalityReport hamming_minimality(const HammingCode& H, const Budget& budget = Budget());
bool is_hamming_minimal(const HammingCode& H, const Budget& budget = Budget());

// r-th generalized Hamming weight, minimizing n - #{columns in W} over
// F_{q^m}-subspaces W of dimension k-r.
std::uint64_t generalized_hamming_weight(const HammingCode& H, int r,
                                         const Budget& budget = Budget());

// total-weight law for Hamming-nondegenerate codes:
// sum of all codeword weights = N (q'^k - q'^{k-1})
bool check_total_weight_law(const HammingCode& H, const Budget& budget = Budget());

} // namespace rankmet

#endif
