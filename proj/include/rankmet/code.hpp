#ifndef RANKMET_CODE_HPP
#define RANKMET_CODE_HPP

#include "rankmet/linalg.hpp"

#include <vector>

namespace rankmet {

// An F_{q^m}-linear rank-metric code of length n, given by a k x n generator
// matrix with F_{q^m}-independent rows. k = 0 encodes the zero code.
struct RankCode {
    FieldPtr F;
    int n = 0, k = 0;
    Mat G;

    FieldView full() const { return fullfield_of(*F); }
    FieldView sub() const { return subfield_of(*F); }
};

RankCode make_code(FieldPtr F, Mat G);
RankCode zero_code(FieldPtr F, int n);

std::vector<Elem> codeword(const RankCode& C, const std::vector<Elem>& x);

// ---- flattening between F_{q^m}^k and F_q^{km} (Gamma-coordinates) ----

std::vector<Elem> flatten_ext(const FieldCtx& F, const std::vector<Elem>& w);
std::vector<Elem> unflatten_ext(const FieldCtx& F, const std::vector<Elem>& flat, int k);
// The F_q-subspace of F_q^{k*m} spanned by an F_{q^m}-row space.
Subspace flatten_ext_subspace(const FieldCtx& F, const Mat& ext_rows, int k);
// F_q-span of the columns of G, flattened into F_q^{km}.
Subspace column_span_fq(const RankCode& C);

// ---- supports and weights ----

// Rank support: the column space of the Gamma-expansion, a subspace of
// F_q^n. Independent of the basis gamma.
Subspace rank_support(const FieldCtx& F, const std::vector<Elem>& v);
int rank_weight(const FieldCtx& F, const std::vector<Elem>& v);

// Support of the whole code: sum of the generators' supports.
Subspace code_support(const RankCode& C);
int effective_length(const RankCode& C);

struct NondegeneracyReport {
    bool nondegenerate = false;
    int effective_length = 0;
    bool dual_distance_ge2 = false; // equivalent criterion, cross-checked
    bool rank2_nondegenerate = false; // d(dual) >= 3
};
NondegeneracyReport nondegeneracy_report(const RankCode& C, const Budget& budget = Budget());
bool is_nondegenerate(const RankCode& C);

// d(C^perp) restricted to {1, 2, >=3}, decided by linear algebra on the
// point map [x] -> [G x^T] (no codeword enumeration).
int dual_distance_class(const RankCode& C, const Budget& budget = Budget());

RankCode dual(const RankCode& C);

struct WeightDistribution {
    int n = 0;
    std::vector<BigInt> counts; // counts[i] = number of codewords of rank i

    int min_distance() const; // n+1 for the zero code
    int max_rank() const;
    bool one_weight() const;  // exactly one nonzero rank occurs
    BigInt total() const;
};

WeightDistribution weight_distribution(const RankCode& C, const Budget& budget = Budget());
int min_rank_distance(const RankCode& C, const Budget& budget = Budget());
int max_rank(const RankCode& C, const Budget& budget = Budget());

struct OneWeightReport {
    bool one_weight = false;
    int effective_length = 0;
    int distance = 0;
    int km = 0;
};
// For k >= 2 one-weight codes the classification asserts effective length
// k*m and distance m.
OneWeightReport classify_one_weight(const RankCode& C, const Budget& budget = Budget());

// r-th generalized rank weight of a nondegenerate code, via intersections of
// the column span with F_{q^m}-subspaces of codimension r.
int generalized_rank_weight(const RankCode& C, int r, const Budget& budget = Budget());
std::vector<int> generalized_rank_weights(const RankCode& C, const Budget& budget = Budget());
// Definitional computation over Frobenius-closed subspaces; exponential, for
// cross-checks on tiny instances.
int generalized_rank_weight_definitional(const RankCode& C, int r, const Budget& budget = Budget());

// The F_q-space of messages x with x*G in F_q^n (all coordinates fixed by
// the q-Frobenius), flattened into F_q^{km}.
Subspace fq_rational_message_space(const RankCode& C);

// Isometric embedding of a degenerate code onto its effective length.
RankCode re_embed(const RankCode& C);
// v -> alpha * v * A with alpha in F_{q^m}^* and A over F_q invertible.
RankCode apply_isometry(const RankCode& C, Elem alpha, const Mat& A);

} // namespace rankmet

#endif
