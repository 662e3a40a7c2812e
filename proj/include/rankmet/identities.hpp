#ifndef RANKMET_IDENTITIES_HPP
#define RANKMET_IDENTITIES_HPP

#include "rankmet/code.hpp"

namespace rankmet {

// f_q(n,m,k,j,r) = sum_{v=j}^{r} q^{m(k-v)} binom(n-j, v-j)_q binom(r, v)_q
//                  prod_{l=0}^{v-1} (q^v - q^l).
// Exact rational: terms with v > k carry negative powers of q; the value is
// integral in every identity instance used here.
Rational fq_value(std::uint64_t q, int n, int m, int k, int j, int r);

struct PlessResult {
    BigInt lhs;   // sum over codewords of q^{r(n - rk(v))}
    Rational rhs; // sum_j A_j(dual) f_q(n,m,k,j,r)
    bool equal = false;
};

// The Pless-type moment identity; inequality is an implementation fault and
// raises InternalInconsistency.
PlessResult pless_check(const RankCode& C, int r, const Budget& budget = Budget());

struct TotalWeightStats {
    Rational mean;             // E[q^{n - rk}] over nonzero codewords
    Rational variance;         // Var[q^{n - rk}]
    Rational formula_mean;     // closed form
    Rational formula_var_bound; // lower bound, met exactly iff d(dual) >= 3
    bool mean_matches = false;
    bool variance_equality = false;
    bool rank2_nondegenerate = false;
};

// Exact first and second moments of q^{n-rk} over the nonzero codewords of a
// nondegenerate code, against their closed forms.
TotalWeightStats total_weight_stats(const RankCode& C, const Budget& budget = Budget());

} // namespace rankmet

#endif
