#include "rankmet/identities.hpp"

namespace rankmet {

Rational fq_value(std::uint64_t q, int n, int m, int k, int j, int r) {
    check(0 <= j && j <= r && r <= n, errc::invalid_args, "need 0 <= j <= r <= n");
    check(m >= 1 && k >= 0, errc::invalid_args, "need m >= 1 and k >= 0");
    Rational total(BigInt(0));
    for (int v = j; v <= r; ++v) {
        Rational qpow = k >= v ? Rational(bpow(q, static_cast<std::uint64_t>(m) * (k - v)))
                               : Rational(BigInt(1), bpow(q, static_cast<std::uint64_t>(m) * (v - k)));
        BigInt units(1);
        for (int l = 0; l < v; ++l) units *= bpow(q, v) - bpow(q, l);
        Rational term = qpow * Rational(gaussian_binomial(n - j, v - j, q)) *
                        Rational(gaussian_binomial(r, v, q)) * Rational(units);
        total = total + term;
    }
    return total;
}

PlessResult pless_check(const RankCode& C, int r, const Budget& budget) {
    check(0 <= r && r <= C.n, errc::invalid_args, "need 0 <= r <= n");
    const std::uint64_t q = C.F->q;
    const int m = C.F->m;
    PlessResult res;
    WeightDistribution W = weight_distribution(C, budget);
    res.lhs = BigInt(0);
    for (int i = 0; i <= C.n; ++i)
        res.lhs += W.counts[i] * bpow(q, static_cast<std::uint64_t>(r) * (C.n - i));
    WeightDistribution Wd = weight_distribution(dual(C), budget);
    res.rhs = Rational(BigInt(0));
    for (int j = 0; j <= r; ++j)
        res.rhs = res.rhs + Rational(Wd.counts[j]) * fq_value(q, C.n, m, C.k, j, r);
    res.equal = res.rhs.is_integer() && res.rhs.num() == res.lhs;
    check(res.equal, errc::internal_inconsistency, "Pless identity failed");
    return res;
}

TotalWeightStats total_weight_stats(const RankCode& C, const Budget& budget) {
    check(C.k >= 1, errc::invalid_args, "stats need a nonzero code");
    check(is_nondegenerate(C), errc::degenerate, "total-weight stats need a nondegenerate code");
    const std::uint64_t q = C.F->q;
    const int n = C.n, m = C.F->m, k = C.k;
    WeightDistribution W = weight_distribution(C, budget);
    BigInt nonzero = bpow(q, static_cast<std::uint64_t>(m) * k) - BigInt(1);

    BigInt first(0), second(0);
    for (int i = 1; i <= n; ++i) {
        first += W.counts[i] * bpow(q, n - i);
        second += W.counts[i] * bpow(q, 2 * (n - i));
    }
    TotalWeightStats S;
    S.mean = Rational(first, nonzero);
    Rational ex2(second, nonzero);
    S.variance = ex2 - S.mean * S.mean;

    BigInt qn = bpow(q, n);
    BigInt qmk = bpow(q, static_cast<std::uint64_t>(m) * k);
    BigInt qmk1 = bpow(q, static_cast<std::uint64_t>(m) * (k - 1));
    S.formula_mean = Rational(qmk - qn + qmk1 * (qn - BigInt(1)), nonzero);
    Rational f2 = fq_value(q, n, m, k, 0, 2);
    S.formula_var_bound =
        (f2 - Rational(qn * qn)) / Rational(nonzero) - S.formula_mean * S.formula_mean;

    S.mean_matches = S.mean == S.formula_mean;
    check(S.mean_matches, errc::internal_inconsistency,
          "empirical mean differs from the closed form");
    S.variance_equality = S.variance == S.formula_var_bound;
    check(S.variance >= S.formula_var_bound, errc::internal_inconsistency,
          "variance fell below its lower bound");
    S.rank2_nondegenerate = dual_distance_class(C, budget) >= 3;
    check(S.variance_equality == S.rank2_nondegenerate, errc::internal_inconsistency,
          "variance equality disagrees with rank-2-nondegeneracy");
    return S;
}

} // namespace rankmet
