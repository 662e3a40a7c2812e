#ifndef RANKMET_TEST_HELPERS_HPP
#define RANKMET_TEST_HELPERS_HPP

#include "rankmet/code.hpp"

#include <random>

namespace rankmet::testing {

inline Mat random_matrix(const FieldView& fv, int rows, int cols, std::mt19937_64& rng) {
    Mat M(rows, cols);
    for (auto& x : M.a) x = fv.element(static_cast<std::uint32_t>(rng() % fv.num_elements()));
    return M;
}

inline Mat random_gl(const FieldView& fv, int n, std::mt19937_64& rng) {
    for (;;) {
        Mat M = random_matrix(fv, n, n, rng);
        Mat copy = M;
        if (rref(fv, copy, nullptr) == n) return M;
    }
}

inline RankCode random_code(FieldPtr F, int n, int k, std::mt19937_64& rng) {
    FieldView full = fullfield_of(*F);
    for (;;) {
        Mat G = random_matrix(full, k, n, rng);
        Mat copy = G;
        if (rref(full, copy, nullptr) == k) return make_code(F, G);
    }
}

inline RankCode random_nondegenerate_code(FieldPtr F, int n, int k, std::mt19937_64& rng) {
    for (;;) {
        RankCode C = random_code(F, n, k, rng);
        if (is_nondegenerate(C)) return C;
    }
}

// Oracle: rank-weight counts by walking every codeword, no projective
// shortcut. Only for q^{mk} small.
inline std::vector<std::uint64_t> weight_distribution_bruteforce(const RankCode& C) {
    std::vector<std::uint64_t> counts(C.n + 1, 0);
    std::vector<std::uint32_t> odo(C.k, 0);
    const std::uint64_t total = [&] {
        std::uint64_t t = 1;
        for (int i = 0; i < C.k; ++i) t *= C.F->size;
        return t;
    }();
    for (std::uint64_t it = 0; it < total; ++it) {
        std::vector<Elem> x(odo.begin(), odo.end());
        ++counts[rank_weight(*C.F, codeword(C, x))];
        for (size_t t = odo.size(); t-- > 0;) {
            if (++odo[t] < C.F->size) break;
            odo[t] = 0;
        }
    }
    return counts;
}

// Simplex generator (I | alpha I | ... | alpha^{m-1} I) assembled by hand so
// construction-dependent tests have an independent reference.
inline RankCode reference_simplex(FieldPtr F, int k) {
    const int m = F->m;
    Mat G(k, k * m);
    Elem a = F->g();
    Elem apow = 1;
    for (int b = 0; b < m; ++b) {
        for (int i = 0; i < k; ++i) G.at(i, b * k + i) = apow;
        apow = F->mul(apow, a);
    }
    return make_code(F, G);
}

} // namespace rankmet::testing

#endif
