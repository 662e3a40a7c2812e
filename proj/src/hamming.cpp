#include "rankmet/hamming.hpp"

#include <algorithm>

namespace rankmet {

namespace {

// dynamic bitset support of a codeword
std::vector<std::uint64_t> support_bits(const std::vector<Elem>& v) {
    std::vector<std::uint64_t> bits((v.size() + 63) / 64, 0);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) bits[i >> 6] |= 1ull << (i & 63);
    return bits;
}

bool subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

} // namespace

ProjSystem ext_h(const QSystem& U, const Budget& budget) {
    LinearSet L = linear_set(U, budget);
    ProjSystem P;
    P.F = U.F;
    P.k = U.k;
    const std::uint64_t q = U.F->q;
    for (const auto& [point, wt] : L.weights) {
        BigInt mult = (bpow(q, wt) - BigInt(1)).div_exact(BigInt(q) - BigInt(1));
        P.entries[point] = mult.to_u64();
    }
    BigInt expected = (bpow(q, U.n) - BigInt(1)).div_exact(BigInt(q) - BigInt(1));
    check(BigInt(P.length()) == expected, errc::internal_inconsistency,
          "projective system length differs from (q^n-1)/(q-1)");
    return P;
}

HammingCode make_hamming_code(FieldPtr F, Mat G) {
    check(static_cast<bool>(F), errc::invalid_args, "missing field context");
    for (Elem x : G.a) F->check_elem(x);
    HammingCode H{std::move(F), G.cols, G.rows, std::move(G)};
    Mat copy = H.G;
    check(rref(H.full(), copy, nullptr) == H.k, errc::invalid_args,
          "generator rows are dependent");
    return H;
}

HammingCode as_hamming(const RankCode& C) {
    check(C.k >= 1, errc::invalid_args, "empty code");
    return make_hamming_code(C.F, C.G);
}

HammingCode psi_h(const ProjSystem& P) {
    check(!P.entries.empty(), errc::invalid_args, "empty projective system");
    const std::uint64_t N = P.length();
    Mat G(P.k, static_cast<int>(N));
    int col = 0;
    for (const auto& [point, mult] : P.entries)
        for (std::uint64_t t = 0; t < mult; ++t) {
            for (int i = 0; i < P.k; ++i) G.at(i, col) = point[i];
            ++col;
        }
    return make_hamming_code(P.F, std::move(G));
}

HammingCode associated_code(const RankCode& C, const Budget& budget) {
    return psi_h(ext_h(phi(C), budget));
}

int hamming_weight(const std::vector<Elem>& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

bool hamming_nondegenerate(const HammingCode& H) {
    for (int j = 0; j < H.N; ++j) {
        bool zero = true;
        for (int i = 0; i < H.k && zero; ++i)
            if (H.G.at(i, j)) zero = false;
        if (zero) return false;
    }
    return true;
}

std::uint64_t HammingDistribution::min_distance() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && !c.is_zero()) return w;
    return N + 1;
}

std::uint64_t HammingDistribution::max_weight() const {
    std::uint64_t best = 0;
    for (const auto& [w, c] : counts)
        if (!c.is_zero()) best = std::max(best, w);
    return best;
}

BigInt HammingDistribution::total() const {
    BigInt t(0);
    for (const auto& [w, c] : counts) t += c;
    return t;
}

HammingDistribution hamming_weight_distribution(const HammingCode& H, const Budget& budget) {
    const std::uint64_t Q = H.F->size; // alphabet size
    HammingDistribution D;
    D.N = static_cast<std::uint64_t>(H.N);
    D.counts[0] = BigInt(1);
    budget.require(bpow(Q, H.k), "Hamming codeword enumeration");
    // Hamming weight is scaling invariant: one representative per projective
    // message class, weighted by Q-1
    std::map<std::uint64_t, std::uint64_t> acc;
    ProjectivePointEnumerator msgs(H.full(), H.k, budget);
    while (auto x = msgs.next())
        ++acc[static_cast<std::uint64_t>(hamming_weight(vec_mat(H.full(), *x, H.G)))];
    for (const auto& [w, c] : acc) {
        check(w > 0, errc::internal_inconsistency, "nonzero message with empty support");
        D.counts[w] = BigInt(c) * BigInt(Q - 1);
    }
    check(D.total() == bpow(Q, H.k), errc::internal_inconsistency,
          "Hamming distribution does not sum to the code size");
    return D;
}

bool verify_weight_correspondence(const RankCode& C, const Budget& budget) {
    const std::uint64_t q = C.F->q;
    WeightDistribution R = weight_distribution(C, budget);
    HammingCode CH = associated_code(C, budget);
    HammingDistribution D = hamming_weight_distribution(CH, budget);
    std::map<std::uint64_t, BigInt> expected;
    for (int i = 0; i <= C.n; ++i) {
        if (R.counts[i].is_zero()) continue;
        BigInt j = (bpow(q, C.n) - bpow(q, C.n - i)).div_exact(BigInt(q) - BigInt(1));
        expected[j.to_u64()] = R.counts[i];
    }
    std::map<std::uint64_t, BigInt> actual;
    for (const auto& [w, c] : D.counts)
        if (!c.is_zero()) actual[w] = c;
    return expected == actual;
}

HammingMinimalityReport hamming_minimality(const HammingCode& H, const Budget& budget) {
    const std::uint64_t Q = H.F->size;
    BigInt classes = projective_point_count(Q, H.k);
    budget.require(classes * classes, "pairwise Hamming support scan");

    std::vector<std::vector<Elem>> msgs;
    std::vector<std::vector<std::uint64_t>> supports;
    ProjectivePointEnumerator en(H.full(), H.k, budget);
    while (auto x = en.next()) {
        supports.push_back(support_bits(vec_mat(H.full(), *x, H.G)));
        msgs.push_back(*x);
    }
    HammingMinimalityReport rep;
    for (size_t i = 0; i < supports.size(); ++i)
        for (size_t j = 0; j < supports.size(); ++j) {
            if (i == j) continue;
            if (subset(supports[i], supports[j])) {
                rep.minimal = false;
                rep.witness = std::make_pair(msgs[i], msgs[j]);
                return rep;
            }
        }
    rep.minimal = true;
    return rep;
}

bool is_hamming_minimal(const HammingCode& H, const Budget& budget) {
    return hamming_minimality(H, budget).minimal;
}

std::uint64_t generalized_hamming_weight(const HammingCode& H, int r, const Budget& budget) {
    check(r >= 1 && r <= H.k, errc::invalid_args, "generalized weight index out of range");
    // collapse equal columns first; containment in W is a property of points
    std::map<std::vector<Elem>, std::uint64_t> cols;
    for (int j = 0; j < H.N; ++j) {
        std::vector<Elem> col(H.k);
        bool zero = true;
        for (int i = 0; i < H.k; ++i) {
            col[i] = H.G.at(i, j);
            if (col[i]) zero = false;
        }
        check(!zero, errc::degenerate, "generalized Hamming weights need nonzero columns");
        ++cols[normalize_projective(H.full(), col)];
    }
    std::uint64_t best_inside = 0;
    SubspaceEnumerator en(H.full(), H.k, H.k - r, budget);
    while (auto W = en.next()) {
        std::uint64_t inside = 0;
        for (const auto& [point, mult] : cols)
            if (contains(*W, point)) inside += mult;
        best_inside = std::max(best_inside, inside);
    }
    return static_cast<std::uint64_t>(H.N) - best_inside;
}

bool check_total_weight_law(const HammingCode& H, const Budget& budget) {
    check(hamming_nondegenerate(H), errc::degenerate, "total-weight law needs a nondegenerate code");
    HammingDistribution D = hamming_weight_distribution(H, budget);
    BigInt total(0);
    for (const auto& [w, c] : D.counts) total += BigInt(w) * c;
    const std::uint64_t Q = H.F->size;
    BigInt expected = BigInt(static_cast<std::uint64_t>(H.N)) *
                      (bpow(Q, H.k) - bpow(Q, H.k - 1));
    return total == expected;
}

} // namespace rankmet
