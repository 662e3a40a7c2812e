#include "rankmet/code.hpp"

#include <algorithm>
#include <set>

namespace rankmet {

RankCode make_code(FieldPtr F, Mat G) {
    check(static_cast<bool>(F), errc::invalid_args, "missing field context");
    for (Elem x : G.a) F->check_elem(x);
    RankCode C{std::move(F), G.cols, G.rows, std::move(G)};
    check(C.k <= C.n, errc::invalid_args, "generator must have k <= n");
    Mat copy = C.G;
    check(rref(C.full(), copy, nullptr) == C.k, errc::invalid_args,
          "generator rows are F_{q^m}-dependent");
    return C;
}

RankCode zero_code(FieldPtr F, int n) {
    return RankCode{std::move(F), n, 0, Mat(0, n)};
}

std::vector<Elem> codeword(const RankCode& C, const std::vector<Elem>& x) {
    return vec_mat(C.full(), x, C.G);
}

std::vector<Elem> flatten_ext(const FieldCtx& F, const std::vector<Elem>& w) {
    std::vector<Elem> flat;
    flat.reserve(w.size() * F.m);
    for (Elem c : w) {
        auto coords = F.expand(c);
        flat.insert(flat.end(), coords.begin(), coords.end());
    }
    return flat;
}

std::vector<Elem> unflatten_ext(const FieldCtx& F, const std::vector<Elem>& flat, int k) {
    check(static_cast<int>(flat.size()) == k * F.m, errc::dimension_mismatch,
          "flattened length mismatch");
    std::vector<Elem> w(k);
    for (int j = 0; j < k; ++j) {
        std::vector<Elem> coords(flat.begin() + static_cast<size_t>(j) * F.m,
                                 flat.begin() + static_cast<size_t>(j + 1) * F.m);
        w[j] = F.lift(coords);
    }
    return w;
}

Subspace flatten_ext_subspace(const FieldCtx& F, const Mat& ext_rows, int k) {
    check(ext_rows.cols == k, errc::dimension_mismatch, "ambient mismatch");
    std::vector<std::vector<Elem>> rows;
    rows.reserve(static_cast<size_t>(ext_rows.rows) * F.m);
    for (int i = 0; i < ext_rows.rows; ++i) {
        std::vector<Elem> h = ext_rows.row(i);
        for (int t = 0; t < F.m; ++t) {
            std::vector<Elem> scaled(k);
            for (int j = 0; j < k; ++j) scaled[j] = F.mul(F.gamma[t], h[j]);
            rows.push_back(flatten_ext(F, scaled));
        }
    }
    return span(subfield_of(F), k * F.m, rows);
}

Subspace column_span_fq(const RankCode& C) {
    std::vector<std::vector<Elem>> cols;
    cols.reserve(C.n);
    for (int j = 0; j < C.n; ++j) {
        std::vector<Elem> col(C.k);
        for (int i = 0; i < C.k; ++i) col[i] = C.G.at(i, j);
        cols.push_back(flatten_ext(*C.F, col));
    }
    return span(C.sub(), C.k * C.F->m, cols);
}

Subspace rank_support(const FieldCtx& F, const std::vector<Elem>& v) {
    Mat E = gamma_expand(F, v);
    return span(subfield_of(F), transpose(E));
}

int rank_weight(const FieldCtx& F, const std::vector<Elem>& v) {
    return rank_support(F, v).dim();
}

Subspace code_support(const RankCode& C) {
    Subspace S = zero_subspace(C.sub(), C.n);
    for (int i = 0; i < C.k; ++i) S = sum(S, rank_support(*C.F, C.G.row(i)));
    return S;
}

int effective_length(const RankCode& C) { return code_support(C).dim(); }

bool is_nondegenerate(const RankCode& C) {
    if (C.k == 0) return C.n == 0;
    return column_span_fq(C).dim() == C.n;
}

int dual_distance_class(const RankCode& C, const Budget& budget) {
    check(C.k >= 1, errc::invalid_args, "dual distance class needs a nonzero code");
    // rank-1 dual words are F_{q^m}-multiples of F_q-points killed by x -> G x^T;
    // rank-2 ones come from two projective points with dependent images.
    Mat Gt = transpose(C.G);
    ProjectivePointEnumerator pts(C.sub(), C.n, budget);
    std::set<std::vector<Elem>> images;
    bool collision = false;
    while (auto x = pts.next()) {
        std::vector<Elem> img = vec_mat(C.full(), *x, Gt);
        if (std::all_of(img.begin(), img.end(), [](Elem e) { return e == 0; })) return 1;
        if (!images.insert(normalize_projective(C.full(), img)).second) collision = true;
    }
    return collision ? 2 : 3;
}

NondegeneracyReport nondegeneracy_report(const RankCode& C, const Budget& budget) {
    NondegeneracyReport rep;
    rep.effective_length = effective_length(C);
    if (C.k == 0) {
        rep.nondegenerate = C.n == 0;
        return rep;
    }
    rep.nondegenerate = column_span_fq(C).dim() == C.n;
    int dd = dual_distance_class(C, budget);
    rep.dual_distance_ge2 = dd >= 2;
    rep.rank2_nondegenerate = dd >= 3;
    check(rep.nondegenerate == rep.dual_distance_ge2, errc::internal_inconsistency,
          "nondegeneracy criteria (3) and (4) disagree");
    check(!rep.nondegenerate || C.n <= C.k * C.F->m, errc::internal_inconsistency,
          "nondegenerate code with n > km");
    return rep;
}

RankCode dual(const RankCode& C) {
    Subspace row_space = span(C.full(), C.G);
    Subspace null_space = perp(row_space);
    if (null_space.dim() == 0) return zero_code(C.F, C.n); // dual of the full space
    return make_code(C.F, null_space.basis);
}

int WeightDistribution::min_distance() const {
    for (int i = 1; i <= n; ++i)
        if (!counts[i].is_zero()) return i;
    return n + 1; // zero-code convention
}

int WeightDistribution::max_rank() const {
    for (int i = n; i >= 1; --i)
        if (!counts[i].is_zero()) return i;
    return 0;
}

bool WeightDistribution::one_weight() const {
    int nonzero = 0;
    for (int i = 1; i <= n; ++i)
        if (!counts[i].is_zero()) ++nonzero;
    return nonzero == 1;
}

BigInt WeightDistribution::total() const {
    BigInt t(0);
    for (const BigInt& c : counts) t += c;
    return t;
}

WeightDistribution weight_distribution(const RankCode& C, const Budget& budget) {
    const std::uint64_t qm = C.F->size;
    WeightDistribution W;
    W.n = C.n;
    W.counts.assign(C.n + 1, BigInt(0));
    W.counts[0] = BigInt(1);
    if (C.k == 0) return W;
    BigInt codewords = bpow(qm, C.k);
    budget.require(codewords, "codeword enumeration");
    // rank is invariant under F_{q^m}-scaling: iterate projective classes of
    // messages and weight each class by q^m - 1
    std::vector<std::uint64_t> acc(C.n + 1, 0);
    ProjectivePointEnumerator msgs(C.full(), C.k, budget);
    while (auto x = msgs.next()) ++acc[rank_weight(*C.F, codeword(C, *x))];
    for (int i = 1; i <= C.n; ++i) W.counts[i] = BigInt(acc[i]) * BigInt(qm - 1);
    check(W.total() == codewords, errc::internal_inconsistency,
          "weight distribution does not sum to q^{mk}");
    if (is_nondegenerate(C)) {
        check(W.max_rank() == std::min(C.n, C.F->m), errc::internal_inconsistency,
              "nondegenerate code missing a codeword of rank min(n, m)");
    }
    return W;
}

int min_rank_distance(const RankCode& C, const Budget& budget) {
    return weight_distribution(C, budget).min_distance();
}

int max_rank(const RankCode& C, const Budget& budget) {
    return weight_distribution(C, budget).max_rank();
}

OneWeightReport classify_one_weight(const RankCode& C, const Budget& budget) {
    check(C.k >= 2, errc::invalid_args, "one-weight classification needs k >= 2");
    WeightDistribution W = weight_distribution(C, budget);
    OneWeightReport rep;
    rep.one_weight = W.one_weight();
    rep.effective_length = effective_length(C);
    rep.distance = W.min_distance();
    rep.km = C.k * C.F->m;
    if (rep.one_weight) {
        check(rep.effective_length == rep.km, errc::internal_inconsistency,
              "one-weight code with effective length != km");
        check(rep.distance == C.F->m, errc::internal_inconsistency,
              "one-weight code with distance != m");
    }
    return rep;
}

int generalized_rank_weight(const RankCode& C, int r, const Budget& budget) {
    check(r >= 1 && r <= C.k, errc::invalid_args, "generalized weight index out of range");
    check(is_nondegenerate(C), errc::degenerate,
          "generalized rank weights require a nondegenerate code");
    const int k = C.k, m = C.F->m;
    Subspace U = column_span_fq(C);
    int best = -1;
    SubspaceEnumerator en(C.full(), k, k - r, budget);
    while (auto H = en.next()) {
        Subspace Hf = flatten_ext_subspace(*C.F, H->basis, k);
        best = std::max(best, intersection(U, Hf).dim());
    }
    (void)m;
    return C.n - best;
}

std::vector<int> generalized_rank_weights(const RankCode& C, const Budget& budget) {
    std::vector<int> d(C.k + 1, 0);
    for (int r = 1; r <= C.k; ++r) d[r] = generalized_rank_weight(C, r, budget);
    for (int r = 1; r < C.k; ++r)
        check(d[r] < d[r + 1], errc::internal_inconsistency,
              "generalized rank weights are not strictly increasing");
    check(d[C.k] == C.n, errc::internal_inconsistency, "d_k != n for a nondegenerate code");
    return d;
}

int generalized_rank_weight_definitional(const RankCode& C, int r, const Budget& budget) {
    check(r >= 1 && r <= C.k, errc::invalid_args, "generalized weight index out of range");
    Subspace rows = span(C.full(), C.G);
    for (int t = r; t <= C.n; ++t) {
        SubspaceEnumerator en(C.sub(), C.n, t, budget);
        while (auto V = en.next()) {
            // a basis in F_q^n spans the same matrix over F_{q^m}
            Subspace V_ext = span(C.full(), V->basis);
            if (intersection(V_ext, rows).dim() >= r) return t;
        }
    }
    fail(errc::internal_inconsistency, "no Frobenius-closed space meets the code");
}

Subspace fq_rational_message_space(const RankCode& C) {
    const int k = C.k, m = C.F->m;
    const FieldCtx& F = *C.F;
    // x -> (coordinates of (x G)_i^q - (x G)_i) is F_q-linear in the
    // flattened message x; its kernel is the rational message space.
    std::vector<std::vector<Elem>> rows;
    for (int j = 0; j < k; ++j)
        for (int t = 0; t < m; ++t) {
            std::vector<Elem> x(k, 0);
            x[j] = F.gamma[t];
            std::vector<Elem> w = codeword(C, x);
            std::vector<Elem> img;
            img.reserve(static_cast<size_t>(C.n) * m);
            for (Elem c : w) {
                Elem d = F.sub(F.frobenius(c), c);
                auto coords = F.expand(d);
                img.insert(img.end(), coords.begin(), coords.end());
            }
            rows.push_back(std::move(img));
        }
    Mat M = mat_from_rows(rows); // (km) x (nm) over F_q
    Subspace kernel = perp(span(C.sub(), transpose(M)));
    // kernel of x -> xM equals perp of the column space of M
    return kernel;
}

RankCode re_embed(const RankCode& C) {
    Subspace S = code_support(C);
    const int np = S.dim();
    if (np == C.n) return C;
    // complete the support basis to an invertible matrix R over F_q; with
    // A = R^{-1}, Gamma(vA) = A^T Gamma(v) lands in <e_1..e_np>
    Mat R(C.n, C.n);
    std::vector<bool> is_pivot(C.n, false);
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < C.n; ++j) R.at(i, j) = S.basis.at(i, j);
        for (int j = 0; j < C.n; ++j)
            if (S.basis.at(i, j)) {
                is_pivot[j] = true;
                break;
            }
    }
    int row = np;
    for (int j = 0; j < C.n; ++j)
        if (!is_pivot[j]) R.at(row++, j) = 1;
    check(row == C.n, errc::internal_inconsistency, "support completion failed");
    Mat A = inverse(C.sub(), R);
    Mat GA = mat_mul(C.full(), C.G, A);
    Mat Gp(C.k, np);
    for (int i = 0; i < C.k; ++i)
        for (int j = 0; j < C.n; ++j) {
            if (j < np) Gp.at(i, j) = GA.at(i, j);
            else check(GA.at(i, j) == 0, errc::internal_inconsistency,
                       "re-embedding left a nonzero trailing coordinate");
        }
    return make_code(C.F, Gp);
}

RankCode apply_isometry(const RankCode& C, Elem alpha, const Mat& A) {
    check(alpha != 0, errc::invalid_args, "isometry scalar must be nonzero");
    check(A.rows == C.n && A.cols == C.n, errc::dimension_mismatch, "isometry matrix shape");
    for (Elem x : A.a)
        check(C.F->in_subfield(x), errc::invalid_args, "isometry matrix must be over F_q");
    Mat copy = A;
    check(rref(C.sub(), copy, nullptr) == C.n, errc::invalid_args, "isometry matrix not invertible");
    Mat GA = mat_mul(C.full(), C.G, A);
    for (Elem& x : GA.a) x = C.F->mul(alpha, x);
    return make_code(C.F, GA);
}

} // namespace rankmet
