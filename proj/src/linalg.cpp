#include "rankmet/linalg.hpp"

#include <algorithm>

namespace rankmet {

Mat mat_from_rows(const std::vector<std::vector<Elem>>& rows) {
    Mat M;
    if (rows.empty()) return M;
    M = Mat(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        check(rows[i].size() == rows[0].size(), errc::dimension_mismatch, "ragged rows");
        M.set_row(static_cast<int>(i), rows[i]);
    }
    return M;
}

Mat gamma_expand(const FieldCtx& F, const std::vector<Elem>& v) {
    Mat E(static_cast<int>(v.size()), F.m);
    for (size_t i = 0; i < v.size(); ++i) E.set_row(static_cast<int>(i), F.expand(v[i]));
    return E;
}

Mat mat_mul(const FieldView& fv, const Mat& A, const Mat& B) {
    check(A.cols == B.rows, errc::dimension_mismatch, "matrix product shape mismatch");
    Mat R(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int t = 0; t < A.cols; ++t) {
            Elem x = A.at(i, t);
            if (!x) continue;
            for (int j = 0; j < B.cols; ++j)
                if (B.at(t, j)) R.at(i, j) = fv.add(R.at(i, j), fv.mul(x, B.at(t, j)));
        }
    return R;
}

std::vector<Elem> vec_mat(const FieldView& fv, const std::vector<Elem>& v, const Mat& A) {
    check(static_cast<int>(v.size()) == A.rows, errc::dimension_mismatch, "vector-matrix shape mismatch");
    std::vector<Elem> r(A.cols, 0);
    for (int i = 0; i < A.rows; ++i) {
        if (!v[i]) continue;
        for (int j = 0; j < A.cols; ++j)
            if (A.at(i, j)) r[j] = fv.add(r[j], fv.mul(v[i], A.at(i, j)));
    }
    return r;
}

Mat transpose(const Mat& A) {
    Mat R(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) R.at(j, i) = A.at(i, j);
    return R;
}

int rref(const FieldView& fv, Mat& M, std::vector<int>* pivots) {
    int rank = 0;
    for (int col = 0; col < M.cols && rank < M.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < M.rows; ++r)
            if (M.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(rank, c));
        Elem pinv = fv.inv(M.at(rank, col));
        for (int c = col; c < M.cols; ++c) M.at(rank, c) = fv.mul(M.at(rank, c), pinv);
        for (int r = 0; r < M.rows; ++r) {
            if (r == rank) continue;
            Elem f = M.at(r, col);
            if (!f) continue;
            for (int c = col; c < M.cols; ++c)
                M.at(r, c) = fv.sub_(M.at(r, c), fv.mul(f, M.at(rank, c)));
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

Subspace span(const FieldView& fv, int ambient, const std::vector<std::vector<Elem>>& vectors) {
    for (const auto& v : vectors)
        check(static_cast<int>(v.size()) == ambient, errc::dimension_mismatch,
              "vector length differs from ambient dimension");
    if (vectors.empty()) return zero_subspace(fv, ambient);
    return span(fv, mat_from_rows(vectors));
}

Subspace span(const FieldView& fv, const Mat& rows_as_vectors) {
    Mat M = rows_as_vectors;
    int rank = rref(fv, M, nullptr);
    Mat B(rank, M.cols);
    std::copy(M.a.begin(), M.a.begin() + static_cast<size_t>(rank) * M.cols, B.a.begin());
    return Subspace{fv, M.cols, std::move(B)};
}

Subspace zero_subspace(const FieldView& fv, int ambient) {
    return Subspace{fv, ambient, Mat(0, ambient)};
}

Subspace full_space(const FieldView& fv, int ambient) {
    Mat I(ambient, ambient);
    for (int i = 0; i < ambient; ++i) I.at(i, i) = 1;
    return Subspace{fv, ambient, std::move(I)};
}

namespace {
// pivot column of RREF row r (index of leading 1)
int row_pivot(const Mat& B, int r) {
    for (int c = 0; c < B.cols; ++c)
        if (B.at(r, c)) return c;
    return -1;
}
} // namespace

bool contains(const Subspace& S, const std::vector<Elem>& v) {
    check(static_cast<int>(v.size()) == S.ambient, errc::dimension_mismatch, "ambient mismatch");
    std::vector<Elem> r = v;
    for (int i = 0; i < S.basis.rows; ++i) {
        int p = row_pivot(S.basis, i);
        Elem c = r[p];
        if (!c) continue;
        for (int j = p; j < S.ambient; ++j)
            r[j] = S.fv.sub_(r[j], S.fv.mul(c, S.basis.at(i, j)));
    }
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool contains(const Subspace& A, const Subspace& B) {
    check(A.fv == B.fv && A.ambient == B.ambient, errc::dimension_mismatch,
          "subspaces live in different spaces");
    for (int i = 0; i < B.basis.rows; ++i)
        if (!contains(A, B.basis.row(i))) return false;
    return true;
}

Subspace sum(const Subspace& A, const Subspace& B) {
    check(A.fv == B.fv && A.ambient == B.ambient, errc::dimension_mismatch,
          "subspaces live in different spaces");
    Mat M(A.basis.rows + B.basis.rows, A.ambient);
    std::copy(A.basis.a.begin(), A.basis.a.end(), M.a.begin());
    std::copy(B.basis.a.begin(), B.basis.a.end(), M.a.begin() + A.basis.a.size());
    return span(A.fv, M);
}

// Zassenhaus: rows [a|a] for a in A, [b|0] for b in B; reduced rows with a
// zero left half carry a basis of the intersection in their right half.
Subspace intersection(const Subspace& A, const Subspace& B) {
    check(A.fv == B.fv && A.ambient == B.ambient, errc::dimension_mismatch,
          "subspaces live in different spaces");
    const int N = A.ambient;
    Mat M(A.basis.rows + B.basis.rows, 2 * N);
    for (int i = 0; i < A.basis.rows; ++i)
        for (int j = 0; j < N; ++j) {
            M.at(i, j) = A.basis.at(i, j);
            M.at(i, N + j) = A.basis.at(i, j);
        }
    for (int i = 0; i < B.basis.rows; ++i)
        for (int j = 0; j < N; ++j) M.at(A.basis.rows + i, j) = B.basis.at(i, j);
    rref(A.fv, M, nullptr);
    std::vector<std::vector<Elem>> inter;
    for (int i = 0; i < M.rows; ++i) {
        bool left_zero = true;
        for (int j = 0; j < N && left_zero; ++j)
            if (M.at(i, j)) left_zero = false;
        if (!left_zero) continue;
        std::vector<Elem> right(N);
        bool nonzero = false;
        for (int j = 0; j < N; ++j) {
            right[j] = M.at(i, N + j);
            if (right[j]) nonzero = true;
        }
        if (nonzero) inter.push_back(std::move(right));
    }
    return span(A.fv, N, inter);
}

Subspace perp(const Subspace& S) {
    const int N = S.ambient;
    Mat M = S.basis;
    std::vector<int> pivots;
    rref(S.fv, M, &pivots);
    std::vector<bool> is_pivot(N, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Elem>> basis;
    for (int f = 0; f < N; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Elem> v(N, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = S.fv.neg(M.at(static_cast<int>(i), f));
        basis.push_back(std::move(v));
    }
    return span(S.fv, N, basis);
}

QuotientMap quotient_map(const Subspace& A, const Subspace& B) {
    check(contains(A, B), errc::not_contained, "quotient requires B contained in A");
    std::vector<std::vector<Elem>> reduced;
    for (int i = 0; i < A.basis.rows; ++i) {
        std::vector<Elem> r = A.basis.row(i);
        for (int t = 0; t < B.basis.rows; ++t) {
            int p = row_pivot(B.basis, t);
            Elem c = r[p];
            if (!c) continue;
            for (int j = p; j < A.ambient; ++j)
                r[j] = A.fv.sub_(r[j], A.fv.mul(c, B.basis.at(t, j)));
        }
        reduced.push_back(std::move(r));
    }
    Subspace D = span(A.fv, A.ambient, reduced);
    QuotientMap qm;
    qm.sub = B;
    qm.complement = D.basis;
    for (int i = 0; i < D.basis.rows; ++i) qm.pivots.push_back(row_pivot(D.basis, i));
    return qm;
}

std::vector<Elem> QuotientMap::coords(const FieldView& fv, const std::vector<Elem>& x) const {
    std::vector<Elem> r = x;
    for (int t = 0; t < sub.basis.rows; ++t) {
        int p = row_pivot(sub.basis, t);
        Elem c = r[p];
        if (!c) continue;
        for (size_t j = static_cast<size_t>(p); j < r.size(); ++j)
            r[j] = fv.sub_(r[j], fv.mul(c, sub.basis.at(t, static_cast<int>(j))));
    }
    std::vector<Elem> out(complement.rows, 0);
    for (int i = 0; i < complement.rows; ++i) {
        Elem c = r[pivots[i]];
        out[i] = c;
        if (!c) continue;
        for (size_t j = 0; j < r.size(); ++j)
            r[j] = fv.sub_(r[j], fv.mul(c, complement.at(i, static_cast<int>(j))));
    }
    check(std::all_of(r.begin(), r.end(), [](Elem v) { return v == 0; }), errc::not_contained,
          "vector not in the source space of the quotient map");
    return out;
}

std::optional<std::vector<Elem>> solve_in_rowspace(const FieldView& fv, const Mat& A,
                                                   const std::vector<Elem>& v) {
    check(static_cast<int>(v.size()) == A.cols, errc::dimension_mismatch, "solve shape mismatch");
    const int N = A.cols, k = A.rows;
    Mat E(k, N + k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < N; ++j) E.at(i, j) = A.at(i, j);
        E.at(i, N + i) = 1;
    }
    // eliminate on the first N columns only
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < N && rank < k; ++col) {
        int piv = -1;
        for (int r = rank; r < k; ++r)
            if (E.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < N + k; ++c) std::swap(E.at(piv, c), E.at(rank, c));
        Elem pinv = fv.inv(E.at(rank, col));
        for (int c = 0; c < N + k; ++c) E.at(rank, c) = fv.mul(E.at(rank, c), pinv);
        for (int r = 0; r < k; ++r) {
            if (r == rank) continue;
            Elem f = E.at(r, col);
            if (!f) continue;
            for (int c = 0; c < N + k; ++c) E.at(r, c) = fv.sub_(E.at(r, c), fv.mul(f, E.at(rank, c)));
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<Elem> r(v);
    std::vector<Elem> coef(k, 0);
    for (int i = 0; i < rank; ++i) {
        Elem c = r[pivots[i]];
        coef[i] = c;
        if (!c) continue;
        for (int j = 0; j < N; ++j) r[j] = fv.sub_(r[j], fv.mul(c, E.at(i, j)));
    }
    if (!std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; })) return std::nullopt;
    std::vector<Elem> x(k, 0);
    for (int i = 0; i < rank; ++i) {
        if (!coef[i]) continue;
        for (int t = 0; t < k; ++t) x[t] = fv.add(x[t], fv.mul(coef[i], E.at(i, N + t)));
    }
    return x;
}

Mat inverse(const FieldView& fv, const Mat& A) {
    check(A.rows == A.cols, errc::dimension_mismatch, "inverse of a non-square matrix");
    const int n = A.rows;
    Mat E(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) E.at(i, j) = A.at(i, j);
        E.at(i, n + i) = 1;
    }
    int rank = rref(fv, E, nullptr);
    check(rank == n, errc::invalid_args, "matrix is singular");
    Mat R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.at(i, j) = E.at(i, n + j);
    return R;
}

BigInt gaussian_binomial(int a, int b, const BigInt& Q) {
    check(a >= 0 && b >= 0, errc::invalid_args, "gaussian binomial needs nonnegative arguments");
    if (b > a) return BigInt(0);
    if (b == 0 || b == a) return BigInt(1);
    BigInt num(1), den(1);
    for (int i = 0; i < b; ++i) {
        num *= BigInt::pow(Q, a - i) - BigInt(1);
        den *= BigInt::pow(Q, b - i) - BigInt(1);
    }
    return num.div_exact(den);
}

BigInt gaussian_binomial(int a, int b, std::uint64_t Q) {
    check(Q >= 2, errc::invalid_args, "gaussian binomial needs a prime power Q >= 2");
    return gaussian_binomial(a, b, BigInt(Q));
}

BigInt projective_point_count(std::uint64_t Q, int N) {
    return (bpow(Q, N) - BigInt(1)).div_exact(BigInt(Q) - BigInt(1));
}

std::vector<Elem> normalize_projective(const FieldView& fv, const std::vector<Elem>& v) {
    for (Elem x : v)
        if (x) {
            Elem s = fv.inv(x);
            std::vector<Elem> r(v.size());
            for (size_t i = 0; i < v.size(); ++i) r[i] = fv.mul(v[i], s);
            return r;
        }
    fail(errc::invalid_args, "cannot normalize the zero vector");
}

SubspaceEnumerator::SubspaceEnumerator(FieldView fv, int ambient, int dim, const Budget& budget)
    : fv_(fv), N_(ambient), d_(dim) {
    check(dim >= 0 && dim <= ambient, errc::invalid_args, "subspace dimension out of range");
    total_ = gaussian_binomial(N_, d_, static_cast<std::uint64_t>(fv.order_q()));
    budget.require(total_, "subspace enumeration");
    pivots_.resize(d_);
    for (int i = 0; i < d_; ++i) pivots_[i] = i;
    compute_free_positions();
}

void SubspaceEnumerator::compute_free_positions() {
    free_pos_.clear();
    std::vector<bool> is_pivot(N_, false);
    for (int p : pivots_) is_pivot[p] = true;
    for (int i = 0; i < d_; ++i)
        for (int j = pivots_[i] + 1; j < N_; ++j)
            if (!is_pivot[j]) free_pos_.emplace_back(i, j);
    odo_.assign(free_pos_.size(), 0);
    fresh_combo_ = true;
}

bool SubspaceEnumerator::advance_combo() {
    // next combination in lexicographic order
    for (int i = d_ - 1; i >= 0; --i) {
        if (pivots_[i] < N_ - (d_ - i)) {
            ++pivots_[i];
            for (int t = i + 1; t < d_; ++t) pivots_[t] = pivots_[t - 1] + 1;
            compute_free_positions();
            return true;
        }
    }
    return false;
}

Subspace SubspaceEnumerator::current() const {
    Mat B(d_, N_);
    for (int i = 0; i < d_; ++i) B.at(i, pivots_[i]) = 1;
    for (size_t t = 0; t < free_pos_.size(); ++t)
        B.at(free_pos_[t].first, free_pos_[t].second) = fv_.element(odo_[t]);
    return Subspace{fv_, N_, std::move(B)};
}

std::optional<Subspace> SubspaceEnumerator::next() {
    if (done_) return std::nullopt;
    if (d_ == 0) {
        done_ = true;
        return zero_subspace(fv_, N_);
    }
    Subspace out = current();
    // advance odometer (last free position fastest); on wrap, next pivot set
    bool wrapped = true;
    for (size_t t = odo_.size(); t-- > 0;) {
        if (++odo_[t] < fv_.num_elements()) {
            wrapped = false;
            break;
        }
        odo_[t] = 0;
    }
    if (wrapped && !advance_combo()) done_ = true;
    return out;
}

ProjectivePointEnumerator::ProjectivePointEnumerator(FieldView fv, int N, const Budget& budget)
    : fv_(fv), N_(N) {
    check(N >= 1, errc::invalid_args, "projective enumeration needs N >= 1");
    total_ = projective_point_count(fv.order_q(), N);
    budget.require(total_, "projective point enumeration");
    odo_.assign(N_ - 1, 0);
}

std::optional<std::vector<Elem>> ProjectivePointEnumerator::next() {
    if (done_) return std::nullopt;
    const int tail = N_ - 1 - pivot_;
    std::vector<Elem> v(N_, 0);
    v[pivot_] = 1;
    for (int t = 0; t < tail; ++t) v[pivot_ + 1 + t] = fv_.element(odo_[t]);
    bool wrapped = true;
    for (int t = tail; t-- > 0;) {
        if (++odo_[t] < fv_.num_elements()) {
            wrapped = false;
            break;
        }
        odo_[t] = 0;
    }
    if (wrapped) {
        ++pivot_;
        if (pivot_ >= N_) done_ = true;
    }
    return v;
}

GLEnumerator::GLEnumerator(FieldView fv, int N, const Budget& budget) : fv_(fv), N_(N) {
    check(N >= 1, errc::invalid_args, "GL enumeration needs N >= 1");
    budget.require(BigInt::pow(BigInt(fv.order_q()), static_cast<std::uint64_t>(N) * N),
                   "GL enumeration");
    odo_.assign(static_cast<size_t>(N_) * N_, 0);
}

std::optional<Mat> GLEnumerator::next() {
    while (!done_) {
        Mat M(N_, N_);
        for (size_t t = 0; t < odo_.size(); ++t) M.a[t] = fv_.element(odo_[t]);
        // advance odometer
        size_t t = odo_.size();
        bool wrapped = true;
        while (t-- > 0) {
            if (++odo_[t] < fv_.num_elements()) {
                wrapped = false;
                break;
            }
            odo_[t] = 0;
        }
        if (wrapped) done_ = true;
        Mat copy = M;
        if (rref(fv_, copy, nullptr) == N_) return M;
    }
    return std::nullopt;
}

} // namespace rankmet
