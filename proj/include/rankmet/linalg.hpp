#ifndef RANKMET_LINALG_HPP
#define RANKMET_LINALG_HPP

#include "rankmet/bigint.hpp"
#include "rankmet/budget.hpp"
#include "rankmet/gf.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace rankmet {

// A coefficient field for linear algebra: either the full F_{q^m} of a
// context or its embedded subfield F_q. Elements use the same packed
// encoding in both cases; the subfield is closed under all operations.
struct FieldView {
    const FieldCtx* F = nullptr;
    bool sub = false; // true: embedded F_q, false: F_{q^m}

    std::uint32_t order_q() const { return sub ? F->q : F->size; }
    std::uint32_t num_elements() const { return order_q(); }
    Elem element(std::uint32_t idx) const { return sub ? F->subfield[idx] : static_cast<Elem>(idx); }

    Elem add(Elem a, Elem b) const { return F->add(a, b); }
    Elem sub_(Elem a, Elem b) const { return F->sub(a, b); }
    Elem neg(Elem a) const { return F->neg(a); }
    Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
    Elem inv(Elem a) const { return F->inv(a); }

    friend bool operator==(const FieldView& a, const FieldView& b) {
        return a.F == b.F && a.sub == b.sub;
    }
};

inline FieldView subfield_of(const FieldCtx& F) { return {&F, true}; }
inline FieldView fullfield_of(const FieldCtx& F) { return {&F, false}; }

// Dense row-major matrix of packed field elements.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Elem at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    std::vector<Elem> row(int r) const {
        return std::vector<Elem>(a.begin() + static_cast<size_t>(r) * cols,
                                 a.begin() + static_cast<size_t>(r + 1) * cols);
    }
    void set_row(int r, const std::vector<Elem>& v) {
        std::copy(v.begin(), v.end(), a.begin() + static_cast<size_t>(r) * cols);
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

Mat mat_from_rows(const std::vector<std::vector<Elem>>& rows);

// Gamma-expansion of a vector over F_{q^m}: row i holds the F_q-coordinates
// of v_i with respect to ctx.gamma, so v_i = sum_j Gamma(v)_{ij} gamma_j.
Mat gamma_expand(const FieldCtx& F, const std::vector<Elem>& v);
Mat mat_mul(const FieldView& fv, const Mat& A, const Mat& B);
std::vector<Elem> vec_mat(const FieldView& fv, const std::vector<Elem>& v, const Mat& A);
Mat transpose(const Mat& A);

// In-place reduced row echelon form; returns rank. Rows beyond the rank are
// zeroed but kept; pivots (column indices) are appended to *pivots if given.
int rref(const FieldView& fv, Mat& M, std::vector<int>* pivots = nullptr);

// An F-subspace of F^N in canonical reduced-echelon form. Two subspaces are
// equal iff their representations are identical, which makes them usable as
// set/map keys throughout.
struct Subspace {
    FieldView fv;
    int ambient = 0;
    Mat basis; // RREF, no zero rows

    int dim() const { return basis.rows; }
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.fv == b.fv && a.ambient == b.ambient && a.basis == b.basis;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.basis.rows != b.basis.rows) return a.basis.rows < b.basis.rows;
        return a.basis.a < b.basis.a;
    }
};

Subspace span(const FieldView& fv, int ambient, const std::vector<std::vector<Elem>>& vectors);
Subspace span(const FieldView& fv, const Mat& rows_as_vectors);
Subspace zero_subspace(const FieldView& fv, int ambient);
Subspace full_space(const FieldView& fv, int ambient);

bool contains(const Subspace& S, const std::vector<Elem>& v);
bool contains(const Subspace& A, const Subspace& B); // B <= A
Subspace sum(const Subspace& A, const Subspace& B);
Subspace intersection(const Subspace& A, const Subspace& B);
// Orthogonal complement for the standard bilinear form u . v^T.
Subspace perp(const Subspace& S);

// Coordinates of A modulo B (requires B <= A): a complement basis D inside A
// with the map x in A -> coordinates of (x mod B) with respect to D.
struct QuotientMap {
    Subspace sub;        // B
    Mat complement;      // rows: RREF basis of a complement of B in A
    std::vector<int> pivots;

    std::vector<Elem> coords(const FieldView& fv, const std::vector<Elem>& x) const;
};
QuotientMap quotient_map(const Subspace& A, const Subspace& B);

// Solve x * rows(A) = v over fv; nullopt when v is outside the row space.
std::optional<std::vector<Elem>> solve_in_rowspace(const FieldView& fv, const Mat& A,
                                                   const std::vector<Elem>& v);

Mat inverse(const FieldView& fv, const Mat& A); // throws on singular input

BigInt gaussian_binomial(int a, int b, const BigInt& Q);
BigInt gaussian_binomial(int a, int b, std::uint64_t Q);

// Streams every d-dimensional subspace of F^N exactly once, as canonical
// RREF bases, in deterministic order (pivot sets in lexicographic order,
// free entries in ascending element order).
class SubspaceEnumerator {
  public:
    SubspaceEnumerator(FieldView fv, int ambient, int dim, const Budget& budget);
    std::optional<Subspace> next();
    const BigInt& total() const { return total_; }

  private:
    FieldView fv_;
    int N_, d_;
    BigInt total_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_pos_;
    std::vector<std::uint32_t> odo_;
    bool fresh_combo_ = true, done_ = false;

    void compute_free_positions();
    bool advance_combo();
    Subspace current() const;
};

// Projective points of PG(N-1, F): canonical representatives with first
// nonzero coordinate equal to 1, in deterministic order.
class ProjectivePointEnumerator {
  public:
    ProjectivePointEnumerator(FieldView fv, int N, const Budget& budget);
    std::optional<std::vector<Elem>> next();
    const BigInt& total() const { return total_; }

  private:
    FieldView fv_;
    int N_, pivot_ = 0;
    BigInt total_;
    std::vector<std::uint32_t> odo_;
    bool done_ = false, fresh_ = true;
};

BigInt projective_point_count(std::uint64_t Q, int N);

std::vector<Elem> normalize_projective(const FieldView& fv, const std::vector<Elem>& v);

// All of GL_N(F) in deterministic order (odometer over entries, invertibles
// kept). Intended for tiny parameters; guarded by the budget.
class GLEnumerator {
  public:
    GLEnumerator(FieldView fv, int N, const Budget& budget);
    std::optional<Mat> next();

  private:
    FieldView fv_;
    int N_;
    std::vector<std::uint32_t> odo_;
    bool done_ = false, fresh_ = true;
};

} // namespace rankmet

#endif
