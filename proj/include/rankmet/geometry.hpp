#ifndef RANKMET_GEOMETRY_HPP
#define RANKMET_GEOMETRY_HPP

#include "rankmet/code.hpp"

#include <map>
#include <optional>

namespace rankmet {

// An [n,k] q-system: an n-dimensional F_q-subspace of F_{q^m}^k spanning the
// ambient space over F_{q^m}. Canonical representative: the basis rows are
// the unflattened RREF of the Gamma-flattened space, so equal systems have
// identical bases.
struct QSystem {
    FieldPtr F;
    int k = 0, n = 0;
    Mat basis;     // n rows, vectors in F_{q^m}^k
    Subspace flat; // the same space inside F_q^{km}, canonical RREF

    FieldView full() const { return fullfield_of(*F); }
    FieldView sub() const { return subfield_of(*F); }
    friend bool operator==(const QSystem& a, const QSystem& b) {
        return a.k == b.k && a.flat == b.flat;
    }
};

// Builds the canonical q-system spanned over F_q by the given vectors.
// Throws NotSpanning when the F_{q^m}-span is a proper subspace.
QSystem make_q_system(FieldPtr F, int k, const std::vector<std::vector<Elem>>& gens);
QSystem q_system_from_flat(FieldPtr F, int k, const Subspace& flat);

// The code <-> system correspondence. phi takes the F_q-span of the columns
// of a generator matrix; psi uses the canonical basis of U as columns.
QSystem phi(const RankCode& C);
RankCode psi(const QSystem& U);

// weight of the projective point P (canonical representative in F_{q^m}^k):
// dim_{F_q}(U cap <P>_{F_{q^m}})
int point_weight(const QSystem& U, const std::vector<Elem>& P);
// weight of the hyperplane <v>^perp
int hyperplane_weight(const QSystem& U, const std::vector<Elem>& v);

struct LinearSet {
    // canonical point representative -> weight (>= 1)
    std::map<std::vector<Elem>, int> weights;

    std::uint64_t num_points() const { return weights.size(); }
};

LinearSet linear_set(const QSystem& U, const Budget& budget = Budget());
bool is_scattered(const QSystem& U, const Budget& budget = Budget());

// minimum distance of psi(U) computed geometrically:
// n - max over hyperplanes H of dim(U cap H)
int system_min_distance(const QSystem& U, const Budget& budget = Budget());

struct StandardEquationsResult {
    BigInt lhs, rhs;
    bool equal = false;
};
// sum over r-dimensional F_{q^m}-subspaces H of |H cap (U \ 0)| against the
// closed form (q^n - 1) * binom(k-1, r-1)_{q^m}.
StandardEquationsResult standard_equations_check(const QSystem& U, int r,
                                                 const Budget& budget = Budget());

struct LinearityIndexReport {
    int direct = 0;                    // by definition: largest F_{q^m}-subspace inside U
    std::optional<int> via_weights;    // k - min{r : d_r = n - (k-r)m}
    bool discrepancy = false;          // the two disagree (happens at U = F_{q^m}^k)
};
LinearityIndexReport linearity_index_report(const QSystem& U, const Budget& budget = Budget());
int linearity_index(const QSystem& U, const Budget& budget = Budget());
// First (in enumeration order) F_{q^m}-subspace of dimension l contained in
// U, if any.
std::optional<Mat> contained_ext_subspace(const QSystem& U, int l, const Budget& budget = Budget());

// U/T for an F_{q^m}-subspace T inside U, realized in F_{q^m}^{k-l} through a
// deterministic complement. T is given by vectors whose F_q-span must be
// F_{q^m}-linear (closed under multiplication by g).
QSystem quotient_system(const QSystem& U, const std::vector<std::vector<Elem>>& T_gens,
                        const Budget& budget = Budget());

// For scattered U with n > k: the first (n-1)-dimensional F_q-subspace of U
// (canonical hyperplane order) that still spans F_{q^m}^k.
QSystem shrink_scattered(const QSystem& U, const Budget& budget = Budget());

} // namespace rankmet

#endif
