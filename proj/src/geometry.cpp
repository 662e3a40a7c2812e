#include "rankmet/geometry.hpp"

#include <algorithm>

namespace rankmet {

namespace {

// all nonzero F_q-combinations of the rows of B (vectors over the full field)
template <typename Fn>
void for_each_nonzero_combination(const FieldCtx& F, const Mat& B, Fn&& fn) {
    const int n = B.rows, k = B.cols;
    std::vector<std::uint32_t> odo(n, 0);
    for (;;) {
        // advance first: start from the first nonzero combination
        bool wrapped = true;
        for (size_t t = odo.size(); t-- > 0;) {
            if (++odo[t] < F.q) {
                wrapped = false;
                break;
            }
            odo[t] = 0;
        }
        if (wrapped) break;
        std::vector<Elem> u(k, 0);
        for (int i = 0; i < n; ++i) {
            Elem c = F.subfield[odo[i]];
            if (!c) continue;
            for (int j = 0; j < k; ++j) u[j] = F.add(u[j], F.mul(c, B.at(i, j)));
        }
        fn(u);
    }
}

BigInt pow_q_n(const FieldCtx& F, int n) { return bpow(F.q, n); }

} // namespace

QSystem make_q_system(FieldPtr F, int k, const std::vector<std::vector<Elem>>& gens) {
    check(static_cast<bool>(F), errc::invalid_args, "missing field context");
    std::vector<std::vector<Elem>> flat_rows;
    flat_rows.reserve(gens.size());
    for (const auto& g : gens) {
        check(static_cast<int>(g.size()) == k, errc::dimension_mismatch,
              "generator length differs from k");
        flat_rows.push_back(flatten_ext(*F, g));
    }
    Subspace flat = span(subfield_of(*F), k * F->m, flat_rows);
    return q_system_from_flat(std::move(F), k, flat);
}

QSystem q_system_from_flat(FieldPtr F, int k, const Subspace& flat) {
    QSystem U;
    U.F = std::move(F);
    U.k = k;
    U.n = flat.dim();
    U.flat = flat;
    U.basis = Mat(U.n, k);
    for (int i = 0; i < U.n; ++i)
        U.basis.set_row(i, unflatten_ext(*U.F, flat.basis.row(i), k));
    check(U.n >= 1, errc::invalid_args, "empty q-system");
    Subspace ext_span = span(U.full(), U.basis);
    check(ext_span.dim() == k, errc::not_spanning,
          "the F_{q^m}-span of U is a proper subspace of F_{q^m}^k");
    check(U.n <= k * U.F->m, errc::internal_inconsistency, "q-system dimension exceeds km");
    return U;
}

QSystem phi(const RankCode& C) {
    check(is_nondegenerate(C), errc::degenerate, "phi requires a nondegenerate code");
    std::vector<std::vector<Elem>> cols;
    cols.reserve(C.n);
    for (int j = 0; j < C.n; ++j) {
        std::vector<Elem> col(C.k);
        for (int i = 0; i < C.k; ++i) col[i] = C.G.at(i, j);
        cols.push_back(std::move(col));
    }
    return make_q_system(C.F, C.k, cols);
}

RankCode psi(const QSystem& U) {
    Mat G(U.k, U.n);
    for (int j = 0; j < U.n; ++j)
        for (int i = 0; i < U.k; ++i) G.at(i, j) = U.basis.at(j, i);
    return make_code(U.F, std::move(G));
}

int point_weight(const QSystem& U, const std::vector<Elem>& P) {
    check(static_cast<int>(P.size()) == U.k, errc::dimension_mismatch, "point length differs from k");
    Mat line(1, U.k);
    line.set_row(0, P);
    Subspace W = flatten_ext_subspace(*U.F, line, U.k);
    return intersection(U.flat, W).dim();
}

int hyperplane_weight(const QSystem& U, const std::vector<Elem>& v) {
    Mat vm(1, U.k);
    vm.set_row(0, v);
    Subspace H = perp(span(U.full(), vm));
    Subspace Hf = flatten_ext_subspace(*U.F, H.basis, U.k);
    return intersection(U.flat, Hf).dim();
}

LinearSet linear_set(const QSystem& U, const Budget& budget) {
    budget.require(pow_q_n(*U.F, U.n), "linear set computation");
    std::map<std::vector<Elem>, std::uint64_t> hits;
    FieldView full = U.full();
    for_each_nonzero_combination(*U.F, U.basis, [&](const std::vector<Elem>& u) {
        ++hits[normalize_projective(full, u)];
    });
    LinearSet L;
    BigInt multiplicity_sum(0);
    const std::uint64_t q = U.F->q;
    for (const auto& [P, count] : hits) {
        // count = q^wt - 1 for the point weight wt
        std::uint64_t c = count + 1;
        int wt = 0;
        while (c > 1) {
            check(c % q == 0, errc::internal_inconsistency,
                  "linear set point count is not q^wt - 1");
            c /= q;
            ++wt;
        }
        L.weights[P] = wt;
        multiplicity_sum += (bpow(q, wt) - BigInt(1)).div_exact(BigInt(q) - BigInt(1));
    }
    BigInt expected = (pow_q_n(*U.F, U.n) - BigInt(1)).div_exact(BigInt(q) - BigInt(1));
    check(multiplicity_sum == expected, errc::internal_inconsistency,
          "linear set multiplicity identity failed");
    return L;
}

bool is_scattered(const QSystem& U, const Budget& budget) {
    LinearSet L = linear_set(U, budget);
    bool scattered = std::all_of(L.weights.begin(), L.weights.end(),
                                 [](const auto& kv) { return kv.second == 1; });
    BigInt max_points =
        (pow_q_n(*U.F, U.n) - BigInt(1)).div_exact(BigInt(U.F->q) - BigInt(1));
    check(scattered == (BigInt(L.num_points()) == max_points), errc::internal_inconsistency,
          "scattered criteria disagree");
    if (scattered)
        check(2 * U.n <= U.k * U.F->m, errc::internal_inconsistency,
              "scattered system violates n <= km/2");
    return scattered;
}

int system_min_distance(const QSystem& U, const Budget& budget) {
    ProjectivePointEnumerator pts(U.full(), U.k, budget);
    int best = -1;
    while (auto v = pts.next()) best = std::max(best, hyperplane_weight(U, *v));
    return U.n - best;
}

StandardEquationsResult standard_equations_check(const QSystem& U, int r, const Budget& budget) {
    check(r >= 1 && r <= U.k, errc::invalid_args, "subspace dimension out of range");
    StandardEquationsResult res;
    res.lhs = BigInt(0);
    SubspaceEnumerator en(U.full(), U.k, r, budget);
    while (auto H = en.next()) {
        Subspace Hf = flatten_ext_subspace(*U.F, H->basis, U.k);
        int d = intersection(U.flat, Hf).dim();
        res.lhs += bpow(U.F->q, d) - BigInt(1);
    }
    res.rhs = (pow_q_n(*U.F, U.n) - BigInt(1)) *
              gaussian_binomial(U.k - 1, r - 1, static_cast<std::uint64_t>(U.F->size));
    res.equal = res.lhs == res.rhs;
    return res;
}

std::optional<Mat> contained_ext_subspace(const QSystem& U, int l, const Budget& budget) {
    check(l >= 0 && l <= U.k, errc::invalid_args, "subspace dimension out of range");
    if (l == 0) return Mat(0, U.k);
    if (l * U.F->m > U.n) return std::nullopt;
    SubspaceEnumerator en(U.full(), U.k, l, budget);
    while (auto H = en.next()) {
        Subspace Hf = flatten_ext_subspace(*U.F, H->basis, U.k);
        if (contains(U.flat, Hf)) return H->basis;
    }
    return std::nullopt;
}

int linearity_index(const QSystem& U, const Budget& budget) {
    const int lmax = std::min(U.k, U.n / U.F->m);
    for (int l = lmax; l >= 1; --l)
        if (contained_ext_subspace(U, l, budget)) return l;
    return 0;
}

LinearityIndexReport linearity_index_report(const QSystem& U, const Budget& budget) {
    LinearityIndexReport rep;
    rep.direct = linearity_index(U, budget);
    // formula from the generalized weights of psi(U):
    // l = k - min{ r : d_r = n - (k - r) m }
    RankCode C = psi(U);
    const int m = U.F->m;
    for (int r = 1; r <= U.k; ++r) {
        if (generalized_rank_weight(C, r, budget) == U.n - (U.k - r) * m) {
            rep.via_weights = U.k - r;
            break;
        }
    }
    rep.discrepancy = !rep.via_weights || *rep.via_weights != rep.direct;
    check(rep.direct >= U.n - U.k * (m - 1), errc::internal_inconsistency,
          "linearity index below n - k(m-1)");
    return rep;
}

QSystem quotient_system(const QSystem& U, const std::vector<std::vector<Elem>>& T_gens,
                        const Budget& budget) {
    (void)budget;
    const FieldCtx& F = *U.F;
    const int k = U.k, m = F.m;
    std::vector<std::vector<Elem>> flat_rows;
    for (const auto& t : T_gens) {
        check(static_cast<int>(t.size()) == k, errc::dimension_mismatch,
              "T generator length differs from k");
        flat_rows.push_back(flatten_ext(F, t));
    }
    Subspace T_flat = span(subfield_of(F), k * m, flat_rows);
    // F_{q^m}-linearity: closure under multiplication by g
    for (int i = 0; i < T_flat.basis.rows; ++i) {
        std::vector<Elem> w = unflatten_ext(F, T_flat.basis.row(i), k);
        for (auto& c : w) c = F.mul(c, F.g());
        check(contains(T_flat, flatten_ext(F, w)), errc::not_linear_over_extension,
              "T is not an F_{q^m}-subspace");
    }
    check(contains(U.flat, T_flat), errc::not_contained, "T is not contained in U");
    check(T_flat.dim() % m == 0, errc::internal_inconsistency, "F_{q^m}-space of fractional dimension");
    const int l = T_flat.dim() / m;
    if (l == 0) return U;
    check(l < k, errc::invalid_args, "quotient by the full space");

    // F_{q^m}-reduced basis of T and the complement through non-pivot coordinates
    std::vector<std::vector<Elem>> t_rows;
    for (int i = 0; i < T_flat.basis.rows; ++i) t_rows.push_back(unflatten_ext(F, T_flat.basis.row(i), k));
    Mat T_ext = mat_from_rows(t_rows);
    std::vector<int> pivots;
    int rank = rref(U.full(), T_ext, &pivots);
    check(rank == l, errc::internal_inconsistency, "T basis rank mismatch");
    std::vector<bool> is_pivot(k, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> keep;
    for (int j = 0; j < k; ++j)
        if (!is_pivot[j]) keep.push_back(j);

    auto project = [&](std::vector<Elem> x) {
        for (int i = 0; i < l; ++i) {
            Elem c = x[pivots[i]];
            if (!c) continue;
            for (int j = 0; j < k; ++j) x[j] = F.sub(x[j], F.mul(c, T_ext.at(i, j)));
        }
        std::vector<Elem> out(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) out[j] = x[keep[j]];
        return out;
    };

    std::vector<std::vector<Elem>> gens;
    for (int i = 0; i < U.n; ++i) gens.push_back(project(U.basis.row(i)));
    QSystem Q = make_q_system(U.F, k - l, gens);
    check(Q.n == U.n - l * m, errc::internal_inconsistency,
          "quotient system has unexpected F_q-dimension");
    return Q;
}

QSystem shrink_scattered(const QSystem& U, const Budget& budget) {
    check(U.n > U.k, errc::not_scattered, "shrink requires a scattered system with n > k");
    check(is_scattered(U, budget), errc::not_scattered, "input system is not scattered");
    // hyperplanes of U in canonical order, expressed in U-coordinates
    SubspaceEnumerator en(U.sub(), U.n, U.n - 1, budget);
    while (auto W = en.next()) {
        Mat V = mat_mul(U.full(), W->basis, U.basis); // (n-1) x k vectors
        if (span(U.full(), V).dim() != U.k) continue;
        std::vector<std::vector<Elem>> gens;
        for (int i = 0; i < V.rows; ++i) gens.push_back(V.row(i));
        QSystem S = make_q_system(U.F, U.k, gens);
        check(S.n == U.n - 1, errc::internal_inconsistency, "shrunk system dimension mismatch");
        return S;
    }
    fail(errc::no_spanning_subspace, "no spanning hyperplane of U exists");
}

} // namespace rankmet
