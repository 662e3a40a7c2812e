#include "rankmet/minimal.hpp"

#include <algorithm>
#include <random>

namespace rankmet {

const char* min_method_name(MinMethod m) {
    switch (m) {
        case MinMethod::pairwise: return "pairwise";
        case MinMethod::cutting: return "cutting";
        case MinMethod::lambda_sum: return "lambda-sum";
        case MinMethod::all: return "all";
    }
    return "?";
}

MinMethod parse_min_method(const std::string& s) {
    if (s == "pairwise") return MinMethod::pairwise;
    if (s == "cutting") return MinMethod::cutting;
    if (s == "lambda-sum" || s == "lambda_sum") return MinMethod::lambda_sum;
    if (s == "all") return MinMethod::all;
    fail(errc::invalid_args, "unknown minimality method: " + s);
}

namespace {

// projective message representatives together with their codewords
struct ClassData {
    std::vector<std::vector<Elem>> msgs;
    std::vector<std::vector<Elem>> words;
};

ClassData message_classes(const RankCode& C, const Budget& budget) {
    ClassData cd;
    ProjectivePointEnumerator en(C.full(), C.k, budget);
    while (auto x = en.next()) {
        cd.words.push_back(codeword(C, *x));
        cd.msgs.push_back(std::move(*x));
    }
    return cd;
}

// consistency assertion from the support-inclusion duality: supports nest
// exactly when the hyperplane traces of U nest the other way
void assert_rev_inclusion(const RankCode& C, const std::vector<Elem>& u,
                          const std::vector<Elem>& v) {
    QSystem U = phi(C);
    Mat um(1, C.k), vm(1, C.k);
    um.set_row(0, u);
    vm.set_row(0, v);
    Subspace Hu = flatten_ext_subspace(*C.F, perp(span(C.full(), um)).basis, C.k);
    Subspace Hv = flatten_ext_subspace(*C.F, perp(span(C.full(), vm)).basis, C.k);
    bool traces_nest = contains(intersection(U.flat, Hu), intersection(U.flat, Hv));
    check(traces_nest, errc::internal_inconsistency,
          "support inclusion witness fails the hyperplane-trace duality");
}

MinimalityReport minimality_pairwise(const RankCode& C, const Budget& budget) {
    MinimalityReport rep;
    rep.method = MinMethod::pairwise;
    BigInt classes = projective_point_count(C.F->size, C.k);
    budget.require(classes * classes, "pairwise support scan");
    ClassData cd = message_classes(C, budget);
    const size_t nc = cd.words.size();
    std::vector<Subspace> supports;
    supports.reserve(nc);
    for (const auto& w : cd.words) supports.push_back(rank_support(*C.F, w));
    for (size_t i = 0; i < nc; ++i)
        for (size_t j = 0; j < nc; ++j) {
            if (i == j) continue;
            if (contains(supports[j], supports[i])) {
                rep.minimal = false;
                rep.witness = MinimalityWitness{cd.msgs[i], cd.msgs[j], cd.words[i], cd.words[j],
                                                std::nullopt};
                if (is_nondegenerate(C)) assert_rev_inclusion(C, cd.msgs[i], cd.msgs[j]);
                return rep;
            }
        }
    rep.minimal = true;
    return rep;
}

MinimalityReport minimality_cutting(const RankCode& C, const Budget& budget) {
    MinimalityReport rep;
    rep.method = MinMethod::cutting;
    QSystem U = phi(C);
    const int k = C.k;

    struct Offender {
        std::vector<Elem> normal;
        Subspace lifted; // <H cap U>_{F_{q^m}}, flattened
    };
    std::optional<Offender> bad;
    int min_trace_dim = C.n + 1;

    ProjectivePointEnumerator pts(C.full(), k, budget);
    while (auto v = pts.next()) {
        Mat vm(1, k);
        vm.set_row(0, *v);
        Subspace H = perp(span(C.full(), vm));
        Subspace Hf = flatten_ext_subspace(*C.F, H.basis, k);
        Subspace trace = intersection(U.flat, Hf);
        min_trace_dim = std::min(min_trace_dim, trace.dim());
        // lift the trace back over F_{q^m}
        std::vector<std::vector<Elem>> rows;
        for (int i = 0; i < trace.basis.rows; ++i)
            rows.push_back(unflatten_ext(*C.F, trace.basis.row(i), k));
        Subspace lifted_ext = span(C.full(), k, rows);
        if (lifted_ext.dim() != k - 1) {
            bad = Offender{*v, flatten_ext_subspace(*C.F, lifted_ext.basis, k)};
            break;
        }
    }
    if (!bad) {
        rep.minimal = true;
        check(min_trace_dim >= k - 1, errc::internal_inconsistency,
              "cutting system with a hyperplane trace below q^{k-1}");
        return rep;
    }
    rep.minimal = false;
    // rebuild a pairwise witness: any second hyperplane through the span of
    // the trace yields nested supports
    ProjectivePointEnumerator pts2(C.full(), k, budget);
    while (auto u = pts2.next()) {
        if (*u == bad->normal) continue;
        Mat um(1, k);
        um.set_row(0, *u);
        Subspace Hu = flatten_ext_subspace(*C.F, perp(span(C.full(), um)).basis, k);
        if (!contains(Hu, bad->lifted)) continue;
        MinimalityWitness w;
        w.u = *u;
        w.v = bad->normal;
        w.cu = codeword(C, w.u);
        w.cv = codeword(C, w.v);
        w.hyperplane_normal = bad->normal;
        check(contains(rank_support(*C.F, w.cv), rank_support(*C.F, w.cu)),
              errc::internal_inconsistency, "cutting witness fails pairwise re-verification");
        rep.witness = std::move(w);
        return rep;
    }
    fail(errc::internal_inconsistency, "offending hyperplane without a second cover");
}

MinimalityReport minimality_lambda_sum(const RankCode& C, const Budget& budget) {
    MinimalityReport rep;
    rep.method = MinMethod::lambda_sum;
    const std::uint64_t q = C.F->q;
    BigInt classes = projective_point_count(C.F->size, C.k);
    budget.require(classes * classes, "lambda-sum pair scan");
    ClassData cd = message_classes(C, budget);
    const size_t nc = cd.words.size();
    std::vector<int> ranks(nc);
    for (size_t i = 0; i < nc; ++i) ranks[i] = rank_weight(*C.F, cd.words[i]);
    // everything scaled by q^n: both sides become exact integers
    std::vector<BigInt> qpow(C.n + 1);
    for (int i = 0; i <= C.n; ++i) qpow[i] = bpow(q, i);
    const std::uint64_t qm = C.F->size;
    FieldView full = C.full();
    for (size_t i = 0; i < nc; ++i)
        for (size_t j = 0; j < nc; ++j) {
            if (i == j) continue;
            // c = words[i], c' = words[j]
            BigInt lhs(0);
            for (std::uint64_t l = 1; l < qm; ++l) {
                Elem lam = static_cast<Elem>(l);
                std::vector<Elem> w(cd.words[i]);
                for (int t = 0; t < C.n; ++t)
                    w[t] = C.F->add(w[t], C.F->mul(lam, cd.words[j][t]));
                lhs += qpow[C.n - rank_weight(*C.F, w)];
            }
            BigInt rhs = BigInt(qm - 1) * qpow[C.n - ranks[i]] - qpow[C.n - ranks[j]] + qpow[C.n];
            if (lhs == rhs) {
                rep.minimal = false;
                // orient the witness along the actual support inclusion
                Subspace si = rank_support(*C.F, cd.words[i]);
                Subspace sj = rank_support(*C.F, cd.words[j]);
                MinimalityWitness w;
                if (contains(sj, si)) {
                    w = {cd.msgs[i], cd.msgs[j], cd.words[i], cd.words[j], std::nullopt};
                } else {
                    check(contains(si, sj), errc::internal_inconsistency,
                          "lambda-sum equality without a support inclusion");
                    w = {cd.msgs[j], cd.msgs[i], cd.words[j], cd.words[i], std::nullopt};
                }
                rep.witness = std::move(w);
                return rep;
            }
        }
    (void)full;
    rep.minimal = true;
    return rep;
}

} // namespace

MinimalityReport is_minimal(const RankCode& C, MinMethod method, const Budget& budget) {
    check(C.k >= 1, errc::invalid_args, "minimality of the zero code is undefined");
    const RankCode* target = &C;
    RankCode embedded;
    if (!is_nondegenerate(C)) {
        embedded = re_embed(C);
        target = &embedded;
    }
    switch (method) {
        case MinMethod::pairwise: return minimality_pairwise(*target, budget);
        case MinMethod::cutting: return minimality_cutting(*target, budget);
        case MinMethod::lambda_sum: return minimality_lambda_sum(*target, budget);
        case MinMethod::all: {
            MinimalityReport p = minimality_pairwise(*target, budget);
            MinimalityReport c = minimality_cutting(*target, budget);
            MinimalityReport l = minimality_lambda_sum(*target, budget);
            check(p.minimal == c.minimal && c.minimal == l.minimal, errc::internal_inconsistency,
                  "minimality methods disagree");
            MinimalityReport rep = p;
            rep.method = MinMethod::all;
            return rep;
        }
    }
    fail(errc::invalid_args, "unknown minimality method");
}

bool is_linear_cutting_blocking_set(const QSystem& U, const Budget& budget) {
    return minimality_cutting(psi(U), budget).minimal;
}

BoundsLedger bounds_ledger(const RankCode& C, const Budget& budget) {
    check(C.k >= 1, errc::invalid_args, "bounds ledger needs a nonzero code");
    RankCode core = is_nondegenerate(C) ? C : re_embed(C);
    BoundsLedger L;
    L.q = C.F->q;
    L.m = C.F->m;
    L.n = C.n;
    L.k = C.k;
    L.effective_length = core.n;
    WeightDistribution W = weight_distribution(core, budget);
    L.d = W.min_distance();
    L.w_max = W.max_rank();
    L.linearity = linearity_index(phi(core), budget);
    L.minimal = is_minimal(core, MinMethod::cutting, budget).minimal;

    const int np = L.effective_length, k = L.k, m = L.m, l = L.linearity;
    L.n_ge_k_plus_m_minus_1 = np >= k + m - 1;
    L.wmax_le_n_minus_k_plus_1 = L.w_max <= np - k + 1;
    L.sufficiency_n_ge_km_minus_m_plus_1 = np >= (k - 1) * m + 1;
    L.gen_lower_bound_ok = !(L.minimal && k - l >= 2) || (np - k >= (l + 1) * (m - 1));
    {
        // min over hyperplanes of dim(H cap U) >= k-1, equivalent to
        // w_max <= n - k + 1 through rk(vG) = n - dim(H_v cap U)
        L.hyperplane_size_ge_q_pow_k_minus_1 = L.w_max <= np - k + 1;
    }
    {
        // (q^{n+m} - q^n)(q^m - 1) < q^{2m} (q^n - q^{n-d}), the integer form
        // of the Ashikhmin-Barg transfer; holds exactly when d = m
        BigInt qn = bpow(L.q, np), qm_ = bpow(L.q, m);
        BigInt lhs = (qn * qm_ - qn) * (qm_ - BigInt(1));
        BigInt rhs = qm_ * qm_ * (qn - bpow(L.q, np - L.d));
        L.ab_condition_holds = lhs < rhs;
        check(L.ab_condition_holds == (L.d == m), errc::internal_inconsistency,
              "AB condition disagrees with d == m");
    }
    if (L.minimal) {
        check(k < 2 || L.n_ge_k_plus_m_minus_1, errc::internal_inconsistency,
              "minimal code violates n >= k+m-1");
        check(L.wmax_le_n_minus_k_plus_1, errc::internal_inconsistency,
              "minimal code violates w <= n-k+1");
        check(L.gen_lower_bound_ok, errc::internal_inconsistency,
              "minimal code violates n-k >= (l+1)(m-1)");
    }
    if (L.sufficiency_n_ge_km_minus_m_plus_1)
        check(L.minimal, errc::internal_inconsistency,
              "code with n >= (k-1)m+1 reported non-minimal");
    return L;
}

RankCode construct_simplex(FieldPtr F, int k, std::optional<Elem> alpha) {
    check(k >= 1, errc::invalid_args, "simplex construction needs k >= 1");
    const int m = F->m;
    Elem a = alpha.value_or(F->g());
    // alpha must generate the extension: {1, a, ..., a^{m-1}} F_q-independent
    {
        std::vector<Elem> pows(m);
        Elem cur = 1;
        for (int i = 0; i < m; ++i) {
            pows[i] = cur;
            cur = F->mul(cur, a);
        }
        Mat E = gamma_expand(*F, pows);
        check(rref(subfield_of(*F), E, nullptr) == m, errc::invalid_args,
              "alpha does not generate F_{q^m} over F_q");
    }
    Mat G(k, k * m);
    Elem apow = 1;
    for (int b = 0; b < m; ++b) {
        for (int i = 0; i < k; ++i) G.at(i, b * k + i) = apow;
        apow = F->mul(apow, a);
    }
    RankCode C = make_code(std::move(F), std::move(G));
    check(is_nondegenerate(C), errc::internal_inconsistency, "simplex code is degenerate");
    return C;
}

Scattered633 construct_scattered_633(const Budget& budget) {
    Scattered633 out;
    const std::vector<int> mod12 = {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};
    out.tower = build_field(2, 4, 3, mod12);
    const FieldCtx& T = *out.tower;
    check(T.subfield_stride == 273, errc::internal_inconsistency, "F_16 stride is not 273");
    Elem lambda = T.gpow(273);
    check(T.add(T.add(T.pow(lambda, 4), lambda), 1) == 0, errc::internal_inconsistency,
          "lambda = eta^273 does not satisfy lambda^4 + lambda + 1 = 0");

    out.F16 = build_field(2, 1, 4);
    const FieldCtx& K = *out.F16;
    check(K.modulus == std::vector<int>({1, 1, 0, 0, 1}), errc::internal_inconsistency,
          "F_16 modulus is not x^4 + x + 1");

    // subfield element g^{273 j} of the tower corresponds to lambda^j in F_16
    auto to_f16 = [&](Elem x) -> Elem {
        if (x == 0) return 0;
        std::uint32_t lg = T.log(x);
        check(lg % 273 == 0, errc::internal_inconsistency, "element outside the embedded F_16");
        return K.gpow(lg / 273);
    };

    const std::uint64_t exps[6] = {6, 22, 63, 89, 166, 289};
    Mat G(3, 6);
    for (int j = 0; j < 6; ++j) {
        std::vector<Elem> coords = T.expand(T.gpow(exps[j])); // over {1, eta, eta^2}
        for (int i = 0; i < 3; ++i) G.at(i, j) = to_f16(coords[i]);
    }
    // the lambda-power generator matrix, row by row
    auto L = [&](int i) { return K.gpow(static_cast<std::uint64_t>(i)); };
    const Mat expected = mat_from_rows({
        {L(4), L(10), L(8), L(3), L(9), L(7)},
        {L(14), L(8), L(1), L(8), 0, L(8)},
        {L(10), 0, L(6), L(5), L(11), L(3)},
    });
    check(G == expected, errc::internal_inconsistency,
          "expansion does not reproduce the lambda-power generator matrix");

    out.C = make_code(out.F16, G);
    out.U = phi(out.C);
    check(out.U.n == 6, errc::internal_inconsistency, "system is not 6-dimensional");
    check(is_scattered(out.U, budget), errc::internal_inconsistency, "system is not scattered");
    check(is_linear_cutting_blocking_set(out.U, budget), errc::internal_inconsistency,
          "system is not a linear cutting blocking set");
    for (MinMethod mm : {MinMethod::pairwise, MinMethod::cutting, MinMethod::lambda_sum})
        check(is_minimal(out.C, mm, budget).minimal, errc::internal_inconsistency,
              "scattered construction is not minimal");
    check(out.C.n == out.C.k + K.m - 1, errc::internal_inconsistency,
          "n != k + m - 1 for the [6,3] construction"); // 6 = 3 + 4 - 1

    // diagnostics only, nothing asserted: the printed condition
    // x^64 + alpha x^3 + beta = 0 is affine and no element of U satisfies
    // it; its q-linearized reading x^64 + alpha x^8 + beta x = 0 vanishes on
    // all of U (alpha = eta^64, beta = eta^7)
    {
        Elem alpha = T.gpow(64), beta = T.gpow(7);
        std::vector<Elem> gens(6);
        for (int j = 0; j < 6; ++j) gens[j] = T.gpow(exps[j]);
        for (std::uint32_t mask = 0; mask < 64; ++mask) {
            Elem x = 0;
            for (int j = 0; j < 6; ++j)
                if (mask & (1u << j)) x = T.add(x, gens[j]);
            if (T.add(T.add(T.pow(x, 64), T.mul(alpha, T.pow(x, 3))), beta) == 0)
                ++out.poly_condition_hits;
            if (T.add(T.add(T.pow(x, 64), T.mul(alpha, T.pow(x, 8))), T.mul(beta, x)) == 0)
                ++out.linearized_condition_hits;
        }
    }
    return out;
}

MinimalityReport minimal_from_scattered(const QSystem& U, const Budget& budget) {
    const int m = U.F->m;
    check(U.k == 3, errc::hypothesis_violated, "scattered criterion needs k = 3");
    check(U.n >= m + 2, errc::hypothesis_violated, "scattered criterion needs n >= m+2");
    check(is_scattered(U, budget), errc::hypothesis_violated, "system is not scattered");
    // the proof's intermediate fact: every hyperplane meets L_U in at least
    // (q^{n-m}-1)/(q-1) >= q+1 points
    LinearSet L = linear_set(U, budget);
    const std::uint64_t q = U.F->q;
    BigInt floor_pts = (bpow(q, U.n - m) - BigInt(1)).div_exact(BigInt(q) - BigInt(1));
    check(floor_pts >= BigInt(q + 1), errc::internal_inconsistency,
          "blocking floor below q+1");
    ProjectivePointEnumerator pts(U.full(), U.k, budget);
    while (auto v = pts.next()) {
        std::uint64_t on_hyperplane = 0;
        for (const auto& [P, wt] : L.weights) {
            Elem dot = 0;
            for (int i = 0; i < U.k; ++i) dot = U.F->add(dot, U.F->mul((*v)[i], P[i]));
            if (dot == 0) ++on_hyperplane;
        }
        check(BigInt(on_hyperplane) >= floor_pts, errc::internal_inconsistency,
              "hyperplane meets the linear set in too few points");
    }
    MinimalityReport rep = is_minimal(psi(U), MinMethod::cutting, budget);
    check(rep.minimal, errc::internal_inconsistency,
          "scattered system with n >= m+2 failed the cutting criterion");
    return rep;
}

RankCode extend_minimal(const RankCode& C, const std::vector<Elem>& v, const Budget& budget,
                        bool verify_output) {
    check(static_cast<int>(v.size()) == C.k, errc::dimension_mismatch,
          "extension column length differs from k");
    check(is_minimal(C, MinMethod::cutting, budget).minimal, errc::not_minimal_input,
          "extension requires a minimal input code");
    Mat G(C.k, C.n + 1);
    for (int i = 0; i < C.k; ++i) {
        for (int j = 0; j < C.n; ++j) G.at(i, j) = C.G.at(i, j);
        G.at(i, C.n) = v[i];
    }
    RankCode ext = make_code(C.F, std::move(G));
    if (verify_output)
        check(is_minimal(ext, MinMethod::pairwise, budget).minimal, errc::internal_inconsistency,
              "extension of a minimal code is not minimal");
    return ext;
}

Rational existence_bound(std::uint64_t q, int m, int n, int k) {
    check(n >= k && k >= 2, errc::invalid_args, "existence bound needs n >= k >= 2");
    check(m >= 1, errc::invalid_args, "existence bound needs m >= 1");
    factor_prime_power(q); // validates q
    const std::uint64_t mu = static_cast<std::uint64_t>(m);
    Rational first(
        (bpow(q, mu * n) - BigInt(1)) * (bpow(q, mu * (n - 1)) - BigInt(1)),
        (bpow(q, mu * k) - BigInt(1)) * (bpow(q, mu * (k - 1)) - BigInt(1)));
    Rational sum(BigInt(0));
    BigInt qm = bpow(q, mu);
    for (int i = 2; i <= m; ++i) {
        BigInt prod(1);
        for (int j = 0; j < i; ++j) prod *= bpow(q, n) - bpow(q, j);
        Rational term =
            Rational(gaussian_binomial(m, i, q)) * Rational(prod) *
            Rational(bpow(q, mu * i) - qm, (qm - BigInt(1)) * (qm - BigInt(1)));
        sum = sum + term;
    }
    Rational bound = first - Rational(BigInt(1), BigInt(2)) * sum;
    if (m >= 2 && k >= 2 && n == 2 * k + m - 2)
        check(bound.is_positive(), errc::internal_inconsistency,
              "existence bound fails to be positive at n = 2k+m-2");
    return bound;
}

SearchResult search_minimal(std::uint64_t q, int m, int n, int k, SearchStrategy strategy,
                            const Budget& budget, std::uint64_t seed,
                            std::uint64_t random_trials) {
    check(n >= k && k >= 1 && m >= 1, errc::invalid_args, "search needs n >= k >= 1, m >= 1");
    auto [p, e] = factor_prime_power(q);
    FieldPtr F = build_field(p, e, m);
    SearchResult res;
    res.candidates_checked = BigInt(0);
    if (strategy == SearchStrategy::exhaustive) {
        SubspaceEnumerator en(fullfield_of(*F), n, k, budget);
        while (auto S = en.next()) {
            res.candidates_checked += BigInt(1);
            RankCode C = make_code(F, S->basis);
            MinimalityReport rep = is_minimal(C, MinMethod::cutting, budget);
            if (rep.minimal) {
                res.code = std::move(C);
                res.report = std::move(rep);
                res.certificate = "minimal code found by exhaustive scan";
                return res;
            }
        }
        res.exhausted = true;
        res.certificate = "exhaustive scan: no minimal [" + std::to_string(n) + "," +
                          std::to_string(k) + "] code exists";
        if (k >= 2 && n < k + m - 1)
            res.certificate += "; consistent with the bound n >= k+m-1";
        return res;
    }
    std::mt19937_64 rng(seed);
    FieldView full = fullfield_of(*F);
    for (std::uint64_t t = 0; t < random_trials; ++t) {
        Mat G(k, n);
        for (auto& x : G.a) x = static_cast<Elem>(rng() % F->size);
        Mat copy = G;
        if (rref(full, copy, nullptr) != k) continue;
        res.candidates_checked += BigInt(1);
        RankCode C = make_code(F, G);
        MinimalityReport rep = is_minimal(C, MinMethod::cutting, budget);
        if (rep.minimal) {
            res.code = std::move(C);
            res.report = std::move(rep);
            res.certificate = "minimal code found by seeded random search";
            return res;
        }
    }
    res.certificate = "random search exhausted its trial budget without a hit";
    return res;
}

RankCode construct_k_minus_1_m(FieldPtr F, int k, const Budget& budget) {
    const int m = F->m;
    check(k >= 3, errc::invalid_args, "construction needs k >= 3");
    if (m <= 2) {
        // l >= n - k(m-1) = k - m >= k - 2 rules out minimality
        fail(errc::hypothesis_violated,
             "no nondegenerate minimal [(k-1)m,k] code exists for m <= 2: the linearity "
             "index satisfies l >= k-m >= k-2");
    }
    Elem a = F->g();
    std::vector<std::vector<Elem>> gens;
    // {(v | 0,0,0)}: full F_{q^m}-space on the first k-3 coordinates
    for (int j = 0; j < k - 3; ++j)
        for (int t = 0; t < m; ++t) {
            std::vector<Elem> v(k, 0);
            v[j] = F->gamma[t];
            gens.push_back(std::move(v));
        }
    // V' = <a^i e_j : 0 <= i <= m-2, j in the last three coordinates>
    for (int j = k - 3; j < k; ++j) {
        Elem apow = 1;
        for (int i = 0; i <= m - 2; ++i) {
            std::vector<Elem> v(k, 0);
            v[j] = apow;
            gens.push_back(std::move(v));
            apow = F->mul(apow, a);
        }
    }
    QSystem Uprime = make_q_system(F, k, gens);
    check(Uprime.n == (k - 3) * m + 3 * (m - 1), errc::internal_inconsistency,
          "direct-sum system has unexpected dimension");
    const int target = (k - 1) * m;

    QSystem U = Uprime;
    if (Uprime.n != target) {
        // lexicographically first subsystem of the right dimension that
        // still spans the ambient space
        bool found = false;
        SubspaceEnumerator en(subfield_of(*F), Uprime.n, target, budget);
        while (auto W = en.next()) {
            Mat V = mat_mul(fullfield_of(*F), W->basis, Uprime.basis);
            if (span(fullfield_of(*F), V).dim() != k) continue;
            std::vector<std::vector<Elem>> sub_gens;
            for (int i = 0; i < V.rows; ++i) sub_gens.push_back(V.row(i));
            U = make_q_system(F, k, sub_gens);
            found = true;
            break;
        }
        check(found, errc::internal_inconsistency, "no spanning subsystem of dimension (k-1)m");
    }
    check(U.n == target, errc::internal_inconsistency, "truncation missed the target dimension");

    RankCode C = psi(U);
    // three-way characterization: minimal <=> l < k-2 <=> d_2 > m
    int l = linearity_index(U, budget);
    check(l <= k - 3, errc::internal_inconsistency, "truncated system has linearity index > k-3");
    bool minimal = is_minimal(C, MinMethod::cutting, budget).minimal;
    int d2 = generalized_rank_weight(C, 2, budget);
    check(minimal == (l < k - 2) && minimal == (d2 > m), errc::internal_inconsistency,
          "characterization of [(k-1)m, k] minimal codes failed");
    check(minimal, errc::internal_inconsistency, "construction produced a non-minimal code");
    return C;
}

std::pair<int, int> factor_prime_power(std::uint64_t q) {
    check(q >= 2, errc::invalid_args, "q must be a prime power >= 2");
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        int e = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        check(r == 1, errc::invalid_args, std::to_string(q) + " is not a prime power");
        return {static_cast<int>(p), e};
    }
    return {static_cast<int>(q), 1}; // q itself prime
}

} // namespace rankmet
