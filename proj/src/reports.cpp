#include "rankmet/reports.hpp"

namespace rankmet {

namespace {

template <typename Fn>
void report_field(Json& out, const char* name, bool& budget_hit, Fn&& fn) {
    try {
        out[name] = fn();
    } catch (const BudgetError& e) {
        Json j;
        j["status"] = "budget_exceeded";
        j["required"] = e.required();
        out[name] = std::move(j);
        budget_hit = true;
    }
}

struct SuiteRunner {
    Json checks = Json::array();
    bool all_pass = true;

    void add(const std::string& name, const Json& expected, const Json& actual) {
        Json c;
        c["name"] = name;
        c["expected"] = expected;
        c["actual"] = actual;
        bool pass = expected == actual;
        c["pass"] = pass;
        all_pass = all_pass && pass;
        checks.push_back(std::move(c));
    }
};

void suite_correspondence(SuiteRunner& S, const RankCode& C, const Budget& bud) {
    QSystem U = phi(C);
    S.add("phi_preserves_n", C.n, U.n);
    S.add("phi_preserves_k", C.k, U.k);
    int d_code = min_rank_distance(C, bud);
    S.add("phi_preserves_d", d_code, system_min_distance(U, bud));
    {
        bool ok = true;
        ProjectivePointEnumerator pts(C.full(), C.k, bud);
        while (auto v = pts.next())
            if (hyperplane_weight(U, *v) != C.n - rank_weight(*C.F, codeword(C, *v))) ok = false;
        S.add("hyperplane_weight_law", true, ok);
    }
    for (int r = 1; r < C.k; ++r) {
        StandardEquationsResult se = standard_equations_check(U, r, bud);
        S.add("standard_equations_r" + std::to_string(r), big_to_json(se.rhs), big_to_json(se.lhs));
    }
    S.add("weight_correspondence", true, verify_weight_correspondence(C, bud));
    {
        HammingCode CH = associated_code(C, bud);
        std::vector<int> dr = generalized_rank_weights(C, bud);
        bool ok = true;
        const std::uint64_t q = C.F->q;
        for (int r = 1; r <= C.k; ++r) {
            BigInt expect = (bpow(q, C.n) - bpow(q, C.n - dr[r])).div_exact(BigInt(q) - BigInt(1));
            if (BigInt(generalized_hamming_weight(CH, r, bud)) != expect) ok = false;
        }
        S.add("generalized_weight_correspondence", true, ok);
    }
}

void suite_identities(SuiteRunner& S, const RankCode& C, const Budget& bud) {
    for (int r = 0; r <= C.n; ++r) {
        PlessResult pl = pless_check(C, r, bud);
        S.add("pless_r" + std::to_string(r), true, pl.equal);
    }
    if (is_nondegenerate(C)) {
        TotalWeightStats st = total_weight_stats(C, bud);
        S.add("mean_formula", true, st.mean_matches);
        S.add("variance_equality_iff_rank2", st.rank2_nondegenerate, st.variance_equality);
    }
}

void suite_minimality(SuiteRunner& S, const RankCode& C, const Budget& bud) {
    MinimalityReport p = is_minimal(C, MinMethod::pairwise, bud);
    MinimalityReport c = is_minimal(C, MinMethod::cutting, bud);
    MinimalityReport l = is_minimal(C, MinMethod::lambda_sum, bud);
    S.add("pairwise_vs_cutting", p.minimal, c.minimal);
    S.add("pairwise_vs_lambda_sum", p.minimal, l.minimal);
    if (!p.minimal && p.witness) {
        const MinimalityWitness& w = *p.witness;
        bool nested = contains(rank_support(*C.F, w.cv), rank_support(*C.F, w.cu));
        S.add("witness_reverifies", true, nested);
    }
    if (is_nondegenerate(C)) {
        S.add("hamming_bridge", p.minimal, is_hamming_minimal(associated_code(C, bud), bud));
        S.add("cutting_set_equivalence", p.minimal, is_linear_cutting_blocking_set(phi(C), bud));
    }
    BoundsLedger L = bounds_ledger(C, bud);
    if (L.minimal && C.k >= 2) {
        S.add("minimal_length_bound", true, L.n_ge_k_plus_m_minus_1);
        S.add("minimal_max_rank_bound", true, L.wmax_le_n_minus_k_plus_1);
    }
    if (L.sufficiency_n_ge_km_minus_m_plus_1) S.add("sufficiency_implies_minimal", true, L.minimal);
    S.add("ab_condition_iff_d_eq_m", L.d == L.m, L.ab_condition_holds);
}

} // namespace

AnalyzeOutcome analyze_report(const RankCode& C, MinMethod method, const Budget& bud) {
    AnalyzeOutcome out;
    Json& rep = out.report;
    rep["schema"] = kSchemaReport;
    rep["kind"] = "analyze";
    Json params;
    params["q"] = C.F->q;
    params["m"] = C.F->m;
    params["n"] = C.n;
    params["k"] = C.k;
    rep["parameters"] = std::move(params);

    NondegeneracyReport nd;
    report_field(rep, "nondegeneracy", out.budget_hit, [&] {
        nd = nondegeneracy_report(C, bud);
        Json j;
        j["nondegenerate"] = nd.nondegenerate;
        j["effective_length"] = nd.effective_length;
        j["dual_distance_ge2"] = nd.dual_distance_ge2;
        j["rank2_nondegenerate"] = nd.rank2_nondegenerate;
        return j;
    });
    report_field(rep, "effective_length", out.budget_hit,
                 [&] { return Json(effective_length(C)); });
    WeightDistribution W;
    report_field(rep, "weight_distribution", out.budget_hit, [&] {
        W = weight_distribution(C, bud);
        return distribution_to_json(W);
    });
    report_field(rep, "d", out.budget_hit, [&] { return Json(W.min_distance()); });
    report_field(rep, "w_rk", out.budget_hit, [&] { return Json(W.max_rank()); });
    report_field(rep, "one_weight", out.budget_hit, [&] { return Json(W.one_weight()); });
    report_field(rep, "generalized_weights", out.budget_hit, [&]() -> Json {
        if (!nd.nondegenerate) return Json("degenerate");
        std::vector<int> d = generalized_rank_weights(C, bud);
        Json arr = Json::array();
        for (int r = 1; r <= C.k; ++r) arr.push_back(d[r]);
        return arr;
    });
    report_field(rep, "linearity_index", out.budget_hit, [&]() -> Json {
        if (!nd.nondegenerate) return Json("degenerate");
        LinearityIndexReport li = linearity_index_report(phi(C), bud);
        Json j;
        j["direct"] = li.direct;
        if (li.via_weights) j["via_weights"] = *li.via_weights;
        j["discrepancy"] = li.discrepancy;
        return j;
    });
    report_field(rep, "minimality", out.budget_hit,
                 [&] { return minimality_to_json(is_minimal(C, method, bud)); });
    report_field(rep, "bounds_ledger", out.budget_hit,
                 [&] { return bounds_to_json(bounds_ledger(C, bud)); });
    return out;
}

VerifyOutcome verify_report(const RankCode& C, const std::optional<QSystem>& system,
                            const Json& raw, const std::string& suite, const Budget& bud) {
    check(suite == "correspondence" || suite == "identities" || suite == "minimality" ||
              suite == "all",
          errc::invalid_args, "unknown suite: " + suite);
    VerifyOutcome out;
    Json& rep = out.report;
    rep["schema"] = kSchemaReport;
    rep["kind"] = "verify";
    rep["suite"] = suite;
    SuiteRunner S;
    try {
        if (suite == "correspondence" || suite == "all") suite_correspondence(S, C, bud);
        if (suite == "identities" || suite == "all") suite_identities(S, C, bud);
        if (suite == "minimality" || suite == "all") suite_minimality(S, C, bud);
        if (system && (suite == "minimality" || suite == "all")) {
            S.add("system_cutting_matches_code_minimality",
                  is_minimal(C, MinMethod::cutting, bud).minimal,
                  is_linear_cutting_blocking_set(*system, bud));
        }
        if (raw.contains("expect")) {
            const Json& ex = raw.at("expect");
            if (ex.contains("minimal")) {
                MinimalityReport mr = is_minimal(C, MinMethod::cutting, bud);
                S.add("expected_minimal", ex.at("minimal"), Json(mr.minimal));
                if (!mr.minimal && mr.witness)
                    S.checks.back()["witness"] = minimality_to_json(mr)["witness"];
            }
            if (ex.contains("d")) S.add("expected_d", ex.at("d"), Json(min_rank_distance(C, bud)));
        }
    } catch (const BudgetError& e) {
        Json c;
        c["name"] = "budget";
        c["status"] = "budget_exceeded";
        c["required"] = e.required();
        S.checks.push_back(std::move(c));
        out.budget_hit = true;
    }
    rep["checks"] = S.checks;
    rep["pass"] = S.all_pass;
    out.all_pass = S.all_pass;
    return out;
}

Json construct_code_file(const std::string& kind, std::uint64_t q, int m, int k,
                         const std::optional<RankCode>& base, const std::vector<Elem>& column,
                         const Budget& bud) {
    RankCode C;
    Json extras;
    if (kind == "simplex") {
        auto [p, e] = factor_prime_power(q);
        C = construct_simplex(build_field(p, e, m), k);
    } else if (kind == "scattered633") {
        Scattered633 sc = construct_scattered_633(bud);
        C = sc.C;
        extras["system"] = system_to_json(sc.U);
        extras["poly_condition_hits"] = sc.poly_condition_hits;
        extras["linearized_condition_hits"] = sc.linearized_condition_hits;
    } else if (kind == "km1m") {
        auto [p, e] = factor_prime_power(q);
        C = construct_k_minus_1_m(build_field(p, e, m), k, bud);
    } else if (kind == "extend") {
        check(base.has_value(), errc::invalid_args, "extend needs a base code");
        C = extend_minimal(*base, column, bud, true);
    } else {
        fail(errc::invalid_args, "unknown construction: " + kind);
    }
    Json out = code_to_json(C);
    out["construction"] = kind;
    Json expect;
    expect["minimal"] = true;
    expect["d"] = min_rank_distance(C, bud);
    out["expect"] = std::move(expect);
    for (const auto& [key, value] : extras.items()) out[key] = value;
    return out;
}

Json search_report(std::uint64_t q, int m, int n, int k, const std::string& strategy,
                   std::uint64_t trials, std::uint64_t seed, const Budget& bud) {
    check(strategy == "exhaustive" || strategy == "random", errc::invalid_args,
          "unknown strategy: " + strategy);
    SearchStrategy st =
        strategy == "random" ? SearchStrategy::random : SearchStrategy::exhaustive;
    SearchResult res = search_minimal(q, m, n, k, st, bud, seed, trials);
    Json rep;
    rep["schema"] = kSchemaReport;
    rep["kind"] = "search";
    Json params;
    params["q"] = q;
    params["m"] = m;
    params["n"] = n;
    params["k"] = k;
    params["strategy"] = strategy;
    params["seed"] = seed;
    rep["parameters"] = std::move(params);
    if (n >= k && k >= 2) rep["existence_bound"] = rational_to_json(existence_bound(q, m, n, k));
    rep["candidates_checked"] = big_to_json(res.candidates_checked);
    rep["found"] = res.code.has_value();
    rep["exhausted"] = res.exhausted;
    rep["certificate"] = res.certificate;
    if (res.code) {
        rep["code"] = code_to_json(*res.code);
        rep["minimality"] = minimality_to_json(*res.report);
    } else if (res.exhausted && k >= 2 && n < k + m - 1) {
        rep["forbidding_bound"] = "n >= k+m-1";
    }
    return rep;
}

} // namespace rankmet
