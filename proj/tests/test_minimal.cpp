#include "rankmet/minimal.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace rankmet;
using namespace rankmet::testing;

TEST_SUITE_BEGIN("minimal");

namespace {

FieldPtr f8() {
    static FieldPtr F = build_field(2, 1, 3, std::vector<int>{1, 1, 0, 1});
    return F;
}

RankCode example_code() {
    auto F = f8();
    Elem a = F->g();
    return make_code(F, mat_from_rows({{1, 0, 0, 0}, {0, 1, a, F->mul(a, a)}}));
}

} // namespace

TEST_CASE("the running example is minimal by every method") {
    RankCode C = example_code();
    for (MinMethod mm : {MinMethod::pairwise, MinMethod::cutting, MinMethod::lambda_sum,
                         MinMethod::all})
        CHECK(is_minimal(C, mm).minimal);
}

TEST_CASE("simplex codes are minimal") {
    for (auto F : {build_field(2, 1, 2), build_field(3, 1, 2)}) {
        RankCode S = construct_simplex(F, 2);
        CHECK(is_minimal(S, MinMethod::all).minimal);
    }
}

TEST_CASE("a non-minimal code yields a re-verifiable witness") {
    auto F = f8();
    Elem a = F->g();
    RankCode C = make_code(F, mat_from_rows({{1, 0, 0, 0}, {a, 0, 1, 0}}));
    for (MinMethod mm : {MinMethod::pairwise, MinMethod::cutting, MinMethod::lambda_sum}) {
        MinimalityReport rep = is_minimal(C, mm);
        CHECK(!rep.minimal);
        REQUIRE(rep.witness.has_value());
        const MinimalityWitness& w = *rep.witness;
        // witness re-verifies under the definition: nested supports,
        // independent messages
        CHECK(contains(rank_support(*F, w.cv), rank_support(*F, w.cu)));
        Mat pair = mat_from_rows({w.u, w.v});
        CHECK(rref(fullfield_of(*F), pair, nullptr) == 2);
    }
}

TEST_CASE("three methods agree on every [3,2] and [4,2] code over F_4") {
    auto F = build_field(2, 1, 2);
    Budget bud;
    for (int n : {3, 4}) {
        SubspaceEnumerator en(fullfield_of(*F), n, 2, bud);
        int minimal_count = 0, total = 0;
        while (auto S = en.next()) {
            RankCode C = make_code(F, S->basis);
            MinimalityReport p = is_minimal(C, MinMethod::pairwise);
            MinimalityReport c = is_minimal(C, MinMethod::cutting);
            MinimalityReport l = is_minimal(C, MinMethod::lambda_sum);
            CHECK(p.minimal == c.minimal);
            CHECK(c.minimal == l.minimal);
            ++total;
            if (p.minimal) ++minimal_count;
            // necessary bounds on minimal codes
            if (p.minimal) {
                int np = effective_length(C);
                if (C.k >= 2) CHECK(np >= C.k + F->m - 1);
                CHECK(max_rank(C) <= np - C.k + 1);
            }
            // sufficiency: nondegenerate with n >= (k-1)m+1
            if (effective_length(C) >= (C.k - 1) * F->m + 1) CHECK(p.minimal);
        }
        CHECK(total == (n == 3 ? 21 : 357));
        CHECK(minimal_count > 0);
    }
}

TEST_CASE("support inclusion duality on random codes") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 20; ++iter) {
        auto F = iter % 2 ? build_field(2, 1, 2) : build_field(2, 1, 3);
        int n = 2 + static_cast<int>(rng() % 3);
        RankCode C = random_nondegenerate_code(F, n, 2, rng);
        QSystem U = phi(C);
        Budget bud;
        ProjectivePointEnumerator pu(C.full(), C.k, bud);
        std::vector<std::vector<Elem>> msgs;
        while (auto x = pu.next()) msgs.push_back(*x);
        for (const auto& u : msgs)
            for (const auto& v : msgs) {
                if (u == v) continue;
                bool supp_incl = contains(rank_support(*F, codeword(C, v)),
                                          rank_support(*F, codeword(C, u)));
                Mat um(1, C.k), vm(1, C.k);
                um.set_row(0, u);
                vm.set_row(0, v);
                Subspace Hu = flatten_ext_subspace(*F, perp(span(C.full(), um)).basis, C.k);
                Subspace Hv = flatten_ext_subspace(*F, perp(span(C.full(), vm)).basis, C.k);
                bool trace_incl = contains(intersection(U.flat, Hu), intersection(U.flat, Hv));
                CHECK(supp_incl == trace_incl);
            }
    }
}

TEST_CASE("cutting blocking sets") {
    auto F = build_field(2, 1, 2);
    CHECK(is_linear_cutting_blocking_set(phi(construct_simplex(F, 2))));
    CHECK(is_linear_cutting_blocking_set(phi(example_code())));
    // a non-example: the [4,2] code over F_4 with a non-cutting system
    auto F4 = build_field(2, 1, 2);
    RankCode bad = make_code(F4, mat_from_rows({{1, 0, 0, 0}, {0, 0, 1, F4->g()}}));
    if (is_nondegenerate(bad)) CHECK(!is_linear_cutting_blocking_set(phi(bad)));
}

TEST_CASE("minimality agrees with Hamming minimality of the associated code") {
    std::mt19937_64 rng(103);
    std::vector<FieldPtr> fields = {build_field(2, 1, 2), build_field(3, 1, 2),
                                    build_field(2, 1, 3), build_field(2, 2, 2)};
    for (int done = 0; done < 30; ++done) {
        auto F = fields[done % fields.size()];
        int n = 2 + static_cast<int>(rng() % 3);
        RankCode C = random_nondegenerate_code(F, n, 2, rng);
        bool rank_min = is_minimal(C, MinMethod::cutting).minimal;
        bool ham_min = is_hamming_minimal(associated_code(C));
        CHECK(rank_min == ham_min);
    }
    // the worked example: rank-minimal, associated code Hamming-minimal, raw
    // Hamming-minimality false
    RankCode C = example_code();
    CHECK(is_minimal(C).minimal);
    CHECK(is_hamming_minimal(associated_code(C)));
    CHECK(!is_hamming_minimal(as_hamming(C)));
}

TEST_CASE("Hamming-minimal implies rank-minimal") {
    std::mt19937_64 rng(107);
    auto F = build_field(2, 1, 2);
    int seen = 0;
    for (int iter = 0; iter < 200 && seen < 3; ++iter) {
        RankCode C = random_code(F, 2 + static_cast<int>(rng() % 3), 2, rng);
        if (!is_hamming_minimal(as_hamming(C))) continue;
        ++seen;
        CHECK(is_minimal(C, MinMethod::pairwise).minimal);
    }
}

TEST_CASE("bounds ledger on the running example") {
    BoundsLedger L = bounds_ledger(example_code());
    CHECK(L.minimal);
    CHECK(L.effective_length == 4); // = k + m - 1, tight
    CHECK(L.n_ge_k_plus_m_minus_1);
    CHECK(L.wmax_le_n_minus_k_plus_1);
    CHECK(L.sufficiency_n_ge_km_minus_m_plus_1);
    CHECK(L.gen_lower_bound_ok);
    CHECK(!L.ab_condition_holds); // d = 1 != m
}

TEST_CASE("AB condition holds exactly for simplex codes") {
    auto F = build_field(2, 1, 2);
    BoundsLedger L = bounds_ledger(construct_simplex(F, 2));
    CHECK(L.ab_condition_holds);
    CHECK(L.d == F->m);
}

TEST_CASE("simplex constructor") {
    auto F = f8();
    RankCode S1 = construct_simplex(F, 1);
    CHECK(S1.n == 3);
    WeightDistribution W = weight_distribution(S1);
    CHECK(W.min_distance() == 3);
    CHECK(W.max_rank() == 3);

    auto F4 = build_field(2, 1, 2);
    RankCode S = construct_simplex(F4, 2);
    CHECK(S.n == 4);
    CHECK(weight_distribution(S).counts[2] == BigInt(15));
    CHECK(min_rank_distance(dual(S)) == 2);
    CHECK(S.G == reference_simplex(F4, 2).G);
    // alpha must generate the extension
    CHECK_THROWS_AS(construct_simplex(F4, 2, Elem{1}), Error);
}

TEST_CASE("the explicit scattered [6,3] construction") {
    Scattered633 sc = construct_scattered_633();
    CHECK(sc.C.n == 6);
    CHECK(sc.C.k == 3);
    CHECK(sc.U.n == 6);
    // first printed row of the generator matrix
    const FieldCtx& K = *sc.F16;
    std::vector<Elem> row0 = sc.C.G.row(0);
    std::vector<Elem> expected = {K.gpow(4), K.gpow(10), K.gpow(8),
                                  K.gpow(3), K.gpow(9), K.gpow(7)};
    CHECK(row0 == expected);
    CHECK(linear_set(sc.U).num_points() == 63);
    CHECK(is_scattered(sc.U));
    CHECK(is_minimal(sc.C, MinMethod::all).minimal);
}

TEST_CASE("scattered implies minimal for k = 3, n >= m+2") {
    Scattered633 sc = construct_scattered_633();
    CHECK(minimal_from_scattered(sc.U).minimal);
    // shrink once: [5,3] still has n >= m+1... n=5 < m+2=6 violates
    QSystem V = shrink_scattered(sc.U);
    CHECK(V.n == 5);
    CHECK(is_scattered(V));
    CHECK_THROWS_AS(minimal_from_scattered(V), Error); // n >= m+2 fails
    // wrong k guard
    auto F16 = build_field(2, 1, 4);
    std::vector<std::vector<Elem>> gens;
    for (int t = 0; t < 4; ++t)
        gens.push_back({F16->gamma[t], F16->frobenius(F16->gamma[t])});
    QSystem U2 = make_q_system(F16, 2, gens);
    CHECK_THROWS_AS(minimal_from_scattered(U2), Error);
}

TEST_CASE("shrinking the scattered example twice") {
    Scattered633 sc = construct_scattered_633();
    QSystem V = shrink_scattered(sc.U);
    QSystem W = shrink_scattered(V);
    CHECK(W.n == 4);
    CHECK(is_scattered(W));
}

TEST_CASE("extending minimal codes") {
    RankCode C = example_code();
    RankCode E = extend_minimal(C, {1, 1}, Budget(), true);
    CHECK(E.n == 5);
    CHECK(is_minimal(E, MinMethod::pairwise).minimal);
    // extension by a vector already in U gives a degenerate minimal code
    RankCode E2 = extend_minimal(C, {1, 0}, Budget(), true);
    CHECK(!is_nondegenerate(E2));
    // simplex extension
    auto F4 = build_field(2, 1, 2);
    RankCode S = construct_simplex(F4, 2);
    RankCode SE = extend_minimal(S, {F4->g(), 3}, Budget(), true);
    CHECK(SE.n == 5);
    // non-minimal input is refused
    auto F = f8();
    RankCode bad = make_code(F, mat_from_rows({{1, 0, 0, 0}, {F->g(), 0, 1, 0}}));
    CHECK_THROWS_AS(extend_minimal(bad, {1, 1}), Error);
}

TEST_CASE("existence bound values") {
    Rational b = existence_bound(2, 2, 4, 2);
    CHECK(b == Rational(BigInt(217)));
    // the two summands: 357 and 140
    Rational first(
        (bpow(2, 8) - BigInt(1)) * (bpow(2, 6) - BigInt(1)),
        (bpow(2, 4) - BigInt(1)) * (bpow(2, 2) - BigInt(1)));
    CHECK(first == Rational(BigInt(357)));
    CHECK(first - b == Rational(BigInt(140)));
    // m = 1: empty sum, first term only
    Rational b1 = existence_bound(2, 1, 2, 2);
    CHECK(b1 == Rational(BigInt(1)));
    // positivity across the grid n = 2k+m-2 (asserted inside as well)
    for (std::uint64_t q : {2ull, 3ull, 4ull})
        for (int m = 2; m <= 4; ++m)
            for (int k = 2; k <= 4; ++k)
                CHECK(existence_bound(q, m, 2 * k + m - 2, k).is_positive());
    CHECK_THROWS_AS(existence_bound(6, 2, 4, 2), Error); // 6 is not a prime power
    CHECK_THROWS_AS(existence_bound(2, 2, 2, 3), Error); // n < k
}

TEST_CASE("associated code of the scattered example has 63 distinct columns") {
    Scattered633 sc = construct_scattered_633();
    HammingCode CH = associated_code(sc.C);
    CHECK(CH.N == 63);
    CHECK(CH.k == 3);
    std::set<std::vector<Elem>> cols;
    for (int j = 0; j < CH.N; ++j) {
        std::vector<Elem> col(3);
        for (int i = 0; i < 3; ++i) col[i] = CH.G.at(i, j);
        cols.insert(normalize_projective(CH.full(), col));
    }
    CHECK(cols.size() == 63); // scattered => multiplicity-free
}

TEST_CASE("a positive existence bound never contradicts exhaustive search") {
    for (std::uint64_t q : {2ull})
        for (int m : {2, 3})
            for (int n = 2; n <= std::min(2 * m, 5); ++n) {
                if (n < 2) continue;
                Rational b = existence_bound(q, m, n, 2);
                SearchResult res = search_minimal(q, m, n, 2, SearchStrategy::exhaustive);
                if (b.is_positive()) CHECK(res.code.has_value());
                if (!res.code.has_value()) CHECK(!b.is_positive());
            }
}

TEST_CASE("bounds ledger holds on random minimal codes") {
    std::mt19937_64 rng(109);
    int minimal_seen = 0;
    for (int iter = 0; iter < 200 && minimal_seen < 15; ++iter) {
        auto F = iter % 2 ? build_field(2, 1, 2) : build_field(2, 1, 3);
        int n = 2 + static_cast<int>(rng() % (2 * F->m - 1));
        RankCode C = random_code(F, n, 2, rng);
        BoundsLedger L = bounds_ledger(C); // asserts internally when minimal
        if (!L.minimal) continue;
        ++minimal_seen;
        CHECK(L.gen_lower_bound_ok);
        CHECK(L.wmax_le_n_minus_k_plus_1);
    }
    CHECK(minimal_seen >= 15);
}

TEST_CASE("exhaustive search finds a minimal [4,2] code over F_4") {
    SearchResult res = search_minimal(2, 2, 4, 2, SearchStrategy::exhaustive);
    REQUIRE(res.code.has_value());
    CHECK(res.report->minimal);
    CHECK(is_minimal(*res.code, MinMethod::all).minimal);
    CHECK(res.candidates_checked <= BigInt(357));
}

TEST_CASE("exhaustive search certifies nonexistence below the length bound") {
    SearchResult res = search_minimal(2, 3, 3, 2, SearchStrategy::exhaustive);
    CHECK(!res.code.has_value());
    CHECK(res.exhausted);
    CHECK(res.certificate.find("n >= k+m-1") != std::string::npos);
}

TEST_CASE("sufficiency instance: every minimal [3,2]_{4/2} exists at n = k+m-1") {
    SearchResult res = search_minimal(2, 2, 3, 2, SearchStrategy::exhaustive);
    REQUIRE(res.code.has_value());
    CHECK(effective_length(*res.code) >= 3);
}

TEST_CASE("random search is deterministic under a seed") {
    SearchResult a = search_minimal(2, 3, 5, 2, SearchStrategy::random, Budget(), 7, 50);
    SearchResult b = search_minimal(2, 3, 5, 2, SearchStrategy::random, Budget(), 7, 50);
    CHECK(a.code.has_value() == b.code.has_value());
    CHECK(a.candidates_checked == b.candidates_checked);
    if (a.code) CHECK(a.code->G == b.code->G);
}

TEST_CASE("construct_k_minus_1_m") {
    auto F8 = f8();
    RankCode C = construct_k_minus_1_m(F8, 3);
    CHECK(C.n == 6);
    CHECK(C.k == 3);
    CHECK(is_minimal(C, MinMethod::all).minimal);
    CHECK(linearity_index(phi(C)) == 0);
    CHECK(generalized_rank_weight(C, 2) > F8->m);

    auto F4 = build_field(2, 1, 2);
    bool refused = false;
    try {
        construct_k_minus_1_m(F4, 3);
    } catch (const Error& e) {
        refused = e.code() == errc::hypothesis_violated;
    }
    CHECK(refused);
}

TEST_CASE("prime power factorization") {
    CHECK(factor_prime_power(8) == std::make_pair(2, 3));
    CHECK(factor_prime_power(9) == std::make_pair(3, 2));
    CHECK(factor_prime_power(7) == std::make_pair(7, 1));
    CHECK_THROWS_AS(factor_prime_power(12), Error);
    CHECK_THROWS_AS(factor_prime_power(1), Error);
}

TEST_SUITE_END();
