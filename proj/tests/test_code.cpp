#include "rankmet/code.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace rankmet;
using namespace rankmet::testing;

TEST_SUITE_BEGIN("code");

namespace {

FieldPtr f8() {
    static FieldPtr F = build_field(2, 1, 3, std::vector<int>{1, 1, 0, 1});
    return F;
}

FieldPtr f4() {
    static FieldPtr F = build_field(2, 1, 2);
    return F;
}

// the running example: G = [[1,0,0,0],[0,1,a,a^2]] over F_8/F_2
RankCode example_code() {
    auto F = f8();
    Elem a = F->g();
    return make_code(F, mat_from_rows({{1, 0, 0, 0}, {0, 1, a, F->mul(a, a)}}));
}

} // namespace

TEST_CASE("rank support and weight") {
    auto F = f8();
    Elem a = F->g();
    CHECK(rank_support(*F, {0, 0, 0, 0}).dim() == 0);
    Subspace s1 = rank_support(*F, {1, 0, 0, 0});
    CHECK(s1.dim() == 1);
    CHECK(s1.basis.row(0) == std::vector<Elem>{1, 0, 0, 0});
    CHECK(rank_weight(*F, {0, 1, a, F->mul(a, a)}) == 3);
    // scaling invariance
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<Elem> v(4);
        for (auto& x : v) x = static_cast<Elem>(rng() % 8);
        Elem alpha = static_cast<Elem>(1 + rng() % 7);
        std::vector<Elem> av(4);
        for (int i = 0; i < 4; ++i) av[i] = F->mul(alpha, v[i]);
        CHECK(rank_support(*F, v) == rank_support(*F, av));
    }
}

TEST_CASE("rank support is basis independent") {
    std::vector<std::vector<Elem>> bases = {{1, 2, 4}, {4, 2, 1}, {3, 2, 4}};
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Elem> v(5);
        for (auto& x : v) x = static_cast<Elem>(rng() % 8);
        std::optional<Subspace> ref;
        for (const auto& gb : bases) {
            auto F = build_field(2, 1, 3, std::vector<int>{1, 1, 0, 1}, 1u << 20, gb);
            Subspace s = rank_support(*F, v);
            if (!ref) ref = s;
            else CHECK(s.basis == ref->basis);
        }
    }
}

TEST_CASE("support subadditivity") {
    auto F = f8();
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<Elem> v(4), w(4), vw(4);
        for (int i = 0; i < 4; ++i) {
            v[i] = static_cast<Elem>(rng() % 8);
            w[i] = static_cast<Elem>(rng() % 8);
            vw[i] = F->add(v[i], w[i]);
        }
        CHECK(contains(sum(rank_support(*F, v), rank_support(*F, w)), rank_support(*F, vw)));
    }
}

TEST_CASE("code support and nondegeneracy of the running example") {
    RankCode C = example_code();
    Subspace S = code_support(C);
    CHECK(S.dim() == 4);
    CHECK(effective_length(C) == 4);
    NondegeneracyReport rep = nondegeneracy_report(C);
    CHECK(rep.nondegenerate);
    CHECK(rep.dual_distance_ge2);
    CHECK(!rep.rank2_nondegenerate); // d(dual) = 2 here
}

TEST_CASE("zero-augmented codes are degenerate with unchanged effective length") {
    RankCode C = example_code();
    Mat G2(C.k, C.n + 2);
    for (int i = 0; i < C.k; ++i)
        for (int j = 0; j < C.n; ++j) G2.at(i, j) = C.G.at(i, j);
    RankCode Cz = make_code(C.F, G2);
    CHECK(!is_nondegenerate(Cz));
    CHECK(effective_length(Cz) == effective_length(C));
    RankCode Ce = re_embed(Cz);
    CHECK(Ce.n == 4);
    CHECK(weight_distribution(Ce).counts == weight_distribution(C).counts);
    // nonzero part of the distribution agrees with the augmented code
    WeightDistribution Wz = weight_distribution(Cz);
    WeightDistribution W = weight_distribution(C);
    for (int i = 1; i <= C.n; ++i) CHECK(Wz.counts[i] == W.counts[i]);
}

TEST_CASE("simplex reference code is nondegenerate with n = km") {
    auto F = f4();
    RankCode S = reference_simplex(F, 2);
    CHECK(S.n == 4);
    CHECK(is_nondegenerate(S));
    CHECK(effective_length(S) == 4);
}

TEST_CASE("duals") {
    RankCode C = example_code();
    RankCode D = dual(C);
    CHECK(D.k == 2);
    Mat prod = mat_mul(C.full(), C.G, transpose(D.G));
    CHECK(std::all_of(prod.a.begin(), prod.a.end(), [](Elem x) { return x == 0; }));
    // (C^perp)^perp = C as row spaces
    RankCode DD = dual(D);
    CHECK(span(C.full(), DD.G) == span(C.full(), C.G));

    auto F = f4();
    RankCode S = reference_simplex(F, 2);
    RankCode Sd = dual(S);
    CHECK(Sd.k == 2);
    CHECK(min_rank_distance(Sd) == 2);

    // dual of the full space is the zero code with distance n+1
    RankCode full = make_code(F, mat_from_rows({{1, 0}, {0, 1}}));
    RankCode Z = dual(full);
    CHECK(Z.k == 0);
    CHECK(weight_distribution(Z).min_distance() == 3);
}

TEST_CASE("weight distribution of the running example") {
    RankCode C = example_code();
    WeightDistribution W = weight_distribution(C);
    CHECK(W.min_distance() == 1);
    CHECK(W.max_rank() == 3);
    CHECK(!W.one_weight());
    auto brute = weight_distribution_bruteforce(C);
    for (int i = 0; i <= C.n; ++i) CHECK(W.counts[i] == BigInt(brute[i]));
}

TEST_CASE("distribution matches brute force on random codes") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        auto F = iter % 2 ? f4() : f8();
        int n = 2 + static_cast<int>(rng() % 4);
        int k = 1 + static_cast<int>(rng() % std::min(n, 2));
        RankCode C = random_code(F, n, k, rng);
        auto brute = weight_distribution_bruteforce(C);
        WeightDistribution W = weight_distribution(C);
        for (int i = 0; i <= C.n; ++i) CHECK(W.counts[i] == BigInt(brute[i]));
        // lower bound on the distance from the effective length
        if (k >= 1)
            CHECK(W.min_distance() >= effective_length(C) - (k - 1) * F->m);
    }
}

TEST_CASE("simplex distribution is one-weight") {
    auto F = f4();
    RankCode S = reference_simplex(F, 2);
    WeightDistribution W = weight_distribution(S);
    CHECK(W.counts[0] == BigInt(1));
    CHECK(W.counts[2] == BigInt(15));
    CHECK(W.counts[1] == BigInt(0));
    CHECK(W.counts[3] == BigInt(0));
    CHECK(W.counts[4] == BigInt(0));
    CHECK(W.one_weight());
    OneWeightReport rep = classify_one_weight(S);
    CHECK(rep.one_weight);
    CHECK(rep.effective_length == 4);
    CHECK(rep.distance == 2);
}

TEST_CASE("one-weight checks") {
    RankCode C = example_code();
    CHECK(!weight_distribution(C).one_weight());
    // k = 1: all nonzero codewords proportional, hence one-weight
    auto F = f8();
    RankCode k1 = make_code(F, mat_from_rows({{1, F->g()}}));
    CHECK(weight_distribution(k1).one_weight());
    CHECK_THROWS_AS(classify_one_weight(k1), Error);
}

TEST_CASE("distribution is isometry invariant") {
    std::mt19937_64 rng(37);
    RankCode C = example_code();
    WeightDistribution W = weight_distribution(C);
    for (int iter = 0; iter < 100; ++iter) {
        Mat A = random_gl(C.sub(), C.n, rng);
        Elem alpha = static_cast<Elem>(1 + rng() % (C.F->size - 1));
        RankCode CA = apply_isometry(C, alpha, A);
        CHECK(weight_distribution(CA).counts == W.counts);
    }
}

TEST_CASE("generalized rank weights") {
    RankCode C = example_code();
    CHECK(generalized_rank_weight(C, 1) == 1);
    CHECK(generalized_rank_weight(C, 2) == 4);
    CHECK(generalized_rank_weight(C, 1) == min_rank_distance(C));
    // definitional cross-check over Frobenius-closed spaces
    CHECK(generalized_rank_weight_definitional(C, 1) == 1);
    CHECK(generalized_rank_weight_definitional(C, 2) == 4);

    auto F = f4();
    RankCode S = reference_simplex(F, 2);
    std::vector<int> d = generalized_rank_weights(S);
    CHECK(d[1] == 2); // r*m
    CHECK(d[2] == 4);
    CHECK(generalized_rank_weight_definitional(S, 1) == 2);
    CHECK(generalized_rank_weight_definitional(S, 2) == 4);

    RankCode deg = make_code(f8(), mat_from_rows({{1, 0, 0}, {0, 1, 0}}));
    CHECK(is_nondegenerate(deg) == false);
    CHECK_THROWS_AS(generalized_rank_weight(deg, 1), Error);
}

TEST_CASE("rank-2-nondegenerate detection") {
    auto F = f8();
    Elem a = F->g(), a2 = F->mul(F->g(), F->g());
    // dual generated by a rank-3 vector: d(dual) = 3
    RankCode D3 = make_code(F, mat_from_rows({{1, a, a2, 0}}));
    RankCode C3 = dual(D3);
    NondegeneracyReport r3 = nondegeneracy_report(C3);
    CHECK(r3.nondegenerate);
    CHECK(r3.rank2_nondegenerate);
    CHECK(min_rank_distance(D3) == 3);
    // dual generated by a rank-2 vector: d(dual) = 2
    RankCode D2 = make_code(F, mat_from_rows({{1, a, 0, 0}}));
    RankCode C2 = dual(D2);
    NondegeneracyReport r2 = nondegeneracy_report(C2);
    CHECK(r2.nondegenerate);
    CHECK(!r2.rank2_nondegenerate);
}

TEST_CASE("anticode shape: k = max rank and m >= n gives an F_q basis") {
    auto F = f8();
    Elem a = F->g(), a2 = F->mul(F->g(), F->g());
    // alpha-scaled rows of an F_2 generator
    Mat G = mat_from_rows({{a, a, 0}, {a2, 0, a2}});
    RankCode C = make_code(F, G);
    CHECK(max_rank(C) == 2);
    Subspace K = fq_rational_message_space(C);
    CHECK(K.dim() == 2);
    // the rational codewords span the code over F_{q^m}
    std::vector<std::vector<Elem>> words;
    for (int i = 0; i < K.basis.rows; ++i) {
        std::vector<Elem> x = unflatten_ext(*F, K.basis.row(i), C.k);
        std::vector<Elem> w = codeword(C, x);
        for (Elem c : w) CHECK(F->in_subfield(c));
        words.push_back(w);
    }
    CHECK(span(C.full(), 3, words) == span(C.full(), C.G));
}

TEST_SUITE_END();
