#ifndef RANKMET_MINIMAL_HPP
#define RANKMET_MINIMAL_HPP

#include "rankmet/hamming.hpp"

#include <optional>
#include <string>

namespace rankmet {

enum class MinMethod { pairwise, cutting, lambda_sum, all };

const char* min_method_name(MinMethod m);
MinMethod parse_min_method(const std::string& s);

// A non-minimality certificate: messages u, v (F_{q^m}-independent) whose
// codewords have nested rank supports, supp(uG) inside supp(vG). The cutting
// route additionally records the offending hyperplane's normal vector.
struct MinimalityWitness {
    std::vector<Elem> u, v;
    std::vector<Elem> cu, cv;
    std::optional<std::vector<Elem>> hyperplane_normal;
};

struct MinimalityReport {
    bool minimal = false;
    MinMethod method = MinMethod::cutting;
    std::optional<MinimalityWitness> witness;
};

// Minimality of a rank-metric code by the chosen criterion. Degenerate
// inputs are re-embedded onto their effective length first (minimality is
// invariant under that embedding). method = all runs all three and insists
// they agree.
MinimalityReport is_minimal(const RankCode& C, MinMethod method = MinMethod::cutting,
                            const Budget& budget = Budget());

bool is_linear_cutting_blocking_set(const QSystem& U, const Budget& budget = Budget());

struct BoundsLedger {
    // parameters the entries are computed from
    std::uint64_t q = 0;
    int m = 0, n = 0, k = 0, effective_length = 0;
    int d = 0, w_max = 0, linearity = 0;
    bool minimal = false;

    bool n_ge_k_plus_m_minus_1 = false;
    bool wmax_le_n_minus_k_plus_1 = false;
    bool hyperplane_size_ge_q_pow_k_minus_1 = false;
    bool sufficiency_n_ge_km_minus_m_plus_1 = false;
    bool gen_lower_bound_ok = false;
    bool ab_condition_holds = false;
};

// Evaluates every bound; a verified-minimal code violating a necessary bound
// raises InternalInconsistency, as does a failed sufficiency implication or
// an AB condition that disagrees with d == m.
BoundsLedger bounds_ledger(const RankCode& C, const Budget& budget = Budget());

// [km, k, m] simplex code with generator (I | alpha I | ... | alpha^{m-1} I);
// alpha must generate F_{q^m} over F_q (default: the primitive element).
RankCode construct_simplex(FieldPtr F, int k, std::optional<Elem> alpha = std::nullopt);

struct Scattered633 {
    FieldPtr tower;  // F_2 in F_16 in F_{2^12}
    FieldPtr F16;    // F_16 as F_2[x]/(x^4+x+1), the code's field
    QSystem U;       // the scattered [6,3]_{16/2} system
    RankCode C;      // the lambda-power generator matrix
    // diagnostics: how many elements of U satisfy the defining polynomial
    // condition, read as the affine equation x^64 + a x^3 + b = 0 and as the
    // q-linearized equation x^64 + a x^8 + b x = 0 (a = eta^64, b = eta^7)
    int poly_condition_hits = 0;
    int linearized_condition_hits = 0;
};
// The explicit scattered [6,3]_{16/2} construction over F_{2^12} = F_16(eta),
// eta^12+eta^7+eta^6+eta^5+eta^3+eta+1 = 0, U = <eta^6, eta^22, eta^63,
// eta^89, eta^166, eta^289>_{F_2}.
Scattered633 construct_scattered_633(const Budget& budget = Budget());

// k = 3, n >= m+2, scattered: minimality through the cutting criterion plus
// the (q+1)-fold blocking property of the linear set.
MinimalityReport minimal_from_scattered(const QSystem& U, const Budget& budget = Budget());

// Appends v^T as a new column; the extension of a minimal code is minimal.
RankCode extend_minimal(const RankCode& C, const std::vector<Elem>& v,
                        const Budget& budget = Budget(), bool verify_output = false);

// Counting bound: positive value certifies that a minimal [n,k]_{q^m/q} code
// exists. Exact rational arithmetic.
Rational existence_bound(std::uint64_t q, int m, int n, int k);

enum class SearchStrategy { exhaustive, random };

struct SearchResult {
    std::optional<RankCode> code;
    std::optional<MinimalityReport> report;
    BigInt candidates_checked;
    bool exhausted = false;   // exhaustive search covered the whole space
    std::string certificate;  // human-readable outcome
};

// Exhaustive search walks canonical k-dimensional F_{q^m}-subspaces of
// F_{q^m}^n; random search draws seeded generator matrices. Deterministic
// for fixed (inputs, seed, budget).
SearchResult search_minimal(std::uint64_t q, int m, int n, int k, SearchStrategy strategy,
                            const Budget& budget = Budget(), std::uint64_t seed = 0,
                            std::uint64_t random_trials = 1000);

// Minimal [(k-1)m, k] code for m >= 3 built from the direct-sum system with
// linearity index k-3; for m <= 2 no such code exists and the call refuses.
RankCode construct_k_minus_1_m(FieldPtr F, int k, const Budget& budget = Budget());

// decompose a prime power q = p^e; throws InvalidArgs otherwise
std::pair<int, int> factor_prime_power(std::uint64_t q);

} // namespace rankmet

#endif
