#include "rankmet/json_io.hpp"

#include <fstream>
#include <sstream>

namespace rankmet {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(errc::parse_error, msg); }

const Json& need(const Json& j, const char* key) {
    if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

int need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

Json field_to_json(const FieldCtx& F) {
    Json j;
    j["p"] = F.p;
    j["e"] = F.e;
    j["m"] = F.m;
    j["modulus"] = F.modulus;
    return j;
}

FieldPtr field_from_json(const Json& j) {
    int p = need_int(j, "p"), e = need_int(j, "e"), m = need_int(j, "m");
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus")) {
        if (!j.at("modulus").is_array()) bad("field 'modulus' must be an array");
        modulus = j.at("modulus").get<std::vector<int>>();
    }
    std::optional<std::vector<Elem>> gamma;
    if (j.contains("gamma")) gamma = j.at("gamma").get<std::vector<Elem>>();
    return build_field(p, e, m, modulus, 1u << 20, gamma);
}

Json elem_to_json(Elem x) { return Json(x); }

Elem elem_from_json(const FieldCtx& F, const Json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0) bad("negative element encoding");
        return F.check_elem(static_cast<std::uint64_t>(v));
    }
    if (j.is_string()) return F.parse_elem(j.get<std::string>());
    bad("element must be an integer or a string");
}

Json matrix_to_json(const Mat& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.cols; ++j) row.push_back(M.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const FieldCtx& F, const Json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
    std::vector<std::vector<Elem>> rows;
    for (const Json& row : j) {
        if (!row.is_array()) bad("matrix rows must be arrays");
        std::vector<Elem> r;
        for (const Json& cell : row) r.push_back(elem_from_json(F, cell));
        rows.push_back(std::move(r));
        if (rows.back().size() != rows.front().size()) bad("ragged matrix rows");
    }
    return mat_from_rows(rows);
}

Json code_to_json(const RankCode& C) {
    Json j;
    j["schema"] = kSchemaCode;
    j["field"] = field_to_json(*C.F);
    j["n"] = C.n;
    j["k"] = C.k;
    j["generator"] = matrix_to_json(C.G);
    return j;
}

RankCode code_from_json(const Json& j) {
    FieldPtr F = field_from_json(need(j, "field"));
    Mat G = matrix_from_json(*F, need(j, "generator"));
    RankCode C = make_code(F, std::move(G));
    if (j.contains("n") && j.at("n").get<int>() != C.n) bad("declared n differs from the generator");
    if (j.contains("k") && j.at("k").get<int>() != C.k) bad("declared k differs from the generator");
    return C;
}

Json hamming_to_json(const HammingCode& H) {
    Json j;
    j["schema"] = kSchemaCode;
    j["metric"] = "hamming";
    j["field"] = field_to_json(*H.F);
    j["n"] = H.N;
    j["k"] = H.k;
    j["generator"] = matrix_to_json(H.G);
    return j;
}

Json system_to_json(const QSystem& U) {
    Json j;
    j["schema"] = kSchemaSystem;
    j["field"] = field_to_json(*U.F);
    j["k"] = U.k;
    j["n"] = U.n;
    j["basis"] = matrix_to_json(U.basis);
    return j;
}

QSystem system_from_json(const Json& j) {
    FieldPtr F = field_from_json(need(j, "field"));
    int k = need_int(j, "k");
    Mat B = matrix_from_json(*F, need(j, "basis"));
    if (B.cols != k) bad("basis vectors must have length k");
    std::vector<std::vector<Elem>> gens;
    for (int i = 0; i < B.rows; ++i) gens.push_back(B.row(i));
    return make_q_system(F, k, gens);
}

Json big_to_json(const BigInt& v) {
    if (v.fits_u64() && v.to_u64() <= (1ull << 53)) return Json(v.to_u64());
    return Json(v.to_string());
}

Json rational_to_json(const Rational& r) {
    Json j;
    j["num"] = r.num().is_negative() ? Json(r.num().to_string()) : big_to_json(r.num());
    j["den"] = big_to_json(r.den());
    return j;
}

Json linear_set_to_json(const QSystem& U, const LinearSet& L) {
    const std::uint64_t q = U.F->q;
    Json arr = Json::array();
    for (const auto& [P, wt] : L.weights) {
        Json entry;
        Json pt = Json::array();
        for (Elem c : P) pt.push_back(c);
        entry["point"] = std::move(pt);
        entry["weight"] = wt;
        entry["multiplicity"] =
            big_to_json((bpow(q, wt) - BigInt(1)).div_exact(BigInt(q) - BigInt(1)));
        arr.push_back(std::move(entry));
    }
    return arr;
}

Json distribution_to_json(const WeightDistribution& W) {
    Json arr = Json::array();
    for (const BigInt& c : W.counts) arr.push_back(big_to_json(c));
    return arr;
}

Json minimality_to_json(const MinimalityReport& rep) {
    Json j;
    j["minimal"] = rep.minimal;
    j["method"] = min_method_name(rep.method);
    if (rep.witness) {
        Json w;
        w["u"] = Json(rep.witness->u);
        w["v"] = Json(rep.witness->v);
        w["codeword_u"] = Json(rep.witness->cu);
        w["codeword_v"] = Json(rep.witness->cv);
        if (rep.witness->hyperplane_normal)
            w["hyperplane_normal"] = Json(*rep.witness->hyperplane_normal);
        j["witness"] = std::move(w);
    }
    return j;
}

Json bounds_to_json(const BoundsLedger& L) {
    Json j;
    j["q"] = L.q;
    j["m"] = L.m;
    j["n"] = L.n;
    j["k"] = L.k;
    j["effective_length"] = L.effective_length;
    j["d"] = L.d;
    j["w_max"] = L.w_max;
    j["linearity_index"] = L.linearity;
    j["minimal"] = L.minimal;
    j["n_ge_k_plus_m_minus_1"] = L.n_ge_k_plus_m_minus_1;
    j["wmax_le_n_minus_k_plus_1"] = L.wmax_le_n_minus_k_plus_1;
    j["hyperplane_size_ge_q_pow_k_minus_1"] = L.hyperplane_size_ge_q_pow_k_minus_1;
    j["sufficiency_n_ge_km_minus_m_plus_1"] = L.sufficiency_n_ge_km_minus_m_plus_1;
    j["gen_lower_bound_ok"] = L.gen_lower_bound_ok;
    j["ab_condition_holds"] = L.ab_condition_holds;
    return j;
}

Json stats_to_json(const TotalWeightStats& S) {
    Json j;
    j["mean"] = rational_to_json(S.mean);
    j["formula_mean"] = rational_to_json(S.formula_mean);
    j["mean_matches"] = S.mean_matches;
    j["variance"] = rational_to_json(S.variance);
    j["formula_var_bound"] = rational_to_json(S.formula_var_bound);
    j["variance_equality"] = S.variance_equality;
    j["rank2_nondegenerate"] = S.rank2_nondegenerate;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        bad("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) fail(errc::invalid_args, "cannot write file: " + path);
    out << content;
}

ParsedInput parse_input_file(const std::string& path) {
    Json j = load_json_file(path);
    ParsedInput in;
    std::string schema = j.contains("schema") ? j.at("schema").get<std::string>() : "";
    if (schema == kSchemaSystem || (schema.empty() && j.contains("basis"))) {
        in.system = system_from_json(j);
    } else if (schema == kSchemaCode || schema.empty()) {
        in.code = code_from_json(j);
    } else {
        bad("unknown schema: " + schema);
    }
    in.raw = std::move(j);
    return in;
}

} // namespace rankmet
