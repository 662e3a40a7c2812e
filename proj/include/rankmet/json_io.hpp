#ifndef RANKMET_JSON_IO_HPP
#define RANKMET_JSON_IO_HPP

#include "rankmet/identities.hpp"
#include "rankmet/minimal.hpp"

#include <json.hpp>

#include <string>

namespace rankmet {

// Deterministic JSON: insertion-ordered keys, integers and strings only.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaCode = "rankmet/code-v1";
inline constexpr const char* kSchemaSystem = "rankmet/system-v1";
inline constexpr const char* kSchemaReport = "rankmet/report-v1";

Json field_to_json(const FieldCtx& F);
FieldPtr field_from_json(const Json& j);

// elements serialize as canonical integers; parsing also accepts "g^i"/"0"
Json elem_to_json(Elem x);
Elem elem_from_json(const FieldCtx& F, const Json& j);

Json matrix_to_json(const Mat& M);
Mat matrix_from_json(const FieldCtx& F, const Json& j);

Json code_to_json(const RankCode& C);
RankCode code_from_json(const Json& j);
Json hamming_to_json(const HammingCode& H);

Json system_to_json(const QSystem& U);
QSystem system_from_json(const Json& j);

Json big_to_json(const BigInt& v);      // number when it fits, decimal string otherwise
Json rational_to_json(const Rational& r); // {num, den}

Json linear_set_to_json(const QSystem& U, const LinearSet& L);
Json distribution_to_json(const WeightDistribution& W);
Json minimality_to_json(const MinimalityReport& rep);
Json bounds_to_json(const BoundsLedger& L);
Json stats_to_json(const TotalWeightStats& S);

// file helpers
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// a parsed input that may be a code or a q-system file
struct ParsedInput {
    std::optional<RankCode> code;
    std::optional<QSystem> system;
    Json raw; // full document, e.g. for "expect" stamps
};
ParsedInput parse_input_file(const std::string& path);

} // namespace rankmet

#endif
