#ifndef RANKMET_REPORTS_HPP
#define RANKMET_REPORTS_HPP

#include "rankmet/json_io.hpp"

namespace rankmet {

// Report builders shared by the CLI and the python module. All output is
// deterministic JSON; budget overruns inside analyze become per-field
// statuses instead of failures.

struct AnalyzeOutcome {
    Json report;
    bool budget_hit = false;
};
AnalyzeOutcome analyze_report(const RankCode& C, MinMethod method, const Budget& budget);

struct VerifyOutcome {
    Json report;
    bool all_pass = true;
    bool budget_hit = false;
};
// suite: correspondence | identities | minimality | all. system, when
// present, adds the cutting <-> minimality bridge; raw carries optional
// "expect" stamps from constructions.
VerifyOutcome verify_report(const RankCode& C, const std::optional<QSystem>& system,
                            const Json& raw, const std::string& suite, const Budget& budget);

// kind: simplex | scattered633 | km1m | extend. Returns a canonical code
// file with construction metadata and expectation stamps.
Json construct_code_file(const std::string& kind, std::uint64_t q, int m, int k,
                         const std::optional<RankCode>& base, const std::vector<Elem>& column,
                         const Budget& budget);

Json search_report(std::uint64_t q, int m, int n, int k, const std::string& strategy,
                   std::uint64_t trials, std::uint64_t seed, const Budget& budget);

} // namespace rankmet

#endif
