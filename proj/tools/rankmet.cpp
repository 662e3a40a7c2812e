// rankmet: exact analysis of F_{q^m}-linear rank-metric codes.
//
// Subcommands: field, analyze, construct, verify, search. All reports are
// deterministic JSON; exit codes are 0 (ok / all checks pass), 1 (a
// verification check failed), 2 (input error), 3 (budget exceeded).

#include "rankmet/reports.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace rankmet;

namespace {

struct RunConfig {
    unsigned long long budget = kDefaultBudget;
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "json";

    Budget bud() const { return Budget(budget); }
};

void emit(const RunConfig& cfg, const Json& report) {
    std::string text;
    if (cfg.format == "json") {
        text = report.dump(2);
        text.push_back('\n');
    } else {
        std::ostringstream os;
        for (const auto& [key, value] : report.items())
            os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
               << "\n";
        text = os.str();
    }
    if (cfg.output.empty()) std::cout << text;
    else write_text_file(cfg.output, text);
}

int cmd_analyze(const RunConfig& cfg, const std::string& file, const std::string& method) {
    ParsedInput in = parse_input_file(file);
    RankCode C = in.code ? *in.code : psi(*in.system);
    AnalyzeOutcome out = analyze_report(C, parse_min_method(method), cfg.bud());
    emit(cfg, out.report);
    return out.budget_hit ? 3 : 0;
}

int cmd_field(const RunConfig& cfg, int p, int e, int m, const std::string& modulus_csv) {
    std::optional<std::vector<int>> modulus;
    if (!modulus_csv.empty()) {
        std::vector<int> coeffs;
        std::stringstream ss(modulus_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoi(tok));
        modulus = coeffs;
    }
    FieldPtr F = build_field(p, e, m, modulus);
    Json rep;
    rep["schema"] = kSchemaReport;
    rep["kind"] = "field";
    rep["field"] = field_to_json(*F);
    rep["size"] = F->size;
    rep["q"] = F->q;
    rep["subfield_stride"] = F->subfield_stride;
    rep["gamma"] = Json(F->gamma);
    Json sub = Json::array();
    for (Elem s : F->subfield) sub.push_back(s);
    rep["subfield"] = std::move(sub);
    emit(cfg, rep);
    return 0;
}

int cmd_construct(const RunConfig& cfg, const std::string& kind, std::uint64_t q, int m, int k,
                  const std::string& input, const std::string& vector_csv) {
    std::optional<RankCode> base;
    std::vector<Elem> column;
    if (kind == "extend") {
        check(!input.empty(), errc::invalid_args, "extend needs --input");
        ParsedInput in = parse_input_file(input);
        base = in.code ? *in.code : psi(*in.system);
        std::stringstream ss(vector_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) column.push_back(base->F->parse_elem(tok));
    }
    emit(cfg, construct_code_file(kind, q, m, k, base, column, cfg.bud()));
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& file, const std::string& suite) {
    ParsedInput in = parse_input_file(file);
    RankCode C = in.code ? *in.code : psi(*in.system);
    VerifyOutcome out = verify_report(C, in.system, in.raw, suite, cfg.bud());
    emit(cfg, out.report);
    if (out.budget_hit) return 3;
    return out.all_pass ? 0 : 1;
}

int cmd_search(const RunConfig& cfg, std::uint64_t q, int m, int n, int k,
               const std::string& strategy, std::uint64_t trials) {
    emit(cfg, search_report(q, m, n, k, strategy, trials, cfg.seed, cfg.bud()));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for F_{q^m}-linear rank-metric codes"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    RunConfig cfg;
    if (const char* env = std::getenv("RANKMET_BUDGET")) cfg.budget = std::strtoull(env, nullptr, 10);
    app.add_option("--budget", cfg.budget, "enumeration budget");
    app.add_option("--seed", cfg.seed, "seed for randomized operations");
    app.add_option("-o,--output", cfg.output, "write the report to a file instead of stdout");
    app.add_option("--format", cfg.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string file, method = "cutting", suite = "all", kind, input, vector_csv, modulus_csv;
    std::uint64_t q = 2;
    int p = 2, e = 1, m = 2, n = 4, k = 2;
    std::uint64_t trials = 1000;
    std::string strategy = "exhaustive";

    CLI::App* a = app.add_subcommand("analyze", "full analysis of a code or system file");
    a->add_option("file", file)->required();
    a->add_option("--method", method, "minimality method: pairwise, cutting, lambda-sum, all");

    CLI::App* f = app.add_subcommand("field", "build a field tower and print its parameters");
    f->add_option("--p", p, "characteristic")->required();
    f->add_option("--e", e, "q = p^e");
    f->add_option("--m", m, "extension degree of F_{q^m} over F_q");
    f->add_option("--modulus", modulus_csv, "comma-separated coefficients c_0,...,c_{em}");

    CLI::App* c = app.add_subcommand("construct", "build a named code");
    c->add_option("kind", kind, "simplex | scattered633 | km1m | extend")->required();
    c->add_option("--q", q);
    c->add_option("--m", m);
    c->add_option("--k", k);
    c->add_option("--input", input, "base code file (extend)");
    c->add_option("--vector", vector_csv, "extension column, comma-separated elements (extend)");

    CLI::App* v = app.add_subcommand("verify", "run verification suites against a file");
    v->add_option("file", file)->required();
    v->add_option("--suite", suite, "correspondence | identities | minimality | all");

    CLI::App* s = app.add_subcommand("search", "search for a minimal code");
    s->add_option("--q", q)->required();
    s->add_option("--m", m)->required();
    s->add_option("--n", n)->required();
    s->add_option("--k", k)->required();
    s->add_option("--strategy", strategy, "exhaustive | random");
    s->add_option("--trials", trials, "trial count for random search");
    s->add_flag_callback("--exhaustive", [&strategy] { strategy = "exhaustive"; });
    s->add_flag_callback("--random", [&strategy] { strategy = "random"; });

    CLI11_PARSE(app, argc, argv);

    try {
        if (a->parsed()) return cmd_analyze(cfg, file, method);
        if (f->parsed()) return cmd_field(cfg, p, e, m, modulus_csv);
        if (c->parsed()) return cmd_construct(cfg, kind, q, m, k, input, vector_csv);
        if (v->parsed()) return cmd_verify(cfg, file, suite);
        if (s->parsed()) return cmd_search(cfg, q, m, n, k, strategy, trials);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::internal_inconsistency ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
