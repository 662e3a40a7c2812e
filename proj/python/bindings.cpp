// Python module exposing the toolkit's main operations. Structured results
// cross the boundary as JSON strings so python sees exactly what the CLI
// emits; scalar helpers return native types.

#include "rankmet/reports.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rankmet;

namespace {

RankCode code_from_str(const std::string& code_json) {
    return code_from_json(Json::parse(code_json));
}

std::string analyze_str(const std::string& code_json, const std::string& method,
                        unsigned long long budget) {
    RankCode C = code_from_str(code_json);
    return analyze_report(C, parse_min_method(method), Budget(budget)).report.dump();
}

py::tuple verify_str(const std::string& code_json, const std::string& suite,
                     unsigned long long budget) {
    Json raw = Json::parse(code_json);
    RankCode C = code_from_json(raw);
    VerifyOutcome out = verify_report(C, std::nullopt, raw, suite, Budget(budget));
    return py::make_tuple(out.all_pass, out.report.dump());
}

std::string construct_str(const std::string& kind, std::uint64_t q, int m, int k,
                          unsigned long long budget) {
    return construct_code_file(kind, q, m, k, std::nullopt, {}, Budget(budget)).dump();
}

std::string search_str(std::uint64_t q, int m, int n, int k, const std::string& strategy,
                       std::uint64_t seed, std::uint64_t trials, unsigned long long budget) {
    return search_report(q, m, n, k, strategy, trials, seed, Budget(budget)).dump();
}

std::vector<std::uint64_t> distribution_vec(const std::string& code_json,
                                            unsigned long long budget) {
    RankCode C = code_from_str(code_json);
    WeightDistribution W = weight_distribution(C, Budget(budget));
    std::vector<std::uint64_t> v;
    for (const BigInt& c : W.counts) v.push_back(c.to_u64());
    return v;
}

void register_errors(py::module_& m) {
    static py::exception<BudgetError> budget_exc(m, "BudgetExceeded");
    static py::exception<Error> base_exc(m, "RankmetError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetError& e) {
            budget_exc(e.what());
        } catch (const Error& e) {
            base_exc(e.what());
        }
    });
}

} // namespace

PYBIND11_MODULE(_rankmet, m) {
    m.doc() = "exact toolkit for F_{q^m}-linear rank-metric codes";
    register_errors(m);

    m.def("analyze", &analyze_str, py::arg("code_json"), py::arg("method") = "cutting",
          py::arg("budget") = kDefaultBudget,
          "Full analysis of a code file (JSON string in, JSON report out).");
    m.def("verify", &verify_str, py::arg("code_json"), py::arg("suite") = "all",
          py::arg("budget") = kDefaultBudget,
          "Run a verification suite; returns (all_pass, report_json).");
    m.def("construct", &construct_str, py::arg("kind"), py::arg("q") = 2, py::arg("m") = 2,
          py::arg("k") = 2, py::arg("budget") = kDefaultBudget,
          "Build a named code (simplex | scattered633 | km1m); returns a code file.");
    m.def("search", &search_str, py::arg("q"), py::arg("m"), py::arg("n"), py::arg("k"),
          py::arg("strategy") = "exhaustive", py::arg("seed") = 0, py::arg("trials") = 1000,
          py::arg("budget") = kDefaultBudget, "Search for a minimal [n,k]_{q^m/q} code.");

    m.def(
        "min_rank_distance",
        [](const std::string& code_json, unsigned long long budget) {
            return min_rank_distance(code_from_str(code_json), Budget(budget));
        },
        py::arg("code_json"), py::arg("budget") = kDefaultBudget);
    m.def("weight_distribution", &distribution_vec, py::arg("code_json"),
          py::arg("budget") = kDefaultBudget,
          "Rank-weight distribution A_0..A_n as a list of counts.");
    m.def(
        "is_minimal",
        [](const std::string& code_json, const std::string& method, unsigned long long budget) {
            return is_minimal(code_from_str(code_json), parse_min_method(method), Budget(budget))
                .minimal;
        },
        py::arg("code_json"), py::arg("method") = "cutting", py::arg("budget") = kDefaultBudget);
    m.def(
        "existence_bound",
        [](std::uint64_t q, int m, int n, int k) { return existence_bound(q, m, n, k).to_string(); },
        py::arg("q"), py::arg("m"), py::arg("n"), py::arg("k"),
        "Exact counting bound; a positive value certifies existence.");
    m.def(
        "gaussian_binomial",
        [](int a, int b, std::uint64_t Q) { return gaussian_binomial(a, b, Q).to_string(); },
        py::arg("a"), py::arg("b"), py::arg("q"),
        "Number of b-dimensional subspaces of F_q^a, as a decimal string.");
    m.def(
        "fq",
        [](std::uint64_t q, int n, int m, int k, int j, int r) {
            return fq_value(q, n, m, k, j, r).to_string();
        },
        py::arg("q"), py::arg("n"), py::arg("m"), py::arg("k"), py::arg("j"), py::arg("r"),
        "The Pless-identity coefficient f_q(n,m,k,j,r), exact.");

    m.attr("DEFAULT_BUDGET") = kDefaultBudget;
    m.attr("__version__") = "0.1.0";
}
