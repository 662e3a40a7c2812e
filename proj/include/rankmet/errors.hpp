#ifndef RANKMET_ERRORS_HPP
#define RANKMET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankmet {

enum class errc {
    not_prime,
    reducible,
    not_primitive_modulus,
    field_too_large,
    dimension_mismatch,
    not_contained,
    not_spanning,
    degenerate,
    not_scattered,
    no_spanning_subspace,
    not_linear_over_extension,
    hypothesis_violated,
    not_minimal_input,
    invalid_args,
    parse_error,
    budget_exceeded,
    internal_inconsistency,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

// Thrown when a predicted enumeration count exceeds the configured budget.
// Carries the required count as a decimal string (counts can exceed 2^64).
class BudgetError : public Error {
  public:
    BudgetError(const std::string& what_needed, const std::string& required, unsigned long long limit)
        : Error(errc::budget_exceeded,
                what_needed + " requires " + required + " steps, budget is " + std::to_string(limit)),
          required_(required), limit_(limit) {}
    const std::string& required() const { return required_; }
    unsigned long long limit() const { return limit_; }

  private:
    std::string required_;
    unsigned long long limit_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

inline void check(bool ok, errc c, const std::string& msg) {
    if (!ok) throw Error(c, msg);
}

} // namespace rankmet

#endif
