#ifndef RANKMET_BUDGET_HPP
#define RANKMET_BUDGET_HPP

#include "rankmet/bigint.hpp"
#include "rankmet/errors.hpp"

namespace rankmet {

constexpr unsigned long long kDefaultBudget = 10'000'000ull;

// Enumeration guard. Blowups (Gaussian binomials, codeword counts) are
// checked up front so failures are predictable and carry the exact count.
struct Budget {
    unsigned long long limit = kDefaultBudget;

    Budget() = default;
    explicit Budget(unsigned long long l) : limit(l) {}

    void require(const BigInt& count, const char* what) const {
        if (count > BigInt(limit)) throw BudgetError(what, count.to_string(), limit);
    }
    void require(unsigned long long count, const char* what) const {
        if (count > limit) throw BudgetError(what, std::to_string(count), limit);
    }
};

} // namespace rankmet

#endif
