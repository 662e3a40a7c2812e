#include "rankmet/bigint.hpp"

#include "rankmet/errors.hpp"

#include <algorithm>

namespace rankmet {

namespace {
constexpr std::uint64_t BASE = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) {
        sign_ = 0;
        return;
    }
    sign_ = v > 0 ? 1 : -1;
    unsigned long long u = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1ull;
    while (u) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

BigInt::BigInt(unsigned long long v) {
    sign_ = v == 0 ? 0 : 1;
    while (v) {
        mag_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(BASE);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t pos = i + b.size();
        while (carry) {
            std::uint64_t cur = r[pos] + carry;
            r[pos] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++pos;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on base-2^32 limbs.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    check(!b.empty(), errc::invalid_args, "division by zero");
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    // normalize so the top divisor limb has its high bit set
    int shift = 0;
    for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    const size_t n = b.size(), m = a.size() - n;
    std::vector<std::uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (size_t i = a.size(); i-- > 0;) {
        u[i] = a[i] << shift;
        if (shift && i > 0) u[i] |= static_cast<std::uint32_t>(a[i - 1] >> (32 - shift));
    }
    if (shift) u[a.size()] = static_cast<std::uint32_t>(a.back() >> (32 - shift));
    for (size_t i = n; i-- > 0;) {
        v[i] = b[i] << shift;
        if (shift && i > 0) v[i] |= static_cast<std::uint32_t>(b[i - 1] >> (32 - shift));
    }

    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / v[n - 1];
        std::uint64_t rhat = num % v[n - 1];
        while (qhat >= BASE ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= BASE) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<std::int64_t>(BASE);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat is one too large: add the divisor back
            t += static_cast<std::int64_t>(BASE);
            --qhat;
            std::uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
            t &= 0xffffffffll;
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < u.size()) r[i] |= u[i + 1] << (32 - shift);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return {q, r};
}

BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).first; }
BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).second; }

BigInt BigInt::div_exact(const BigInt& b) const {
    auto [q, r] = divmod(*this, b);
    check(r.is_zero(), errc::internal_inconsistency, "inexact division");
    return q;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned long long exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

bool BigInt::fits_u64() const {
    return sign_ >= 0 && mag_.size() <= 2;
}

std::uint64_t BigInt::to_u64() const {
    check(fits_u64(), errc::invalid_args, "value exceeds 64 bits");
    std::uint64_t v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return v;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> cur = mag_;
    std::string digits;
    const std::vector<std::uint32_t> ten9 = {1000000000u};
    while (!cur.empty()) {
        std::vector<std::uint32_t> q, r;
        divmod_mag(cur, ten9, q, r);
        std::uint32_t chunk = r.empty() ? 0 : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        cur = q;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& dec) {
    check(!dec.empty(), errc::parse_error, "empty integer literal");
    size_t i = 0;
    int sign = 1;
    if (dec[0] == '-') {
        sign = -1;
        i = 1;
    } else if (dec[0] == '+') {
        i = 1;
    }
    check(i < dec.size(), errc::parse_error, "bad integer literal: " + dec);
    BigInt r;
    for (; i < dec.size(); ++i) {
        check(dec[i] >= '0' && dec[i] <= '9', errc::parse_error, "bad integer literal: " + dec);
        r = r * BigInt(10) + BigInt(dec[i] - '0');
    }
    if (sign < 0) r = -r;
    return r;
}

BigInt bpow(unsigned long long base, unsigned long long exp) {
    return BigInt::pow(BigInt(base), exp);
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    check(!den_.is_zero(), errc::invalid_args, "rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    check(!b.num_.is_zero(), errc::invalid_args, "rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}
Rational Rational::operator-() const { return Rational(-num_, den_); }

bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible: return "Reducible";
        case errc::not_primitive_modulus: return "NotPrimitiveModulus";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::not_contained: return "NotContained";
        case errc::not_spanning: return "NotSpanning";
        case errc::degenerate: return "Degenerate";
        case errc::not_scattered: return "NotScattered";
        case errc::no_spanning_subspace: return "NoSpanningSubspace";
        case errc::not_linear_over_extension: return "NotLinearOverExtension";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::not_minimal_input: return "NotMinimalInput";
        case errc::invalid_args: return "InvalidArgs";
        case errc::parse_error: return "ParseError";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::internal_inconsistency: return "InternalInconsistency";
    }
    return "UnknownError";
}

} // namespace rankmet
