#ifndef RANKMET_BIGINT_HPP
#define RANKMET_BIGINT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rankmet {

// Arbitrary-precision signed integer, little-endian base-2^32 magnitude.
// Sized for exact combinatorics (Gaussian binomials, counting identities),
// not for cryptographic workloads.
class BigInt {
  public:
    BigInt() : sign_(0) {}
    BigInt(long long v);
    BigInt(unsigned long long v);
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}

    static BigInt from_string(const std::string& dec);
    static BigInt pow(const BigInt& base, unsigned long long exp);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    // Division that must be exact; throws internal_inconsistency otherwise.
    BigInt div_exact(const BigInt& b) const;

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b);

    bool fits_u64() const;
    std::uint64_t to_u64() const; // requires fits_u64() and nonnegative
    std::string to_string() const;

  private:
    int sign_;                       // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian, no leading zero limbs

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

// Exact rational with normalized representation: gcd(num, den) = 1, den > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == BigInt(1); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_positive() const { return num_.sign() > 0; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const; // "num/den", or "num" when integral

  private:
    BigInt num_, den_;
    void normalize();
};

// q^e as a BigInt, for prime powers and small exponents used throughout.
BigInt bpow(unsigned long long base, unsigned long long exp);

} // namespace rankmet

#endif
