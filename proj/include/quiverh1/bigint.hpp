#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qh1 {

/// Arbitrary-precision signed integer (sign + base-2^32 magnitude).
/// Only the operations needed by exact Gaussian elimination are provided.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt operator-() const;

    // Truncated division: q = a/b rounded toward zero, r = a - q*b.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b); // nonnegative

    // -1 / 0 / +1 as a < b, a == b, a > b.
    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    std::string to_string() const;

    // Value as long long; valid only when fits_ll().
    bool fits_ll() const;
    long long to_ll() const;

  private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian limbs, no leading zeros, empty iff zero

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    static uint32_t divmod_small(std::vector<uint32_t>& a, uint32_t d); // in-place, returns remainder
};

/// Exact rational number. Invariant: denominator > 0, gcd(num, den) = 1.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(BigInt n, BigInt d);
    static Rat from_string(std::string_view s); // "n" or "n/d"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b); // b != 0
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b);
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    std::string to_string() const; // "n" when den == 1, else "n/d"

  private:
    BigInt num_, den_;
    void normalize();
};

} // namespace qh1
