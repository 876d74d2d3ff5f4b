#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lcmlat {

// Signed arbitrary-precision integer, sign + little-endian 32-bit limbs.
// Covers what the exact linear algebra and exponent arithmetic need:
// ring operations, exact division, comparisons, decimal I/O.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s); // decimal, optional leading '-'
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    bool fits_int64() const;
    long long to_int64() const; // requires fits_int64()

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division, |r| < |b|, sign(r) == sign(a) (or 0).
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    // Division known to be exact; checked, throws on nonzero remainder.
    BigInt div_exact(const BigInt& b) const;

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, long long b) { return a == BigInt(b); }
    friend std::strong_ordering operator<=>(const BigInt& a, long long b) {
        return a <=> BigInt(b);
    }

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian, no trailing zero limbs, empty iff zero

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divrem_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace lcmlat
